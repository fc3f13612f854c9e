#include "boolnet/formula.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace boolnet {

Formula Formula::constant(bool value) {
  Formula f;
  f.kind_ = Kind::constant;
  f.value_ = value;
  return f;
}

Formula Formula::variable(int index) {
  assert(index >= 0 && index < kMaxWidth);
  Formula f;
  f.kind_ = Kind::variable;
  f.var_ = index;
  return f;
}

Formula Formula::negation(Formula child) {
  Formula f;
  f.kind_ = Kind::negation;
  f.children_.push_back(std::move(child));
  return f;
}

namespace {

// Children built through these factories are already canonical, so one level
// of flattening is enough.
std::vector<Formula> flatten(Formula::Kind kind, std::vector<Formula> children) {
  std::vector<Formula> flat;
  for (Formula& c : children) {
    if (c.kind() == kind) {
      for (const Formula& g : c.children()) flat.push_back(g);
    } else {
      flat.push_back(std::move(c));
    }
  }
  return flat;
}

}  // namespace

Formula Formula::conjunction(std::vector<Formula> children) {
  if (children.empty())
    throw std::invalid_argument("conjunction needs at least one child");
  std::vector<Formula> flat = flatten(Kind::conjunction, std::move(children));
  if (flat.size() == 1) return flat.front();
  Formula f;
  f.kind_ = Kind::conjunction;
  f.children_ = std::move(flat);
  return f;
}

Formula Formula::disjunction(std::vector<Formula> children) {
  if (children.empty())
    throw std::invalid_argument("disjunction needs at least one child");
  std::vector<Formula> flat = flatten(Kind::disjunction, std::move(children));
  if (flat.size() == 1) return flat.front();
  Formula f;
  f.kind_ = Kind::disjunction;
  f.children_ = std::move(flat);
  return f;
}

bool Formula::evaluate(const State& x) const {
  switch (kind_) {
    case Kind::constant:
      return value_;
    case Kind::variable:
      assert(var_ < x.width());
      return x.bit(var_);
    case Kind::negation:
      return !children_.front().evaluate(x);
    case Kind::conjunction:
      for (const Formula& c : children_)
        if (!c.evaluate(x)) return false;
      return true;
    case Kind::disjunction:
      for (const Formula& c : children_)
        if (c.evaluate(x)) return true;
      return false;
  }
  return false;  // unreachable
}

VertexSet Formula::support() const {
  switch (kind_) {
    case Kind::constant:
      return {};
    case Kind::variable:
      return VertexSet{}.with(var_);
    default: {
      VertexSet s;
      for (const Formula& c : children_) s = s | c.support();
      return s;
    }
  }
}

bool Formula::structurally_equal(const Formula& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::constant:
      return value_ == other.value_;
    case Kind::variable:
      return var_ == other.var_;
    default:
      if (children_.size() != other.children_.size()) return false;
      for (std::size_t i = 0; i < children_.size(); ++i)
        if (!children_[i].structurally_equal(other.children_[i])) return false;
      return true;
  }
}

namespace {

// Grammar levels: expr (|) > term (&) > factor (!, atoms, parens).
void render(const Formula& phi, const std::vector<std::string>& names,
            std::string& out) {
  switch (phi.kind()) {
    case Formula::Kind::constant:
      out += phi.value() ? '1' : '0';
      return;
    case Formula::Kind::variable:
      out += names[static_cast<std::size_t>(phi.var())];
      return;
    case Formula::Kind::negation: {
      out += '!';
      const Formula& c = phi.children().front();
      bool parens = c.kind() == Formula::Kind::conjunction ||
                    c.kind() == Formula::Kind::disjunction;
      if (parens) out += '(';
      render(c, names, out);
      if (parens) out += ')';
      return;
    }
    case Formula::Kind::conjunction: {
      bool first = true;
      for (const Formula& c : phi.children()) {
        if (!first) out += " & ";
        first = false;
        bool parens = c.kind() == Formula::Kind::disjunction;
        if (parens) out += '(';
        render(c, names, out);
        if (parens) out += ')';
      }
      return;
    }
    case Formula::Kind::disjunction: {
      bool first = true;
      for (const Formula& c : phi.children()) {
        if (!first) out += " | ";
        first = false;
        render(c, names, out);
      }
      return;
    }
  }
}

}  // namespace

std::string render_formula(const Formula& phi,
                           const std::vector<std::string>& names) {
  std::string out;
  render(phi, names, out);
  return out;
}

}  // namespace boolnet
