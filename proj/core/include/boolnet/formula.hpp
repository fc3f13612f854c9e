#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boolnet/state.hpp"

namespace boolnet {

/// Boolean update formula over node variables. Conjunctions and disjunctions
/// are kept n-ary and flattened on construction, so structurally equal
/// formulas have a unique canonical rendering. No other simplification is
/// performed: the interaction-graph derivation works on the semantic function
/// and must not be fooled by syntax, so none is needed.
class Formula {
public:
  enum class Kind { constant, variable, negation, conjunction, disjunction };

  static Formula constant(bool value);
  static Formula variable(int index);
  static Formula negation(Formula child);
  /// Flattens nested conjunctions; a single child is returned as-is.
  static Formula conjunction(std::vector<Formula> children);
  static Formula disjunction(std::vector<Formula> children);

  Kind kind() const { return kind_; }
  bool value() const { return value_; }
  int var() const { return var_; }
  const std::vector<Formula>& children() const { return children_; }

  /// Standard Boolean semantics; pure. The caller guarantees that x is wide
  /// enough for every variable in the formula.
  bool evaluate(const State& x) const;

  /// Variables occurring syntactically in the formula.
  VertexSet support() const;

  bool structurally_equal(const Formula& other) const;

private:
  Formula() = default;

  Kind kind_ = Kind::constant;
  bool value_ = false;
  int var_ = -1;
  std::vector<Formula> children_;
};

/// Renders with the minimal parenthesization the grammar needs
/// (precedence ! > & > |).
std::string render_formula(const Formula& phi,
                           const std::vector<std::string>& names);

/// A named, ordered network specification: node i carries the i-th declared
/// update formula. Names are unique; every formula is closed over the
/// declared nodes.
struct NetworkNode {
  std::string name;
  Formula update;
};

class NetworkSpec {
public:
  NetworkSpec() = default;
  explicit NetworkSpec(std::vector<NetworkNode> nodes)
      : nodes_(std::move(nodes)) {}

  int size() const { return static_cast<int>(nodes_.size()); }
  const NetworkNode& node(int i) const {
    return nodes_[static_cast<std::size_t>(i)];
  }
  const std::vector<NetworkNode>& nodes() const { return nodes_; }

private:
  std::vector<NetworkNode> nodes_;
};

}  // namespace boolnet
