#include "boolnet/parser.hpp"

#include <cctype>
#include <map>
#include <utility>
#include <vector>

#include "boolnet/errors.hpp"

namespace boolnet {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Line {
  int number = 0;        // 1-based
  std::string_view text; // comment stripped
};

// Recursive-descent parser for a single right-hand side.
class ExprParser {
public:
  ExprParser(std::string_view text, int line, int column_offset,
             const std::map<std::string, int, std::less<>>& index_of)
      : text_(text), line_(line), offset_(column_offset), index_of_(index_of) {}

  Formula parse() {
    Formula e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

private:
  Formula expr() {
    std::vector<Formula> terms;
    terms.push_back(term());
    while (peek() == '|') {
      ++pos_;
      terms.push_back(term());
    }
    return Formula::disjunction(std::move(terms));
  }

  Formula term() {
    std::vector<Formula> factors;
    factors.push_back(factor());
    while (peek() == '&') {
      ++pos_;
      factors.push_back(factor());
    }
    return Formula::conjunction(std::move(factors));
  }

  Formula factor() {
    skip_ws();
    if (pos_ == text_.size()) fail("expected a factor");
    char c = text_[pos_];
    if (c == '!') {
      ++pos_;
      return Formula::negation(factor());
    }
    if (c == '(') {
      ++pos_;
      Formula e = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      return Formula::constant(c == '1');
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto it = index_of_.find(name);
      if (it == index_of_.end())
        fail_at(start, "undeclared variable '" + std::string(name) + "'");
      return Formula::variable(it->second);
    }
    fail(std::string("unexpected character '") + c + "'");
    return Formula::constant(false);  // unreachable
  }

  // Returns the next non-space character without consuming it.
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r'))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) {
    throw ParseError(line_, offset_ + static_cast<int>(pos) + 1, message);
  }

  std::string_view text_;
  int line_;
  int offset_;
  const std::map<std::string, int, std::less<>>& index_of_;
  std::size_t pos_ = 0;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (std::size_t hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    lines.push_back({number, raw});
    ++number;
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

bool blank(std::string_view s) {
  for (char c : s)
    if (c != ' ' && c != '\t' && c != '\r') return false;
  return true;
}

}  // namespace

NetworkSpec parse_network(std::string_view text) {
  struct Definition {
    std::string name;
    int line;
    int expr_column;        // 0-based offset of the right-hand side
    std::string_view expr;
  };

  std::vector<Definition> defs;
  std::map<std::string, int, std::less<>> index_of;

  for (const Line& line : split_lines(text)) {
    if (blank(line.text)) continue;
    std::size_t p = 0;
    while (p < line.text.size() &&
           (line.text[p] == ' ' || line.text[p] == '\t')) ++p;
    std::size_t name_start = p;
    if (p >= line.text.size() || !ident_start(line.text[p]))
      throw ParseError(line.number, static_cast<int>(p) + 1,
                       "expected a node name");
    while (p < line.text.size() && ident_char(line.text[p])) ++p;
    std::string name(line.text.substr(name_start, p - name_start));
    while (p < line.text.size() &&
           (line.text[p] == ' ' || line.text[p] == '\t')) ++p;
    if (p >= line.text.size() || line.text[p] != '=')
      throw ParseError(line.number, static_cast<int>(p) + 1, "expected '='");
    ++p;
    if (index_of.count(name))
      throw ParseError(line.number, static_cast<int>(name_start) + 1,
                       "duplicate definition of '" + name + "'");
    index_of.emplace(name, static_cast<int>(defs.size()));
    defs.push_back({std::move(name), line.number, static_cast<int>(p),
                    line.text.substr(p)});
  }

  if (defs.empty()) throw ParseError(1, 1, "empty network");
  if (defs.size() > static_cast<std::size_t>(kMaxWidth))
    throw ParseError(1, 1, "network exceeds " + std::to_string(kMaxWidth) +
                               " nodes");

  std::vector<NetworkNode> nodes;
  nodes.reserve(defs.size());
  for (const Definition& d : defs) {
    ExprParser parser(d.expr, d.line, d.expr_column, index_of);
    nodes.push_back({d.name, parser.parse()});
  }
  return NetworkSpec(std::move(nodes));
}

State parse_state(std::string_view text, int n) {
  if (static_cast<int>(text.size()) != n)
    throw ParseError(1, 1, "state literal has length " +
                               std::to_string(text.size()) + ", expected " +
                               std::to_string(n));
  std::uint32_t raw = 0;
  for (int i = 0; i < n; ++i) {
    char c = text[static_cast<std::size_t>(i)];
    if (c == '1')
      raw |= std::uint32_t{1} << i;
    else if (c != '0')
      throw ParseError(1, i + 1,
                       std::string("illegal character '") + c +
                           "' in state literal");
  }
  return State(raw, n);
}

std::string render_network(const NetworkSpec& spec) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(spec.size()));
  for (const NetworkNode& node : spec.nodes()) names.push_back(node.name);
  std::string out;
  for (const NetworkNode& node : spec.nodes()) {
    out += node.name;
    out += " = ";
    out += render_formula(node.update, names);
    out += '\n';
  }
  return out;
}

}  // namespace boolnet
