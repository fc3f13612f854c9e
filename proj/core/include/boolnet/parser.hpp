#pragma once

#include <string>
#include <string_view>

#include "boolnet/formula.hpp"
#include "boolnet/state.hpp"

namespace boolnet {

/// Parses the network DSL: one definition per line, `name = expr`, with
/// operators ! > & > |, parentheses, constants 0 and 1, and `#` comments.
/// Node indices follow declaration order. Forward references are allowed.
///
/// Throws ParseError on syntax errors, undeclared variables, duplicate
/// definitions, and empty input.
NetworkSpec parse_network(std::string_view text);

/// Parses a state literal such as "010": character i (left to right) is the
/// value of node i. Throws ParseError on wrong length or illegal characters.
State parse_state(std::string_view text, int n);

/// Canonical textual form; reparsing yields a structurally identical spec.
std::string render_network(const NetworkSpec& spec);

}  // namespace boolnet
