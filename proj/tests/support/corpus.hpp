#pragma once

// Shared test corpus: the small networks every suite exercises, plus helpers
// for building states and 1-based vertex sets the way the model files number
// their nodes.

#include <initializer_list>
#include <string_view>

#include "boolnet/network.hpp"
#include "boolnet/parser.hpp"

namespace corpus {

// Three nodes; attractors {010,110} (cyclic), {101}, {111}.
inline constexpr std::string_view kCyclic3 =
    "x1 = x3 | (!x1 & x2)\n"
    "x2 = !x1 | x2\n"
    "x3 = x3 | (x1 & !x2)\n";

// Self-activating root driving a short cascade; fixed points 0000, 0001,
// 1100, 1101.
inline constexpr std::string_view kCascade4 =
    "x1 = x1\n"
    "x2 = x1\n"
    "x3 = x1 & !x2\n"
    "x4 = x3 | x4\n";

// cascade4 plus a fifth self-sustaining node fed by x2.
inline constexpr std::string_view kCascade5 =
    "x1 = x1\n"
    "x2 = x1\n"
    "x3 = x1 & !x2\n"
    "x4 = x3 | x4\n"
    "x5 = x2 | x5\n";

// Toggle switch (x1, x2) gating a chain whose tail needs its own push.
inline constexpr std::string_view kToggle5 =
    "x1 = !x2\n"
    "x2 = !x1\n"
    "x3 = x1 | x2\n"
    "x4 = x2 & !x3\n"
    "x5 = x4 | x5\n";

// Mutually inhibiting triad feeding a self-sustaining tail.
inline constexpr std::string_view kTriad5 =
    "x1 = !x3 & !x2\n"
    "x2 = !x1\n"
    "x3 = !x1\n"
    "x4 = x2 & !x1 & !x3\n"
    "x5 = x4 | x5\n";

inline boolnet::BooleanNetwork load(std::string_view text) {
  return boolnet::BooleanNetwork(boolnet::parse_network(text));
}

inline boolnet::State st(std::string_view text) {
  return boolnet::parse_state(text, static_cast<int>(text.size()));
}

// Vertex set from 1-based node numbers, as the model files label them.
inline boolnet::VertexSet nodes1(std::initializer_list<int> numbered) {
  boolnet::VertexSet s;
  for (int i : numbered) s = s.with(i - 1);
  return s;
}

}  // namespace corpus
