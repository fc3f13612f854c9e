#pragma once

// Independent oracles for the dynamics: quadratic-time attractor and
// reachability computations that share no code path with the library's BFS
// and Tarjan implementations. Only usable at small n.

#include <algorithm>
#include <set>
#include <vector>

#include "boolnet/network.hpp"
#include "boolnet/state.hpp"

namespace naive {

inline std::set<std::uint32_t> closure(const boolnet::BooleanNetwork& f,
                                       std::uint32_t start) {
  std::set<std::uint32_t> seen{start};
  std::vector<std::uint32_t> todo{start};
  while (!todo.empty()) {
    boolnet::State s(todo.back(), f.dimension());
    todo.pop_back();
    for (int u = 0; u < f.dimension(); ++u) {
      if (f.evaluate_node(u, s) != s.bit(u)) {
        std::uint32_t t = s.flipped(u).raw();
        if (seen.insert(t).second) todo.push_back(t);
      }
    }
  }
  return seen;
}

// A state s is in an attractor iff it can be reached back from everything it
// reaches; the attractor is then exactly the forward closure of s.
inline std::vector<std::vector<boolnet::State>> attractors(
    const boolnet::BooleanNetwork& f) {
  const std::uint32_t total = std::uint32_t{1} << f.dimension();
  std::set<std::set<std::uint32_t>> classes;
  for (std::uint32_t raw = 0; raw < total; ++raw) {
    std::set<std::uint32_t> forward = closure(f, raw);
    bool terminal = true;
    for (std::uint32_t t : forward) {
      if (!closure(f, t).count(raw)) {
        terminal = false;
        break;
      }
    }
    if (terminal) classes.insert(forward);
  }
  std::vector<std::vector<boolnet::State>> out;
  for (const auto& cls : classes) {
    std::vector<boolnet::State> states;
    for (std::uint32_t raw : cls) states.emplace_back(raw, f.dimension());
    std::sort(states.begin(), states.end());
    out.push_back(std::move(states));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

// Reachability over an explicit edge list, for checking the library against
// transition relations frozen from drawings.
inline std::set<std::string> closure_over_edges(
    const std::vector<std::pair<std::string, std::string>>& edges,
    const std::string& start) {
  std::set<std::string> seen{start};
  std::vector<std::string> todo{start};
  while (!todo.empty()) {
    std::string s = todo.back();
    todo.pop_back();
    for (const auto& [from, to] : edges) {
      if (from == s && seen.insert(to).second) todo.push_back(to);
    }
  }
  return seen;
}

}  // namespace naive
