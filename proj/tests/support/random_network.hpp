#pragma once

// Seeded random-network generator for the property suites. Formulas are
// biased toward monotone wiring (few negations) so the all-fixed-point filter
// keeps a useful fraction of the draws.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "boolnet/formula.hpp"
#include "boolnet/network.hpp"

namespace testgen {

struct GeneratorOptions {
  int min_n = 3;
  int max_n = 7;
  double constant_prob = 0.08;
  double negate_prob = 0.25;
  int max_regulators = 3;
};

inline boolnet::Formula random_update(std::mt19937& rng, int n,
                                      const GeneratorOptions& opt) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  if (coin(rng) < opt.constant_prob)
    return boolnet::Formula::constant(coin(rng) < 0.5);

  std::vector<int> regulators(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) regulators[static_cast<std::size_t>(i)] = i;
  std::shuffle(regulators.begin(), regulators.end(), rng);
  int k = std::uniform_int_distribution<int>(1, std::min(opt.max_regulators, n))(rng);
  regulators.resize(static_cast<std::size_t>(k));

  std::vector<boolnet::Formula> literals;
  for (int v : regulators) {
    boolnet::Formula lit = boolnet::Formula::variable(v);
    if (coin(rng) < opt.negate_prob) lit = boolnet::Formula::negation(lit);
    literals.push_back(lit);
  }
  // Fold the literals with random connectives.
  boolnet::Formula acc = literals.front();
  for (std::size_t i = 1; i < literals.size(); ++i) {
    if (coin(rng) < 0.5)
      acc = boolnet::Formula::conjunction({acc, literals[i]});
    else
      acc = boolnet::Formula::disjunction({acc, literals[i]});
  }
  return acc;
}

inline boolnet::BooleanNetwork random_network(std::mt19937& rng,
                                              const GeneratorOptions& opt = {}) {
  int n = std::uniform_int_distribution<int>(opt.min_n, opt.max_n)(rng);
  std::vector<boolnet::NetworkNode> nodes;
  for (int i = 0; i < n; ++i)
    nodes.push_back(
        {"x" + std::to_string(i + 1), random_update(rng, n, opt)});
  return boolnet::BooleanNetwork(boolnet::NetworkSpec(std::move(nodes)));
}

}  // namespace testgen
