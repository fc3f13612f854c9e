#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "boolnet/formula.hpp"
#include "boolnet/state.hpp"

namespace boolnet {

/// Resource caps shared by every analysis. Explicit-state exploration walks
/// up to 2^n states and positive-cycle detection enumerates simple cycles,
/// so both need a configured ceiling; the guards live here so every
/// downstream module inherits them.
struct AnalysisLimits {
  /// Largest dimension explicit-state exploration will accept.
  int max_dimension = 24;
  /// Enumeration steps allowed while searching for a positive simple cycle.
  std::uint64_t cycle_budget = 1'000'000;
  /// Largest dimension the brute-force subset sweep will accept.
  int oracle_max_dimension = 12;
};

/// A permanent perturbation: each listed node's update formula is replaced by
/// the assigned constant. Keys are pairwise distinct node indices.
class Mutation {
public:
  Mutation() = default;
  explicit Mutation(std::map<int, bool> assignments)
      : assignments_(std::move(assignments)) {}

  /// The mutation that pins every node of I to its value in y.
  static Mutation forcing(const VertexSet& I, const State& y);

  const std::map<int, bool>& assignments() const { return assignments_; }
  bool empty() const { return assignments_.empty(); }

private:
  std::map<int, bool> assignments_;
};

/// A Boolean network f : {0,1}^n -> {0,1}^n realized by per-node formulas.
/// Construction precomputes one truth table per node over that node's
/// syntactic support, so evaluation during state-space exploration is a
/// table lookup instead of an AST walk.
class BooleanNetwork {
public:
  explicit BooleanNetwork(NetworkSpec spec);

  int dimension() const { return n_; }
  const NetworkSpec& spec() const { return spec_; }
  const std::string& name(int i) const { return spec_.node(i).name; }
  const Formula& update(int i) const { return spec_.node(i).update; }
  const std::vector<std::string>& names() const { return names_; }

  /// Syntactic support of node i's formula, as sorted indices.
  const std::vector<int>& support(int i) const {
    return tables_[static_cast<std::size_t>(i)].support;
  }

  bool evaluate_node(int i, const State& x) const;
  State evaluate(const State& x) const;

private:
  struct NodeTable {
    std::vector<int> support;   // sorted variable indices
    std::vector<bool> values;   // indexed by packed support assignment
  };

  NetworkSpec spec_;
  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<NodeTable> tables_;
};

/// Returns a copy of f where each mutated node's formula is the assigned
/// constant; all other formulas are unchanged.
BooleanNetwork apply_mutation(const BooleanNetwork& f, const Mutation& m);

}  // namespace boolnet
