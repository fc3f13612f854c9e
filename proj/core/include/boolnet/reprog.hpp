#pragma once

#include <string>
#include <vector>

#include "boolnet/dynamics.hpp"
#include "boolnet/interaction.hpp"
#include "boolnet/network.hpp"
#include "boolnet/state.hpp"

namespace boolnet {

/// Existential: the target becomes reachable from the perturbed start.
/// Inevitable: every state reachable from the perturbed start can still reach
/// the target.
enum class ReprogrammingMode { existential, inevitable };

enum class SolutionMethod { scc_filter, vertex_recursive, oracle };

/// A family of SCCs selected from O, plus the union of their nodes.
struct SccCombination {
  std::vector<VertexSet> members;  // ordered by smallest vertex

  VertexSet nodes() const {
    VertexSet all;
    for (const VertexSet& m : members) all = all | m;
    return all;
  }

  friend bool operator==(const SccCombination& a, const SccCombination& b) {
    return a.members == b.members;
  }
};

/// Result of one reprogramming analysis between two fixed points.
struct ReprogrammingSolution {
  ReprogrammingMode mode = ReprogrammingMode::existential;
  SolutionMethod method = SolutionMethod::oracle;
  State from;
  State to;
  /// Vertex sets to force to the target's values, in canonical order
  /// (cardinality, then lexicographic indices). For SCC-level methods these
  /// are the flattened combinations.
  std::vector<VertexSet> node_sets;
  /// SCC structure behind node_sets; empty for the oracle and the
  /// vertex-recursive method.
  std::vector<SccCombination> combinations;
  /// Divergence flags: the inevitable-mode algorithms stop when no stray
  /// fixed point is reachable, which is weaker than the defining predicate
  /// when a mutation creates a reachable cyclic attractor. Any such case is
  /// reported here; see ir_vertex_recursive and ir_scc_filter.
  std::vector<std::string> warnings;
};

/// Whether forcing I to y's values makes y reachable from the forced x.
/// Reachability is evaluated in the mutated network, with every node of I
/// held constant, not merely flipped once: permanent perturbation is what
/// distinguishes reprogramming from a transient excursion.
///
/// Requires x and y to be fixed points of f and every attractor of f to be a
/// fixed point; throws GuardViolation / std::invalid_argument otherwise.
bool er_predicate(const BooleanNetwork& f, const State& x, const State& y,
                  const VertexSet& I, const AnalysisLimits& limits = {});

/// Whether, after forcing I, every state reachable from the forced x can
/// still reach y. Same preconditions as er_predicate.
bool ir_predicate(const BooleanNetwork& f, const State& x, const State& y,
                  const VertexSet& I, const AnalysisLimits& limits = {});

/// Pairwise-union product of two families of vertex sets, deduplicated. The
/// empty family acts as the identity {∅}.
std::vector<VertexSet> bar_product(const std::vector<VertexSet>& a,
                                   const std::vector<VertexSet>& b);

/// Inclusion-minimal members of a family.
std::vector<VertexSet> minimal_antichain(std::vector<VertexSet> family);

/// Members of minimum cardinality, for auditing the stricter reading of
/// "minimal".
std::vector<VertexSet> minimum_cardinality(const std::vector<VertexSet>& family);

/// Brute-force ground truth: all inclusion-minimal vertex sets satisfying the
/// mode's predicate, found by sweeping subsets in ascending cardinality and
/// pruning supersets of accepted sets. Caps at limits.oracle_max_dimension.
ReprogrammingSolution reprogramming_oracle(const BooleanNetwork& f,
                                           const State& x, const State& y,
                                           ReprogrammingMode mode,
                                           const AnalysisLimits& limits = {});

/// Existential-reachability filter over SCC slices. Walks the slices of O in
/// order; for every partial solution it collects the inclusion-minimal
/// sub-families of the slice whose forcing lets the dynamics reach a state
/// that agrees with y on the rest of the slice, then extends the partial
/// solutions with the pairwise-union product. Returns every minimal SCC
/// combination; node_sets carries the flattened unions.
ReprogrammingSolution er_scc_filter(const BooleanNetwork& f, const State& x,
                                    const State& y,
                                    const AnalysisLimits& limits = {});

/// Inevitable-reachability filter: repeatedly forces the order-least member
/// of O on which some reachable fixed point still disagrees with y, until y
/// is the only reachable fixed point. Returns the single selected
/// combination.
ReprogrammingSolution ir_scc_filter(const BooleanNetwork& f, const State& x,
                                    const State& y,
                                    const AnalysisLimits& limits = {});

/// Vertex-level inevitable reprogramming. Recursively picks each vertex u of
/// the order-least disagreeing positive SCC, pins u to y_u, and recurses on
/// the mutated network, whose interaction graph (and hence O and the order)
/// is recomputed at every level. Leaves are vertex sets under which y is the
/// only reachable fixed point; every leaf is then validated against
/// ir_predicate, and leaves invalidated by a mutation-created cyclic trap are
/// dropped and flagged in warnings. Sound but not claimed complete; results
/// are deduplicated, with the raw family preserved in node_sets and
/// minimal_antichain available for the reduced view.
ReprogrammingSolution ir_vertex_recursive(const BooleanNetwork& f,
                                          const State& x, const State& y,
                                          const AnalysisLimits& limits = {});

}  // namespace boolnet
