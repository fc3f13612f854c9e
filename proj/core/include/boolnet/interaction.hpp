#pragma once

#include <cstdint>
#include <vector>

#include "boolnet/network.hpp"
#include "boolnet/state.hpp"

namespace boolnet {

enum class Sign { positive, negative };

struct SignedEdge {
  int source = 0;
  int target = 0;
  Sign sign = Sign::positive;

  friend bool operator==(const SignedEdge& a, const SignedEdge& b) {
    return a.source == b.source && a.target == b.target && a.sign == b.sign;
  }
  friend bool operator<(const SignedEdge& a, const SignedEdge& b) {
    if (a.source != b.source) return a.source < b.source;
    if (a.target != b.target) return a.target < b.target;
    return a.sign < b.sign;
  }
};

/// Signed directed graph over node indices. Both a positive and a negative
/// edge may connect the same ordered pair (non-monotone dependence). The
/// vertex set is normally [n] but induced subgraphs restrict it.
class InteractionGraph {
public:
  InteractionGraph(int n, std::vector<SignedEdge> edges);
  InteractionGraph(int n, std::vector<SignedEdge> edges, VertexSet vertices);

  int dimension() const { return n_; }
  const VertexSet& vertices() const { return vertices_; }
  const std::vector<SignedEdge>& edges() const { return edges_; }

  const std::vector<SignedEdge>& out_edges(int u) const {
    return out_[static_cast<std::size_t>(u)];
  }

  /// Direct predecessors of u.
  VertexSet parents(int u) const;

  /// Vertices with a nonempty directed path to u; u itself is included
  /// exactly when it lies on a cycle.
  VertexSet ancestors(int u) const;

  /// Subgraph induced by `keep` (edges with both endpoints inside).
  InteractionGraph induced(const VertexSet& keep) const;

  /// Maximal strongly connected components of the (sign-blind) digraph,
  /// ordered by smallest member vertex. Singletons without a self-loop are
  /// SCCs too.
  std::vector<VertexSet> sccs() const;

private:
  int n_;
  VertexSet vertices_;
  std::vector<SignedEdge> edges_;
  std::vector<std::vector<SignedEdge>> out_;
};

/// The signed interaction graph G(f): an edge (u, v, s) is present exactly
/// when the discrete derivative of f_v with respect to u takes the value s at
/// some state. Evaluated by enumerating assignments over the syntactic
/// support of each f_v only.
InteractionGraph interaction_graph(const BooleanNetwork& f);

/// G|P_u, the subgraph induced by the ancestors of u.
InteractionGraph induced_ancestor_graph(const InteractionGraph& g, int u);

/// True when some simple directed cycle inside the subgraph induced by
/// `within` carries an even number of negative edges. Cycle enumeration is
/// exhaustive (a positive closed walk does not imply a positive simple
/// cycle); `budget` caps the enumeration effort and CapExceeded is thrown if
/// it runs out before an answer is certain.
bool has_positive_cycle(const InteractionGraph& g, const VertexSet& within,
                        std::uint64_t budget = AnalysisLimits{}.cycle_budget);

/// The family O of SCCs containing at least one positive cycle, a
/// deterministic linear extension of the reachability order over it, and the
/// slice partition.
struct SccOrder {
  /// All SCCs of the graph, ordered by smallest member vertex.
  std::vector<VertexSet> components;
  /// O_1..O_k: members of O in linear-extension order. Ties between
  /// order-incomparable members break toward the smaller minimum vertex.
  std::vector<VertexSet> positive;
  /// precedes[i][j] is true when O_{i+1} comes strictly before O_{j+1},
  /// i.e. some vertex of O_{j+1} is reachable from O_{i+1}.
  std::vector<std::vector<bool>> precedes;
  /// slices[K] lists indices into `positive`; slice 0 holds the order-minimal
  /// members, slice K the members minimal once earlier slices are removed.
  /// The partition does not depend on the chosen linear extension.
  std::vector<std::vector<int>> slices;

  int k() const { return static_cast<int>(positive.size()); }
  VertexSet positive_nodes() const;
  VertexSet slice_nodes(int K) const;
};

SccOrder scc_order(const InteractionGraph& g,
                   std::uint64_t budget = AnalysisLimits{}.cycle_budget);
SccOrder scc_order(const BooleanNetwork& f,
                   std::uint64_t budget = AnalysisLimits{}.cycle_budget);

}  // namespace boolnet
