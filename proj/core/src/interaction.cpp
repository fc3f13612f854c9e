#include "boolnet/interaction.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "boolnet/errors.hpp"

namespace boolnet {

InteractionGraph::InteractionGraph(int n, std::vector<SignedEdge> edges)
    : InteractionGraph(n, std::move(edges), VertexSet::full(n)) {}

InteractionGraph::InteractionGraph(int n, std::vector<SignedEdge> edges,
                                   VertexSet vertices)
    : n_(n), vertices_(vertices), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  out_.resize(static_cast<std::size_t>(n_));
  for (const SignedEdge& e : edges_) {
    if (!vertices_.contains(e.source) || !vertices_.contains(e.target))
      throw std::out_of_range("interaction graph edge outside vertex set");
    out_[static_cast<std::size_t>(e.source)].push_back(e);
  }
}

VertexSet InteractionGraph::parents(int u) const {
  VertexSet p;
  for (const SignedEdge& e : edges_)
    if (e.target == u) p = p.with(e.source);
  return p;
}

VertexSet InteractionGraph::ancestors(int u) const {
  // Backward closure from u over direct predecessors.
  VertexSet seen;
  std::vector<int> stack = parents(u).indices();
  for (int v : stack) seen = seen.with(v);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : parents(v).indices()) {
      if (!seen.contains(w)) {
        seen = seen.with(w);
        stack.push_back(w);
      }
    }
  }
  return seen;
}

InteractionGraph InteractionGraph::induced(const VertexSet& keep) const {
  VertexSet inside = keep & vertices_;
  std::vector<SignedEdge> kept;
  for (const SignedEdge& e : edges_)
    if (inside.contains(e.source) && inside.contains(e.target))
      kept.push_back(e);
  return InteractionGraph(n_, std::move(kept), inside);
}

std::vector<VertexSet> InteractionGraph::sccs() const {
  // Iterative Tarjan restricted to the active vertex set.
  const int n = n_;
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<int> lowlink(static_cast<std::size_t>(n), 0);
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  std::vector<int> stack;
  std::vector<VertexSet> components;
  int next_index = 0;

  struct Frame {
    int v;
    std::size_t edge;
  };

  for (int root : vertices_.indices()) {
    if (index[static_cast<std::size_t>(root)] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    index[static_cast<std::size_t>(root)] = lowlink[static_cast<std::size_t>(root)] = next_index++;
    stack.push_back(root);
    on_stack[static_cast<std::size_t>(root)] = true;

    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& out = out_[static_cast<std::size_t>(f.v)];
      if (f.edge < out.size()) {
        int w = out[f.edge++].target;
        if (index[static_cast<std::size_t>(w)] == -1) {
          index[static_cast<std::size_t>(w)] = lowlink[static_cast<std::size_t>(w)] = next_index++;
          stack.push_back(w);
          on_stack[static_cast<std::size_t>(w)] = true;
          frames.push_back({w, 0});
        } else if (on_stack[static_cast<std::size_t>(w)]) {
          lowlink[static_cast<std::size_t>(f.v)] =
              std::min(lowlink[static_cast<std::size_t>(f.v)], index[static_cast<std::size_t>(w)]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (!frames.empty()) {
          int parent = frames.back().v;
          lowlink[static_cast<std::size_t>(parent)] =
              std::min(lowlink[static_cast<std::size_t>(parent)], lowlink[static_cast<std::size_t>(v)]);
        }
        if (lowlink[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
          VertexSet comp;
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[static_cast<std::size_t>(w)] = false;
            comp = comp.with(w);
          } while (w != v);
          components.push_back(comp);
        }
      }
    }
  }

  std::sort(components.begin(), components.end(),
            [](const VertexSet& a, const VertexSet& b) {
              return a.indices().front() < b.indices().front();
            });
  return components;
}

InteractionGraph interaction_graph(const BooleanNetwork& f) {
  std::vector<SignedEdge> edges;
  for (int v = 0; v < f.dimension(); ++v) {
    const std::vector<int>& support = f.support(v);
    const std::size_t k = support.size();
    for (std::size_t j = 0; j < k; ++j) {
      bool saw_positive = false;
      bool saw_negative = false;
      // Walk every assignment of the other support variables; nodes outside
      // the support cannot change f_v.
      for (std::uint32_t m = 0; m < (std::uint32_t{1} << k); ++m) {
        if ((m >> j) & 1u) continue;
        std::uint32_t raw0 = 0;
        for (std::size_t l = 0; l < k; ++l)
          if ((m >> l) & 1u) raw0 |= std::uint32_t{1} << support[l];
        std::uint32_t raw1 = raw0 | (std::uint32_t{1} << support[j]);
        bool lo = f.evaluate_node(v, State(raw0, f.dimension()));
        bool hi = f.evaluate_node(v, State(raw1, f.dimension()));
        if (hi && !lo) saw_positive = true;
        if (!hi && lo) saw_negative = true;
        if (saw_positive && saw_negative) break;
      }
      if (saw_positive)
        edges.push_back({support[j], v, Sign::positive});
      if (saw_negative)
        edges.push_back({support[j], v, Sign::negative});
    }
  }
  return InteractionGraph(f.dimension(), std::move(edges));
}

InteractionGraph induced_ancestor_graph(const InteractionGraph& g, int u) {
  return g.induced(g.ancestors(u));
}

namespace {

// Depth-first enumeration of vertex-simple cycles through `start`, restricted
// to vertices >= start inside one SCC (so each cycle is visited exactly once,
// from its smallest vertex). Tracks the parity of negative edges along the
// current path; returns true as soon as a cycle with even parity closes.
// Every edge traversal consumes budget.
class CycleSearch {
public:
  explicit CycleSearch(std::uint64_t budget) : remaining_(budget) {}

  bool positive_cycle_in(const InteractionGraph& g, const VertexSet& allowed) {
    for (int start : allowed.indices()) {
      VertexSet eligible;
      for (int v : allowed.indices())
        if (v >= start) eligible = eligible.with(v);
      on_path_ = VertexSet{}.with(start);
      if (dfs(g, start, start, 0, eligible)) return true;
    }
    return false;
  }

private:
  bool dfs(const InteractionGraph& g, int v, int start, int negatives,
           const VertexSet& eligible) {
    for (const SignedEdge& e : g.out_edges(v)) {
      if (!eligible.contains(e.target)) continue;
      if (remaining_ == 0)
        throw CapExceeded("cycle enumeration budget exhausted");
      --remaining_;
      int parity = negatives + (e.sign == Sign::negative ? 1 : 0);
      if (e.target == start) {
        if (parity % 2 == 0) return true;
        continue;
      }
      if (on_path_.contains(e.target)) continue;
      on_path_ = on_path_.with(e.target);
      bool found = dfs(g, e.target, start, parity, eligible);
      on_path_ = on_path_.without(e.target);
      if (found) return true;
    }
    return false;
  }

  std::uint64_t remaining_;
  VertexSet on_path_;
};

// Reachability between components of the condensation, including through
// components outside any candidate family.
std::vector<std::vector<bool>> component_reachability(
    const InteractionGraph& g, const std::vector<VertexSet>& components) {
  const int c = static_cast<int>(components.size());
  std::vector<int> comp_of(static_cast<std::size_t>(g.dimension()), -1);
  for (int i = 0; i < c; ++i)
    for (int v : components[static_cast<std::size_t>(i)].indices())
      comp_of[static_cast<std::size_t>(v)] = i;

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(c));
  for (const SignedEdge& e : g.edges()) {
    int a = comp_of[static_cast<std::size_t>(e.source)];
    int b = comp_of[static_cast<std::size_t>(e.target)];
    if (a != b && a >= 0 && b >= 0) adj[static_cast<std::size_t>(a)].push_back(b);
  }

  std::vector<std::vector<bool>> reach(
      static_cast<std::size_t>(c), std::vector<bool>(static_cast<std::size_t>(c), false));
  for (int s = 0; s < c; ++s) {
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (!reach[static_cast<std::size_t>(s)][static_cast<std::size_t>(w)]) {
          reach[static_cast<std::size_t>(s)][static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return reach;
}

}  // namespace

bool has_positive_cycle(const InteractionGraph& g, const VertexSet& within,
                        std::uint64_t budget) {
  InteractionGraph sub = g.induced(within);
  // Cycles live inside strongly connected components; enumerate per SCC,
  // sharing one budget across the whole call.
  CycleSearch search(budget);
  for (const VertexSet& comp : sub.sccs())
    if (search.positive_cycle_in(sub, comp)) return true;
  return false;
}

VertexSet SccOrder::positive_nodes() const {
  VertexSet all;
  for (const VertexSet& scc : positive) all = all | scc;
  return all;
}

VertexSet SccOrder::slice_nodes(int K) const {
  VertexSet nodes;
  for (int i : slices[static_cast<std::size_t>(K)])
    nodes = nodes | positive[static_cast<std::size_t>(i)];
  return nodes;
}

SccOrder scc_order(const InteractionGraph& g, std::uint64_t budget) {
  SccOrder order;
  order.components = g.sccs();
  const int c = static_cast<int>(order.components.size());

  std::vector<int> candidates;  // indices into components
  for (int i = 0; i < c; ++i)
    if (has_positive_cycle(g, order.components[static_cast<std::size_t>(i)], budget))
      candidates.push_back(i);

  std::vector<std::vector<bool>> reach = component_reachability(g, order.components);

  // Deterministic linear extension: repeatedly take the candidate that no
  // remaining candidate strictly precedes, smallest minimum vertex first.
  // components[] is already sorted by minimum vertex, so scan order is the
  // tie-break.
  std::vector<int> chosen;  // component indices in O order
  std::vector<bool> taken(static_cast<std::size_t>(c), false);
  const int k = static_cast<int>(candidates.size());
  for (int round = 0; round < k; ++round) {
    for (int i : candidates) {
      if (taken[static_cast<std::size_t>(i)]) continue;
      bool minimal = true;
      for (int j : candidates) {
        if (j == i || taken[static_cast<std::size_t>(j)]) continue;
        if (reach[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        taken[static_cast<std::size_t>(i)] = true;
        chosen.push_back(i);
        break;
      }
    }
  }

  for (int i : chosen)
    order.positive.push_back(order.components[static_cast<std::size_t>(i)]);

  order.precedes.assign(static_cast<std::size_t>(k),
                        std::vector<bool>(static_cast<std::size_t>(k), false));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b)
        order.precedes[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            reach[static_cast<std::size_t>(chosen[static_cast<std::size_t>(a)])]
                 [static_cast<std::size_t>(chosen[static_cast<std::size_t>(b)])];

  // Slices: successive layers of order-minimal members.
  std::vector<bool> placed(static_cast<std::size_t>(k), false);
  int remaining = k;
  while (remaining > 0) {
    std::vector<int> slice;
    for (int i = 0; i < k; ++i) {
      if (placed[static_cast<std::size_t>(i)]) continue;
      bool minimal = true;
      for (int j = 0; j < k; ++j) {
        if (j == i || placed[static_cast<std::size_t>(j)]) continue;
        if (order.precedes[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
          minimal = false;
          break;
        }
      }
      if (minimal) slice.push_back(i);
    }
    for (int i : slice) placed[static_cast<std::size_t>(i)] = true;
    remaining -= static_cast<int>(slice.size());
    order.slices.push_back(std::move(slice));
  }
  return order;
}

SccOrder scc_order(const BooleanNetwork& f, std::uint64_t budget) {
  return scc_order(interaction_graph(f), budget);
}

}  // namespace boolnet
