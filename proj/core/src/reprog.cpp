#include "boolnet/reprog.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "boolnet/errors.hpp"

namespace boolnet {

namespace {

bool is_fixed_point(const BooleanNetwork& f, const State& x) {
  for (int u = 0; u < f.dimension(); ++u)
    if (f.evaluate_node(u, x) != x.bit(u)) return false;
  return true;
}

void require_preconditions(const BooleanNetwork& f, const State& x,
                           const State& y, const AnalysisLimits& limits) {
  if (x.width() != f.dimension() || y.width() != f.dimension())
    throw std::invalid_argument("state width does not match network dimension");
  if (!is_fixed_point(f, x))
    throw std::invalid_argument("source state " + x.to_string() +
                                " is not a fixed point");
  if (!is_fixed_point(f, y))
    throw std::invalid_argument("target state " + y.to_string() +
                                " is not a fixed point");
  if (auto witness = find_cyclic_attractor(f, limits)) {
    std::string states;
    for (const State& s : witness->states) {
      if (!states.empty()) states += ", ";
      states += s.to_string();
    }
    throw GuardViolation("cyclic attractor present: {" + states + "}");
  }
}

// The defining predicates without the precondition checks; reachability runs
// in the mutated network.
bool er_holds(const BooleanNetwork& f, const State& x, const State& y,
              const VertexSet& I, const AnalysisLimits& limits) {
  BooleanNetwork g = apply_mutation(f, Mutation::forcing(I, y));
  return reaches(g, override_state(x, I, y), y, limits);
}

bool ir_holds(const BooleanNetwork& f, const State& x, const State& y,
              const VertexSet& I, const AnalysisLimits& limits) {
  BooleanNetwork g = apply_mutation(f, Mutation::forcing(I, y));
  StateSet forward = reachable(g, override_state(x, I, y), limits);
  StateSet backward = backward_reachable(g, y, limits);
  return forward.subset_of(backward);
}

bool family_less(const VertexSet& a, const VertexSet& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return a.indices() < b.indices();
}

std::vector<VertexSet> canonical_family(std::vector<VertexSet> family) {
  std::sort(family.begin(), family.end(), family_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

// True when some state reachable from `start` in g agrees with `goal` on
// `window`; exits as soon as one is found. Callers have already passed the
// dimension guard.
bool reaches_agreement(const BooleanNetwork& g, const State& start,
                       const VertexSet& window, const State& goal) {
  const std::uint32_t want = goal.raw() & window.mask();
  if ((start.raw() & window.mask()) == want) return true;
  StateSet seen(g.dimension());
  seen.insert(start);
  std::vector<std::uint32_t> frontier{start.raw()};
  while (!frontier.empty()) {
    State s(frontier.back(), g.dimension());
    frontier.pop_back();
    for (int u = 0; u < g.dimension(); ++u) {
      if (g.evaluate_node(u, s) != s.bit(u)) {
        State t = s.flipped(u);
        if ((t.raw() & window.mask()) == want) return true;
        if (seen.insert(t)) frontier.push_back(t.raw());
      }
    }
  }
  return false;
}

// Masks over [0, 2^m) grouped by ascending popcount, ascending within a
// group.
std::vector<std::uint32_t> masks_by_cardinality(int m) {
  std::vector<std::vector<std::uint32_t>> buckets(static_cast<std::size_t>(m) + 1);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask)
    buckets[static_cast<std::size_t>(__builtin_popcount(mask))].push_back(mask);
  std::vector<std::uint32_t> out;
  for (const auto& bucket : buckets)
    out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

VertexSet combination_nodes(const SccOrder& order, std::uint32_t scc_mask) {
  VertexSet nodes;
  for (int i = 0; i < order.k(); ++i)
    if ((scc_mask >> i) & 1u)
      nodes = nodes | order.positive[static_cast<std::size_t>(i)];
  return nodes;
}

std::string show_1based(const VertexSet& s) {
  std::string out;
  for (int i : s.indices()) {
    if (!out.empty()) out += ",";
    out += std::to_string(i + 1);
  }
  return "{" + out + "}";
}

SccCombination make_combination(const SccOrder& order, std::uint32_t scc_mask) {
  SccCombination combo;
  for (int i = 0; i < order.k(); ++i)
    if ((scc_mask >> i) & 1u)
      combo.members.push_back(order.positive[static_cast<std::size_t>(i)]);
  std::sort(combo.members.begin(), combo.members.end(),
            [](const VertexSet& a, const VertexSet& b) {
              return a.indices().front() < b.indices().front();
            });
  return combo;
}

}  // namespace

bool er_predicate(const BooleanNetwork& f, const State& x, const State& y,
                  const VertexSet& I, const AnalysisLimits& limits) {
  require_preconditions(f, x, y, limits);
  return er_holds(f, x, y, I, limits);
}

bool ir_predicate(const BooleanNetwork& f, const State& x, const State& y,
                  const VertexSet& I, const AnalysisLimits& limits) {
  require_preconditions(f, x, y, limits);
  return ir_holds(f, x, y, I, limits);
}

std::vector<VertexSet> bar_product(const std::vector<VertexSet>& a,
                                   const std::vector<VertexSet>& b) {
  const std::vector<VertexSet> identity{VertexSet{}};
  const std::vector<VertexSet>& left = a.empty() ? identity : a;
  const std::vector<VertexSet>& right = b.empty() ? identity : b;
  std::vector<VertexSet> out;
  out.reserve(left.size() * right.size());
  for (const VertexSet& i : left)
    for (const VertexSet& j : right) out.push_back(i | j);
  return canonical_family(std::move(out));
}

std::vector<VertexSet> minimal_antichain(std::vector<VertexSet> family) {
  family = canonical_family(std::move(family));
  std::vector<VertexSet> out;
  for (const VertexSet& candidate : family) {
    bool dominated = false;
    for (const VertexSet& kept : out) {
      if (kept.subset_of(candidate)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(candidate);
  }
  return out;
}

std::vector<VertexSet> minimum_cardinality(
    const std::vector<VertexSet>& family) {
  if (family.empty()) return {};
  int best = kMaxWidth + 1;
  for (const VertexSet& s : family) best = std::min(best, s.count());
  std::vector<VertexSet> out;
  for (const VertexSet& s : family)
    if (s.count() == best) out.push_back(s);
  return canonical_family(std::move(out));
}

ReprogrammingSolution reprogramming_oracle(const BooleanNetwork& f,
                                           const State& x, const State& y,
                                           ReprogrammingMode mode,
                                           const AnalysisLimits& limits) {
  require_preconditions(f, x, y, limits);
  if (f.dimension() > limits.oracle_max_dimension)
    throw CapExceeded("dimension " + std::to_string(f.dimension()) +
                      " exceeds the oracle sweep limit of " +
                      std::to_string(limits.oracle_max_dimension));

  std::vector<VertexSet> accepted;
  for (std::uint32_t mask : masks_by_cardinality(f.dimension())) {
    VertexSet candidate(mask);
    bool pruned = false;
    for (const VertexSet& a : accepted) {
      if (a.subset_of(candidate)) {
        pruned = true;
        break;
      }
    }
    if (pruned) continue;
    bool ok = mode == ReprogrammingMode::existential
                  ? er_holds(f, x, y, candidate, limits)
                  : ir_holds(f, x, y, candidate, limits);
    if (ok) accepted.push_back(candidate);
  }

  ReprogrammingSolution solution;
  solution.mode = mode;
  solution.method = SolutionMethod::oracle;
  solution.from = x;
  solution.to = y;
  solution.node_sets = canonical_family(std::move(accepted));
  return solution;
}

ReprogrammingSolution er_scc_filter(const BooleanNetwork& f, const State& x,
                                    const State& y,
                                    const AnalysisLimits& limits) {
  require_preconditions(f, x, y, limits);
  SccOrder order = scc_order(f, limits.cycle_budget);

  // Partial solutions are masks over the members of O. Each slice extends
  // every branch independently with the branch's own minimal sub-families,
  // then the families are merged (the pairwise-union product, branch-wise).
  std::vector<std::uint32_t> branches{0};
  for (const std::vector<int>& slice : order.slices) {
    const int m = static_cast<int>(slice.size());
    std::vector<std::uint32_t> extended;
    for (std::uint32_t branch : branches) {
      std::vector<std::uint32_t> accepted;  // sub-family masks over O indices
      for (std::uint32_t local : masks_by_cardinality(m)) {
        std::uint32_t sub = 0;
        for (int j = 0; j < m; ++j)
          if ((local >> j) & 1u)
            sub |= std::uint32_t{1} << slice[static_cast<std::size_t>(j)];
        bool pruned = false;
        for (std::uint32_t a : accepted) {
          if ((a & ~sub) == 0) {
            pruned = true;
            break;
          }
        }
        if (pruned) continue;

        // Forcing the branch plus this sub-family, can the dynamics reach a
        // state that already agrees with y on the rest of the slice?
        VertexSet forced = combination_nodes(order, branch | sub);
        VertexSet rest;
        for (int j = 0; j < m; ++j)
          if (!((local >> j) & 1u))
            rest = rest | order.positive[static_cast<std::size_t>(
                       slice[static_cast<std::size_t>(j)])];
        BooleanNetwork g = apply_mutation(f, Mutation::forcing(forced, y));
        State start = override_state(x, forced, y);
        if (reaches_agreement(g, start, rest, y)) accepted.push_back(sub);
      }
      for (std::uint32_t sub : accepted) extended.push_back(branch | sub);
    }
    std::sort(extended.begin(), extended.end());
    extended.erase(std::unique(extended.begin(), extended.end()),
                   extended.end());
    branches = std::move(extended);
  }

  ReprogrammingSolution solution;
  solution.mode = ReprogrammingMode::existential;
  solution.method = SolutionMethod::scc_filter;
  solution.from = x;
  solution.to = y;
  std::sort(branches.begin(), branches.end(),
            [&](std::uint32_t a, std::uint32_t b) {
              return family_less(combination_nodes(order, a),
                                 combination_nodes(order, b));
            });
  for (std::uint32_t branch : branches) {
    solution.combinations.push_back(make_combination(order, branch));
    solution.node_sets.push_back(combination_nodes(order, branch));
  }
  return solution;
}

ReprogrammingSolution ir_scc_filter(const BooleanNetwork& f, const State& x,
                                    const State& y,
                                    const AnalysisLimits& limits) {
  require_preconditions(f, x, y, limits);
  SccOrder order = scc_order(f, limits.cycle_budget);

  std::uint32_t selected = 0;
  for (;;) {
    VertexSet forced = combination_nodes(order, selected);
    BooleanNetwork g = apply_mutation(f, Mutation::forcing(forced, y));
    State start = override_state(x, forced, y);
    std::vector<State> residual;
    for (const State& z : reachable_fixed_points(g, start, limits))
      if (z != y) residual.push_back(z);
    if (residual.empty()) break;

    int pick = -1;
    for (int i = 0; i < order.k() && pick < 0; ++i) {
      const VertexSet& scc = order.positive[static_cast<std::size_t>(i)];
      for (const State& z : residual) {
        if (((z.raw() ^ y.raw()) & scc.mask()) != 0) {
          pick = i;
          break;
        }
      }
    }
    if (pick < 0)
      throw std::logic_error(
          "reachable fixed point differs from the target outside every "
          "positive SCC");
    selected |= std::uint32_t{1} << pick;
  }

  ReprogrammingSolution solution;
  solution.mode = ReprogrammingMode::inevitable;
  solution.method = SolutionMethod::scc_filter;
  solution.from = x;
  solution.to = y;
  solution.combinations.push_back(make_combination(order, selected));
  solution.node_sets.push_back(combination_nodes(order, selected));
  if (!ir_holds(f, x, y, solution.node_sets.front(), limits))
    solution.warnings.push_back(
        "selection " + show_1based(solution.node_sets.front()) +
        " fails the inevitability predicate: the loop exit (no other "
        "reachable fixed point) diverged from it");
  return solution;
}

ReprogrammingSolution ir_vertex_recursive(const BooleanNetwork& f,
                                          const State& x, const State& y,
                                          const AnalysisLimits& limits) {
  require_preconditions(f, x, y, limits);

  // The mutated network is a function of the picked vertex set alone, so the
  // exploration is memoized on it; distinct pick orders reach the same set
  // once.
  std::vector<VertexSet> found;
  StateSet visited(f.dimension());
  std::vector<std::uint32_t> pending{0};
  while (!pending.empty()) {
    std::uint32_t rd_mask = pending.back();
    pending.pop_back();
    State key(rd_mask, f.dimension());
    if (!visited.insert(key)) continue;

    VertexSet rd(rd_mask);
    BooleanNetwork g = apply_mutation(f, Mutation::forcing(rd, y));
    State start = override_state(x, rd, y);
    std::vector<State> residual;
    for (const State& z : reachable_fixed_points(g, start, limits))
      if (z != y) residual.push_back(z);
    if (residual.empty()) {
      found.push_back(rd);
      continue;
    }

    SccOrder order = scc_order(g, limits.cycle_budget);
    int pick = -1;
    for (int i = 0; i < order.k() && pick < 0; ++i) {
      const VertexSet& scc = order.positive[static_cast<std::size_t>(i)];
      for (const State& z : residual) {
        if (((z.raw() ^ y.raw()) & scc.mask()) != 0) {
          pick = i;
          break;
        }
      }
    }
    if (pick < 0)
      throw std::logic_error(
          "reachable fixed point differs from the target outside every "
          "positive SCC");
    for (int u : order.positive[static_cast<std::size_t>(pick)].indices())
      pending.push_back(rd_mask | (std::uint32_t{1} << u));
  }

  ReprogrammingSolution solution;
  solution.mode = ReprogrammingMode::inevitable;
  solution.method = SolutionMethod::vertex_recursive;
  solution.from = x;
  solution.to = y;
  // The recursion's leaf test only probes fixed points; forcing nodes can
  // leave a reachable cyclic trap it cannot see. Leaves are therefore
  // validated against the defining predicate, and the divergent ones are
  // dropped and flagged instead of returned.
  for (const VertexSet& rd : canonical_family(std::move(found))) {
    if (ir_holds(f, x, y, rd, limits)) {
      solution.node_sets.push_back(rd);
    } else {
      solution.warnings.push_back(
          "dropped " + show_1based(rd) +
          ": the recursion's exit condition (no other reachable fixed point) "
          "holds, but a reachable cyclic attractor escapes the target");
    }
  }
  return solution;
}

}  // namespace boolnet
