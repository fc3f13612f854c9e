#include "boolnet/dynamics.hpp"

#include <algorithm>
#include <stdexcept>

#include "boolnet/errors.hpp"

namespace boolnet {

namespace {

void check_dimension(const BooleanNetwork& f, const AnalysisLimits& limits) {
  if (f.dimension() > limits.max_dimension)
    throw CapExceeded("dimension " + std::to_string(f.dimension()) +
                      " exceeds the explicit-state limit of " +
                      std::to_string(limits.max_dimension));
}

void check_width(const BooleanNetwork& f, const State& x) {
  if (x.width() != f.dimension())
    throw std::invalid_argument("state width does not match network dimension");
}

}  // namespace

bool StateSet::subset_of(const StateSet& other) const {
  if (width_ != other.width_) return false;
  for (std::size_t raw = 0; raw < member_.size(); ++raw)
    if (member_[raw] && !other.member_[raw]) return false;
  return true;
}

std::vector<State> StateSet::to_states() const {
  std::vector<State> out;
  out.reserve(count_);
  for (std::size_t raw = 0; raw < member_.size(); ++raw)
    if (member_[raw]) out.emplace_back(static_cast<std::uint32_t>(raw), width_);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<State> async_successors(const BooleanNetwork& f, const State& x) {
  check_width(f, x);
  std::vector<State> out;
  for (int u = 0; u < f.dimension(); ++u)
    if (f.evaluate_node(u, x) != x.bit(u)) out.push_back(x.flipped(u));
  return out;
}

StateSet reachable(const BooleanNetwork& f, const State& x,
                   const AnalysisLimits& limits) {
  check_dimension(f, limits);
  check_width(f, x);
  StateSet seen(f.dimension());
  std::vector<std::uint32_t> frontier{x.raw()};
  seen.insert(x);
  while (!frontier.empty()) {
    State s(frontier.back(), f.dimension());
    frontier.pop_back();
    for (int u = 0; u < f.dimension(); ++u) {
      if (f.evaluate_node(u, s) != s.bit(u)) {
        State t = s.flipped(u);
        if (seen.insert(t)) frontier.push_back(t.raw());
      }
    }
  }
  return seen;
}

bool reaches(const BooleanNetwork& f, const State& x, const State& y,
             const AnalysisLimits& limits) {
  check_dimension(f, limits);
  check_width(f, x);
  check_width(f, y);
  if (x == y) return true;
  StateSet seen(f.dimension());
  std::vector<std::uint32_t> frontier{x.raw()};
  seen.insert(x);
  while (!frontier.empty()) {
    State s(frontier.back(), f.dimension());
    frontier.pop_back();
    for (int u = 0; u < f.dimension(); ++u) {
      if (f.evaluate_node(u, s) != s.bit(u)) {
        State t = s.flipped(u);
        if (t == y) return true;
        if (seen.insert(t)) frontier.push_back(t.raw());
      }
    }
  }
  return false;
}

StateSet backward_reachable(const BooleanNetwork& f, const State& y,
                            const AnalysisLimits& limits) {
  check_dimension(f, limits);
  check_width(f, y);
  StateSet seen(f.dimension());
  std::vector<std::uint32_t> frontier{y.raw()};
  seen.insert(y);
  while (!frontier.empty()) {
    State t(frontier.back(), f.dimension());
    frontier.pop_back();
    // Predecessors differ from t in exactly one node u; the transition fires
    // iff f_u at the predecessor equals t_u.
    for (int u = 0; u < f.dimension(); ++u) {
      State s = t.flipped(u);
      if (f.evaluate_node(u, s) == t.bit(u)) {
        if (seen.insert(s)) frontier.push_back(s.raw());
      }
    }
  }
  return seen;
}

std::vector<State> fixed_points(const BooleanNetwork& f,
                                const AnalysisLimits& limits) {
  check_dimension(f, limits);
  const int n = f.dimension();
  std::vector<State> out;
  for (std::uint64_t raw = 0; raw < (std::uint64_t{1} << n); ++raw) {
    State x(static_cast<std::uint32_t>(raw), n);
    bool fixed = true;
    for (int u = 0; u < n && fixed; ++u)
      fixed = f.evaluate_node(u, x) == x.bit(u);
    if (fixed) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

AttractorSet attractors(const BooleanNetwork& f, const AnalysisLimits& limits) {
  check_dimension(f, limits);
  const int n = f.dimension();
  const std::size_t total = std::size_t{1} << n;

  // Iterative Tarjan over the implicit transition graph.
  std::vector<std::int32_t> index(total, -1);
  std::vector<std::int32_t> lowlink(total, 0);
  std::vector<bool> on_stack(total, false);
  std::vector<std::int32_t> comp_of(total, -1);
  std::vector<std::uint32_t> stack;
  std::int32_t next_index = 0;
  std::int32_t next_comp = 0;

  struct Frame {
    std::uint32_t state;
    int next_node;
  };
  std::vector<Frame> frames;

  for (std::size_t root = 0; root < total; ++root) {
    if (index[root] != -1) continue;
    frames.push_back({static_cast<std::uint32_t>(root), 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(static_cast<std::uint32_t>(root));
    on_stack[root] = true;

    while (!frames.empty()) {
      Frame& fr = frames.back();
      State s(fr.state, n);
      int u = -1;
      while (fr.next_node < n) {
        int v = fr.next_node++;
        if (f.evaluate_node(v, s) != s.bit(v)) {
          u = v;
          break;
        }
      }
      if (u >= 0) {
        std::uint32_t w = s.flipped(u).raw();
        if (index[w] == -1) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[fr.state] = std::min(lowlink[fr.state], index[w]);
        }
      } else {
        std::uint32_t v = fr.state;
        frames.pop_back();
        if (!frames.empty())
          lowlink[frames.back().state] =
              std::min(lowlink[frames.back().state], lowlink[v]);
        if (lowlink[v] == index[v]) {
          std::uint32_t w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp_of[w] = next_comp;
          } while (w != v);
          ++next_comp;
        }
      }
    }
  }

  // A component is an attractor iff no transition leaves it.
  std::vector<bool> terminal(static_cast<std::size_t>(next_comp), true);
  for (std::size_t raw = 0; raw < total; ++raw) {
    State s(static_cast<std::uint32_t>(raw), n);
    for (int u = 0; u < n; ++u) {
      if (f.evaluate_node(u, s) != s.bit(u)) {
        std::uint32_t t = s.flipped(u).raw();
        if (comp_of[t] != comp_of[raw])
          terminal[static_cast<std::size_t>(comp_of[raw])] = false;
      }
    }
  }

  std::vector<Attractor> found(static_cast<std::size_t>(next_comp));
  for (std::size_t raw = 0; raw < total; ++raw)
    if (terminal[static_cast<std::size_t>(comp_of[raw])])
      found[static_cast<std::size_t>(comp_of[raw])].states.emplace_back(
          static_cast<std::uint32_t>(raw), n);

  AttractorSet result;
  for (Attractor& a : found) {
    if (a.states.empty()) continue;
    std::sort(a.states.begin(), a.states.end());
    result.items.push_back(std::move(a));
  }
  std::sort(result.items.begin(), result.items.end(),
            [](const Attractor& a, const Attractor& b) {
              return a.states.front() < b.states.front();
            });
  return result;
}

std::vector<State> reachable_fixed_points(const BooleanNetwork& f,
                                          const State& x,
                                          const AnalysisLimits& limits) {
  StateSet closure = reachable(f, x, limits);
  std::vector<State> out;
  for (const State& s : closure.to_states()) {
    bool fixed = true;
    for (int u = 0; u < f.dimension() && fixed; ++u)
      fixed = f.evaluate_node(u, s) == s.bit(u);
    if (fixed) out.push_back(s);
  }
  return out;
}

std::optional<Attractor> find_cyclic_attractor(const BooleanNetwork& f,
                                               const AnalysisLimits& limits) {
  for (const Attractor& a : attractors(f, limits).items)
    if (!a.is_fixed_point()) return a;
  return std::nullopt;
}

std::vector<std::pair<State, State>> transition_edges(
    const BooleanNetwork& f, const AnalysisLimits& limits) {
  check_dimension(f, limits);
  const int n = f.dimension();
  std::vector<std::pair<State, State>> edges;
  for (std::uint64_t raw = 0; raw < (std::uint64_t{1} << n); ++raw) {
    State s(static_cast<std::uint32_t>(raw), n);
    for (int u = 0; u < n; ++u)
      if (f.evaluate_node(u, s) != s.bit(u))
        edges.emplace_back(s, s.flipped(u));
  }
  std::sort(edges.begin(), edges.end(),
            [](const std::pair<State, State>& a, const std::pair<State, State>& b) {
              if (a.first != b.first) return a.first < b.first;
              return a.second < b.second;
            });
  return edges;
}

}  // namespace boolnet
