#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "boolnet/network.hpp"
#include "boolnet/state.hpp"

namespace boolnet {

/// Dense set of states of a fixed width, one bit per state. Explicit-state
/// exploration allocates 2^n bits, which is what AnalysisLimits caps.
class StateSet {
public:
  explicit StateSet(int width)
      : width_(width), member_(std::size_t{1} << width, false) {}

  int width() const { return width_; }
  std::size_t size() const { return count_; }
  bool contains(const State& x) const { return member_[x.raw()]; }
  bool contains_raw(std::uint32_t raw) const { return member_[raw]; }

  /// Returns true when the state was not yet present.
  bool insert(const State& x) {
    if (member_[x.raw()]) return false;
    member_[x.raw()] = true;
    ++count_;
    return true;
  }

  bool subset_of(const StateSet& other) const;

  /// Members sorted like their textual form.
  std::vector<State> to_states() const;

private:
  int width_;
  std::vector<bool> member_;
  std::size_t count_ = 0;
};

/// States reachable in one asynchronous transition: one node u with
/// f_u(x) != x_u flips per transition. Ordered by node index.
std::vector<State> async_successors(const BooleanNetwork& f, const State& x);

/// Forward closure of x under asynchronous transitions; always contains x.
StateSet reachable(const BooleanNetwork& f, const State& x,
                   const AnalysisLimits& limits = {});

/// x ->* y; exits as soon as y is seen.
bool reaches(const BooleanNetwork& f, const State& x, const State& y,
             const AnalysisLimits& limits = {});

/// Backward closure: all states from which y is reachable.
StateSet backward_reachable(const BooleanNetwork& f, const State& y,
                            const AnalysisLimits& limits = {});

/// All states with f(x) = x, sorted like their textual form.
std::vector<State> fixed_points(const BooleanNetwork& f,
                                const AnalysisLimits& limits = {});

/// A terminal strongly connected component of the transition graph.
struct Attractor {
  std::vector<State> states;  // sorted like their textual form
  bool is_fixed_point() const { return states.size() == 1; }
};

struct AttractorSet {
  std::vector<Attractor> items;  // ordered by smallest member state
};

/// All attractors, computed over the full transition graph on {0,1}^n.
AttractorSet attractors(const BooleanNetwork& f,
                        const AnalysisLimits& limits = {});

/// FP(f) intersected with the forward closure of x.
std::vector<State> reachable_fixed_points(const BooleanNetwork& f,
                                          const State& x,
                                          const AnalysisLimits& limits = {});

/// Guard run before any reprogramming analysis: returns a witness cyclic
/// attractor if one exists, nullopt when every attractor is a fixed point.
std::optional<Attractor> find_cyclic_attractor(const BooleanNetwork& f,
                                               const AnalysisLimits& limits = {});

/// Every edge x -> x' of the asynchronous transition graph, ordered by
/// (source, target).
std::vector<std::pair<State, State>> transition_edges(
    const BooleanNetwork& f, const AnalysisLimits& limits = {});

}  // namespace boolnet
