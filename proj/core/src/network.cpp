#include "boolnet/network.hpp"

#include <stdexcept>
#include <utility>

namespace boolnet {

Mutation Mutation::forcing(const VertexSet& I, const State& y) {
  std::map<int, bool> a;
  for (int i : I.indices()) a[i] = y.bit(i);
  return Mutation(std::move(a));
}

BooleanNetwork::BooleanNetwork(NetworkSpec spec) : spec_(std::move(spec)) {
  n_ = spec_.size();
  names_.reserve(static_cast<std::size_t>(n_));
  tables_.reserve(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    names_.push_back(spec_.node(i).name);
    NodeTable t;
    t.support = spec_.node(i).update.support().indices();
    const std::size_t k = t.support.size();
    t.values.resize(std::size_t{1} << k);
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << k); ++m) {
      std::uint32_t raw = 0;
      for (std::size_t j = 0; j < k; ++j)
        if ((m >> j) & 1u)
          raw |= std::uint32_t{1} << t.support[j];
      t.values[m] = spec_.node(i).update.evaluate(State(raw, n_));
    }
    tables_.push_back(std::move(t));
  }
}

bool BooleanNetwork::evaluate_node(int i, const State& x) const {
  const NodeTable& t = tables_[static_cast<std::size_t>(i)];
  std::uint32_t m = 0;
  for (std::size_t j = 0; j < t.support.size(); ++j)
    if (x.bit(t.support[j])) m |= std::uint32_t{1} << j;
  return t.values[m];
}

State BooleanNetwork::evaluate(const State& x) const {
  if (x.width() != n_)
    throw std::invalid_argument("evaluate: state width does not match network dimension");
  std::uint32_t out = 0;
  for (int i = 0; i < n_; ++i)
    if (evaluate_node(i, x)) out |= std::uint32_t{1} << i;
  return State(out, n_);
}

BooleanNetwork apply_mutation(const BooleanNetwork& f, const Mutation& m) {
  std::vector<NetworkNode> nodes = f.spec().nodes();
  for (const auto& [index, value] : m.assignments()) {
    if (index < 0 || index >= f.dimension())
      throw std::out_of_range("apply_mutation: node index out of range");
    nodes[static_cast<std::size_t>(index)].update = Formula::constant(value);
  }
  return BooleanNetwork(NetworkSpec(std::move(nodes)));
}

}  // namespace boolnet
