#include "boolnet/state.hpp"

#include <stdexcept>

namespace boolnet {

std::string State::to_string() const {
  std::string s(static_cast<std::size_t>(width_), '0');
  for (int i = 0; i < width_; ++i)
    if (bit(i)) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

std::vector<int> VertexSet::indices() const {
  std::vector<int> out;
  for (int i = 0; i < kMaxWidth; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

State override_state(const State& x, const VertexSet& I, const State& y) {
  if (x.width() != y.width())
    throw std::invalid_argument("override_state: state widths differ");
  if (!I.subset_of(VertexSet::full(x.width())))
    throw std::out_of_range("override_state: vertex index out of range");
  std::uint32_t m = I.mask();
  return State((x.raw() & ~m) | (y.raw() & m), x.width());
}

State flip(const State& x, const VertexSet& I) {
  if (!I.subset_of(VertexSet::full(x.width())))
    throw std::out_of_range("flip: vertex index out of range");
  return State(x.raw() ^ I.mask(), x.width());
}

}  // namespace boolnet
