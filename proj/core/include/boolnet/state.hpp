#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace boolnet {

/// Architectural ceiling on the network dimension. States and vertex sets are
/// packed into 32-bit words; the soft, configurable limit lives in
/// AnalysisLimits and defaults to well below this.
inline constexpr int kMaxWidth = 32;

class VertexSet;

/// A Boolean state over n ordered nodes, packed into a machine word.
/// Bit i holds the value of node i (0-based). The textual form is written
/// left to right in node order, so "010" sets node 2 and clears nodes 1, 3.
class State {
public:
  State() = default;
  State(std::uint32_t raw, int width) : bits_(raw), width_(width) {}

  static State all_zero(int width) { return State(0, width); }

  int width() const { return width_; }
  std::uint32_t raw() const { return bits_; }

  bool bit(int i) const { return (bits_ >> i) & 1u; }

  State with_bit(int i, bool value) const {
    std::uint32_t m = std::uint32_t{1} << i;
    return State(value ? (bits_ | m) : (bits_ & ~m), width_);
  }

  /// Complement of the single node i.
  State flipped(int i) const {
    return State(bits_ ^ (std::uint32_t{1} << i), width_);
  }

  std::string to_string() const;

  friend bool operator==(const State& a, const State& b) {
    return a.bits_ == b.bits_ && a.width_ == b.width_;
  }
  friend bool operator!=(const State& a, const State& b) { return !(a == b); }

  /// Orders states like their textual form (node 1 is the most significant
  /// position), so sorted output matches sorted binary strings.
  friend bool operator<(const State& a, const State& b) {
    std::uint32_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return false;
    return !((a.bits_ >> __builtin_ctz(diff)) & 1u);
  }

private:
  std::uint32_t bits_ = 0;
  int width_ = 0;
};

/// A set of node indices, packed into a mask. Indices are 0-based inside the
/// library; they are rendered 1-based at the CLI boundary.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::uint32_t mask) : mask_(mask) {}
  VertexSet(std::initializer_list<int> indices) {
    for (int i : indices) mask_ |= std::uint32_t{1} << i;
  }

  static VertexSet full(int n) {
    return VertexSet(n == 32 ? ~std::uint32_t{0}
                             : ((std::uint32_t{1} << n) - 1));
  }

  std::uint32_t mask() const { return mask_; }
  bool empty() const { return mask_ == 0; }
  bool contains(int i) const { return (mask_ >> i) & 1u; }
  int count() const { return __builtin_popcount(mask_); }

  VertexSet with(int i) const {
    return VertexSet(mask_ | (std::uint32_t{1} << i));
  }
  VertexSet without(int i) const {
    return VertexSet(mask_ & ~(std::uint32_t{1} << i));
  }

  bool subset_of(const VertexSet& other) const {
    return (mask_ & ~other.mask_) == 0;
  }

  friend VertexSet operator|(const VertexSet& a, const VertexSet& b) {
    return VertexSet(a.mask_ | b.mask_);
  }
  friend VertexSet operator&(const VertexSet& a, const VertexSet& b) {
    return VertexSet(a.mask_ & b.mask_);
  }
  friend VertexSet operator-(const VertexSet& a, const VertexSet& b) {
    return VertexSet(a.mask_ & ~b.mask_);
  }
  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.mask_ == b.mask_;
  }
  friend bool operator!=(const VertexSet& a, const VertexSet& b) {
    return a.mask_ != b.mask_;
  }
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    return a.mask_ < b.mask_;
  }

  /// Sorted, duplicate-free member list (the canonical external rendering).
  std::vector<int> indices() const;

private:
  std::uint32_t mask_ = 0;
};

/// result agrees with y on I and with x elsewhere
State override_state(const State& x, const VertexSet& I, const State& y);

/// bits in I complemented, others unchanged; an involution
State flip(const State& x, const VertexSet& I);

}  // namespace boolnet
