#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace aig {

/// Largest ground set a PointSet can address.
inline constexpr int kMaxPoints = 16;

/// A subset of the ground set {0, ..., n-1}, stored as a bit mask.
///
/// The ground-set size is not stored; operations that need it (complement,
/// bounds checks) take it explicitly. Ordering is by mask value, which is the
/// canonical order used throughout the library for open families and vertex
/// labels.
class PointSet {
 public:
  using mask_type = std::uint32_t;

  constexpr PointSet() = default;
  constexpr explicit PointSet(mask_type bits) : bits_(bits) {}
  PointSet(std::initializer_list<int> points) {
    for (int p : points) insert(p);
  }

  static constexpr PointSet full(int n) {
    return PointSet(n >= 32 ? ~mask_type{0} : (mask_type{1} << n) - 1);
  }
  static constexpr PointSet singleton(int p) { return PointSet(mask_type{1} << p); }

  constexpr mask_type mask() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int p) const { return (bits_ >> p) & 1u; }
  constexpr bool subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(PointSet other) const { return (bits_ & other.bits_) != 0; }
  constexpr bool within(int n) const { return subset_of(full(n)); }

  void insert(int p) {
    if (p < 0 || p >= kMaxPoints) throw std::out_of_range("point index out of range");
    bits_ |= mask_type{1} << p;
  }

  constexpr PointSet complement(int n) const { return PointSet(~bits_ & full(n).bits_); }

  constexpr PointSet operator|(PointSet o) const { return PointSet(bits_ | o.bits_); }
  constexpr PointSet operator&(PointSet o) const { return PointSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr PointSet operator-(PointSet o) const { return PointSet(bits_ & ~o.bits_); }
  PointSet& operator|=(PointSet o) { bits_ |= o.bits_; return *this; }
  PointSet& operator&=(PointSet o) { bits_ &= o.bits_; return *this; }

  constexpr auto operator<=>(const PointSet&) const = default;

  /// Members in increasing order.
  std::vector<int> points() const {
    std::vector<int> out;
    for (mask_type b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  /// Lowest member; the set must be nonempty.
  constexpr int front() const { return std::countr_zero(bits_); }

 private:
  mask_type bits_ = 0;
};

/// Renders as a sorted point list, e.g. `{0,2}`.
inline std::string to_string(PointSet s) {
  std::string out = "{";
  bool first = true;
  for (int p : s.points()) {
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  out += '}';
  return out;
}

/// Calls `fn(PointSet)` for every subset of the n-point ground set, in mask order.
template <class Fn>
void for_each_subset(int n, Fn&& fn) {
  const PointSet::mask_type end = PointSet::mask_type{1} << n;
  for (PointSet::mask_type m = 0; m < end; ++m) fn(PointSet(m));
}

}  // namespace aig
