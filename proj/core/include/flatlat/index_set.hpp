#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace flatlat {

/// Upper bound on the ground set size of any bitmask-backed set.
inline constexpr std::size_t kMaxIndexSetSize = 64;

/// A subset of {0, ..., 63} stored as a 64-bit mask.
///
/// Used for vertex sets of complexes, atom sets of lattices and vertex sets
/// of graphs. Ordering compares the raw masks, so sorting a container of
/// IndexSets gives colex order.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr IndexSet singleton(std::size_t i) { return IndexSet{std::uint64_t{1} << i}; }

  /// {0, ..., n-1}
  static constexpr IndexSet range(std::size_t n) {
    return n >= 64 ? IndexSet{~std::uint64_t{0}} : IndexSet{(std::uint64_t{1} << n) - 1};
  }

  template <class Range>
  static IndexSet of(const Range& indices) {
    IndexSet s;
    for (auto i : indices) s = s.with(static_cast<std::size_t>(i));
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(IndexSet other) const { return subset_of(other) && bits_ != other.bits_; }
  constexpr bool intersects(IndexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr IndexSet with(std::size_t i) const { return IndexSet{bits_ | (std::uint64_t{1} << i)}; }
  constexpr IndexSet without(std::size_t i) const { return IndexSet{bits_ & ~(std::uint64_t{1} << i)}; }

  /// Smallest member; undefined on the empty set.
  constexpr std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<std::size_t>(std::countr_zero(b)));
  }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet{a.bits_ | b.bits_}; }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet{a.bits_ & b.bits_}; }
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return IndexSet{a.bits_ & ~b.bits_}; }
  friend constexpr bool operator==(IndexSet, IndexSet) = default;
  friend constexpr auto operator<=>(IndexSet, IndexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Renumbers the members of `x` that lie in `mask` by their rank inside `mask`.
constexpr IndexSet compress(IndexSet x, IndexSet mask) {
  std::uint64_t out = 0;
  std::size_t rank = 0;
  for (std::uint64_t m = mask.bits(); m != 0; m &= m - 1, ++rank) {
    if (x.bits() & (m & (~m + 1))) out |= std::uint64_t{1} << rank;
  }
  return IndexSet{out};
}

/// Inverse of compress: maps rank positions back onto the members of `mask`.
constexpr IndexSet expand(IndexSet x, IndexSet mask) {
  std::uint64_t out = 0;
  std::size_t rank = 0;
  for (std::uint64_t m = mask.bits(); m != 0; m &= m - 1, ++rank) {
    if (x.contains(rank)) out |= (m & (~m + 1));
  }
  return IndexSet{out};
}

/// Calls f on every subset of `s`, including the empty set and `s` itself.
template <class F>
void for_each_subset(IndexSet s, F&& f) {
  std::uint64_t sub = s.bits();
  while (true) {
    f(IndexSet{sub});
    if (sub == 0) break;
    sub = (sub - 1) & s.bits();
  }
}

/// Size-then-colex ordering; the canonical order for listing faces and flats.
struct BySizeThenBits {
  bool operator()(IndexSet a, IndexSet b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

}  // namespace flatlat
