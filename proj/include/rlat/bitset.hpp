#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <vector>

namespace rlat {

/// Index of an element of a finite residuated lattice (file order).
using Element = std::uint32_t;

/// Hard cap on carrier size; every subset fits in one machine word.
inline constexpr std::size_t kMaxElements = 20;

/// A subset of {0, ..., 31} stored as a bit mask. The tag keeps subsets of
/// different universes (lattice elements, points of a space) from mixing.
template <typename Tag>
class BitSet {
 public:
  using word_type = std::uint32_t;

  constexpr BitSet() = default;
  constexpr explicit BitSet(word_type bits) : bits_(bits) {}

  static constexpr BitSet full(std::size_t n) {
    return BitSet(n >= 32 ? ~word_type{0} : ((word_type{1} << n) - 1));
  }
  static constexpr BitSet single(std::uint32_t i) { return BitSet(word_type{1} << i); }
  static BitSet of(std::initializer_list<std::uint32_t> items) {
    BitSet s;
    for (auto i : items) s.insert(i);
    return s;
  }

  constexpr word_type bits() const { return bits_; }
  constexpr bool contains(std::uint32_t i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(std::uint32_t i) { bits_ |= word_type{1} << i; }
  constexpr void erase(std::uint32_t i) { bits_ &= ~(word_type{1} << i); }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_subset_of(BitSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(BitSet other) const { return (bits_ & other.bits_) != 0; }
  constexpr std::uint32_t lowest() const { return static_cast<std::uint32_t>(std::countr_zero(bits_)); }

  constexpr BitSet operator|(BitSet o) const { return BitSet(bits_ | o.bits_); }
  constexpr BitSet operator&(BitSet o) const { return BitSet(bits_ & o.bits_); }
  constexpr BitSet operator-(BitSet o) const { return BitSet(bits_ & ~o.bits_); }
  constexpr BitSet& operator|=(BitSet o) { bits_ |= o.bits_; return *this; }
  constexpr BitSet& operator&=(BitSet o) { bits_ &= o.bits_; return *this; }
  /// Complement relative to {0, ..., n-1}.
  constexpr BitSet complement(std::size_t n) const { return full(n) - *this; }

  constexpr bool operator==(const BitSet&) const = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::uint32_t;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::uint32_t*;
    using reference = std::uint32_t;

    constexpr iterator() = default;
    constexpr explicit iterator(word_type rest) : rest_(rest) {}
    constexpr std::uint32_t operator*() const { return static_cast<std::uint32_t>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    word_type rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<std::uint32_t> to_vector() const { return {begin(), end()}; }

 private:
  word_type bits_ = 0;
};

/// Deterministic listing order: by cardinality, then lexicographically on
/// the ascending index lists.
template <typename Tag>
constexpr bool canonical_less(BitSet<Tag> a, BitSet<Tag> b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a == b) return false;
  auto diff = BitSet<Tag>(a.bits() ^ b.bits());
  return a.contains(diff.lowest());
}

struct ElementTag {};
struct PointTag {};

/// X ⊆ A, a subset of lattice elements.
using ElementSubset = BitSet<ElementTag>;
/// A subset of the points of a finite space.
using PointSet = BitSet<PointTag>;

}  // namespace rlat

template <typename Tag>
struct std::hash<rlat::BitSet<Tag>> {
  std::size_t operator()(const rlat::BitSet<Tag>& s) const noexcept {
    return std::hash<std::uint32_t>{}(s.bits());
  }
};
