#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "rlat/lattice.hpp"

namespace rlat {

/// A filter: contains 1, closed under ⊙ and under joins with anything.
class Filter {
 public:
  Filter() = default;
  /// Wraps a subset the caller already knows to be a filter.
  static Filter unchecked(ElementSubset s) { return Filter(s); }

  ElementSubset elements() const { return elements_; }
  bool contains(Element x) const { return elements_.contains(x); }
  bool is_subset_of(const Filter& other) const { return elements_.is_subset_of(other.elements_); }
  std::size_t size() const { return elements_.size(); }

  bool operator==(const Filter&) const = default;

 private:
  explicit Filter(ElementSubset s) : elements_(s) {}
  ElementSubset elements_;
};

inline bool canonical_less(const Filter& a, const Filter& b) { return canonical_less(a.elements(), b.elements()); }

bool is_filter(const ResiduatedLattice& lat, ElementSubset s);
/// Throws std::invalid_argument when s is not a filter.
Filter make_filter(const ResiduatedLattice& lat, ElementSubset s);

inline Filter unit_filter(const ResiduatedLattice& lat) { return Filter::unchecked(ElementSubset::single(lat.top())); }
inline Filter whole_filter(const ResiduatedLattice& lat) { return Filter::unchecked(lat.carrier()); }
inline bool is_proper(const ResiduatedLattice& lat, const Filter& f) { return !f.contains(lat.bottom()); }

inline Filter intersection(const Filter& a, const Filter& b) { return Filter::unchecked(a.elements() & b.elements()); }

/// 𝔽(X): upward closure of all finite ⊙-products of members of X.
Filter generated_filter(const ResiduatedLattice& lat, ElementSubset xs);
/// 𝔽(x)
Filter principal_filter(const ResiduatedLattice& lat, Element x);
/// F ⋁ G = 𝔽(F ∪ G)
Filter filter_join(const ResiduatedLattice& lat, const Filter& a, const Filter& b);
/// 𝔽(F, x) = F ⋁ 𝔽(x)
Filter filter_extend(const ResiduatedLattice& lat, const Filter& f, Element x);

/// All filters, in canonical order, with meet and join tables.
class FiltersLattice {
 public:
  FiltersLattice() = default;
  FiltersLattice(std::vector<Filter> filters, std::vector<std::size_t> meet, std::vector<std::size_t> join);

  const std::vector<Filter>& all() const { return filters_; }
  std::size_t size() const { return filters_.size(); }
  const Filter& operator[](std::size_t i) const { return filters_[i]; }
  std::optional<std::size_t> index_of(const Filter& f) const;
  std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i * size() + j]; }
  std::size_t join(std::size_t i, std::size_t j) const { return join_[i * size() + j]; }

 private:
  std::vector<Filter> filters_;
  std::vector<std::size_t> meet_;
  std::vector<std::size_t> join_;
  std::unordered_map<ElementSubset, std::size_t> index_;
};

/// Exhaustive scan of every subset of the carrier.
FiltersLattice enumerate_filters(const ResiduatedLattice& lat);

/// (F:X) = {a | a∨x ∈ F for all x ∈ X}.
Filter coannihilator(const ResiduatedLattice& lat, const Filter& f, ElementSubset xs);
/// x^⊥ = ({1}:x)
Filter annihilator(const ResiduatedLattice& lat, Element x);
/// X^⊥ = ({1}:X)
Filter annihilator(const ResiduatedLattice& lat, ElementSubset xs);
/// x^⊥⊥
Filter double_annihilator(const ResiduatedLattice& lat, Element x);

/// Maximal members among the proper filters.
std::vector<Filter> maximal_filters(const ResiduatedLattice& lat, const FiltersLattice& fl);
/// Rad(F): intersection of the maximal filters containing F (A if none).
Filter radical(const ResiduatedLattice& lat, const FiltersLattice& fl, const Filter& f);

/// A/F together with the canonical projection π_F.
struct QuotientResult {
  ResiduatedLattice quotient;
  /// element index -> class index
  std::vector<Element> projection;
  std::vector<ElementSubset> classes;
  bool degenerate = false;

  /// π_F(G) as a subset of the quotient carrier.
  ElementSubset image(ElementSubset s) const;
  /// π_F^{-1}(T)
  ElementSubset preimage(ElementSubset t) const;
};

/// Quotient by the congruence x ≡ y ⇔ x→y, y→x ∈ F. Each class is named by
/// its greatest member.
QuotientResult quotient(const ResiduatedLattice& lat, const Filter& f);

/// Downward-closed, join-closed, nonempty subset of the underlying lattice.
class LatticeIdeal {
 public:
  static LatticeIdeal unchecked(ElementSubset s) { return LatticeIdeal(s); }
  ElementSubset elements() const { return elements_; }
  bool operator==(const LatticeIdeal&) const = default;

 private:
  explicit LatticeIdeal(ElementSubset s) : elements_(s) {}
  ElementSubset elements_;
};

bool is_lattice_ideal(const ResiduatedLattice& lat, ElementSubset s);
LatticeIdeal make_lattice_ideal(const ResiduatedLattice& lat, ElementSubset s);
/// ↓x
inline LatticeIdeal principal_ideal(const ResiduatedLattice& lat, Element x) { return LatticeIdeal::unchecked(lat.down(x)); }
std::vector<LatticeIdeal> enumerate_lattice_ideals(const ResiduatedLattice& lat);

/// ω(I) = {a | a∨x = 1 for some x ∈ I}.
Filter omega_filter(const ResiduatedLattice& lat, const LatticeIdeal& ideal);
/// Ω(A), deduplicated, canonical order.
std::vector<Filter> omega_filters(const ResiduatedLattice& lat);

/// x^⊥⊥ ⊆ F for every x ∈ F.
bool is_alpha(const ResiduatedLattice& lat, const Filter& f);
/// Least α-filter containing X.
Filter alpha_closure(const ResiduatedLattice& lat, ElementSubset xs);
std::vector<Filter> enumerate_alpha(const ResiduatedLattice& lat, const FiltersLattice& fl);

struct FlatnessWitness {
  Filter g;
  Element a;
  Element x;  // x ∈ (G⋁F : a) but x ∉ (G:a) ⋁ F
};

struct FlatnessResult {
  bool flat = true;
  std::optional<FlatnessWitness> witness;
};

/// π_F is flat iff (G⋁F : a) ⊆ (G:a) ⋁ F for every filter G and element a.
FlatnessResult is_projection_flat(const ResiduatedLattice& lat, const FiltersLattice& fl, const Filter& f);

}  // namespace rlat
