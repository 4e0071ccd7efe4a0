#pragma once

#include <stdexcept>
#include <vector>

#include "rlat/filters.hpp"
#include "rlat/topology.hpp"

namespace rlat {

enum class SpectrumKind { prime, maximal, minimal_prime, minimal_prime_over };

const char* to_string(SpectrumKind kind);

struct SpectrumSelection {
  SpectrumKind kind = SpectrumKind::prime;
  /// X for minimal_prime_over, empty otherwise.
  ElementSubset over;
  std::vector<Filter> points;
};

/// Proper, and x∨y ∈ P implies x ∈ P or y ∈ P.
bool is_prime(const ResiduatedLattice& lat, const Filter& f);
/// F ≠ A and F = G∩H implies F = G or F = H, inside the filter lattice.
bool is_meet_irreducible(const ResiduatedLattice& lat, const FiltersLattice& fl, const Filter& f);

SpectrumSelection spectrum(const ResiduatedLattice& lat, const FiltersLattice& fl, SpectrumKind kind,
                           ElementSubset over = {});

class NotPrimeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// D(P) = {a | a∨y = 1 for some y ∉ P}. Cross-checked against the
/// intersection of the primes contained in P.
Filter D_operator(const ResiduatedLattice& lat, const FiltersLattice& fl, const Filter& p);

/// h(X) = {P | X ⊆ P}
PointSet hull(const std::vector<Filter>& points, ElementSubset xs);
/// d(X) = {P | X ⊄ P}
PointSet dual_hull(const std::vector<Filter>& points, ElementSubset xs);

enum class HullFlavor { h, d, patch };

const char* to_string(HullFlavor flavor);

/// h: the sets h(x) form a closed basis. d: they form an open basis.
/// patch: join of the two.
FiniteSpace hull_kernel_space(const ResiduatedLattice& lat, const std::vector<Filter>& points, HullFlavor flavor);

enum class StabilityMode { specialization, generalization };

struct StabilityResult {
  PointSet closure;
  bool is_stable = true;
};

/// 𝒮 adds every point containing a member, 𝒢 every point contained in one.
StabilityResult stability(const std::vector<Filter>& points, PointSet subset, StabilityMode mode);

/// Supp(F) = ⋃_{f∈F} h(f^⊥), over the given points.
PointSet support(const ResiduatedLattice& lat, const std::vector<Filter>& points, const Filter& f);

}  // namespace rlat
