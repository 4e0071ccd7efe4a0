#pragma once

#include <stdexcept>
#include <vector>

#include "rlat/instance.hpp"
#include "rlat/topology.hpp"

namespace rlat {

enum class SigmaCheck {
  primary_only,
  /// Also evaluate every alternative description of σ and compare.
  all_formulas
};

/// Two descriptions of σ(F) disagree.
class FormulaMismatch : public std::logic_error {
 public:
  FormulaMismatch(const std::string& what, Element element, int formula)
      : std::logic_error(what), element_(element), formula_(formula) {}
  Element element() const { return element_; }
  /// Index of the alternative description that disagrees with the primary one.
  int formula() const { return formula_; }

 private:
  Element element_;
  int formula_;
};

/// σ(F) = {a | a^⊥ ⋁ F = A}.
Filter sigma(const Instance& inst, const Filter& f, SigmaCheck check = SigmaCheck::primary_only);

/// The alternative descriptions, numbered 1, 2, 4, 5, 6 (3 is the primary):
///   1: k(𝒢(h(F)) ∩ Min)
///   2: ⋂{D(P) | P ∈ h(F)}
///   4: {a | ¬b ∈ F for some b ∈ a^⊥}
///   5: ⋂{D(M) | M ∈ h_Max(F)}
///   6: ω(I_F), I_F = {a | a^⊥⊥ ⋁ F = A}
/// Empty intersections are A.
ElementSubset sigma_formula(const Instance& inst, const Filter& f, int formula);
inline constexpr int kSigmaFormulas[] = {1, 2, 3, 4, 5, 6};

bool is_pure(const Instance& inst, const Filter& f);
std::vector<Filter> pure_filters(const Instance& inst);

/// ρ(F): the largest pure filter inside F.
Filter rho(const Instance& inst, const Filter& f);

struct PureSpectrum {
  std::vector<Filter> points;
  FiniteSpace space;
  std::vector<bool> purely_maximal;
  std::vector<bool> purely_minimal;

  /// d_κ(F) = {P ∈ Spp | F ⊄ P}
  PointSet d_kappa(const Filter& f) const;
  /// h_κ(F) = {P ∈ Spp | F ⊆ P}
  PointSet h_kappa(const Filter& f) const;
};

/// Spp: proper pure filters that are meet-irreducible among pure filters.
PureSpectrum pure_spectrum(const Instance& inst);

/// Opens {d(F) | F pure} on Spec.
FiniteSpace d_topology(const Instance& inst);

/// P ↦ ρ(P) from Spec_h to Spp. Throws std::logic_error when the image
/// leaves Spp or ρ⁻¹(d_κ(F)) ≠ d(F) for some pure F.
OwnedPointMap pure_part_map(const Instance& inst);

}  // namespace rlat
