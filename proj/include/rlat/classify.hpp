#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rlat/instance.hpp"
#include "rlat/purity.hpp"

namespace rlat {

class CenterMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct BooleanCenter {
  ElementSubset elements;
  /// (e, ¬e) for each e, in element order.
  std::vector<std::pair<Element, Element>> complements;
};

/// Complemented elements of the underlying lattice, cross-checked against
/// {a | a∨¬a = 1}. Also checks e⊙x = e∧x for every e in the center.
BooleanCenter boolean_center(const ResiduatedLattice& lat);

/// Filters F with F ⋁ F^⊥ = A, cross-checked against {𝔽(e) | e ∈ β} and
/// against the complemented members of the filter lattice.
std::vector<Filter> direct_summands(const Instance& inst);

/// A re-checkable certificate. filters/elements hold the configuration named
/// by the text.
struct Witness {
  std::string text;
  std::vector<Filter> filters;
  std::vector<Element> elements;
};

struct Flag {
  bool holds = true;
  Witness witness;
};

struct ClassificationReport {
  Flag hyperarchimedean;
  Flag gelfand;
  Flag mp;
  Flag directly_indecomposable;
  ElementSubset boolean_center;
  std::vector<Filter> direct_summands;
};

/// Throws std::logic_error if two characterizations of the same flag disagree.
ClassificationReport classify(const Instance& inst);

class BijectionFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct GrothendieckPair {
  Element e;
  Filter summand;
  PointSet clopen;
};

/// e ↦ d_κ(𝔽(e)) from β onto the clopens of Spp.
std::vector<GrothendieckPair> grothendieck_check(const Instance& inst);

struct Clause {
  std::string id;
  std::string statement;
  bool holds = true;
  std::string witness;
  std::string note;
};

/// Every clause is evaluated, whatever the classification.
std::vector<Clause> evaluate_gelfand_clauses(const Instance& inst);
std::vector<Clause> evaluate_mp_clauses(const Instance& inst);

/// The input does not have the structure a report presupposes.
class NotApplicable : public std::invalid_argument {
 public:
  NotApplicable(const std::string& what, Witness w) : std::invalid_argument(what), witness_(std::move(w)) {}
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

/// A clause failed on an input that has the presupposed structure.
class CertificateFailure : public std::logic_error {
 public:
  explicit CertificateFailure(Clause c) : std::logic_error(c.id + ": " + c.witness), clause_(std::move(c)) {}
  const Clause& clause() const { return clause_; }

 private:
  Clause clause_;
};

struct StructureReport {
  std::string kind;
  std::vector<Clause> clauses;
};

/// Refuses (NotApplicable) unless Gelfand; throws CertificateFailure on the
/// first failing clause.
StructureReport gelfand_structure(const Instance& inst);
/// Same for mp.
StructureReport mp_structure(const Instance& inst);

}  // namespace rlat
