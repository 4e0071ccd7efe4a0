#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rlat/bitset.hpp"

namespace rlat {

/// Unvalidated description of a finite residuated lattice, as read from a
/// lattice file or produced by a generator.
struct RawTables {
  std::string name;
  std::vector<std::string> element_names;
  Element bottom = 0;
  Element top = 0;
  /// Order relations x ≤ y; usually Hasse covers. The validator takes the
  /// reflexive-transitive closure.
  std::vector<std::pair<Element, Element>> order;
  /// Row-major n×n product table. Missing entries are reported.
  std::vector<std::optional<Element>> prod;
  /// Optional residuum rows used only as a cross-check.
  std::vector<std::optional<Element>> res;
};

enum class ViolationKind {
  Malformed,        // shape problems: sizes, missing entries, bad names
  NotALattice,      // order is not a partial order or lacks a join/meet
  BoundsMismatch,   // declared bottom/top disagree with the order
  NotMonoid,        // commutativity, unit or associativity
  NotAdjoint,       // x⊙z ≤ y ⇔ z ≤ x→y fails, or x⊙y ≰ x∧y
  ResiduumGap,      // {z | x⊙z ≤ y} has no maximum
  ResTableMismatch  // supplied residuum row disagrees with the derived one
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string axiom;
  std::vector<Element> witness;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
  const Violation* first(ViolationKind kind) const;
};

class ResiduatedLattice;
struct ValidationResult;

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

class SizeLimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ValidateOptions {
  /// Accept the one-element algebra (0 = 1). Only quotients use this.
  bool allow_degenerate = false;
};

/// Checks every axiom and derives the residuum. On failure the report lists
/// one concrete witness per violated axiom.
ValidationResult validate(const RawTables& raw, ValidateOptions opts = {});

/// Same as validate() but throws ValidationError on failure.
ResiduatedLattice validate_or_throw(const RawTables& raw, ValidateOptions opts = {});

/// A validated finite residuated lattice. Immutable; every operation is a
/// table lookup.
class ResiduatedLattice {
 public:
  std::size_t size() const { return names_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& element_names() const { return names_; }
  const std::string& element_name(Element x) const { return names_[x]; }
  std::optional<Element> find(std::string_view token) const;

  Element bottom() const { return bottom_; }
  Element top() const { return top_; }
  bool degenerate() const { return size() == 1; }
  ElementSubset carrier() const { return ElementSubset::full(size()); }

  bool leq(Element x, Element y) const { return up_[x].contains(y); }
  /// ↑x
  ElementSubset up(Element x) const { return up_[x]; }
  /// ↓x
  ElementSubset down(Element x) const { return down_[x]; }

  Element join(Element x, Element y) const { return join_[x * size() + y]; }
  Element meet(Element x, Element y) const { return meet_[x * size() + y]; }
  Element prod(Element x, Element y) const { return prod_[x * size() + y]; }
  Element res(Element x, Element y) const { return res_[x * size() + y]; }

  /// ¬x = x → 0
  Element neg(Element x) const { return res(x, bottom_); }
  /// x^k, with x^0 = 1.
  Element power(Element x, unsigned k) const;

  /// Hasse covers (x, y): x ⋖ y.
  std::vector<std::pair<Element, Element>> covers() const;

  /// Raw description that round-trips through validate().
  RawTables to_raw() const;

  bool operator==(const ResiduatedLattice&) const = default;

 private:
  friend ValidationResult validate(const RawTables&, ValidateOptions);
  ResiduatedLattice() = default;

  std::string name_;
  std::vector<std::string> names_;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<ElementSubset> up_;
  std::vector<ElementSubset> down_;
  std::vector<Element> join_;
  std::vector<Element> meet_;
  std::vector<Element> prod_;
  std::vector<Element> res_;
};

struct ValidationResult {
  std::optional<ResiduatedLattice> lattice;
  ValidationReport report;
};

/// x → y, the largest z with x⊙z ≤ y.
inline Element residuum(const ResiduatedLattice& lat, Element x, Element y) { return lat.res(x, y); }

struct DerivedOps {
  Element negation;
  Element power;
};

DerivedOps derived_element_ops(const ResiduatedLattice& lat, Element x, unsigned k);

/// Componentwise product. Throws SizeLimitError when the result would exceed
/// kMaxElements or either factor is degenerate.
ResiduatedLattice direct_product(const ResiduatedLattice& a, const ResiduatedLattice& b);

/// Renders a subset as {tok,tok,...} in element order.
std::string format_subset(const ResiduatedLattice& lat, ElementSubset s);

/// Parses "a,b,1" into a subset. Throws std::invalid_argument on unknown tokens.
ElementSubset parse_subset(const ResiduatedLattice& lat, std::string_view csv);

}  // namespace rlat
