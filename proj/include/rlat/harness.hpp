#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rlat/lattice.hpp"

namespace rlat {

/// Recipe for one instance. Products hold exactly two factors.
struct Generator {
  enum class Kind { fixture, godel_chain, lukasiewicz_chain, product };

  Kind kind = Kind::fixture;
  std::string fixture_name;
  std::size_t n = 0;
  std::vector<Generator> factors;

  static Generator fixture(std::string name) { return {Kind::fixture, std::move(name), 0, {}}; }
  static Generator godel(std::size_t n) { return {Kind::godel_chain, {}, n, {}}; }
  static Generator lukasiewicz(std::size_t n) { return {Kind::lukasiewicz_chain, {}, n, {}}; }
  static Generator product(Generator a, Generator b) { return {Kind::product, {}, 0, {std::move(a), std::move(b)}}; }

  /// "A6", "G4", "L3", "G2xA6".
  std::string id() const;
  /// Carrier size without building the algebra.
  std::size_t size() const;
};

/// n-chain 0 < x1 < ... < 1 with x⊙y = x∧y. Throws SizeLimitError outside [2, 20].
RawTables godel_chain_tables(std::size_t n);
/// n-chain with i⊙j = max(0, i+j-(n-1)) on indices.
RawTables lukasiewicz_chain_tables(std::size_t n);

ResiduatedLattice godel_chain(std::size_t n);
ResiduatedLattice lukasiewicz_chain(std::size_t n);

ResiduatedLattice generate(const Generator& g);
std::vector<ResiduatedLattice> generate(const std::vector<Generator>& gs);

/// The four fixtures, G2..G8, L2..L8, then every unordered pair (self-pairs
/// included) of those whose product has at most 16 elements.
std::vector<Generator> standard_family();

enum class Suite { core, purity, spp, gelfand, mp, all };

const char* to_string(Suite s);
std::optional<Suite> parse_suite(std::string_view s);

enum class Verdict { pass, fail, not_applicable };

const char* to_string(Verdict v);

struct PropertyInfo {
  std::string id;
  Suite suite;
  std::string statement;
};

/// One entry per property, in report order.
const std::vector<PropertyInfo>& property_registry();

/// Property ids the registry is expected to cover, one per line in the
/// embedded manifest.
const std::vector<std::string>& property_manifest();

struct InventoryResult {
  std::vector<std::string> missing;     // in the manifest, not registered
  std::vector<std::string> extra;       // registered, not in the manifest
  std::vector<std::string> duplicates;  // registered more than once

  bool ok() const { return missing.empty() && extra.empty() && duplicates.empty(); }
  std::string describe() const;
};

InventoryResult inventory_check();

class InventoryError : public std::runtime_error {
 public:
  explicit InventoryError(InventoryResult r) : std::runtime_error(r.describe()), result_(std::move(r)) {}
  const InventoryResult& result() const { return result_; }

 private:
  InventoryResult result_;
};

struct PropertyVerdict {
  std::string property;
  Verdict verdict = Verdict::pass;
  /// Counterexample for fail, reason for not_applicable.
  std::string witness;
};

struct InstanceVerdicts {
  std::string instance;
  /// Empty when the tables validate.
  std::string validation_error;
  std::vector<PropertyVerdict> verdicts;
};

struct SuiteReport {
  Suite suite = Suite::all;
  std::vector<InstanceVerdicts> instances;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t not_applicable = 0;

  bool ok() const { return failed == 0; }
};

/// Validates each input first; an invalid input gets the validation
/// message and not_applicable for every selected property.
/// Throws InventoryError if the registry and the manifest disagree.
SuiteReport run_theorem_suite(const std::vector<RawTables>& inputs, Suite suite);
SuiteReport run_theorem_suite(const std::vector<ResiduatedLattice>& instances, Suite suite);

/// Plain-text rendering, one line per verdict.
std::string format_report(const SuiteReport& r);

}  // namespace rlat
