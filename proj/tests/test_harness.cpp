#include <doctest.h>

#include <algorithm>
#include <set>

#include "rlat/fixtures.hpp"
#include "rlat/harness.hpp"
#include "rlat/rlat_format.hpp"

using namespace rlat;

namespace {

Element tok(const ResiduatedLattice& L, const char* t) { return *L.find(t); }

}  // namespace

TEST_CASE("chains validate") {
  for (std::size_t n = 2; n <= 20; ++n) {
    CHECK(godel_chain(n).size() == n);
    CHECK(lukasiewicz_chain(n).size() == n);
  }
  CHECK_THROWS_AS(godel_chain(1), SizeLimitError);
  CHECK_THROWS_AS(lukasiewicz_chain(21), SizeLimitError);
}

TEST_CASE("two-element Gödel chain is Boolean") {
  auto G2 = godel_chain(2);
  CHECK(G2.element_names() == std::vector<std::string>{"0", "1"});
  CHECK(G2.neg(0) == 1);
  CHECK(G2.neg(1) == 0);
  CHECK(G2.prod(1, 1) == 1);
}

TEST_CASE("three-element Łukasiewicz chain") {
  auto L3 = lukasiewicz_chain(3);
  const Element m = tok(L3, "x1");
  CHECK(L3.prod(m, m) == L3.bottom());
  CHECK(L3.neg(m) == m);
  CHECK(L3.res(m, L3.bottom()) == m);
}

TEST_CASE("standard family") {
  auto fam = standard_family();
  std::set<std::string> ids;
  for (const auto& g : fam) {
    CHECK(ids.insert(g.id()).second);
    CHECK(g.size() <= 16);
  }
  CHECK(ids.count("A6"));
  CHECK(ids.count("G8"));
  CHECK(ids.count("A8xL2"));
  CHECK_FALSE(ids.count("G3xA6"));
  auto lats = generate(fam);
  REQUIRE(lats.size() == fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) CHECK(lats[i].size() == fam[i].size());
}

TEST_CASE("inventory matches the manifest") {
  auto inv = inventory_check();
  CHECK_MESSAGE(inv.ok(), inv.describe());
  CHECK(property_registry().size() == property_manifest().size());
}

TEST_CASE("full suite on the example algebras") {
  std::vector<ResiduatedLattice> fx;
  for (const auto& n : fixture_names()) fx.push_back(fixture(n));
  auto r = run_theorem_suite(fx, Suite::all);
  CHECK_MESSAGE(r.ok(), format_report(r));
  CHECK(r.instances.size() == 4);
  for (const auto& inst : r.instances) CHECK(inst.verdicts.size() == property_registry().size());
}

TEST_CASE("suite selection") {
  std::vector<ResiduatedLattice> one{fixture("B6")};
  auto r = run_theorem_suite(one, Suite::core);
  for (const auto& v : r.instances[0].verdicts) {
    auto it = std::find_if(property_registry().begin(), property_registry().end(),
                           [&](const PropertyInfo& p) { return p.id == v.property; });
    REQUIRE(it != property_registry().end());
    CHECK(it->suite == Suite::core);
  }
}

TEST_CASE("conditional properties are skipped off their class") {
  std::vector<ResiduatedLattice> a6{fixture("A6")};
  auto r = run_theorem_suite(a6, Suite::gelfand);
  bool saw_na = false;
  for (const auto& v : r.instances[0].verdicts)
    if (v.property == "rhosigmanorg") {
      CHECK(v.verdict == Verdict::not_applicable);
      saw_na = true;
    }
  CHECK(saw_na);
}

TEST_CASE("invalid input is reported, not evaluated") {
  auto raw = parse_rlat(fixture_text("A6"));
  raw.name = "A6-mutated";
  const auto n = raw.element_names.size();
  // a⊙c = a breaks adjointness
  Element a = 1, c = 3;
  for (Element i = 0; i < n; ++i) {
    if (raw.element_names[i] == "a") a = i;
    if (raw.element_names[i] == "c") c = i;
  }
  raw.prod[a * n + c] = a;
  raw.prod[c * n + a] = a;
  auto r = run_theorem_suite(std::vector<RawTables>{raw}, Suite::core);
  REQUIRE(r.instances.size() == 1);
  CHECK_FALSE(r.instances[0].validation_error.empty());
  CHECK(r.failed == 0);
  CHECK(r.passed == 0);
  for (const auto& v : r.instances[0].verdicts) CHECK(v.verdict == Verdict::not_applicable);
}

TEST_CASE("reports are deterministic") {
  std::vector<ResiduatedLattice> in{fixture("A8"), lukasiewicz_chain(4)};
  CHECK(format_report(run_theorem_suite(in, Suite::all)) == format_report(run_theorem_suite(in, Suite::all)));
}

TEST_CASE("suite names") {
  CHECK(parse_suite("spp") == Suite::spp);
  CHECK_FALSE(parse_suite("everything"));
  CHECK(std::string(to_string(Suite::mp)) == "mp");
}
