#include <doctest.h>

#include "oracles.hpp"
#include "rlat/classify.hpp"
#include "rlat/fixtures.hpp"
#include "rlat/rlat_format.hpp"

using namespace rlat;

namespace {

std::set<std::string> S(std::initializer_list<const char*> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("boolean centers") {
  auto check = [](const char* name, const char* want) {
    auto L = fixture(name);
    auto bc = boolean_center(L);
    CHECK(format_subset(L, bc.elements) == want);
    for (auto [e, c] : bc.complements) CHECK(c == L.neg(e));
  };
  check("A6", "{0,1}");
  check("B6", "{0,a,d,1}");
  check("C6", "{0,1}");
  check("A8", "{0,1}");
}

TEST_CASE("direct summands") {
  Instance b6(fixture("B6"));
  CHECK(oracle::render(b6.lattice(), direct_summands(b6)) == S({"{1}", "{a,c,1}", "{d,1}", "{0,a,b,c,d,1}"}));
  Instance a6(fixture("A6"));
  CHECK(oracle::render(a6.lattice(), direct_summands(a6)) == S({"{1}", "{0,a,b,c,d,1}"}));
  for (const auto& name : fixture_names()) {
    Instance inst(fixture(name));
    CHECK(oracle::render(inst.lattice(), direct_summands(inst)) == oracle::render(inst.lattice(), pure_filters(inst)));
  }
}

TEST_CASE("classification of the example algebras") {
  struct Row {
    const char* name;
    bool gelfand, mp, hyper, indecomposable;
  };
  const Row rows[] = {
      {"A6", false, true, false, true},
      {"B6", true, true, true, false},
      {"C6", true, true, true, true},
      {"A8", true, false, false, true},
  };
  for (const auto& r : rows) {
    CAPTURE(r.name);
    Instance inst(fixture(r.name));
    auto rep = classify(inst);
    CHECK(rep.gelfand.holds == r.gelfand);
    CHECK(rep.mp.holds == r.mp);
    CHECK(rep.hyperarchimedean.holds == r.hyper);
    CHECK(rep.directly_indecomposable.holds == r.indecomposable);
    CHECK(rep.boolean_center.contains(inst.lattice().bottom()));
    CHECK(rep.boolean_center.contains(inst.lattice().top()));
  }
}

TEST_CASE("classification witnesses re-verify") {
  Instance a6(fixture("A6"));
  auto g = classify(a6).gelfand;
  REQUIRE(g.witness.filters.size() == 3);
  const auto& p = g.witness.filters[0];
  CHECK(p == unit_filter(a6.lattice()));
  for (std::size_t i = 1; i < 3; ++i) {
    CHECK(p.is_subset_of(g.witness.filters[i]));
    CHECK(std::find(a6.max().begin(), a6.max().end(), g.witness.filters[i]) != a6.max().end());
  }

  Instance a8(fixture("A8"));
  auto m = classify(a8).mp;
  REQUIRE(m.witness.filters.size() == 3);
  for (std::size_t i = 1; i < 3; ++i) {
    CHECK(m.witness.filters[i].is_subset_of(m.witness.filters[0]));
    CHECK(std::find(a8.min().begin(), a8.min().end(), m.witness.filters[i]) != a8.min().end());
  }

  Instance b6(fixture("B6"));
  auto di = classify(b6).directly_indecomposable;
  REQUIRE(di.witness.elements.size() == 2);
  const auto& L = b6.lattice();
  CHECK(L.join(di.witness.elements[0], di.witness.elements[1]) == L.top());
  CHECK(L.meet(di.witness.elements[0], di.witness.elements[1]) == L.bottom());
}

TEST_CASE("Grothendieck correspondence") {
  Instance b6(fixture("B6"));
  CHECK(grothendieck_check(b6).size() == 4);
  Instance a6(fixture("A6"));
  CHECK(grothendieck_check(a6).size() == 2);
  Instance chain(validate_or_throw(parse_rlat("lattice T\nelements 0 1\nbottom 0\ntop 1\ncover 0 1\nend\n")));
  CHECK(grothendieck_check(chain).size() == 2);
}

TEST_CASE("Gelfand structure") {
  for (const char* name : {"B6", "A8", "C6"}) {
    CAPTURE(name);
    Instance inst(fixture(name));
    auto rep = gelfand_structure(inst);
    for (const auto& c : rep.clauses) CHECK_MESSAGE(c.holds, c.id);
  }
  Instance a6(fixture("A6"));
  CHECK_THROWS_AS(gelfand_structure(a6), NotApplicable);
  bool some_fail = false;
  for (const auto& c : evaluate_gelfand_clauses(a6)) some_fail |= !c.holds;
  CHECK(some_fail);
}

TEST_CASE("mp structure") {
  for (const char* name : {"B6", "A6", "C6"}) {
    CAPTURE(name);
    Instance inst(fixture(name));
    auto rep = mp_structure(inst);
    for (const auto& c : rep.clauses) CHECK_MESSAGE(c.holds, c.id);
  }
  Instance a8(fixture("A8"));
  try {
    mp_structure(a8);
    FAIL("expected refusal");
  } catch (const NotApplicable& e) {
    CHECK(e.witness().filters.size() == 3);
  }
}
