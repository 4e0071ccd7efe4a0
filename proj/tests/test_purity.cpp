#include <doctest.h>

#include "oracles.hpp"
#include "rlat/fixtures.hpp"
#include "rlat/purity.hpp"

using namespace rlat;

namespace {

std::set<std::string> S(std::initializer_list<const char*> xs) { return {xs.begin(), xs.end()}; }

Filter F(const ResiduatedLattice& L, std::string_view csv) { return make_filter(L, parse_subset(L, csv)); }

}  // namespace

TEST_CASE("pure filters of the example algebras") {
  auto check = [](const char* name, std::set<std::string> want) {
    Instance inst(fixture(name));
    CHECK(oracle::render(inst.lattice(), pure_filters(inst)) == want);
  };
  check("A6", S({"{1}", "{0,a,b,c,d,1}"}));
  check("B6", S({"{1}", "{a,c,1}", "{d,1}", "{0,a,b,c,d,1}"}));
  check("C6", S({"{1}", "{0,a,b,c,d,1}"}));
  check("A8", S({"{1}", "{0,a,b,c,d,e,f,1}"}));
}

TEST_CASE("sigma examples") {
  Instance a6(fixture("A6"));
  CHECK(format_subset(a6.lattice(), sigma(a6, F(a6.lattice(), "c,d,1")).elements()) == "{1}");
  CHECK(sigma(a6, whole_filter(a6.lattice())) == whole_filter(a6.lattice()));
  Instance b6(fixture("B6"));
  CHECK(format_subset(b6.lattice(), sigma(b6, F(b6.lattice(), "a,c,1")).elements()) == "{a,c,1}");
  Instance a8(fixture("A8"));
  CHECK_FALSE(is_pure(a8, F(a8.lattice(), "c,e,1")));
  CHECK(is_pure(a8, unit_filter(a8.lattice())));
  CHECK(is_pure(b6, F(b6.lattice(), "d,1")));
}

TEST_CASE("all descriptions of sigma agree") {
  for (const auto& name : fixture_names()) {
    Instance inst(fixture(name));
    for (const auto& f : inst.filters().all()) CHECK_NOTHROW(sigma(inst, f, SigmaCheck::all_formulas));
  }
}

TEST_CASE("rho") {
  Instance a6(fixture("A6"));
  CHECK(rho(a6, F(a6.lattice(), "a,b,d,1")) == unit_filter(a6.lattice()));
  CHECK(rho(a6, whole_filter(a6.lattice())) == whole_filter(a6.lattice()));
  Instance a8(fixture("A8"));
  CHECK(rho(a8, F(a8.lattice(), "a,c,d,e,f,1")) == unit_filter(a8.lattice()));
}

TEST_CASE("pure spectrum") {
  Instance b6(fixture("B6"));
  auto sp = pure_spectrum(b6);
  CHECK(oracle::render(b6.lattice(), sp.points) == S({"{a,c,1}", "{d,1}"}));
  CHECK(sp.space.opens().size() == 4);
  CHECK(sp.purely_maximal == std::vector<bool>{true, true});

  for (const char* name : {"A6", "C6"}) {
    Instance inst(fixture(name));
    auto one = pure_spectrum(inst);
    REQUIRE(one.points.size() == 1);
    CHECK(one.points[0] == unit_filter(inst.lattice()));
    CHECK(clopens(one.space).size() == 2);
  }
}

TEST_CASE("D-topology") {
  Instance a6(fixture("A6"));
  auto dt = d_topology(a6);
  CHECK(dt.opens().size() == 2);
  auto hk = hull_kernel_space(a6.lattice(), a6.spec(), HullFlavor::h);
  CHECK(hk.opens().size() > 2);

  Instance b6(fixture("B6"));
  CHECK(d_topology(b6) == hull_kernel_space(b6.lattice(), b6.spec(), HullFlavor::h));
}

TEST_CASE("pure part map") {
  Instance a6(fixture("A6"));
  auto m = pure_part_map(a6);
  CHECK(m.image == std::vector<std::size_t>(a6.spec().size(), 0));
  CHECK(map_analysis(m.view()).continuous);

  Instance b6(fixture("B6"));
  auto mb = pure_part_map(b6);
  for (std::size_t i = 0; i < b6.spec().size(); ++i) CHECK(std::get<Filter>(mb.target.label(mb.image[i])) == b6.spec()[i]);

  Instance a8(fixture("A8"));
  auto m8 = pure_part_map(a8);
  CHECK(m8.image.size() == 3);
  for (auto i : m8.image) CHECK(std::get<Filter>(m8.target.label(i)) == unit_filter(a8.lattice()));
}
