#include <doctest.h>

#include "oracles.hpp"
#include "rlat/fixtures.hpp"
#include "rlat/instance.hpp"

using namespace rlat;

namespace {

std::set<std::string> S(std::initializer_list<const char*> xs) { return {xs.begin(), xs.end()}; }

Filter F(const ResiduatedLattice& L, std::string_view csv) { return make_filter(L, parse_subset(L, csv)); }

std::set<std::string> points_of(const ResiduatedLattice& L, const std::vector<Filter>& pts, PointSet s) {
  std::set<std::string> out;
  for (auto i : s) out.insert(format_subset(L, pts[i].elements()));
  return out;
}

}  // namespace

TEST_CASE("spectra of the example algebras") {
  struct Row {
    const char* name;
    std::set<std::string> max, min;
  };
  const Row rows[] = {
      {"A6", S({"{a,b,d,1}", "{c,d,1}"}), S({"{1}"})},
      {"B6", S({"{a,c,1}", "{d,1}"}), S({"{a,c,1}", "{d,1}"})},
      {"C6", S({"{1}"}), S({"{1}"})},
      {"A8", S({"{a,c,d,e,f,1}"}), S({"{c,e,1}", "{f,1}"})},
  };
  for (const auto& r : rows) {
    Instance inst(fixture(r.name));
    const auto& L = inst.lattice();
    CHECK(oracle::render(L, inst.max()) == r.max);
    CHECK(oracle::render(L, inst.min()) == r.min);
  }
  Instance b6(fixture("B6"));
  CHECK(oracle::render(b6.lattice(), b6.spec()) == S({"{a,c,1}", "{d,1}"}));
  Instance a6(fixture("A6"));
  CHECK(oracle::render(a6.lattice(), a6.spec()) == S({"{1}", "{a,b,d,1}", "{c,d,1}"}));
}

TEST_CASE("primality agrees with meet-irreducibility") {
  // Filter lattices of residuated lattices are distributive.
  for (const auto& name : fixture_names()) {
    Instance inst(fixture(name));
    for (const auto& f : inst.filters().all())
      CHECK(is_prime(inst.lattice(), f) == is_meet_irreducible(inst.lattice(), inst.filters(), f));
  }
}

TEST_CASE("minimal primes over a set") {
  Instance inst(fixture("A8"));
  const auto& L = inst.lattice();
  auto sel = spectrum(L, inst.filters(), SpectrumKind::minimal_prime_over, parse_subset(L, "c"));
  CHECK(oracle::render(L, sel.points) == S({"{c,e,1}"}));
  sel = spectrum(L, inst.filters(), SpectrumKind::minimal_prime_over, parse_subset(L, "a"));
  CHECK(oracle::render(L, sel.points) == S({"{a,c,d,e,f,1}"}));
}

TEST_CASE("D operator") {
  Instance a6(fixture("A6"));
  const auto& L6 = a6.lattice();
  CHECK(format_subset(L6, D_operator(L6, a6.filters(), F(L6, "a,b,d,1")).elements()) == "{1}");
  CHECK_THROWS_AS(D_operator(L6, a6.filters(), F(L6, "d,1")), NotPrimeError);

  Instance b6(fixture("B6"));
  const auto& LB = b6.lattice();
  CHECK(format_subset(LB, D_operator(LB, b6.filters(), F(LB, "d,1")).elements()) == "{d,1}");

  Instance a8(fixture("A8"));
  const auto& L8 = a8.lattice();
  CHECK(format_subset(L8, D_operator(L8, a8.filters(), F(L8, "a,c,d,e,f,1")).elements()) == "{1}");

  for (const auto& name : fixture_names()) {
    Instance inst(fixture(name));
    for (const auto& p : inst.spec()) {
      bool minimal = std::find(inst.min().begin(), inst.min().end(), p) != inst.min().end();
      CHECK((D_operator(inst.lattice(), inst.filters(), p) == p) == minimal);
    }
  }
}

TEST_CASE("hull-kernel topologies") {
  Instance b6(fixture("B6"));
  auto md = hull_kernel_space(b6.lattice(), b6.min(), HullFlavor::d);
  CHECK(md.opens().size() == 4);

  auto empty = hull_kernel_space(b6.lattice(), {}, HullFlavor::h);
  CHECK(empty.size() == 0);
  CHECK(empty.opens().size() == 1);

  Instance a6(fixture("A6"));
  auto sh = hull_kernel_space(a6.lattice(), a6.spec(), HullFlavor::h);
  auto one = *sh.find(F(a6.lattice(), "1"));
  CHECK(sh.point_closure(one) == sh.points());
  auto sep = separation_report(sh);
  CHECK(sep.t0);
  CHECK_FALSE(sep.t1);
}

TEST_CASE("stability and support") {
  Instance a6(fixture("A6"));
  const auto& L = a6.lattice();
  const auto& spec = a6.spec();
  PointSet unit_point;
  for (std::uint32_t i = 0; i < spec.size(); ++i)
    if (spec[i] == unit_filter(L)) unit_point.insert(i);
  auto st = stability(spec, unit_point, StabilityMode::specialization);
  CHECK(st.closure == PointSet::full(spec.size()));
  CHECK_FALSE(st.is_stable);
  CHECK(stability(spec, {}, StabilityMode::specialization).is_stable);

  auto dF = dual_hull(spec, parse_subset(L, "d,1"));
  CHECK(dF == unit_point);
  CHECK_FALSE(stability(spec, dF, StabilityMode::specialization).is_stable);

  CHECK(support(L, spec, unit_filter(L)).empty());
  CHECK(points_of(L, spec, support(L, spec, F(L, "d,1"))) == S({"{1}", "{a,b,d,1}", "{c,d,1}"}));

  Instance b6(fixture("B6"));
  const auto& LB = b6.lattice();
  auto supp = support(LB, b6.spec(), F(LB, "d,1"));
  CHECK(points_of(LB, b6.spec(), supp) == S({"{a,c,1}"}));
  CHECK(supp == dual_hull(b6.spec(), parse_subset(LB, "d,1")));
}
