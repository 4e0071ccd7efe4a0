#include <doctest.h>

#include "oracles.hpp"
#include "rlat/filters.hpp"
#include "rlat/fixtures.hpp"

using namespace rlat;

namespace {

std::set<std::string> S(std::initializer_list<const char*> xs) { return {xs.begin(), xs.end()}; }

Filter F(const ResiduatedLattice& L, std::string_view csv) { return make_filter(L, parse_subset(L, csv)); }

}  // namespace

TEST_CASE("filters of the example algebras") {
  auto check = [](const char* name, std::set<std::string> want) {
    auto L = fixture(name);
    auto fl = enumerate_filters(L);
    CHECK(oracle::render(L, fl.all()) == want);
    CHECK(oracle::render(L, oracle::all_filters(L)) == want);
  };
  check("A6", S({"{1}", "{a,b,d,1}", "{c,d,1}", "{d,1}", "{0,a,b,c,d,1}"}));
  check("B6", S({"{1}", "{a,c,1}", "{d,1}", "{0,a,b,c,d,1}"}));
  check("C6", S({"{1}", "{0,a,b,c,d,1}"}));
  check("A8", S({"{1}", "{a,c,d,e,f,1}", "{c,e,1}", "{f,1}", "{0,a,b,c,d,e,f,1}"}));
}

TEST_CASE("generated filter matches the intersection oracle") {
  for (const auto& name : fixture_names()) {
    auto L = fixture(name);
    for (std::uint32_t bits = 0; bits < (1U << L.size()); ++bits) {
      ElementSubset xs(bits);
      CHECK(generated_filter(L, xs).elements() == oracle::generated(L, xs));
    }
  }
}

TEST_CASE("filter lattice tables are meet and join") {
  for (const auto& name : fixture_names()) {
    auto L = fixture(name);
    auto fl = enumerate_filters(L);
    for (std::size_t i = 0; i < fl.size(); ++i)
      for (std::size_t j = 0; j < fl.size(); ++j) {
        CHECK(fl[fl.meet(i, j)].elements() == (fl[i].elements() & fl[j].elements()));
        CHECK(fl[fl.join(i, j)].elements() == oracle::generated(L, fl[i].elements() | fl[j].elements()));
      }
    CHECK(fl[0] == unit_filter(L));
    CHECK(fl[fl.size() - 1] == whole_filter(L));
  }
}

TEST_CASE("maximal filters and radical") {
  auto A6 = fixture("A6");
  auto fl = enumerate_filters(A6);
  CHECK(oracle::render(A6, maximal_filters(A6, fl)) == S({"{a,b,d,1}", "{c,d,1}"}));
  CHECK(format_subset(A6, radical(A6, fl, unit_filter(A6)).elements()) == "{d,1}");
  CHECK(radical(A6, fl, whole_filter(A6)) == whole_filter(A6));

  auto A8 = fixture("A8");
  auto fl8 = enumerate_filters(A8);
  CHECK(oracle::render(A8, maximal_filters(A8, fl8)) == S({"{a,c,d,e,f,1}"}));
}

TEST_CASE("annihilators") {
  auto A6 = fixture("A6");
  CHECK(format_subset(A6, annihilator(A6, *A6.find("a")).elements()) == "{1}");
  auto B6 = fixture("B6");
  CHECK(format_subset(B6, annihilator(B6, *B6.find("a")).elements()) == "{d,1}");
  CHECK(format_subset(B6, annihilator(B6, *B6.find("d")).elements()) == "{a,c,1}");
  CHECK(format_subset(B6, double_annihilator(B6, *B6.find("a")).elements()) == "{a,c,1}");
  // brute force: x^⊥ = {a | a∨x = 1}
  for (const auto& name : fixture_names()) {
    auto L = fixture(name);
    for (Element x = 0; x < L.size(); ++x) {
      ElementSubset want;
      for (Element a = 0; a < L.size(); ++a)
        if (oracle::join(L, a, x) == L.top()) want.insert(a);
      CHECK(annihilator(L, x).elements() == want);
    }
  }
}

TEST_CASE("alpha filters") {
  auto check = [](const char* name, std::set<std::string> want) {
    auto L = fixture(name);
    CHECK(oracle::render(L, enumerate_alpha(L, enumerate_filters(L))) == want);
  };
  check("A6", S({"{1}", "{0,a,b,c,d,1}"}));
  check("B6", S({"{1}", "{a,c,1}", "{d,1}", "{0,a,b,c,d,1}"}));
  check("C6", S({"{1}", "{0,a,b,c,d,1}"}));
  check("A8", S({"{1}", "{c,e,1}", "{f,1}", "{0,a,b,c,d,e,f,1}"}));

  auto A6 = fixture("A6");
  CHECK(alpha_closure(A6, parse_subset(A6, "d")) == whole_filter(A6));
}

TEST_CASE("quotient") {
  auto A6 = fixture("A6");
  auto q = quotient(A6, F(A6, "c,d,1"));
  CHECK(q.quotient.size() == 2);
  CHECK(q.classes.size() == 2);
  CHECK(format_subset(A6, q.classes[0]) == "{0,a,b}");
  CHECK(q.quotient.element_names() == std::vector<std::string>{"b", "1"});

  auto whole = quotient(A6, whole_filter(A6));
  CHECK(whole.degenerate);
  CHECK(whole.quotient.size() == 1);

  auto same = quotient(A6, unit_filter(A6));
  CHECK(same.quotient.size() == A6.size());

  // π_F is a homomorphism
  for (const auto& name : fixture_names()) {
    auto L = fixture(name);
    auto fl = enumerate_filters(L);
    for (const auto& f : fl.all()) {
      auto r = quotient(L, f);
      const auto& Q = r.quotient;
      for (Element x = 0; x < L.size(); ++x)
        for (Element y = 0; y < L.size(); ++y) {
          CHECK(r.projection[L.prod(x, y)] == Q.prod(r.projection[x], r.projection[y]));
          CHECK(r.projection[L.res(x, y)] == Q.res(r.projection[x], r.projection[y]));
          CHECK(r.projection[L.join(x, y)] == Q.join(r.projection[x], r.projection[y]));
        }
      CHECK(r.preimage(ElementSubset::single(Q.top())) == f.elements());
    }
  }
}

TEST_CASE("lattice ideals and omega filters") {
  auto A6 = fixture("A6");
  for (const auto& ideal : enumerate_lattice_ideals(A6)) CHECK(is_lattice_ideal(A6, ideal.elements()));
  CHECK(format_subset(A6, omega_filter(A6, principal_ideal(A6, *A6.find("c"))).elements()) == "{1}");
  auto B6 = fixture("B6");
  CHECK(format_subset(B6, omega_filter(B6, principal_ideal(B6, *B6.find("a"))).elements()) == "{d,1}");
  CHECK_THROWS_AS(make_lattice_ideal(A6, parse_subset(A6, "a")), std::invalid_argument);
  for (const auto& name : fixture_names()) {
    auto L = fixture(name);
    for (const auto& f : omega_filters(L)) CHECK(oracle::is_filter(L, f.elements()));
  }
}

TEST_CASE("projection flatness") {
  for (const auto& name : fixture_names()) {
    auto L = fixture(name);
    auto fl = enumerate_filters(L);
    CHECK(is_projection_flat(L, fl, unit_filter(L)).flat);
    CHECK(is_projection_flat(L, fl, whole_filter(L)).flat);
    for (const auto& f : fl.all()) {
      auto r = is_projection_flat(L, fl, f);
      if (r.flat) continue;
      REQUIRE(r.witness);
      const auto& w = *r.witness;
      auto a = ElementSubset::single(w.a);
      CHECK(coannihilator(L, filter_join(L, w.g, f), a).contains(w.x));
      CHECK_FALSE(filter_join(L, coannihilator(L, w.g, a), f).contains(w.x));
    }
  }
}

TEST_CASE("make_filter rejects non-filters") {
  auto A6 = fixture("A6");
  CHECK_THROWS_AS(F(A6, "a,1"), std::invalid_argument);
  CHECK_NOTHROW(F(A6, "d,1"));
}
