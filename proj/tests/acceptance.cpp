// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rlat/classify.hpp"
#include "rlat/fixtures.hpp"
#include "rlat/harness.hpp"
#include "rlat/purity.hpp"

using namespace rlat;

namespace {

struct Expected {
  const char* name;
  std::set<std::string> filters, max, min, alpha, pure;
  const char* beta;
  bool gelfand, mp;
};

const std::vector<Expected> kTables = {
    {"A6",
     {"{1}", "{a,b,d,1}", "{c,d,1}", "{d,1}", "{0,a,b,c,d,1}"},
     {"{a,b,d,1}", "{c,d,1}"},
     {"{1}"},
     {"{1}", "{0,a,b,c,d,1}"},
     {"{1}", "{0,a,b,c,d,1}"},
     "{0,1}",
     false,
     true},
    {"B6",
     {"{1}", "{a,c,1}", "{d,1}", "{0,a,b,c,d,1}"},
     {"{a,c,1}", "{d,1}"},
     {"{a,c,1}", "{d,1}"},
     {"{1}", "{a,c,1}", "{d,1}", "{0,a,b,c,d,1}"},
     {"{1}", "{a,c,1}", "{d,1}", "{0,a,b,c,d,1}"},
     "{0,a,d,1}",
     true,
     true},
    {"C6", {"{1}", "{0,a,b,c,d,1}"}, {"{1}"}, {"{1}"}, {"{1}", "{0,a,b,c,d,1}"}, {"{1}", "{0,a,b,c,d,1}"}, "{0,1}",
     true, true},
    {"A8",
     {"{1}", "{a,c,d,e,f,1}", "{c,e,1}", "{f,1}", "{0,a,b,c,d,e,f,1}"},
     {"{a,c,d,e,f,1}"},
     {"{c,e,1}", "{f,1}"},
     {"{1}", "{c,e,1}", "{f,1}", "{0,a,b,c,d,e,f,1}"},
     {"{1}", "{0,a,b,c,d,e,f,1}"},
     "{0,1}",
     true,
     false},
};

std::set<std::string> rendered(const ResiduatedLattice& L, const std::vector<Filter>& fs) {
  std::set<std::string> out;
  for (const auto& f : fs) out.insert(format_subset(L, f.elements()));
  return out;
}

std::string listing(const std::set<std::string>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : " ") + x;
  return out;
}

// Collects the first few problems of a criterion.
struct Log {
  std::vector<std::string> problems;
  std::size_t checks = 0;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (!ok && problems.size() < 5) problems.push_back(what());
  }
  template <class T>
  void same(const T& got, const T& want, const std::string& what) {
    expect(got == want, [&] { return what; });
  }
};

bool subset_of(const Filter& a, const Filter& b) { return a.elements().is_subset_of(b.elements()); }

PointSet d_of(const std::vector<Filter>& points, const Filter& f) {
  PointSet s;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!subset_of(f, points[i])) s.insert(static_cast<std::uint32_t>(i));
  return s;
}

std::optional<std::size_t> index_in(const std::vector<Filter>& v, const Filter& f) {
  auto it = std::find(v.begin(), v.end(), f);
  if (it == v.end()) return std::nullopt;
  return static_cast<std::size_t>(it - v.begin());
}

const Expected& table(const std::string& name) {
  for (const auto& t : kTables)
    if (name == t.name) return t;
  throw std::out_of_range(name);
}

// ------------------------------------------------------------------ criteria

void c1_filters(Log& log, const std::vector<Instance>& fixtures) {
  for (const auto& inst : fixtures) {
    const auto& L = inst.lattice();
    auto got = rendered(L, enumerate_filters(L).all());
    log.same(got, table(L.name()).filters, L.name() + " filters: " + listing(got));
  }
}

void c2_spectra(Log& log, const std::vector<Instance>& fixtures) {
  for (const auto& inst : fixtures) {
    const auto& L = inst.lattice();
    const auto& t = table(L.name());
    auto fl = enumerate_filters(L);
    auto mx = rendered(L, spectrum(L, fl, SpectrumKind::maximal).points);
    auto mn = rendered(L, spectrum(L, fl, SpectrumKind::minimal_prime).points);
    log.same(mx, t.max, L.name() + " Max: " + listing(mx));
    log.same(mn, t.min, L.name() + " Min: " + listing(mn));
  }
}

void c3_alpha_pure(Log& log, const std::vector<Instance>& fixtures) {
  for (const auto& inst : fixtures) {
    const auto& L = inst.lattice();
    const auto& t = table(L.name());
    auto a = rendered(L, enumerate_alpha(L, inst.filters()));
    auto p = rendered(L, pure_filters(inst));
    log.same(a, t.alpha, L.name() + " alpha: " + listing(a));
    log.same(p, t.pure, L.name() + " pure: " + listing(p));
  }
}

void c4_beta(Log& log, const std::vector<Instance>& fixtures) {
  for (const auto& inst : fixtures) {
    const auto& L = inst.lattice();
    auto b = format_subset(L, boolean_center(L).elements);
    log.same(b, std::string(table(L.name()).beta), L.name() + " β: " + b);
  }
}

void c5_classification(Log& log, const std::vector<Instance>& fixtures) {
  for (const auto& inst : fixtures) {
    const auto& L = inst.lattice();
    const auto& t = table(L.name());
    auto r = classify(inst);
    log.expect(r.gelfand.holds == t.gelfand, [&] { return L.name() + " gelfand flag"; });
    log.expect(r.mp.holds == t.mp, [&] { return L.name() + " mp flag"; });

    // A negative flag names a prime followed by at least two maximal filters
    // above it (Gelfand) or two minimal primes below it (mp).
    auto recheck = [&](const Flag& f, const std::vector<Filter>& pool, bool above, const char* what) {
      if (f.holds) return;
      const auto& fs = f.witness.filters;
      bool ok = fs.size() >= 3 && index_in(inst.spec(), fs[0]).has_value();
      std::set<Filter, bool (*)(const Filter&, const Filter&)> distinct(canonical_less);
      for (std::size_t i = 1; ok && i < fs.size(); ++i) {
        ok = index_in(pool, fs[i]).has_value() && (above ? subset_of(fs[0], fs[i]) : subset_of(fs[i], fs[0]));
        distinct.insert(fs[i]);
      }
      ok = ok && distinct.size() == fs.size() - 1;
      log.expect(ok, [&] { return L.name() + " " + what + " witness does not re-verify: " + f.witness.text; });
    };
    recheck(r.gelfand, inst.max(), true, "gelfand");
    recheck(r.mp, inst.min(), false, "mp");
  }
}

void c6_sigma(Log& log, const std::vector<Instance>& family) {
  for (const auto& inst : family) {
    const auto& L = inst.lattice();
    for (const auto& f : inst.filters().all()) {
      const auto primary = sigma(inst, f).elements();
      for (int k : kSigmaFormulas) {
        if (k == 3) continue;
        auto alt = sigma_formula(inst, f, k);
        log.expect(alt == primary, [&] {
          return L.name() + " σ" + format_subset(L, f.elements()) + " formula " + std::to_string(k) + " gives " +
                 format_subset(L, alt) + ", primary " + format_subset(L, primary);
        });
      }
    }
  }
}

void c7_quadrangle(Log& log, const std::vector<Instance>& family) {
  for (const auto& inst : family) {
    const auto& L = inst.lattice();
    for (const auto& f : inst.filters().all()) {
      const bool pure = is_pure(inst, f);
      const bool flat = is_projection_flat(L, inst.filters(), f).flat;
      const auto d = d_of(inst.spec(), f);
      const bool supp = d == support(L, inst.spec(), f);
      const bool stable = stability(inst.spec(), d, StabilityMode::specialization).is_stable;
      log.expect(pure == flat && flat == supp && supp == stable, [&] {
        std::ostringstream os;
        os << L.name() << " " << format_subset(L, f.elements()) << ": pure " << pure << " flat " << flat
           << " d=Supp " << supp << " stable " << stable;
        return os.str();
      });
    }
  }
}

void c8_grothendieck(Log& log, const std::vector<Instance>& family) {
  for (const auto& inst : family) {
    const auto& L = inst.lattice();
    const auto beta = boolean_center(L).elements;
    const auto spp = pure_spectrum(inst);
    const auto cl = clopens(spp.space);
    std::vector<GrothendieckPair> pairs;
    try {
      pairs = grothendieck_check(inst);
    } catch (const std::exception& e) {
      log.expect(false, [&] { return L.name() + ": " + e.what(); });
      continue;
    }
    log.expect(beta.size() == cl.size() && pairs.size() == beta.size(), [&] {
      return L.name() + ": |β| = " + std::to_string(beta.size()) + ", |Clop| = " + std::to_string(cl.size());
    });
    std::set<std::uint32_t> images;
    for (const auto& p : pairs) {
      const bool ok = beta.contains(p.e) && p.summand == principal_filter(L, p.e) &&
                      p.clopen == spp.d_kappa(p.summand) && std::find(cl.begin(), cl.end(), p.clopen) != cl.end();
      log.expect(ok, [&] { return L.name() + ": pair for " + L.element_name(p.e); });
      images.insert(p.clopen.bits());
    }
    log.expect(images.size() == pairs.size(), [&] { return L.name() + ": map not injective"; });
    if (L.name() == "B6") log.expect(beta.size() == 4 && cl.size() == 4, [] { return std::string("B6 spot value"); });
    if (L.name() == "A6") log.expect(beta.size() == 2 && cl.size() == 2, [] { return std::string("A6 spot value"); });
  }
}

void c9_spp_topology(Log& log, const std::vector<Instance>& family) {
  for (const auto& inst : family) {
    const auto& L = inst.lattice();
    const auto spp = pure_spectrum(inst);
    const auto sep = separation_report(spp.space);
    const auto cls = classify(inst);
    bool antichain = true;
    for (std::size_t i = 0; i < spp.points.size(); ++i)
      for (std::size_t j = 0; j < spp.points.size(); ++j)
        if (i != j && subset_of(spp.points[i], spp.points[j])) antichain = false;
    log.expect(sep.t0, [&] { return L.name() + ": Spp not T0"; });
    log.expect(sep.sober, [&] { return L.name() + ": Spp not sober"; });
    log.expect(sep.t1 == antichain, [&] { return L.name() + ": T1 differs from antichain"; });
    if (cls.gelfand.holds || cls.mp.holds)
      log.expect(sep.hausdorff, [&] { return L.name() + ": Spp not Hausdorff"; });
  }
}

bool clause_holds(const StructureReport& r, const std::string& id) {
  for (const auto& c : r.clauses)
    if (c.id == id) return c.holds;
  return false;
}

void c10_gelfand(Log& log, const std::vector<Instance>& family) {
  for (const auto& inst : family) {
    const auto& L = inst.lattice();
    if (!classify(inst).gelfand.holds) continue;
    StructureReport rep;
    try {
      rep = gelfand_structure(inst);
    } catch (const std::exception& e) {
      log.expect(false, [&] { return L.name() + ": " + e.what(); });
      continue;
    }
    for (const char* id : {"sppgelfch", "gelfmaxpure", "rhosigmanorg", "rhoradgel"})
      log.expect(clause_holds(rep, id), [&] { return L.name() + ": clause " + id; });

    // Independent of the report: ρ = σ, Spp = ρ(Max), ρ_m a homeomorphism,
    // and ρ(F) ⊆ G ⇔ F ⊆ Rad(G).
    const auto& fl = inst.filters();
    for (const auto& f : fl.all())
      log.expect(rho(inst, f) == sigma(inst, f), [&] { return L.name() + ": ρ ≠ σ at " + format_subset(L, f.elements()); });
    for (const auto& f : fl.all())
      for (const auto& g : fl.all())
        log.expect(subset_of(rho(inst, f), g) == subset_of(f, radical(L, fl, g)),
                   [&] { return L.name() + ": adjunction at " + format_subset(L, f.elements()); });
    const auto spp = pure_spectrum(inst);
    std::vector<Filter> image;
    const auto max_h = hull_kernel_space(L, inst.max(), HullFlavor::h);
    PointMap m{&max_h, &spp.space, {}};
    bool into = true;
    for (const auto& mx : inst.max()) {
      auto r = rho(inst, mx);
      image.push_back(r);
      auto i = index_in(spp.points, r);
      into = into && i.has_value();
      m.image.push_back(i.value_or(0));
    }
    log.expect(rendered(L, image) == rendered(L, spp.points), [&] { return L.name() + ": Spp ≠ ρ(Max)"; });
    log.expect(into && map_analysis(m).homeomorphism, [&] { return L.name() + ": ρ_m not a homeomorphism"; });
  }
}

void c11_mp(Log& log, const std::vector<Instance>& family) {
  for (const auto& inst : family) {
    const auto& L = inst.lattice();
    if (!classify(inst).mp.holds) continue;
    StructureReport rep;
    try {
      rep = mp_structure(inst);
    } catch (const std::exception& e) {
      log.expect(false, [&] { return L.name() + ": " + e.what(); });
      continue;
    }
    for (const char* id : {"mp2minspp", "equmpflatmin", "norgammsig", "pureinterd"})
      log.expect(clause_holds(rep, id), [&] { return L.name() + ": clause " + id; });

    const auto spp = pure_spectrum(inst);
    log.expect(rendered(L, spp.points) == rendered(L, inst.min()), [&] { return L.name() + ": Min ≠ Spp"; });
    const auto min_d = hull_kernel_space(L, inst.min(), HullFlavor::d);
    PointMap iota{&spp.space, &min_d, {}};
    bool into = true;
    for (const auto& p : spp.points) {
      auto i = index_in(inst.min(), p);
      into = into && i.has_value();
      iota.image.push_back(i.value_or(0));
    }
    log.expect(into && map_analysis(iota).homeomorphism, [&] { return L.name() + ": ι not a homeomorphism"; });

    // Ω(A), γ(A) ⊆ σ(A), with F = kh_m(F) for proper pure F
    const auto pure = pure_filters(inst);
    const auto in_sigma = [&](const Filter& f) { return std::find(pure.begin(), pure.end(), f) != pure.end(); };
    for (const auto& f : omega_filters(L))
      log.expect(in_sigma(f), [&] { return L.name() + ": ω filter " + format_subset(L, f.elements()) + " not pure"; });
    for (Element x = 0; x < L.size(); ++x)
      log.expect(in_sigma(annihilator(L, x)), [&] { return L.name() + ": " + L.element_name(x) + "^⊥ not pure"; });
    for (const auto& f : pure) {
      if (!is_proper(L, f)) continue;
      Filter k = whole_filter(L);
      for (const auto& p : inst.min())
        if (subset_of(f, p)) k = intersection(k, p);
      log.expect(k == f, [&] { return L.name() + ": kh_m fails at " + format_subset(L, f.elements()); });
    }
  }
}

void c12_quotient(Log& log, const std::vector<Instance>& fixtures) {
  for (const auto& inst : fixtures) {
    const auto& L = inst.lattice();
    const auto spp = pure_spectrum(inst);
    const auto pure = pure_filters(inst);
    for (const auto& f : pure) {
      const auto where = L.name() + "/" + format_subset(L, f.elements());
      const auto q = quotient(L, f);
      const auto hk = spp.h_kappa(f);
      std::set<std::string> want;
      for (const auto& h : pure)
        if (subset_of(f, h)) want.insert(format_subset(q.quotient, q.image(h.elements())));
      if (q.degenerate) {
        log.expect(hk.empty() && want.size() == 1, [&] { return where + ": degenerate quotient"; });
        continue;
      }
      const Instance qi(q.quotient);
      log.expect(rendered(q.quotient, pure_filters(qi)) == want, [&] { return where + ": σ(A/F) mismatch"; });

      // h_κ(F) with the subspace topology
      std::vector<PointLabel> labels;
      std::vector<std::size_t> keep;
      for (auto p : hk) {
        keep.push_back(p);
        labels.push_back(spp.points[p]);
      }
      std::vector<PointSet> opens;
      for (auto u : spp.space.opens()) {
        PointSet t;
        for (std::size_t i = 0; i < keep.size(); ++i)
          if (u.contains(static_cast<std::uint32_t>(keep[i]))) t.insert(static_cast<std::uint32_t>(i));
        opens.push_back(t);
      }
      const auto sub = FiniteSpace::generated(labels, opens);
      const auto qspp = pure_spectrum(qi);
      PointMap m{&qspp.space, &sub, {}};
      bool into = true;
      for (const auto& p : qspp.points) {
        auto back = Filter::unchecked(q.preimage(p.elements()));
        std::optional<std::size_t> at;
        for (std::size_t i = 0; i < keep.size(); ++i)
          if (spp.points[keep[i]] == back) at = i;
        into = into && at.has_value();
        m.image.push_back(at.value_or(0));
      }
      log.expect(into && qspp.points.size() == keep.size() && map_analysis(m).homeomorphism,
                 [&] { return where + ": Spp(A/F) ≇ h_κ(F)"; });
    }
  }
}

void c13_inventory(Log& log, const std::vector<ResiduatedLattice>& family) {
  auto inv = inventory_check();
  log.expect(inv.ok(), [&] { return inv.describe(); });
  auto r = run_theorem_suite(family, Suite::all);
  log.expect(r.ok(), [&] { return std::to_string(r.failed) + " failing verdicts"; });
  for (const auto& i : r.instances)
    for (const auto& v : i.verdicts)
      if (v.verdict == Verdict::fail) log.expect(false, [&] { return i.instance + " " + v.property + ": " + v.witness; });
  log.expect(r.passed > 0, [] { return std::string("no verdicts"); });
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();

  std::vector<Instance> fixtures;
  for (const auto& n : fixture_names()) fixtures.emplace_back(fixture(n));
  const auto family_lattices = generate(standard_family());
  std::vector<Instance> family;
  for (const auto& L : family_lattices) family.emplace_back(L);
  std::printf("family: %zu instances, built in %.2f s\n", family.size(),
              std::chrono::duration<double>(Clock::now() - t0).count());

  struct Criterion {
    const char* title;
    std::function<void(Log&)> run;
    double budget_s;
  };
  const std::vector<Criterion> criteria = {
      {"fixture filter tables", [&](Log& l) { c1_filters(l, fixtures); }, 1.0},
      {"fixture maximal and minimal prime tables", [&](Log& l) { c2_spectra(l, fixtures); }, 0},
      {"fixture α and pure filter tables", [&](Log& l) { c3_alpha_pure(l, fixtures); }, 0},
      {"Boolean centers", [&](Log& l) { c4_beta(l, fixtures); }, 0},
      {"Gelfand/mp classification with witnesses", [&](Log& l) { c5_classification(l, fixtures); }, 0},
      {"σ descriptions agree on the family", [&](Log& l) { c6_sigma(l, family); }, 60.0},
      {"purity quadrangle on the family", [&](Log& l) { c7_quadrangle(l, family); }, 0},
      {"β ≅ Clop(Spp) on the family", [&](Log& l) { c8_grothendieck(l, family); }, 0},
      {"Spp separation properties", [&](Log& l) { c9_spp_topology(l, family); }, 0},
      {"Gelfand certificates", [&](Log& l) { c10_gelfand(l, family); }, 0},
      {"mp certificates", [&](Log& l) { c11_mp(l, family); }, 0},
      {"quotient transport on the fixtures", [&](Log& l) { c12_quotient(l, fixtures); }, 0},
      {"property inventory and full suite", [&](Log& l) { c13_inventory(l, family_lattices); }, 300.0},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    Log log;
    const auto start = Clock::now();
    try {
      c.run(log);
    } catch (const std::exception& e) {
      log.problems.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.budget_s > 0 && secs > c.budget_s)
      log.problems.push_back("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_s) + " s");
    const bool ok = log.problems.empty();
    failed += ok ? 0 : 1;
    std::printf("%s %2zu %s (%zu checks, %.3f s)\n", ok ? "PASS" : "FAIL", i + 1, c.title, log.checks, secs);
    for (const auto& p : log.problems) std::printf("       %s\n", p.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
