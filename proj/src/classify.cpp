#include "rlat/classify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace rlat {

namespace {

std::string fs(const ResiduatedLattice& lat, const Filter& f) { return format_subset(lat, f.elements()); }

bool comaximal(const ResiduatedLattice& lat, const Filter& f, const Filter& g) {
  return filter_join(lat, f, g) == whole_filter(lat);
}

bool contains(const std::vector<Filter>& v, const Filter& f) { return std::find(v.begin(), v.end(), f) != v.end(); }

std::set<std::uint32_t> bits_of(const std::vector<Filter>& v) {
  std::set<std::uint32_t> out;
  for (const auto& f : v) out.insert(f.elements().bits());
  return out;
}

std::string listing(const ResiduatedLattice& lat, const std::vector<Filter>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + fs(lat, v[i]);
  return out + "]";
}

Filter meet_all(const ResiduatedLattice& lat, const std::vector<Filter>& v) {
  ElementSubset acc = lat.carrier();
  for (const auto& f : v) acc &= f.elements();
  return Filter::unchecked(acc);
}

/// Maximal members among the proper pure filters.
std::vector<Filter> max_sigma(const ResiduatedLattice& lat, const std::vector<Filter>& pure) {
  std::vector<Filter> out;
  for (const auto& f : pure) {
    if (!is_proper(lat, f)) continue;
    bool maximal = std::none_of(pure.begin(), pure.end(), [&](const Filter& g) {
      return is_proper(lat, g) && g != f && f.is_subset_of(g);
    });
    if (maximal) out.push_back(f);
  }
  return out;
}

std::vector<Filter> sorted(std::vector<Filter> v) {
  std::sort(v.begin(), v.end(), [](const Filter& a, const Filter& b) { return canonical_less(a, b); });
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

/// Identity on shared labels, from the points of one space to another.
std::optional<OwnedPointMap> identity_map(const FiniteSpace& from, const FiniteSpace& to) {
  OwnedPointMap m{from, to, {}};
  for (std::size_t p = 0; p < from.size(); ++p) {
    auto q = to.find(from.label(p));
    if (!q) return std::nullopt;
    m.image.push_back(*q);
  }
  return m;
}

Clause make_clause(std::string id, std::string statement) { return Clause{std::move(id), std::move(statement), true, "", ""}; }

void fail(Clause& c, std::string witness) {
  if (!c.holds) return;
  c.holds = false;
  c.witness = std::move(witness);
}

}  // namespace

BooleanCenter boolean_center(const ResiduatedLattice& lat) {
  BooleanCenter bc;
  ElementSubset via_neg;
  for (Element e = 0; e < lat.size(); ++e) {
    std::vector<Element> comps;
    for (Element y = 0; y < lat.size(); ++y)
      if (lat.join(e, y) == lat.top() && lat.meet(e, y) == lat.bottom()) comps.push_back(y);
    if (comps.size() > 1)
      throw CenterMismatch(lat.element_name(e) + " has " + std::to_string(comps.size()) + " complements");
    if (!comps.empty()) {
      bc.elements.insert(e);
      if (comps[0] != lat.neg(e))
        throw CenterMismatch("complement of " + lat.element_name(e) + " is " + lat.element_name(comps[0]) +
                             " but ¬" + lat.element_name(e) + " = " + lat.element_name(lat.neg(e)));
      bc.complements.emplace_back(e, comps[0]);
    }
    if (lat.join(e, lat.neg(e)) == lat.top()) via_neg.insert(e);
  }
  if (via_neg != bc.elements)
    throw CenterMismatch("complemented elements " + format_subset(lat, bc.elements) + " differ from {a | a∨¬a=1} = " +
                         format_subset(lat, via_neg));
  for (Element e : bc.elements)
    for (Element x = 0; x < lat.size(); ++x)
      if (lat.prod(e, x) != lat.meet(e, x))
        throw CenterMismatch(lat.element_name(e) + "⊙" + lat.element_name(x) + " differs from the meet");
  return bc;
}

std::vector<Filter> direct_summands(const Instance& inst) {
  const auto& lat = inst.lattice();
  const auto& fl = inst.filters();
  std::vector<Filter> out;
  for (const auto& f : fl.all())
    if (filter_join(lat, f, annihilator(lat, f.elements())) == whole_filter(lat)) out.push_back(f);

  std::vector<Filter> from_center;
  for (Element e : boolean_center(lat).elements) from_center.push_back(principal_filter(lat, e));

  std::vector<Filter> complemented;
  for (std::size_t i = 0; i < fl.size(); ++i)
    for (std::size_t j = 0; j < fl.size(); ++j)
      if (fl[fl.meet(i, j)] == unit_filter(lat) && fl[fl.join(i, j)] == whole_filter(lat)) {
        complemented.push_back(fl[i]);
        break;
      }

  if (bits_of(out) != bits_of(from_center) || bits_of(out) != bits_of(complemented))
    throw std::logic_error("direct summands disagree: " + listing(lat, out) + " vs 𝔽(β) " + listing(lat, from_center) +
                           " vs complemented " + listing(lat, complemented));
  return out;
}

ClassificationReport classify(const Instance& inst) {
  const auto& lat = inst.lattice();
  const auto& spec = inst.spec();
  ClassificationReport r;
  const auto bc = boolean_center(lat);
  r.boolean_center = bc.elements;
  r.direct_summands = direct_summands(inst);
  const auto n_primes = std::to_string(spec.size());

  // hyperarchimedean: Spec is an antichain
  r.hyperarchimedean.witness.text = "exhaustive: no inclusion among " + n_primes + " primes";
  for (const auto& p : spec) {
    for (const auto& q : spec) {
      if (p != q && p.is_subset_of(q) && r.hyperarchimedean.holds) {
        r.hyperarchimedean = {false, {"prime " + fs(lat, p) + " ⊂ prime " + fs(lat, q), {p, q}, {}}};
      }
    }
  }
  {
    std::vector<Filter> principal;
    for (Element x = 0; x < lat.size(); ++x) principal.push_back(principal_filter(lat, x));
    std::vector<Filter> from_center;
    for (Element e : bc.elements) from_center.push_back(principal_filter(lat, e));
    const bool via_center = bits_of(principal) == bits_of(from_center);
    const bool via_pure = pure_filters(inst).size() == inst.filters().size();
    if (via_center != r.hyperarchimedean.holds || via_pure != r.hyperarchimedean.holds)
      throw std::logic_error("hyperarchimedean characterizations disagree on " + lat.name());
  }

  // gelfand: each prime lies under exactly one maximal filter
  r.gelfand.witness.text = "exhaustive: each of " + n_primes + " primes lies under one maximal filter";
  for (const auto& p : spec) {
    std::vector<Filter> above;
    for (const auto& m : inst.max())
      if (p.is_subset_of(m)) above.push_back(m);
    if (above.size() != 1) {
      r.gelfand = {false,
                   {"prime " + fs(lat, p) + " lies under " + std::to_string(above.size()) + " maximal filters " +
                        listing(lat, above),
                    {p},
                    {}}};
      r.gelfand.witness.filters.insert(r.gelfand.witness.filters.end(), above.begin(), above.end());
      break;
    }
  }

  // mp: each prime lies over exactly one minimal prime
  r.mp.witness.text = "exhaustive: each of " + n_primes + " primes lies over one minimal prime";
  for (const auto& p : spec) {
    std::vector<Filter> below;
    for (const auto& m : inst.min())
      if (m.is_subset_of(p)) below.push_back(m);
    if (below.size() != 1) {
      r.mp = {false,
              {"prime " + fs(lat, p) + " lies over " + std::to_string(below.size()) + " minimal primes " +
                   listing(lat, below),
               {p},
               {}}};
      r.mp.witness.filters.insert(r.mp.witness.filters.end(), below.begin(), below.end());
      break;
    }
  }

  // directly indecomposable: β = {0, 1}
  r.directly_indecomposable.witness.text = "β = {" + lat.element_name(lat.bottom()) + "," + lat.element_name(lat.top()) + "}";
  for (Element e : bc.elements) {
    if (e != lat.bottom() && e != lat.top()) {
      r.directly_indecomposable = {
          false, {"complemented element " + lat.element_name(e) + " with complement " + lat.element_name(lat.neg(e)), {}, {e, lat.neg(e)}}};
      break;
    }
  }
  {
    const auto spp = pure_spectrum(inst);
    if (separation_report(spp.space).connected != r.directly_indecomposable.holds)
      throw std::logic_error("direct indecomposability disagrees with connectedness of Spp on " + lat.name());
  }
  return r;
}

std::vector<GrothendieckPair> grothendieck_check(const Instance& inst) {
  const auto& lat = inst.lattice();
  const auto spp = pure_spectrum(inst);
  const auto clop = clopens(spp.space);
  std::vector<GrothendieckPair> out;
  for (Element e : boolean_center(lat).elements) {
    const auto f = principal_filter(lat, e);
    const auto d = spp.d_kappa(f);
    for (const auto& prev : out)
      if (prev.clopen == d)
        throw BijectionFailure(lat.element_name(prev.e) + " and " + lat.element_name(e) + " map to the same clopen");
    if (std::find(clop.begin(), clop.end(), d) == clop.end())
      throw BijectionFailure("d_κ(𝔽(" + lat.element_name(e) + ")) is not clopen");
    out.push_back({e, f, d});
  }
  for (auto c : clop) {
    bool hit = std::any_of(out.begin(), out.end(), [&](const GrothendieckPair& p) { return p.clopen == c; });
    if (!hit) throw BijectionFailure("clopen with " + std::to_string(c.size()) + " points has no preimage");
  }
  return out;
}

std::vector<Clause> evaluate_gelfand_clauses(const Instance& inst) {
  const auto& lat = inst.lattice();
  const auto& fl = inst.filters();
  const auto& spec = inst.spec();
  const auto& max = inst.max();
  const auto pure = pure_filters(inst);
  const auto spp = pure_spectrum(inst);
  std::vector<Clause> out;

  {
    auto c = make_clause("retract", "Max_h is a retract of Spec_h");
    // A continuous map into the T1 space Max_h is constant along inclusions
    // of primes, so it must be constant on each comparability component.
    std::vector<std::size_t> comp(spec.size());
    std::iota(comp.begin(), comp.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t i) { return comp[i] == i ? i : comp[i] = root(comp[i]); };
    for (std::size_t i = 0; i < spec.size(); ++i)
      for (std::size_t j = 0; j < spec.size(); ++j)
        if (spec[i].is_subset_of(spec[j])) comp[root(i)] = root(j);
    auto max_space = hull_kernel_space(lat, max, HullFlavor::h);
    OwnedPointMap m{hull_kernel_space(lat, spec, HullFlavor::h), max_space, std::vector<std::size_t>(spec.size())};
    for (std::size_t i = 0; i < spec.size() && c.holds; ++i) {
      std::vector<std::size_t> hits;
      for (std::size_t k = 0; k < max.size(); ++k)
        if (root(*m.source.find(max[k])) == root(i)) hits.push_back(k);
      if (hits.size() != 1)
        fail(c, "component of " + fs(lat, spec[i]) + " holds " + std::to_string(hits.size()) + " maximal filters");
      else
        m.image[i] = hits[0];
    }
    if (c.holds) {
      auto rep = map_analysis(m.view());
      if (!rep.continuous || !rep.retraction_onto_image) fail(c, "component map is not a continuous retraction");
    }
    out.push_back(c);
  }
  {
    auto c = make_clause("pmprop3", "D(m), D(n) comaximal for distinct maximal m, n");
    for (const auto& m : max)
      for (const auto& n : max)
        if (m != n && !comaximal(lat, D_operator(lat, fl, m), D_operator(lat, fl, n)))
          fail(c, "m=" + fs(lat, m) + " n=" + fs(lat, n));
    out.push_back(c);
  }
  {
    auto c = make_clause("pmprop7", "F⋁m=A implies F⋁D(m)=A for proper F and maximal m");
    for (const auto& f : fl.all())
      for (const auto& m : max)
        if (is_proper(lat, f) && comaximal(lat, f, m) && !comaximal(lat, f, D_operator(lat, fl, m)))
          fail(c, "F=" + fs(lat, f) + " m=" + fs(lat, m));
    out.push_back(c);
  }
  {
    auto c = make_clause("equgelchaunit", "h_M(F) = h_M(σ(F)) for every filter F");
    for (const auto& f : fl.all())
      if (hull(max, f.elements()) != hull(max, sigma(inst, f).elements())) fail(c, "F=" + fs(lat, f));
    out.push_back(c);
  }
  {
    auto c = make_clause("equgelchapure", "ρ(F) ⊆ m implies F ⊆ m for every filter F and maximal m");
    for (const auto& f : fl.all())
      for (const auto& m : max)
        if (rho(inst, f).is_subset_of(m) && !f.is_subset_of(m)) fail(c, "F=" + fs(lat, f) + " m=" + fs(lat, m));
    out.push_back(c);
  }
  {
    auto c = make_clause("rhosigmanorg", "ρ(F) = σ(F) for every filter F");
    for (const auto& f : fl.all())
      if (rho(inst, f) != sigma(inst, f)) fail(c, "F=" + fs(lat, f));
    out.push_back(c);
  }
  {
    auto c = make_clause("rhoradgel", "(ρ, Rad) is an adjunction on filters");
    for (const auto& f : fl.all())
      for (const auto& g : fl.all())
        if (rho(inst, f).is_subset_of(g) != f.is_subset_of(radical(lat, fl, g)))
          fail(c, "F=" + fs(lat, f) + " G=" + fs(lat, g));
    out.push_back(c);
  }
  {
    auto c = make_clause("gelfmaxpure", "Spp = ρ(Max) = Max(σ)");
    std::vector<Filter> rho_max;
    for (const auto& m : max) rho_max.push_back(rho(inst, m));
    const auto a = bits_of(spp.points), b = bits_of(rho_max), d = bits_of(max_sigma(lat, pure));
    if (a != b || a != d)
      fail(c, "Spp " + listing(lat, spp.points) + " ρ(Max) " + listing(lat, sorted(rho_max)) + " Max(σ) " +
                  listing(lat, max_sigma(lat, pure)));
    out.push_back(c);
  }
  {
    auto c = make_clause("gelspphau", "Spp is Hausdorff");
    if (!separation_report(spp.space).hausdorff) fail(c, "two points of Spp share every neighbourhood pair");
    out.push_back(c);
  }
  {
    auto c = make_clause("sppgelfch", "ρ_m: Max_h → Spp is a homeomorphism");
    OwnedPointMap m{hull_kernel_space(lat, max, HullFlavor::h), spp.space, {}};
    for (const auto& mx : max) {
      auto it = std::find(spp.points.begin(), spp.points.end(), rho(inst, mx));
      if (it == spp.points.end()) {
        fail(c, "ρ(" + fs(lat, mx) + ") is not purely-prime");
        break;
      }
      m.image.push_back(static_cast<std::size_t>(it - spp.points.begin()));
    }
    if (c.holds && !map_analysis(m.view()).homeomorphism) fail(c, "ρ_m is not a homeomorphism");
    c.note = "Max_h compact and Spp Hausdorff; compactness is automatic for finite spaces";
    out.push_back(c);
  }
  {
    auto c = make_clause("gelpurefcl", "pure filters are exactly ⋂{D(m) | m ∈ Max ∩ C} for h-closed C");
    const auto sh = hull_kernel_space(lat, spec, HullFlavor::h);
    std::vector<Filter> formed;
    for (auto closed : sh.closed_sets()) {
      std::vector<Filter> ds;
      for (auto p : closed)
        if (contains(max, spec[p])) ds.push_back(D_operator(lat, fl, spec[p]));
      formed.push_back(meet_all(lat, ds));
    }
    if (bits_of(formed) != bits_of(pure))
      fail(c, "formed " + listing(lat, sorted(formed)) + " pure " + listing(lat, pure));
    out.push_back(c);
  }
  {
    auto c = make_clause("gelfhulldmin", "hull-kernel and 𝒟-topology coincide on Max");
    std::vector<PointSet> d_opens;
    for (const auto& f : pure) d_opens.push_back(dual_hull(max, f.elements()));
    auto dspace = FiniteSpace::generated({max.begin(), max.end()}, d_opens);
    if (!(dspace == hull_kernel_space(lat, max, HullFlavor::h)))
      fail(c, "open families differ (" + std::to_string(dspace.opens().size()) + " vs " +
                  std::to_string(hull_kernel_space(lat, max, HullFlavor::h).opens().size()) + ")");
    out.push_back(c);
  }
  return out;
}

std::vector<Clause> evaluate_mp_clauses(const Instance& inst) {
  const auto& lat = inst.lattice();
  const auto& fl = inst.filters();
  const auto& spec = inst.spec();
  const auto& max = inst.max();
  const auto& min = inst.min();
  const auto pure = pure_filters(inst);
  const auto spp = pure_spectrum(inst);
  const auto msig = max_sigma(lat, pure);
  std::vector<Clause> out;

  {
    auto c = make_clause("noco1", "distinct minimal primes are comaximal");
    for (const auto& m : min)
      for (const auto& n : min)
        if (m != n && !comaximal(lat, m, n)) fail(c, fs(lat, m) + " and " + fs(lat, n));
    out.push_back(c);
  }
  {
    auto c = make_clause("noco5", "x∨y=1 implies x^⊥ ⋁ y^⊥ = A");
    for (Element x = 0; x < lat.size(); ++x)
      for (Element y = 0; y < lat.size(); ++y)
        if (lat.join(x, y) == lat.top() && !comaximal(lat, annihilator(lat, x), annihilator(lat, y)))
          fail(c, "x=" + lat.element_name(x) + " y=" + lat.element_name(y));
    out.push_back(c);
  }
  {
    auto c = make_clause("noco4", "D(m) is a minimal prime for every maximal m");
    for (const auto& m : max)
      if (!contains(min, D_operator(lat, fl, m))) fail(c, "m=" + fs(lat, m));
    out.push_back(c);
  }
  {
    auto c = make_clause("norgammsig", "Ω(A) ⊆ σ(A) and γ(A) ⊆ σ(A)");
    for (const auto& f : omega_filters(lat))
      if (!contains(pure, f)) fail(c, "ω-filter " + fs(lat, f) + " is not pure");
    for (Element x = 0; x < lat.size(); ++x)
      if (!contains(pure, annihilator(lat, x))) fail(c, "coannulet " + fs(lat, annihilator(lat, x)) + " is not pure");
    out.push_back(c);
  }
  {
    auto c = make_clause("norgammsige", "D(p) is pure for every prime p, and Min ⊆ σ(A)");
    for (const auto& p : spec)
      if (!contains(pure, D_operator(lat, fl, p))) fail(c, "D(" + fs(lat, p) + ") is not pure");
    for (const auto& m : min)
      if (!contains(pure, m)) fail(c, "minimal prime " + fs(lat, m) + " is not pure");
    out.push_back(c);
  }
  {
    auto c = make_clause("normpurprimxa", "Min = Max(σ)");
    if (bits_of(min) != bits_of(msig)) fail(c, "Min " + listing(lat, min) + " Max(σ) " + listing(lat, msig));
    out.push_back(c);
  }
  {
    auto c = make_clause("mp2minspp", "Min = Spp");
    if (bits_of(min) != bits_of(spp.points)) fail(c, "Min " + listing(lat, min) + " Spp " + listing(lat, spp.points));
    out.push_back(c);
  }
  {
    auto c = make_clause("mpminspp", "Spp ⊆ Max(σ)");
    for (const auto& p : spp.points)
      if (!contains(msig, p)) fail(c, fs(lat, p) + " is purely-prime but not purely-maximal");
    out.push_back(c);
  }
  const auto min_d = hull_kernel_space(lat, min, HullFlavor::d);
  {
    auto c = make_clause("equmpflatmin", "identity Spp → Min_d is a homeomorphism");
    auto m = identity_map(spp.space, min_d);
    if (!m || min_d.size() != spp.space.size()) fail(c, "Spp and Min are different sets of filters");
    else if (!map_analysis(m->view()).homeomorphism) fail(c, "identity is not a homeomorphism");
    out.push_back(c);
  }
  {
    auto c = make_clause("mpmpropd", "Min_d is Hausdorff");
    if (!separation_report(min_d).hausdorff) fail(c, "two minimal primes cannot be separated");
    out.push_back(c);
  }
  {
    auto c = make_clause("mpspphau", "Spp is Hausdorff");
    if (!separation_report(spp.space).hausdorff) fail(c, "two points of Spp cannot be separated");
    out.push_back(c);
  }
  {
    auto c = make_clause("pureinterd", "F = ⋂ h_m(F) for every proper pure F");
    for (const auto& f : pure) {
      if (!is_proper(lat, f)) continue;
      std::vector<Filter> over;
      for (const auto& m : min)
        if (f.is_subset_of(m)) over.push_back(m);
      if (meet_all(lat, over) != f) fail(c, "F=" + fs(lat, f));
    }
    out.push_back(c);
  }
  {
    auto c = make_clause("mppurefcl", "pure filters are exactly ⋂(Min ∩ C) for d-closed C");
    const auto sd = hull_kernel_space(lat, spec, HullFlavor::d);
    std::vector<Filter> formed;
    for (auto closed : sd.closed_sets()) {
      std::vector<Filter> ms;
      for (auto p : closed)
        if (contains(min, spec[p])) ms.push_back(spec[p]);
      formed.push_back(meet_all(lat, ms));
    }
    if (bits_of(formed) != bits_of(pure))
      fail(c, "formed " + listing(lat, sorted(formed)) + " pure " + listing(lat, pure));
    out.push_back(c);
  }
  auto F_a = [&](Element a) {
    std::vector<Filter> parts;
    for (const auto& m : max)
      if (m.contains(a)) parts.push_back(rho(inst, m));
    return meet_all(lat, parts);
  };
  {
    auto c = make_clause("mppureco1", "a^⊥ ∩ F_a = {1}, F_a = ⋂{ρ(m) | m ∈ h_M(a)}");
    for (Element a = 0; a < lat.size(); ++a)
      if (intersection(annihilator(lat, a), F_a(a)) != unit_filter(lat)) fail(c, "a=" + lat.element_name(a));
    out.push_back(c);
  }
  {
    auto c = make_clause("mppu1re", "m = ⋁_{a∈m} F_a for every minimal prime m");
    for (const auto& m : min) {
      Filter acc = unit_filter(lat);
      for (Element a : m.elements()) acc = filter_join(lat, acc, F_a(a));
      if (acc != m) fail(c, "m=" + fs(lat, m) + " join " + fs(lat, acc));
    }
    out.push_back(c);
  }
  {
    auto c = make_clause("mppure", "pure filters are exactly ⋂{ρ(m) | m ∈ h_M(F)}");
    std::vector<Filter> formed;
    for (const auto& f : fl.all()) {
      std::vector<Filter> parts;
      for (const auto& m : max)
        if (f.is_subset_of(m)) parts.push_back(rho(inst, m));
      formed.push_back(meet_all(lat, parts));
    }
    if (bits_of(formed) != bits_of(pure))
      fail(c, "formed " + listing(lat, sorted(formed)) + " pure " + listing(lat, pure));
    out.push_back(c);
  }
  {
    auto c = make_clause("minspprick", "Min_h ≅ Spp through the identity");
    auto min_h = hull_kernel_space(lat, min, HullFlavor::h);
    auto m = identity_map(spp.space, min_h);
    if (!m || min_h.size() != spp.space.size()) fail(c, "Spp and Min are different sets of filters");
    else if (!map_analysis(m->view()).homeomorphism) fail(c, "identity is not a homeomorphism");
    c.note = "finiteness makes the compactness hypothesis vacuous";
    out.push_back(c);
  }
  return out;
}

StructureReport gelfand_structure(const Instance& inst) {
  auto flag = classify(inst).gelfand;
  if (!flag.holds) throw NotApplicable(inst.lattice().name() + " is not Gelfand: " + flag.witness.text, flag.witness);
  StructureReport r{"gelfand", evaluate_gelfand_clauses(inst)};
  for (const auto& c : r.clauses)
    if (!c.holds) throw CertificateFailure(c);
  return r;
}

StructureReport mp_structure(const Instance& inst) {
  auto flag = classify(inst).mp;
  if (!flag.holds) throw NotApplicable(inst.lattice().name() + " is not mp: " + flag.witness.text, flag.witness);
  StructureReport r{"mp", evaluate_mp_clauses(inst)};
  for (const auto& c : r.clauses)
    if (!c.holds) throw CertificateFailure(c);
  return r;
}

}  // namespace rlat
