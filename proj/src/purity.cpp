#include "rlat/purity.hpp"

#include <algorithm>

namespace rlat {

namespace {

ElementSubset intersect_all(const ResiduatedLattice& lat, const std::vector<ElementSubset>& sets) {
  ElementSubset acc = lat.carrier();
  for (auto s : sets) acc &= s;
  return acc;
}

ElementSubset sigma_primary(const Instance& inst, const Filter& f) {
  const auto& lat = inst.lattice();
  ElementSubset out;
  for (Element a = 0; a < lat.size(); ++a)
    if (generated_filter(lat, annihilator(lat, a).elements() | f.elements()) == whole_filter(lat)) out.insert(a);
  return out;
}

}  // namespace

ElementSubset sigma_formula(const Instance& inst, const Filter& f, int formula) {
  const auto& lat = inst.lattice();
  const auto& fl = inst.filters();
  std::vector<ElementSubset> parts;
  switch (formula) {
    case 1:
      for (const auto& m : inst.min()) {
        bool under_hull = std::any_of(inst.spec().begin(), inst.spec().end(), [&](const Filter& p) {
          return f.is_subset_of(p) && m.is_subset_of(p);
        });
        if (under_hull) parts.push_back(m.elements());
      }
      return intersect_all(lat, parts);
    case 2:
      for (const auto& p : inst.spec())
        if (f.is_subset_of(p)) parts.push_back(D_operator(lat, fl, p).elements());
      return intersect_all(lat, parts);
    case 3:
      return sigma_primary(inst, f);
    case 4: {
      ElementSubset out;
      for (Element a = 0; a < lat.size(); ++a)
        for (Element b : annihilator(lat, a).elements())
          if (f.contains(lat.neg(b))) {
            out.insert(a);
            break;
          }
      return out;
    }
    case 5:
      for (const auto& m : inst.max())
        if (f.is_subset_of(m)) parts.push_back(D_operator(lat, fl, m).elements());
      return intersect_all(lat, parts);
    case 6: {
      ElementSubset ideal;
      for (Element a = 0; a < lat.size(); ++a)
        if (filter_join(lat, double_annihilator(lat, a), f) == whole_filter(lat)) ideal.insert(a);
      if (!is_lattice_ideal(lat, ideal))
        throw FormulaMismatch("I_F = " + format_subset(lat, ideal) + " is not a lattice ideal", lat.top(), 6);
      return omega_filter(lat, LatticeIdeal::unchecked(ideal)).elements();
    }
    default:
      throw std::invalid_argument("no σ formula numbered " + std::to_string(formula));
  }
}

Filter sigma(const Instance& inst, const Filter& f, SigmaCheck check) {
  const auto& lat = inst.lattice();
  const auto primary = sigma_primary(inst, f);
  if (check == SigmaCheck::all_formulas) {
    for (int k : kSigmaFormulas) {
      if (k == 3) continue;
      const auto alt = sigma_formula(inst, f, k);
      if (alt != primary) {
        const auto diff = (alt - primary) | (primary - alt);
        throw FormulaMismatch("σ(" + format_subset(lat, f.elements()) + "): formula 3 gives " +
                                  format_subset(lat, primary) + ", formula " + std::to_string(k) + " gives " +
                                  format_subset(lat, alt),
                              diff.lowest(), k);
      }
    }
  }
  return make_filter(lat, primary);
}

bool is_pure(const Instance& inst, const Filter& f) { return sigma(inst, f) == f; }

std::vector<Filter> pure_filters(const Instance& inst) {
  std::vector<Filter> out;
  for (const auto& f : inst.filters().all())
    if (is_pure(inst, f)) out.push_back(f);
  return out;
}

Filter rho(const Instance& inst, const Filter& f) {
  const auto& lat = inst.lattice();
  const auto pure = pure_filters(inst);
  Filter acc = unit_filter(lat);
  for (const auto& g : pure)
    if (g.is_subset_of(f)) acc = filter_join(lat, acc, g);
  if (!is_pure(inst, acc) || !acc.is_subset_of(f))
    throw std::logic_error("ρ(" + format_subset(lat, f.elements()) + ") is not a pure subfilter");
  for (const auto& g : pure)
    if (g.is_subset_of(f) && !g.is_subset_of(acc)) throw std::logic_error("ρ is not the largest pure subfilter");
  return acc;
}

PointSet PureSpectrum::d_kappa(const Filter& f) const { return dual_hull(points, f.elements()); }
PointSet PureSpectrum::h_kappa(const Filter& f) const { return hull(points, f.elements()); }

PureSpectrum pure_spectrum(const Instance& inst) {
  const auto& lat = inst.lattice();
  const auto pure = pure_filters(inst);
  PureSpectrum sp;
  for (const auto& f : pure) {
    if (!is_proper(lat, f)) continue;
    bool irreducible = true;
    for (const auto& g : pure)
      for (const auto& h : pure)
        if (intersection(g, h) == f && g != f && h != f) irreducible = false;
    if (irreducible) sp.points.push_back(f);
  }

  std::vector<PointSet> basis;
  for (const auto& f : pure) basis.push_back(sp.d_kappa(f));
  for (const auto& f : pure)
    for (const auto& g : pure)
      if ((sp.d_kappa(f) & sp.d_kappa(g)) != sp.d_kappa(intersection(f, g)))
        throw std::logic_error("d_κ does not turn ∩ into ∩");
  sp.space = FiniteSpace::generated({sp.points.begin(), sp.points.end()}, basis);

  for (const auto& p : sp.points) {
    sp.purely_maximal.push_back(std::none_of(pure.begin(), pure.end(), [&](const Filter& g) {
      return is_proper(lat, g) && g != p && p.is_subset_of(g);
    }));
    sp.purely_minimal.push_back(std::none_of(sp.points.begin(), sp.points.end(),
                                             [&](const Filter& q) { return q != p && q.is_subset_of(p); }));
  }
  return sp;
}

FiniteSpace d_topology(const Instance& inst) {
  const auto& spec = inst.spec();
  std::vector<PointSet> opens;
  for (const auto& f : pure_filters(inst)) {
    auto d = dual_hull(spec, f.elements());
    if (std::find(opens.begin(), opens.end(), d) == opens.end()) opens.push_back(d);
  }
  auto space = FiniteSpace::from_opens({spec.begin(), spec.end()}, opens);
  const auto hk = hull_kernel_space(inst.lattice(), spec, HullFlavor::h);
  for (auto o : space.opens())
    if (!hk.is_open(o)) throw std::logic_error("𝒟-topology is not coarser than the hull-kernel topology");
  return space;
}

OwnedPointMap pure_part_map(const Instance& inst) {
  const auto& lat = inst.lattice();
  auto spp = pure_spectrum(inst);
  OwnedPointMap m{hull_kernel_space(lat, inst.spec(), HullFlavor::h), spp.space, {}};
  for (const auto& p : inst.spec()) {
    const auto r = rho(inst, p);
    auto it = std::find(spp.points.begin(), spp.points.end(), r);
    if (it == spp.points.end())
      throw std::logic_error("ρ(" + format_subset(lat, p.elements()) + ") = " + format_subset(lat, r.elements()) +
                             " is not purely-prime");
    m.image.push_back(static_cast<std::size_t>(it - spp.points.begin()));
  }
  const auto view = m.view();
  for (const auto& f : pure_filters(inst))
    if (view.preimage(spp.d_kappa(f)) != dual_hull(inst.spec(), f.elements()))
      throw std::logic_error("ρ⁻¹(d_κ(F)) ≠ d(F) for F = " + format_subset(lat, f.elements()));
  return m;
}

}  // namespace rlat
