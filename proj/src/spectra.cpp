#include "rlat/spectra.hpp"

#include <algorithm>

namespace rlat {

const char* to_string(SpectrumKind kind) {
  switch (kind) {
    case SpectrumKind::prime: return "prime";
    case SpectrumKind::maximal: return "maximal";
    case SpectrumKind::minimal_prime: return "minimal_prime";
    case SpectrumKind::minimal_prime_over: return "minimal_prime_over";
  }
  return "?";
}

const char* to_string(HullFlavor flavor) {
  switch (flavor) {
    case HullFlavor::h: return "h";
    case HullFlavor::d: return "d";
    case HullFlavor::patch: return "patch";
  }
  return "?";
}

bool is_prime(const ResiduatedLattice& lat, const Filter& f) {
  if (!is_proper(lat, f)) return false;
  for (Element x = 0; x < lat.size(); ++x)
    for (Element y = x + 1; y < lat.size(); ++y)
      if (f.contains(lat.join(x, y)) && !f.contains(x) && !f.contains(y)) return false;
  return true;
}

bool is_meet_irreducible(const ResiduatedLattice& lat, const FiltersLattice& fl, const Filter& f) {
  if (f == whole_filter(lat)) return false;
  for (std::size_t i = 0; i < fl.size(); ++i)
    for (std::size_t j = i; j < fl.size(); ++j)
      if (fl[fl.meet(i, j)] == f && fl[i] != f && fl[j] != f) return false;
  return true;
}

namespace {

std::vector<Filter> minimal_members(const std::vector<Filter>& fs) {
  std::vector<Filter> out;
  for (const auto& f : fs) {
    bool minimal = std::none_of(fs.begin(), fs.end(), [&](const Filter& g) { return g != f && g.is_subset_of(f); });
    if (minimal) out.push_back(f);
  }
  return out;
}

}  // namespace

SpectrumSelection spectrum(const ResiduatedLattice& lat, const FiltersLattice& fl, SpectrumKind kind,
                           ElementSubset over) {
  std::vector<Filter> primes;
  for (const auto& f : fl.all())
    if (is_prime(lat, f)) primes.push_back(f);

  SpectrumSelection sel{kind, kind == SpectrumKind::minimal_prime_over ? over : ElementSubset{}, {}};
  switch (kind) {
    case SpectrumKind::prime:
      sel.points = primes;
      break;
    case SpectrumKind::maximal:
      sel.points = maximal_filters(lat, fl);
      for (const auto& m : sel.points)
        if (!is_prime(lat, m)) throw std::logic_error("maximal filter " + format_subset(lat, m.elements()) + " is not prime");
      break;
    case SpectrumKind::minimal_prime:
      sel.points = minimal_members(primes);
      break;
    case SpectrumKind::minimal_prime_over: {
      std::vector<Filter> above;
      for (const auto& p : primes)
        if (over.is_subset_of(p.elements())) above.push_back(p);
      sel.points = minimal_members(above);
      break;
    }
  }
  return sel;
}

Filter D_operator(const ResiduatedLattice& lat, const FiltersLattice& fl, const Filter& p) {
  if (!is_prime(lat, p)) throw NotPrimeError(format_subset(lat, p.elements()) + " is not a prime filter");
  ElementSubset direct;
  const auto outside = lat.carrier() - p.elements();
  for (Element a = 0; a < lat.size(); ++a)
    for (Element y : outside)
      if (lat.join(a, y) == lat.top()) {
        direct.insert(a);
        break;
      }
  ElementSubset below = lat.carrier();
  for (const auto& q : fl.all())
    if (is_prime(lat, q) && q.is_subset_of(p)) below &= q.elements();
  if (direct != below)
    throw std::logic_error("D(" + format_subset(lat, p.elements()) + ") disagrees: " + format_subset(lat, direct) +
                           " vs " + format_subset(lat, below));
  return Filter::unchecked(direct);
}

PointSet hull(const std::vector<Filter>& points, ElementSubset xs) {
  PointSet out;
  for (std::uint32_t i = 0; i < points.size(); ++i)
    if (xs.is_subset_of(points[i].elements())) out.insert(i);
  return out;
}

PointSet dual_hull(const std::vector<Filter>& points, ElementSubset xs) {
  return hull(points, xs).complement(points.size());
}

FiniteSpace hull_kernel_space(const ResiduatedLattice& lat, const std::vector<Filter>& points, HullFlavor flavor) {
  std::vector<PointSet> subbasis;
  for (Element x = 0; x < lat.size(); ++x) {
    const auto hx = hull(points, ElementSubset::single(x));
    if (flavor != HullFlavor::d) subbasis.push_back(hx.complement(points.size()));
    if (flavor != HullFlavor::h) subbasis.push_back(hx);
  }
  return FiniteSpace::generated({points.begin(), points.end()}, subbasis);
}

StabilityResult stability(const std::vector<Filter>& points, PointSet subset, StabilityMode mode) {
  PointSet closure = subset;
  for (auto p : subset)
    for (std::uint32_t q = 0; q < points.size(); ++q) {
      bool related = mode == StabilityMode::specialization ? points[p].is_subset_of(points[q])
                                                           : points[q].is_subset_of(points[p]);
      if (related) closure.insert(q);
    }
  return {closure, closure == subset};
}

PointSet support(const ResiduatedLattice& lat, const std::vector<Filter>& points, const Filter& f) {
  PointSet out;
  for (Element x : f.elements()) out |= hull(points, annihilator(lat, x).elements());
  return out;
}

}  // namespace rlat
