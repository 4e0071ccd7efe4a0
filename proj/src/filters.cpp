#include "rlat/filters.hpp"

#include <algorithm>
#include <stdexcept>

namespace rlat {

bool is_filter(const ResiduatedLattice& lat, ElementSubset s) {
  if (!s.contains(lat.top())) return false;
  for (Element x : s)
    if (!lat.up(x).is_subset_of(s)) return false;
  for (Element x : s)
    for (Element y : s)
      if (!s.contains(lat.prod(x, y))) return false;
  return true;
}

Filter make_filter(const ResiduatedLattice& lat, ElementSubset s) {
  if (!is_filter(lat, s)) throw std::invalid_argument(format_subset(lat, s) + " is not a filter of " + lat.name());
  return Filter::unchecked(s);
}

Filter generated_filter(const ResiduatedLattice& lat, ElementSubset xs) {
  ElementSubset s = xs | ElementSubset::single(lat.top());
  for (bool changed = true; changed;) {
    changed = false;
    for (Element x : s) {
      for (Element y : s) {
        Element p = lat.prod(x, y);
        if (!s.contains(p)) {
          s.insert(p);
          changed = true;
        }
      }
    }
  }
  ElementSubset up;
  for (Element x : s) up |= lat.up(x);
  return Filter::unchecked(up);
}

Filter principal_filter(const ResiduatedLattice& lat, Element x) { return generated_filter(lat, ElementSubset::single(x)); }

Filter filter_join(const ResiduatedLattice& lat, const Filter& a, const Filter& b) {
  return generated_filter(lat, a.elements() | b.elements());
}

Filter filter_extend(const ResiduatedLattice& lat, const Filter& f, Element x) {
  return generated_filter(lat, f.elements() | ElementSubset::single(x));
}

FiltersLattice::FiltersLattice(std::vector<Filter> filters, std::vector<std::size_t> meet, std::vector<std::size_t> join)
    : filters_(std::move(filters)), meet_(std::move(meet)), join_(std::move(join)) {
  for (std::size_t i = 0; i < filters_.size(); ++i) index_.emplace(filters_[i].elements(), i);
}

std::optional<std::size_t> FiltersLattice::index_of(const Filter& f) const {
  auto it = index_.find(f.elements());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FiltersLattice enumerate_filters(const ResiduatedLattice& lat) {
  const auto n = lat.size();
  const std::uint32_t top_bit = 1U << lat.top();
  std::vector<Filter> found;
  for (std::uint32_t bits = 0; bits < (1U << n); ++bits) {
    if (!(bits & top_bit)) continue;
    ElementSubset s(bits);
    if (is_filter(lat, s)) found.push_back(Filter::unchecked(s));
  }
  std::sort(found.begin(), found.end(), [](const Filter& a, const Filter& b) { return canonical_less(a, b); });

  const auto k = found.size();
  std::unordered_map<ElementSubset, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) index.emplace(found[i].elements(), i);
  std::vector<std::size_t> meet(k * k), join(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      meet[i * k + j] = index.at(found[i].elements() & found[j].elements());
      join[i * k + j] = index.at(filter_join(lat, found[i], found[j]).elements());
    }
  }
  return FiltersLattice(std::move(found), std::move(meet), std::move(join));
}

Filter coannihilator(const ResiduatedLattice& lat, const Filter& f, ElementSubset xs) {
  ElementSubset out;
  for (Element a = 0; a < lat.size(); ++a) {
    bool all = true;
    for (Element x : xs) {
      if (!f.contains(lat.join(a, x))) {
        all = false;
        break;
      }
    }
    if (all) out.insert(a);
  }
  if (!is_filter(lat, out)) throw std::logic_error("coannihilator is not a filter: " + format_subset(lat, out));
  return Filter::unchecked(out);
}

Filter annihilator(const ResiduatedLattice& lat, Element x) {
  return coannihilator(lat, unit_filter(lat), ElementSubset::single(x));
}

Filter annihilator(const ResiduatedLattice& lat, ElementSubset xs) { return coannihilator(lat, unit_filter(lat), xs); }

Filter double_annihilator(const ResiduatedLattice& lat, Element x) {
  return annihilator(lat, annihilator(lat, x).elements());
}

std::vector<Filter> maximal_filters(const ResiduatedLattice& lat, const FiltersLattice& fl) {
  std::vector<Filter> out;
  for (const auto& f : fl.all()) {
    if (!is_proper(lat, f)) continue;
    bool maximal = std::none_of(fl.all().begin(), fl.all().end(), [&](const Filter& g) {
      return is_proper(lat, g) && g != f && f.is_subset_of(g);
    });
    if (maximal) out.push_back(f);
  }
  return out;
}

Filter radical(const ResiduatedLattice& lat, const FiltersLattice& fl, const Filter& f) {
  ElementSubset acc = lat.carrier();
  for (const auto& m : maximal_filters(lat, fl))
    if (f.is_subset_of(m)) acc &= m.elements();
  return Filter::unchecked(acc);
}

ElementSubset QuotientResult::image(ElementSubset s) const {
  ElementSubset out;
  for (Element x : s) out.insert(projection[x]);
  return out;
}

ElementSubset QuotientResult::preimage(ElementSubset t) const {
  ElementSubset out;
  for (Element x = 0; x < projection.size(); ++x)
    if (t.contains(projection[x])) out.insert(x);
  return out;
}

QuotientResult quotient(const ResiduatedLattice& lat, const Filter& f) {
  const auto n = static_cast<Element>(lat.size());
  auto equiv = [&](Element x, Element y) { return f.contains(lat.res(x, y)) && f.contains(lat.res(y, x)); };

  std::vector<Element> projection(n, n);
  std::vector<ElementSubset> classes;
  for (Element x = 0; x < n; ++x) {
    if (projection[x] != n) continue;
    ElementSubset cls;
    for (Element y = x; y < n; ++y)
      if (equiv(x, y)) cls.insert(y);
    for (Element y : cls) projection[y] = static_cast<Element>(classes.size());
    classes.push_back(cls);
  }

  const auto k = static_cast<Element>(classes.size());
  std::vector<Element> rep(k);
  for (Element c = 0; c < k; ++c) {
    std::optional<Element> greatest;
    for (Element y : classes[c])
      if (classes[c].is_subset_of(lat.down(y))) greatest = y;
    if (!greatest) throw std::logic_error("congruence class without a greatest element");
    rep[c] = *greatest;
  }

  RawTables raw;
  raw.name = lat.name() + "/" + format_subset(lat, f.elements());
  for (Element c = 0; c < k; ++c) raw.element_names.push_back(lat.element_name(rep[c]));
  raw.bottom = projection[lat.bottom()];
  raw.top = projection[lat.top()];
  for (Element c = 0; c < k; ++c)
    for (Element d = 0; d < k; ++d)
      if (c != d && f.contains(lat.res(rep[c], rep[d]))) raw.order.emplace_back(c, d);
  raw.prod.resize(static_cast<std::size_t>(k) * k);
  for (Element c = 0; c < k; ++c)
    for (Element d = 0; d < k; ++d) raw.prod[c * k + d] = projection[lat.prod(rep[c], rep[d])];

  QuotientResult out{validate_or_throw(raw, {.allow_degenerate = true}), std::move(projection), std::move(classes),
                     k == 1};
  return out;
}

bool is_lattice_ideal(const ResiduatedLattice& lat, ElementSubset s) {
  if (s.empty()) return false;
  for (Element x : s)
    if (!lat.down(x).is_subset_of(s)) return false;
  for (Element x : s)
    for (Element y : s)
      if (!s.contains(lat.join(x, y))) return false;
  return true;
}

LatticeIdeal make_lattice_ideal(const ResiduatedLattice& lat, ElementSubset s) {
  if (!is_lattice_ideal(lat, s)) throw std::invalid_argument(format_subset(lat, s) + " is not a lattice ideal");
  return LatticeIdeal::unchecked(s);
}

std::vector<LatticeIdeal> enumerate_lattice_ideals(const ResiduatedLattice& lat) {
  std::vector<LatticeIdeal> out;
  const auto n = lat.size();
  for (std::uint32_t bits = 1; bits < (1U << n); ++bits)
    if (is_lattice_ideal(lat, ElementSubset(bits))) out.push_back(LatticeIdeal::unchecked(ElementSubset(bits)));
  std::sort(out.begin(), out.end(),
            [](const LatticeIdeal& a, const LatticeIdeal& b) { return canonical_less(a.elements(), b.elements()); });
  return out;
}

Filter omega_filter(const ResiduatedLattice& lat, const LatticeIdeal& ideal) {
  ElementSubset out;
  for (Element a = 0; a < lat.size(); ++a)
    for (Element x : ideal.elements())
      if (lat.join(a, x) == lat.top()) {
        out.insert(a);
        break;
      }
  if (!is_filter(lat, out)) throw std::logic_error("ω-set is not a filter: " + format_subset(lat, out));
  return Filter::unchecked(out);
}

std::vector<Filter> omega_filters(const ResiduatedLattice& lat) {
  std::vector<Filter> out;
  for (const auto& ideal : enumerate_lattice_ideals(lat)) {
    auto f = omega_filter(lat, ideal);
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), [](const Filter& a, const Filter& b) { return canonical_less(a, b); });
  return out;
}

bool is_alpha(const ResiduatedLattice& lat, const Filter& f) {
  for (Element x : f.elements())
    if (!double_annihilator(lat, x).is_subset_of(f)) return false;
  return true;
}

Filter alpha_closure(const ResiduatedLattice& lat, ElementSubset xs) {
  Filter f = generated_filter(lat, xs);
  for (;;) {
    ElementSubset grow = f.elements();
    for (Element x : f.elements()) grow |= double_annihilator(lat, x).elements();
    Filter next = generated_filter(lat, grow);
    if (next == f) return f;
    f = next;
  }
}

std::vector<Filter> enumerate_alpha(const ResiduatedLattice& lat, const FiltersLattice& fl) {
  std::vector<Filter> out;
  for (const auto& f : fl.all())
    if (is_alpha(lat, f)) out.push_back(f);
  return out;
}

FlatnessResult is_projection_flat(const ResiduatedLattice& lat, const FiltersLattice& fl, const Filter& f) {
  for (const auto& g : fl.all()) {
    const Filter gf = filter_join(lat, g, f);
    for (Element a = 0; a < lat.size(); ++a) {
      const auto single = ElementSubset::single(a);
      const Filter lhs = coannihilator(lat, gf, single);
      const Filter rhs = filter_join(lat, coannihilator(lat, g, single), f);
      if (!lhs.is_subset_of(rhs)) {
        return {false, FlatnessWitness{g, a, (lhs.elements() - rhs.elements()).lowest()}};
      }
    }
  }
  return {};
}

}  // namespace rlat
