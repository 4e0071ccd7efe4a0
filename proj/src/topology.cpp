#include "rlat/topology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace rlat {

std::string describe(const ResiduatedLattice& lat, const PointLabel& label) {
  if (const auto* f = std::get_if<Filter>(&label)) return format_subset(lat, f->elements());
  return std::get<std::string>(label);
}

namespace {

void check_point_count(std::size_t m) {
  if (m > kMaxPoints)
    throw SizeLimitError("space has " + std::to_string(m) + " points, limit is " + std::to_string(kMaxPoints));
}

}  // namespace

FiniteSpace::FiniteSpace(std::vector<PointLabel> labels, std::vector<PointSet> minimal_open)
    : labels_(std::move(labels)), minimal_open_(std::move(minimal_open)) {
  const auto m = size();
  // Minimal neighbourhoods must nest: q ∈ U_p implies U_q ⊆ U_p.
  for (std::size_t p = 0; p < m; ++p) {
    if (!minimal_open_[p].contains(static_cast<std::uint32_t>(p)))
      throw std::logic_error("minimal open set misses its point");
    for (auto q : minimal_open_[p])
      if (!minimal_open_[q].is_subset_of(minimal_open_[p])) throw std::logic_error("minimal open sets do not nest");
  }
  for (std::uint32_t bits = 0; bits < (1U << m); ++bits)
    if (is_open(PointSet(bits))) opens_.push_back(PointSet(bits));
  std::sort(opens_.begin(), opens_.end(), [](PointSet a, PointSet b) { return canonical_less(a, b); });
}

FiniteSpace FiniteSpace::from_opens(std::vector<PointLabel> labels, std::vector<PointSet> opens) {
  const auto m = labels.size();
  check_point_count(m);
  const auto full = PointSet::full(m);
  std::unordered_set<PointSet> family(opens.begin(), opens.end());
  for (auto o : family)
    if (!o.is_subset_of(full)) throw std::invalid_argument("open set mentions a point outside the space");
  if (!family.count(PointSet{}) || !family.count(full)) throw std::invalid_argument("∅ and the whole space must be open");
  for (auto a : family)
    for (auto b : family)
      if (!family.count(a | b) || !family.count(a & b))
        throw std::invalid_argument("open family is not closed under union and intersection");
  std::vector<PointSet> minimal(m, full);
  for (auto o : family)
    for (auto p : o) minimal[p] &= o;
  FiniteSpace s(std::move(labels), std::move(minimal));
  if (s.opens_.size() != family.size()) throw std::logic_error("open family reconstruction mismatch");
  return s;
}

FiniteSpace FiniteSpace::generated(std::vector<PointLabel> labels, const std::vector<PointSet>& subbasis) {
  const auto m = labels.size();
  check_point_count(m);
  std::vector<PointSet> minimal(m, PointSet::full(m));
  for (auto b : subbasis)
    for (auto p : b) minimal[p] &= b;
  return FiniteSpace(std::move(labels), std::move(minimal));
}

std::optional<std::size_t> FiniteSpace::find(const PointLabel& label) const {
  for (std::size_t p = 0; p < size(); ++p)
    if (labels_[p] == label) return p;
  return std::nullopt;
}

std::vector<PointSet> FiniteSpace::closed_sets() const {
  std::vector<PointSet> out;
  out.reserve(opens_.size());
  for (auto o : opens_) out.push_back(o.complement(size()));
  std::sort(out.begin(), out.end(), [](PointSet a, PointSet b) { return canonical_less(a, b); });
  return out;
}

bool FiniteSpace::is_open(PointSet s) const {
  for (auto p : s)
    if (!minimal_open_[p].is_subset_of(s)) return false;
  return true;
}

PointSet FiniteSpace::interior(PointSet s) const {
  PointSet out;
  for (auto p : s)
    if (minimal_open_[p].is_subset_of(s)) out.insert(p);
  return out;
}

PointSet FiniteSpace::closure(PointSet s) const {
  PointSet out;
  for (std::uint32_t q = 0; q < size(); ++q)
    if (minimal_open_[q].intersects(s)) out.insert(q);
  return out;
}

PointSet PointMap::apply(PointSet s) const {
  PointSet out;
  for (auto p : s) out.insert(static_cast<std::uint32_t>(image[p]));
  return out;
}

PointSet PointMap::preimage(PointSet t) const {
  PointSet out;
  for (std::uint32_t p = 0; p < image.size(); ++p)
    if (t.contains(static_cast<std::uint32_t>(image[p]))) out.insert(p);
  return out;
}

SeparationReport separation_report(const FiniteSpace& s) {
  SeparationReport r;
  const auto m = s.size();
  for (std::uint32_t p = 0; p < m; ++p) {
    if (s.point_closure(p) != PointSet::single(p)) r.t1 = false;
    for (std::uint32_t q = p + 1; q < m; ++q) {
      const auto up = s.minimal_open(p), uq = s.minimal_open(q);
      if (up.contains(q) && uq.contains(p)) r.t0 = false;
      if (up.intersects(uq)) r.hausdorff = false;
    }
  }
  for (const auto& c : irreducible_closed_sets(s))
    if (c.generic_points.size() != 1) r.sober = false;
  r.connected = clopens(s).size() <= 2;
  return r;
}

std::vector<IrreducibleClosed> irreducible_closed_sets(const FiniteSpace& s) {
  std::vector<IrreducibleClosed> out;
  for (std::uint32_t p = 0; p < s.size(); ++p) {
    const auto c = s.point_closure(p);
    auto it = std::find_if(out.begin(), out.end(), [&](const IrreducibleClosed& e) { return e.set == c; });
    if (it == out.end()) out.push_back({c, PointSet::single(p)});
    else it->generic_points.insert(p);
  }
  std::sort(out.begin(), out.end(),
            [](const IrreducibleClosed& a, const IrreducibleClosed& b) { return canonical_less(a.set, b.set); });
  return out;
}

std::vector<PointSet> clopens(const FiniteSpace& s) {
  std::vector<PointSet> out;
  for (auto o : s.opens())
    if (s.is_closed(o)) out.push_back(o);
  return out;
}

MapReport map_analysis(const PointMap& m) {
  const auto& src = *m.source;
  const auto& tgt = *m.target;
  if (m.image.size() != src.size()) throw std::invalid_argument("point map is not total on its source");
  MapReport r;
  for (std::uint32_t p = 0; p < src.size(); ++p) {
    if (m.image[p] >= tgt.size()) throw std::invalid_argument("point map leaves its target");
    // Images distribute over unions, so minimal neighbourhoods and point
    // closures suffice.
    if (!m.apply(src.minimal_open(p)).is_subset_of(tgt.minimal_open(m.image[p]))) r.continuous = false;
    if (!tgt.is_open(m.apply(src.minimal_open(p)))) r.open = false;
    if (!tgt.is_closed(m.apply(src.point_closure(p)))) r.closed = false;
  }
  const auto img = m.apply(src.points());
  r.surjective = img == tgt.points();
  r.injective = img.size() == src.size();
  r.homeomorphism = r.injective && r.surjective && r.continuous && r.open;
  r.retraction_onto_image = r.continuous;
  for (std::uint32_t p = 0; p < src.size(); ++p) {
    auto q = tgt.find(src.label(p));
    if (q && img.contains(static_cast<std::uint32_t>(*q)) && m.image[p] != *q) r.retraction_onto_image = false;
  }
  return r;
}

std::string to_dot(const FiniteSpace& s, const ResiduatedLattice& lat, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph \"" << graph_name << "\" {\n";
  for (std::size_t p = 0; p < s.size(); ++p) os << "  p" << p << " [label=\"" << describe(lat, s.label(p)) << "\"];\n";
  for (std::uint32_t q = 0; q < s.size(); ++q)
    for (auto p : s.point_closure(q))
      if (p != q) os << "  p" << p << " -> p" << q << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace rlat
