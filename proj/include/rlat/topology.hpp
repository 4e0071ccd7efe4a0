#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rlat/filters.hpp"

namespace rlat {

/// Points are filters for spectral spaces and plain tokens otherwise.
using PointLabel = std::variant<Filter, std::string>;

std::string describe(const ResiduatedLattice& lat, const PointLabel& label);

/// Largest point count a space may have; open families are enumerated over
/// all subsets of points.
inline constexpr std::size_t kMaxPoints = 20;

/// A topology on finitely many points, stored as its full open family.
class FiniteSpace {
 public:
  FiniteSpace() = default;

  /// Checks that opens contain ∅ and the full set and are closed under ∪, ∩.
  /// Throws std::invalid_argument otherwise.
  static FiniteSpace from_opens(std::vector<PointLabel> labels, std::vector<PointSet> opens);
  /// Coarsest topology in which every member of subbasis is open.
  static FiniteSpace generated(std::vector<PointLabel> labels, const std::vector<PointSet>& subbasis);

  std::size_t size() const { return labels_.size(); }
  const std::vector<PointLabel>& labels() const { return labels_; }
  const PointLabel& label(std::size_t p) const { return labels_[p]; }
  std::optional<std::size_t> find(const PointLabel& label) const;

  PointSet points() const { return PointSet::full(size()); }
  /// Canonical order.
  const std::vector<PointSet>& opens() const { return opens_; }
  std::vector<PointSet> closed_sets() const;

  /// Smallest open set containing p.
  PointSet minimal_open(std::size_t p) const { return minimal_open_[p]; }
  bool is_open(PointSet s) const;
  bool is_closed(PointSet s) const { return is_open(s.complement(size())); }
  PointSet interior(PointSet s) const;
  PointSet closure(PointSet s) const;
  PointSet point_closure(std::size_t p) const { return closure(PointSet::single(static_cast<std::uint32_t>(p))); }

  bool operator==(const FiniteSpace& other) const { return opens_ == other.opens_; }

 private:
  FiniteSpace(std::vector<PointLabel> labels, std::vector<PointSet> minimal_open);

  std::vector<PointLabel> labels_;
  std::vector<PointSet> minimal_open_;
  std::vector<PointSet> opens_;
};

/// A total function between the points of two spaces.
struct PointMap {
  const FiniteSpace* source = nullptr;
  const FiniteSpace* target = nullptr;
  std::vector<std::size_t> image;

  PointSet apply(PointSet s) const;
  PointSet preimage(PointSet t) const;
};

/// A point map that owns its two spaces.
struct OwnedPointMap {
  FiniteSpace source;
  FiniteSpace target;
  std::vector<std::size_t> image;

  PointMap view() const { return {&source, &target, image}; }
};

struct SeparationReport {
  bool t0 = true;
  bool t1 = true;
  bool hausdorff = true;
  bool sober = true;
  bool connected = true;
  std::string compact_note = "trivially compact (finite)";
};

SeparationReport separation_report(const FiniteSpace& s);

struct IrreducibleClosed {
  PointSet set;
  PointSet generic_points;
};

/// In a finite space these are exactly the point closures.
std::vector<IrreducibleClosed> irreducible_closed_sets(const FiniteSpace& s);

std::vector<PointSet> clopens(const FiniteSpace& s);

struct MapReport {
  bool continuous = true;
  bool open = true;
  bool closed = true;
  bool injective = true;
  bool surjective = true;
  bool homeomorphism = true;
  bool retraction_onto_image = true;
};

MapReport map_analysis(const PointMap& m);

/// Specialization order as DOT: edge p -> q iff p lies in the closure of q.
std::string to_dot(const FiniteSpace& s, const ResiduatedLattice& lat, const std::string& graph_name);

}  // namespace rlat
