#pragma once

#include <vector>

#include "rlat/filters.hpp"
#include "rlat/spectra.hpp"

namespace rlat {

/// A validated algebra together with its filters and spectra, computed once.
class Instance {
 public:
  explicit Instance(ResiduatedLattice lat);

  const ResiduatedLattice& lattice() const { return lat_; }
  const FiltersLattice& filters() const { return filters_; }
  /// Spec, Max and Min in canonical order.
  const std::vector<Filter>& spec() const { return spec_; }
  const std::vector<Filter>& max() const { return max_; }
  const std::vector<Filter>& min() const { return min_; }

  Filter filter(ElementSubset s) const { return make_filter(lat_, s); }

 private:
  ResiduatedLattice lat_;
  FiltersLattice filters_;
  std::vector<Filter> spec_, max_, min_;
};

}  // namespace rlat
