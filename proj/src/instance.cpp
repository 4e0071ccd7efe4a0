#include "rlat/instance.hpp"

namespace rlat {

Instance::Instance(ResiduatedLattice lat)
    : lat_(std::move(lat)),
      filters_(enumerate_filters(lat_)),
      spec_(spectrum(lat_, filters_, SpectrumKind::prime).points),
      max_(spectrum(lat_, filters_, SpectrumKind::maximal).points),
      min_(spectrum(lat_, filters_, SpectrumKind::minimal_prime).points) {}

}  // namespace rlat
