#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rlat/lattice.hpp"

namespace rlat {

/// Names of the built-in example algebras: A6, B6, C6, A8.
const std::vector<std::string>& fixture_names();
/// Source text of a built-in algebra; throws std::out_of_range.
std::string_view fixture_text(std::string_view name);
/// Parsed and validated built-in algebra.
ResiduatedLattice fixture(std::string_view name);

}  // namespace rlat
