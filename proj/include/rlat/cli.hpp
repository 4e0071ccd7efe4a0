#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rlat/lattice.hpp"

namespace rlat::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationFailure = 1,
  kViolation = 2,
  kUsage = 3,
};

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Hasse diagram of the underlying lattice, edges from x to each cover of x.
std::string hasse_dot(const ResiduatedLattice& lat);

}  // namespace rlat::cli
