#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "rlat/lattice.hpp"

namespace rlat {

/// Syntax or shape error in a lattice file; carries the 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Line-oriented format, '#' starts a comment:
//
//   lattice <name>
//   elements <tok0> <tok1> ...
//   bottom <tok>
//   top <tok>
//   cover <x> <y>          x is covered by y
//   mul <x> <y> <tok>      x⊙y, symmetric
//   res <x> <y> <tok>      optional cross-check
//   end
//
// Products with bottom default to bottom and products with top default to
// the other operand; every other unordered pair needs exactly one mul row.
RawTables parse_rlat(std::string_view text);
RawTables read_rlat_file(const std::string& path);

/// Emits covers and the mul rows that are not defaulted.
std::string write_rlat(const ResiduatedLattice& lat);

}  // namespace rlat
