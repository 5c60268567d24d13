#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "dlat/lattice.hpp"

namespace dlat {

// LATT v1 text format:
//
//   LATT 1
//   n=<k>
//   <k lines of k characters '0'/'1'; char j of line i is '1' iff i <= j>
//
// Every line ends with '\n', including the last. Anything else is rejected.

/// Throws Error; ParseError for malformed text, and the lattice-construction
/// codes for well-formed matrices that are not bounded lattices. Either way
/// `Error::line()` holds the 1-based line the problem was found on.
FiniteLattice parse_latt(std::string_view text);

std::string to_latt(const FiniteLattice& lattice);

FiniteLattice read_latt_file(const std::filesystem::path& path);
void write_latt_file(const std::filesystem::path& path, const FiniteLattice& lattice);

}  // namespace dlat
