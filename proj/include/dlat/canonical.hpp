#pragma once

#include <string>
#include <vector>

#include "dlat/lattice.hpp"

namespace dlat {

/// A canonical relabeling of a lattice. `perm[x]` is the new index of
/// element x; `form` is the row-major order matrix ('0'/'1', n*n chars)
/// under that relabeling. Bottom becomes 0 and top becomes n-1.
struct CanonicalLabeling {
  std::string form;
  std::vector<ElementId> perm;
};

/// Elements are grouped by (height, depth, #below, #above) and positions are
/// filled class by class in ascending key order, which is a linear
/// extension. Within that search space the encoding minimized is the
/// column-wise strict upper triangle (column k lists which earlier positions
/// lie below position k). Interchangeable incomparable elements (same strict
/// up- and down-sets) are only branched on once.
CanonicalLabeling canonical_labeling(const FiniteLattice& lattice);

/// Equal for two lattices iff they are isomorphic.
std::string canonical_form(const FiniteLattice& lattice);

/// The lattice relabeled into canonical order.
FiniteLattice canonical_lattice(const FiniteLattice& lattice);

bool is_isomorphic(const FiniteLattice& a, const FiniteLattice& b);

}  // namespace dlat
