#pragma once

#include "dlat/congruence.hpp"
#include "dlat/lattice.hpp"

namespace dlat {

struct Quotient {
  FiniteLattice lattice;
  LatticeHomomorphism projection;
};

/// L/φ. Block k of the normalized partition becomes element k; block X ≤ Y
/// iff some x ∈ X lies below some y ∈ Y. Throws OwnerMismatch if φ belongs
/// to a different lattice.
Quotient quotient(const FiniteLattice& lattice, const Congruence& phi);

/// Same, for a bare partition. Throws NotACongruence.
Quotient quotient(const FiniteLattice& lattice, const Partition& partition);

}  // namespace dlat
