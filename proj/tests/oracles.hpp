#pragma once

// Brute-force reference implementations used only by tests. None of these
// call into the library's closure, canonical-form or enumeration code.

#include <vector>

#include "dlat/lattice.hpp"
#include "dlat/partition.hpp"

namespace dlat::oracle {

/// Tries every permutation of the elements.
bool isomorphic(const FiniteLattice& a, const FiniteLattice& b);

/// Every partition of {0..n-1}, as label vectors (restricted growth strings).
std::vector<std::vector<std::size_t>> set_partitions(std::size_t n);

/// Meet/join compatibility by direct scan.
bool compatible(const FiniteLattice& l, const std::vector<std::size_t>& labels);

/// All congruences by scanning the partition space, normalized and sorted.
std::vector<Partition> congruences(const FiniteLattice& l);

/// Intersection of every congruence relating all of `elements`.
Partition least_congruence_containing(const FiniteLattice& l, const std::vector<ElementId>& elements);

/// Every order matrix with bottom 0 and top n-1 that from_leq_matrix accepts.
std::vector<FiniteLattice> labeled_lattices(std::size_t n);

/// One representative per isomorphism class of labeled_lattices(n), using
/// `isomorphic` for rejection.
std::vector<FiniteLattice> lattice_classes(std::size_t n);

/// Named small lattices used across tests: chain(k) for k = 1..5,
/// boolean(2), boolean(3), n5, m3, products and their duals.
std::vector<FiniteLattice> corpus();

}  // namespace dlat::oracle
