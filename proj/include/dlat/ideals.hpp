#pragma once

#include <vector>

#include "dlat/congruence.hpp"
#include "dlat/element_set.hpp"
#include "dlat/lattice.hpp"

namespace dlat {

// Ideals and filters are nonempty. The improper ideal (filter) L itself is
// an ideal (filter) but never prime or maximal.

bool is_ideal(const FiniteLattice& lattice, const ElementSet& s);
bool is_filter(const FiniteLattice& lattice, const ElementSet& s);

/// All ideals, sorted by (size, bitmask). In a finite lattice these are
/// exactly the principal down-sets.
std::vector<ElementSet> enumerate_ideals(const FiniteLattice& lattice);
std::vector<ElementSet> enumerate_filters(const FiniteLattice& lattice);

/// Same result by testing every subset. Only for small lattices (n ≤ 20).
std::vector<ElementSet> enumerate_ideals_by_scan(const FiniteLattice& lattice);
std::vector<ElementSet> enumerate_filters_by_scan(const FiniteLattice& lattice);

/// Proper, and x∧y ∈ I implies x ∈ I or y ∈ I. Throws NotAnIdeal.
bool is_prime_ideal(const FiniteLattice& lattice, const ElementSet& ideal);
/// Proper, and x∨y ∈ F implies x ∈ F or y ∈ F. Throws NotAFilter.
bool is_prime_filter(const FiniteLattice& lattice, const ElementSet& filter);

/// Proper and not strictly inside another proper ideal. Throws NotAnIdeal.
bool is_maximal_ideal(const FiniteLattice& lattice, const ElementSet& ideal);
bool is_maximal_filter(const FiniteLattice& lattice, const ElementSet& filter);

std::vector<ElementSet> prime_ideals(const FiniteLattice& lattice);
std::vector<ElementSet> prime_filters(const FiniteLattice& lattice);
std::vector<ElementSet> maximal_ideals(const FiniteLattice& lattice);
std::vector<ElementSet> maximal_filters(const FiniteLattice& lattice);

/// Least ideal containing s: close under joins, then take the down-set.
/// Throws EmptySet.
ElementSet ideal_generated_by(const FiniteLattice& lattice, const ElementSet& s);
ElementSet filter_generated_by(const FiniteLattice& lattice, const ElementSet& s);

/// F_a = {x : x ∨ a = top}. No closure applied.
ElementSet annihilator_filter(const FiniteLattice& lattice, ElementId a);
/// I_a = {x : x ∧ a = bottom}. No closure applied.
ElementSet annihilator_ideal(const FiniteLattice& lattice, ElementId a);

/// The two-block congruence {I, L∖I} of a prime ideal. Throws NotPrime
/// (or NotAnIdeal).
Congruence prime_ideal_congruence(const FiniteLattice& lattice, const ElementSet& ideal);

}  // namespace dlat
