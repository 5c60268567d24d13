#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dlat/congruence.hpp"
#include "dlat/element_set.hpp"
#include "dlat/lattice.hpp"

namespace dlat {

/// (a, top) ∈ θ(bottom, c) ⇒ a ∨ c = top, and (a, bottom) ∈ θ(top, c) ⇒
/// a ∧ c = bottom, for all a, c.
bool is_d_lattice_definition(const FiniteLattice& lattice);

/// Every maximal ideal and every maximal filter is prime.
bool is_d_lattice_maximal_prime(const FiniteLattice& lattice);

inline bool is_d_lattice(const FiniteLattice& lattice) { return is_d_lattice_definition(lattice); }

/// Least b with a ∧ b = bottom and a ∨ b = top.
std::optional<ElementId> find_complement(const FiniteLattice& lattice, ElementId a);

/// Every element has a complement, by direct scan.
bool is_complemented_by_scan(const FiniteLattice& lattice);
/// F_a ∩ I_a is nonempty for every a.
bool is_complemented_by_annihilators(const FiniteLattice& lattice);
/// Computes both forms; throws PostconditionFailed if they disagree.
bool is_complemented(const FiniteLattice& lattice);

/// The seven conditions of the balanced/complemented equivalence for
/// d-lattices, indexed 1..7:
///   1 some maximal filter has a complement that is not a maximal ideal
///   2 some maximal ideal has a complement that is not a maximal filter
///   3 two prime ideals, one properly containing the other
///   4 two prime filters, one properly containing the other
///   5 a homomorphism onto the 3-element chain
///   6 not balanced
///   7 not complemented
struct SevenConditions {
  std::array<bool, 7> values{};

  bool operator[](int k) const { return values.at(static_cast<std::size_t>(k - 1)); }
  bool all_equal() const;
  friend bool operator==(const SevenConditions&, const SevenConditions&) = default;
};

/// One arrow of the implication diagram: condition `from` implies `to`.
struct Implication {
  int from;
  int to;
};

inline constexpr std::array<Implication, 8> kImplicationDiagram = {{
    {7, 1}, {7, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 5}, {5, 6}, {6, 7},
}};

SevenConditions seven_conditions(const FiniteLattice& lattice);

struct NestedPair {
  ElementSet lower;
  ElementSet upper;
};

/// First pair (in enumeration order) of prime ideals with lower ⊊ upper.
std::optional<NestedPair> find_nested_prime_ideals(const FiniteLattice& lattice);
std::optional<NestedPair> find_nested_prime_filters(const FiniteLattice& lattice);

/// Sends I1 to 0, I2∖I1 to the middle and L∖I2 to top of the 3-element
/// chain. Throws NotNestedPrimes unless I1 ⊊ I2 are prime ideals, and
/// HomomorphismCheckFailed if the map does not verify.
LatticeHomomorphism three_chain_quotient_from_nested_primes(const FiniteLattice& lattice,
                                                            const ElementSet& lower,
                                                            const ElementSet& upper);

/// Searches Con(L) for a congruence whose quotient is the 3-element chain.
std::optional<Congruence> find_three_chain_congruence(const FiniteLattice& lattice);

/// Concrete instance of "not complemented ⇒ some maximal filter has a
/// non-maximal complement".
struct NonComplementedWitness {
  ElementId a = 0;
  ElementSet annihilator_filter;  // F_a
  ElementSet annihilator_ideal;   // I_a
  ElementSet generated_filter;    // F1, generated by F_a ∪ {a}
  ElementSet maximal_filter;      // F ⊇ F1
  ElementSet complement_ideal;    // I1 = L ∖ F
  ElementSet extended_ideal;      // I, generated by I1 ∪ {a}
};

/// Throws NotDLattice or HasComplement when the preconditions fail, and
/// PostconditionFailed if a constructed set misses its stated property.
NonComplementedWitness witness_from_noncomplemented(const FiniteLattice& lattice, ElementId a);

enum class Verdict { Pass, Fail, OutOfScope };

std::string_view verdict_name(Verdict v);

struct TheoremVerdict {
  Verdict verdict = Verdict::OutOfScope;
  bool d_lattice = false;
  bool balanced = false;
  bool complemented = false;
  SevenConditions conditions;
  std::vector<std::string> failures;
};

/// On a d-lattice, checks that the seven conditions coincide and that
/// balanced ⇔ complemented. Non-d-lattices get OutOfScope.
TheoremVerdict verify_theorem(const FiniteLattice& lattice);

struct PropertyCounts {
  std::size_t ideals = 0;
  std::size_t filters = 0;
  std::size_t prime_ideals = 0;
  std::size_t prime_filters = 0;
  std::size_t congruences = 0;
};

struct NonPrimeMaximal {
  bool is_ideal = true;  // false: a maximal filter
  ElementSet set;
};

struct PropertyWitnesses {
  std::optional<NestedPair> nested_prime_ideals;         // condition 3
  std::optional<ElementId> noncomplemented_element;      // not complemented
  std::optional<Partition> unbalanced_congruence;        // not balanced
  std::optional<NonPrimeMaximal> non_prime_maximal;      // not a d-lattice
};

struct PropertyReport {
  std::size_t size = 0;
  bool bounded = true;
  bool d_lattice = false;
  bool balanced = false;
  bool complemented = false;
  bool distributive = false;
  SevenConditions conditions;
  PropertyCounts counts;
  PropertyWitnesses witnesses;
  /// Set for the one-element lattice, whose classification rests on the
  /// convention that bottom = top complements itself.
  bool degenerate = false;
};

PropertyReport classify(const FiniteLattice& lattice);

}  // namespace dlat
