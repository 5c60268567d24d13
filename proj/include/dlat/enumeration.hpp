#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

#include "dlat/lattice.hpp"
#include "dlat/properties.hpp"

namespace dlat {

inline constexpr std::size_t kMaxEnumerationSize = 10;

/// One representative per isomorphism class of n-element lattices, each in
/// canonical labeling, sorted by canonical form. Throws SizeOutOfRange
/// outside 1..kMaxEnumerationSize.
///
/// Every lattice with n+1 ≥ 3 elements is obtained from one with n elements
/// by adding a new atom below a suitable set U of old elements, so sizes
/// are built one from the previous. U is kept only when the extension
/// still has all meets and joins.
std::vector<FiniteLattice> enumerate_lattices(std::size_t n);

/// enumerate_lattices(k) for k = 1..max_n, computed in one pass.
std::vector<std::vector<FiniteLattice>> enumerate_lattices_up_to(std::size_t max_n);

enum class SearchPredicate {
  BalancedNotComplementedD,
  ComplementedNotBalanced,
  DLatticeDefinitionVsTheorem1Mismatch,
  SevenConditionsSplit,
};

std::string_view predicate_name(SearchPredicate p);
/// Throws UnknownPredicate.
SearchPredicate parse_predicate(std::string_view name);
std::vector<SearchPredicate> all_predicates();

bool matches(SearchPredicate p, const FiniteLattice& lattice);

struct SearchWitness {
  FiniteLattice lattice;
  PropertyReport report;
};

/// All lattices of size ≤ max_n satisfying the predicate.
std::vector<SearchWitness> search_counterexample(SearchPredicate p, std::size_t max_n);

struct EnumerationStats {
  std::size_t size = 0;
  std::size_t lattice_count = 0;
  std::size_t d_lattice_count = 0;
  std::size_t balanced_count = 0;
  std::size_t complemented_count = 0;
  std::size_t d_balanced_count = 0;
  std::size_t d_complemented_count = 0;
  std::chrono::duration<double, std::milli> elapsed{};
};

std::vector<EnumerationStats> census(std::size_t max_n);

}  // namespace dlat
