#include "dlat/enumeration.hpp"

#include <map>

#include "dlat/canonical.hpp"
#include "dlat/congruence.hpp"

namespace dlat {
namespace {

void require_size(std::size_t n) {
  if (n < 1 || n > kMaxEnumerationSize) {
    throw Error(Errc::SizeOutOfRange, "size must be between 1 and " +
                                          std::to_string(kMaxEnumerationSize) + ", got " +
                                          std::to_string(n));
  }
}

// Can a new atom sit below exactly the elements of `above` (an up-set of
// non-bottom elements containing top) without breaking the lattice laws?
// Meets: two elements of `above` must meet inside it or at bottom.
// Joins: for each old y outside `above`, the upper bounds of {atom, y},
// namely above ∩ ↑y, need a least element.
bool admissible_atom(const FiniteLattice& l, const ElementSet& above) {
  const std::size_t n = l.size();
  for (ElementId x : above.members()) {
    if (!l.up_set(x).is_subset_of(above)) return false;
  }
  const auto members = above.members();
  for (ElementId x : members) {
    for (ElementId y : members) {
      const ElementId m = l.meet(x, y);
      if (m != l.bottom() && !above.contains(m)) return false;
    }
  }
  for (ElementId y = 0; y < n; ++y) {
    if (y == l.bottom() || above.contains(y)) continue;
    const ElementSet bounds = above & l.up_set(y);
    bool has_least = false;
    for (ElementId z : bounds.members()) {
      if (bounds.is_subset_of(l.up_set(z))) {
        has_least = true;
        break;
      }
    }
    if (!has_least) return false;
  }
  return true;
}

FiniteLattice add_atom(const FiniteLattice& l, const ElementSet& above) {
  const std::size_t n = l.size();
  OrderMatrix m(n + 1);
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) m.set(x, y, l.leq(x, y));
  }
  m.set(n, n, true);
  m.set(l.bottom(), n, true);
  for (ElementId y : above.members()) m.set(n, y, true);
  return from_leq_matrix(m);
}

std::vector<FiniteLattice> extend(const std::vector<FiniteLattice>& smaller) {
  std::map<std::string, FiniteLattice> found;
  for (const auto& l : smaller) {
    const std::size_t n = l.size();
    // Candidate sets: subsets of the non-bottom elements that contain top.
    std::vector<ElementId> free_elements;
    for (ElementId x = 0; x < n; ++x) {
      if (x != l.bottom() && x != l.top()) free_elements.push_back(x);
    }
    const std::uint64_t limit = std::uint64_t{1} << free_elements.size();
    for (std::uint64_t choice = 0; choice < limit; ++choice) {
      ElementSet above(n);
      above.insert(l.top());
      for (std::size_t i = 0; i < free_elements.size(); ++i) {
        if (((choice >> i) & 1U) != 0) above.insert(free_elements[i]);
      }
      if (!admissible_atom(l, above)) continue;
      const FiniteLattice bigger = add_atom(l, above);
      CanonicalLabeling canon = canonical_labeling(bigger);
      if (found.contains(canon.form)) continue;
      found.emplace(std::move(canon.form), relabel(bigger, canon.perm));
    }
  }
  std::vector<FiniteLattice> out;
  out.reserve(found.size());
  for (auto& [form, lattice] : found) out.push_back(lattice);
  return out;
}

}  // namespace

std::vector<std::vector<FiniteLattice>> enumerate_lattices_up_to(std::size_t max_n) {
  require_size(max_n);
  std::vector<std::vector<FiniteLattice>> levels;
  levels.push_back({chain(1)});
  if (max_n >= 2) levels.push_back({chain(2)});
  while (levels.size() < max_n) levels.push_back(extend(levels.back()));
  return levels;
}

std::vector<FiniteLattice> enumerate_lattices(std::size_t n) {
  require_size(n);
  return enumerate_lattices_up_to(n).back();
}

std::string_view predicate_name(SearchPredicate p) {
  switch (p) {
    case SearchPredicate::BalancedNotComplementedD: return "balanced-not-complemented-d";
    case SearchPredicate::ComplementedNotBalanced: return "complemented-not-balanced";
    case SearchPredicate::DLatticeDefinitionVsTheorem1Mismatch:
      return "dlattice-definition-vs-theorem1-mismatch";
    case SearchPredicate::SevenConditionsSplit: return "seven-conditions-split";
  }
  return "unknown";
}

std::vector<SearchPredicate> all_predicates() {
  return {SearchPredicate::BalancedNotComplementedD, SearchPredicate::ComplementedNotBalanced,
          SearchPredicate::DLatticeDefinitionVsTheorem1Mismatch, SearchPredicate::SevenConditionsSplit};
}

SearchPredicate parse_predicate(std::string_view name) {
  for (SearchPredicate p : all_predicates()) {
    if (predicate_name(p) == name) return p;
  }
  throw Error(Errc::UnknownPredicate, "unknown predicate '" + std::string(name) + "'");
}

bool matches(SearchPredicate p, const FiniteLattice& l) {
  switch (p) {
    case SearchPredicate::BalancedNotComplementedD:
      return is_d_lattice(l) && is_balanced(l) && !is_complemented(l);
    case SearchPredicate::ComplementedNotBalanced:
      return is_complemented(l) && !is_balanced(l);
    case SearchPredicate::DLatticeDefinitionVsTheorem1Mismatch:
      return is_d_lattice_definition(l) != is_d_lattice_maximal_prime(l);
    case SearchPredicate::SevenConditionsSplit:
      return is_d_lattice(l) && !seven_conditions(l).all_equal();
  }
  return false;
}

std::vector<SearchWitness> search_counterexample(SearchPredicate p, std::size_t max_n) {
  std::vector<SearchWitness> out;
  for (const auto& level : enumerate_lattices_up_to(max_n)) {
    for (const auto& l : level) {
      if (matches(p, l)) out.push_back({l, classify(l)});
    }
  }
  return out;
}

std::vector<EnumerationStats> census(std::size_t max_n) {
  require_size(max_n);
  std::vector<EnumerationStats> rows;
  std::vector<FiniteLattice> previous;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<FiniteLattice> level = n == 1   ? std::vector<FiniteLattice>{chain(1)}
                                       : n == 2 ? std::vector<FiniteLattice>{chain(2)}
                                                : extend(previous);
    EnumerationStats row;
    row.size = n;
    row.lattice_count = level.size();
    for (const auto& l : level) {
      const bool d = is_d_lattice(l);
      const bool balanced = is_balanced(l);
      const bool complemented = is_complemented(l);
      row.d_lattice_count += d ? 1 : 0;
      row.balanced_count += balanced ? 1 : 0;
      row.complemented_count += complemented ? 1 : 0;
      row.d_balanced_count += d && balanced ? 1 : 0;
      row.d_complemented_count += d && complemented ? 1 : 0;
    }
    row.elapsed = std::chrono::steady_clock::now() - start;
    rows.push_back(row);
    previous = std::move(level);
  }
  return rows;
}

}  // namespace dlat
