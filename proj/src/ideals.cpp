#include "dlat/ideals.hpp"

#include <algorithm>

namespace dlat {
namespace {

void require_sized(const FiniteLattice& l, const ElementSet& s) {
  if (s.universe() != l.size()) throw Error(Errc::SizeMismatch, "set size differs from lattice size");
}

// Downward closed and join closed (or, dually, upward and meet closed).
bool closed(const FiniteLattice& l, const ElementSet& s, bool downward) {
  if (s.empty()) return false;
  const auto members = s.members();
  for (ElementId x : members) {
    for (ElementId y = 0; y < l.size(); ++y) {
      const bool follows = downward ? l.leq(y, x) : l.leq(x, y);
      if (follows && !s.contains(y)) return false;
    }
    for (ElementId y : members) {
      if (!s.contains(downward ? l.join(x, y) : l.meet(x, y))) return false;
    }
  }
  return true;
}

std::vector<ElementSet> sorted(std::vector<ElementSet> sets) {
  std::sort(sets.begin(), sets.end(), size_then_bits_less);
  return sets;
}

std::vector<ElementSet> scan(const FiniteLattice& l, bool downward) {
  if (l.size() > 20) throw Error(Errc::TooLarge, "subset scan is limited to 20 elements");
  std::vector<ElementSet> out;
  const std::uint64_t limit = std::uint64_t{1} << l.size();
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    ElementSet s(l.size(), bits);
    if (closed(l, s, downward)) out.push_back(s);
  }
  return sorted(std::move(out));
}

// x op y ∈ S implies x ∈ S or y ∈ S, where op is meet for ideals and join
// for filters.
bool splits(const FiniteLattice& l, const ElementSet& s, bool ideal) {
  if (s.is_full()) return false;
  for (ElementId x = 0; x < l.size(); ++x) {
    if (s.contains(x)) continue;
    for (ElementId y = 0; y < l.size(); ++y) {
      if (s.contains(y)) continue;
      if (s.contains(ideal ? l.meet(x, y) : l.join(x, y))) return false;
    }
  }
  return true;
}

bool maximal(const ElementSet& s, const std::vector<ElementSet>& family) {
  if (s.is_full()) return false;
  return std::none_of(family.begin(), family.end(), [&](const ElementSet& other) {
    return !other.is_full() && s.is_proper_subset_of(other);
  });
}

ElementSet generate(const FiniteLattice& l, const ElementSet& s, bool ideal) {
  require_sized(l, s);
  if (s.empty()) throw Error(Errc::EmptySet, "cannot generate from an empty set");
  ElementSet closure = s;
  for (bool changed = true; changed;) {
    changed = false;
    const auto members = closure.members();
    for (ElementId x : members) {
      for (ElementId y : members) {
        const ElementId z = ideal ? l.join(x, y) : l.meet(x, y);
        if (!closure.contains(z)) {
          closure.insert(z);
          changed = true;
        }
      }
    }
  }
  ElementSet out(l.size());
  for (ElementId x : closure.members()) out = out | (ideal ? l.down_set(x) : l.up_set(x));
  return out;
}

}  // namespace

bool is_ideal(const FiniteLattice& lattice, const ElementSet& s) {
  require_sized(lattice, s);
  return closed(lattice, s, true);
}

bool is_filter(const FiniteLattice& lattice, const ElementSet& s) {
  require_sized(lattice, s);
  return closed(lattice, s, false);
}

std::vector<ElementSet> enumerate_ideals(const FiniteLattice& lattice) {
  std::vector<ElementSet> out;
  for (ElementId x = 0; x < lattice.size(); ++x) out.push_back(lattice.down_set(x));
  return sorted(std::move(out));
}

std::vector<ElementSet> enumerate_filters(const FiniteLattice& lattice) {
  std::vector<ElementSet> out;
  for (ElementId x = 0; x < lattice.size(); ++x) out.push_back(lattice.up_set(x));
  return sorted(std::move(out));
}

std::vector<ElementSet> enumerate_ideals_by_scan(const FiniteLattice& lattice) {
  return scan(lattice, true);
}

std::vector<ElementSet> enumerate_filters_by_scan(const FiniteLattice& lattice) {
  return scan(lattice, false);
}

bool is_prime_ideal(const FiniteLattice& lattice, const ElementSet& ideal) {
  if (!is_ideal(lattice, ideal)) throw Error(Errc::NotAnIdeal, ideal.to_string() + " is not an ideal");
  return splits(lattice, ideal, true);
}

bool is_prime_filter(const FiniteLattice& lattice, const ElementSet& filter) {
  if (!is_filter(lattice, filter)) throw Error(Errc::NotAFilter, filter.to_string() + " is not a filter");
  return splits(lattice, filter, false);
}

bool is_maximal_ideal(const FiniteLattice& lattice, const ElementSet& ideal) {
  if (!is_ideal(lattice, ideal)) throw Error(Errc::NotAnIdeal, ideal.to_string() + " is not an ideal");
  return maximal(ideal, enumerate_ideals(lattice));
}

bool is_maximal_filter(const FiniteLattice& lattice, const ElementSet& filter) {
  if (!is_filter(lattice, filter)) throw Error(Errc::NotAFilter, filter.to_string() + " is not a filter");
  return maximal(filter, enumerate_filters(lattice));
}

std::vector<ElementSet> prime_ideals(const FiniteLattice& lattice) {
  std::vector<ElementSet> out;
  for (const auto& i : enumerate_ideals(lattice)) {
    if (splits(lattice, i, true)) out.push_back(i);
  }
  return out;
}

std::vector<ElementSet> prime_filters(const FiniteLattice& lattice) {
  std::vector<ElementSet> out;
  for (const auto& f : enumerate_filters(lattice)) {
    if (splits(lattice, f, false)) out.push_back(f);
  }
  return out;
}

std::vector<ElementSet> maximal_ideals(const FiniteLattice& lattice) {
  const auto all = enumerate_ideals(lattice);
  std::vector<ElementSet> out;
  for (const auto& i : all) {
    if (maximal(i, all)) out.push_back(i);
  }
  return out;
}

std::vector<ElementSet> maximal_filters(const FiniteLattice& lattice) {
  const auto all = enumerate_filters(lattice);
  std::vector<ElementSet> out;
  for (const auto& f : all) {
    if (maximal(f, all)) out.push_back(f);
  }
  return out;
}

ElementSet ideal_generated_by(const FiniteLattice& lattice, const ElementSet& s) {
  return generate(lattice, s, true);
}

ElementSet filter_generated_by(const FiniteLattice& lattice, const ElementSet& s) {
  return generate(lattice, s, false);
}

ElementSet annihilator_filter(const FiniteLattice& lattice, ElementId a) {
  ElementSet out(lattice.size());
  for (ElementId x = 0; x < lattice.size(); ++x) {
    if (lattice.join(x, a) == lattice.top()) out.insert(x);
  }
  return out;
}

ElementSet annihilator_ideal(const FiniteLattice& lattice, ElementId a) {
  ElementSet out(lattice.size());
  for (ElementId x = 0; x < lattice.size(); ++x) {
    if (lattice.meet(x, a) == lattice.bottom()) out.insert(x);
  }
  return out;
}

Congruence prime_ideal_congruence(const FiniteLattice& lattice, const ElementSet& ideal) {
  if (!is_prime_ideal(lattice, ideal)) {
    throw Error(Errc::NotPrime, ideal.to_string() + " is not a prime ideal");
  }
  return Congruence::make(lattice, Partition::from_split(ideal));
}

}  // namespace dlat
