#include <doctest.h>

#include "dlat/enumeration.hpp"
#include "dlat/ideals.hpp"
#include "dlat/properties.hpp"
#include "oracles.hpp"

using namespace dlat;

namespace {

std::vector<FiniteLattice> lattices_up_to(std::size_t max_n) {
  std::vector<FiniteLattice> out;
  for (const auto& level : enumerate_lattices_up_to(max_n)) out.insert(out.end(), level.begin(), level.end());
  return out;
}

// Ideal axioms checked pair by pair, independent of the library predicates.
bool brute_ideal(const FiniteLattice& l, const ElementSet& s) {
  if (s.count() == 0) return false;
  for (ElementId x = 0; x < l.size(); ++x) {
    if (!s.contains(x)) continue;
    for (ElementId y = 0; y < l.size(); ++y) {
      if (l.leq(y, x) && !s.contains(y)) return false;
      if (s.contains(y) && !s.contains(l.join(x, y))) return false;
    }
  }
  return true;
}

bool brute_prime_ideal(const FiniteLattice& l, const ElementSet& s) {
  if (!brute_ideal(l, s) || s.is_full()) return false;
  for (ElementId x = 0; x < l.size(); ++x) {
    for (ElementId y = 0; y < l.size(); ++y) {
      if (s.contains(l.meet(x, y)) && !s.contains(x) && !s.contains(y)) return false;
    }
  }
  return true;
}

Errc error_code(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::ParseError;
}

}  // namespace

// n5 labels: 0 bottom, 1 a, 2 c, 3 b, 4 top (a < c).
// m3 labels: 0 bottom, 1 2 3 atoms, 4 top.

TEST_CASE("ideal and filter predicates") {
  const auto l = n5();
  CHECK(is_ideal(l, ElementSet(5, {0})));
  CHECK(is_ideal(l, l.universe()));
  CHECK_FALSE(is_ideal(l, ElementSet(5, {0, 1, 3})));  // a ∨ b = 1 is missing
  CHECK_FALSE(is_ideal(l, ElementSet(5)));
  CHECK_FALSE(is_ideal(l, ElementSet(5, {1})));
  CHECK(is_filter(l, ElementSet(5, {4})));
  CHECK(is_filter(l, ElementSet(5, {2, 4})));
  CHECK_FALSE(is_filter(l, ElementSet(5, {2, 3, 4})));
}

TEST_CASE("ideal enumeration examples") {
  const auto c3 = enumerate_ideals(chain(3));
  REQUIRE(c3.size() == 3);
  CHECK(c3[0] == ElementSet(3, {0}));
  CHECK(c3[1] == ElementSet(3, {0, 1}));
  CHECK(c3[2] == ElementSet(3, {0, 1, 2}));

  CHECK(enumerate_ideals(boolean_lattice(2)).size() == 4);
  CHECK(enumerate_ideals_by_scan(boolean_lattice(2)).size() == 4);
  CHECK(enumerate_ideals(m3()).size() == 5);
  CHECK(enumerate_filters(m3()).size() == 5);
}

TEST_CASE("prime and maximal examples") {
  const auto c3 = chain(3);
  CHECK(is_prime_ideal(c3, ElementSet(3, {0})));
  CHECK(is_prime_ideal(c3, ElementSet(3, {0, 1})));
  CHECK_FALSE(is_prime_ideal(c3, c3.universe()));
  CHECK(is_maximal_ideal(c3, ElementSet(3, {0, 1})));
  CHECK_FALSE(is_maximal_ideal(c3, ElementSet(3, {0})));

  const auto l = m3();
  CHECK_FALSE(is_prime_ideal(l, ElementSet(5, {0, 1})));
  CHECK(is_maximal_ideal(l, ElementSet(5, {0, 1})));
  CHECK(is_maximal_filter(l, ElementSet(5, {1, 4})));
  CHECK_FALSE(is_prime_filter(l, ElementSet(5, {1, 4})));
  CHECK(prime_ideals(l).empty());
  CHECK(maximal_ideals(l).size() == 3);

  CHECK(error_code([&] { is_prime_ideal(l, ElementSet(5, {1})); }) == Errc::NotAnIdeal);
  CHECK(error_code([&] { is_prime_filter(l, ElementSet(5, {0})); }) == Errc::NotAFilter);

  CHECK(prime_ideals(n5()).size() == 2);
}

TEST_CASE("generated ideals and filters") {
  const auto l = m3();
  CHECK(ideal_generated_by(l, ElementSet(5, {0})) == ElementSet(5, {0}));
  CHECK(ideal_generated_by(l, ElementSet(5, {1, 2})) == l.universe());
  CHECK(filter_generated_by(n5(), ElementSet(5, {2})) == ElementSet(5, {2, 4}));
  CHECK(filter_generated_by(n5(), ElementSet(5, {2, 3})) == n5().universe());
  CHECK(error_code([&] { ideal_generated_by(l, ElementSet(5)); }) == Errc::EmptySet);
  CHECK(error_code([&] { filter_generated_by(l, ElementSet(5)); }) == Errc::EmptySet);
}

TEST_CASE("annihilator examples") {
  const auto l = n5();
  CHECK(annihilator_filter(l, l.bottom()) == ElementSet(5, {4}));
  CHECK(annihilator_ideal(l, l.top()) == ElementSet(5, {0}));
  CHECK(annihilator_filter(l, 1) == ElementSet(5, {3, 4}));
  CHECK(is_filter(l, annihilator_filter(l, 1)));

  const auto m = m3();
  CHECK(annihilator_filter(m, 1) == ElementSet(5, {2, 3, 4}));
  CHECK_FALSE(is_filter(m, annihilator_filter(m, 1)));
}

TEST_CASE("prime ideal congruence examples") {
  const auto c3 = chain(3);
  CHECK(prime_ideal_congruence(c3, ElementSet(3, {0})).partition() == Partition::from_labels({0, 1, 1}));
  CHECK(prime_ideal_congruence(c3, ElementSet(3, {0, 1})).partition() == Partition::from_labels({0, 0, 1}));
  CHECK(error_code([] { prime_ideal_congruence(m3(), ElementSet(5, {0, 1})); }) == Errc::NotPrime);
  CHECK_FALSE(is_congruence(m3(), Partition::from_split(ElementSet(5, {0, 1}))));
}

TEST_CASE("ideal and filter enumeration paths agree with the subset scan") {
  for (const auto& l : lattices_up_to(8)) {
    CHECK(enumerate_ideals(l) == enumerate_ideals_by_scan(l));
    CHECK(enumerate_filters(l) == enumerate_filters_by_scan(l));
  }
  for (const auto& l : lattices_up_to(6)) {
    std::size_t count = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << l.size()); ++bits) {
      const ElementSet s(l.size(), bits);
      CHECK(is_ideal(l, s) == brute_ideal(l, s));
      if (brute_ideal(l, s)) {
        ++count;
        if (!s.is_full()) CHECK(is_prime_ideal(l, s) == brute_prime_ideal(l, s));
      }
    }
    CHECK(enumerate_ideals(l).size() == count);
  }
}

TEST_CASE("ideals of a lattice are the filters of its dual") {
  for (const auto& l : lattices_up_to(7)) {
    const auto d = dual(l);
    CHECK(enumerate_ideals(l) == enumerate_filters(d));
    CHECK(enumerate_filters(l) == enumerate_ideals(d));
    CHECK(prime_ideals(l) == prime_filters(d));
  }
}

TEST_CASE("a proper ideal is prime exactly when its complement is a prime filter") {
  for (const auto& l : lattices_up_to(7)) {
    for (const auto& i : enumerate_ideals(l)) {
      if (i.is_full()) continue;
      const bool prime = is_prime_ideal(l, i);
      CHECK(prime == (is_filter(l, i.complement()) && is_prime_filter(l, i.complement())));
    }
  }
}

TEST_CASE("annihilators of d-lattice elements are a filter and an ideal") {
  for (const auto& l : lattices_up_to(7)) {
    if (!is_d_lattice(l)) continue;
    for (ElementId a = 0; a < l.size(); ++a) {
      CHECK(is_filter(l, annihilator_filter(l, a)));
      CHECK(is_ideal(l, annihilator_ideal(l, a)));
    }
  }
}

TEST_CASE("adding a to an ideal that avoids the annihilator filter keeps it disjoint") {
  for (const auto& l : lattices_up_to(7)) {
    if (!is_d_lattice(l)) continue;
    const auto ideals = enumerate_ideals(l);
    for (ElementId a = 0; a < l.size(); ++a) {
      const ElementSet fa = annihilator_filter(l, a);
      for (const auto& i : ideals) {
        if (i.contains(a) || !i.disjoint_from(fa)) continue;
        ElementSet with_a = i;
        with_a.insert(a);
        CHECK(ideal_generated_by(l, with_a).disjoint_from(fa));
      }
    }
  }
}

TEST_CASE("two-block split is a congruence exactly for prime ideals") {
  for (const auto& l : lattices_up_to(7)) {
    for (const auto& i : enumerate_ideals(l)) {
      if (i.is_full()) continue;
      if (is_prime_ideal(l, i)) {
        const auto alpha = prime_ideal_congruence(l, i);
        CHECK(is_congruence(l, alpha.partition()));
        CHECK(alpha.partition().block_count() == 2);
      } else {
        CHECK_FALSE(is_congruence(l, Partition::from_split(i)));
      }
    }
  }
}
