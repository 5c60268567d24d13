#include <doctest.h>

#include <algorithm>

#include "dlat/enumeration.hpp"
#include "dlat/quotient.hpp"
#include "oracles.hpp"

using namespace dlat;

namespace {

std::vector<FiniteLattice> lattices_up_to(std::size_t max_n) {
  std::vector<FiniteLattice> out;
  for (const auto& level : enumerate_lattices_up_to(max_n)) out.insert(out.end(), level.begin(), level.end());
  return out;
}

std::vector<Partition> partitions_of(const std::vector<Congruence>& cons) {
  std::vector<Partition> out;
  for (const auto& c : cons) out.push_back(c.partition());
  return out;
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

TEST_CASE("is_congruence examples") {
  for (const auto& l : oracle::corpus()) {
    CHECK(is_congruence(l, Partition::identity(l.size())));
    CHECK(is_congruence(l, Partition::all(l.size())));
  }
  // n5 labels: 0 bottom, 1 a, 2 c, 3 b, 4 top. Merging only 0 and a breaks join with b.
  CHECK_FALSE(is_congruence(n5(), Partition::from_labels({0, 0, 1, 2, 3})));
  CHECK(error_code([] { is_congruence(n5(), Partition::identity(4)); }) == Errc::SizeMismatch);
}

TEST_CASE("principal congruence examples") {
  const auto l = n5();
  for (ElementId x = 0; x < l.size(); ++x) CHECK(principal_congruence(l, x, x) == Congruence::identity(l));
  CHECK(principal_congruence(l, l.bottom(), l.top()) == Congruence::all(l));

  const auto c3 = chain(3);
  const auto theta = principal_congruence(c3, 0, 1);
  CHECK(theta.partition() == Partition::from_labels({0, 0, 1}));
  CHECK(theta.partition() == oracle::least_congruence_containing(c3, {0, 1}));
  CHECK(theta.to_string() == "{{0,1},{2}}");
}

TEST_CASE("generated congruence examples") {
  const auto l = n5();
  CHECK(generated_congruence(l, ElementSet(5, {2})) == Congruence::identity(l));
  CHECK(generated_congruence(l, ElementSet(5, {0, 4})) == Congruence::all(l));
  // collapsing a < c leaves the other three elements apart
  const auto theta = generated_congruence(l, ElementSet(5, {1, 2}));
  CHECK(theta.partition() == Partition::from_labels({0, 1, 1, 2, 3}));
  CHECK(theta.partition() == oracle::least_congruence_containing(l, {1, 2}));
  CHECK(error_code([&] { generated_congruence(l, ElementSet(5)); }) == Errc::EmptySet);
}

TEST_CASE("congruence closure of an arbitrary partition") {
  const auto l = n5();
  // merging bottom and a forces a collapse to {0,a,b}, {c,1}
  const auto theta = congruence_closure(l, Partition::from_labels({0, 0, 1, 2, 3}));
  CHECK(theta.partition() == oracle::least_congruence_containing(l, {0, 1}));
  CHECK(is_congruence(l, theta.partition()));
}

TEST_CASE("join and meet of congruences") {
  const auto c3 = chain(3);
  const auto low = principal_congruence(c3, 0, 1);
  const auto high = principal_congruence(c3, 1, 2);
  CHECK(join_congruences(low, high) == Congruence::all(c3));
  CHECK(meet_congruences(low, high) == Congruence::identity(c3));
  CHECK(join_congruences(low, Congruence::identity(c3)) == low);
  CHECK(meet_congruences(low, Congruence::all(c3)) == low);
  CHECK(low.is_contained_in(Congruence::all(c3)));
  CHECK_FALSE(low.is_contained_in(high));

  const auto other = chain(3);
  CHECK(error_code([&] { join_congruences(low, Congruence::identity(other)); }) == Errc::OwnerMismatch);
  CHECK(error_code([&] { meet_congruences(low, Congruence::all(other)); }) == Errc::OwnerMismatch);
  CHECK(error_code([&] { low.is_contained_in(Congruence::all(other)); }) == Errc::OwnerMismatch);
}

TEST_CASE("Congruence::make verifies its partition") {
  const auto l = m3();
  CHECK(error_code([&] { Congruence::make(l, Partition::from_labels({0, 0, 1, 2, 3})); }) == Errc::NotACongruence);
  CHECK(Congruence::make(l, Partition::all(5)) == Congruence::all(l));
}

TEST_CASE("congruence lattice sizes") {
  CHECK(all_congruences(chain(2)).size() == 2);
  CHECK(all_congruences(chain(3)).size() == 4);
  CHECK(all_congruences(m3()).size() == 2);
  CHECK(oracle::congruences(chain(3)).size() == 4);
  CHECK(oracle::congruences(m3()).size() == 2);
  CHECK(all_congruences(n5()).size() == 5);
  CHECK(all_congruences(chain(1)).size() == 1);
}

TEST_CASE("balanced congruence examples") {
  const auto c3 = chain(3);
  CHECK_FALSE(is_balanced_congruence(principal_congruence(c3, 0, 1)));
  CHECK(is_balanced_congruence(Congruence::identity(c3)));
  CHECK(is_balanced_congruence(Congruence::all(c3)));
  CHECK_FALSE(is_balanced(c3));
  CHECK(is_balanced(chain(2)));
  CHECK(is_balanced(boolean_lattice(2)));
  CHECK(is_balanced(n5()));
  CHECK(is_balanced(m3()));
  CHECK_FALSE(is_balanced_pairwise(c3));
  CHECK(is_balanced_pairwise(m3()));
}

TEST_CASE("principal congruences are the least compatible partitions") {
  for (const auto& l : lattices_up_to(6)) {
    for (ElementId a = 0; a < l.size(); ++a) {
      for (ElementId b = a + 1; b < l.size(); ++b) {
        CHECK(principal_congruence(l, a, b).partition() == oracle::least_congruence_containing(l, {a, b}));
      }
    }
  }
}

TEST_CASE("all_congruences matches the partition scan") {
  for (const auto& l : lattices_up_to(6)) CHECK(partitions_of(all_congruences(l)) == oracle::congruences(l));
  for (const auto& l : oracle::corpus()) {
    if (l.size() <= 8) CHECK(partitions_of(all_congruences(l)) == oracle::congruences(l));
  }
}

TEST_CASE("principal congruences are monotone") {
  for (const auto& l : lattices_up_to(6)) {
    for (ElementId a = 0; a < l.size(); ++a) {
      for (ElementId b = 0; b < l.size(); ++b) {
        if (!l.leq(a, b)) continue;
        const auto theta = principal_congruence(l, a, b);
        for (ElementId a2 = 0; a2 < l.size(); ++a2) {
          for (ElementId b2 = 0; b2 < l.size(); ++b2) {
            if (l.leq(a, a2) && l.leq(b2, b) && theta.related(a2, b2)) {
              CHECK(principal_congruence(l, a2, b2).is_contained_in(theta));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("join and meet agree with set operations on partitions") {
  for (const auto& l : lattices_up_to(5)) {
    const auto cons = all_congruences(l);
    for (const auto& x : cons) {
      for (const auto& y : cons) {
        const auto meet = meet_congruences(x, y);
        const auto join = join_congruences(x, y);
        for (ElementId p = 0; p < l.size(); ++p) {
          for (ElementId q = 0; q < l.size(); ++q) {
            CHECK(meet.related(p, q) == (x.related(p, q) && y.related(p, q)));
          }
        }
        CHECK(x.is_contained_in(join));
        CHECK(y.is_contained_in(join));
        for (const auto& z : cons) {
          if (x.is_contained_in(z) && y.is_contained_in(z)) CHECK(join.is_contained_in(z));
        }
      }
    }
  }
}

TEST_CASE("the two balance definitions agree") {
  for (const auto& l : lattices_up_to(7)) CHECK(is_balanced(l) == is_balanced_pairwise(l));
}

TEST_CASE("quotients of balanced lattices are balanced") {
  for (const auto& l : lattices_up_to(7)) {
    if (!is_balanced(l)) continue;
    for (const auto& phi : all_congruences(l)) CHECK(is_balanced(quotient(l, phi).lattice));
  }
}
