#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "dlat/canonical.hpp"
#include "oracles.hpp"

using namespace dlat;

namespace {

std::vector<ElementId> random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<ElementId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937 rng(20261015);
  for (const auto& l : oracle::corpus()) {
    const std::string form = canonical_form(l);
    CHECK(form.size() == l.size() * l.size());
    for (int i = 0; i < 100; ++i) {
      CHECK(canonical_form(relabel(l, random_permutation(l.size(), rng))) == form);
    }
  }
}

TEST_CASE("canonical labeling puts bottom first and top last") {
  for (const auto& l : oracle::corpus()) {
    const auto c = canonical_lattice(l);
    CHECK(c.bottom() == 0);
    CHECK(c.top() == c.size() - 1);
    CHECK(canonical_form(c) == canonical_form(l));
    // upper triangular: positions follow a linear extension
    for (ElementId i = 0; i < c.size(); ++i) {
      for (ElementId j = 0; j < i; ++j) CHECK_FALSE(c.leq(i, j));
    }
  }
}

TEST_CASE("named isomorphism examples") {
  CHECK(canonical_form(n5()) != canonical_form(m3()));
  CHECK(canonical_form(product(chain(2), chain(2))) == canonical_form(boolean_lattice(2)));
  CHECK(oracle::isomorphic(product(chain(2), chain(2)), boolean_lattice(2)));

  CHECK(is_isomorphic(n5(), relabel(n5(), {4, 2, 0, 3, 1})));
  CHECK_FALSE(is_isomorphic(n5(), m3()));
  CHECK_FALSE(is_isomorphic(chain(4), boolean_lattice(2)));
  CHECK_FALSE(oracle::isomorphic(chain(4), boolean_lattice(2)));
  CHECK_FALSE(is_isomorphic(chain(3), chain(4)));
}

TEST_CASE("canonical form separates exactly the isomorphism classes of 5-element lattices") {
  const auto all = oracle::labeled_lattices(5);
  REQUIRE(all.size() > 5);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      CHECK((canonical_form(all[i]) == canonical_form(all[j])) == oracle::isomorphic(all[i], all[j]));
    }
  }
}

TEST_CASE("canonical form agrees with brute-force isomorphism on 6-element lattices") {
  const auto reps = oracle::lattice_classes(6);
  REQUIRE(reps.size() == 15);
  std::map<std::string, std::size_t> rep_of_form;
  for (std::size_t r = 0; r < reps.size(); ++r) rep_of_form[canonical_form(reps[r])] = r;
  CHECK(rep_of_form.size() == reps.size());
  for (const auto& l : oracle::labeled_lattices(6)) {
    const auto it = rep_of_form.find(canonical_form(l));
    REQUIRE(it != rep_of_form.end());
    CHECK(oracle::isomorphic(l, reps[it->second]));
  }
}

TEST_CASE("highly symmetric lattices canonicalize quickly") {
  // M_k: bottom, k atoms, top. Twin pruning keeps this linear in k.
  for (std::size_t k : {8u, 20u, 60u}) {
    OrderMatrix m(k + 2);
    for (std::size_t i = 0; i < k + 2; ++i) {
      m.set(i, i, true);
      m.set(0, i, true);
      m.set(i, k + 1, true);
    }
    const auto l = from_leq_matrix(m);
    std::mt19937 rng(static_cast<unsigned>(k));
    CHECK(canonical_form(l) == canonical_form(relabel(l, random_permutation(l.size(), rng))));
  }
  const auto b6 = boolean_lattice(6);
  std::mt19937 rng(6);
  CHECK(canonical_form(b6) == canonical_form(relabel(b6, random_permutation(64, rng))));
}
