#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dlat/element_set.hpp"
#include "dlat/error.hpp"

namespace dlat {

/// Row-major n×n order matrix: `at(i, j)` is true iff element i ≤ element j.
class OrderMatrix {
 public:
  OrderMatrix() = default;
  explicit OrderMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {}
  OrderMatrix(std::initializer_list<std::initializer_list<int>> rows);

  std::size_t size() const noexcept { return n_; }
  bool at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) { cells_[i * n_ + j] = v ? 1 : 0; }

  friend bool operator==(const OrderMatrix&, const OrderMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> cells_;
};

/// Raw lattice tables with no guarantees attached. `validate` checks them.
struct LatticeTables {
  std::size_t size = 0;
  OrderMatrix leq;
  std::vector<ElementId> meet;  // row-major n×n
  std::vector<ElementId> join;  // row-major n×n
  ElementId bottom = 0;
  ElementId top = 0;

  ElementId meet_at(ElementId x, ElementId y) const { return meet[x * size + y]; }
  ElementId join_at(ElementId x, ElementId y) const { return join[x * size + y]; }
};

enum class ViolationKind {
  TableShape,
  NotReflexive,
  NotAntisymmetric,
  NotTransitive,
  NotBounded,
  CommutativityViolation,
  IdempotenceViolation,
  AssociativityViolation,
  AbsorptionViolation,
  MeetNotGreatestLowerBound,
  JoinNotLeastUpperBound,
};

std::string_view violation_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<ElementId> elements;

  std::string to_string() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Checks every bounded-lattice axiom on raw tables. Axioms are checked in
/// groups (shape, order, bounds, commutativity, idempotence, associativity,
/// absorption, glb/lub); all violations of the first failing group are
/// returned. Empty result means the tables describe a bounded lattice.
std::vector<Violation> validate(const LatticeTables& tables);

/// An immutable, validated finite bounded lattice.
///
/// Copies share the underlying tables, so copying is cheap and `same_as`
/// tells whether two handles refer to the same constructed lattice. Objects
/// tied to a lattice (congruences, homomorphisms) use that identity.
class FiniteLattice {
 public:
  std::size_t size() const noexcept { return data_->size; }
  bool leq(ElementId x, ElementId y) const { return data_->leq.at(x, y); }
  bool less(ElementId x, ElementId y) const { return x != y && leq(x, y); }
  ElementId meet(ElementId x, ElementId y) const { return data_->meet_at(x, y); }
  ElementId join(ElementId x, ElementId y) const { return data_->join_at(x, y); }
  ElementId bottom() const noexcept { return data_->bottom; }
  ElementId top() const noexcept { return data_->top; }

  const LatticeTables& tables() const noexcept { return *data_; }
  const OrderMatrix& order() const noexcept { return data_->leq; }

  ElementSet down_set(ElementId x) const;
  ElementSet up_set(ElementId x) const;
  ElementSet universe() const { return ElementSet::all(size()); }

  bool same_as(const FiniteLattice& other) const noexcept { return data_ == other.data_; }

  friend FiniteLattice from_leq_matrix(const OrderMatrix& matrix);

 private:
  explicit FiniteLattice(std::shared_ptr<const LatticeTables> data) : data_(std::move(data)) {}

  std::shared_ptr<const LatticeTables> data_;
};

/// Builds a lattice from its order matrix. Elements may be labeled freely;
/// bottom and top are discovered.
///
/// Throws Error with NotAPartialOrder, NotBounded, NotALattice, TooLarge
/// (more than kMaxElements) or InvalidParameter (empty matrix).
FiniteLattice from_leq_matrix(const OrderMatrix& matrix);

/// Catalog: "chain" (k ≥ 1), "boolean" (k ≥ 1 atoms), "n5", "m3".
/// n5 is labeled 0:bottom 1:a 2:c 3:b 4:top with a < c; m3 is labeled
/// 0:bottom 1,2,3:atoms 4:top.
FiniteLattice standard_lattice(std::string_view name, std::optional<int> parameter = std::nullopt);

FiniteLattice chain(std::size_t k);
FiniteLattice boolean_lattice(std::size_t atoms);
FiniteLattice n5();
FiniteLattice m3();

/// Componentwise order; pair (x, y) gets index x * |L2| + y.
FiniteLattice product(const FiniteLattice& l1, const FiniteLattice& l2);

/// Order-dual: same elements, reversed order.
FiniteLattice dual(const FiniteLattice& lattice);

/// Element x of the input becomes element perm[x] of the result.
FiniteLattice relabel(const FiniteLattice& lattice, const std::vector<ElementId>& perm);

bool is_distributive(const FiniteLattice& lattice);

/// A map between two lattices. Construction does not check anything;
/// call `is_homomorphism` / `is_surjective`.
struct LatticeHomomorphism {
  FiniteLattice source;
  FiniteLattice target;
  std::vector<ElementId> map;

  ElementId operator()(ElementId x) const { return map[x]; }
};

/// Preserves meet, join, bottom and top (full-table check).
bool is_homomorphism(const LatticeHomomorphism& h);
bool is_surjective(const LatticeHomomorphism& h);

}  // namespace dlat
