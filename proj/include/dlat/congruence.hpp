#pragma once

#include <vector>

#include "dlat/element_set.hpp"
#include "dlat/lattice.hpp"
#include "dlat/partition.hpp"

namespace dlat {

/// A partition of a lattice's elements compatible with meet and join. Always
/// holds a verified partition and the lattice it belongs to.
class Congruence {
 public:
  /// Throws NotACongruence (or SizeMismatch) if `partition` is not compatible.
  static Congruence make(const FiniteLattice& lattice, Partition partition);
  static Congruence identity(const FiniteLattice& lattice);
  static Congruence all(const FiniteLattice& lattice);

  const FiniteLattice& lattice() const noexcept { return lattice_; }
  const Partition& partition() const noexcept { return partition_; }

  bool related(ElementId x, ElementId y) const { return partition_.same_block(x, y); }
  /// x/φ
  ElementSet class_of(ElementId x) const { return partition_.block_containing(x); }
  ElementSet bottom_class() const { return class_of(lattice_.bottom()); }
  ElementSet top_class() const { return class_of(lattice_.top()); }

  /// Containment as relations. Throws OwnerMismatch across lattices.
  bool is_contained_in(const Congruence& other) const;

  std::string to_string() const { return partition_.to_string(); }

  friend bool operator==(const Congruence& a, const Congruence& b) {
    return a.lattice_.same_as(b.lattice_) && a.partition_ == b.partition_;
  }

 private:
  Congruence(FiniteLattice lattice, Partition partition)
      : lattice_(std::move(lattice)), partition_(std::move(partition)) {}

  FiniteLattice lattice_;
  Partition partition_;

  friend Congruence close_to_congruence(const FiniteLattice&, DisjointSets&,
                                        std::vector<std::pair<ElementId, ElementId>>);
};

/// Full compatibility scan over all x, y, z. Throws SizeMismatch.
bool is_congruence(const FiniteLattice& lattice, const Partition& partition);

/// θ(a, b): the least congruence relating a and b.
Congruence principal_congruence(const FiniteLattice& lattice, ElementId a, ElementId b);

/// θ_A: the least congruence with A inside one class. Throws EmptySet.
Congruence generated_congruence(const FiniteLattice& lattice, const ElementSet& a);

/// Least congruence containing the given partition as a relation.
Congruence congruence_closure(const FiniteLattice& lattice, const Partition& partition);

/// Both throw OwnerMismatch when the congruences belong to different lattices.
Congruence join_congruences(const Congruence& a, const Congruence& b);
Congruence meet_congruences(const Congruence& a, const Congruence& b);

/// Con(L), sorted by normalized label vector. Computed as the join-closure
/// of the identity and all principal congruences.
std::vector<Congruence> all_congruences(const FiniteLattice& lattice);

/// 0/φ = 0/θ_(1/φ) and 1/φ = 1/θ_(0/φ).
bool is_balanced_congruence(const Congruence& phi);

/// Every congruence is balanced.
bool is_balanced(const FiniteLattice& lattice);

/// For all φ, φ' in Con(L): 0/φ = 0/φ' iff 1/φ = 1/φ'.
bool is_balanced_pairwise(const FiniteLattice& lattice);

}  // namespace dlat
