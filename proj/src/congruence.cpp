#include "dlat/congruence.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace dlat {

namespace {

void require_same_owner(const Congruence& a, const Congruence& b) {
  if (!a.lattice().same_as(b.lattice())) {
    throw Error(Errc::OwnerMismatch, "congruences belong to different lattices");
  }
}

}  // namespace

// Merges everything forced by the pending pairs. Each merged pair is
// translated by x ↦ x∧z and x ↦ x∨z for every z (ascending), and any pair
// that joins two distinct classes is queued in turn.
Congruence close_to_congruence(const FiniteLattice& lattice, DisjointSets& sets,
                               std::vector<std::pair<ElementId, ElementId>> seeds) {
  std::deque<std::pair<ElementId, ElementId>> pending(seeds.begin(), seeds.end());
  const std::size_t n = lattice.size();
  while (!pending.empty()) {
    const auto [x, y] = pending.front();
    pending.pop_front();
    for (ElementId z = 0; z < n; ++z) {
      const ElementId mx = lattice.meet(x, z), my = lattice.meet(y, z);
      if (sets.merge(mx, my)) pending.emplace_back(mx, my);
      const ElementId jx = lattice.join(x, z), jy = lattice.join(y, z);
      if (sets.merge(jx, jy)) pending.emplace_back(jx, jy);
    }
  }
  return Congruence(lattice, sets.to_partition());
}

Congruence Congruence::make(const FiniteLattice& lattice, Partition partition) {
  if (!is_congruence(lattice, partition)) {
    throw Error(Errc::NotACongruence, partition.to_string() + " is not a congruence");
  }
  return Congruence(lattice, std::move(partition));
}

Congruence Congruence::identity(const FiniteLattice& lattice) {
  return Congruence(lattice, Partition::identity(lattice.size()));
}

Congruence Congruence::all(const FiniteLattice& lattice) {
  return Congruence(lattice, Partition::all(lattice.size()));
}

bool Congruence::is_contained_in(const Congruence& other) const {
  require_same_owner(*this, other);
  return partition_.refines(other.partition_);
}

bool is_congruence(const FiniteLattice& lattice, const Partition& partition) {
  const std::size_t n = lattice.size();
  if (partition.size() != n) throw Error(Errc::SizeMismatch, "partition size differs from lattice size");
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = x + 1; y < n; ++y) {
      if (!partition.same_block(x, y)) continue;
      for (ElementId z = 0; z < n; ++z) {
        if (!partition.same_block(lattice.meet(x, z), lattice.meet(y, z))) return false;
        if (!partition.same_block(lattice.join(x, z), lattice.join(y, z))) return false;
      }
    }
  }
  return true;
}

Congruence principal_congruence(const FiniteLattice& lattice, ElementId a, ElementId b) {
  if (a >= lattice.size() || b >= lattice.size()) {
    throw Error(Errc::InvalidParameter, "element out of range");
  }
  DisjointSets sets(lattice.size());
  std::vector<std::pair<ElementId, ElementId>> seeds;
  if (sets.merge(a, b)) seeds.emplace_back(a, b);
  return close_to_congruence(lattice, sets, std::move(seeds));
}

Congruence generated_congruence(const FiniteLattice& lattice, const ElementSet& a) {
  if (a.universe() != lattice.size()) throw Error(Errc::SizeMismatch, "set size differs from lattice size");
  if (a.empty()) throw Error(Errc::EmptySet, "cannot generate a congruence from an empty set");
  const auto members = a.members();
  DisjointSets sets(lattice.size());
  std::vector<std::pair<ElementId, ElementId>> seeds;
  for (std::size_t i = 1; i < members.size(); ++i) {
    if (sets.merge(members[0], members[i])) seeds.emplace_back(members[0], members[i]);
  }
  return close_to_congruence(lattice, sets, std::move(seeds));
}

Congruence congruence_closure(const FiniteLattice& lattice, const Partition& partition) {
  if (partition.size() != lattice.size()) {
    throw Error(Errc::SizeMismatch, "partition size differs from lattice size");
  }
  DisjointSets sets(lattice.size());
  std::vector<std::pair<ElementId, ElementId>> seeds;
  for (const ElementSet& block : partition.blocks()) {
    const auto members = block.members();
    for (std::size_t i = 1; i < members.size(); ++i) {
      if (sets.merge(members[0], members[i])) seeds.emplace_back(members[0], members[i]);
    }
  }
  return close_to_congruence(lattice, sets, std::move(seeds));
}

Congruence join_congruences(const Congruence& a, const Congruence& b) {
  require_same_owner(a, b);
  const FiniteLattice& l = a.lattice();
  DisjointSets sets(l.size());
  std::vector<std::pair<ElementId, ElementId>> seeds;
  for (const Congruence* c : {&a, &b}) {
    for (ElementId x = 0; x < l.size(); ++x) {
      for (ElementId y = x + 1; y < l.size(); ++y) {
        if (c->related(x, y) && sets.merge(x, y)) seeds.emplace_back(x, y);
      }
    }
  }
  return close_to_congruence(l, sets, std::move(seeds));
}

Congruence meet_congruences(const Congruence& a, const Congruence& b) {
  require_same_owner(a, b);
  const std::size_t n = a.lattice().size();
  std::vector<std::size_t> labels(n);
  for (ElementId x = 0; x < n; ++x) {
    labels[x] = a.partition().block_of(x) * n + b.partition().block_of(x);
  }
  return Congruence::make(a.lattice(), Partition::from_labels(labels));
}

std::vector<Congruence> all_congruences(const FiniteLattice& lattice) {
  const std::size_t n = lattice.size();
  std::vector<Congruence> principals;
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (lattice.less(a, b)) principals.push_back(principal_congruence(lattice, a, b));
    }
  }

  // Every congruence is a join of principal ones; grow the join-closure
  // until no new partitions appear.
  std::set<Partition> seen;
  std::vector<Congruence> found;
  auto add = [&](const Congruence& c) {
    if (seen.insert(c.partition()).second) {
      found.push_back(c);
      return true;
    }
    return false;
  };
  add(Congruence::identity(lattice));
  for (const auto& p : principals) add(p);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& p : principals) add(join_congruences(found[i], p));
  }

  std::sort(found.begin(), found.end(),
            [](const Congruence& x, const Congruence& y) { return x.partition() < y.partition(); });
  return found;
}

bool is_balanced_congruence(const Congruence& phi) {
  const FiniteLattice& l = phi.lattice();
  const ElementSet zero_class = phi.bottom_class();
  const ElementSet one_class = phi.top_class();
  return zero_class == generated_congruence(l, one_class).bottom_class() &&
         one_class == generated_congruence(l, zero_class).top_class();
}

bool is_balanced(const FiniteLattice& lattice) {
  const auto cons = all_congruences(lattice);
  return std::all_of(cons.begin(), cons.end(), is_balanced_congruence);
}

bool is_balanced_pairwise(const FiniteLattice& lattice) {
  const auto cons = all_congruences(lattice);
  for (const auto& a : cons) {
    for (const auto& b : cons) {
      const bool zeros_agree = a.bottom_class() == b.bottom_class();
      const bool ones_agree = a.top_class() == b.top_class();
      if (zeros_agree != ones_agree) return false;
    }
  }
  return true;
}

}  // namespace dlat
