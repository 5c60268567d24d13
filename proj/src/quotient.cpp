#include "dlat/quotient.hpp"

namespace dlat {

Quotient quotient(const FiniteLattice& lattice, const Congruence& phi) {
  if (!phi.lattice().same_as(lattice)) {
    throw Error(Errc::OwnerMismatch, "congruence belongs to a different lattice");
  }
  const Partition& p = phi.partition();
  const std::size_t k = p.block_count();
  OrderMatrix m(k);
  for (ElementId x = 0; x < lattice.size(); ++x) {
    for (ElementId y = 0; y < lattice.size(); ++y) {
      if (lattice.leq(x, y)) m.set(p.block_of(x), p.block_of(y), true);
    }
  }
  FiniteLattice target = from_leq_matrix(m);
  std::vector<ElementId> map(lattice.size());
  for (ElementId x = 0; x < lattice.size(); ++x) map[x] = p.block_of(x);
  return Quotient{target, LatticeHomomorphism{lattice, target, std::move(map)}};
}

Quotient quotient(const FiniteLattice& lattice, const Partition& partition) {
  return quotient(lattice, Congruence::make(lattice, partition));
}

}  // namespace dlat
