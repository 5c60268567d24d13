#include "dlat/lattice.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace dlat {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::NotAPartialOrder: return "NotAPartialOrder";
    case Errc::NotALattice: return "NotALattice";
    case Errc::NotBounded: return "NotBounded";
    case Errc::TooLarge: return "TooLarge";
    case Errc::UnknownName: return "UnknownName";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::NotACongruence: return "NotACongruence";
    case Errc::EmptySet: return "EmptySet";
    case Errc::OwnerMismatch: return "OwnerMismatch";
    case Errc::NotAnIdeal: return "NotAnIdeal";
    case Errc::NotAFilter: return "NotAFilter";
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotNestedPrimes: return "NotNestedPrimes";
    case Errc::HomomorphismCheckFailed: return "HomomorphismCheckFailed";
    case Errc::PostconditionFailed: return "PostconditionFailed";
    case Errc::HasComplement: return "HasComplement";
    case Errc::NotDLattice: return "NotDLattice";
    case Errc::SizeOutOfRange: return "SizeOutOfRange";
    case Errc::UnknownPredicate: return "UnknownPredicate";
  }
  return "Unknown";
}

std::vector<ElementId> ElementSet::members() const {
  std::vector<ElementId> out;
  out.reserve(count());
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<ElementId>(std::countr_zero(rest)));
  }
  return out;
}

std::string ElementSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (ElementId x : members()) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  }
  out += '}';
  return out;
}

OrderMatrix::OrderMatrix(std::initializer_list<std::initializer_list<int>> rows)
    : n_(rows.size()), cells_(rows.size() * rows.size(), 0) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw Error(Errc::SizeMismatch, "order matrix is not square");
    std::size_t j = 0;
    for (int v : row) set(i, j++, v != 0);
    ++i;
  }
}

std::string_view violation_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::TableShape: return "TableShape";
    case ViolationKind::NotReflexive: return "NotReflexive";
    case ViolationKind::NotAntisymmetric: return "NotAntisymmetric";
    case ViolationKind::NotTransitive: return "NotTransitive";
    case ViolationKind::NotBounded: return "NotBounded";
    case ViolationKind::CommutativityViolation: return "CommutativityViolation";
    case ViolationKind::IdempotenceViolation: return "IdempotenceViolation";
    case ViolationKind::AssociativityViolation: return "AssociativityViolation";
    case ViolationKind::AbsorptionViolation: return "AbsorptionViolation";
    case ViolationKind::MeetNotGreatestLowerBound: return "MeetNotGreatestLowerBound";
    case ViolationKind::JoinNotLeastUpperBound: return "JoinNotLeastUpperBound";
  }
  return "Unknown";
}

std::string Violation::to_string() const {
  std::string out(violation_name(kind));
  out += '(';
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(elements[i]);
  }
  out += ')';
  return out;
}

namespace {

std::vector<Violation> check_shape(const LatticeTables& t) {
  std::vector<Violation> out;
  const std::size_t n = t.size;
  bool ok = n >= 1 && t.leq.size() == n && t.meet.size() == n * n && t.join.size() == n * n &&
            t.bottom < n && t.top < n;
  if (ok) {
    for (std::size_t i = 0; i < n * n; ++i) {
      if (t.meet[i] >= n || t.join[i] >= n) {
        ok = false;
        break;
      }
    }
  }
  if (!ok) out.push_back({ViolationKind::TableShape, {}});
  return out;
}

std::vector<Violation> check_order(const LatticeTables& t) {
  std::vector<Violation> out;
  const std::size_t n = t.size;
  const auto& le = t.leq;
  for (ElementId x = 0; x < n; ++x) {
    if (!le.at(x, x)) out.push_back({ViolationKind::NotReflexive, {x}});
  }
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = x + 1; y < n; ++y) {
      if (le.at(x, y) && le.at(y, x)) out.push_back({ViolationKind::NotAntisymmetric, {x, y}});
    }
  }
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (!le.at(x, y)) continue;
      for (ElementId z = 0; z < n; ++z) {
        if (le.at(y, z) && !le.at(x, z)) out.push_back({ViolationKind::NotTransitive, {x, y, z}});
      }
    }
  }
  return out;
}

std::vector<Violation> check_bounds(const LatticeTables& t) {
  std::vector<ElementId> offenders;
  for (ElementId x = 0; x < t.size; ++x) {
    if (!t.leq.at(t.bottom, x) || !t.leq.at(x, t.top)) offenders.push_back(x);
  }
  if (offenders.empty()) return {};
  return {{ViolationKind::NotBounded, offenders}};
}

std::vector<Violation> check_commutativity(const LatticeTables& t) {
  std::vector<Violation> out;
  for (ElementId x = 0; x < t.size; ++x) {
    for (ElementId y = x + 1; y < t.size; ++y) {
      if (t.meet_at(x, y) != t.meet_at(y, x) || t.join_at(x, y) != t.join_at(y, x)) {
        out.push_back({ViolationKind::CommutativityViolation, {x, y}});
      }
    }
  }
  return out;
}

std::vector<Violation> check_idempotence(const LatticeTables& t) {
  std::vector<Violation> out;
  for (ElementId x = 0; x < t.size; ++x) {
    if (t.meet_at(x, x) != x || t.join_at(x, x) != x) {
      out.push_back({ViolationKind::IdempotenceViolation, {x}});
    }
  }
  return out;
}

std::vector<Violation> check_associativity(const LatticeTables& t) {
  std::vector<Violation> out;
  for (ElementId x = 0; x < t.size; ++x) {
    for (ElementId y = 0; y < t.size; ++y) {
      for (ElementId z = 0; z < t.size; ++z) {
        bool meet_ok = t.meet_at(t.meet_at(x, y), z) == t.meet_at(x, t.meet_at(y, z));
        bool join_ok = t.join_at(t.join_at(x, y), z) == t.join_at(x, t.join_at(y, z));
        if (!meet_ok || !join_ok) out.push_back({ViolationKind::AssociativityViolation, {x, y, z}});
      }
    }
  }
  return out;
}

std::vector<Violation> check_absorption(const LatticeTables& t) {
  std::vector<Violation> out;
  for (ElementId x = 0; x < t.size; ++x) {
    for (ElementId y = 0; y < t.size; ++y) {
      if (t.meet_at(x, t.join_at(x, y)) != x || t.join_at(x, t.meet_at(x, y)) != x) {
        out.push_back({ViolationKind::AbsorptionViolation, {x, y}});
      }
    }
  }
  return out;
}

std::vector<Violation> check_bounds_tables(const LatticeTables& t) {
  std::vector<Violation> out;
  const auto& le = t.leq;
  for (ElementId x = 0; x < t.size; ++x) {
    for (ElementId y = 0; y < t.size; ++y) {
      ElementId m = t.meet_at(x, y);
      bool glb = le.at(m, x) && le.at(m, y);
      ElementId j = t.join_at(x, y);
      bool lub = le.at(x, j) && le.at(y, j);
      for (ElementId z = 0; z < t.size; ++z) {
        if (le.at(z, x) && le.at(z, y) && !le.at(z, m)) glb = false;
        if (le.at(x, z) && le.at(y, z) && !le.at(j, z)) lub = false;
      }
      if (!glb) out.push_back({ViolationKind::MeetNotGreatestLowerBound, {x, y}});
      if (!lub) out.push_back({ViolationKind::JoinNotLeastUpperBound, {x, y}});
    }
  }
  return out;
}

}  // namespace

std::vector<Violation> validate(const LatticeTables& tables) {
  using Check = std::vector<Violation> (*)(const LatticeTables&);
  static constexpr Check kGroups[] = {
      check_shape,         check_order,          check_bounds,       check_commutativity,
      check_idempotence,   check_associativity,  check_absorption,   check_bounds_tables,
  };
  for (Check group : kGroups) {
    auto found = group(tables);
    if (!found.empty()) return found;
  }
  return {};
}

FiniteLattice from_leq_matrix(const OrderMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(Errc::InvalidParameter, "order matrix is empty");
  if (n > kMaxElements) {
    throw Error(Errc::TooLarge,
                "lattice has " + std::to_string(n) + " elements; at most " +
                    std::to_string(kMaxElements) + " are supported");
  }

  for (ElementId x = 0; x < n; ++x) {
    if (!m.at(x, x)) {
      throw Error(Errc::NotAPartialOrder, "not reflexive at element " + std::to_string(x), x);
    }
  }
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = x + 1; y < n; ++y) {
      if (m.at(x, y) && m.at(y, x)) {
        throw Error(Errc::NotAPartialOrder,
                    "not antisymmetric: " + std::to_string(x) + " <= " + std::to_string(y) +
                        " and " + std::to_string(y) + " <= " + std::to_string(x),
                    x);
      }
    }
  }
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (!m.at(x, y)) continue;
      for (ElementId z = 0; z < n; ++z) {
        if (m.at(y, z) && !m.at(x, z)) {
          throw Error(Errc::NotAPartialOrder,
                      "not transitive: " + std::to_string(x) + " <= " + std::to_string(y) +
                          " <= " + std::to_string(z) + " but not " + std::to_string(x) +
                          " <= " + std::to_string(z),
                      x);
        }
      }
    }
  }

  std::vector<std::uint64_t> down(n, 0), up(n, 0);
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (m.at(y, x)) down[x] |= std::uint64_t{1} << y;
      if (m.at(x, y)) up[x] |= std::uint64_t{1} << y;
    }
  }
  const std::uint64_t full = ElementSet::all(n).bits();

  std::optional<ElementId> bottom, top;
  for (ElementId x = 0; x < n; ++x) {
    if (up[x] == full) bottom = x;
    if (down[x] == full) top = x;
  }
  if (!bottom) throw Error(Errc::NotBounded, "no least element");
  if (!top) throw Error(Errc::NotBounded, "no greatest element");

  auto tables = std::make_shared<LatticeTables>();
  tables->size = n;
  tables->leq = m;
  tables->meet.assign(n * n, 0);
  tables->join.assign(n * n, 0);
  tables->bottom = *bottom;
  tables->top = *top;

  // The glb of {x, y} is the lower bound whose down-set is the whole set of
  // common lower bounds; dually for the lub.
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = x; y < n; ++y) {
      const std::uint64_t lower = down[x] & down[y];
      const std::uint64_t upper = up[x] & up[y];
      std::optional<ElementId> glb, lub;
      for (ElementId z = 0; z < n; ++z) {
        if (((lower >> z) & 1U) != 0 && down[z] == lower) glb = z;
        if (((upper >> z) & 1U) != 0 && up[z] == upper) lub = z;
      }
      if (!glb || !lub) {
        throw Error(Errc::NotALattice,
                    std::string(glb ? "no least upper bound" : "no greatest lower bound") +
                        " for elements " + std::to_string(x) + " and " + std::to_string(y),
                    x);
      }
      tables->meet[x * n + y] = tables->meet[y * n + x] = *glb;
      tables->join[x * n + y] = tables->join[y * n + x] = *lub;
    }
  }
  return FiniteLattice(std::move(tables));
}

ElementSet FiniteLattice::down_set(ElementId x) const {
  ElementSet s(size());
  for (ElementId y = 0; y < size(); ++y) {
    if (leq(y, x)) s.insert(y);
  }
  return s;
}

ElementSet FiniteLattice::up_set(ElementId x) const {
  ElementSet s(size());
  for (ElementId y = 0; y < size(); ++y) {
    if (leq(x, y)) s.insert(y);
  }
  return s;
}

FiniteLattice chain(std::size_t k) {
  if (k < 1) throw Error(Errc::InvalidParameter, "chain length must be at least 1");
  if (k > kMaxElements) throw Error(Errc::TooLarge, "chain is too long");
  OrderMatrix m(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) m.set(i, j, true);
  }
  return from_leq_matrix(m);
}

FiniteLattice boolean_lattice(std::size_t atoms) {
  if (atoms < 1) throw Error(Errc::InvalidParameter, "boolean lattice needs at least 1 atom");
  if (atoms > 6) throw Error(Errc::TooLarge, "boolean lattice has more than 64 elements");
  const std::size_t n = std::size_t{1} << atoms;
  OrderMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, (i & ~j) == 0);
  }
  return from_leq_matrix(m);
}

FiniteLattice n5() {
  // 0 < a < c < 1, 0 < b < 1
  return from_leq_matrix(OrderMatrix{
      {1, 1, 1, 1, 1},
      {0, 1, 1, 0, 1},
      {0, 0, 1, 0, 1},
      {0, 0, 0, 1, 1},
      {0, 0, 0, 0, 1},
  });
}

FiniteLattice m3() {
  return from_leq_matrix(OrderMatrix{
      {1, 1, 1, 1, 1},
      {0, 1, 0, 0, 1},
      {0, 0, 1, 0, 1},
      {0, 0, 0, 1, 1},
      {0, 0, 0, 0, 1},
  });
}

FiniteLattice standard_lattice(std::string_view name, std::optional<int> parameter) {
  auto need_parameter = [&]() -> std::size_t {
    if (!parameter) throw Error(Errc::InvalidParameter, std::string(name) + " needs a parameter");
    if (*parameter < 1) {
      throw Error(Errc::InvalidParameter, std::string(name) + " parameter must be at least 1");
    }
    return static_cast<std::size_t>(*parameter);
  };
  if (name == "chain") return chain(need_parameter());
  if (name == "boolean") return boolean_lattice(need_parameter());
  if (name == "n5") return n5();
  if (name == "m3") return m3();
  throw Error(Errc::UnknownName, "unknown catalog lattice '" + std::string(name) + "'");
}

FiniteLattice product(const FiniteLattice& l1, const FiniteLattice& l2) {
  const std::size_t n1 = l1.size(), n2 = l2.size();
  if (n1 * n2 > kMaxElements) throw Error(Errc::TooLarge, "product has too many elements");
  OrderMatrix m(n1 * n2);
  for (std::size_t a = 0; a < n1 * n2; ++a) {
    for (std::size_t b = 0; b < n1 * n2; ++b) {
      m.set(a, b, l1.leq(a / n2, b / n2) && l2.leq(a % n2, b % n2));
    }
  }
  return from_leq_matrix(m);
}

FiniteLattice dual(const FiniteLattice& lattice) {
  const std::size_t n = lattice.size();
  OrderMatrix m(n);
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) m.set(x, y, lattice.leq(y, x));
  }
  return from_leq_matrix(m);
}

FiniteLattice relabel(const FiniteLattice& lattice, const std::vector<ElementId>& perm) {
  const std::size_t n = lattice.size();
  if (perm.size() != n) throw Error(Errc::SizeMismatch, "permutation has the wrong length");
  std::vector<bool> seen(n, false);
  for (ElementId p : perm) {
    if (p >= n || seen[p]) throw Error(Errc::InvalidParameter, "not a permutation");
    seen[p] = true;
  }
  OrderMatrix m(n);
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) m.set(perm[x], perm[y], lattice.leq(x, y));
  }
  return from_leq_matrix(m);
}

bool is_distributive(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      for (ElementId z = 0; z < n; ++z) {
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return false;
      }
    }
  }
  return true;
}

bool is_homomorphism(const LatticeHomomorphism& h) {
  const std::size_t n = h.source.size();
  if (h.map.size() != n) return false;
  for (ElementId x : h.map) {
    if (x >= h.target.size()) return false;
  }
  if (h(h.source.bottom()) != h.target.bottom() || h(h.source.top()) != h.target.top()) {
    return false;
  }
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (h(h.source.meet(x, y)) != h.target.meet(h(x), h(y))) return false;
      if (h(h.source.join(x, y)) != h.target.join(h(x), h(y))) return false;
    }
  }
  return true;
}

bool is_surjective(const LatticeHomomorphism& h) {
  ElementSet hit(h.target.size());
  for (ElementId x : h.map) hit.insert(x);
  return hit.is_full();
}

}  // namespace dlat
