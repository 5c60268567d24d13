#include "dlat/properties.hpp"

#include <algorithm>

#include "dlat/canonical.hpp"
#include "dlat/ideals.hpp"
#include "dlat/quotient.hpp"

namespace dlat {

bool is_d_lattice_definition(const FiniteLattice& l) {
  const ElementId bottom = l.bottom(), top = l.top();
  for (ElementId c = 0; c < l.size(); ++c) {
    const Congruence from_bottom = principal_congruence(l, bottom, c);
    const Congruence from_top = principal_congruence(l, top, c);
    for (ElementId a = 0; a < l.size(); ++a) {
      if (from_bottom.related(a, top) && l.join(a, c) != top) return false;
      if (from_top.related(a, bottom) && l.meet(a, c) != bottom) return false;
    }
  }
  return true;
}

bool is_d_lattice_maximal_prime(const FiniteLattice& l) {
  for (const auto& i : maximal_ideals(l)) {
    if (!is_prime_ideal(l, i)) return false;
  }
  for (const auto& f : maximal_filters(l)) {
    if (!is_prime_filter(l, f)) return false;
  }
  return true;
}

std::optional<ElementId> find_complement(const FiniteLattice& l, ElementId a) {
  for (ElementId b = 0; b < l.size(); ++b) {
    if (l.meet(a, b) == l.bottom() && l.join(a, b) == l.top()) return b;
  }
  return std::nullopt;
}

bool is_complemented_by_scan(const FiniteLattice& l) {
  for (ElementId a = 0; a < l.size(); ++a) {
    if (!find_complement(l, a)) return false;
  }
  return true;
}

bool is_complemented_by_annihilators(const FiniteLattice& l) {
  for (ElementId a = 0; a < l.size(); ++a) {
    if (annihilator_filter(l, a).disjoint_from(annihilator_ideal(l, a))) return false;
  }
  return true;
}

bool is_complemented(const FiniteLattice& l) {
  const bool scan = is_complemented_by_scan(l);
  if (scan != is_complemented_by_annihilators(l)) {
    throw Error(Errc::PostconditionFailed, "complement scan and annihilator test disagree");
  }
  return scan;
}

bool SevenConditions::all_equal() const {
  return std::all_of(values.begin(), values.end(), [&](bool v) { return v == values[0]; });
}

namespace {

std::optional<NestedPair> first_nested(const std::vector<ElementSet>& sets) {
  for (const auto& lower : sets) {
    for (const auto& upper : sets) {
      if (lower.is_proper_subset_of(upper)) return NestedPair{lower, upper};
    }
  }
  return std::nullopt;
}

// Some maximal member of `maximals` has a complement that fails
// `is_maximal_complement`.
template <typename Pred>
bool some_complement_not_maximal(const std::vector<ElementSet>& maximals, Pred is_maximal_complement) {
  return std::any_of(maximals.begin(), maximals.end(),
                     [&](const ElementSet& s) { return !is_maximal_complement(s.complement()); });
}

}  // namespace

std::optional<NestedPair> find_nested_prime_ideals(const FiniteLattice& l) {
  return first_nested(prime_ideals(l));
}

std::optional<NestedPair> find_nested_prime_filters(const FiniteLattice& l) {
  return first_nested(prime_filters(l));
}

std::optional<Congruence> find_three_chain_congruence(const FiniteLattice& l) {
  const FiniteLattice three = chain(3);
  for (const auto& phi : all_congruences(l)) {
    if (phi.partition().block_count() != 3) continue;
    if (is_isomorphic(quotient(l, phi).lattice, three)) return phi;
  }
  return std::nullopt;
}

SevenConditions seven_conditions(const FiniteLattice& l) {
  SevenConditions c;
  c.values[0] = some_complement_not_maximal(maximal_filters(l), [&](const ElementSet& s) {
    return is_ideal(l, s) && is_maximal_ideal(l, s);
  });
  c.values[1] = some_complement_not_maximal(maximal_ideals(l), [&](const ElementSet& s) {
    return is_filter(l, s) && is_maximal_filter(l, s);
  });
  c.values[2] = find_nested_prime_ideals(l).has_value();
  c.values[3] = find_nested_prime_filters(l).has_value();
  c.values[4] = find_three_chain_congruence(l).has_value();
  c.values[5] = !is_balanced(l);
  c.values[6] = !is_complemented(l);
  return c;
}

LatticeHomomorphism three_chain_quotient_from_nested_primes(const FiniteLattice& l,
                                                            const ElementSet& lower,
                                                            const ElementSet& upper) {
  auto prime = [&](const ElementSet& s) {
    return s.universe() == l.size() && is_ideal(l, s) && is_prime_ideal(l, s);
  };
  if (!prime(lower) || !prime(upper) || !lower.is_proper_subset_of(upper)) {
    throw Error(Errc::NotNestedPrimes,
                lower.to_string() + " and " + upper.to_string() + " are not nested prime ideals");
  }
  LatticeHomomorphism h{l, chain(3), std::vector<ElementId>(l.size())};
  for (ElementId x = 0; x < l.size(); ++x) {
    h.map[x] = lower.contains(x) ? 0 : upper.contains(x) ? 1 : 2;
  }
  if (!is_homomorphism(h) || !is_surjective(h)) {
    throw Error(Errc::HomomorphismCheckFailed, "three-valued map is not a surjective homomorphism");
  }
  return h;
}

NonComplementedWitness witness_from_noncomplemented(const FiniteLattice& l, ElementId a) {
  if (a >= l.size()) throw Error(Errc::InvalidParameter, "element out of range");
  if (!is_d_lattice(l)) throw Error(Errc::NotDLattice, "lattice is not a d-lattice");

  NonComplementedWitness w;
  w.a = a;
  w.annihilator_filter = annihilator_filter(l, a);
  w.annihilator_ideal = annihilator_ideal(l, a);
  if (!w.annihilator_filter.disjoint_from(w.annihilator_ideal)) {
    throw Error(Errc::HasComplement, "element " + std::to_string(a) + " has a complement", a);
  }

  ElementSet seed = w.annihilator_filter;
  seed.insert(a);
  w.generated_filter = filter_generated_by(l, seed);

  // Finite stand-in for extending to a maximal filter: keep adding the least
  // element whose generated filter is still proper.
  ElementSet f = w.generated_filter;
  for (bool grew = true; grew;) {
    grew = false;
    for (ElementId x = 0; x < l.size(); ++x) {
      if (f.contains(x)) continue;
      ElementSet extended = f;
      extended.insert(x);
      extended = filter_generated_by(l, extended);
      if (!extended.is_full()) {
        f = extended;
        grew = true;
        break;
      }
    }
  }
  w.maximal_filter = f;
  w.complement_ideal = f.complement();
  ElementSet with_a = w.complement_ideal;
  with_a.insert(a);
  w.extended_ideal = ideal_generated_by(l, with_a);

  auto check = [](bool ok, const char* what) {
    if (!ok) throw Error(Errc::PostconditionFailed, what);
  };
  check(w.generated_filter.disjoint_from(w.annihilator_ideal), "F1 meets I_a");
  check(is_filter(l, w.maximal_filter) && is_maximal_filter(l, w.maximal_filter), "F is not a maximal filter");
  check(is_ideal(l, w.complement_ideal), "L minus F is not an ideal");
  check(!is_maximal_ideal(l, w.complement_ideal), "L minus F is a maximal ideal");
  check(!w.extended_ideal.is_full(), "generated ideal is not proper");
  check(w.complement_ideal.is_proper_subset_of(w.extended_ideal), "generated ideal does not extend L minus F");
  check(w.extended_ideal.disjoint_from(w.annihilator_filter), "generated ideal meets F_a");
  return w;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::OutOfScope: return "out-of-scope";
  }
  return "unknown";
}

TheoremVerdict verify_theorem(const FiniteLattice& l) {
  TheoremVerdict v;
  v.d_lattice = is_d_lattice(l);
  v.balanced = is_balanced(l);
  v.complemented = is_complemented(l);
  v.conditions = seven_conditions(l);
  if (!v.d_lattice) {
    v.verdict = Verdict::OutOfScope;
    return v;
  }
  if (!v.conditions.all_equal()) v.failures.emplace_back("conditions (1)-(7) are not all equal");
  if (v.balanced != v.complemented) v.failures.emplace_back("balanced differs from complemented");
  v.verdict = v.failures.empty() ? Verdict::Pass : Verdict::Fail;
  return v;
}

PropertyReport classify(const FiniteLattice& l) {
  PropertyReport r;
  r.size = l.size();
  r.degenerate = l.size() == 1;
  r.d_lattice = is_d_lattice(l);
  r.complemented = is_complemented(l);
  r.distributive = is_distributive(l);
  r.conditions = seven_conditions(l);

  const auto cons = all_congruences(l);
  r.balanced = true;
  for (const auto& phi : cons) {
    if (!is_balanced_congruence(phi)) {
      r.balanced = false;
      r.witnesses.unbalanced_congruence = phi.partition();
      break;
    }
  }

  r.counts.ideals = enumerate_ideals(l).size();
  r.counts.filters = enumerate_filters(l).size();
  r.counts.prime_ideals = prime_ideals(l).size();
  r.counts.prime_filters = prime_filters(l).size();
  r.counts.congruences = cons.size();

  r.witnesses.nested_prime_ideals = find_nested_prime_ideals(l);
  for (ElementId a = 0; a < l.size() && r.witnesses.noncomplemented_element == std::nullopt; ++a) {
    if (!find_complement(l, a)) r.witnesses.noncomplemented_element = a;
  }
  for (const auto& i : maximal_ideals(l)) {
    if (!is_prime_ideal(l, i)) {
      r.witnesses.non_prime_maximal = NonPrimeMaximal{true, i};
      break;
    }
  }
  if (!r.witnesses.non_prime_maximal) {
    for (const auto& f : maximal_filters(l)) {
      if (!is_prime_filter(l, f)) {
        r.witnesses.non_prime_maximal = NonPrimeMaximal{false, f};
        break;
      }
    }
  }
  return r;
}

}  // namespace dlat
