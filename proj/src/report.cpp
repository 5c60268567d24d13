#include "dlat/report.hpp"

#include <cstdio>
#include <sstream>

namespace dlat {

using nlohmann::json;

namespace {

const char* boolean(bool v) { return v ? "true" : "false"; }

json conditions_object(const SevenConditions& c) {
  json out = json::object();
  for (int k = 1; k <= 7; ++k) out["c" + std::to_string(k)] = c[k];
  return out;
}

}  // namespace

json to_json(const SevenConditions& conditions) { return conditions_object(conditions); }

json to_json(const PropertyReport& r) {
  json witnesses = json::object();
  const auto& w = r.witnesses;
  witnesses["nested_prime_ideals"] =
      w.nested_prime_ideals
          ? json::array({w.nested_prime_ideals->lower.to_string(), w.nested_prime_ideals->upper.to_string()})
          : json(nullptr);
  witnesses["noncomplemented_element"] =
      w.noncomplemented_element ? json(*w.noncomplemented_element) : json(nullptr);
  witnesses["unbalanced_congruence"] =
      w.unbalanced_congruence ? json(w.unbalanced_congruence->to_string()) : json(nullptr);
  witnesses["non_prime_maximal"] =
      w.non_prime_maximal
          ? json{{"kind", w.non_prime_maximal->is_ideal ? "ideal" : "filter"},
                 {"set", w.non_prime_maximal->set.to_string()}}
          : json(nullptr);

  return json{
      {"size", r.size},
      {"bounded", r.bounded},
      {"d_lattice", r.d_lattice},
      {"balanced", r.balanced},
      {"complemented", r.complemented},
      {"distributive", r.distributive},
      {"degenerate", r.degenerate},
      {"conditions", conditions_object(r.conditions)},
      {"counts",
       {{"ideals", r.counts.ideals},
        {"filters", r.counts.filters},
        {"prime_ideals", r.counts.prime_ideals},
        {"prime_filters", r.counts.prime_filters},
        {"congruences", r.counts.congruences}}},
      {"witnesses", witnesses},
  };
}

json to_json(const TheoremVerdict& v) {
  return json{
      {"scope", v.d_lattice ? "d-lattice" : "not-a-d-lattice"},
      {"verdict", std::string(verdict_name(v.verdict))},
      {"d_lattice", v.d_lattice},
      {"balanced", v.balanced},
      {"complemented", v.complemented},
      {"conditions", conditions_object(v.conditions)},
      {"failures", v.failures},
  };
}

json census_to_json(const std::vector<EnumerationStats>& rows) {
  json out_rows = json::array();
  json timing = json::array();
  for (const auto& row : rows) {
    out_rows.push_back({
        {"size", row.size},
        {"lattice_count", row.lattice_count},
        {"d_lattice_count", row.d_lattice_count},
        {"balanced_count", row.balanced_count},
        {"complemented_count", row.complemented_count},
        {"d_balanced_count", row.d_balanced_count},
        {"d_complemented_count", row.d_complemented_count},
    });
    timing.push_back({{"size", row.size}, {"elapsed", row.elapsed.count()}});
  }
  return json{{"rows", out_rows}, {"timing_ms", timing}};
}

std::string to_text(const PropertyReport& r) {
  std::ostringstream os;
  os << "size: " << r.size << '\n'
     << "bounded: " << boolean(r.bounded) << '\n'
     << "d_lattice: " << boolean(r.d_lattice) << '\n'
     << "balanced: " << boolean(r.balanced) << '\n'
     << "complemented: " << boolean(r.complemented) << '\n'
     << "distributive: " << boolean(r.distributive) << '\n'
     << "degenerate: " << boolean(r.degenerate) << '\n';
  for (int k = 1; k <= 7; ++k) os << "conditions.c" << k << ": " << boolean(r.conditions[k]) << '\n';
  os << "counts.ideals: " << r.counts.ideals << '\n'
     << "counts.filters: " << r.counts.filters << '\n'
     << "counts.prime_ideals: " << r.counts.prime_ideals << '\n'
     << "counts.prime_filters: " << r.counts.prime_filters << '\n'
     << "counts.congruences: " << r.counts.congruences << '\n';

  const auto& w = r.witnesses;
  os << "witnesses.nested_prime_ideals: ";
  if (w.nested_prime_ideals) {
    os << w.nested_prime_ideals->lower.to_string() << ' ' << w.nested_prime_ideals->upper.to_string();
  } else {
    os << "none";
  }
  os << "\nwitnesses.noncomplemented_element: ";
  if (w.noncomplemented_element) {
    os << *w.noncomplemented_element;
  } else {
    os << "none";
  }
  os << "\nwitnesses.unbalanced_congruence: "
     << (w.unbalanced_congruence ? w.unbalanced_congruence->to_string() : "none");
  os << "\nwitnesses.non_prime_maximal: ";
  if (w.non_prime_maximal) {
    os << (w.non_prime_maximal->is_ideal ? "ideal " : "filter ") << w.non_prime_maximal->set.to_string();
  } else {
    os << "none";
  }
  os << '\n';
  if (r.degenerate) {
    os << "note: one-element lattice; d-lattice, complemented and balanced by convention\n";
  }
  return os.str();
}

std::string to_text(const TheoremVerdict& v) {
  static constexpr const char* kLabels[7] = {
      "maximal filter whose complement is not a maximal ideal",
      "maximal ideal whose complement is not a maximal filter",
      "two nested prime ideals",
      "two nested prime filters",
      "homomorphism onto the 3-element chain",
      "not balanced",
      "not complemented",
  };
  std::ostringstream os;
  os << "scope: " << (v.d_lattice ? "d-lattice" : "not-a-d-lattice") << '\n';
  for (int k = 1; k <= 7; ++k) {
    os << "(" << k << ") " << kLabels[k - 1] << ": " << boolean(v.conditions[k]) << '\n';
  }
  os << "balanced: " << boolean(v.balanced) << '\n'
     << "complemented: " << boolean(v.complemented) << '\n';
  for (const auto& f : v.failures) os << "failure: " << f << '\n';
  os << "verdict: " << verdict_name(v.verdict) << '\n';
  return os.str();
}

std::string census_table(const std::vector<EnumerationStats>& rows) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%4s %9s %10s %9s %13s %11s %15s %11s\n", "size", "lattices",
                "d_lattices", "balanced", "complemented", "d_balanced", "d_complemented",
                "elapsed_ms");
  out += line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%4zu %9zu %10zu %9zu %13zu %11zu %15zu %11.1f\n", r.size,
                  r.lattice_count, r.d_lattice_count, r.balanced_count, r.complemented_count,
                  r.d_balanced_count, r.d_complemented_count, r.elapsed.count());
    out += line;
  }
  return out;
}

}  // namespace dlat
