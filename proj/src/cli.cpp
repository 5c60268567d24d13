#include "dlat/cli.hpp"

#include <filesystem>
#include <ostream>

#include <CLI11.hpp>

#include "dlat/canonical.hpp"
#include "dlat/congruence.hpp"
#include "dlat/enumeration.hpp"
#include "dlat/ideals.hpp"
#include "dlat/latt_format.hpp"
#include "dlat/properties.hpp"
#include "dlat/report.hpp"

namespace dlat::cli {
namespace {

using nlohmann::json;

struct Config {
  std::string file;
  std::string format = "text";
  std::size_t size = 0;
  std::size_t max_size = 0;
  std::string out_dir;
  std::string predicate;
};

bool json_output(const Config& c) { return c.format == "json"; }

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void check_size_bound(std::size_t n) {
  if (n < 1 || n > kMaxEnumerationSize) {
    throw Error(Errc::SizeOutOfRange, "size must be between 1 and " +
                                          std::to_string(kMaxEnumerationSize) + ", got " +
                                          std::to_string(n));
  }
}

int cmd_check(const Config& c, std::ostream& out) {
  const PropertyReport r = classify(read_latt_file(c.file));
  if (json_output(c)) {
    emit_json(out, to_json(r));
  } else {
    out << to_text(r);
  }
  return kExitOk;
}

int cmd_congruences(const Config& c, std::ostream& out) {
  const FiniteLattice l = read_latt_file(c.file);
  const auto cons = all_congruences(l);
  if (json_output(c)) {
    json list = json::array();
    for (const auto& phi : cons) {
      list.push_back({{"blocks", phi.to_string()}, {"balanced", is_balanced_congruence(phi)}});
    }
    emit_json(out, json{{"count", cons.size()}, {"congruences", list}});
    return kExitOk;
  }
  out << cons.size() << " congruences\n";
  for (const auto& phi : cons) {
    out << phi.to_string() << "  " << (is_balanced_congruence(phi) ? "balanced" : "unbalanced") << '\n';
  }
  return kExitOk;
}

int cmd_ideals(const Config& c, std::ostream& out) {
  const FiniteLattice l = read_latt_file(c.file);
  struct Entry {
    ElementSet set;
    bool prime;
    bool maximal;
  };
  std::vector<Entry> ideals, filters;
  for (const auto& i : enumerate_ideals(l)) {
    ideals.push_back({i, is_prime_ideal(l, i), is_maximal_ideal(l, i)});
  }
  for (const auto& f : enumerate_filters(l)) {
    filters.push_back({f, is_prime_filter(l, f), is_maximal_filter(l, f)});
  }

  if (json_output(c)) {
    auto encode = [](const std::vector<Entry>& entries) {
      json list = json::array();
      for (const auto& e : entries) {
        list.push_back({{"set", e.set.to_string()},
                        {"proper", !e.set.is_full()},
                        {"prime", e.prime},
                        {"maximal", e.maximal}});
      }
      return list;
    };
    emit_json(out, json{{"ideals", encode(ideals)}, {"filters", encode(filters)}});
    return kExitOk;
  }
  auto print = [&](const char* title, const std::vector<Entry>& entries) {
    out << title << ":\n";
    for (const auto& e : entries) {
      out << "  " << e.set.to_string();
      if (e.set.is_full()) out << "  improper";
      if (e.prime) out << "  prime";
      if (e.maximal) out << "  maximal";
      out << '\n';
    }
  };
  print("ideals", ideals);
  print("filters", filters);
  return kExitOk;
}

int cmd_theorem(const Config& c, std::ostream& out) {
  const TheoremVerdict v = verify_theorem(read_latt_file(c.file));
  if (json_output(c)) {
    emit_json(out, to_json(v));
  } else {
    out << to_text(v);
  }
  return v.verdict == Verdict::Fail ? kExitVerdictFailed : kExitOk;
}

int cmd_enumerate(const Config& c, std::ostream& out) {
  check_size_bound(c.size);
  const auto lattices = enumerate_lattices(c.size);
  if (!c.out_dir.empty()) {
    std::filesystem::create_directories(c.out_dir);
    for (std::size_t i = 0; i < lattices.size(); ++i) {
      const auto name = "lat_" + std::to_string(c.size) + "_" + std::to_string(i) + ".latt";
      write_latt_file(std::filesystem::path(c.out_dir) / name, lattices[i]);
    }
  }
  if (json_output(c)) {
    json forms = json::array();
    for (const auto& l : lattices) forms.push_back(canonical_form(l));
    emit_json(out, json{{"size", c.size}, {"count", lattices.size()}, {"lattices", forms}});
    return kExitOk;
  }
  out << lattices.size() << " lattices of size " << c.size << '\n';
  for (std::size_t i = 0; i < lattices.size(); ++i) {
    out << i << ' ' << canonical_form(lattices[i]) << '\n';
  }
  if (!c.out_dir.empty()) out << "wrote " << lattices.size() << " files to " << c.out_dir << '\n';
  return kExitOk;
}

int cmd_search(const Config& c, std::ostream& out) {
  const SearchPredicate p = parse_predicate(c.predicate);
  check_size_bound(c.max_size);
  const auto witnesses = search_counterexample(p, c.max_size);
  if (json_output(c)) {
    json list = json::array();
    for (const auto& w : witnesses) {
      list.push_back({{"latt", to_latt(w.lattice)}, {"report", to_json(w.report)}});
    }
    emit_json(out, json{{"predicate", c.predicate},
                        {"max_size", c.max_size},
                        {"count", witnesses.size()},
                        {"witnesses", list}});
  } else {
    out << witnesses.size() << " witnesses\n";
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
      out << "--- witness " << i << '\n' << to_latt(witnesses[i].lattice) << to_text(witnesses[i].report);
    }
  }
  return witnesses.empty() ? kExitOk : kExitVerdictFailed;
}

int cmd_census(const Config& c, std::ostream& out) {
  check_size_bound(c.max_size);
  const auto rows = census(c.max_size);
  if (json_output(c)) {
    emit_json(out, census_to_json(rows));
  } else {
    out << census_table(rows);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config config;
  CLI::App app{"Finite lattice classification and theorem checks", "dlat"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", config.file, "Lattice in LATT v1 format")->required();
  };

  auto* check = app.add_subcommand("check", "Print the property report of a lattice");
  auto* congruences = app.add_subcommand("congruences", "List the congruences of a lattice");
  auto* ideals = app.add_subcommand("ideals", "List ideals and filters with prime/maximal flags");
  auto* theorem = app.add_subcommand("theorem", "Evaluate the seven conditions and the verdict");
  for (auto* sub : {check, congruences, ideals, theorem}) {
    add_file(sub);
    add_format(sub);
  }

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate lattices of one size up to isomorphism");
  enumerate->add_option("--size", config.size, "Number of elements")->required();
  enumerate->add_option("--out", config.out_dir, "Write lat_<n>_<index>.latt files here");
  add_format(enumerate);

  auto* search = app.add_subcommand("search", "Search all lattices up to a size for a predicate");
  search->add_option("--predicate", config.predicate, "Predicate name")->required();
  search->add_option("--max-size", config.max_size, "Largest size searched")->required();
  add_format(search);

  auto* census_cmd = app.add_subcommand("census", "Per-size counts of lattice classes");
  census_cmd->add_option("--max-size", config.max_size, "Largest size counted")->required();
  add_format(census_cmd);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("dlat");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    if (check->parsed()) return cmd_check(config, out);
    if (congruences->parsed()) return cmd_congruences(config, out);
    if (ideals->parsed()) return cmd_ideals(config, out);
    if (theorem->parsed()) return cmd_theorem(config, out);
    if (enumerate->parsed()) return cmd_enumerate(config, out);
    if (search->parsed()) return cmd_search(config, out);
    return cmd_census(config, out);
  } catch (const Error& e) {
    if (!config.file.empty()) err << config.file << ':';
    if (e.line()) err << *e.line() << ':';
    if (!config.file.empty() || e.line()) err << ' ';
    err << errc_name(e.code()) << ": " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

}  // namespace dlat::cli
