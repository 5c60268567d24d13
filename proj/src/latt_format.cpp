#include "dlat/latt_format.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

namespace dlat {
namespace {

Error parse_error(std::size_t line, const std::string& what) {
  return Error(Errc::ParseError, what).with_line(line);
}

}  // namespace

FiniteLattice parse_latt(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      throw parse_error(lines.size() + 1, "missing trailing newline");
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }

  if (lines.empty() || lines[0] != "LATT 1") throw parse_error(1, "expected header 'LATT 1'");
  if (lines.size() < 2 || !lines[1].starts_with("n=")) throw parse_error(2, "expected 'n=<k>'");

  const std::string_view digits = lines[1].substr(2);
  std::size_t k = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size() ||
      digits[0] == '0') {
    throw parse_error(2, "size must be a positive decimal integer without leading zeros");
  }
  if (k > kMaxElements) {
    throw Error(Errc::TooLarge, "at most " + std::to_string(kMaxElements) + " elements supported")
        .with_line(2);
  }
  if (lines.size() != k + 2) {
    throw parse_error(std::min(lines.size(), k + 2) + 1,
                      "expected " + std::to_string(k) + " matrix rows, found " +
                          std::to_string(lines.size() - 2));
  }

  OrderMatrix m(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::string_view row = lines[i + 2];
    if (row.size() != k) {
      throw parse_error(i + 3, "row has " + std::to_string(row.size()) + " characters, expected " +
                                   std::to_string(k));
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (row[j] != '0' && row[j] != '1') throw parse_error(i + 3, "matrix entries must be 0 or 1");
      m.set(i, j, row[j] == '1');
    }
  }

  try {
    return from_leq_matrix(m);
  } catch (const Error& e) {
    throw e.with_line(e.element() ? *e.element() + 3 : 3);
  }
}

std::string to_latt(const FiniteLattice& lattice) {
  const std::size_t n = lattice.size();
  std::string out = "LATT 1\nn=" + std::to_string(n) + "\n";
  out.reserve(out.size() + n * (n + 1));
  for (ElementId i = 0; i < n; ++i) {
    for (ElementId j = 0; j < n; ++j) out += lattice.leq(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

FiniteLattice read_latt_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open file");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_latt(text);
}

void write_latt_file(const std::filesystem::path& path, const FiniteLattice& lattice) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path.string());
  out << to_latt(lattice);
}

}  // namespace dlat
