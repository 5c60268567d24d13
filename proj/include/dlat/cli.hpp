#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dlat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFailed = 1;
inline constexpr int kExitInvalidInput = 2;

/// Runs one command. `args` excludes the program name.
///
///   check <file>          property report
///   congruences <file>    Con(L), one congruence per line
///   ideals <file>         ideals and filters with prime/maximal flags
///   theorem <file>        the seven conditions and the verdict
///   enumerate --size N [--out DIR]
///   search --predicate P --max-size N
///   census --max-size N
///
/// Every command takes --format text|json. Exit codes: 0 success, 1 failed
/// verdict or witnesses found, 2 invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dlat::cli
