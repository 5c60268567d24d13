#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dlat {

enum class Errc {
  ParseError,
  NotAPartialOrder,
  NotALattice,
  NotBounded,
  TooLarge,
  UnknownName,
  InvalidParameter,
  SizeMismatch,
  NotACongruence,
  EmptySet,
  OwnerMismatch,
  NotAnIdeal,
  NotAFilter,
  NotPrime,
  NotNestedPrimes,
  HomomorphismCheckFailed,
  PostconditionFailed,
  HasComplement,
  NotDLattice,
  SizeOutOfRange,
  UnknownPredicate,
};

std::string_view errc_name(Errc code);

// Every failure in the library is reported through this type. `element` is
// the witnessing element when one exists (e.g. the row of an order matrix
// that breaks transitivity); `line` is filled in by the text-format reader.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::optional<std::size_t> element = std::nullopt)
      : std::runtime_error(what), code_(code), element_(element) {}

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> element() const noexcept { return element_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

  Error with_line(std::size_t line) const {
    Error copy = *this;
    copy.line_ = line;
    return copy;
  }

 private:
  Errc code_;
  std::optional<std::size_t> element_;
  std::optional<std::size_t> line_;
};

}  // namespace dlat
