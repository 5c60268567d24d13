#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace dlat {

using ElementId = std::size_t;

// Largest universe an ElementSet (and therefore a FiniteLattice) can hold.
inline constexpr std::size_t kMaxElements = 64;

/// A subset of the elements {0, ..., n-1} of some lattice, stored as a bitmask.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe, std::uint64_t bits = 0)
      : universe_(universe), bits_(bits & full_mask(universe)) {}
  ElementSet(std::size_t universe, std::initializer_list<ElementId> members)
      : universe_(universe) {
    for (ElementId x : members) insert(x);
  }

  static ElementSet all(std::size_t universe) { return ElementSet(universe, full_mask(universe)); }

  std::size_t universe() const noexcept { return universe_; }
  std::uint64_t bits() const noexcept { return bits_; }
  std::size_t count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept { return bits_ == full_mask(universe_); }

  bool contains(ElementId x) const noexcept { return x < universe_ && ((bits_ >> x) & 1U) != 0; }
  void insert(ElementId x) noexcept {
    if (x < universe_) bits_ |= std::uint64_t{1} << x;
  }
  void erase(ElementId x) noexcept {
    if (x < universe_) bits_ &= ~(std::uint64_t{1} << x);
  }

  ElementSet complement() const { return ElementSet(universe_, ~bits_); }
  ElementSet operator&(const ElementSet& o) const { return ElementSet(universe_, bits_ & o.bits_); }
  ElementSet operator|(const ElementSet& o) const { return ElementSet(universe_, bits_ | o.bits_); }

  bool is_subset_of(const ElementSet& o) const noexcept { return (bits_ & ~o.bits_) == 0; }
  bool is_proper_subset_of(const ElementSet& o) const noexcept {
    return is_subset_of(o) && bits_ != o.bits_;
  }
  bool disjoint_from(const ElementSet& o) const noexcept { return (bits_ & o.bits_) == 0; }

  /// Members in ascending order.
  std::vector<ElementId> members() const;

  /// `{0,2,4}`
  std::string to_string() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  static constexpr std::uint64_t full_mask(std::size_t universe) noexcept {
    return universe >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1;
  }

  std::size_t universe_ = 0;
  std::uint64_t bits_ = 0;
};

/// Enumeration order: by size, then by bitmask value.
inline bool size_then_bits_less(const ElementSet& a, const ElementSet& b) noexcept {
  if (a.count() != b.count()) return a.count() < b.count();
  return a.bits() < b.bits();
}

}  // namespace dlat
