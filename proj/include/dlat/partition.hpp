#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dlat/element_set.hpp"

namespace dlat {

/// A set partition of {0, ..., n-1} in normalized label form: element 0 is
/// in block 0 and block labels appear in first-occurrence order, so equal
/// partitions compare equal.
class Partition {
 public:
  Partition() = default;

  /// Any labeling; it is normalized.
  static Partition from_labels(const std::vector<std::size_t>& labels);
  static Partition identity(std::size_t n);
  static Partition all(std::size_t n);
  /// The two-block partition {S, complement of S} (one block if S is empty or full).
  static Partition from_split(const ElementSet& s);

  std::size_t size() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return block_count_; }
  std::size_t block_of(ElementId x) const { return block_of_[x]; }
  bool same_block(ElementId x, ElementId y) const { return block_of_[x] == block_of_[y]; }
  const std::vector<std::size_t>& labels() const noexcept { return block_of_; }

  ElementSet block_containing(ElementId x) const;
  std::vector<ElementSet> blocks() const;

  /// True iff this partition is contained in `other` as an equivalence relation.
  bool refines(const Partition& other) const;

  /// `{{0,1},{2}}`: sorted blocks, ordered by least element.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.block_of_ <=> b.block_of_; }

 private:
  std::vector<std::size_t> block_of_;
  std::size_t block_count_ = 0;
};

/// Union-find over element indices.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);

  ElementId find(ElementId x);
  /// Returns true if x and y were in different sets.
  bool merge(ElementId x, ElementId y);

  Partition to_partition();

 private:
  std::vector<ElementId> parent_;
  std::vector<std::size_t> rank_;
};

}  // namespace dlat
