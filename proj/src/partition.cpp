#include "dlat/partition.hpp"

#include <limits>
#include <numeric>

#include "dlat/error.hpp"

namespace dlat {

Partition Partition::from_labels(const std::vector<std::size_t>& labels) {
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  Partition p;
  p.block_of_.resize(labels.size());
  std::vector<std::size_t> renamed;
  std::vector<std::size_t> seen_labels;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    std::size_t next = kUnset;
    for (std::size_t k = 0; k < seen_labels.size(); ++k) {
      if (seen_labels[k] == labels[i]) next = renamed[k];
    }
    if (next == kUnset) {
      next = seen_labels.size();
      seen_labels.push_back(labels[i]);
      renamed.push_back(next);
    }
    p.block_of_[i] = next;
  }
  p.block_count_ = seen_labels.size();
  return p;
}

Partition Partition::identity(std::size_t n) {
  std::vector<std::size_t> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return from_labels(labels);
}

Partition Partition::all(std::size_t n) { return from_labels(std::vector<std::size_t>(n, 0)); }

Partition Partition::from_split(const ElementSet& s) {
  std::vector<std::size_t> labels(s.universe());
  for (ElementId x = 0; x < s.universe(); ++x) labels[x] = s.contains(x) ? 1 : 0;
  return from_labels(labels);
}

ElementSet Partition::block_containing(ElementId x) const {
  ElementSet s(size());
  for (ElementId y = 0; y < size(); ++y) {
    if (block_of_[y] == block_of_[x]) s.insert(y);
  }
  return s;
}

std::vector<ElementSet> Partition::blocks() const {
  std::vector<ElementSet> out(block_count_, ElementSet(size()));
  for (ElementId x = 0; x < size(); ++x) out[block_of_[x]].insert(x);
  return out;
}

bool Partition::refines(const Partition& other) const {
  if (other.size() != size()) throw Error(Errc::SizeMismatch, "partitions of different sizes");
  // Each block of *this must map into a single block of other.
  std::vector<std::size_t> image(block_count_, std::numeric_limits<std::size_t>::max());
  for (ElementId x = 0; x < size(); ++x) {
    auto& slot = image[block_of_[x]];
    if (slot == std::numeric_limits<std::size_t>::max()) {
      slot = other.block_of_[x];
    } else if (slot != other.block_of_[x]) {
      return false;
    }
  }
  return true;
}

std::string Partition::to_string() const {
  // Normalized labels already order blocks by least element.
  std::string out = "{";
  const auto bs = blocks();
  for (std::size_t b = 0; b < bs.size(); ++b) {
    if (b != 0) out += ',';
    out += bs[b].to_string();
  }
  out += '}';
  return out;
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

ElementId DisjointSets::find(ElementId x) {
  ElementId root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    ElementId next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool DisjointSets::merge(ElementId x, ElementId y) {
  ElementId rx = find(x), ry = find(y);
  if (rx == ry) return false;
  if (rank_[rx] < rank_[ry]) std::swap(rx, ry);
  parent_[ry] = rx;
  if (rank_[rx] == rank_[ry]) ++rank_[rx];
  return true;
}

Partition DisjointSets::to_partition() {
  std::vector<std::size_t> labels(parent_.size());
  for (ElementId x = 0; x < parent_.size(); ++x) labels[x] = find(x);
  return Partition::from_labels(labels);
}

}  // namespace dlat
