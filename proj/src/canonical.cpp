#include "dlat/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>

namespace dlat {
namespace {

using Column = std::uint64_t;

// Lexicographic comparison of two columns read from bit 0 upwards.
int compare_columns(Column a, Column b) {
  if (a == b) return 0;
  const int d = std::countr_zero(a ^ b);
  return ((a >> d) & 1U) == 0 ? -1 : 1;
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const FiniteLattice& l) : lattice_(l), n_(l.size()) {
    compute_classes();
    strict_down_.resize(n_);
    strict_up_.resize(n_);
    for (ElementId x = 0; x < n_; ++x) {
      ElementSet d = l.down_set(x), u = l.up_set(x);
      d.erase(x);
      u.erase(x);
      strict_down_[x] = d.bits();
      strict_up_[x] = u.bits();
    }
    current_.assign(n_, 0);
    best_.assign(n_, 0);
    assignment_.assign(n_, 0);
    best_assignment_.assign(n_, 0);
  }

  CanonicalLabeling run() {
    search(0, 0);
    CanonicalLabeling out;
    out.perm.assign(n_, 0);
    for (std::size_t pos = 0; pos < n_; ++pos) out.perm[best_assignment_[pos]] = pos;
    out.form.assign(n_ * n_, '0');
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (lattice_.leq(best_assignment_[i], best_assignment_[j])) out.form[i * n_ + j] = '1';
      }
    }
    return out;
  }

 private:
  void compute_classes() {
    // Elements sorted by down-set size form a linear extension, so heights
    // can be filled in that order (and depths in reverse).
    std::vector<ElementId> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> below(n_), above(n_);
    for (ElementId x = 0; x < n_; ++x) {
      below[x] = lattice_.down_set(x).count();
      above[x] = lattice_.up_set(x).count();
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](ElementId a, ElementId b) { return below[a] < below[b]; });
    std::vector<std::size_t> height(n_, 0), depth(n_, 0);
    for (ElementId x : order) {
      for (ElementId y = 0; y < n_; ++y) {
        if (lattice_.less(y, x)) height[x] = std::max(height[x], height[y] + 1);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      for (ElementId y = 0; y < n_; ++y) {
        if (lattice_.less(*it, y)) depth[*it] = std::max(depth[*it], depth[y] + 1);
      }
    }
    using Key = std::array<std::size_t, 4>;
    std::vector<Key> key(n_);
    for (ElementId x = 0; x < n_; ++x) key[x] = {height[x], depth[x], below[x], above[x]};
    std::sort(order.begin(), order.end(), [&](ElementId a, ElementId b) { return key[a] < key[b]; });

    // position_class_[pos] is the set of elements allowed at position pos.
    position_class_.assign(n_, 0);
    for (std::size_t pos = 0; pos < n_; ++pos) {
      for (ElementId x = 0; x < n_; ++x) {
        if (key[x] == key[order[pos]]) position_class_[pos] |= Column{1} << x;
      }
    }
  }

  Column column_for(std::size_t pos, ElementId x) const {
    Column col = 0;
    for (std::size_t i = 0; i < pos; ++i) {
      if (lattice_.leq(assignment_[i], x)) col |= Column{1} << i;
    }
    return col;
  }

  bool twins(ElementId a, ElementId b) const {
    return strict_down_[a] == strict_down_[b] && strict_up_[a] == strict_up_[b];
  }

  // Compares current_[0..len) with best_[0..len).
  int compare_prefix(std::size_t len) const {
    for (std::size_t i = 0; i < len; ++i) {
      if (int c = compare_columns(current_[i], best_[i]); c != 0) return c;
    }
    return 0;
  }

  void search(std::size_t pos, Column used) {
    int relation = has_best_ ? compare_prefix(pos) : -1;
    if (relation > 0) return;
    if (pos == n_) {
      if (relation < 0) {
        best_ = current_;
        best_assignment_ = assignment_;
        has_best_ = true;
      }
      return;
    }

    std::vector<ElementId> candidates;
    std::vector<Column> columns;
    Column minimum = 0;
    bool have_minimum = false;
    for (Column rest = position_class_[pos] & ~used; rest != 0; rest &= rest - 1) {
      const auto x = static_cast<ElementId>(std::countr_zero(rest));
      bool redundant = std::any_of(candidates.begin(), candidates.end(),
                                   [&](ElementId c) { return twins(c, x); });
      if (redundant) continue;
      const Column col = column_for(pos, x);
      candidates.push_back(x);
      columns.push_back(col);
      if (!have_minimum || compare_columns(col, minimum) < 0) {
        minimum = col;
        have_minimum = true;
      }
    }
    if (relation == 0 && compare_columns(minimum, best_[pos]) > 0) return;

    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (columns[i] != minimum) continue;
      assignment_[pos] = candidates[i];
      current_[pos] = minimum;
      search(pos + 1, used | (Column{1} << candidates[i]));
    }
  }

  const FiniteLattice& lattice_;
  std::size_t n_;
  std::vector<Column> position_class_;
  std::vector<Column> strict_down_, strict_up_;
  std::vector<Column> current_, best_;
  std::vector<ElementId> assignment_, best_assignment_;
  bool has_best_ = false;
};

}  // namespace

CanonicalLabeling canonical_labeling(const FiniteLattice& lattice) {
  return Canonicalizer(lattice).run();
}

std::string canonical_form(const FiniteLattice& lattice) { return canonical_labeling(lattice).form; }

FiniteLattice canonical_lattice(const FiniteLattice& lattice) {
  return relabel(lattice, canonical_labeling(lattice).perm);
}

bool is_isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

}  // namespace dlat
