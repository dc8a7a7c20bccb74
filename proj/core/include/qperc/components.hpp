#ifndef QPERC_COMPONENTS_HPP
#define QPERC_COMPONENTS_HPP

#include <cstdint>
#include <vector>

#include "qperc/graph.hpp"

namespace qperc {

/// Union-find with path compression and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::int64_t n) : parent_(n), size_(n, 1) {
    for (std::int64_t i = 0; i < n; ++i) parent_[i] = i;
  }

  std::int64_t find(std::int64_t x) {
    std::int64_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      const std::int64_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  /// Returns true when x and y were in different sets.
  bool unite(std::int64_t x, std::int64_t y) {
    std::int64_t a = find(x), b = find(y);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  std::int64_t set_size(std::int64_t x) { return size_[find(x)]; }
  std::int64_t count() const { return static_cast<std::int64_t>(parent_.size()); }

 private:
  std::vector<std::int64_t> parent_;
  std::vector<std::int64_t> size_;
};

/// Component size census of a graph (or of a percolated subgraph).
struct ComponentStats {
  std::vector<std::int64_t> sizes;  // ascending
  std::int64_t giant = 0;           // largest component size
  Vertex n = 0;
};

ComponentStats components(const Graph& g);

/// Builds stats from a union-find over the same vertex set.
ComponentStats components_from_union_find(UnionFind& uf);

/// Mean component size seen by a uniformly random vertex: sum s^2 / sum s.
/// With exclude_giant the largest component leaves both numerator and the
/// vertex pool; throws EmptyPoolError when nothing remains.
double avg_finite_size(const ComponentStats& stats, bool exclude_giant);

/// Policy variant: excludes the largest component only when it holds more
/// than giant_cutoff of all vertices (percolation sweeps use this, since
/// below threshold there is no giant to exclude).
double avg_finite_size_auto(const ComponentStats& stats, double giant_cutoff = 1e-2);

}  // namespace qperc

#endif
