#include "qperc/components.hpp"

#include <algorithm>

namespace qperc {

ComponentStats components_from_union_find(UnionFind& uf) {
  const std::int64_t n = uf.count();
  ComponentStats stats;
  stats.n = static_cast<Vertex>(n);
  for (std::int64_t v = 0; v < n; ++v) {
    if (uf.find(v) == v) stats.sizes.push_back(uf.set_size(v));
  }
  std::sort(stats.sizes.begin(), stats.sizes.end());
  stats.giant = stats.sizes.empty() ? 0 : stats.sizes.back();
  return stats;
}

ComponentStats components(const Graph& g) {
  UnionFind uf(g.vertex_count());
  for (EdgeId i = 0; i < g.edge_slots(); ++i) {
    const Edge& e = g.edge(i);
    if (e.alive) uf.unite(e.u, e.v);
  }
  return components_from_union_find(uf);
}

double avg_finite_size(const ComponentStats& stats, bool exclude_giant) {
  double num = 0.0;
  double den = 0.0;
  bool skipped = false;
  for (auto it = stats.sizes.rbegin(); it != stats.sizes.rend(); ++it) {
    const auto s = static_cast<double>(*it);
    if (exclude_giant && !skipped) {
      skipped = true;  // sizes are sorted, so the first from the back is the giant
      continue;
    }
    num += s * s;
    den += s;
  }
  if (den <= 0.0) throw EmptyPoolError("no vertices left after excluding the giant component");
  return num / den;
}

double avg_finite_size_auto(const ComponentStats& stats, double giant_cutoff) {
  const bool exclude =
      stats.n > 0 && static_cast<double>(stats.giant) > giant_cutoff * static_cast<double>(stats.n);
  return avg_finite_size(stats, exclude);
}

}  // namespace qperc
