#ifndef QPERC_BFS_HPP
#define QPERC_BFS_HPP

#include <cstdint>
#include <vector>

#include "qperc/graph.hpp"
#include "qperc/rng.hpp"

namespace qperc {

/// Reusable BFS buffers; stamping avoids O(N) clears between sweeps.
class BfsScratch {
 public:
  void resize(Vertex n) {
    if (static_cast<Vertex>(mark_.size()) != n) {
      mark_.assign(static_cast<std::size_t>(n), 0);
      stamp_ = 0;
    }
    queue_.reserve(static_cast<std::size_t>(n));
  }

  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
  std::vector<Vertex> queue_;
};

/// Number of vertices within hop distance <= radius of source (inclusive).
/// radius < 0 means unlimited (the whole component).
std::int64_t bfs_ball(const Graph& g, Vertex source, std::int64_t radius);
std::int64_t bfs_ball(const Graph& g, Vertex source, std::int64_t radius, BfsScratch& scratch);

/// Ball sizes at every radius 0..max_radius in one sweep: out[l] counts
/// vertices at distance <= l.  Saturates once the component is exhausted.
void bfs_ball_profile(const Graph& g, Vertex source, std::int64_t max_radius,
                      std::vector<std::int64_t>& out, BfsScratch& scratch);

/// Ordered (source, target) pair counts per hop distance from the given
/// sources; histogram[l] = n(l), l >= 1.  Self-pairs are not counted.
std::vector<std::int64_t> path_length_histogram(const Graph& g, const std::vector<Vertex>& sources);

/// Convenience overload sampling sources uniformly without replacement
/// (all vertices when sample_count >= N).
std::vector<std::int64_t> path_length_histogram(const Graph& g, std::int64_t sample_count,
                                                Rng& rng);

/// Uniform sample of sample_count distinct vertices (all when >= N).
std::vector<Vertex> sample_vertices(Vertex n, std::int64_t sample_count, Rng& rng);

/// Mean path length from an n(l) histogram: sum l n(l) / sum n(l).
double mean_path_length(const std::vector<std::int64_t>& histogram);

}  // namespace qperc

#endif
