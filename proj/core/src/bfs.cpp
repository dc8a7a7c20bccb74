#include "qperc/bfs.hpp"

#include <numeric>

namespace qperc {

namespace {

// Core layered BFS.  Calls visit_layer(distance, count_at_distance) for each
// non-empty layer starting at distance 0 (the source itself), stopping after
// max_radius layers (unlimited when negative).
template <typename LayerFn>
void layered_bfs(const Graph& g, Vertex source, std::int64_t max_radius, BfsScratch& scratch,
                 LayerFn&& visit_layer) {
  scratch.resize(g.vertex_count());
  const std::uint32_t stamp = ++scratch.stamp_;
  if (stamp == 0) {  // wrapped; reset marks
    std::fill(scratch.mark_.begin(), scratch.mark_.end(), 0);
    scratch.stamp_ = 1;
  }
  auto& queue = scratch.queue_;
  queue.clear();
  queue.push_back(source);
  scratch.mark_[static_cast<std::size_t>(source)] = scratch.stamp_;
  visit_layer(0, 1);

  std::size_t begin = 0;
  std::int64_t distance = 0;
  while (begin < queue.size() && (max_radius < 0 || distance < max_radius)) {
    const std::size_t end = queue.size();
    ++distance;
    for (std::size_t i = begin; i < end; ++i) {
      for (const auto& a : g.neighbors(queue[i])) {
        auto& mark = scratch.mark_[static_cast<std::size_t>(a.to)];
        if (mark != scratch.stamp_) {
          mark = scratch.stamp_;
          queue.push_back(a.to);
        }
      }
    }
    if (queue.size() > end) visit_layer(distance, static_cast<std::int64_t>(queue.size() - end));
    begin = end;
  }
}

}  // namespace

std::int64_t bfs_ball(const Graph& g, Vertex source, std::int64_t radius, BfsScratch& scratch) {
  std::int64_t total = 0;
  layered_bfs(g, source, radius, scratch, [&](std::int64_t, std::int64_t count) { total += count; });
  return total;
}

std::int64_t bfs_ball(const Graph& g, Vertex source, std::int64_t radius) {
  BfsScratch scratch;
  return bfs_ball(g, source, radius, scratch);
}

void bfs_ball_profile(const Graph& g, Vertex source, std::int64_t max_radius,
                      std::vector<std::int64_t>& out, BfsScratch& scratch) {
  out.assign(static_cast<std::size_t>(max_radius) + 1, 0);
  layered_bfs(g, source, max_radius, scratch, [&](std::int64_t l, std::int64_t count) {
    out[static_cast<std::size_t>(l)] = count;
  });
  // Prefix-sum layer counts into cumulative ball sizes.
  for (std::size_t l = 1; l < out.size(); ++l) out[l] += out[l - 1];
}

std::vector<std::int64_t> path_length_histogram(const Graph& g,
                                                const std::vector<Vertex>& sources) {
  if (sources.empty()) throw EmptyPoolError("path_length_histogram: empty source sample");
  std::vector<std::int64_t> histogram;
  BfsScratch scratch;
  for (const Vertex s : sources) {
    layered_bfs(g, s, -1, scratch, [&](std::int64_t l, std::int64_t count) {
      if (l == 0) return;  // self-pair
      if (static_cast<std::size_t>(l) >= histogram.size())
        histogram.resize(static_cast<std::size_t>(l) + 1, 0);
      histogram[static_cast<std::size_t>(l)] += count;
    });
  }
  return histogram;
}

std::vector<Vertex> sample_vertices(Vertex n, std::int64_t sample_count, Rng& rng) {
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  if (sample_count >= n || sample_count < 0) return all;
  // Partial Fisher-Yates: the first sample_count entries are the sample.
  for (std::int64_t i = 0; i < sample_count; ++i) {
    const auto j = i + static_cast<std::int64_t>(
                           rng.uniform_below(static_cast<std::uint64_t>(n - i)));
    std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(j)]);
  }
  all.resize(static_cast<std::size_t>(sample_count));
  return all;
}

std::vector<std::int64_t> path_length_histogram(const Graph& g, std::int64_t sample_count,
                                                Rng& rng) {
  return path_length_histogram(g, sample_vertices(g.vertex_count(), sample_count, rng));
}

double mean_path_length(const std::vector<std::int64_t>& histogram) {
  double num = 0.0, den = 0.0;
  for (std::size_t l = 1; l < histogram.size(); ++l) {
    num += static_cast<double>(l) * static_cast<double>(histogram[l]);
    den += static_cast<double>(histogram[l]);
  }
  return den > 0.0 ? num / den : 0.0;
}

}  // namespace qperc
