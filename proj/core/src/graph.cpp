#include "qperc/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace qperc {

Graph::Graph(Vertex n) : n_(n) {
  if (n < 0) throw VertexRangeError(n);
  adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check(u);
  check(v);
  // Scan the shorter adjacency list.
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
  for (const auto& e : a)
    if (e.to == other) return true;
  return false;
}

EdgeId Graph::add_edge(Vertex u, Vertex v, EdgeClass cls) {
  check(u);
  check(v);
  if (u == v) throw SelfLoopError(u);
  if (has_edge(u, v)) throw DuplicateEdgeError(u, v);
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back(Edge{u, v, cls, true});
  adj_[u].push_back(AdjEntry{v, id});
  adj_[v].push_back(AdjEntry{u, id});
  ++live_edges_;
  return id;
}

void Graph::remove_edge(EdgeId id) {
  auto& e = edges_.at(static_cast<std::size_t>(id));
  if (!e.alive) return;
  e.alive = false;
  --live_edges_;
  auto drop = [id](std::vector<AdjEntry>& list) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i].edge == id) {
        list[i] = list.back();
        list.pop_back();
        return;
      }
    }
  };
  drop(adj_[e.u]);
  drop(adj_[e.v]);
}

std::vector<std::int64_t> Graph::degree_histogram() const {
  std::vector<std::int64_t> hist;
  for (const auto& list : adj_) {
    const std::size_t d = list.size();
    if (d >= hist.size()) hist.resize(d + 1, 0);
    ++hist[d];
  }
  if (hist.empty()) hist.push_back(n_);
  return hist;
}

bool Graph::check_invariants() const {
  std::int64_t degree_sum = 0;
  std::vector<std::pair<Vertex, Vertex>> seen;
  for (Vertex v = 0; v < n_; ++v) {
    degree_sum += static_cast<std::int64_t>(adj_[v].size());
    for (const auto& a : adj_[v]) {
      if (a.to < 0 || a.to >= n_ || a.to == v) return false;
      const Edge& e = edges_[static_cast<std::size_t>(a.edge)];
      if (!e.alive) return false;
      if (!((e.u == v && e.v == a.to) || (e.v == v && e.u == a.to))) return false;
      // Symmetry: the mirrored entry must exist with the same edge id.
      bool mirrored = false;
      for (const auto& b : adj_[a.to])
        if (b.to == v && b.edge == a.edge) mirrored = true;
      if (!mirrored) return false;
      if (v < a.to) seen.emplace_back(v, a.to);
    }
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  return degree_sum == 2 * live_edges_;
}

void save_edge_list(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "# vertices " << g.vertex_count() << "\n";
  for (EdgeId i = 0; i < g.edge_slots(); ++i) {
    const Edge& e = g.edge(i);
    if (e.alive) out << e.u << " " << e.v << "\n";
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace qperc
