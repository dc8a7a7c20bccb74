#ifndef QPERC_GRAPH_HPP
#define QPERC_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qperc/errors.hpp"

namespace qperc {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

/// Original edges come from the generator or input file; Newborn edges are
/// created by q-swap preprocessing and carry the single-copy conversion
/// probability during percolation.
enum class EdgeClass : std::uint8_t { Original = 0, Newborn = 1 };

struct Edge {
  Vertex u = -1;
  Vertex v = -1;
  EdgeClass cls = EdgeClass::Original;
  bool alive = false;
};

struct AdjEntry {
  Vertex to;
  EdgeId edge;
};

/// Undirected simple graph: adjacency lists plus an edge table with a class
/// tag per edge.  No self-loops, no duplicate edges.  Removal (used by
/// q-swap) tombstones the edge table entry and erases both adjacency entries,
/// so reads only ever see live edges through adjacency.
class Graph {
 public:
  explicit Graph(Vertex n);

  /// Strict constructor used for programmatic edge lists; rejects self-loops,
  /// duplicates and out-of-range endpoints.
  static Graph from_edges(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  Vertex vertex_count() const { return n_; }
  std::int64_t edge_count() const { return live_edges_; }

  int degree(Vertex v) const { return static_cast<int>(adj_[check(v)].size()); }
  const std::vector<AdjEntry>& neighbors(Vertex v) const { return adj_[check(v)]; }

  bool has_edge(Vertex u, Vertex v) const;

  /// Adds edge (u, v); throws SelfLoopError / DuplicateEdgeError /
  /// VertexRangeError on contract violations.  Returns the edge id.
  EdgeId add_edge(Vertex u, Vertex v, EdgeClass cls = EdgeClass::Original);

  void remove_edge(EdgeId id);

  const Edge& edge(EdgeId id) const { return edges_[static_cast<std::size_t>(id)]; }
  /// Edge table size including tombstones; iterate with edge(i).alive checks.
  std::int64_t edge_slots() const { return static_cast<std::int64_t>(edges_.size()); }

  std::vector<std::int64_t> degree_histogram() const;

  /// Exhaustive structural check (adjacency symmetry, no self/duplicate
  /// edges, degree sum).  Intended for tests; O(N + M log M).
  bool check_invariants() const;

 private:
  Vertex check(Vertex v) const {
    if (v < 0 || v >= n_) throw VertexRangeError(v);
    return v;
  }

  Vertex n_ = 0;
  std::int64_t live_edges_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<AdjEntry>> adj_;
};

/// Writes "u v" lines plus a "# vertices N" header so isolated vertices
/// survive a round-trip.
void save_edge_list(const Graph& g, const std::string& path);

}  // namespace qperc

#endif
