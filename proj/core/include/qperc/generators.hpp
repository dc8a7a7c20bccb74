#ifndef QPERC_GENERATORS_HPP
#define QPERC_GENERATORS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qperc/degree_model.hpp"
#include "qperc/graph.hpp"
#include "qperc/rng.hpp"

namespace qperc {

/// Configuration model: each vertex draws its degree from the model, the
/// whole sequence is re-drawn until the stub total is even, and stubs are
/// then matched uniformly at random.  Colliding pairs (self-loop or
/// duplicate) are re-drawn up to 1000 times, after which the build restarts
/// from scratch; GenerationFailedError after max_restarts restarts.
Graph gen_config_model(const DegreeModel& m, Vertex n, Rng& rng, int max_restarts = 100);

/// Gilbert model: every vertex pair is joined with probability z / n,
/// realized by geometric skip-sampling over the pair sequence.
Graph gen_er(Vertex n, double z, Rng& rng);

/// Ring of n vertices plus n candidate shortcuts, each materialized with
/// probability beta between independent uniform endpoints; self-loops and
/// duplicates are dropped (expected shortcut count beta n up to O(beta^2)).
Graph gen_ws(Vertex n, double beta, Rng& rng);

/// Configuration model with all degrees equal to k; requires n k even, k < n.
Graph gen_random_regular(Vertex n, int k, Rng& rng, int max_restarts = 100);

/// Periodic (toroidal) honeycomb lattice with 2 rows cols vertices, all of
/// degree 3.
Graph gen_honeycomb(int rows, int cols);

struct LoadedGraph {
  Graph graph;
  std::vector<std::string> labels;  // labels[i] = original label of vertex i
};

/// Edge-list text ingestion: one edge per line as two whitespace-separated
/// labels, '#' lines ignored (a "# vertices N" header is honored so isolated
/// vertices survive), optional third token "directed" marks a one-way arc.
/// With bidirectional_only, an edge survives only when both arc directions
/// appear.  degree_cutoff >= 1 removes vertices of degree >= cutoff (single
/// pass on the ingested degrees; iterative_cutoff re-runs until stable);
/// removal drops the vertex, while neighbors merely losing edges stay as
/// isolated vertices.  Duplicate lines collapse; self-loops are dropped.
LoadedGraph load_edge_list(const std::string& path, bool bidirectional_only = false,
                           int degree_cutoff = 0, bool iterative_cutoff = false);

struct GeneratorSpec {
  enum class Kind { ConfigModel, ER, RandomRegular, WattsStrogatz, Honeycomb, EdgeList };

  Kind kind = Kind::ER;
  Vertex n = 0;
  double z = 0.0;                      // ER mean degree
  std::optional<DegreeModel> model;    // ConfigModel
  int k = 0;                           // RandomRegular degree
  double beta = 0.0;                   // WattsStrogatz shortcut probability
  int rows = 0, cols = 0;              // Honeycomb
  std::string path;                    // EdgeList
  bool bidirectional_only = false;
  int degree_cutoff = 0;
  bool iterative_cutoff = false;

  std::string describe() const;
};

Graph generate(const GeneratorSpec& spec, Rng& rng);

}  // namespace qperc

#endif
