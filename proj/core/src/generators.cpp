#include "qperc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "qperc/errors.hpp"

namespace qperc {

namespace {

constexpr int kPairRedraws = 1000;

// Number of Bernoulli(p) failures before the first success.
std::int64_t geometric(double p, Rng& rng) {
  const double u = 1.0 - rng.uniform();  // (0, 1]
  return static_cast<std::int64_t>(std::floor(std::log(u) / std::log1p(-p)));
}

bool try_match_stubs(Graph& g, std::vector<Vertex>& stubs, Rng& rng) {
  while (stubs.size() >= 2) {
    bool placed = false;
    for (int attempt = 0; attempt < kPairRedraws; ++attempt) {
      const auto i = static_cast<std::size_t>(rng.uniform_below(stubs.size()));
      auto j = static_cast<std::size_t>(rng.uniform_below(stubs.size() - 1));
      if (j >= i) ++j;
      const Vertex u = stubs[i], v = stubs[j];
      if (u == v || g.has_edge(u, v)) continue;
      g.add_edge(u, v);
      // Remove the two stubs, higher index first.
      const auto hi = std::max(i, j), lo = std::min(i, j);
      stubs[hi] = stubs.back();
      stubs.pop_back();
      stubs[lo] = stubs.back();
      stubs.pop_back();
      placed = true;
      break;
    }
    if (!placed) return false;
  }
  return true;
}

}  // namespace

Graph gen_config_model(const DegreeModel& m, Vertex n, Rng& rng, int max_restarts) {
  if (n < 2) throw DomainError("configuration model requires n >= 2");
  for (int restart = 0; restart <= max_restarts; ++restart) {
    // Degree sequence with an even stub total; a fresh sequence is drawn on
    // every odd sum (bounded, since a deterministic odd total never clears).
    std::vector<int> degrees(static_cast<std::size_t>(n));
    bool feasible = false;
    for (int attempt = 0; attempt <= max_restarts; ++attempt) {
      std::int64_t total = 0;
      bool in_range = true;
      for (auto& d : degrees) {
        d = m.sample(rng);
        total += d;
        if (d > n - 1) in_range = false;
      }
      if (total % 2 == 0 && in_range) {
        feasible = true;
        break;
      }
    }
    if (!feasible) throw GenerationFailedError("configuration model: no even degree sequence");

    Graph g(n);
    std::vector<Vertex> stubs;
    for (Vertex v = 0; v < n; ++v)
      stubs.insert(stubs.end(), static_cast<std::size_t>(degrees[static_cast<std::size_t>(v)]), v);
    if (try_match_stubs(g, stubs, rng)) return g;
  }
  throw GenerationFailedError("configuration model: stub matching failed after max restarts");
}

Graph gen_er(Vertex n, double z, Rng& rng) {
  if (n < 2 || !(z > 0.0) || z >= static_cast<double>(n))
    throw DomainError("gen_er requires n >= 2 and 0 < z < n");
  Graph g(n);
  const double p = z / static_cast<double>(n);
  // Walk the lexicographic pair sequence (0,1), (0,2), ..., (n-2, n-1) with
  // geometric gaps; O(expected edges) instead of O(n^2).
  Vertex u = 0, v = 0;
  for (;;) {
    std::int64_t gap = geometric(p, rng) + 1;
    std::int64_t next = static_cast<std::int64_t>(v) + gap;
    while (next >= n) {
      ++u;
      if (u >= n - 1) return g;
      next = static_cast<std::int64_t>(u) + 1 + (next - n);
    }
    v = static_cast<Vertex>(next);
    g.add_edge(u, v);
  }
}

Graph gen_ws(Vertex n, double beta, Rng& rng) {
  if (n < 3) throw DomainError("gen_ws requires n >= 3");
  if (!(beta >= 0.0 && beta <= 1.0)) throw DomainError("gen_ws requires beta in [0, 1]");
  Graph g(n);
  for (Vertex i = 0; i < n; ++i) g.add_edge(i, static_cast<Vertex>((i + 1) % n));
  for (Vertex i = 0; i < n; ++i) {
    if (!rng.bernoulli(beta)) continue;
    const auto a = static_cast<Vertex>(rng.uniform_below(static_cast<std::uint64_t>(n)));
    const auto b = static_cast<Vertex>(rng.uniform_below(static_cast<std::uint64_t>(n)));
    if (a == b || g.has_edge(a, b)) continue;  // dropped, not re-drawn
    g.add_edge(a, b);
  }
  return g;
}

Graph gen_random_regular(Vertex n, int k, Rng& rng, int max_restarts) {
  if (k < 1 || k >= n) throw DomainError("gen_random_regular requires 1 <= k < n");
  if ((static_cast<std::int64_t>(n) * k) % 2 != 0)
    throw DomainError("gen_random_regular requires n k even");
  return gen_config_model(DegreeModel::delta(k), n, rng, max_restarts);
}

Graph gen_honeycomb(int rows, int cols) {
  if (rows < 2 || cols < 2) throw DomainError("gen_honeycomb requires rows, cols >= 2");
  const auto n = static_cast<Vertex>(2 * rows * cols);
  Graph g(n);
  auto a_at = [cols](int i, int j) { return static_cast<Vertex>(2 * (i * cols + j)); };
  auto b_at = [cols](int i, int j) { return static_cast<Vertex>(2 * (i * cols + j) + 1); };
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      g.add_edge(a_at(i, j), b_at(i, j));
      g.add_edge(b_at(i, j), a_at(i, (j + 1) % cols));
      g.add_edge(b_at(i, j), a_at((i + 1) % rows, j));
    }
  }
  return g;
}

namespace {

struct ParsedArcs {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> index;
  bool numeric = true;
  std::int64_t max_numeric = -1;
  std::int64_t declared_vertices = -1;
  // arcs as (from, to) vertex ids; undirected records contribute both
  std::vector<std::pair<Vertex, Vertex>> arcs;
  std::vector<bool> arc_directed;
};

bool parse_numeric(const std::string& s, std::int64_t& out) {
  if (s.empty() || s.size() > 18) return false;
  std::int64_t value = 0;
  for (const char c : s) {
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  out = value;
  return true;
}

Graph strip_high_degree(const Graph& g, int cutoff, bool iterative,
                        std::vector<std::string>& labels) {
  std::vector<bool> removed(static_cast<std::size_t>(g.vertex_count()), false);
  std::vector<std::int64_t> degree(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) degree[static_cast<std::size_t>(v)] = g.degree(v);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Vertex> doomed;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (!removed[static_cast<std::size_t>(v)] && degree[static_cast<std::size_t>(v)] >= cutoff)
        doomed.push_back(v);
    for (const Vertex v : doomed) {
      removed[static_cast<std::size_t>(v)] = true;
      changed = true;
      for (const auto& a : g.neighbors(v)) {
        if (!removed[static_cast<std::size_t>(a.to)]) --degree[static_cast<std::size_t>(a.to)];
      }
    }
    if (!iterative) break;
  }

  std::vector<Vertex> remap(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<std::string> kept_labels;
  Vertex next = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (removed[static_cast<std::size_t>(v)]) continue;
    remap[static_cast<std::size_t>(v)] = next++;
    kept_labels.push_back(labels[static_cast<std::size_t>(v)]);
  }
  Graph out(next);
  for (EdgeId i = 0; i < g.edge_slots(); ++i) {
    const Edge& e = g.edge(i);
    if (!e.alive) continue;
    const Vertex u = remap[static_cast<std::size_t>(e.u)];
    const Vertex v = remap[static_cast<std::size_t>(e.v)];
    if (u >= 0 && v >= 0) out.add_edge(u, v);
  }
  labels = std::move(kept_labels);
  return out;
}

}  // namespace

LoadedGraph load_edge_list(const std::string& path, bool bidirectional_only, int degree_cutoff,
                           bool iterative_cutoff) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading: " + path);

  ParsedArcs parsed;
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed = line;
    const auto first = trimmed.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (trimmed[first] == '#') {
      std::istringstream head(trimmed.substr(first + 1));
      std::string word;
      if (head >> word && word == "vertices") {
        std::int64_t declared = 0;
        if (head >> declared && declared >= 0) parsed.declared_vertices = declared;
      }
      continue;
    }
    std::istringstream row(trimmed);
    std::string a, b, extra;
    if (!(row >> a >> b)) throw ParseError("expected two vertex labels", line_no);
    bool directed = false;
    if (row >> extra) {
      if (extra == "directed")
        directed = true;
      else
        throw ParseError("unexpected trailing token '" + extra + "'", line_no);
    }
    for (const auto* label : {&a, &b}) {
      if (parsed.index.emplace(*label, static_cast<Vertex>(parsed.labels.size())).second)
        parsed.labels.push_back(*label);
      std::int64_t numeric = 0;
      if (parsed.numeric && parse_numeric(*label, numeric))
        parsed.max_numeric = std::max(parsed.max_numeric, numeric);
      else
        parsed.numeric = false;
    }
    parsed.arcs.emplace_back(parsed.index[a], parsed.index[b]);
    parsed.arc_directed.push_back(directed);
  }

  if (parsed.labels.empty()) throw EmptyGraphError("edge list has no vertices: " + path);

  // Numeric labels keep their own indices so files round-trip unchanged.
  Vertex n;
  std::vector<Vertex> to_id(parsed.labels.size());
  std::vector<std::string> labels;
  if (parsed.numeric && parsed.max_numeric < 100000000) {
    n = static_cast<Vertex>(parsed.max_numeric + 1);
    for (std::size_t i = 0; i < parsed.labels.size(); ++i)
      to_id[i] = static_cast<Vertex>(std::stoll(parsed.labels[i]));
    labels.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) labels[static_cast<std::size_t>(v)] = std::to_string(v);
  } else {
    n = static_cast<Vertex>(parsed.labels.size());
    for (std::size_t i = 0; i < parsed.labels.size(); ++i) to_id[i] = static_cast<Vertex>(i);
    labels = parsed.labels;
  }
  if (parsed.declared_vertices > n) {
    const auto declared = static_cast<Vertex>(parsed.declared_vertices);
    labels.resize(static_cast<std::size_t>(declared));
    for (Vertex v = n; v < declared; ++v) labels[static_cast<std::size_t>(v)] = std::to_string(v);
    n = declared;
  }

  auto key = [n](Vertex u, Vertex v) {
    return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) +
           static_cast<std::uint64_t>(v);
  };
  std::unordered_set<std::uint64_t> arcs;
  arcs.reserve(parsed.arcs.size() * 2);
  for (std::size_t i = 0; i < parsed.arcs.size(); ++i) {
    const Vertex u = to_id[static_cast<std::size_t>(parsed.arcs[i].first)];
    const Vertex v = to_id[static_cast<std::size_t>(parsed.arcs[i].second)];
    if (u == v) continue;
    arcs.insert(key(u, v));
    if (!parsed.arc_directed[i]) arcs.insert(key(v, u));
  }

  Graph g(n);
  std::unordered_set<std::uint64_t> added;
  for (const auto code : arcs) {
    const auto u = static_cast<Vertex>(code / static_cast<std::uint64_t>(n));
    const auto v = static_cast<Vertex>(code % static_cast<std::uint64_t>(n));
    const Vertex lo = std::min(u, v), hi = std::max(u, v);
    if (!added.insert(key(lo, hi)).second) continue;
    if (bidirectional_only && arcs.find(key(v, u)) == arcs.end()) {
      added.erase(key(lo, hi));
      continue;
    }
    g.add_edge(lo, hi);
  }

  if (degree_cutoff >= 1) {
    Graph filtered = strip_high_degree(g, degree_cutoff, iterative_cutoff, labels);
    return LoadedGraph{std::move(filtered), std::move(labels)};
  }
  return LoadedGraph{std::move(g), std::move(labels)};
}

std::string GeneratorSpec::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::ConfigModel:
      out << "config_model(" << (model ? model->describe() : "?") << ", n=" << n << ")";
      break;
    case Kind::ER:
      out << "er(n=" << n << ", z=" << z << ")";
      break;
    case Kind::RandomRegular:
      out << "random_regular(n=" << n << ", k=" << k << ")";
      break;
    case Kind::WattsStrogatz:
      out << "watts_strogatz(n=" << n << ", beta=" << beta << ")";
      break;
    case Kind::Honeycomb:
      out << "honeycomb(rows=" << rows << ", cols=" << cols << ")";
      break;
    case Kind::EdgeList:
      out << "edge_list(" << path << ", bidirectional_only=" << bidirectional_only
          << ", degree_cutoff=" << degree_cutoff << ")";
      break;
  }
  return out.str();
}

Graph generate(const GeneratorSpec& spec, Rng& rng) {
  switch (spec.kind) {
    case GeneratorSpec::Kind::ConfigModel:
      if (!spec.model) throw DomainError("config model generator requires a degree model");
      return gen_config_model(*spec.model, spec.n, rng);
    case GeneratorSpec::Kind::ER:
      return gen_er(spec.n, spec.z, rng);
    case GeneratorSpec::Kind::RandomRegular:
      return gen_random_regular(spec.n, spec.k, rng);
    case GeneratorSpec::Kind::WattsStrogatz:
      return gen_ws(spec.n, spec.beta, rng);
    case GeneratorSpec::Kind::Honeycomb:
      return gen_honeycomb(spec.rows, spec.cols);
    case GeneratorSpec::Kind::EdgeList:
      return load_edge_list(spec.path, spec.bidirectional_only, spec.degree_cutoff,
                            spec.iterative_cutoff)
          .graph;
  }
  throw DomainError("unknown generator kind");
}

}  // namespace qperc
