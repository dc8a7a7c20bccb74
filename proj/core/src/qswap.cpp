#include "qperc/qswap.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "qperc/errors.hpp"

namespace qperc {

SwapStrategy::SwapStrategy(std::map<int, double> activation) {
  for (const auto& [q, pi] : activation) set(q, pi);
}

void SwapStrategy::set(int q, double probability) {
  if (q < 2) throw DomainError("q-swap targets require q >= 2");
  if (!(probability >= 0.0 && probability <= 1.0))
    throw DomainError("swap activation probability must be in [0, 1]");
  if (probability == 0.0)
    active_.erase(q);
  else
    active_[q] = probability;
}

double SwapStrategy::activation(int q) const {
  const auto it = active_.find(q);
  return it == active_.end() ? 0.0 : it->second;
}

double SwapReport::measured_eta(int q) const {
  const auto e = eligible.find(q);
  if (e == eligible.end() || e->second == 0) return std::numeric_limits<double>::quiet_NaN();
  const auto p = performed.find(q);
  const auto done = p == performed.end() ? 0 : p->second;
  return static_cast<double>(done) / static_cast<double>(e->second);
}

double SwapReport::measured_eta_total() const {
  std::int64_t e = 0, p = 0;
  for (const auto& [q, count] : eligible) e += count;
  for (const auto& [q, count] : performed) p += count;
  return e == 0 ? std::numeric_limits<double>::quiet_NaN()
                : static_cast<double>(p) / static_cast<double>(e);
}

SwapReport apply_qswaps(Graph& g, const SwapStrategy& strategy, Rng& rng) {
  for (EdgeId i = 0; i < g.edge_slots(); ++i) {
    const Edge& e = g.edge(i);
    if (e.alive && e.cls != EdgeClass::Original)
      throw DomainError("apply_qswaps requires a graph with Original edges only");
  }

  const Vertex n = g.vertex_count();
  SwapReport report;
  if (n == 0) return report;

  // Traversal runs over the pre-swap adjacency; swaps mutate g as we go.
  std::vector<std::vector<Vertex>> walk_adj(static_cast<std::size_t>(n));
  std::vector<int> original_degree(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    original_degree[static_cast<std::size_t>(v)] = g.degree(v);
    auto& list = walk_adj[static_cast<std::size_t>(v)];
    list.reserve(g.neighbors(v).size());
    for (const auto& a : g.neighbors(v)) list.push_back(a.to);
  }

  std::vector<Vertex> root_order(static_cast<std::size_t>(n));
  std::iota(root_order.begin(), root_order.end(), 0);
  rng.shuffle(root_order.data(), root_order.size());

  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(n));
  std::vector<Vertex> star;  // current vertex's neighbors, stored order
  std::vector<EdgeId> star_edges;

  auto process = [&](Vertex v) {
    const int q = original_degree[static_cast<std::size_t>(v)];
    const double pi = strategy.activation(q);
    if (pi == 0.0) return;
    if (pi < 1.0 && !rng.bernoulli(pi)) return;
    ++report.eligible[q];

    // Feasible only if the star is intact: degree unchanged and every
    // incident edge still Original (newborn or consumed edges block it).
    if (g.degree(v) != q) return;
    star.clear();
    star_edges.clear();
    for (const auto& a : g.neighbors(v)) {
      if (g.edge(a.edge).cls != EdgeClass::Original) return;
      star.push_back(a.to);
      star_edges.push_back(a.edge);
    }

    // The q-cycle over the neighbors; q = 2 degenerates to a single edge.
    const std::size_t cycle_len = q == 2 ? 1 : static_cast<std::size_t>(q);
    for (std::size_t i = 0; i < cycle_len; ++i) {
      const Vertex a = star[i], b = star[(i + 1) % star.size()];
      if (g.has_edge(a, b)) {  // would duplicate an existing edge
        ++report.skipped_existing_edge[q];
        return;
      }
    }

    for (const EdgeId e : star_edges) g.remove_edge(e);
    for (std::size_t i = 0; i < cycle_len; ++i)
      g.add_edge(star[i], star[(i + 1) % star.size()], EdgeClass::Newborn);
    ++report.performed[q];
    report.centers.push_back(v);
  };

  std::size_t cursor = 0;
  std::int64_t seen = 0;
  while (seen < n) {
    while (visited[static_cast<std::size_t>(root_order[cursor])]) ++cursor;
    const Vertex root = root_order[cursor];
    visited[static_cast<std::size_t>(root)] = true;
    ++seen;
    queue.clear();
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      process(v);
      for (const Vertex w : walk_adj[static_cast<std::size_t>(v)]) {
        if (!visited[static_cast<std::size_t>(w)]) {
          visited[static_cast<std::size_t>(w)] = true;
          ++seen;
          queue.push_back(w);
        }
      }
    }
  }
  return report;
}

namespace {
void check_r1(double r1) {
  if (!(r1 >= 0.0 && r1 < 1.0)) throw DomainError("r1 must be in [0, 1)");
}
}  // namespace

double eta2_max(double r1) {
  check_r1(r1);
  return 1.0 / (1.0 + r1);
}

double eta2_min(double r1) {
  check_r1(r1);
  return (1.0 - (1.0 - r1) * r1 * r1) / (1.0 + r1);
}

double eta2_rand(double r1) {
  check_r1(r1);
  if (r1 == 0.0) return 1.0;  // removable singularity
  return (r1 + (1.0 - r1) * (1.0 - r1) * std::atanh(r1)) / (2.0 * r1);
}

double xi2(std::int64_t s, std::int64_t t, double r1) {
  check_r1(r1);
  if (s < 0 || t <= 0) return 0.0;
  const std::int64_t m = 1 + s - t;
  if (m < 0 || m > 2) return 0.0;  // |s - t| > 1
  const double binom = m == 1 ? 2.0 : 1.0;
  return binom * (1.0 - r1) * (1.0 - r1) * std::pow(r1, static_cast<double>(s + t - 1)) *
         static_cast<double>(t);
}

namespace {

struct ActiveTargets {
  std::vector<int> q;
  std::vector<double> pi;
  std::vector<double> r;  // r_{q-1}
  double sum_pi = 0.0;
  double sum_pi_r = 0.0;
};

ActiveTargets collect_targets(const SwapStrategy& strategy, const std::map<int, double>& excess) {
  ActiveTargets t;
  for (const auto& [q, pi] : strategy.entries()) {
    const auto it = excess.find(q);
    const double r = it == excess.end() ? 0.0 : it->second;
    if (!(r >= 0.0 && r <= 1.0)) throw DomainError("excess probabilities must be in [0, 1]");
    t.q.push_back(q);
    t.pi.push_back(pi);
    t.r.push_back(r);
    t.sum_pi += pi;
    t.sum_pi_r += pi * r;
  }
  if (t.q.empty()) throw DomainError("h_xi requires a non-empty strategy");
  if (t.sum_pi_r > 1.0) throw DomainError("sum of activation-weighted excess exceeds 1");
  return t;
}

}  // namespace

double h_xi_eval(double x, double y, const SwapStrategy& strategy,
                 const std::map<int, double>& excess, int max_iter, double tolerance) {
  if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0))
    throw DomainError("h_xi arguments must be in [0, 1]");
  const ActiveTargets t = collect_targets(strategy, excess);
  const double base = 1.0 - t.sum_pi_r;

  double hs = 0.0, ht = 0.0;
  for (int iter = 0; iter < max_iter; ++iter) {
    double acc_s = 0.0, acc_t = 0.0;
    for (std::size_t i = 0; i < t.q.size(); ++i) {
      acc_s += t.pi[i] * t.r[i] * std::pow(ht, t.q[i] - 1);
      acc_t += t.pi[i] * t.r[i] * std::pow(hs, t.q[i] - 1);
    }
    const double next_hs = base + y * acc_s;
    const double next_ht = base + x * acc_t;
    const double delta = std::max(std::abs(next_hs - hs), std::abs(next_ht - ht));
    hs = next_hs;
    ht = next_ht;
    if (delta < tolerance) {
      double out = 0.0;
      for (std::size_t i = 0; i < t.q.size(); ++i) out += t.pi[i] * std::pow(hs, t.q[i]);
      return x * out / t.sum_pi;
    }
  }
  throw NoConvergenceError("h_xi fixed point did not converge");
}

Series2 h_xi_series(const SwapStrategy& strategy, const std::map<int, double>& excess,
                    std::size_t max_t, std::size_t max_s) {
  const ActiveTargets t = collect_targets(strategy, excess);
  const double base = 1.0 - t.sum_pi_r;

  // Coefficient (i, j) multiplies x^i y^j; x counts even-distance vertices
  // (t), y odd-distance ones (s).  Every appearance of h_T inside h_S is
  // multiplied by y and vice versa, so coefficients of total order d are
  // fixed after d + 1 substitutions.
  Series2 hs(max_t, max_s), ht(max_t, max_s);
  const std::size_t rounds = max_t + max_s + 2;
  for (std::size_t round = 0; round < rounds; ++round) {
    Series2 acc_s(max_t, max_s), acc_t(max_t, max_s);
    for (std::size_t i = 0; i < t.q.size(); ++i) {
      Series2 term_s = pow(ht, static_cast<unsigned>(t.q[i] - 1));
      term_s *= t.pi[i] * t.r[i];
      acc_s += term_s;
      Series2 term_t = pow(hs, static_cast<unsigned>(t.q[i] - 1));
      term_t *= t.pi[i] * t.r[i];
      acc_t += term_t;
    }
    Series2 next_hs = acc_s.shift_y();
    next_hs.add_constant(base);
    Series2 next_ht = acc_t.shift_x();
    next_ht.add_constant(base);
    const double delta = std::max(next_hs.max_abs_diff(hs), next_ht.max_abs_diff(ht));
    hs = next_hs;
    ht = next_ht;
    if (delta == 0.0) break;
  }

  Series2 out(max_t, max_s);
  for (std::size_t i = 0; i < t.q.size(); ++i) {
    Series2 term = pow(hs, static_cast<unsigned>(t.q[i]));
    term *= t.pi[i];
    out += term;
  }
  out *= 1.0 / t.sum_pi;
  return out.shift_x();
}

namespace {

double binomial(int a, int b) {
  if (b < 0 || b > a) return 0.0;
  double result = 1.0;
  for (int i = 0; i < b; ++i)
    result = result * static_cast<double>(a - i) / static_cast<double>(i + 1);
  return result;
}

struct EtaSeriesState {
  int q = 0;
  int n = 0;
  double r = 0.0;
  std::int64_t term_cap = 0;
  std::int64_t terms = 0;
  std::vector<int> k;  // k[0] = 1
  double sum = 0.0;
};

void enumerate_histories(EtaSeriesState& st, int depth) {
  if (depth > st.n) {
    if (++st.terms > st.term_cap)
      throw BudgetExceededError("eta_q_rand_series enumeration exceeded term cap");
    std::int64_t even = 0, total = 0, inner = 0;
    for (int i = 0; i <= st.n; ++i) {
      total += st.k[static_cast<std::size_t>(i)];
      if (i % 2 == 0) even += st.k[static_cast<std::size_t>(i)];
      if (i >= 1 && i <= st.n - 1) inner += st.k[static_cast<std::size_t>(i)];
    }
    double coeff = binomial(st.q, st.k[1]);
    for (int i = 2; i <= st.n; ++i)
      coeff *= binomial((st.q - 1) * st.k[static_cast<std::size_t>(i - 1)],
                        st.k[static_cast<std::size_t>(i)]);
    const auto r_exp = static_cast<double>(total - 1);  // sum_{i>=1} k_i
    const auto miss_exp =
        static_cast<double>(st.q + (st.q - 2) * inner - st.k[static_cast<std::size_t>(st.n)]);
    st.sum += static_cast<double>(even) / static_cast<double>(total) * coeff *
              std::pow(st.r, r_exp) * std::pow(1.0 - st.r, miss_exp);
    return;
  }
  const int bound = depth == 1 ? st.q : (st.q - 1) * st.k[static_cast<std::size_t>(depth - 1)];
  for (int ki = 0; ki <= bound; ++ki) {
    st.k[static_cast<std::size_t>(depth)] = ki;
    enumerate_histories(st, depth + 1);
  }
}

}  // namespace

double eta_q_rand_series(int q, double r, int n, std::int64_t term_cap) {
  if (q < 2) throw DomainError("eta_q_rand_series requires q >= 2");
  if (n < 1) throw DomainError("eta_q_rand_series requires n >= 1");
  check_r1(r);
  EtaSeriesState st;
  st.q = q;
  st.n = n;
  st.r = r;
  st.term_cap = term_cap;
  st.k.assign(static_cast<std::size_t>(n) + 1, 0);
  st.k[0] = 1;
  enumerate_histories(st, 1);
  return st.sum;
}

}  // namespace qperc
