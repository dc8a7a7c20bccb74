#ifndef QPERC_QSWAP_HPP
#define QPERC_QSWAP_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "qperc/graph.hpp"
#include "qperc/rng.hpp"
#include "qperc/series.hpp"

namespace qperc {

/// Per-degree q-swap activation probabilities.  Keys are target degrees
/// q >= 2; optimal strategies are 0/1 valued but fractional activation is
/// allowed.
class SwapStrategy {
 public:
  SwapStrategy() = default;
  explicit SwapStrategy(std::map<int, double> activation);

  void set(int q, double probability);
  double activation(int q) const;
  bool empty() const { return active_.empty(); }
  const std::map<int, double>& entries() const { return active_; }

 private:
  std::map<int, double> active_;
};

/// Bookkeeping from one apply_qswaps pass.  eligible counts vertices of
/// (original) degree q that drew an active swap; performed counts swaps
/// actually done, so measured_eta = performed / eligible.  Swaps blocked by
/// consumed or newborn incident edges, or skipped because a cycle edge
/// already exists in the graph, stay in eligible.
struct SwapReport {
  std::map<int, std::int64_t> eligible;
  std::map<int, std::int64_t> performed;
  std::map<int, std::int64_t> skipped_existing_edge;
  std::vector<Vertex> centers;  // disconnected vertices, in swap order

  double measured_eta(int q) const;
  /// performed / eligible pooled over all degrees.
  double measured_eta_total() const;
};

/// Applies q-swaps along a breadth-first traversal of the (pre-swap)
/// adjacency, re-rooting at random unexplored vertices until every vertex
/// has been visited.  At each visited vertex of original degree q with an
/// active strategy entry, if all q incident edges are still Original and
/// unconsumed, the star is replaced by a cycle of Newborn edges over the
/// neighbors (in stored adjacency order) and the center is disconnected.
/// For q = 2 the cycle degenerates to a single edge; if a wanted cycle edge
/// already exists the swap is skipped (simple graph, no duplicate edges).
SwapReport apply_qswaps(Graph& g, const SwapStrategy& strategy, Rng& rng);

/// Fraction of degree-2 vertices swapped when operations start from the ends
/// of each degree-2 cluster: 1 / (1 + r1).
double eta2_max(double r1);

/// Worst-case counterpart: (1 - (1 - r1) r1^2) / (1 + r1).
double eta2_min(double r1);

/// Random-start value (r1 + (1 - r1)^2 atanh r1) / (2 r1); continuity
/// value 1 at r1 = 0.
double eta2_rand(double r1);

/// Probability that a random degree-2 vertex has s same-degree neighbors at
/// odd and t at even distance (start vertex included in t):
/// C(2, 1+s-t) (1-r1)^2 r1^(s+t-1) t for |s-t| <= 1, else 0.
double xi2(std::int64_t s, std::int64_t t, double r1);

/// Joint cluster-parity generating function h_xi(x, y) for a target-degree
/// strategy, where excess[q] is the probability r_{q-1} that an edge leads
/// to a degree-q vertex.  Solves the coupled odd/even fixed point by damped
/// iteration, then forms x sum_q Pi_q h_S^q (normalized over active degrees
/// so h_xi(1,1) = 1).  Throws NoConvergenceError past max_iter.
double h_xi_eval(double x, double y, const SwapStrategy& strategy,
                 const std::map<int, double>& excess, int max_iter = 100000,
                 double tolerance = 1e-12);

/// Bivariate series of h_xi up to x^max_t y^max_s; coefficient (t, s) is
/// xi(s, t).
Series2 h_xi_series(const SwapStrategy& strategy, const std::map<int, double>& excess,
                    std::size_t max_t, std::size_t max_s);

/// Single-target-degree eta_q by branching-process enumeration up to order
/// n in r: sums over all histories {k_i} with k_0 = 1, k_1 <= q,
/// k_i <= (q-1) k_{i-1}.  Throws BudgetExceededError beyond term_cap terms.
double eta_q_rand_series(int q, double r, int n, std::int64_t term_cap = 20000000);

}  // namespace qperc

#endif
