#ifndef QPERC_ANALYTIC_HPP
#define QPERC_ANALYTIC_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "qperc/degree_model.hpp"
#include "qperc/qswap.hpp"
#include "qperc/series.hpp"

namespace qperc {

/// Result of solving u = h_R(1): the probability that a random edge leads to
/// a finite component.  The solver iterates monotonically from 0 (which
/// selects the smallest root) and finishes with a bracketed Newton polish.
struct FixedPointResult {
  double u = 1.0;
  std::int64_t iterations = 0;
  bool converged = false;
  double residual = 0.0;
};

struct ThresholdResult {
  enum class Kind { ClassicalPhi1, ClassicalPhi2, SwappedPhi1 };
  double phi_star = 1.0;
  Kind kind = Kind::ClassicalPhi1;
  double bracket_width = 0.0;
};

/// Smallest fixed point of u = 1 - phi2 + phi2 g_r(u).
FixedPointResult solve_u(double phi2, const DegreeModel& m, std::int64_t max_iter = 1000000,
                         double tolerance = 1e-12);

/// Giant component fraction S = 1 - g_p(u).
double giant_S(double phi2, const DegreeModel& m);

/// Giant component of the Erdos-Renyi model via the closed form
/// S = 1 + W(-z phi2 e^{-z phi2}) / (z phi2); 0 for z phi2 <= 1.
double er_S_lambertW(double z, double phi2);

/// Critical two-copy conversion probability 1 / g_r'(1) (may exceed 1, in
/// which case no occupation probability percolates).
double critical_phi2(const DegreeModel& m);

/// Smallest fixed point of the q-swap-modified recursion at x = 1 for
/// one-copy conversion probability phi1 (phi2 follows as phi2_of_phi1).
FixedPointResult solve_u_tilde(double phi1, const DegreeModel& m, const SwapStrategy& strategy,
                               std::int64_t max_iter = 1000000, double tolerance = 1e-12);

/// Post-swap giant component fraction; eta[q] is the probability that a
/// degree-q target actually gets swapped (analytic value or measured from a
/// SwapReport).
double giant_S_tilde(double phi1, const DegreeModel& m, const SwapStrategy& strategy,
                     const std::map<int, double>& eta);

/// Normalization S_hat = S_tilde S1 / S_tilde_1 that compares pre- and
/// post-swap giants on the same vertex pool.
double s_hat(double S_tilde, double S1, double S_tilde_1);

/// Percolation threshold in phi1 by bisection with predicate u < 1 - 1e-8;
/// bracket narrowed to 1e-6.  Pass a strategy for the post-swap threshold.
ThresholdResult find_threshold(const DegreeModel& m, const SwapStrategy* strategy = nullptr);

/// Relative threshold change (phi1_star_tilde - phi1_star) / phi1_star;
/// negative when the swap improves (lowers) the threshold.
double gain(double phi1_star, double phi1_star_tilde);

/// l-limited mean cluster size 1 + g_p'(1) (1 - g_r'(1)^l) / (1 - g_r'(1)),
/// with the limit form 1 + g_p'(1) l at g_r'(1) = 1; 1 for l = 0.
double limited_avg_size(const DegreeModel& m, std::int64_t l);

/// Distribution P_s of l-limited cluster sizes via truncated power-series
/// iteration of the limited recursions; returns coefficients for s = 0..s_max.
std::vector<double> limited_gf_P(const DegreeModel& m, int l, std::size_t s_max = 200);

/// Watts-Strogatz l-limited mean size by the exact recurrence
/// <s_l> = <s_{l-1}> + 2 + 2 beta (<s_{l-1}> + <s_{l-2}>), <s_0> = 1.
double ws_limited_avg(double beta, std::int64_t l);

/// Watts-Strogatz l-limited generating function as a truncated series in x.
Series ws_limited_gf(double beta, int l, std::size_t s_max = 200);

/// Map q -> r_{q-1} for the strategy's target degrees under the model
/// (the excess probabilities h_xi and the eta analytics consume).
std::map<int, double> excess_for_strategy(const DegreeModel& m, const SwapStrategy& strategy);

}  // namespace qperc

#endif
