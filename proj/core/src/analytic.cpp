#include "qperc/analytic.hpp"

#include <cmath>
#include <functional>

#include "qperc/errors.hpp"
#include "qperc/lambert.hpp"
#include "qperc/quantum.hpp"

namespace qperc {

namespace {

// Smallest root of u = f(u) on [0, 1] for a monotone map with f(1) = 1 and
// non-negative power-series structure.  Monotone iteration from 0 stays
// below the smallest root; the Newton polish on g(u) = u - f(u) (concave,
// increasing left of the root) also approaches from below, so the smallest
// root is never skipped.  Newton handles the critical slowing down that
// plain iteration cannot resolve within the iteration cap.
FixedPointResult solve_smallest_fixed_point(const std::function<double(double)>& f,
                                            const std::function<double(double)>& f_prime,
                                            std::int64_t max_iter, double tolerance) {
  FixedPointResult result;
  double u = 0.0;
  std::int64_t iter = 0;

  const std::int64_t plain_budget = std::min<std::int64_t>(max_iter, 2000);
  while (iter < plain_budget) {
    ++iter;
    const double next = f(u);
    const double step = next - u;
    u = next;
    if (std::abs(step) < 1e-13) break;
  }

  double residual = f(u) - u;
  while (iter < max_iter && std::abs(residual) >= tolerance * 0.001) {
    ++iter;
    const double denom = 1.0 - f_prime(u);
    double next;
    if (denom > 1e-12) {
      next = u + residual / denom;      // Newton on u - f(u)
      if (next > 1.0) next = f(u);      // keep the bracket
    } else {
      next = f(u);                      // critical region: fall back to iteration
    }
    if (next < u) next = u;             // never step backwards
    u = std::min(next, 1.0);
    const double new_residual = f(u) - u;
    if (std::abs(new_residual) >= std::abs(residual) && std::abs(new_residual) < tolerance) {
      residual = new_residual;
      break;  // stalled at numerical noise, already within tolerance
    }
    residual = new_residual;
  }

  result.u = std::min(std::max(u, 0.0), 1.0);
  result.iterations = iter;
  result.residual = std::abs(residual);
  result.converged = result.residual < tolerance;
  if (!result.converged) throw NoConvergenceError("fixed-point iteration did not converge");
  return result;
}

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError(std::string(name) + " must be in [0, 1]");
}

// Cycle-block generating factor C_q evaluated at x = 1 as a function of
// w = g_r(u): the accessible run of a q-cycle has length l with probability
// (l+1) phi1^l (1-phi1)^2 for l <= q-2, concentrated at q-1 otherwise.
double cycle_block(int q, double phi1, double w) {
  double acc = 0.0;
  double phi_pow = 1.0;  // phi1^l
  double w_pow = 1.0;    // w^l
  const double miss = (1.0 - phi1) * (1.0 - phi1);
  for (int l = 0; l <= q - 2; ++l) {
    acc += static_cast<double>(l + 1) * phi_pow * miss * w_pow;
    phi_pow *= phi1;
    w_pow *= w;
  }
  // phi_pow = phi1^{q-1}, w_pow = w^{q-1} after the loop
  acc += (static_cast<double>(q) * phi_pow * (1.0 - phi1) + phi_pow * phi1) * w_pow;
  return acc;
}

// d C_q / d w.
double cycle_block_dw(int q, double phi1, double w) {
  double acc = 0.0;
  double phi_pow = phi1;  // phi1^l starting at l = 1
  double w_pow = 1.0;     // w^{l-1}
  const double miss = (1.0 - phi1) * (1.0 - phi1);
  for (int l = 1; l <= q - 2; ++l) {
    acc += static_cast<double>((l + 1) * l) * phi_pow * miss * w_pow;
    phi_pow *= phi1;
    w_pow *= w;
  }
  const double phi_top = std::pow(phi1, q - 1);
  acc += (static_cast<double>(q) * phi_top * (1.0 - phi1) + phi_top * phi1) *
         static_cast<double>(q - 1) * (q >= 2 ? std::pow(w, q - 2) : 0.0);
  return acc;
}

}  // namespace

FixedPointResult solve_u(double phi2, const DegreeModel& m, std::int64_t max_iter,
                         double tolerance) {
  check_probability(phi2, "phi2");
  auto f = [&](double u) { return 1.0 - phi2 + phi2 * m.gr(u); };
  auto fp = [&](double u) { return phi2 * m.gr_prime(u); };
  return solve_smallest_fixed_point(f, fp, max_iter, tolerance);
}

double giant_S(double phi2, const DegreeModel& m) {
  const FixedPointResult r = solve_u(phi2, m);
  return 1.0 - m.gp(r.u);
}

double er_S_lambertW(double z, double phi2) {
  const double a = z * phi2;
  if (!(a > 0.0)) throw DomainError("er_S_lambertW requires z phi2 > 0");
  if (a <= 1.0) return 0.0;  // W(-a e^{-a}) = -a below the transition
  return 1.0 + lambert_w0(-a * std::exp(-a)) / a;
}

double critical_phi2(const DegreeModel& m) {
  const double slope = m.gr_prime(1.0);
  if (!(slope > 0.0)) throw DomainError("critical_phi2 requires g_r'(1) > 0");
  return 1.0 / slope;
}

FixedPointResult solve_u_tilde(double phi1, const DegreeModel& m, const SwapStrategy& strategy,
                               std::int64_t max_iter, double tolerance) {
  check_probability(phi1, "phi1");
  const double phi2 = phi2_of_phi1(phi1);
  struct Target {
    int q;
    double pi;
    double r;  // r_{q-1}
  };
  std::vector<Target> targets;
  for (const auto& [q, pi] : strategy.entries()) {
    const double r = m.rk(q - 1);
    if (r > 0.0) targets.push_back({q, pi, r});
  }

  auto f = [&](double u) {
    const double w = m.gr(u);
    double acc = 1.0 - phi2 + phi2 * w;
    for (const auto& t : targets) {
      acc += t.pi * t.r *
             ((phi2 - 1.0) - phi2 * std::pow(u, t.q - 1) + cycle_block(t.q, phi1, w));
    }
    return acc;
  };
  auto fp = [&](double u) {
    const double w = m.gr(u);
    const double wp = m.gr_prime(u);
    double acc = phi2 * wp;
    for (const auto& t : targets) {
      const double du = t.q >= 2 ? static_cast<double>(t.q - 1) * std::pow(u, t.q - 2) : 0.0;
      acc += t.pi * t.r * (-phi2 * du + cycle_block_dw(t.q, phi1, w) * wp);
    }
    return acc;
  };
  return solve_smallest_fixed_point(f, fp, max_iter, tolerance);
}

double giant_S_tilde(double phi1, const DegreeModel& m, const SwapStrategy& strategy,
                     const std::map<int, double>& eta) {
  const FixedPointResult r = solve_u_tilde(phi1, m, strategy);
  double finite = m.gp(r.u);
  for (const auto& [q, pi] : strategy.entries()) {
    const auto it = eta.find(q);
    const double eta_q = it == eta.end() ? 0.0 : it->second;
    check_probability(eta_q, "eta_q");
    finite += pi * eta_q * m.pk(q) * (1.0 - std::pow(r.u, q));
  }
  return 1.0 - finite;
}

double s_hat(double S_tilde, double S1, double S_tilde_1) {
  if (S_tilde_1 == 0.0) throw DivisionByZeroError("s_hat requires S_tilde_1 > 0");
  return S_tilde * S1 / S_tilde_1;
}

ThresholdResult find_threshold(const DegreeModel& m, const SwapStrategy* strategy) {
  constexpr double kEps = 1e-8;
  constexpr double kBracket = 1e-6;
  auto percolates = [&](double phi1) {
    const FixedPointResult r =
        strategy ? solve_u_tilde(phi1, m, *strategy) : solve_u(phi2_of_phi1(phi1), m);
    return r.u < 1.0 - kEps;
  };
  if (!percolates(1.0)) throw NoTransitionError("no percolating phase on [0, 1]");

  double lo = 0.0, hi = 1.0;
  while (hi - lo > kBracket) {
    const double mid = 0.5 * (lo + hi);
    (percolates(mid) ? hi : lo) = mid;
  }
  ThresholdResult out;
  out.phi_star = 0.5 * (lo + hi);
  out.bracket_width = hi - lo;
  out.kind = strategy ? ThresholdResult::Kind::SwappedPhi1 : ThresholdResult::Kind::ClassicalPhi1;
  return out;
}

double gain(double phi1_star, double phi1_star_tilde) {
  if (phi1_star <= 0.0) throw DivisionByZeroError("gain requires phi1_star > 0");
  return (phi1_star_tilde - phi1_star) / phi1_star;
}

double limited_avg_size(const DegreeModel& m, std::int64_t l) {
  if (l < 0) throw DomainError("limited_avg_size requires l >= 0");
  if (l == 0) return 1.0;
  const double mean = m.gp_prime(1.0);
  const double branch = m.gr_prime(1.0);
  if (std::abs(branch - 1.0) < 1e-12) return 1.0 + mean * static_cast<double>(l);
  return 1.0 + mean * (1.0 - std::pow(branch, static_cast<double>(l))) / (1.0 - branch);
}

namespace {

// g_p and g_r applied to a truncated series, closed form where available.
Series apply_gp(const DegreeModel& m, const Series& h) {
  if (m.kind() == DegreeKind::Poisson) {
    Series e = h;
    e *= m.mean_degree();
    e.add_constant(-m.mean_degree());
    return series_exp(e);
  }
  if (m.kind() == DegreeKind::Delta) return pow(h, static_cast<unsigned>(m.moment(1) + 0.5));
  std::vector<double> coeffs(static_cast<std::size_t>(m.max_degree()) + 1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] = m.pk(static_cast<int>(k));
  return apply_polynomial(coeffs, h);
}

Series apply_gr(const DegreeModel& m, const Series& h) {
  if (m.kind() == DegreeKind::Poisson) return apply_gp(m, h);  // self-reproducing
  if (m.kind() == DegreeKind::Delta) {
    const auto k0 = static_cast<unsigned>(m.moment(1) + 0.5);
    return pow(h, k0 - 1);
  }
  std::vector<double> coeffs(static_cast<std::size_t>(m.max_degree()));
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] = m.rk(static_cast<int>(k));
  return apply_polynomial(coeffs, h);
}

}  // namespace

std::vector<double> limited_gf_P(const DegreeModel& m, int l, std::size_t s_max) {
  if (l < 0) throw DomainError("limited_gf_P requires l >= 0");
  if (s_max < 1) throw DomainError("limited_gf_P requires s_max >= 1");
  Series h = Series::x(s_max);
  if (l == 0) return h.coefficients();
  for (int step = 0; step < l - 1; ++step) h = shift_up(apply_gr(m, h));
  const Series hp = shift_up(apply_gp(m, h));
  return hp.coefficients();
}

double ws_limited_avg(double beta, std::int64_t l) {
  if (beta < 0.0) throw DomainError("ws_limited_avg requires beta >= 0");
  if (l < 0) throw DomainError("ws_limited_avg requires l >= 0");
  double prev2 = 0.0;  // <s_{-1}>
  double prev1 = 1.0;  // <s_0>
  for (std::int64_t step = 1; step <= l; ++step) {
    const double cur = prev1 + 2.0 + 2.0 * beta * (prev1 + prev2);
    prev2 = prev1;
    prev1 = cur;
  }
  return prev1;
}

Series ws_limited_gf(double beta, int l, std::size_t s_max) {
  if (beta < 0.0) throw DomainError("ws_limited_gf requires beta >= 0");
  if (l < 0) throw DomainError("ws_limited_gf requires l >= 0");
  std::vector<Series> h;
  h.reserve(static_cast<std::size_t>(l) + 1);
  h.push_back(Series::x(s_max));
  for (int step = 1; step <= l; ++step) {
    // exponent: -2 beta [ (2 step - 1) - h^{(step-1)} - 2 sum_{j=0}^{step-2} h^{(j)} ]
    Series bracket = Series::constant(static_cast<double>(2 * step - 1), s_max);
    bracket -= h[static_cast<std::size_t>(step - 1)];
    for (int j = 0; j <= step - 2; ++j) {
      Series twice = h[static_cast<std::size_t>(j)];
      twice *= 2.0;
      bracket -= twice;
    }
    bracket *= -2.0 * beta;
    Series value = series_exp(bracket);
    for (int shifts = 0; shifts < 1 + 2 * step; ++shifts) value = shift_up(value);
    h.push_back(std::move(value));
  }
  return h.back();
}

std::map<int, double> excess_for_strategy(const DegreeModel& m, const SwapStrategy& strategy) {
  std::map<int, double> excess;
  for (const auto& [q, pi] : strategy.entries()) excess[q] = m.rk(q - 1);
  return excess;
}

}  // namespace qperc
