#ifndef QPERC_DEGREE_MODEL_HPP
#define QPERC_DEGREE_MODEL_HPP

#include <string>
#include <vector>

#include "qperc/graph.hpp"
#include "qperc/rng.hpp"

namespace qperc {

enum class DegreeKind { Delta, Poisson, PowerLawCutoff, Empirical };

/// Degree distribution p_k with excess-degree distribution
/// r_k = (k+1) p_{k+1} / <k> and numeric generating functions
///
///   g_p(x) = sum_k p_k x^k        g_r(x) = g_p'(x) / g_p'(1)
///
/// Poisson and Delta use closed forms; power-law-with-cutoff and empirical
/// models evaluate exact finite sums over a table truncated where the
/// cumulative tail drops below 1e-15.  No finite differencing anywhere: the
/// derivatives feed fixed-point solvers and must be exact.
class DegreeModel {
 public:
  static DegreeModel delta(int k0);
  static DegreeModel poisson(double z);
  /// p_k = C k^-tau exp(-k/kappa) on k_min..k_max; k_max <= 0 selects the
  /// truncation point automatically.
  static DegreeModel power_law_cutoff(double tau, double kappa, int k_min = 1, int k_max = 0);
  /// weights[k] proportional to p_k; normalized on construction.
  static DegreeModel empirical(std::vector<double> weights);
  static DegreeModel from_graph(const Graph& g);

  DegreeKind kind() const { return kind_; }

  double pk(int k) const;
  double rk(int k) const;

  double gp(double x) const;
  double gr(double x) const;
  double gp_prime(double x) const;
  double gr_prime(double x) const;

  /// n-th moment <k^n> by direct weighted summation.
  double moment(int n) const;
  double mean_degree() const { return mean_; }

  /// Largest degree with tabulated mass (truncation point for closed-form
  /// models; exact support bound otherwise).
  int max_degree() const { return static_cast<int>(table_.size()) - 1; }

  /// Draw from p_k via the precomputed inverse-CDF table.
  int sample(Rng& rng) const;

  std::string describe() const;

  /// Two-column "degree probability" text format.
  void save_histogram(const std::string& path) const;
  static DegreeModel load_histogram(const std::string& path);

 private:
  DegreeModel() = default;
  void finalize();  // builds mean, cdf; validates

  DegreeKind kind_ = DegreeKind::Empirical;
  std::vector<double> table_;  // p_k by degree (tail-truncated for parametric kinds)
  std::vector<double> cdf_;
  double mean_ = 0.0;
  // parametric parameters
  double z_ = 0.0;
  int k0_ = 0;
  double tau_ = 0.0, kappa_ = 0.0;
  int k_min_ = 0;
};

}  // namespace qperc

#endif
