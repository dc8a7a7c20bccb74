#include "qperc/degree_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qperc/errors.hpp"

namespace qperc {

namespace {

constexpr double kTailMass = 1e-15;

void check_unit_interval(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("generating function argument outside [0, 1]");
}

double poisson_mass(double z, int k) {
  if (k < 0) return 0.0;
  if (z == 0.0) return k == 0 ? 1.0 : 0.0;
  return std::exp(static_cast<double>(k) * std::log(z) - std::lgamma(static_cast<double>(k) + 1.0) - z);
}

}  // namespace

void DegreeModel::finalize() {
  double total = 0.0;
  for (double w : table_) {
    if (w < 0.0 || !std::isfinite(w)) throw DomainError("degree weights must be finite and >= 0");
    total += w;
  }
  if (total <= 0.0) throw DomainError("degree distribution has no mass");
  mean_ = 0.0;
  cdf_.resize(table_.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < table_.size(); ++k) {
    table_[k] /= total;
    acc += table_[k];
    cdf_[k] = acc;
    mean_ += static_cast<double>(k) * table_[k];
  }
  cdf_.back() = 1.0;
  if (mean_ <= 0.0) throw DomainError("degree distribution must have <k> > 0");
}

DegreeModel DegreeModel::delta(int k0) {
  if (k0 < 1) throw DomainError("delta degree model requires k0 >= 1");
  DegreeModel m;
  m.kind_ = DegreeKind::Delta;
  m.k0_ = k0;
  m.table_.assign(static_cast<std::size_t>(k0) + 1, 0.0);
  m.table_.back() = 1.0;
  m.finalize();
  return m;
}

DegreeModel DegreeModel::poisson(double z) {
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("poisson degree model requires z > 0");
  DegreeModel m;
  m.kind_ = DegreeKind::Poisson;
  m.z_ = z;
  // Tabulate until the remaining tail is below kTailMass (used for sampling
  // and moments; gp/gr use the closed form).
  double acc = 0.0;
  for (int k = 0;; ++k) {
    const double p = poisson_mass(z, k);
    m.table_.push_back(p);
    acc += p;
    if (1.0 - acc < kTailMass && k > static_cast<int>(z) + 1) break;
    if (k > 4000) break;
  }
  m.finalize();
  m.mean_ = z;  // exact, not the truncated sum
  return m;
}

DegreeModel DegreeModel::power_law_cutoff(double tau, double kappa, int k_min, int k_max) {
  if (!(kappa > 0.0) || !std::isfinite(kappa))
    throw DomainError("power-law model requires finite kappa > 0");
  if (k_min < 1) throw DomainError("power-law model requires k_min >= 1");
  if (k_max > 0 && k_max < k_min) throw DomainError("power-law model requires k_max >= k_min");
  DegreeModel m;
  m.kind_ = DegreeKind::PowerLawCutoff;
  m.tau_ = tau;
  m.kappa_ = kappa;
  m.k_min_ = k_min;
  std::vector<double> weights;
  double total = 0.0;
  const int hard_cap = k_max > 0 ? k_max : 100000;
  for (int k = k_min; k <= hard_cap; ++k) {
    const double w = std::pow(static_cast<double>(k), -tau) * std::exp(-static_cast<double>(k) / kappa);
    weights.push_back(w);
    total += w;
    // Remaining tail is bounded by a geometric series with ratio e^{-1/kappa}.
    if (k_max <= 0) {
      const double ratio = std::exp(-1.0 / kappa);
      const double tail_bound = w * ratio / (1.0 - ratio);
      if (tail_bound < kTailMass * total) break;
    }
  }
  m.table_.assign(static_cast<std::size_t>(k_min), 0.0);
  m.table_.insert(m.table_.end(), weights.begin(), weights.end());
  m.finalize();
  return m;
}

DegreeModel DegreeModel::empirical(std::vector<double> weights) {
  DegreeModel m;
  m.kind_ = DegreeKind::Empirical;
  m.table_ = std::move(weights);
  if (m.table_.empty()) throw DomainError("empirical degree model requires weights");
  m.finalize();
  return m;
}

DegreeModel DegreeModel::from_graph(const Graph& g) {
  auto hist = g.degree_histogram();
  std::vector<double> weights(hist.size());
  for (std::size_t k = 0; k < hist.size(); ++k) weights[k] = static_cast<double>(hist[k]);
  return empirical(std::move(weights));
}

double DegreeModel::pk(int k) const {
  if (k < 0) throw DomainError("pk requires k >= 0");
  switch (kind_) {
    case DegreeKind::Delta:
      return k == k0_ ? 1.0 : 0.0;
    case DegreeKind::Poisson:
      return poisson_mass(z_, k);
    default:
      return static_cast<std::size_t>(k) < table_.size() ? table_[static_cast<std::size_t>(k)]
                                                         : 0.0;
  }
}

double DegreeModel::rk(int k) const {
  if (k < 0) throw DomainError("rk requires k >= 0");
  return static_cast<double>(k + 1) * pk(k + 1) / mean_;
}

double DegreeModel::gp(double x) const {
  check_unit_interval(x);
  switch (kind_) {
    case DegreeKind::Poisson:
      return std::exp(z_ * (x - 1.0));
    case DegreeKind::Delta:
      return std::pow(x, k0_);
    default: {
      double acc = 0.0;  // Horner, highest degree first
      for (auto it = table_.rbegin(); it != table_.rend(); ++it) acc = acc * x + *it;
      return acc;
    }
  }
}

double DegreeModel::gp_prime(double x) const {
  check_unit_interval(x);
  switch (kind_) {
    case DegreeKind::Poisson:
      return z_ * std::exp(z_ * (x - 1.0));
    case DegreeKind::Delta:
      return static_cast<double>(k0_) * std::pow(x, k0_ - 1);
    default: {
      double acc = 0.0;
      for (std::size_t k = table_.size(); k-- > 1;)
        acc = acc * x + static_cast<double>(k) * table_[k];
      return acc;
    }
  }
}

double DegreeModel::gr(double x) const {
  check_unit_interval(x);
  switch (kind_) {
    case DegreeKind::Poisson:
      return std::exp(z_ * (x - 1.0));
    case DegreeKind::Delta:
      return std::pow(x, k0_ - 1);
    default:
      return gp_prime(x) / gp_prime(1.0);
  }
}

double DegreeModel::gr_prime(double x) const {
  check_unit_interval(x);
  switch (kind_) {
    case DegreeKind::Poisson:
      return z_ * std::exp(z_ * (x - 1.0));
    case DegreeKind::Delta:
      return k0_ >= 2 ? static_cast<double>(k0_ - 1) * std::pow(x, k0_ - 2) : 0.0;
    default: {
      double acc = 0.0;  // g_p''(x) / g_p'(1)
      for (std::size_t k = table_.size(); k-- > 2;)
        acc = acc * x + static_cast<double>(k) * static_cast<double>(k - 1) * table_[k];
      return acc / gp_prime(1.0);
    }
  }
}

double DegreeModel::moment(int n) const {
  if (n < 0) throw DomainError("moment requires n >= 0");
  double acc = 0.0;
  for (std::size_t k = 0; k < table_.size(); ++k)
    acc += std::pow(static_cast<double>(k), n) * table_[k];
  return acc;
}

int DegreeModel::sample(Rng& rng) const {
  if (kind_ == DegreeKind::Delta) return k0_;
  const double u = rng.uniform();
  const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
  return static_cast<int>(it - cdf_.begin());
}

std::string DegreeModel::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case DegreeKind::Delta:
      out << "delta(k0=" << k0_ << ")";
      break;
    case DegreeKind::Poisson:
      out << "poisson(z=" << z_ << ")";
      break;
    case DegreeKind::PowerLawCutoff:
      out << "powerlaw(tau=" << tau_ << ", kappa=" << kappa_ << ", kmin=" << k_min_
          << ", kmax=" << max_degree() << ")";
      break;
    case DegreeKind::Empirical:
      out << "empirical(kmax=" << max_degree() << ")";
      break;
  }
  return out.str();
}

void DegreeModel::save_histogram(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out.precision(17);
  for (std::size_t k = 0; k < table_.size(); ++k) {
    if (table_[k] > 0.0) out << k << " " << table_[k] << "\n";
  }
  if (!out) throw IoError("write failed: " + path);
}

DegreeModel DegreeModel::load_histogram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::vector<double> weights;
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    long long degree = 0;
    double prob = 0.0;
    if (!(row >> degree >> prob) || degree < 0)
      throw ParseError("expected 'degree probability'", line_no);
    if (static_cast<std::size_t>(degree) >= weights.size())
      weights.resize(static_cast<std::size_t>(degree) + 1, 0.0);
    weights[static_cast<std::size_t>(degree)] = prob;
  }
  return empirical(std::move(weights));
}

}  // namespace qperc
