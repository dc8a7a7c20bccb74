#ifndef QPERC_SERIES_HPP
#define QPERC_SERIES_HPP

#include <cstddef>
#include <vector>

namespace qperc {

/// Truncated univariate power series: coefficients of x^0 .. x^max_degree.
/// All arithmetic drops terms beyond max_degree.
class Series {
 public:
  explicit Series(std::size_t max_degree) : c_(max_degree + 1, 0.0) {}

  static Series constant(double value, std::size_t max_degree) {
    Series s(max_degree);
    s.c_[0] = value;
    return s;
  }
  static Series x(std::size_t max_degree) {
    Series s(max_degree);
    if (max_degree >= 1) s.c_[1] = 1.0;
    return s;
  }

  std::size_t max_degree() const { return c_.size() - 1; }
  std::size_t size() const { return c_.size(); }
  double operator[](std::size_t k) const { return c_[k]; }
  double& operator[](std::size_t k) { return c_[k]; }
  const std::vector<double>& coefficients() const { return c_; }

  Series& operator+=(const Series& o) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  Series& operator-=(const Series& o) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Series& operator*=(double a) {
    for (auto& v : c_) v *= a;
    return *this;
  }
  Series& add_constant(double a) {
    c_[0] += a;
    return *this;
  }

  double eval(double x) const {
    double acc = 0.0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }
  /// d/dx at x = 1: sum k c_k.
  double derivative_at_one() const {
    double acc = 0.0;
    for (std::size_t k = 1; k < c_.size(); ++k) acc += static_cast<double>(k) * c_[k];
    return acc;
  }
  double sum() const { return eval(1.0); }

 private:
  std::vector<double> c_;
};

Series mul(const Series& a, const Series& b);

/// Multiplication by x (degree shift by one, top coefficient dropped).
Series shift_up(const Series& a);

/// exp of a truncated series (any constant term), via g' = f' g.
Series series_exp(const Series& f);

/// Evaluates sum_k coeffs[k] s(x)^k as a truncated series (Horner).
Series apply_polynomial(const std::vector<double>& coeffs, const Series& s);

Series pow(const Series& a, unsigned exponent);

/// Truncated bivariate power series in (x, y): coefficient (i, j) multiplies
/// x^i y^j, for i <= max_x and j <= max_y.
class Series2 {
 public:
  Series2(std::size_t max_x, std::size_t max_y)
      : nx_(max_x + 1), ny_(max_y + 1), c_(nx_ * ny_, 0.0) {}

  static Series2 constant(double value, std::size_t max_x, std::size_t max_y) {
    Series2 s(max_x, max_y);
    s.at(0, 0) = value;
    return s;
  }

  std::size_t max_x() const { return nx_ - 1; }
  std::size_t max_y() const { return ny_ - 1; }

  double& at(std::size_t i, std::size_t j) { return c_[i * ny_ + j]; }
  double at(std::size_t i, std::size_t j) const { return c_[i * ny_ + j]; }

  Series2& operator+=(const Series2& o);
  Series2& operator*=(double a) {
    for (auto& v : c_) v *= a;
    return *this;
  }
  Series2& add_constant(double a) {
    c_[0] += a;
    return *this;
  }

  /// Maximum |coefficient| difference; convergence metric for fixed points.
  double max_abs_diff(const Series2& o) const;

  Series2 shift_x() const;  // multiply by x
  Series2 shift_y() const;  // multiply by y

 private:
  friend Series2 mul(const Series2& a, const Series2& b);
  std::size_t nx_, ny_;
  std::vector<double> c_;
};

Series2 mul(const Series2& a, const Series2& b);
Series2 pow(const Series2& a, unsigned exponent);

}  // namespace qperc

#endif
