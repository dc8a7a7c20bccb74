#include "qperc/series.hpp"

#include <cmath>
#include <cstddef>

namespace qperc {

Series mul(const Series& a, const Series& b) {
  Series out(a.max_degree());
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    const std::size_t jmax = n - i;
    for (std::size_t j = 0; j < jmax; ++j) out[i + j] += ai * b[j];
  }
  return out;
}

Series shift_up(const Series& a) {
  Series out(a.max_degree());
  for (std::size_t k = a.size(); k-- > 1;) out[k] = a[k - 1];
  return out;
}

Series series_exp(const Series& f) {
  const std::size_t n = f.size();
  Series g(f.max_degree());
  g[0] = std::exp(f[0]);
  for (std::size_t k = 1; k < n; ++k) {
    double acc = 0.0;
    for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * f[j] * g[k - j];
    g[k] = acc / static_cast<double>(k);
  }
  return g;
}

Series apply_polynomial(const std::vector<double>& coeffs, const Series& s) {
  Series acc(s.max_degree());
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = mul(acc, s);
    acc[0] += coeffs[k];
  }
  return acc;
}

Series pow(const Series& a, unsigned exponent) {
  Series result = Series::constant(1.0, a.max_degree());
  Series base = a;
  while (exponent > 0) {
    if (exponent & 1u) result = mul(result, base);
    exponent >>= 1u;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

Series2& Series2::operator+=(const Series2& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

double Series2::max_abs_diff(const Series2& o) const {
  double m = 0.0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const double d = std::abs(c_[i] - o.c_[i]);
    if (d > m) m = d;
  }
  return m;
}

Series2 Series2::shift_x() const {
  Series2 out(max_x(), max_y());
  for (std::size_t i = nx_ - 1; i-- > 0;)
    for (std::size_t j = 0; j < ny_; ++j) out.at(i + 1, j) = at(i, j);
  return out;
}

Series2 Series2::shift_y() const {
  Series2 out(max_x(), max_y());
  for (std::size_t i = 0; i < nx_; ++i)
    for (std::size_t j = ny_ - 1; j-- > 0;) out.at(i, j + 1) = at(i, j);
  return out;
}

Series2 mul(const Series2& a, const Series2& b) {
  Series2 out(a.max_x(), a.max_y());
  for (std::size_t i = 0; i < a.nx_; ++i) {
    for (std::size_t j = 0; j < a.ny_; ++j) {
      const double av = a.at(i, j);
      if (av == 0.0) continue;
      for (std::size_t k = 0; i + k < a.nx_; ++k)
        for (std::size_t l = 0; j + l < a.ny_; ++l) out.at(i + k, j + l) += av * b.at(k, l);
    }
  }
  return out;
}

Series2 pow(const Series2& a, unsigned exponent) {
  Series2 result = Series2::constant(1.0, a.max_x(), a.max_y());
  Series2 base = a;
  while (exponent > 0) {
    if (exponent & 1u) result = mul(result, base);
    exponent >>= 1u;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

}  // namespace qperc
