#include "qperc/lambert.hpp"

#include <cmath>

#include "qperc/errors.hpp"

namespace qperc {

double lambert_w0(double x) {
  const double inv_e = std::exp(-1.0);
  if (x < -inv_e) {
    // Tolerate rounding just below the branch point.
    if (x > -inv_e - 1e-12) return -1.0;
    throw DomainError("lambert_w0 requires x >= -1/e");
  }
  if (x == 0.0) return 0.0;

  double w;
  if (x < -inv_e + 0.04) {
    // Branch-point series: W = -1 + p - p^2/3 + 11 p^3/72, p = sqrt(2(e x + 1)).
    const double p = std::sqrt(2.0 * (std::exp(1.0) * x + 1.0));
    w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  } else if (x < 1.0) {
    // Series around 0: W = x - x^2 + 3/2 x^3 - ...
    w = x * (1.0 - x + 1.5 * x * x);
  } else {
    const double lx = std::log(x);
    const double llx = std::log(lx > 1.0 ? lx : 1.0);
    w = lx - llx;
  }

  for (int iter = 0; iter < 64; ++iter) {
    const double wp1 = w + 1.0;
    if (std::abs(wp1) < 1e-9) break;  // branch-point seed is already accurate here
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const double step = f / denom;
    w -= step;
    if (std::abs(step) <= 1e-16 * (1.0 + std::abs(w))) break;
  }
  return w;
}

}  // namespace qperc
