#include "qperc/quantum.hpp"

#include <cmath>

#include "qperc/errors.hpp"

namespace qperc {

namespace {
void check_lambda0(double lambda0) {
  if (!(lambda0 >= 0.5 && lambda0 <= 1.0))
    throw DomainError("lambda0 must be in [1/2, 1]");
}
}  // namespace

double scp_single(double lambda0) {
  check_lambda0(lambda0);
  return std::min(1.0, 2.0 * (1.0 - lambda0));
}

double scp_double(double lambda0) {
  check_lambda0(lambda0);
  return std::min(1.0, 2.0 * (1.0 - lambda0 * lambda0));
}

double phi2_of_phi1(double phi1) {
  if (!(phi1 >= 0.0 && phi1 <= 1.0)) throw DomainError("phi1 must be in [0, 1]");
  return std::min(1.0, 2.0 * phi1 - 0.5 * phi1 * phi1);
}

double alpha_of_F(double F) {
  if (!(F > 0.25 && F <= 1.0)) throw DomainError("singlet fraction F must be in (1/4, 1]");
  return (4.0 * F - 1.0) / 3.0;
}

double WernerLink::alpha() const { return alpha_of_F(F); }

double fidelity_after_l(double alpha, long long l) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("alpha must be in (0, 1]");
  if (l < 0) throw DomainError("path length must be >= 0");
  return 0.5 * (1.0 + std::pow(alpha, static_cast<double>(l)));
}

double teleport_fidelity(double F, int d) {
  if (d < 2) throw DomainError("teleportation dimension must be >= 2");
  if (!(F > 0.0 && F <= 1.0)) throw DomainError("F must be in (0, 1]");
  return (F * d + 1.0) / (d + 1.0);
}

std::optional<long long> max_path_length(double f_min, double alpha) {
  if (!(f_min > 0.5 && f_min < 1.0)) throw DomainError("f_min must be in (1/2, 1)");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("alpha must be in (0, 1]");
  if (alpha == 1.0) return std::nullopt;  // fidelity never decays
  auto l = static_cast<long long>(std::floor(std::log(2.0 * f_min - 1.0) / std::log(alpha)));
  if (l < 0) l = 0;
  // Floating-point floor can land one off; enforce the sandwich
  // f_l >= f_min > f_{l+1} exactly as computed by fidelity_after_l.
  while (fidelity_after_l(alpha, l + 1) >= f_min) ++l;
  while (l > 0 && fidelity_after_l(alpha, l) < f_min) --l;
  return l;
}

}  // namespace qperc
