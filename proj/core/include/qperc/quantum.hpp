#ifndef QPERC_QUANTUM_HPP
#define QPERC_QUANTUM_HPP

#include <optional>

namespace qperc {

/// Two-qubit pure-state link: lambda0 is the squared largest Schmidt
/// coefficient (the probability weight), copies the number of states per
/// edge.  Only 1 or 2 copies have analytic conversion probabilities here.
struct PureLink {
  double lambda0 = 0.5;
  int copies = 2;
};

/// Werner-state link with singlet fraction F in (1/4, 1].
struct WernerLink {
  double F = 1.0;
  double alpha() const;
};

/// Singlet conversion probability of one copy: min[1, 2(1 - lambda0)].
double scp_single(double lambda0);

/// Singlet conversion probability of two copies: min[1, 2(1 - lambda0^2)].
double scp_double(double lambda0);

/// Two-copy SCP as a function of the one-copy SCP:
/// min[1, 2 phi1 - phi1^2 / 2]; reaches 1 at phi1 = 2 - sqrt(2).
double phi2_of_phi1(double phi1);

/// alpha = (4F - 1) / 3 for a Werner state of singlet fraction F.
double alpha_of_F(double F);

/// Fidelity after teleporting across l Werner links: (1 + alpha^l) / 2.
double fidelity_after_l(double alpha, long long l);

/// Optimal teleportation fidelity from singlet fraction F in dimension d.
double teleport_fidelity(double F, int d);

/// Largest l with fidelity_after_l(alpha, l) >= f_min, i.e.
/// floor[ln(2 f_min - 1) / ln alpha]; empty when alpha = 1 (unbounded).
/// Requires 1/2 < f_min < 1 and 0 < alpha <= 1.
std::optional<long long> max_path_length(double f_min, double alpha);

}  // namespace qperc

#endif
