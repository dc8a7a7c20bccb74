#ifndef QPERC_LAMBERT_HPP
#define QPERC_LAMBERT_HPP

namespace qperc {

/// Principal branch W0 of the Lambert W function (w e^w = x) for
/// x >= -1/e, by Halley iteration.  Seeds: branch-point expansion near
/// -1/e, truncated series for small |x|, log-based for large x.
double lambert_w0(double x);

}  // namespace qperc

#endif
