#ifndef DUNKL_CERTIFY_HPP
#define DUNKL_CERTIFY_HPP

#include "dunkl/polynomial.hpp"

namespace dunkl {

/// Smallest interval width the sign certifier subdivides to.
inline constexpr double kCertifyMinWidth = 1e-6;

/// Cauchy bound: every real root lies in |z| < 1 + max |a_i / a_n|.
double cauchy_root_bound(const PolyD& p);

/// Returns +1 or -1 if p has constant sign on [lo, hi], certified by
/// Taylor-remainder bounds on a subdivision; returns 0 when no certificate
/// is found down to kCertifyMinWidth.
int certified_sign(const PolyD& p, double lo, double hi);

/// Sign of p on [0, inf): [0, Z*] by subdivision, beyond Z* by the leading
/// coefficient. Returns 0 if p may vanish somewhere on the half-line.
int certified_sign_halfline(const PolyD& p);

} // namespace dunkl

#endif
