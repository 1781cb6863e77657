#pragma once

// Jacobi elliptic functions and the complete elliptic integral of the first
// kind.
//
// Convention: every function takes the *parameter* m = k^2, not the modulus
// k. Boost uses k, GSL and mpmath use m; callers porting formulas must check.

#include <string_view>

namespace kdvlab::elliptic {

struct Triple {
  double sn;
  double cn;
  double dn;
};

/// Quarter period K(m) = pi / (2 AGM(1, sqrt(1 - m))), 0 <= m < 1.
/// Throws DomainError outside [0, 1) (m == 1 reports the divergence).
double complete_k(double m);

/// sn, cn, dn at real argument zeta for 0 <= m <= 1.
///
/// Descending Landen / AGM scheme after reducing zeta modulo 4K. For m within
/// 1e-10 of 1 the hyperbolic limits are returned directly.
Triple jacobi(double zeta, double m);

enum class PeriodKind { sn, cn, dn, sn_dn, sn_cn, cn2 };

/// Fundamental real period of the given product of elliptic functions.
/// 4K for sn, cn, sn*dn; 2K for dn, sn*cn, cn^2. Throws at m == 1.
double period(PeriodKind kind, double m);

PeriodKind parse_period_kind(std::string_view name);

}  // namespace kdvlab::elliptic
