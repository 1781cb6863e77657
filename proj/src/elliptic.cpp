#include "kdvlab/elliptic.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "kdvlab/errors.hpp"

namespace kdvlab::elliptic {
namespace {

constexpr double kHyperbolicCutoff = 1e-10;
constexpr int kMaxLanden = 24;

void check_parameter(double m) {
  if (!(m >= 0.0 && m <= 1.0)) {
    throw DomainError("elliptic parameter m=" + std::to_string(m) +
                      " outside [0, 1]");
  }
}

}  // namespace

double complete_k(double m) {
  check_parameter(m);
  if (m == 1.0) throw DomainError("K diverges at m=1");
  double a = 1.0;
  double b = std::sqrt(1.0 - m);
  for (int i = 0; i < 64 && std::abs(a - b) > 1e-16 * a; ++i) {
    const double next = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next;
  }
  return std::numbers::pi / (2.0 * a);
}

Triple jacobi(double zeta, double m) {
  check_parameter(m);
  if (!std::isfinite(zeta)) throw DomainError("jacobi: non-finite argument");

  if (m > 1.0 - kHyperbolicCutoff) {
    const double sech = 1.0 / std::cosh(zeta);
    return {std::tanh(zeta), sech, sech};
  }
  if (m == 0.0) return {std::sin(zeta), std::cos(zeta), 1.0};

  // Reduce into [-2K, 2K] so the Landen recursion never sees huge phases.
  const double quarter = complete_k(m);
  const double u = std::remainder(zeta, 4.0 * quarter);

  std::array<double, kMaxLanden + 1> a{};
  std::array<double, kMaxLanden + 1> c{};
  a[0] = 1.0;
  c[0] = std::sqrt(m);
  double b = std::sqrt(1.0 - m);
  int n = 0;
  while (c[n] > 1e-17 * a[n]) {
    if (n == kMaxLanden) throw NumericalError("jacobi: Landen descent did not converge");
    a[n + 1] = 0.5 * (a[n] + b);
    // c_{n+1} = (a_n - b_n) / 2 written without the cancelling difference.
    c[n + 1] = c[n] * c[n] / (4.0 * a[n + 1]);
    b = std::sqrt(a[n] * b);
    ++n;
  }

  double phi = std::ldexp(a[n] * u, n);
  for (int j = n; j > 0; --j) {
    phi = 0.5 * (phi + std::asin(c[j] / a[j] * std::sin(phi)));
  }
  const double sn = std::sin(phi);
  const double cn = std::cos(phi);
  // dn^2 = (1 - m) + m cn^2 has no cancellation, unlike 1 - m sn^2.
  const double dn = std::sqrt((1.0 - m) + m * cn * cn);
  return {sn, cn, dn};
}

double period(PeriodKind kind, double m) {
  check_parameter(m);
  if (m == 1.0) throw DomainError("period: elliptic functions are not periodic at m=1");
  const double quarter = complete_k(m);
  switch (kind) {
    case PeriodKind::sn:
    case PeriodKind::cn:
    case PeriodKind::sn_dn:
      return 4.0 * quarter;
    case PeriodKind::dn:
    case PeriodKind::sn_cn:
    case PeriodKind::cn2:
      return 2.0 * quarter;
  }
  return 4.0 * quarter;
}

PeriodKind parse_period_kind(std::string_view name) {
  if (name == "sn") return PeriodKind::sn;
  if (name == "cn") return PeriodKind::cn;
  if (name == "dn") return PeriodKind::dn;
  if (name == "sn*dn" || name == "sn-dn") return PeriodKind::sn_dn;
  if (name == "sn*cn" || name == "sn-cn") return PeriodKind::sn_cn;
  if (name == "cn2" || name == "cn^2") return PeriodKind::cn2;
  throw DomainError("unknown period kind '" + std::string(name) + "'");
}

}  // namespace kdvlab::elliptic
