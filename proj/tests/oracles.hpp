#pragma once
// Independent reference computations used by the tests. Nothing here calls
// into the library under test.
#include <array>
#include <cmath>
#include <complex>
#include <random>

namespace oracle {

inline const double kPi = std::acos(-1.0);

/// K(m) = int_0^{pi/2} dtheta / sqrt(1 - m sin^2 theta) by composite Gauss-Legendre.
inline double complete_k_quadrature(double m, int panels = 400) {
  static constexpr std::array<double, 5> x = {0.0, -0.5384693101056831, 0.5384693101056831,
                                              -0.9061798459386640, 0.9061798459386640};
  static constexpr std::array<double, 5> w = {0.5688888888888889, 0.4786286704993665,
                                              0.4786286704993665, 0.2369268850561891,
                                              0.2369268850561891};
  const double h = 0.5 * kPi / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * h;
    for (std::size_t j = 0; j < x.size(); ++j) {
      const double s = std::sin(mid + 0.5 * h * x[j]);
      sum += w[j] / std::sqrt(1.0 - m * s * s);
    }
  }
  return 0.5 * h * sum;
}

/// K(m) = pi / (2 AGM(1, sqrt(1 - m))), iterated to a fixed point.
inline double complete_k_agm(double m) {
  double a = 1.0;
  double b = std::sqrt(1.0 - m);
  for (int i = 0; i < 64 && a != b; ++i) {
    const double next = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next;
  }
  return 0.5 * kPi / a;
}

struct Jacobi {
  double sn, cn, dn;
};

/// Integrates sn' = cn dn, cn' = -sn dn, dn' = -m sn cn from 0 with RK4.
inline Jacobi jacobi_ode(double zeta, double m, int steps = 20000) {
  std::array<double, 3> y = {0.0, 1.0, 1.0};
  const double h = zeta / steps;
  auto f = [m](const std::array<double, 3>& s) {
    return std::array<double, 3>{s[1] * s[2], -s[0] * s[2], -m * s[0] * s[1]};
  };
  for (int i = 0; i < steps; ++i) {
    const auto k1 = f(y);
    std::array<double, 3> t{};
    for (int j = 0; j < 3; ++j) t[j] = y[j] + 0.5 * h * k1[j];
    const auto k2 = f(t);
    for (int j = 0; j < 3; ++j) t[j] = y[j] + 0.5 * h * k2[j];
    const auto k3 = f(t);
    for (int j = 0; j < 3; ++j) t[j] = y[j] + h * k3[j];
    const auto k4 = f(t);
    for (int j = 0; j < 3; ++j) y[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
  }
  return {y[0], y[1], y[2]};
}

inline double sech(double x) { return 1.0 / std::cosh(x); }

/// Gudermannian gd(x) = 2 atan(tanh(x/2)).
inline double gd(double x) { return 2.0 * std::atan(std::tanh(0.5 * x)); }

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

}  // namespace oracle
