#include "kdvlab/residual.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fft.hpp"
#include "kdvlab/errors.hpp"

namespace kdvlab {
namespace {

constexpr double kSpectralNoiseFloor = 64.0 * std::numeric_limits<double>::epsilon();

// Smallest odd stencil giving 8th-order accuracy for the interior.
std::size_t stencil_width(int order) { return order == 3 ? 11 : 9; }

std::vector<cplx> spectral_derivative(const SampledProfile& p, int order) {
  const std::size_t n = p.size();
  detail::Fft fft(n);
  std::vector<cplx> hat(n);
  fft.forward(p.values(), hat);
  const auto k = detail::wavenumbers(n, p.grid().length());
  // Coefficients at the rounding level of the largest one carry no signal;
  // multiplying them by k^order would dominate the derivative of resolved data.
  double peak = 0.0;
  for (const cplx& h : hat) peak = std::max(peak, std::abs(h));
  const double floor = kSpectralNoiseFloor * peak;
  const cplx i(0.0, 1.0);
  for (std::size_t j = 0; j < n; ++j) {
    hat[j] = std::abs(hat[j]) <= floor ? cplx{} : hat[j] * std::pow(i * k[j], order);
  }
  std::vector<cplx> out(n);
  fft.inverse(hat, out);
  return out;
}

std::vector<cplx> fd_derivative(const SampledProfile& p, int order) {
  const std::size_t n = p.size();
  const std::size_t width = stencil_width(order);
  if (n < width) {
    throw DomainError("differentiate: " + std::to_string(n) + " samples is too few for a " +
                      std::to_string(width) + "-point stencil");
  }
  const double h = p.grid().spacing;
  const auto half = static_cast<long long>(width / 2);
  std::vector<double> offsets(width);
  for (std::size_t s = 0; s < width; ++s) offsets[s] = static_cast<double>(s) - static_cast<double>(half);
  const auto central = fd_weights(0.0, offsets, order);
  const double scale = std::pow(h, -order);

  std::vector<cplx> out(n);
  const auto nn = static_cast<long long>(n);
  const bool periodic = p.grid().topology == Topology::periodic;
  for (long long i = 0; i < nn; ++i) {
    cplx acc = 0.0;
    if (periodic || (i >= half && i < nn - half)) {
      for (long long s = -half; s <= half; ++s) {
        long long j = i + s;
        if (periodic) j = ((j % nn) + nn) % nn;
        acc += central[static_cast<std::size_t>(s + half)] * p[static_cast<std::size_t>(j)];
      }
    } else {
      // Off-centre stencil of the same width, shifted to stay on the grid.
      const long long start = i < half ? 0 : nn - static_cast<long long>(width);
      std::vector<double> local(width);
      for (std::size_t s = 0; s < width; ++s) {
        local[s] = static_cast<double>(start + static_cast<long long>(s) - i);
      }
      const auto w = fd_weights(0.0, local, order);
      for (std::size_t s = 0; s < width; ++s) {
        acc += w[s] * p[static_cast<std::size_t>(start) + s];
      }
    }
    out[static_cast<std::size_t>(i)] = acc * scale;
  }
  return out;
}

struct ResidualTerms {
  std::vector<cplx> d1;    // w'
  std::vector<cplx> rest;  // nonlinear term + w'''
  double sup_nonlinear = 0.0;
  double sup_third = 0.0;
  double sup_first = 0.0;
};

ResidualTerms residual_terms(const SampledProfile& p, Equation eq, DerivativeMethod method) {
  const double alpha = p.scale_alpha();
  const double scale = eq == Equation::kdv ? alpha * alpha : alpha;
  std::vector<cplx> w(p.values().begin(), p.values().end());
  for (auto& v : w) v /= scale;
  const SampledProfile wp = p.with_values(w);
  const auto d1 = differentiate(wp, 1, method);
  const auto d3 = differentiate(wp, 3, method);

  ResidualTerms t;
  t.d1.assign(d1.values().begin(), d1.values().end());
  t.rest.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    cplx nonlinear;
    switch (eq) {
      case Equation::kdv: nonlinear = -6.0 * w[i] * d1[i]; break;
      case Equation::mkdv_defocusing: nonlinear = -6.0 * w[i] * w[i] * d1[i]; break;
      case Equation::mkdv_focusing: nonlinear = 6.0 * w[i] * w[i] * d1[i]; break;
    }
    t.rest[i] = nonlinear + d3[i];
    if (p.kept(i)) {
      t.sup_nonlinear = std::max(t.sup_nonlinear, std::abs(nonlinear));
      t.sup_third = std::max(t.sup_third, std::abs(d3[i]));
      t.sup_first = std::max(t.sup_first, std::abs(d1[i]));
    }
  }
  return t;
}

ResidualReport report_at(const SampledProfile& p, const ResidualTerms& t, double c) {
  ResidualReport r;
  r.c_used = c;
  r.mask = p.pole_mask();
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p.kept(i)) continue;
    const double mag = std::abs(-c * t.d1[i] + t.rest[i]);
    r.sup_norm = std::max(r.sup_norm, mag);
    sum += mag * mag;
  }
  r.l2_norm = std::sqrt(sum * p.grid().spacing);
  const double largest = std::max({std::abs(c) * t.sup_first, t.sup_nonlinear, t.sup_third});
  r.relative = largest > 0.0 ? r.sup_norm / largest : 0.0;
  return r;
}

}  // namespace

std::vector<double> fd_weights(double x0, const std::vector<double>& x, int order) {
  // Fornberg (1988), generation of finite difference formulas on arbitrary grids.
  const std::size_t n = x.size();
  const auto mmax = static_cast<std::size_t>(order);
  std::vector<std::vector<double>> c(n, std::vector<double>(mmax + 1, 0.0));
  double c1 = 1.0;
  double c4 = x[0] - x0;
  c[0][0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t mn = std::min(i, mmax);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i] - x0;
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (std::size_t k = mn; k >= 1; --k) {
          c[i][k] = c1 * (static_cast<double>(k) * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        }
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (std::size_t k = mn; k >= 1; --k) {
        c[j][k] = (c4 * c[j][k] - static_cast<double>(k) * c[j][k - 1]) / c3;
      }
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = c[i][mmax];
  return w;
}

SampledProfile differentiate(const SampledProfile& p, int order, DerivativeMethod method) {
  if (order < 1 || order > 3) throw DomainError("differentiate: order must be 1, 2 or 3");
  const bool periodic = p.grid().topology == Topology::periodic;
  if (method == DerivativeMethod::spectral && !periodic) {
    throw DomainError("differentiate: spectral derivatives need a periodic grid");
  }
  const bool spectral = method == DerivativeMethod::spectral ||
                        (method == DerivativeMethod::automatic && periodic);
  return p.with_values(spectral ? spectral_derivative(p, order) : fd_derivative(p, order));
}

ResidualReport traveling_residual(const SampledProfile& p, double c, Equation eq,
                                  DerivativeMethod method) {
  return report_at(p, residual_terms(p, eq, method), c);
}

SampledProfile residual_samples(const SampledProfile& p, double c, Equation eq,
                                DerivativeMethod method) {
  const auto t = residual_terms(p, eq, method);
  std::vector<cplx> out(p.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -c * t.d1[i] + t.rest[i];
  return p.with_values(std::move(out));
}

VelocityScan velocity_scan(const SampledProfile& p, Equation eq, double c_min, double c_max,
                           int steps, DerivativeMethod method) {
  if (steps < 3) throw DomainError("velocity_scan: steps must be >= 3");
  if (!(c_max > c_min)) throw DomainError("velocity_scan: need c_min < c_max");
  const auto t = residual_terms(p, eq, method);

  double dd = 0.0;
  cplx dr = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p.kept(i)) continue;
    dd += std::norm(t.d1[i]);
    dr += std::conj(t.d1[i]) * t.rest[i];
  }
  if (t.sup_first <= 1e-13 * std::max(1.0, t.sup_third)) {
    throw NumericalError("velocity unidentifiable: profile derivative vanishes");
  }

  VelocityScan out;
  out.scan.reserve(static_cast<std::size_t>(steps));
  double best_c = c_min;
  double best_rel = INFINITY;
  for (int s = 0; s < steps; ++s) {
    const double c = c_min + (c_max - c_min) * s / (steps - 1);
    const double rel = report_at(p, t, c).relative;
    out.scan.push_back({c, rel});
    if (rel < best_rel) {
      best_rel = rel;
      best_c = c;
    }
  }
  // The residual is affine in c, so the L2 minimizer is exact.
  const double refined = std::clamp(dr.real() / dd, c_min, c_max);
  const auto refined_report = report_at(p, t, refined);
  if (refined_report.relative <= best_rel) {
    out.c_best = refined;
    out.report = refined_report;
  } else {
    out.c_best = best_c;
    out.report = report_at(p, t, best_c);
  }
  out.min_relative = std::min(best_rel, refined_report.relative);
  return out;
}

}  // namespace kdvlab
