#include "kdvlab/lax.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

#include "kdvlab/errors.hpp"
#include "kdvlab/residual.hpp"

namespace kdvlab {
namespace {

constexpr int kMaxQlIterations = 60;
constexpr std::size_t kDenseFallbackLimit = 3000;

double wall_spacing(const SchrodingerProblem& p) {
  return 2.0 * p.half_width / static_cast<double>(p.n_points + 1);
}

// Potential on all n + 2 nodes including the walls.
std::vector<cplx> potential_with_walls(const SchrodingerProblem& p) {
  const double h = wall_spacing(p);
  std::vector<cplx> v(p.n_points + 2);
  for (std::size_t j = 0; j < v.size(); ++j) {
    v[j] = p.potential(-p.half_width + h * static_cast<double>(j));
  }
  return v;
}

std::vector<cplx> dense_eigenvalues(const std::vector<cplx>& d, const std::vector<cplx>& e) {
  const auto n = static_cast<Eigen::Index>(d.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = d[static_cast<std::size_t>(i)];
    if (i + 1 < n) {
      m(i, i + 1) = e[static_cast<std::size_t>(i)];
      m(i + 1, i) = e[static_cast<std::size_t>(i)];
    }
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success) throw NumericalError("dense eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

struct RawSpectrum {
  std::vector<cplx> levels;
  double v_inf = 0.0;
};

RawSpectrum fd_levels(const SchrodingerProblem& p, const BoundStateOptions& opt,
                      std::vector<std::string>& notes) {
  if (p.n_points < 16) throw DomainError("bound_states: need at least 16 grid points");
  if (!(p.half_width > 0.0)) throw DomainError("bound_states: half width must be positive");
  const auto v = potential_with_walls(p);
  const cplx left = v.front();
  const cplx right = v.back();
  const cplx v_inf = 0.5 * (left + right);
  const double defect = std::max({std::abs(left - v_inf), std::abs(right - v_inf), std::abs(v_inf.imag())});
  double depth = 1.0;
  for (const cplx& x : v) depth = std::max(depth, std::abs(x));
  if (defect > opt.decay_tol * depth) {
    std::ostringstream msg;
    msg << "potential does not decay to a real constant at x=+-" << p.half_width
        << " (defect " << defect << "); widen the window";
    throw DomainError(msg.str());
  }

  const double h = wall_spacing(p);
  const double inv_h2 = 1.0 / (h * h);
  std::vector<cplx> d(p.n_points);
  for (std::size_t j = 0; j < p.n_points; ++j) d[j] = 2.0 * inv_h2 + v[j + 1];
  std::vector<cplx> e(p.n_points - 1, cplx(-inv_h2, 0.0));

  auto eig = symmetric_tridiagonal_eigenvalues(d, e);
  std::vector<cplx> all;
  if (eig) {
    all = std::move(*eig);
  } else if (p.n_points <= kDenseFallbackLimit) {
    notes.emplace_back("complex QL broke down; used dense eigensolver");
    all = dense_eigenvalues(d, e);
  } else {
    throw NumericalError("eigensolver non-convergence (complex QL) at n=" +
                         std::to_string(p.n_points));
  }

  RawSpectrum out;
  out.v_inf = v_inf.real();
  for (const auto& ev : all) {
    if (ev.real() < out.v_inf - opt.filter_margin) out.levels.push_back(ev);
  }
  std::sort(out.levels.begin(), out.levels.end(),
            [](const cplx& a, const cplx& b) { return a.real() < b.real(); });
  return out;
}

cplx lagrange4(const SampledProfile& v, double x) {
  const Grid& g = v.grid();
  const double pos = (x - g.origin) / g.spacing;
  const auto n = static_cast<long long>(v.size());
  if (pos <= 0.0) return v[0];
  if (pos >= static_cast<double>(n - 1)) return v[v.size() - 1];
  auto base = static_cast<long long>(std::floor(pos)) - 1;
  base = std::clamp(base, 0LL, n - 4);
  cplx acc = 0.0;
  for (long long a = 0; a < 4; ++a) {
    double w = 1.0;
    for (long long b = 0; b < 4; ++b) {
      if (a != b) w *= (pos - static_cast<double>(base + b)) / static_cast<double>(a - b);
    }
    acc += w * v[static_cast<std::size_t>(base + a)];
  }
  return acc;
}

}  // namespace

SampledProfile SchrodingerProblem::sample() const {
  const double h = wall_spacing(*this);
  Grid grid{-half_width + h, h, n_points, Topology::truncated};
  std::vector<cplx> values(n_points);
  for (std::size_t j = 0; j < n_points; ++j) values[j] = potential(grid.coordinate(j));
  return {grid, std::move(values)};
}

SchrodingerProblem SchrodingerProblem::refined(double width_factor, std::size_t point_factor) const {
  return {potential, half_width * width_factor, n_points * point_factor};
}

SchrodingerProblem SchrodingerProblem::from_profile(const SampledProfile& v) {
  const Grid& g = v.grid();
  if (g.topology != Topology::truncated || !g.mirror_symmetric()) {
    throw DomainError("from_profile: potential must sit on a symmetric truncated window");
  }
  const double half = -g.origin;
  auto samples = std::make_shared<SampledProfile>(v);
  return {[samples](double x) { return lagrange4(*samples, x); }, half, v.size()};
}

PotentialFn sech2_well(double strength, double alpha) {
  return [strength, alpha](double x) {
    const double s = 1.0 / std::cosh(alpha * x);
    return cplx(-strength * alpha * alpha * s * s, 0.0);
  };
}

PotentialFn complex_scarf(double alpha, Sign branch) {
  const double b = sign_value(branch);
  return [alpha, b](double x) {
    const double s = 1.0 / std::cosh(alpha * x);
    const double t = std::tanh(alpha * x);
    return alpha * alpha * cplx(-s * s, b * s * t);
  };
}

std::optional<std::vector<cplx>> symmetric_tridiagonal_eigenvalues(std::vector<cplx> d,
                                                                   std::vector<cplx> e) {
  // Implicit QL with complex orthogonal (not unitary) rotations, following
  // the real tqli recursion. No pivoting, so it can break down when a
  // rotation norm sqrt(f^2 + g^2) vanishes; callers fall back to a dense solve.
  const std::size_t n = d.size();
  if (n == 0) return std::vector<cplx>{};
  if (e.size() + 1 != n) throw DomainError("tridiagonal: off-diagonal must have n-1 entries");
  e.push_back(0.0);
  constexpr double eps = std::numeric_limits<double>::epsilon();

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m = l;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (++iter > kMaxQlIterations) return std::nullopt;
        cplx g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        cplx r = std::sqrt(g * g + 1.0);
        g = d[m] - d[l] + e[l] / (std::abs(g + r) >= std::abs(g - r) ? g + r : g - r);
        cplx s = 1.0;
        cplx c = 1.0;
        cplx p = 0.0;
        bool deflated = false;
        for (std::size_t i = m; i-- > l;) {
          const cplx f = s * e[i];
          const cplx b = c * e[i];
          r = std::sqrt(f * f + g * g);
          e[i + 1] = r;
          if (std::abs(r) == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            deflated = true;
            break;
          }
          if (std::abs(r) < 1e-8 * (std::abs(f) + std::abs(g))) return std::nullopt;
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (deflated) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  for (const auto& v : d) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return std::nullopt;
  }
  return d;
}

std::optional<cplx> shoot(const SchrodingerProblem& p, cplx guess) {
  const auto v = potential_with_walls(p);
  const double h = wall_spacing(p);
  const double h2 = h * h / 12.0;
  const std::size_t last = v.size() - 1;  // wall index

  auto mismatch = [&](cplx energy) -> std::optional<cplx> {
    // Match at the outermost classical turning point on the right.
    std::size_t match = last / 2;
    for (std::size_t j = last - 2; j >= 2; --j) {
      if (v[j].real() < energy.real()) {
        match = j;
        break;
      }
    }
    match = std::clamp<std::size_t>(match, 2, last - 2);

    auto f = [&](std::size_t j) { return v[j] - energy; };
    auto step = [&](cplx prev, cplx cur, std::size_t jp, std::size_t jc, std::size_t jn) {
      return (2.0 * (1.0 + 5.0 * h2 * f(jc)) * cur - (1.0 - h2 * f(jp)) * prev) /
             (1.0 - h2 * f(jn));
    };

    // Left: psi_0 = 0, integrate up to match + 1.
    cplx prev = 0.0;
    cplx cur = 1e-30;
    for (std::size_t j = 1; j <= match; ++j) {
      const cplx next = step(prev, cur, j - 1, j, j + 1);
      prev = cur;
      cur = next;
      const double mag = std::abs(cur);
      if (mag > 1e200) {
        prev /= mag;
        cur /= mag;
      }
    }
    // prev = psi_L(match), cur = psi_L(match + 1)
    const cplx left_ratio = cur / prev;

    cplx rprev = 0.0;
    cplx rcur = 1e-30;
    for (std::size_t j = last - 1; j > match; --j) {
      const cplx next = step(rprev, rcur, j + 1, j, j - 1);
      rprev = rcur;
      rcur = next;
      const double mag = std::abs(rcur);
      if (mag > 1e200) {
        rprev /= mag;
        rcur /= mag;
      }
    }
    // rcur = psi_R(match), rprev = psi_R(match + 1)
    if (std::abs(prev) == 0.0 || std::abs(rcur) == 0.0) return std::nullopt;
    return left_ratio - rprev / rcur;
  };

  cplx e0 = guess;
  cplx e1 = guess + 1e-4 * std::max(1.0, std::abs(guess));
  auto f0 = mismatch(e0);
  auto f1 = mismatch(e1);
  if (!f0 || !f1) return std::nullopt;
  for (int it = 0; it < 80; ++it) {
    const cplx denom = *f1 - *f0;
    if (std::abs(denom) == 0.0) break;
    const cplx e2 = e1 - *f1 * (e1 - e0) / denom;
    if (!std::isfinite(e2.real()) || !std::isfinite(e2.imag())) return std::nullopt;
    e0 = e1;
    f0 = f1;
    e1 = e2;
    f1 = mismatch(e1);
    if (!f1) return std::nullopt;
    if (std::abs(e1 - e0) < 1e-13 * std::max(1.0, std::abs(e1))) return e1;
  }
  return std::nullopt;
}

EigenReport bound_states(const SchrodingerProblem& p, const BoundStateOptions& opt) {
  EigenReport report;
  const auto base = fd_levels(p, opt, report.notes);
  report.bound_states = base.levels;
  report.v_inf = base.v_inf;
  for (const auto& e : report.bound_states) report.max_imag = std::max(report.max_imag, std::abs(e.imag()));

  bool all_validated = true;
  for (const auto& e : report.bound_states) {
    auto refined = shoot(p, e);
    if (refined && std::abs(*refined - e) > 1e-2 * std::max(1.0, std::abs(e))) {
      std::ostringstream msg;
      msg << "level " << e << " disagrees with shooting value " << *refined;
      report.notes.push_back(msg.str());
      all_validated = false;
    }
    if (!refined) {
      std::ostringstream msg;
      msg << "shooting did not converge for level " << e;
      report.notes.push_back(msg.str());
      all_validated = false;
    }
    report.shooting.push_back(refined);
  }

  if (!opt.cross_check) {
    report.converged = all_validated;
    return report;
  }
  const auto finer = p.refined(1.25, 2);
  std::vector<std::string> ignored;
  const auto check = fd_levels(finer, opt, ignored);
  bool stable = check.levels.size() == report.bound_states.size();
  if (!stable) {
    report.notes.push_back("bound-state count changes under (1.25 L, 2 n): " +
                           std::to_string(report.bound_states.size()) + " vs " +
                           std::to_string(check.levels.size()));
  }
  for (std::size_t i = 0; stable && i < check.levels.size(); ++i) {
    const auto a = report.shooting[i];
    const auto b = shoot(finer, check.levels[i]);
    if (!a || !b || std::abs(*a - *b) > opt.convergence_tol) {
      stable = false;
      report.notes.push_back("level " + std::to_string(i) + " not stable under refinement");
    }
  }
  report.converged = stable && all_validated;
  return report;
}

std::pair<SampledProfile, SampledProfile> susy_pair(const Superpotential& w) {
  const auto dw = differentiate(w.w, 1);
  std::vector<cplx> minus(w.w.size()), plus(w.w.size());
  for (std::size_t i = 0; i < minus.size(); ++i) {
    const cplx sq = w.w[i] * w.w[i];
    minus[i] = sq - dw[i];
    plus[i] = sq + dw[i];
  }
  return {w.w.with_values(std::move(minus)), w.w.with_values(std::move(plus))};
}

IsospectralReport isospectral_check(const EigenReport& a, const EigenReport& b, double tol) {
  std::vector<cplx> la, lb;
  for (const auto& e : a.bound_states) la.push_back(e - a.v_inf);
  for (const auto& e : b.bound_states) lb.push_back(e - b.v_inf);

  IsospectralReport r;
  r.both_converged = a.converged && b.converged;
  std::vector<bool> used_a(la.size(), false), used_b(lb.size(), false);
  const std::size_t pairs = std::min(la.size(), lb.size());
  for (std::size_t k = 0; k < pairs; ++k) {
    double best = INFINITY;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < la.size(); ++i) {
      if (used_a[i]) continue;
      for (std::size_t j = 0; j < lb.size(); ++j) {
        if (used_b[j]) continue;
        const double d = std::abs(la[i] - lb[j]);
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    used_a[bi] = used_b[bj] = true;
    r.matched.emplace_back(la[bi], lb[bj]);
    r.max_delta = std::max(r.max_delta, best);
  }
  for (std::size_t i = 0; i < la.size(); ++i) {
    if (!used_a[i]) r.unmatched_a.push_back(la[i]);
  }
  for (std::size_t j = 0; j < lb.size(); ++j) {
    if (!used_b[j]) r.unmatched_b.push_back(lb[j]);
  }
  r.isospectral = la.size() == lb.size() && r.max_delta < tol;
  return r;
}

IsospectralReport isospectral_check(const SchrodingerProblem& a, const SchrodingerProblem& b,
                                    double tol) {
  return isospectral_check(bound_states(a), bound_states(b), tol);
}

bool differs_by_ground_state(const IsospectralReport& r, const EigenReport& a, double tol) {
  if (!r.unmatched_b.empty() || r.unmatched_a.size() != 1 || r.max_delta >= tol) return false;
  if (a.bound_states.empty()) return false;
  const cplx ground = a.bound_states.front() - a.v_inf;
  return std::abs(r.unmatched_a.front() - ground) < tol;
}

}  // namespace kdvlab
