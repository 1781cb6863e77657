#include "kdvlab/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "kdvlab/errors.hpp"
#include "kdvlab/residual.hpp"

namespace kdvlab {

SampledProfile miura(const SampledProfile& v, MiuraBranch branch) {
  if (branch.sign != 1 && branch.sign != -1) throw DomainError("miura: sign must be +1 or -1");
  const auto dv = differentiate(v, 1);
  const double alpha = v.scale_alpha();
  const cplx coupling = branch.complexified ? cplx(0.0, branch.sign) : cplx(branch.sign, 0.0);
  const double square = branch.complexified ? -1.0 : 1.0;
  std::vector<cplx> u(v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    u[i] = square * v[i] * v[i] + coupling * alpha * dv[i];
  }
  return v.with_values(std::move(u));
}

std::pair<SampledProfile, double> galilean_shift(const SampledProfile& u, double c, double beta) {
  const double alpha = u.scale_alpha();
  std::vector<cplx> shifted(u.values().begin(), u.values().end());
  for (auto& s : shifted) s += beta * alpha * alpha;
  return {u.with_values(std::move(shifted)), c - 6.0 * beta};
}

SampledProfile pt_transform(const SampledProfile& f) {
  const Grid& g = f.grid();
  if (!g.mirror_symmetric()) throw DomainError("pt_transform: grid is not symmetric about zero");
  std::vector<cplx> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::conj(f[*g.mirror_index(i)]);
  return f.with_values(std::move(out));
}

std::string_view symmetry_name(SymmetryTag tag) {
  switch (tag) {
    case SymmetryTag::pt_even: return "PT_EVEN";
    case SymmetryTag::pt_odd: return "PT_ODD";
    case SymmetryTag::none: return "NONE";
  }
  return "NONE";
}

SymmetryClass classify(const SampledProfile& f, double tol) {
  const auto reflected = pt_transform(f);
  const double norm = l2_norm(f);
  if (norm == 0.0) return {SymmetryTag::pt_even, 0.0};
  const double even = l2_norm(f - reflected) / norm;
  const double odd = l2_norm(f + reflected) / norm;
  if (even < tol && even <= odd) return {SymmetryTag::pt_even, even};
  if (odd < tol) return {SymmetryTag::pt_odd, odd};
  return {SymmetryTag::none, std::min(even, odd)};
}

ColeHopfResult cole_hopf(const SampledProfile& v) {
  const Grid& g = v.grid();
  const std::size_t n = v.size();
  const double dx = g.spacing / v.scale_alpha();
  // Euler-Maclaurin end correction lifts the trapezoid rule to 4th order.
  const auto dv = differentiate(v, 1);
  const double alpha = v.scale_alpha();

  std::vector<cplx> log_psi(n);
  log_psi[0] = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const cplx trapezoid = 0.5 * dx * (v[i - 1] + v[i]);
    const cplx correction = -dx * dx / 12.0 * alpha * (dv[i] - dv[i - 1]);
    log_psi[i] = log_psi[i - 1] + trapezoid + correction;
  }

  // Normalize to psi(0) = 1, interpolating when 0 falls between nodes.
  const double first = g.coordinate(0);
  const double last = g.coordinate(n - 1);
  if (0.0 < first || 0.0 > last) throw DomainError("cole_hopf: grid does not contain zeta = 0");
  const double pos = (0.0 - first) / g.spacing;
  const auto j = std::min(static_cast<std::size_t>(std::floor(pos)), n - 2);
  const double frac = pos - static_cast<double>(j);
  cplx at_zero = log_psi[j];
  if (frac > 1e-12) {
    // Integrate v (linearly interpolated) over the partial cell.
    const cplx v0 = v[j];
    const cplx vz = v[j] + frac * (v[j + 1] - v[j]);
    at_zero += 0.5 * frac * dx * (v0 + vz);
  }
  double max_re = -INFINITY;
  for (auto& l : log_psi) {
    l -= at_zero;
    max_re = std::max(max_re, l.real());
  }

  ColeHopfResult out{v, 0.0};
  constexpr double kOverflowGuard = 600.0;
  if (max_re > kOverflowGuard) {
    out.log_scale = max_re;
    for (auto& l : log_psi) l -= max_re;
  }
  std::vector<cplx> psi(n);
  for (std::size_t i = 0; i < n; ++i) psi[i] = std::exp(log_psi[i]);
  out.psi = v.with_values(std::move(psi));
  return out;
}

}  // namespace kdvlab
