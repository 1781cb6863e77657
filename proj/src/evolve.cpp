#include "kdvlab/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fft.hpp"
#include "kdvlab/errors.hpp"
#include "kdvlab/residual.hpp"

namespace kdvlab {
namespace {

constexpr double kBlowUp = 1e12;

class Stepper {
 public:
  Stepper(std::size_t n, double length, Equation eq, bool dealias)
      : n_(n), eq_(eq), fft_(n), k_(detail::wavenumbers(n, length)), mask_(n, 1.0),
        field_(n), work_(n) {
    if (dealias) {
      const double cutoff = static_cast<double>(n) / 3.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double index = std::abs(k_[j]) * length / (2.0 * std::numbers::pi);
        if (index > cutoff) mask_[j] = 0.0;
      }
    }
    if (n % 2 == 0) mask_[n / 2] = 0.0;
  }

  std::size_t size() const { return n_; }
  const std::vector<double>& k() const { return k_; }

  /// Fourier-space nonlinear term N(u_hat).
  void nonlinear(const std::vector<cplx>& hat, std::vector<cplx>& out) {
    const double up = static_cast<double>(n_);
    for (std::size_t j = 0; j < n_; ++j) work_[j] = hat[j] * (mask_[j] * up);
    fft_.inverse(work_, field_);
    double coefficient = 0.0;
    switch (eq_) {
      case Equation::kdv:
        for (auto& u : field_) u = u * u;
        coefficient = 3.0;  // 6 u u_x = 3 (u^2)_x
        break;
      case Equation::mkdv_defocusing:
      case Equation::mkdv_focusing:
        for (auto& u : field_) u = u * u * u;
        coefficient = eq_ == Equation::mkdv_defocusing ? 2.0 : -2.0;  // +/-6 u^2 u_x
        break;
    }
    fft_.forward(field_, out);
    const double scale = 1.0 / static_cast<double>(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      out[j] *= cplx(0.0, coefficient * k_[j]) * mask_[j] * scale;
    }
  }

  void to_fourier(std::span<const cplx> u, std::vector<cplx>& hat) {
    hat.resize(n_);
    fft_.forward(u, hat);
    const double scale = 1.0 / static_cast<double>(n_);
    for (auto& h : hat) h *= scale;
  }

  std::vector<cplx> to_physical(const std::vector<cplx>& hat) {
    std::vector<cplx> scaled(hat);
    for (auto& h : scaled) h *= static_cast<double>(n_);
    std::vector<cplx> u(n_);
    fft_.inverse(scaled, u);
    return u;
  }

 private:
  std::size_t n_;
  Equation eq_;
  detail::Fft fft_;
  std::vector<double> k_;
  std::vector<double> mask_;
  std::vector<cplx> field_;
  std::vector<cplx> work_;
};

double max_drift(const std::vector<cplx>& series) {
  double d = 0.0;
  for (const auto& v : series) d = std::max(d, std::abs(v - series.front()));
  return d;
}

}  // namespace

Invariants invariants(const SampledProfile& u, Equation eq) {
  if (u.grid().topology != Topology::periodic) {
    throw DomainError("invariants: profile must live on a periodic grid");
  }
  const auto ux = differentiate(u, 1);
  const double h = u.grid().spacing;
  Invariants out{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < u.size(); ++i) {
    const cplx v = u[i];
    out.i1 += v;
    out.i2 += v * v;
    switch (eq) {
      case Equation::kdv: out.i3 += v * v * v + 0.5 * ux[i] * ux[i]; break;
      case Equation::mkdv_defocusing: out.i3 += 0.5 * v * v * v * v + 0.5 * ux[i] * ux[i]; break;
      case Equation::mkdv_focusing: out.i3 += -0.5 * v * v * v * v + 0.5 * ux[i] * ux[i]; break;
    }
  }
  out.i1 *= h;
  out.i2 *= h;
  out.i3 *= h;
  return out;
}

double default_dt(const SampledProfile& u0) {
  const double k_max = std::numbers::pi / u0.grid().spacing;
  const double amp = sup_norm(u0);
  if (amp <= 0.0) return 1e-3;
  return 0.5 / (k_max * amp * 6.0);
}

SampledProfile initial_field(const SolutionSpec& spec, double domain_length, std::size_t n) {
  if (has_pole(spec)) {
    throw DomainError(std::string(family_name(spec.family)) +
                      " has a pole and cannot be evolved on a periodic grid");
  }
  const Grid grid = Grid::periodic(-0.5 * domain_length, domain_length, n);
  std::vector<cplx> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = eval_field(spec, grid.coordinate(i), 0.0);
  const cplx left = eval_field(spec, grid.coordinate(0), 0.0);
  const cplx right = eval_field(spec, grid.coordinate(0) + domain_length, 0.0);
  if (std::abs(left - right) > 1e-8 * std::max(1.0, std::abs(left))) {
    throw DomainError("initial field is not periodic on a domain of length " +
                      std::to_string(domain_length));
  }
  return {grid, std::move(values), 1.0};
}

double period_mismatch(const SolutionSpec& spec, double domain_length) {
  const auto period = natural_period(spec);
  if (!period) return 0.0;
  const double px = *period / spec.alpha;
  const double count = domain_length / px;
  return std::abs(count - std::round(count)) / std::max(1.0, std::round(count));
}

EvolutionResult evolve(const SampledProfile& u0, const EvolutionConfig& cfg,
                       const std::optional<SolutionSpec>& reference) {
  const Grid& grid = u0.grid();
  if (grid.topology != Topology::periodic) throw DomainError("evolve: initial field must be periodic");
  if (cfg.n_modes < 64) throw DomainError("evolve: n_modes must be >= 64");
  if ((cfg.n_modes & (cfg.n_modes - 1)) != 0) throw DomainError("evolve: n_modes must be a power of two");
  if (u0.size() != cfg.n_modes) throw DomainError("evolve: sample count differs from n_modes");
  if (cfg.domain_length > 0.0 &&
      std::abs(grid.length() - cfg.domain_length) > 1e-9 * cfg.domain_length) {
    throw DomainError("evolve: grid length differs from domain_length");
  }
  if (!(cfg.t_end >= 0.0)) throw DomainError("evolve: t_end must be non-negative");

  const double length = grid.length();
  const double dt_request = cfg.dt > 0.0 ? cfg.dt : default_dt(u0);
  const auto steps = cfg.t_end == 0.0
                         ? std::size_t{0}
                         : static_cast<std::size_t>(std::ceil(cfg.t_end / dt_request - 1e-9));
  const double dt = steps == 0 ? 0.0 : cfg.t_end / static_cast<double>(steps);

  Stepper stepper(cfg.n_modes, length, cfg.equation, cfg.dealias);
  const auto& k = stepper.k();
  const std::size_t n = cfg.n_modes;

  // u_t = -u_xxx + N(u)  =>  linear symbol i k^3.
  std::vector<cplx> half_step(n), full_step(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double k3 = k[j] * k[j] * k[j];
    half_step[j] = std::exp(cplx(0.0, k3 * 0.5 * dt));
    full_step[j] = std::exp(cplx(0.0, k3 * dt));
  }

  std::vector<cplx> hat;
  stepper.to_fourier(u0.values(), hat);
  std::vector<cplx> k1(n), k2(n), k3(n), k4(n), stage(n);

  const auto inv0 = invariants(u0, cfg.equation);
  std::vector<cplx> i1{inv0.i1}, i2{inv0.i2}, i3{inv0.i3};

  EvolutionResult result{.final_field = u0, .snapshots = {}};
  result.dt_used = dt;
  result.steps = steps;
  result.i1_initial = inv0.i1;
  result.i2_initial = inv0.i2;
  result.i3_initial = inv0.i3;

  const int snap_count = std::max(cfg.snapshots, 0);
  std::vector<std::size_t> snap_steps;
  for (int s = 1; s <= snap_count; ++s) {
    snap_steps.push_back(static_cast<std::size_t>(
        std::llround(static_cast<double>(steps) * s / snap_count)));
  }
  std::size_t next_snap = 0;

  auto record = [&](std::size_t step) {
    SampledProfile field = u0.with_values(stepper.to_physical(hat));
    const auto inv = invariants(field, cfg.equation);
    i1.push_back(inv.i1);
    i2.push_back(inv.i2);
    i3.push_back(inv.i3);
    while (next_snap < snap_steps.size() && snap_steps[next_snap] == step) {
      result.snapshots.push_back({static_cast<double>(step) * dt, field});
      ++next_snap;
    }
  };
  if (steps == 0) record(0);

  for (std::size_t step = 1; step <= steps; ++step) {
    stepper.nonlinear(hat, k1);
    for (std::size_t j = 0; j < n; ++j) stage[j] = half_step[j] * (hat[j] + 0.5 * dt * k1[j]);
    stepper.nonlinear(stage, k2);
    for (std::size_t j = 0; j < n; ++j) stage[j] = half_step[j] * hat[j] + 0.5 * dt * k2[j];
    stepper.nonlinear(stage, k3);
    for (std::size_t j = 0; j < n; ++j) stage[j] = full_step[j] * hat[j] + dt * half_step[j] * k3[j];
    stepper.nonlinear(stage, k4);
    double peak = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      hat[j] = full_step[j] * hat[j] +
               dt / 6.0 * (full_step[j] * k1[j] + 2.0 * half_step[j] * (k2[j] + k3[j]) + k4[j]);
      peak = std::max(peak, std::abs(hat[j]));
    }
    if (!(peak <= kBlowUp)) {
      std::ostringstream msg;
      msg << "evolve: blow-up at t=" << static_cast<double>(step) * dt << " (step " << step
          << ", max |u_hat_k| = " << peak << "); reduce dt";
      throw NumericalError(msg.str());
    }
    if ((next_snap < snap_steps.size() && snap_steps[next_snap] == step) || step == steps) {
      record(step);
    }
  }

  result.final_field = u0.with_values(stepper.to_physical(hat));
  result.drift_i1 = max_drift(i1);
  result.drift_i2 = max_drift(i2);
  result.drift_i3 = max_drift(i3);

  if (reference) {
    result.has_reference = true;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double e = std::abs(result.final_field[i] -
                                eval_field(*reference, grid.coordinate(i), cfg.t_end));
      sum += e * e;
      result.error_sup = std::max(result.error_sup, e);
    }
    result.error_l2 = std::sqrt(sum * grid.spacing);
  }
  return result;
}

}  // namespace kdvlab
