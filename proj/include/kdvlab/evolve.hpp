#pragma once

// Pseudospectral integration of KdV / mKdV for complex fields on a periodic
// domain: integrating factor for the dispersive term, classical RK4 for the
// nonlinear term, two-thirds dealiasing.

#include <optional>
#include <vector>

#include "kdvlab/catalog.hpp"
#include "kdvlab/profile.hpp"

namespace kdvlab {

struct EvolutionConfig {
  std::size_t n_modes = 1024;
  double domain_length = 0.0;  // x-extent of the periodic domain
  double dt = 0.0;             // <= 0 selects the default step
  double t_end = 1.0;
  Equation equation = Equation::kdv;
  bool dealias = true;
  int snapshots = 10;
};

struct Snapshot {
  double t;
  SampledProfile field;
};

struct EvolutionResult {
  SampledProfile final_field;
  bool has_reference = false;
  double error_l2 = 0.0;   // sqrt(dx sum |u - u_ref|^2) at t_end
  double error_sup = 0.0;
  double drift_i1 = 0.0;   // max_t |I_k(t) - I_k(0)|
  double drift_i2 = 0.0;
  double drift_i3 = 0.0;
  cplx i1_initial{}, i2_initial{}, i3_initial{};
  double dt_used = 0.0;
  std::size_t steps = 0;
  std::vector<Snapshot> snapshots;
};

struct Invariants {
  cplx i1;
  cplx i2;
  cplx i3;
};

/// Conserved densities by trapezoidal quadrature on the periodic grid.
///   KdV:  int u, int u^2, int (u^3 + u_x^2 / 2)
///   mKdV: int v, int v^2, int (+/- v^4 / 2 + v_x^2 / 2)   (+ defocusing)
Invariants invariants(const SampledProfile& u, Equation eq);

/// Default step 0.5 / (6 k_max max|u0|) for the nonlinear CFL.
double default_dt(const SampledProfile& u0);

/// Samples eval_field(spec, x, 0) on [-L/2, L/2) with n points (x-grid).
SampledProfile initial_field(const SolutionSpec& spec, double domain_length, std::size_t n);

/// Integrates u0 to cfg.t_end. When reference is given, errors are measured
/// against eval_field(reference, x, t_end). Throws NumericalError on blow-up
/// (any normalized Fourier amplitude above 1e12).
EvolutionResult evolve(const SampledProfile& u0, const EvolutionConfig& cfg,
                       const std::optional<SolutionSpec>& reference = std::nullopt);

/// Relative mismatch between the domain length and the nearest integer number
/// of natural periods (in x); 0 for localized families.
double period_mismatch(const SolutionSpec& spec, double domain_length);

}  // namespace kdvlab
