#pragma once

// Traveling-wave residual oracle.
//
// For a profile w(zeta) (already divided by alpha^2 for KdV, alpha for mKdV)
// the reduced equations are
//   KdV:              -c w' - 6 w w'    + w''' = 0
//   mKdV defocusing:  -c w' - 6 w^2 w'  + w''' = 0
//   mKdV focusing:    -c w' + 6 w^2 w'  + w''' = 0
// The third-order form is used so that no integration constant is needed.

#include <vector>

#include "kdvlab/profile.hpp"

namespace kdvlab {

enum class DerivativeMethod {
  automatic,          // spectral on periodic grids, finite differences otherwise
  spectral,           // periodic grids only
  finite_difference,  // 8th-order stencils; wraps around on periodic grids
};

/// d^order/dx^order of the samples with respect to the grid coordinate.
SampledProfile differentiate(const SampledProfile& p, int order,
                             DerivativeMethod method = DerivativeMethod::automatic);

/// Weights for the derivative of the given order at x0 from nodes x
/// (Fornberg's recursion).
std::vector<double> fd_weights(double x0, const std::vector<double>& x, int order);

struct ResidualReport {
  double sup_norm = 0.0;
  double l2_norm = 0.0;
  /// sup_norm over the sup-norm of the largest of the three residual terms.
  double relative = 0.0;
  double c_used = 0.0;
  /// Pole exclusion radius applied to the norms (0 when unmasked).
  double mask = 0.0;
};

/// Sampled residual of the reduced equation at reduced velocity c.
ResidualReport traveling_residual(const SampledProfile& p, double c, Equation eq,
                                  DerivativeMethod method = DerivativeMethod::automatic);

/// Pointwise residual samples (nondimensional), for diagnostics.
SampledProfile residual_samples(const SampledProfile& p, double c, Equation eq,
                                DerivativeMethod method = DerivativeMethod::automatic);

struct ScanPoint {
  double c;
  double relative;
};

struct VelocityScan {
  double c_best = 0.0;
  ResidualReport report;
  std::vector<ScanPoint> scan;
  /// Smallest relative residual seen anywhere on the scan or at c_best.
  double min_relative = 0.0;
};

/// Scans c over [c_min, c_max] and refines with the exact least-squares
/// minimizer c = Re<w', rest> / <w', w'> (clamped to the scan range).
/// Throws NumericalError when w' vanishes identically.
VelocityScan velocity_scan(const SampledProfile& p, Equation eq, double c_min, double c_max,
                           int steps, DerivativeMethod method = DerivativeMethod::automatic);

}  // namespace kdvlab
