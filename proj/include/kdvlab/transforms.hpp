#pragma once

// Miura, Cole-Hopf and Galilean maps between KdV and mKdV profiles, and the
// combined parity / time-reversal (PT) action on traveling profiles.

#include <string_view>
#include <utility>

#include "kdvlab/profile.hpp"

namespace kdvlab {

/// u = v^2 +/- v_x, or u = -v^2 +/- i v_x when complexified (the form that
/// maps focusing-mKdV solutions to KdV).
struct MiuraBranch {
  int sign = +1;
  bool complexified = false;
};

/// Applies the Miura map. v is sampled over zeta with scale alpha, so
/// v_x = alpha dv/dzeta and the result again has scale alpha (KdV units).
SampledProfile miura(const SampledProfile& v, MiuraBranch branch);

/// (u + beta alpha^2, c - 6 beta).
std::pair<SampledProfile, double> galilean_shift(const SampledProfile& u, double c, double beta);

/// f(zeta) -> conj(f(-zeta)). Throws DomainError on grids that are not
/// mirror symmetric about zeta = 0.
SampledProfile pt_transform(const SampledProfile& f);

enum class SymmetryTag { pt_even, pt_odd, none };

std::string_view symmetry_name(SymmetryTag tag);

struct SymmetryClass {
  SymmetryTag tag = SymmetryTag::none;
  /// Smaller of ||f - PT f|| and ||f + PT f||, relative to ||f||.
  double deviation = 0.0;
};

inline constexpr double kDefaultSymmetryTolerance = 1e-10;

SymmetryClass classify(const SampledProfile& f, double tol = kDefaultSymmetryTolerance);

struct ColeHopfResult {
  /// psi normalized to psi(0) = 1 (times exp(-log_scale) when rescaled).
  SampledProfile psi;
  /// Amount subtracted from log psi to avoid overflow; 0 when none was needed.
  double log_scale = 0.0;
};

/// psi = exp(int_0^x v dx') by cumulative end-corrected trapezoidal
/// quadrature, so that psi_xx / psi = v^2 + v_x.
ColeHopfResult cole_hopf(const SampledProfile& v);

}  // namespace kdvlab
