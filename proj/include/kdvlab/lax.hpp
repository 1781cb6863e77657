#pragma once

// Bound states of H = -d^2/dx^2 + V(x) for complex (PT-symmetric) potentials.
//
// Eigenvalues are reported as E in H psi = E psi. The spectral parameter of
// the KdV Lax operator, written -psi_xx + (lambda + u) psi = 0, is lambda = -E.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kdvlab/catalog.hpp"
#include "kdvlab/profile.hpp"

namespace kdvlab {

using PotentialFn = std::function<cplx(double)>;

/// Dirichlet problem on [-L, L] discretized with n interior points.
struct SchrodingerProblem {
  PotentialFn potential;
  double half_width = 25.0;
  std::size_t n_points = 2000;

  /// Potential sampled on the n interior nodes.
  [[nodiscard]] SampledProfile sample() const;
  /// Same potential on a wider, finer grid.
  [[nodiscard]] SchrodingerProblem refined(double width_factor, std::size_t point_factor) const;

  /// Wraps a sampled potential (mirror-symmetric truncated grid) with
  /// 4-point Lagrange interpolation and constant extension past the window.
  static SchrodingerProblem from_profile(const SampledProfile& v);
};

/// -strength alpha^2 sech^2(alpha x).
PotentialFn sech2_well(double strength, double alpha = 1.0);
/// alpha^2 (-sech^2(alpha x) + i branch sech(alpha x) tanh(alpha x)); the
/// m = 1 member of kdv-cn2-sndn read as a potential.
PotentialFn complex_scarf(double alpha = 1.0, Sign branch = Sign::plus);

struct BoundStateOptions {
  double filter_margin = 1e-6;      // keep Re E < V_inf - margin
  double convergence_tol = 1e-4;    // shooting energies at (L, n) vs (1.25 L, 2 n)
  double decay_tol = 1e-10;         // |V(+-L) - V_inf| relative to max(1, max|V|)
  bool cross_check = true;
};

struct EigenReport {
  std::vector<cplx> bound_states;   // finite-difference eigenvalues, Re ascending
  std::vector<std::optional<cplx>> shooting;  // Numerov shooting refinement per level
  double max_imag = 0.0;
  double v_inf = 0.0;
  bool converged = false;
  std::string method = "fd";
  std::vector<std::string> notes;
};

/// Eigenvalues of the complex-symmetric tridiagonal matrix with diagonal d and
/// off-diagonal e (size d.size() - 1), by implicit QL with complex rotations.
/// Returns nullopt if the iteration breaks down or fails to converge.
std::optional<std::vector<cplx>> symmetric_tridiagonal_eigenvalues(std::vector<cplx> d,
                                                                   std::vector<cplx> e);

/// Refines a bound-state energy by Numerov shooting on the problem's grid,
/// matching log-derivatives at the outer turning point.
std::optional<cplx> shoot(const SchrodingerProblem& p, cplx guess);

/// Throws DomainError when the potential does not settle to a constant at
/// the walls, NumericalError when no eigensolver converges.
EigenReport bound_states(const SchrodingerProblem& p, const BoundStateOptions& opt = {});

struct Superpotential {
  SampledProfile w;
};

/// (V_-, V_+) = (W^2 - W', W^2 + W').
std::pair<SampledProfile, SampledProfile> susy_pair(const Superpotential& w);

struct IsospectralReport {
  std::vector<std::pair<cplx, cplx>> matched;  // (a, b) after subtracting V_inf
  std::vector<cplx> unmatched_a;
  std::vector<cplx> unmatched_b;
  double max_delta = 0.0;
  bool isospectral = false;  // equal counts and max_delta < tol
  bool both_converged = false;
};

IsospectralReport isospectral_check(const EigenReport& a, const EigenReport& b, double tol);
IsospectralReport isospectral_check(const SchrodingerProblem& a, const SchrodingerProblem& b,
                                    double tol);

/// True when b's spectrum equals a's with only a's lowest level removed,
/// the signature of unbroken supersymmetry with a = H_-.
bool differs_by_ground_state(const IsospectralReport& r, const EigenReport& a, double tol);

}  // namespace kdvlab
