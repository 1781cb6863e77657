#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace kdvlab {

using cplx = std::complex<double>;

/// Which PDE a profile is tested against.
///   kdv:              u_t - 6 u u_x + u_xxx = 0
///   mkdv_defocusing:  v_t - 6 v^2 v_x + v_xxx = 0
///   mkdv_focusing:    v_t + 6 v^2 v_x + v_xxx = 0
enum class Equation { kdv, mkdv_defocusing, mkdv_focusing };

std::string_view equation_name(Equation eq);
Equation parse_equation(std::string_view name);

enum class Topology { periodic, truncated };

/// Uniform 1-D grid. Periodic grids do not repeat the endpoint, so
/// length = spacing * size. Truncated grids cover [origin, origin + spacing*(size-1)].
struct Grid {
  double origin = 0.0;
  double spacing = 1.0;
  std::size_t size = 0;
  Topology topology = Topology::periodic;

  [[nodiscard]] double coordinate(std::size_t i) const {
    return origin + spacing * static_cast<double>(i);
  }
  [[nodiscard]] double length() const;
  [[nodiscard]] std::vector<double> coordinates() const;

  /// [start, start + length) with n points.
  static Grid periodic(double start, double length, std::size_t n);
  /// Closed window [lo, hi] with n points.
  static Grid truncated(double lo, double hi, std::size_t n);
  /// Symmetric window |x| <= half_width with step h. When avoid_origin is set
  /// the nodes sit at (j + 1/2) h so no sample lands on x = 0.
  static Grid symmetric_window(double half_width, double h, bool avoid_origin);

  /// Index j of the sample at -x_i, or nullopt when the grid is not mirror
  /// symmetric about the origin.
  [[nodiscard]] std::optional<std::size_t> mirror_index(std::size_t i) const;
  [[nodiscard]] bool mirror_symmetric() const;
};

/// Complex field sampled on a uniform grid.
///
/// scale_alpha records the inverse length used to nondimensionalize the
/// samples (KdV: u = alpha^2 w, mKdV: v = alpha w). pole_mask excludes
/// samples with |x| < pole_mask from norms; it is 0 for regular profiles.
class SampledProfile {
 public:
  static constexpr std::size_t kMinSamples = 16;

  SampledProfile(Grid grid, std::vector<cplx> values, double scale_alpha = 1.0,
                 double pole_mask = 0.0);

  [[nodiscard]] const Grid& grid() const { return grid_; }
  [[nodiscard]] std::span<const cplx> values() const { return values_; }
  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] const cplx& operator[](std::size_t i) const { return values_[i]; }
  [[nodiscard]] double scale_alpha() const { return scale_alpha_; }
  [[nodiscard]] double pole_mask() const { return pole_mask_; }
  [[nodiscard]] bool kept(std::size_t i) const;

  /// Same grid, scale and mask with new samples.
  [[nodiscard]] SampledProfile with_values(std::vector<cplx> values) const;
  [[nodiscard]] SampledProfile with_mask(double pole_mask) const;

 private:
  Grid grid_;
  std::vector<cplx> values_;
  double scale_alpha_;
  double pole_mask_;
};

/// sqrt(h * sum |f|^2) over kept samples.
double l2_norm(const SampledProfile& p);
/// max |f| over kept samples.
double sup_norm(const SampledProfile& p);

/// Reads a truncated window whose end samples agree within tol as one period
/// of a periodic profile, dropping the closing sample. Localized profiles that
/// settle to the same constant at both ends can then be differentiated
/// spectrally.
SampledProfile close_periodic(const SampledProfile& p, double tol);

SampledProfile operator+(const SampledProfile& a, const SampledProfile& b);
SampledProfile operator-(const SampledProfile& a, const SampledProfile& b);
SampledProfile operator*(cplx s, const SampledProfile& a);

}  // namespace kdvlab
