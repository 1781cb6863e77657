#include "kdvlab/profile.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kdvlab/errors.hpp"

namespace kdvlab {

std::string_view equation_name(Equation eq) {
  switch (eq) {
    case Equation::kdv: return "kdv";
    case Equation::mkdv_defocusing: return "mkdv-defocusing";
    case Equation::mkdv_focusing: return "mkdv-focusing";
  }
  return "kdv";
}

Equation parse_equation(std::string_view name) {
  if (name == "kdv") return Equation::kdv;
  if (name == "mkdv-defocusing" || name == "mkdv") return Equation::mkdv_defocusing;
  if (name == "mkdv-focusing") return Equation::mkdv_focusing;
  throw DomainError("unknown equation '" + std::string(name) + "'");
}

double Grid::length() const {
  if (topology == Topology::periodic) return spacing * static_cast<double>(size);
  return size == 0 ? 0.0 : spacing * static_cast<double>(size - 1);
}

std::vector<double> Grid::coordinates() const {
  std::vector<double> x(size);
  for (std::size_t i = 0; i < size; ++i) x[i] = coordinate(i);
  return x;
}

Grid Grid::periodic(double start, double length, std::size_t n) {
  if (!(length > 0.0) || n == 0) throw DomainError("periodic grid needs length > 0 and n > 0");
  return {start, length / static_cast<double>(n), n, Topology::periodic};
}

Grid Grid::truncated(double lo, double hi, std::size_t n) {
  if (!(hi > lo) || n < 2) throw DomainError("truncated grid needs hi > lo and n >= 2");
  return {lo, (hi - lo) / static_cast<double>(n - 1), n, Topology::truncated};
}

Grid Grid::symmetric_window(double half_width, double h, bool avoid_origin) {
  if (!(half_width > 0.0) || !(h > 0.0)) throw DomainError("window needs positive width and step");
  if (avoid_origin) {
    const auto half = static_cast<std::size_t>(std::floor(half_width / h - 0.5 + 1e-9)) + 1;
    return {-(static_cast<double>(half) - 0.5) * h, h, 2 * half, Topology::truncated};
  }
  const auto half = static_cast<std::size_t>(std::floor(half_width / h + 1e-9));
  return {-static_cast<double>(half) * h, h, 2 * half + 1, Topology::truncated};
}

std::optional<std::size_t> Grid::mirror_index(std::size_t i) const {
  // x_i = o + i h, -x_i = o + j h  =>  j = -2o/h - i.
  const double shift = -2.0 * origin / spacing;
  const double rounded = std::round(shift);
  if (std::abs(shift - rounded) > 1e-9 * std::max(1.0, std::abs(shift))) return std::nullopt;
  const auto n = static_cast<long long>(size);
  long long j = static_cast<long long>(rounded) - static_cast<long long>(i);
  if (topology == Topology::periodic) {
    j %= n;
    if (j < 0) j += n;
    return static_cast<std::size_t>(j);
  }
  if (j < 0 || j >= n) return std::nullopt;
  return static_cast<std::size_t>(j);
}

bool Grid::mirror_symmetric() const {
  if (size == 0) return false;
  if (topology == Topology::periodic) return mirror_index(0).has_value();
  const auto j = mirror_index(0);
  return j.has_value() && *j == size - 1;
}

SampledProfile::SampledProfile(Grid grid, std::vector<cplx> values, double scale_alpha,
                               double pole_mask)
    : grid_(grid), values_(std::move(values)), scale_alpha_(scale_alpha), pole_mask_(pole_mask) {
  if (values_.size() < kMinSamples) {
    throw DomainError("sampled profile needs at least 16 samples, got " +
                      std::to_string(values_.size()));
  }
  if (values_.size() != grid_.size) throw DomainError("sample count does not match grid size");
  if (!(grid_.spacing > 0.0)) throw DomainError("grid spacing must be positive");
  if (!(scale_alpha_ > 0.0)) throw DomainError("scale alpha must be positive");
  if (pole_mask_ < 0.0) throw DomainError("pole mask radius must be non-negative");
}

bool SampledProfile::kept(std::size_t i) const {
  return pole_mask_ <= 0.0 || std::abs(grid_.coordinate(i)) >= pole_mask_;
}

SampledProfile SampledProfile::with_values(std::vector<cplx> values) const {
  return {grid_, std::move(values), scale_alpha_, pole_mask_};
}

SampledProfile SampledProfile::with_mask(double pole_mask) const {
  return {grid_, values_, scale_alpha_, pole_mask};
}

SampledProfile close_periodic(const SampledProfile& p, double tol) {
  const Grid& g = p.grid();
  if (g.topology != Topology::truncated) throw DomainError("close_periodic needs a truncated grid");
  const std::size_t n = p.size();
  if (std::abs(p[0] - p[n - 1]) > tol) {
    throw DomainError("window ends differ by more than the closing tolerance");
  }
  std::vector<cplx> values(p.values().begin(), p.values().end() - 1);
  return {Grid::periodic(g.origin, g.spacing * static_cast<double>(n - 1), n - 1), std::move(values),
          p.scale_alpha(), p.pole_mask()};
}

double l2_norm(const SampledProfile& p) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.kept(i)) sum += std::norm(p[i]);
  }
  return std::sqrt(sum * p.grid().spacing);
}

double sup_norm(const SampledProfile& p) {
  double best = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.kept(i)) best = std::max(best, std::abs(p[i]));
  }
  return best;
}

namespace {

void require_same_grid(const SampledProfile& a, const SampledProfile& b) {
  const auto& ga = a.grid();
  const auto& gb = b.grid();
  if (ga.size != gb.size || ga.topology != gb.topology ||
      std::abs(ga.origin - gb.origin) > 1e-12 * std::max(1.0, std::abs(ga.origin)) ||
      std::abs(ga.spacing - gb.spacing) > 1e-12 * ga.spacing) {
    throw SpecError("profiles live on different grids");
  }
}

}  // namespace

SampledProfile operator+(const SampledProfile& a, const SampledProfile& b) {
  require_same_grid(a, b);
  std::vector<cplx> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return a.with_values(std::move(out)).with_mask(std::max(a.pole_mask(), b.pole_mask()));
}

SampledProfile operator-(const SampledProfile& a, const SampledProfile& b) {
  return a + cplx(-1.0) * b;
}

SampledProfile operator*(cplx s, const SampledProfile& a) {
  std::vector<cplx> out(a.values().begin(), a.values().end());
  for (auto& v : out) v *= s;
  return a.with_values(std::move(out));
}

}  // namespace kdvlab
