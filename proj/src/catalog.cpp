#include "kdvlab/catalog.hpp"

#include <cmath>
#include <string>

#include "kdvlab/elliptic.hpp"
#include "kdvlab/errors.hpp"

namespace kdvlab {
namespace {

constexpr double kLocalizedCutoff = 1e-10;

struct NamedFamily {
  Family family;
  std::string_view name;
};

constexpr std::array<NamedFamily, 10> kNames = {{
    {Family::kdv_cnoidal, "kdv-cnoidal"},
    {Family::kdv_sech2, "kdv-sech2"},
    {Family::kdv_cn2_sndn, "kdv-cn2-sndn"},
    {Family::kdv_cn2_sncn, "kdv-cn2-sncn"},
    {Family::kdv_cosech, "kdv-cosech"},
    {Family::mkdv_sn_cn, "mkdv-sn-cn"},
    {Family::mkdv_sn_dn, "mkdv-sn-dn"},
    {Family::mkdv_sn, "mkdv-sn"},
    {Family::mkdv_icn, "mkdv-icn"},
    {Family::mkdv_cosech_coth, "mkdv-cosech-coth"},
}};

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& entry : kNames) {
    if (entry.family == f) return entry.name;
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const auto& entry : kNames) {
    if (entry.name == name) return entry.family;
  }
  throw DomainError("unknown family '" + std::string(name) + "'");
}

Sign parse_sign(std::string_view text) {
  if (text == "+" || text == "+1" || text == "1" || text == "plus") return Sign::plus;
  if (text == "-" || text == "-1" || text == "minus") return Sign::minus;
  throw DomainError("sign must be + or -, got '" + std::string(text) + "'");
}

bool is_kdv_family(Family f) {
  switch (f) {
    case Family::kdv_cnoidal:
    case Family::kdv_sech2:
    case Family::kdv_cn2_sndn:
    case Family::kdv_cn2_sncn:
    case Family::kdv_cosech:
      return true;
    default:
      return false;
  }
}

bool is_singular(Family f) {
  return f == Family::kdv_cosech || f == Family::mkdv_cosech_coth;
}

bool has_pole(const SolutionSpec& spec) {
  return is_singular(spec.family) && spec.branch == Sign::plus;
}

bool ignores_modulus(Family f) {
  return f == Family::kdv_sech2 || is_singular(f);
}

ResolvedParams resolve(const SolutionSpec& spec) {
  if (!(spec.alpha > 0.0) || !std::isfinite(spec.alpha)) {
    throw DomainError("alpha must be positive and finite");
  }
  if (!(spec.m >= 0.0 && spec.m <= 1.0)) {
    throw DomainError("elliptic parameter m=" + std::to_string(spec.m) + " outside [0, 1]");
  }
  if (spec.beta != 0.0 && spec.family != Family::kdv_cn2_sncn) {
    throw SpecError("beta is only defined for kdv-cn2-sncn, not " +
                    std::string(family_name(spec.family)));
  }
  if (!std::isfinite(spec.beta)) throw DomainError("beta must be finite");

  const double a = spec.alpha;
  const double a2 = a * a;
  const double m = spec.m;
  const double rm = std::sqrt(m);
  const double branch = sign_value(spec.branch);
  const double amp = sign_value(spec.amp_sign);

  ResolvedParams r;
  switch (spec.family) {
    case Family::kdv_cnoidal:
      r.A = -2.0 * m * a2;
      r.c = 4.0 * (2.0 * m - 1.0);
      break;
    case Family::kdv_sech2:
      r.A = -2.0 * a2;
      r.c = 4.0;
      break;
    case Family::kdv_cn2_sndn:
      r.A = -m * a2;
      r.B = branch * rm * a2;
      r.c = 2.0 * m - 1.0;
      break;
    case Family::kdv_cn2_sncn:
      r.A = -m * a2;
      r.B = branch * r.A;
      r.c = (5.0 * m - 4.0) - 6.0 * spec.beta;
      r.offset = spec.beta * a2;
      break;
    case Family::kdv_cosech:
      r.A = a2;
      r.B = branch * a2;
      r.c = 1.0;
      break;
    case Family::mkdv_sn_cn:
      r.A = amp * 0.5 * rm * a;
      r.B = branch * r.A;
      r.c = 0.5 * m - 1.0;
      break;
    case Family::mkdv_sn_dn:
      r.A = amp * 0.5 * rm * a;
      r.B = branch * 0.5 * a;
      r.c = 0.5 - m;
      break;
    case Family::mkdv_sn:
      r.A = amp * rm * a;
      r.c = spec.velocity == VelocityConvention::paper ? 5.0 * (m - 5.0) : -(1.0 + m);
      break;
    case Family::mkdv_icn:
      r.B = branch * rm * a;
      r.c = 2.0 * m - 1.0;
      break;
    case Family::mkdv_cosech_coth:
      r.A = amp * 0.5 * a;
      r.B = branch * r.A;
      r.c = -0.5;
      break;
  }
  r.equation = is_kdv_family(spec.family) ? Equation::kdv : Equation::mkdv_defocusing;
  return r;
}

bool is_localized(const SolutionSpec& spec) { return !natural_period(spec).has_value(); }

std::optional<double> natural_period(const SolutionSpec& spec) {
  if (ignores_modulus(spec.family) || spec.m > 1.0 - kLocalizedCutoff) return std::nullopt;
  using elliptic::PeriodKind;
  switch (spec.family) {
    case Family::kdv_cnoidal:
    case Family::kdv_cn2_sncn:
      return elliptic::period(PeriodKind::cn2, spec.m);
    case Family::kdv_cn2_sndn:
      return elliptic::period(PeriodKind::sn_dn, spec.m);
    default:
      return elliptic::period(PeriodKind::sn, spec.m);
  }
}

cplx eval_profile(const SolutionSpec& spec, double zeta) {
  return eval_profile(spec, resolve(spec), zeta);
}

cplx eval_profile(const SolutionSpec& spec, const ResolvedParams& r, double zeta) {
  if (is_singular(spec.family)) {
    // A cosech + B coth with B = -A is the regular -A tanh(zeta/2); divided by
    // sinh zeta it is -A / (2 cosh^2(zeta/2)).
    if (r.B == -r.A) {
      if (spec.family == Family::kdv_cosech) {
        const double ch = std::cosh(0.5 * zeta);
        return {-0.5 * r.A / (ch * ch), 0.0};
      }
      return {-r.A * std::tanh(0.5 * zeta), 0.0};
    }
    if (zeta == 0.0) {
      throw PoleError(std::string(family_name(spec.family)) + " has a pole at zeta=0");
    }
    // With B = A the pair is A coth(zeta/2), which avoids cancelling two
    // 1/zeta terms.
    const double pair = r.B == r.A ? r.A / std::tanh(0.5 * zeta)
                                   : r.A / std::sinh(zeta) + r.B / std::tanh(zeta);
    if (spec.family == Family::kdv_cosech) return {pair / std::sinh(zeta), 0.0};
    return {pair, 0.0};
  }
  if (spec.family == Family::kdv_sech2) {
    const double sech = 1.0 / std::cosh(zeta);
    return {r.A * sech * sech, 0.0};
  }

  const auto [sn, cn, dn] = elliptic::jacobi(zeta, spec.m);
  switch (spec.family) {
    case Family::kdv_cnoidal: return {r.A * cn * cn, 0.0};
    case Family::kdv_cn2_sndn: return {r.A * cn * cn, r.B * sn * dn};
    case Family::kdv_cn2_sncn: return {r.A * cn * cn + r.offset, r.B * sn * cn};
    case Family::mkdv_sn_cn: return {r.A * sn, r.B * cn};
    case Family::mkdv_sn_dn: return {r.A * sn, r.B * dn};
    case Family::mkdv_sn: return {r.A * sn, 0.0};
    case Family::mkdv_icn: return {0.0, r.B * cn};
    default: break;
  }
  return {0.0, 0.0};
}

cplx eval_field(const SolutionSpec& spec, double x, double t) {
  const ResolvedParams r = resolve(spec);
  const double a = spec.alpha;
  return eval_profile(spec, a * (x - r.c * a * a * t));
}

double intensity(const SolutionSpec& spec, double zeta) {
  return std::norm(eval_profile(spec, zeta));
}

SampledProfile sample_profile(const SolutionSpec& spec, const Grid& zeta_grid, double pole_mask) {
  resolve(spec);
  std::vector<cplx> values(zeta_grid.size);
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = eval_profile(spec, zeta_grid.coordinate(i));
  }
  const double mask = has_pole(spec) ? pole_mask : 0.0;
  return {zeta_grid, std::move(values), spec.alpha, mask};
}

Grid natural_grid(const SolutionSpec& spec, std::size_t n_periodic) {
  if (const auto p = natural_period(spec)) return Grid::periodic(-0.5 * *p, *p, n_periodic);
  // Eighth-order stencils next to the pole mask need a finer step to keep the
  // truncation error of 1/zeta^2 terms below the residual threshold.
  if (has_pole(spec)) return Grid::symmetric_window(20.0, 0.0025, true);
  return Grid::symmetric_window(20.0, 0.01, false);
}

SampledProfile superpose(const SolutionSpec& a, const SolutionSpec& b, Sign sign,
                         const Grid& zeta_grid) {
  if (a.alpha != b.alpha) throw SpecError("superpose: specs have different alpha");
  const bool m_matters = !ignores_modulus(a.family) && !ignores_modulus(b.family);
  if (m_matters && a.m != b.m) throw SpecError("superpose: specs have different m");
  const auto pa = sample_profile(a, zeta_grid);
  const auto pb = sample_profile(b, zeta_grid);
  return sign == Sign::plus ? pa + pb : pa - pb;
}

}  // namespace kdvlab
