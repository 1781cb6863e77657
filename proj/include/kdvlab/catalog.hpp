#pragma once

// Closed-form traveling-wave families of KdV and defocusing mKdV.
//
// Every family is written in the comoving coordinate zeta = alpha (x - c alpha^2 t).
// KdV fields carry amplitude units alpha^2, mKdV fields units alpha.

#include <array>
#include <optional>
#include <string_view>

#include "kdvlab/profile.hpp"

namespace kdvlab {

enum class Family {
  kdv_cnoidal,       // A cn^2
  kdv_sech2,         // A sech^2 (the m = 1 cnoidal wave, kept separate)
  kdv_cn2_sndn,      // A cn^2 + i B sn dn
  kdv_cn2_sncn,      // A cn^2 + i B sn cn + beta alpha^2
  kdv_cosech,        // A cosech^2 + B cosech coth            (singular)
  mkdv_sn_cn,        // A sn + i B cn
  mkdv_sn_dn,        // A sn + i B dn
  mkdv_sn,           // A sn
  mkdv_icn,          // i B cn
  mkdv_cosech_coth,  // A cosech + B coth                     (singular)
};

inline constexpr std::array<Family, 10> kAllFamilies = {
    Family::kdv_cnoidal, Family::kdv_sech2,  Family::kdv_cn2_sndn, Family::kdv_cn2_sncn,
    Family::kdv_cosech,  Family::mkdv_sn_cn, Family::mkdv_sn_dn,   Family::mkdv_sn,
    Family::mkdv_icn,    Family::mkdv_cosech_coth};

/// Kebab-case identifier used on the command line and in JSON.
std::string_view family_name(Family f);
Family parse_family(std::string_view name);

enum class Sign : int { minus = -1, plus = 1 };

inline double sign_value(Sign s) { return static_cast<double>(static_cast<int>(s)); }
Sign parse_sign(std::string_view text);

/// Which velocity the sn sum family (mkdv_sn) is assigned.
/// corrected: c = -(1 + m), the value the residual oracle accepts.
/// paper:     c = 5 (m - 5), as printed in the source text.
enum class VelocityConvention { corrected, paper };

struct SolutionSpec {
  Family family = Family::kdv_cn2_sndn;
  double alpha = 1.0;
  double m = 1.0;
  double beta = 0.0;             // Galilean offset, kdv_cn2_sncn only
  Sign branch = Sign::plus;      // the +/- on the imaginary (or B) amplitude
  Sign amp_sign = Sign::plus;    // overall +/- on A for mKdV families
  VelocityConvention velocity = VelocityConvention::corrected;
};

struct ResolvedParams {
  double A = 0.0;       // real-part amplitude (alpha^2 for KdV, alpha for mKdV)
  double B = 0.0;       // imaginary / second amplitude, same units
  double c = 0.0;       // reduced velocity in zeta = alpha (x - c alpha^2 t)
  double offset = 0.0;  // additive constant beta alpha^2
  Equation equation = Equation::kdv;
};

/// Applies the family's parameter constraints. Throws DomainError for
/// alpha <= 0 or m outside [0, 1], SpecError for beta on a non-offset family.
ResolvedParams resolve(const SolutionSpec& spec);

bool is_kdv_family(Family f);
bool is_singular(Family f);
/// True for the plus branch of the singular families. Their minus branch is
/// the regular -A tanh(zeta/2) (mKdV) or -A / (2 cosh^2(zeta/2)) (KdV).
bool has_pole(const SolutionSpec& spec);
/// True when the family does not depend on m (sech2 and the singular forms).
bool ignores_modulus(Family f);
/// Whether the family is defined at this m as a soliton (m == 1) or periodic wave.
bool is_localized(const SolutionSpec& spec);

/// Fundamental period in zeta for periodic members, nullopt for localized ones.
std::optional<double> natural_period(const SolutionSpec& spec);

/// Closed form at comoving coordinate zeta. Throws PoleError at zeta == 0 for
/// singular families.
cplx eval_profile(const SolutionSpec& spec, double zeta);
/// Same closed form with caller-supplied constants, e.g. deliberately
/// perturbed ones.
cplx eval_profile(const SolutionSpec& spec, const ResolvedParams& params, double zeta);

/// eval_profile at zeta = alpha (x - c alpha^2 t).
cplx eval_field(const SolutionSpec& spec, double x, double t);

/// |field|^2.
double intensity(const SolutionSpec& spec, double zeta);

/// Default pole exclusion radius (in zeta) for singular families.
inline constexpr double kDefaultPoleMask = 0.15;

/// Samples eval_profile over a zeta grid; singular families get a pole mask
/// and must not place a node on zeta == 0.
SampledProfile sample_profile(const SolutionSpec& spec, const Grid& zeta_grid,
                              double pole_mask = kDefaultPoleMask);

/// Default residual grid: one fundamental period with n points for periodic
/// members, |zeta| <= 20 at h = 0.01 otherwise. Members with a pole avoid the
/// origin and use h = 0.0025.
Grid natural_grid(const SolutionSpec& spec, std::size_t n_periodic = 256);

/// a(zeta) + sign * b(zeta) on the caller's grid. Both specs must share
/// alpha and m.
SampledProfile superpose(const SolutionSpec& a, const SolutionSpec& b, Sign sign,
                         const Grid& zeta_grid);

}  // namespace kdvlab
