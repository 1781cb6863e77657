#include <doctest.h>

#include "kdvlab/catalog.hpp"
#include "kdvlab/elliptic.hpp"
#include "kdvlab/errors.hpp"
#include "oracles.hpp"

using namespace kdvlab;
using oracle::sech;

namespace {

SolutionSpec make(Family f, double m = 1.0, double alpha = 1.0, Sign branch = Sign::plus,
                  Sign amp = Sign::plus, double beta = 0.0) {
  SolutionSpec s;
  s.family = f;
  s.m = m;
  s.alpha = alpha;
  s.branch = branch;
  s.amp_sign = amp;
  s.beta = beta;
  return s;
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("family names round-trip") {
  for (Family f : kAllFamilies) CHECK(parse_family(family_name(f)) == f);
  CHECK(family_name(Family::kdv_cn2_sndn) == "kdv-cn2-sndn");
  CHECK_THROWS_AS(parse_family("kdv-unknown"), DomainError);
}

TEST_CASE("resolve: complex cnoidal pair") {
  const auto r = resolve(make(Family::kdv_cn2_sndn, 0.25));
  CHECK(r.A == doctest::Approx(-0.25));
  CHECK(r.B == doctest::Approx(0.5));
  CHECK(r.c == doctest::Approx(-0.5));
  CHECK(r.equation == Equation::kdv);
}

TEST_CASE("resolve: mKdV sn + i cn at m = 1") {
  const auto r = resolve(make(Family::mkdv_sn_cn, 1.0));
  CHECK(r.A == doctest::Approx(0.5));
  CHECK(r.B == doctest::Approx(0.5));
  CHECK(r.c == doctest::Approx(-0.5));
  CHECK(r.equation == Equation::mkdv_defocusing);
}

TEST_CASE("resolve: Galilean offset family") {
  const auto r = resolve(make(Family::kdv_cn2_sncn, 1.0, 1.0, Sign::minus, Sign::plus, 0.25));
  CHECK(r.A == doctest::Approx(-1.0));
  CHECK(r.B == doctest::Approx(1.0));
  CHECK(r.c == doctest::Approx(-0.5));
  CHECK(r.offset == doctest::Approx(0.25));
}

TEST_CASE("resolve: sn family velocity conventions") {
  auto s = make(Family::mkdv_sn, 1.0);
  CHECK(resolve(s).c == doctest::Approx(-2.0));
  s.m = 0.5;
  s.velocity = VelocityConvention::paper;
  CHECK(resolve(s).c == doctest::Approx(-22.5));
}

TEST_CASE("resolve: velocity constraints per family") {
  for (double m : {0.05, 0.3, 0.8}) {
    CHECK(resolve(make(Family::kdv_cnoidal, m)).c == doctest::Approx(4.0 * (2.0 * m - 1.0)));
    CHECK(resolve(make(Family::kdv_cn2_sndn, m)).c == doctest::Approx(2.0 * m - 1.0));
    CHECK(resolve(make(Family::mkdv_sn_cn, m)).c == doctest::Approx(m / 2.0 - 1.0));
    CHECK(resolve(make(Family::mkdv_sn_dn, m)).c == doctest::Approx(0.5 - m));
    CHECK(resolve(make(Family::mkdv_icn, m)).c == doctest::Approx(2.0 * m - 1.0));
  }
  CHECK(resolve(make(Family::kdv_sech2)).c == doctest::Approx(4.0));
  CHECK(resolve(make(Family::kdv_cosech)).c == doctest::Approx(1.0));
  CHECK(resolve(make(Family::mkdv_cosech_coth)).c == doctest::Approx(-0.5));
}

TEST_CASE("resolve: amplitudes scale with alpha^2 for KdV and alpha for mKdV") {
  const double alpha = 1.7;
  const auto k1 = resolve(make(Family::kdv_cn2_sndn, 0.4, 1.0));
  const auto k2 = resolve(make(Family::kdv_cn2_sndn, 0.4, alpha));
  CHECK(k2.A == doctest::Approx(k1.A * alpha * alpha));
  CHECK(k2.B == doctest::Approx(k1.B * alpha * alpha));
  CHECK(k2.c == doctest::Approx(k1.c));
  const auto v1 = resolve(make(Family::mkdv_sn_dn, 0.4, 1.0));
  const auto v2 = resolve(make(Family::mkdv_sn_dn, 0.4, alpha));
  CHECK(v2.A == doctest::Approx(v1.A * alpha));
  CHECK(v2.B == doctest::Approx(v1.B * alpha));
}

TEST_CASE("resolve: speed relations to the focusing dn and cn waves") {
  for (double m : {0.2, 0.6, 0.9}) {
    CHECK(resolve(make(Family::mkdv_sn_cn, m)).c == doctest::Approx(-(2.0 - m) / 2.0));
    CHECK(resolve(make(Family::mkdv_sn_dn, m)).c == doctest::Approx(-(2.0 * m - 1.0) / 2.0));
  }
}

TEST_CASE("resolve: right moving iff m > 1/2 for the complex cnoidal pair") {
  for (double m : {0.1, 0.3, 0.49}) CHECK(resolve(make(Family::kdv_cn2_sndn, m)).c < 0.0);
  for (double m : {0.51, 0.7, 1.0}) CHECK(resolve(make(Family::kdv_cn2_sndn, m)).c > 0.0);
}

TEST_CASE("resolve: errors") {
  CHECK_THROWS_AS(resolve(make(Family::kdv_cn2_sndn, 2.0)), DomainError);
  CHECK_THROWS_AS(resolve(make(Family::kdv_cn2_sndn, -0.1)), DomainError);
  CHECK_THROWS_AS(resolve(make(Family::kdv_cn2_sndn, 0.5, 0.0)), DomainError);
  CHECK_THROWS_AS(resolve(make(Family::kdv_cn2_sndn, 0.5, 1.0, Sign::plus, Sign::plus, 0.3)),
                  SpecError);
  CHECK_NOTHROW(resolve(make(Family::kdv_cn2_sncn, 0.5, 1.0, Sign::plus, Sign::plus, 0.3)));
}

TEST_CASE("eval_profile: values at the origin") {
  const auto a = eval_profile(make(Family::kdv_cn2_sndn, 0.5), 0.0);
  CHECK(a.real() == doctest::Approx(-0.5));
  CHECK(a.imag() == doctest::Approx(0.0));
  const auto b = eval_profile(make(Family::mkdv_sn_dn, 0.25), 0.0);
  CHECK(b.real() == doctest::Approx(0.0));
  CHECK(b.imag() == doctest::Approx(0.5));
}

TEST_CASE("eval_profile: m = 1 complex soliton against hyperbolic closed form") {
  const auto u = eval_profile(make(Family::kdv_cn2_sndn, 1.0), 1.0);
  CHECK(std::abs(u.real() + sech(1.0) * sech(1.0)) < 1e-14);
  CHECK(std::abs(u.imag() - sech(1.0) * std::tanh(1.0)) < 1e-14);
  CHECK(std::abs(u.real() + 0.419974341614) < 1e-11);
  CHECK(std::abs(u.imag() - 0.493554347564) < 1e-11);
}

TEST_CASE("eval_profile: singular families") {
  CHECK_THROWS_AS(eval_profile(make(Family::kdv_cosech), 0.0), PoleError);
  CHECK_THROWS_AS(eval_profile(make(Family::mkdv_cosech_coth), 0.0), PoleError);
  auto g = oracle::rng(21);
  for (int i = 0; i < 50; ++i) {
    const double z = oracle::uniform(g, 0.01, 6.0) * (i % 2 ? 1.0 : -1.0);
    const double cosech = 1.0 / std::sinh(z);
    const double coth = 1.0 / std::tanh(z);
    for (Sign br : {Sign::plus, Sign::minus}) {
      const double b = sign_value(br);
      const auto u = eval_profile(make(Family::kdv_cosech, 1.0, 1.0, br), z);
      CHECK(u.real() == doctest::Approx(cosech * cosech + b * cosech * coth).epsilon(1e-10));
      const auto v = eval_profile(make(Family::mkdv_cosech_coth, 1.0, 1.0, br), z);
      CHECK(v.real() == doctest::Approx(0.5 * (cosech + b * coth)).epsilon(1e-10));
    }
  }
}

TEST_CASE("the minus branch of the singular families is regular") {
  const auto well = make(Family::kdv_cosech, 1.0, 1.0, Sign::minus);
  const auto kink = make(Family::mkdv_cosech_coth, 1.0, 1.0, Sign::minus);
  CHECK_FALSE(has_pole(well));
  CHECK_FALSE(has_pole(kink));
  CHECK(has_pole(make(Family::kdv_cosech)));
  CHECK(eval_profile(well, 0.0).real() == doctest::Approx(-0.5));
  CHECK(eval_profile(kink, 0.0).real() == 0.0);
  auto g = oracle::rng(24);
  for (int i = 0; i < 50; ++i) {
    const double z = oracle::uniform(g, -8.0, 8.0);
    CHECK(std::abs(eval_profile(well, z).real() + 0.5 * sech(0.5 * z) * sech(0.5 * z)) < 1e-14);
    CHECK(std::abs(eval_profile(kink, z).real() + 0.5 * std::tanh(0.5 * z)) < 1e-14);
  }
  CHECK(sample_profile(well, natural_grid(well)).pole_mask() == 0.0);
  CHECK(sample_profile(make(Family::kdv_cosech), natural_grid(make(Family::kdv_cosech))).pole_mask() ==
        kDefaultPoleMask);
}

TEST_CASE("eval_field: frame definition") {
  const auto sech2 = make(Family::kdv_sech2);
  CHECK(eval_field(sech2, 4.0, 1.0).real() == doctest::Approx(-2.0));
  const auto s = make(Family::kdv_cn2_sndn, 1.0, 2.0);
  const auto u = eval_field(s, 4.0, 1.0);
  CHECK(u.real() == doctest::Approx(-4.0));
  CHECK(std::abs(u.imag()) < 1e-14);
  const auto w = make(Family::mkdv_sn_dn, 0.3);
  CHECK(std::abs(eval_field(w, 0.0, 0.0) - eval_profile(w, 0.0)) < 1e-15);
}

TEST_CASE("intensity") {
  auto g = oracle::rng(22);
  for (int i = 0; i < 50; ++i) {
    const double z = oracle::uniform(g, -10.0, 10.0);
    CHECK(intensity(make(Family::mkdv_sn_cn, 0.64), z) == doctest::Approx(0.16).epsilon(1e-12));
    CHECK(intensity(make(Family::mkdv_sn_dn, 0.3, 2.0), z) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(intensity(make(Family::kdv_cn2_sndn, 1.0), 0.0) == doctest::Approx(1.0));
  CHECK(intensity(make(Family::kdv_sech2), 0.0) == doctest::Approx(4.0));
}

TEST_CASE("natural period and grids") {
  const double m = 0.5;
  const double k = elliptic::complete_k(m);
  CHECK(*natural_period(make(Family::kdv_cnoidal, m)) == doctest::Approx(2.0 * k));
  CHECK(*natural_period(make(Family::kdv_cn2_sndn, m)) == doctest::Approx(4.0 * k));
  CHECK(*natural_period(make(Family::kdv_cn2_sncn, m)) == doctest::Approx(2.0 * k));
  CHECK(*natural_period(make(Family::mkdv_sn_dn, m)) == doctest::Approx(4.0 * k));
  CHECK_FALSE(natural_period(make(Family::kdv_cn2_sndn, 1.0)).has_value());
  CHECK_FALSE(natural_period(make(Family::kdv_sech2)).has_value());

  const Grid g = natural_grid(make(Family::kdv_cosech));
  for (std::size_t i = 0; i < g.size; ++i) CHECK(g.coordinate(i) != 0.0);
  CHECK(g.topology == Topology::truncated);
}

TEST_CASE("property: every periodic member repeats after its natural period") {
  auto g = oracle::rng(23);
  for (Family f : kAllFamilies) {
    if (is_singular(f) || f == Family::kdv_sech2) continue;
    for (int i = 0; i < 20; ++i) {
      const auto s = make(f, oracle::uniform(g, 0.01, 0.99));
      const double p = *natural_period(s);
      const double z = oracle::uniform(g, -5.0, 5.0);
      CHECK(std::abs(eval_profile(s, z + p) - eval_profile(s, z)) < 1e-11);
    }
  }
}

TEST_CASE("superpose") {
  const Grid grid = Grid::truncated(-6.0, 6.0, 241);
  const auto plus = make(Family::kdv_cn2_sndn, 0.5);
  auto minus = plus;
  minus.branch = Sign::minus;
  const auto sum = superpose(plus, minus, Sign::plus, grid);
  for (std::size_t i = 0; i < grid.size; ++i) {
    const double cn = elliptic::jacobi(grid.coordinate(i), 0.5).cn;
    CHECK(std::abs(sum[i] - cplx(-cn * cn, 0.0)) < 1e-14);
  }

  const auto v_plus = make(Family::mkdv_sn_cn, 1.0);
  auto v_minus = v_plus;
  v_minus.branch = Sign::minus;
  const auto diff = superpose(v_plus, v_minus, Sign::minus, grid);
  for (std::size_t i = 0; i < grid.size; ++i) {
    CHECK(std::abs(diff[i] - cplx(0.0, sech(grid.coordinate(i)))) < 1e-14);
  }

  auto other = plus;
  other.m = 0.7;
  CHECK_THROWS_AS(superpose(plus, other, Sign::plus, grid), SpecError);
  other = plus;
  other.alpha = 2.0;
  CHECK_THROWS_AS(superpose(plus, other, Sign::plus, grid), SpecError);
}

TEST_CASE("property: branches are complex conjugates of each other") {
  auto g = oracle::rng(24);
  for (Family f : {Family::kdv_cn2_sndn, Family::kdv_cn2_sncn, Family::mkdv_sn_cn,
                   Family::mkdv_sn_dn, Family::mkdv_icn}) {
    for (int i = 0; i < 50; ++i) {
      const auto a = make(f, oracle::uniform(g, 0.0, 1.0));
      auto b = a;
      b.branch = Sign::minus;
      const double z = oracle::uniform(g, -10.0, 10.0);
      CHECK(std::abs(eval_profile(b, z) - std::conj(eval_profile(a, z))) < 1e-14);
    }
  }
}

}  // TEST_SUITE
