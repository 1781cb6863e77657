#include <doctest.h>

#include "kdvlab/catalog.hpp"
#include "kdvlab/elliptic.hpp"
#include "kdvlab/errors.hpp"
#include "kdvlab/residual.hpp"
#include "kdvlab/transforms.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace kdvlab;
using oracle::sech;

namespace {

const Grid kWindow = Grid::symmetric_window(20.0, 0.01, false);

SolutionSpec make(Family f, double m, Sign branch = Sign::plus, Sign amp = Sign::plus) {
  SolutionSpec s;
  s.family = f;
  s.m = m;
  s.branch = branch;
  s.amp_sign = amp;
  return s;
}

}  // namespace

TEST_SUITE("transforms") {

TEST_CASE("miura of a kink is constant") {
  const auto v = tabulate(kWindow, [](double z) { return cplx(std::tanh(z), 0.0); });
  const auto u = miura(v, {+1});
  for (std::size_t i = 0; i < kWindow.size; ++i) CHECK(std::abs(u[i] - 1.0) < 1e-10);
}

TEST_CASE("miura of zero is zero") {
  const auto v = tabulate(kWindow, [](double) { return cplx{}; });
  CHECK(sup_norm(miura(v, {-1})) == 0.0);
}

TEST_CASE("miura minus of the complex kink is the shifted complex Scarf well") {
  const auto v = tabulate(kWindow, [](double z) { return 0.5 * cplx(std::tanh(z), sech(z)); });
  const auto u = miura(v, {-1});
  for (std::size_t i = 0; i < kWindow.size; ++i) {
    const double z = kWindow.coordinate(i);
    const cplx expect(0.25 - sech(z) * sech(z), sech(z) * std::tanh(z));
    CHECK(std::abs(u[i] - expect) < 1e-10);
  }
}

TEST_CASE("miura respects the alpha scaling") {
  const double alpha = 1.5;
  SolutionSpec s = make(Family::mkdv_sn_dn, 0.4);
  s.alpha = alpha;
  const auto v = sample_profile(s, natural_grid(s));
  const auto u = miura(v, {+1});
  CHECK(u.scale_alpha() == alpha);
  const auto c = resolve(s).c;
  CHECK(traveling_residual(u, c, Equation::kdv).relative < 1e-8);
}

TEST_CASE("complexified miura maps focusing mKdV to KdV") {
  // Focusing dn wave: dn'' = (2 - m) dn - 2 dn^3, so c = 2 - m.
  const double m = 0.5;
  const double period = 2.0 * elliptic::complete_k(m);
  const Grid grid = Grid::periodic(-0.5 * period, period, 256);
  const auto v = tabulate(grid, [m](double z) { return cplx(elliptic::jacobi(z, m).dn, 0.0); });
  const double c = 2.0 - m;
  CHECK(traveling_residual(v, c, Equation::mkdv_focusing).relative < 1e-8);
  for (int sign : {+1, -1}) {
    const auto u = miura(v, {sign, true});
    CHECK(traveling_residual(u, c, Equation::kdv).relative < 1e-8);
  }
}

TEST_CASE("galilean shift") {
  SolutionSpec s = make(Family::kdv_cn2_sncn, 1.0);
  const auto grid = kWindow;
  const auto u = sample_profile(s, grid);
  const auto [shifted, c_new] = galilean_shift(u, resolve(s).c, 0.25);
  s.beta = 0.25;
  CHECK(c_new == doctest::Approx(resolve(s).c));
  CHECK(c_new == doctest::Approx(-0.5));
  CHECK(sup_norm(shifted - sample_profile(s, grid)) < 1e-14);

  const auto [same, c_same] = galilean_shift(u, 1.0, 0.0);
  CHECK(c_same == 1.0);
  CHECK(sup_norm(same - u) == 0.0);

  const auto soliton = sample_profile(make(Family::kdv_sech2, 1.0), grid);
  const auto [moved, c7] = galilean_shift(soliton, 4.0, -0.5);
  CHECK(c7 == doctest::Approx(7.0));
  CHECK(traveling_residual(moved, c7, Equation::kdv).relative < 1e-8);
}

TEST_CASE("pt transform examples") {
  const auto real_even = tabulate(kWindow, [](double z) { return cplx(sech(z) * sech(z), 0.0); });
  CHECK(sup_norm(pt_transform(real_even) - real_even) < 1e-14);
  const auto imag_even = tabulate(kWindow, [](double z) { return cplx(0.0, sech(z)); });
  CHECK(sup_norm(pt_transform(imag_even) + imag_even) < 1e-14);
  const auto scarf = tabulate(kWindow, [](double z) {
    return cplx(-sech(z) * sech(z), sech(z) * std::tanh(z));
  });
  CHECK(sup_norm(pt_transform(scarf) - scarf) < 1e-14);

  const auto lopsided = SampledProfile(Grid::truncated(-1.0, 2.0, 31), std::vector<cplx>(31));
  CHECK_THROWS_AS(pt_transform(lopsided), DomainError);
}

TEST_CASE("classification") {
  for (double m : {0.2, 0.5, 0.9}) {
    const auto s = make(Family::kdv_cn2_sndn, m);
    CHECK(classify(sample_profile(s, natural_grid(s))).tag == SymmetryTag::pt_even);
    const auto t = make(Family::mkdv_sn_dn, m);
    CHECK(classify(sample_profile(t, natural_grid(t))).tag == SymmetryTag::pt_odd);
  }
  const auto mixed = tabulate(kWindow, [](double z) {
    return cplx(sech(z) + sech(z) * std::tanh(z), 0.0);
  });
  const auto c = classify(mixed);
  CHECK(c.tag == SymmetryTag::none);
  CHECK(c.deviation > 0.1);
  CHECK(symmetry_name(SymmetryTag::pt_even) == "PT_EVEN");
}

TEST_CASE("cole-hopf of a kink is cosh") {
  const auto v = tabulate(kWindow, [](double z) { return cplx(std::tanh(z), 0.0); });
  const auto res = cole_hopf(v);
  CHECK(res.log_scale == 0.0);
  for (std::size_t i = 0; i < kWindow.size; ++i) {
    const double z = kWindow.coordinate(i);
    CHECK(std::abs(res.psi[i] / std::cosh(z) - 1.0) < 1e-9);
  }
}

TEST_CASE("cole-hopf of zero is one") {
  const auto v = tabulate(kWindow, [](double) { return cplx{}; });
  const auto res = cole_hopf(v);
  for (std::size_t i = 0; i < kWindow.size; ++i) CHECK(res.psi[i] == cplx(1.0, 0.0));
}

TEST_CASE("cole-hopf of the complex kink") {
  const auto v = tabulate(kWindow, [](double z) { return 0.5 * cplx(std::tanh(z), sech(z)); });
  const auto psi = cole_hopf(v).psi;
  for (std::size_t i = 0; i < kWindow.size; ++i) {
    const double z = kWindow.coordinate(i);
    CHECK(std::abs(std::abs(psi[i]) / std::sqrt(std::cosh(z)) - 1.0) < 1e-9);
    CHECK(std::abs(std::arg(psi[i]) - 0.5 * oracle::gd(z)) < 1e-9);
  }
  const auto d2 = differentiate(psi, 2);
  double worst = 0.0;
  for (std::size_t i = 0; i < kWindow.size; ++i) {
    worst = std::max(worst, std::abs(d2[i] / psi[i] - 0.25));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("property: miura maps every defocusing family to a KdV solution") {
  // Kinks at m = 1 are mapped on a wide window and their images, which settle
  // to one constant at both ends, are checked spectrally as one period.
  const Grid wide = Grid::truncated(-40.0, 40.0, 3201);
  for (Family f : {Family::mkdv_sn_cn, Family::mkdv_sn_dn, Family::mkdv_sn, Family::mkdv_icn}) {
    for (double m : {0.05, 0.25, 0.5, 0.75, 0.95, 1.0}) {
      for (int sign : {+1, -1}) {
        const auto s = make(f, m);
        const bool periodic = natural_period(s).has_value();
        auto u = miura(sample_profile(s, periodic ? natural_grid(s) : wide), {sign});
        if (!periodic) u = close_periodic(u, 1e-12);
        CAPTURE(family_name(f));
        CAPTURE(m);
        CAPTURE(sign);
        // Some images collapse to a constant, which solves KdV trivially and
        // has no meaningful relative residual.
        double spread = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) spread = std::max(spread, std::abs(u[i] - u[0]));
        if (spread < 1e-10 * sup_norm(u)) continue;
        CHECK(traveling_residual(u, resolve(s).c, Equation::kdv).relative < 1e-8);
      }
    }
  }
}

TEST_CASE("property: PT classification is stable under real scaling") {
  auto g = oracle::rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = make(Family::kdv_cn2_sncn, oracle::uniform(g, 0.05, 0.95));
    const auto p = sample_profile(s, natural_grid(s));
    const double k = oracle::uniform(g, -3.0, 3.0);
    CHECK(classify(k * p).tag == SymmetryTag::pt_even);
    CHECK(classify(cplx(0.0, k) * p).tag == SymmetryTag::pt_odd);
  }
}

}  // TEST_SUITE
