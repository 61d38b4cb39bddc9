#include <catch2/catch_amalgamated.hpp>

#include "galiwig/measures.hpp"
#include "helpers.hpp"

using namespace galiwig;
using namespace galiwig::testing;

namespace {
const MassParam kUnitMass(1.0);
}

TEST_CASE("haar densities and modular functions", "[measures]") {
  CHECK(left_haar_density_affine(AffineElement{}) == 1.0);
  CHECK(rel_error(left_haar_density_affine(AffineElement{0, 0, 0, 0, 1, 0}),
                  std::exp(-4.0)) < 1e-15);
  CHECK(modular_function_affine(AffineElement{}) == 1.0);
  CHECK(modular_function_H(HElement{}) == 1.0);
  CHECK(modular_function_H(HElement{0.3, 1, 1}) == 1.0);

  Rng rng(51);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const AffineElement g = random_affine(rng);
    const HElement h{g.v, g.sigma, g.tau};
    worst = std::max(worst, rel_error(modular_function_affine(g) * det_h(h),
                                      modular_function_H(h)));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("left translation scales Lebesgue by the density ratio",
          "[measures]") {
  Rng rng(52);
  const MassParam m(1.3);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const AffineElement g0 = random_affine(rng);
    const AffineElement g = random_affine(rng);
    const double det = left_translation_jacobian_affine(g0, g, m);
    const double want = left_haar_density_affine(g) /
                        left_haar_density_affine(compose_affine(g0, g, m));
    worst = std::max(worst, std::abs(det - want) / std::abs(want));
  }
  CHECK(worst <= kFdTol);
}

TEST_CASE("right Haar measure is Lebesgue", "[measures]") {
  CHECK_THROWS_AS(right_haar_invariance_check(AffineElement{}, 0, kUnitMass),
                  std::invalid_argument);

  // at the identity the difference quotients are exact
  CHECK(right_translation_jacobian_affine(AffineElement{}, AffineElement{},
                                          kUnitMass) == 1.0);

  const auto rep = right_haar_invariance_check(
      AffineElement{1, 1, 1, 1, 1, 1}, 1000, kUnitMass, 7);
  CHECK(rep.pass);
  CHECK(rep.max_err <= kFdTol);

  Rng rng(53);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const AffineElement g0 = random_affine(rng);
    const AffineElement g = random_affine(rng);
    worst = std::max(
        worst,
        std::abs(right_translation_jacobian_affine(g0, g, kUnitMass) - 1.0));
  }
  CHECK(worst <= kFdTol);
}

TEST_CASE("galilei measure is two-sided invariant", "[measures]") {
  Rng rng(54);
  const MassParam m(1.9);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const GalileiElement g0 = random_galilei(rng, Exponent::Xi1);
    const GalileiElement g = random_galilei(rng, Exponent::Xi1);
    worst = std::max(
        worst, std::abs(translation_jacobian_galilei(g0, g, m, true) - 1.0));
    worst = std::max(
        worst, std::abs(translation_jacobian_galilei(g0, g, m, false) - 1.0));
  }
  CHECK(worst <= kFdTol);
}

TEST_CASE("orbit chart from H", "[measures]") {
  const auto at_e = orbit_chart_from_H(HElement{}, kUnitMass);
  CHECK(at_e[0] == 0.0);
  CHECK(at_e[1] == 1.0);
  CHECK(at_e[2] == 1.0);

  const auto boosted = orbit_chart_from_H(HElement{1, 0, 0}, MassParam(2.0));
  CHECK(boosted[0] == 2.0);
  CHECK(boosted[1] == 1.0);
  CHECK(boosted[2] == 1.0);

  CHECK(rel_error(chart_jacobian(HElement{0, 1, 0}, kUnitMass),
                  2.0 * std::exp(3.0)) < 1e-15);

  // finite-difference oracle for the chart Jacobian
  Rng rng(55);
  const MassParam m(1.7);
  const double step = kFdStep;
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const HElement h{rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5),
                     rng.uniform(-1.5, 1.5)};
    Mat3 jac;
    for (int j = 0; j < 3; ++j) {
      HElement hp = h, hm = h;
      (j == 0 ? hp.v : j == 1 ? hp.sigma : hp.tau) += step;
      (j == 0 ? hm.v : j == 1 ? hm.sigma : hm.tau) -= step;
      const auto fp = orbit_chart_from_H(hp, m);
      const auto fm = orbit_chart_from_H(hm, m);
      for (int r = 0; r < 3; ++r) jac(r, j) = (fp[r] - fm[r]) / (2.0 * step);
    }
    worst = std::max(worst, std::abs(jac.determinant() - chart_jacobian(h, m)) /
                                chart_jacobian(h, m));
    // the image lies in the chart of the orbit with q > 0
    const auto k = orbit_chart_from_H(h, m);
    REQUIRE(k[1] > 0.0);
    REQUIRE(k[2] > 0.0);
  }
  CHECK(worst <= kFdTol);
}

TEST_CASE("duflo-moore density", "[measures]") {
  CHECK(duflo_moore_density_c1(0.0, 1.0, 1.0, kUnitMass) == 0.5);
  CHECK(duflo_moore_density_c1(3.0, 2.0, 1.0, kUnitMass) == 0.125);
  CHECK_THROWS_AS(duflo_moore_density_c1(0.0, 0.0, 1.0, kUnitMass),
                  std::invalid_argument);
  CHECK_THROWS_AS(duflo_moore_density_c1(0.0, 1.0, 0.0, kUnitMass),
                  std::invalid_argument);

  // pushforward of the H Haar measure onto the orbit: the chart factors
  // exactly reproduce c1
  Rng rng(56);
  const MassParam m(2.1);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const HElement h{rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5),
                     rng.uniform(-1.5, 1.5)};
    const auto k = orbit_chart_from_H(h, m);
    const double lhs = modular_function_H(h);
    const double rhs = duflo_moore_density_c1(k[0], k[1], k[2], m) *
                       chart_jacobian(h, m);
    worst = std::max(worst, rel_error(lhs, rhs));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("kirillov chart maps are unimodular affine maps", "[measures]") {
  CHECK_THROWS_AS(kirillov_area_check(GalileiCoadjointClass::PointOrbit,
                                      GalileiElement{}, kUnitMass),
                  std::invalid_argument);

  const auto at_e = kirillov_area_check(GalileiCoadjointClass::ParabolaBundle,
                                        GalileiElement{}, kUnitMass);
  CHECK(at_e.linear.isIdentity(0.0));
  CHECK(at_e.det == 1.0);
  CHECK(at_e.formula_err == 0.0);

  const auto sheared = kirillov_area_check(
      GalileiCoadjointClass::ParabolaBundle,
      GalileiElement{0, 2, 0, 0, Exponent::Xi1}, kUnitMass);
  CHECK(sheared.linear(0, 1) == 2.0);
  CHECK(sheared.linear(0, 0) == 1.0);
  CHECK(sheared.linear(1, 0) == 0.0);
  CHECK(sheared.linear(1, 1) == 1.0);
  CHECK(sheared.det == 1.0);

  Rng rng(57);
  const MassParam m(1.2);
  for (int i = 0; i < 10000; ++i) {
    const GalileiElement g0 = random_galilei(rng, Exponent::Xi1);
    const double k0 = rng.signed_uniform(0.2, 2.0);
    for (auto kind : {GalileiCoadjointClass::PlaneOrbit,
                      GalileiCoadjointClass::ParabolaBundle}) {
      const auto rep = kirillov_area_check(kind, g0, m, k0);
      REQUIRE(rep.det == 1.0);
      REQUIRE(rep.affine);
      REQUIRE(rep.formula_err <= 1e-12);
    }
  }
}
