#include <unsupported/Eigen/MatrixFunctions>

#include <catch2/catch_amalgamated.hpp>

#include "galiwig/lie.hpp"
#include "helpers.hpp"

using namespace galiwig;
using namespace galiwig::testing;

namespace {

const MassParam kUnitMass(1.0);

// independent scalar oracle: sum the even series until terms fall below 1e-15
double sinch_series_scalar(double s) {
  double sum = 1.0, term = 1.0;
  for (int k = 1; k < 40; ++k) {
    term *= s * s / static_cast<double>(2 * k * (2 * k + 1));
    sum += term;
    if (std::abs(term) < 1e-15 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

TEST_CASE("affine generators and commutation table", "[lie]") {
  const auto gen = generators_affine(kUnitMass);
  const Mat4 &ds = gen[0], &k = gen[1], &dt = gen[2], &x = gen[3], &t = gen[4],
             &th = gen[5];

  CHECK(th(2, 3) == 1.0);
  CHECK(th.cwiseAbs().sum() == 1.0);
  CHECK(generators_affine(MassParam(2.0))[1](2, 0) == 2.0);

  // diagonal generator exponentiates to dilations
  const double s = 0.7;
  CHECK(rel_frobenius_error(
            Mat4((s * ds).exp()),
            Mat4(Eigen::Vector4d(std::exp(s), 1.0, std::exp(2.0 * s), 1.0)
                     .asDiagonal())) < 1e-15);

  CHECK(commutator(k, k).isZero(0.0));
  for (double m : {1.0, 3.0}) {
    const auto g = generators_affine(MassParam(m));
    CHECK((commutator(g[1], g[3]) - m * g[5]).isZero(0.0));
  }

  auto exact = [](const Mat4& got, const Mat4& want) {
    return (got - want).cwiseAbs().maxCoeff() == 0.0;
  };
  const Mat4 zero = Mat4::Zero();
  CHECK(exact(commutator(k, dt), k));
  CHECK(exact(commutator(ds, dt), zero));
  CHECK(exact(commutator(k, x), th));
  CHECK(exact(commutator(x, t), zero));
  CHECK(exact(commutator(k, t), x));
  CHECK(exact(commutator(th, t), zero));
  CHECK(exact(commutator(th, k), zero));
  CHECK(exact(commutator(th, x), zero));
  CHECK(exact(commutator(th, dt), th));
  CHECK(exact(commutator(th, ds), Mat4(-2.0 * th)));
  CHECK(exact(commutator(k, ds), Mat4(-k)));
  CHECK(exact(commutator(t, dt), Mat4(-t)));
  CHECK(exact(commutator(x, ds), Mat4(-x)));
  CHECK(exact(commutator(x, dt), zero));
  CHECK(exact(commutator(t, ds), zero));

  MatX a2 = MatX::Zero(2, 2), b3 = MatX::Zero(3, 3);
  CHECK_THROWS_AS(commutator(a2, b3), std::invalid_argument);
}

TEST_CASE("galilei generators for both exponents", "[lie]") {
  for (Exponent variant : {Exponent::Xi1, Exponent::Xi2}) {
    for (double m : {1.0, 2.0}) {
      const auto g = generators_galilei(variant, MassParam(m));
      const Mat4 &k = g[0], &x = g[1], &t = g[2], &th = g[3];
      CHECK((commutator(k, x) - m * th).isZero(0.0));
      CHECK((commutator(k, t) - x).isZero(0.0));
      CHECK(commutator(x, t).isZero(0.0));
      CHECK(commutator(th, k).isZero(0.0));
      CHECK(commutator(th, x).isZero(0.0));
      CHECK(commutator(th, t).isZero(0.0));
    }
  }
  CHECK(generators_galilei(Exponent::Xi2, MassParam(3.0))[0](2, 0) == 1.5);
}

TEST_CASE("scalar sinch", "[lie]") {
  CHECK(sinch_scalar(0.0) == 1.0);
  CHECK(rel_error(sinch_scalar(2.0), sinch_series_scalar(2.0)) < 1e-15);
  CHECK(rel_error(sinch_scalar(2.0), 1.8134302039235093) < 1e-15);

  Rng rng(21);
  for (int i = 0; i < 10000; ++i) {
    const double s = rng.uniform(-20.0, 20.0);
    CHECK(sinch_scalar(-s) == sinch_scalar(s));
    if (s != 0.0) CHECK(sinch_scalar(s) > 1.0);
  }
  // tiny arguments stay on the series branch and above 1
  for (double s : {1e-18, 1e-12, 1e-8, 1e-5}) {
    CHECK(sinch_scalar(s) >= 1.0);
    CHECK(rel_error(sinch_scalar(s), sinch_series_scalar(s)) < 1e-15);
  }
}

TEST_CASE("matrix sinch series", "[lie]") {
  CHECK(sinch_matrix_series(MatX::Zero(3, 3)).value.isIdentity(0.0));
  CHECK_THROWS_AS(sinch_matrix_series(MatX::Zero(2, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(sinch_matrix_series(MatX::Zero(2, 2), -1.0),
                  std::invalid_argument);

  MatX d = MatX::Zero(3, 3);
  d(0, 0) = 2.0;
  const auto r = sinch_matrix_series(d);
  CHECK(r.converged);
  CHECK(rel_error(r.value(0, 0), sinch_series_scalar(2.0)) < 1e-15);
  CHECK(r.value(1, 1) == 1.0);
  CHECK(r.value(2, 2) == 1.0);
}

TEST_CASE("closed-form exp of X_q", "[lie]") {
  CHECK(exp_Xq_closed(SubalgebraCoords{}, kUnitMass).isIdentity(0.0));

  const SubalgebraCoords diag{0.4, 0.0, -1.1};
  const Mat3 e = exp_Xq_closed(diag, kUnitMass);
  CHECK(rel_error(e(0, 0), std::exp(0.4)) < 1e-15);
  CHECK(rel_error(e(1, 1), std::exp(-1.1)) < 1e-15);
  CHECK(rel_error(e(2, 2), std::exp(1.9)) < 1e-15);
  CHECK(e(0, 1) == 0.0);

  Rng rng(22);
  const MassParam m(1.4);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const SubalgebraCoords x = random_subalgebra(rng, 3.0, 0.0);
    const Mat3 want = subalgebra_matrix(x, m).exp();
    worst = std::max(worst, rel_frobenius_error(exp_Xq_closed(x, m), want));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("closed-form sinch of X_q/2 vs series oracle", "[lie]") {
  CHECK(sinch_Xq_closed(SubalgebraCoords{}, kUnitMass).isIdentity(0.0));

  const Mat3 d = sinch_Xq_closed(SubalgebraCoords{2.0, 0.0, 0.0}, kUnitMass);
  CHECK(rel_error(d(0, 0), sinch_series_scalar(1.0)) < 1e-15);
  CHECK(d(1, 1) == 1.0);
  CHECK(rel_error(d(2, 2), sinch_series_scalar(2.0)) < 1e-15);

  Rng rng(23);
  const MassParam m(0.8);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const SubalgebraCoords x = random_subalgebra(rng);
    const MatX want =
        sinch_matrix_series(0.5 * subalgebra_matrix(x, m)).value;
    worst = std::max(
        worst, rel_frobenius_error(MatX(sinch_Xq_closed(x, m)), want));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("closed-form inverse sinch", "[lie]") {
  CHECK(inv_sinch_Xq_closed(SubalgebraCoords{}, kUnitMass).isIdentity(0.0));

  Rng rng(24);
  const MassParam m(1.9);
  double worst_prod = 0.0, worst_inv = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const SubalgebraCoords x = random_subalgebra(rng);
    const Mat3 inv = inv_sinch_Xq_closed(x, m);
    worst_prod = std::max(
        worst_prod,
        rel_frobenius_error(Mat3(inv * sinch_Xq_closed(x, m)),
                            Mat3(Mat3::Identity())));
    const MatX series = sinch_matrix_series(0.5 * subalgebra_matrix(x, m)).value;
    worst_inv = std::max(
        worst_inv, rel_frobenius_error(MatX(inv), MatX(series.inverse())));
  }
  CHECK(worst_prod <= 1e-10);
  CHECK(worst_inv <= 1e-10);
}

TEST_CASE("adjoint of X_q/2 and its sinch", "[lie]") {
  CHECK(ad_subalgebra_half(SubalgebraCoords{}).isZero(0.0));

  // pure boost coordinates reproduce the ad K matrix
  const Mat3 adk = ad_subalgebra_half(SubalgebraCoords{0.0, 2.0, 0.0});
  CHECK(adk(1, 0) == -1.0);
  CHECK(adk(2, 0) == 1.0);
  CHECK(adk(0, 0) == 0.0);

  // ad action agrees with matrix commutators in the (K, D_s, D_T) basis,
  // with coordinate rows acting from the left
  const MassParam m(1.0);
  Mat3 k3, ds3, dt3;
  k3 << 0, 1, 0, 0, 0, 0, m.m, 0, 0;
  ds3 = Vec3(1, 0, 2).asDiagonal();
  dt3 = Vec3(0, 1, -1).asDiagonal();
  auto coords_of = [&](const Mat3& w) {
    return Row3(w(0, 1), w(0, 0), w(1, 1));
  };
  Rng rng(25);
  for (int i = 0; i < 100; ++i) {
    const SubalgebraCoords x = random_subalgebra(rng, 2.0, 0.0);
    const Mat3 xq_half = 0.5 * subalgebra_matrix(x, m);
    const Mat3 ad = ad_subalgebra_half(x);
    for (const Mat3& z : {k3, ds3, dt3}) {
      const Row3 got = coords_of(z) * ad;
      const Row3 want = coords_of(commutator(xq_half, z));
      CHECK((got - want).cwiseAbs().maxCoeff() < 1e-15);
    }
  }

  CHECK(sinch_ad_closed(SubalgebraCoords{}).isIdentity(0.0));
  CHECK(det_sinch_ad(SubalgebraCoords{}) == 1.0);
  CHECK(rel_error(det_sinch_ad(SubalgebraCoords{2.0, 1.0, 0.0}),
                  sinch_series_scalar(1.0)) < 1e-15);
  CHECK(rel_error(det_sinch_ad(SubalgebraCoords{2.0, 1.0, 0.0}),
                  1.1752011936438014) < 1e-15);

  double worst = 0.0, worst_det = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const SubalgebraCoords x = random_subalgebra(rng, 3.0, 0.0);
    const MatX want = sinch_matrix_series(MatX(ad_subalgebra_half(x))).value;
    worst = std::max(worst,
                     rel_frobenius_error(MatX(sinch_ad_closed(x)), want));
    worst_det = std::max(
        worst_det, rel_error(sinch_ad_closed(x).determinant(),
                             sinch_scalar(0.5 * (x.x1 - x.x3))));
    CHECK(det_sinch_ad(x) == sinch_scalar(0.5 * (x.x1 - x.x3)));
  }
  CHECK(worst <= 1e-12);
  CHECK(worst_det <= 1e-12);
}

TEST_CASE("near-degenerate gap keeps closed forms on the series", "[lie]") {
  Rng rng(26);
  const MassParam m(1.2);
  double worst = 0.0;
  for (int i = 0; i < 400; ++i) {
    const double gap = std::pow(10.0, rng.uniform(-9.0, -3.0));
    SubalgebraCoords x;
    x.x1 = rng.uniform(-2.0, 2.0);
    x.x2 = rng.uniform(-2.0, 2.0);
    x.x3 = x.x1 + (rng.raw() & 1u ? gap : -gap);
    CHECK(!in_domain(x, 1e-3));

    const MatX xq = subalgebra_matrix(x, m);
    worst = std::max(worst, rel_frobenius_error(
                                MatX(sinch_Xq_closed(x, m)),
                                sinch_matrix_series(0.5 * xq).value));
    worst = std::max(worst,
                     rel_frobenius_error(
                         MatX(inv_sinch_Xq_closed(x, m)),
                         MatX(sinch_matrix_series(0.5 * xq).value.inverse())));
    worst = std::max(worst, rel_frobenius_error(MatX(exp_Xq_closed(x, m)),
                                                MatX(Mat3(xq).exp())));
  }
  CHECK(worst <= 1e-8);
}
