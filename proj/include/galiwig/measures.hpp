#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "galiwig/groups.hpp"
#include "galiwig/orbits.hpp"
#include "galiwig/report.hpp"
#include "galiwig/rng.hpp"

namespace galiwig {

/// Density of the left Haar measure against Lebesgue measure in the
/// coordinates (theta, b, a, v, sigma, tau).
inline double left_haar_density_affine(const AffineElement& g) {
  return std::exp(-4.0 * g.sigma + g.tau);
}

/// The group is non-unimodular; the right Haar measure is Lebesgue, so the
/// modular function coincides with the left density.
inline double modular_function_affine(const AffineElement& g) {
  return std::exp(-4.0 * g.sigma + g.tau);
}

inline double modular_function_H(const HElement& h) {
  return std::exp(-h.sigma + h.tau);
}

inline double det_h(const HElement& h) { return std::exp(3.0 * h.sigma); }

/// Coordinates on the chart carrying H onto the open orbit with q > 0:
/// k1' = m v e^sigma, k2' = e^{2 sigma - tau}, k3' = e^tau.
inline std::array<double, 3> orbit_chart_from_H(const HElement& h,
                                                const MassParam& mass) {
  return {mass.m * h.v * std::exp(h.sigma),
          std::exp(2.0 * h.sigma - h.tau), std::exp(h.tau)};
}

/// dk1' dk2' dk3' = 2 m e^{3 sigma} dv dsigma dtau.
inline double chart_jacobian(const HElement& h, const MassParam& mass) {
  return 2.0 * mass.m * std::exp(3.0 * h.sigma);
}

/// Duflo-Moore density on the chart: 1 / (2 m |k2'|^2 |k3'|).
inline double duflo_moore_density_c1(double k1p, double k2p, double k3p,
                                     const MassParam& mass) {
  (void)k1p;
  if (k2p == 0.0 || k3p == 0.0)
    throw std::invalid_argument("duflo_moore_density_c1: k2', k3' nonzero");
  return 1.0 / (2.0 * mass.m * k2p * k2p * std::abs(k3p));
}

namespace detail {

inline std::array<double, 6> affine_coords(const AffineElement& g) {
  return {g.theta, g.b, g.a, g.v, g.sigma, g.tau};
}

inline AffineElement affine_from_coords(const std::array<double, 6>& c) {
  return AffineElement{c[0], c[1], c[2], c[3], c[4], c[5]};
}

inline std::array<double, 4> galilei_coords(const GalileiElement& g) {
  return {g.theta, g.b, g.a, g.v};
}

inline GalileiElement galilei_from_coords(const std::array<double, 4>& c,
                                          Exponent variant) {
  return GalileiElement{c[0], c[1], c[2], c[3], variant};
}

/// Central-difference Jacobian determinant of a map R^N -> R^N given in
/// parameter coordinates.
template <std::size_t N, class Map>
double fd_jacobian_det(const std::array<double, N>& at, const Map& map,
                       double step) {
  Eigen::Matrix<double, N, N> jac;
  for (std::size_t j = 0; j < N; ++j) {
    auto hi = at, lo = at;
    hi[j] += step;
    lo[j] -= step;
    const auto fhi = map(hi);
    const auto flo = map(lo);
    for (std::size_t i = 0; i < N; ++i)
      jac(i, j) = (fhi[i] - flo[i]) / (2.0 * step);
  }
  return jac.determinant();
}

}  // namespace detail

inline constexpr double kFdStep = 1e-5;
inline constexpr double kFdTol = 1e-6;

/// |det J| of g -> g0 g at g, by central differences.
inline double left_translation_jacobian_affine(const AffineElement& g0,
                                               const AffineElement& g,
                                               const MassParam& mass,
                                               double step = kFdStep) {
  auto map = [&](const std::array<double, 6>& c) {
    return detail::affine_coords(
        compose_affine(g0, detail::affine_from_coords(c), mass));
  };
  return std::abs(detail::fd_jacobian_det(detail::affine_coords(g), map, step));
}

/// |det J| of g -> g g0 at g.
inline double right_translation_jacobian_affine(const AffineElement& g0,
                                                const AffineElement& g,
                                                const MassParam& mass,
                                                double step = kFdStep) {
  auto map = [&](const std::array<double, 6>& c) {
    return detail::affine_coords(
        compose_affine(detail::affine_from_coords(c), g0, mass));
  };
  return std::abs(detail::fd_jacobian_det(detail::affine_coords(g), map, step));
}

inline double translation_jacobian_galilei(const GalileiElement& g0,
                                           const GalileiElement& g,
                                           const MassParam& mass,
                                           bool left, double step = kFdStep) {
  auto map = [&](const std::array<double, 4>& c) {
    const GalileiElement x = detail::galilei_from_coords(c, g0.variant);
    return detail::galilei_coords(left ? compose_galilei(g0, x, mass)
                                       : compose_galilei(x, g0, mass));
  };
  return std::abs(
      detail::fd_jacobian_det(detail::galilei_coords(g), map, step));
}

/// Lebesgue measure is right invariant: det J of right translation is 1.
inline CheckResult right_haar_invariance_check(const AffineElement& g0,
                                               int samples,
                                               const MassParam& mass,
                                               std::uint64_t seed = 1) {
  if (samples <= 0)
    throw std::invalid_argument("right_haar_invariance_check: samples > 0");
  Rng rng(seed);
  CheckResult r;
  r.suite = "measures";
  r.name = "right_haar_lebesgue";
  r.samples = samples;
  r.tol = kFdTol;
  for (int i = 0; i < samples; ++i) {
    AffineElement g;
    g.theta = rng.uniform(-1.5, 1.5);
    g.b = rng.uniform(-1.5, 1.5);
    g.a = rng.uniform(-1.5, 1.5);
    g.v = rng.uniform(-1.5, 1.5);
    g.sigma = rng.uniform(-1.5, 1.5);
    g.tau = rng.uniform(-1.5, 1.5);
    const double det = right_translation_jacobian_affine(g0, g, mass);
    r.max_err = std::max(r.max_err, std::abs(det - 1.0));
  }
  r.pass = r.max_err <= r.tol;
  r.notes = "step=" + format_double(kFdStep);
  return r;
}

/// The coadjoint action of g0 restricted to a two-dimensional orbit chart
/// is an affine map of the chart coordinates (a1, a2). Its linear part is
/// read off the coadjoint matrix entries, so the area-preservation
/// determinant is evaluated without differencing.
struct KirillovChartReport {
  Eigen::Matrix2d linear;
  double det = 0.0;
  bool affine = false;     // the quadratic embedding column never mixes in
  double formula_err = 0.0;  // defect against the closed-form chart map
};

inline KirillovChartReport kirillov_area_check(GalileiCoadjointClass orbit,
                                               const GalileiElement& g0,
                                               const MassParam& mass,
                                               double k0 = 1.0) {
  if (orbit != GalileiCoadjointClass::PlaneOrbit &&
      orbit != GalileiCoadjointClass::ParabolaBundle)
    throw std::invalid_argument(
        "kirillov_area_check: only the two-dimensional orbits carry charts");
  const Mat4 mat = coadjoint_matrix_galilei(g0, mass);
  KirillovChartReport rep;
  if (orbit == GalileiCoadjointClass::PlaneOrbit) {
    // embedding (a1, a2) -> [a1, k0, -a2, 0]
    rep.linear << mat(0, 0), -mat(2, 0), -mat(0, 2), mat(2, 2);
    rep.affine = mat(0, 1) == 0.0 && mat(2, 1) == 0.0 && mat(0, 3) == 0.0 &&
                 mat(2, 3) == 0.0;
    auto chart = [&](double a1, double a2) {
      const Row4 y = Row4(a1, k0, -a2, 0) * mat;
      return std::array<double, 2>{y(0), -y(2)};
    };
    double err = 0.0;
    for (auto [a1, a2] : {std::pair{0.3, -0.7}, std::pair{-1.1, 0.4}}) {
      const auto got = chart(a1, a2);
      err = std::max(err, std::abs(got[0] - (a1 + g0.b * k0)));
      err = std::max(err, std::abs(got[1] - (a2 + k0 * g0.v)));
    }
    rep.formula_err = err;
  } else {
    // embedding (a1, a2) -> [a1, a2, a2^2/(2 m k0), k0]
    rep.linear << mat(0, 0), mat(1, 0), mat(0, 1), mat(1, 1);
    rep.affine = mat(2, 0) == 0.0 && mat(2, 1) == 0.0;
    auto chart = [&](double a1, double a2) {
      const Row4 y =
          Row4(a1, a2, a2 * a2 / (2.0 * mass.m * k0), k0) * mat;
      return std::array<double, 2>{y(0), y(1)};
    };
    double err = 0.0;
    for (auto [a1, a2] : {std::pair{0.3, -0.7}, std::pair{-1.1, 0.4}}) {
      const auto got = chart(a1, a2);
      const double want1 =
          a1 + g0.b * a2 + mass.m * k0 * (g0.a - g0.v * g0.b);
      const double want2 = a2 - k0 * mass.m * g0.v;
      err = std::max(err, std::abs(got[0] - want1));
      err = std::max(err, std::abs(got[1] - want2));
    }
    rep.formula_err = err;
  }
  rep.det = rep.linear(0, 0) * rep.linear(1, 1) -
            rep.linear(0, 1) * rep.linear(1, 0);
  return rep;
}

}  // namespace galiwig
