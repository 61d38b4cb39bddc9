#pragma once

#include <cmath>
#include <stdexcept>

#include "galiwig/linalg.hpp"

namespace galiwig {

/// Fixed mass scale. Group elements do not carry it; every operation that
/// needs the scale takes it as an explicit argument.
struct MassParam {
  double m;

  explicit MassParam(double mass) : m(mass) {
    if (!(mass > 0.0) || !std::isfinite(mass))
      throw std::invalid_argument("MassParam: mass must be finite and > 0");
  }
};

/// Element (theta, b, a, v, sigma, tau) of the extended affine group:
/// central parameter, time translation, space translation, boost, space
/// dilation, time dilation. The identity is the all-zero tuple.
struct AffineElement {
  double theta = 0.0;
  double b = 0.0;
  double a = 0.0;
  double v = 0.0;
  double sigma = 0.0;
  double tau = 0.0;
};

/// The two equivalent central-extension exponents of the Galilei group.
enum class Exponent { Xi1, Xi2 };

/// Element (theta, b, a, v) of a centrally extended Galilei group, tagged
/// with the exponent used for the extension so the two composition laws
/// cannot be mixed.
struct GalileiElement {
  double theta = 0.0;
  double b = 0.0;
  double a = 0.0;
  double v = 0.0;
  Exponent variant = Exponent::Xi1;
};

inline AffineElement compose_affine(const AffineElement& g1,
                                    const AffineElement& g2,
                                    const MassParam& mass) {
  const double m = mass.m;
  const double es = std::exp(g1.sigma);
  const double et = std::exp(g1.tau);
  AffineElement out;
  out.theta = g1.theta + std::exp(2.0 * g1.sigma - g1.tau) * g2.theta +
              m * (es * g1.v * g2.a + 0.5 * et * g1.v * g1.v * g2.b);
  out.b = g1.b + et * g2.b;
  out.a = g1.a + et * g2.b * g1.v + es * g2.a;
  out.v = g1.v + std::exp(g1.sigma - g1.tau) * g2.v;
  out.sigma = g1.sigma + g2.sigma;
  out.tau = g1.tau + g2.tau;
  return out;
}

/// 4x4 faithful representation; composition becomes matrix product.
inline Mat4 matrix_rep_affine(const AffineElement& g, const MassParam& mass) {
  const double m = mass.m;
  const double es = std::exp(g.sigma);
  const double et = std::exp(g.tau);
  Mat4 r;
  r << es, g.v * et, 0.0, g.a,
       0.0, et, 0.0, g.b,
       m * g.v * es, 0.5 * m * g.v * g.v * et, std::exp(2.0 * g.sigma - g.tau), g.theta,
       0.0, 0.0, 0.0, 1.0;
  return r;
}

inline AffineElement inverse_affine(const AffineElement& g,
                                    const MassParam& mass) {
  const double m = mass.m;
  AffineElement out;
  out.sigma = -g.sigma;
  out.tau = -g.tau;
  out.v = -g.v * std::exp(g.tau - g.sigma);
  out.a = std::exp(-g.sigma) * (g.v * g.b - g.a);
  out.b = -g.b * std::exp(-g.tau);
  out.theta = std::exp(g.tau - 2.0 * g.sigma) *
              (-g.theta + m * g.v * g.a - 0.5 * m * g.v * g.v * g.b);
  return out;
}

inline void require_matching_variant(const GalileiElement& g1,
                                     const GalileiElement& g2) {
  if (g1.variant != g2.variant)
    throw std::invalid_argument("GalileiElement: exponent variant mismatch");
}

/// xi1(g1,g2) = m(v1 a2 + v1^2 b2 / 2),
/// xi2(g1,g2) = m(-v1 v2 b2 + v1 a2 - v2 a1) / 2.
inline double exponent(Exponent variant, const GalileiElement& g1,
                       const GalileiElement& g2, const MassParam& mass) {
  require_matching_variant(g1, g2);
  if (g1.variant != variant)
    throw std::invalid_argument("exponent: variant does not match arguments");
  const double m = mass.m;
  if (variant == Exponent::Xi1)
    return m * (g1.v * g2.a + 0.5 * g1.v * g1.v * g2.b);
  return 0.5 * m * (-g1.v * g2.v * g2.b + g1.v * g2.a - g2.v * g1.a);
}

/// The continuous function whose coboundary relates the two exponents:
/// xi1 - xi2 = zeta(g1 g2) - zeta(g1) - zeta(g2).
inline double trivial_exponent_zeta(const GalileiElement& g,
                                    const MassParam& mass) {
  return 0.5 * mass.m * g.v * g.a;
}

inline GalileiElement compose_galilei(const GalileiElement& g1,
                                      const GalileiElement& g2,
                                      const MassParam& mass) {
  require_matching_variant(g1, g2);
  GalileiElement out;
  out.variant = g1.variant;
  out.theta = g1.theta + g2.theta + exponent(g1.variant, g1, g2, mass);
  out.b = g1.b + g2.b;
  out.a = g1.a + g2.a + g1.v * g2.b;
  out.v = g1.v + g2.v;
  return out;
}

inline Mat4 matrix_rep_galilei(const GalileiElement& g, const MassParam& mass) {
  const double m = mass.m;
  Mat4 r;
  if (g.variant == Exponent::Xi1) {
    r << 1.0, g.v, 0.0, g.a,
         0.0, 1.0, 0.0, g.b,
         m * g.v, 0.5 * m * g.v * g.v, 1.0, g.theta,
         0.0, 0.0, 0.0, 1.0;
  } else {
    r << 1.0, g.b, 0.0, g.a - g.v * g.b,
         0.0, 1.0, 0.0, -g.v,
         0.5 * m * g.v, 0.5 * m * g.a, 1.0, g.theta,
         0.0, 0.0, 0.0, 1.0;
  }
  return r;
}

inline GalileiElement inverse_galilei(const GalileiElement& g,
                                      const MassParam& mass) {
  GalileiElement out;
  out.variant = g.variant;
  out.b = -g.b;
  out.a = g.v * g.b - g.a;
  out.v = -g.v;
  if (g.variant == Exponent::Xi1)
    out.theta = -g.theta - 0.5 * mass.m * g.v * g.v * g.b + mass.m * g.v * g.a;
  else
    out.theta = -g.theta;
  return out;
}

}  // namespace galiwig
