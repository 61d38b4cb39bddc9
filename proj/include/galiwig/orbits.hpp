#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "galiwig/groups.hpp"
#include "galiwig/lie.hpp"
#include "galiwig/linalg.hpp"

namespace galiwig {

/// Row covector (p, E, q) in the character space of the translation
/// subgroup. Covectors multiply matrices from the right throughout.
struct DualPoint3 {
  double p = 0.0;
  double E = 0.0;
  double q = 0.0;
};

/// Row covector (gamma, E, p) for the Galilei character space.
struct GalileiDualPoint {
  double gamma = 0.0;
  double E = 0.0;
  double p = 0.0;
};

/// Element (v, sigma, tau) of the boost-dilation subgroup H.
struct HElement {
  double v = 0.0;
  double sigma = 0.0;
  double tau = 0.0;
};

enum class OrbitClass {
  O1, O2, O3, O4,   // open free regions
  O5, O6,           // separating surfaces E = p^2/(2mq)
  O7, O8,           // half planes q = 0, p != 0
  O9, O10,          // E half-axes
  O11,              // origin
};

enum class GalileiCoadjointClass { Origin, PointOrbit, PlaneOrbit, ParabolaBundle };

inline const char* orbit_class_name(OrbitClass c) {
  switch (c) {
    case OrbitClass::O1: return "O1";
    case OrbitClass::O2: return "O2";
    case OrbitClass::O3: return "O3";
    case OrbitClass::O4: return "O4";
    case OrbitClass::O5: return "O5";
    case OrbitClass::O6: return "O6";
    case OrbitClass::O7: return "O7";
    case OrbitClass::O8: return "O8";
    case OrbitClass::O9: return "O9";
    case OrbitClass::O10: return "O10";
    case OrbitClass::O11: return "O11";
  }
  return "?";
}

inline const char* galilei_class_name(GalileiCoadjointClass c) {
  switch (c) {
    case GalileiCoadjointClass::Origin: return "Origin";
    case GalileiCoadjointClass::PointOrbit: return "PointOrbit";
    case GalileiCoadjointClass::PlaneOrbit: return "PlaneOrbit";
    case GalileiCoadjointClass::ParabolaBundle: return "ParabolaBundle";
  }
  return "?";
}

/// 3x3 matrix of h = (v, sigma, tau); dual rows act on it from the right.
inline Mat3 h_matrix(const HElement& h, const MassParam& mass) {
  const double es = std::exp(h.sigma);
  const double et = std::exp(h.tau);
  Mat3 r;
  r << es, h.v * et, 0.0,
       0.0, et, 0.0,
       mass.m * h.v * es, 0.5 * mass.m * h.v * h.v * et,
       std::exp(2.0 * h.sigma - h.tau);
  return r;
}

/// Action of (v, sigma, tau) on a character (p, E, q).
inline DualPoint3 dual_action_affine(const HElement& h, const DualPoint3& x,
                                     const MassParam& mass) {
  const double m = mass.m;
  const double eti = std::exp(-h.tau);
  const double esi = std::exp(-h.sigma);
  const double w = std::exp(h.tau - 2.0 * h.sigma);
  DualPoint3 out;
  out.q = w * x.q;
  out.E = eti * x.E + esi * x.p * h.v + 0.5 * x.q * m * w * h.v * h.v;
  out.p = esi * x.p + w * x.q * m * h.v;
  return out;
}

/// Internal energy E - p^2/(2mq); the dual action scales it by e^{-tau},
/// so its sign labels the orbit together with the sign of q.
inline double internal_energy(const DualPoint3& x, const MassParam& mass) {
  return x.E - x.p * x.p / (2.0 * mass.m * x.q);
}

/// Classification by the sign pattern of (q, p, E, E - p^2/(2qm)).
/// Values within eps of zero count as zero, so the measure-zero classes are
/// reachable from inexact inputs.
inline OrbitClass classify_dual_orbit(const DualPoint3& x,
                                      const MassParam& mass, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("classify_dual_orbit: eps > 0");
  if (std::abs(x.q) > eps) {
    const double e0 = internal_energy(x, mass);
    if (std::abs(e0) <= eps)
      return x.q > 0.0 ? OrbitClass::O5 : OrbitClass::O6;
    if (x.q > 0.0) return e0 > 0.0 ? OrbitClass::O1 : OrbitClass::O2;
    return e0 < 0.0 ? OrbitClass::O3 : OrbitClass::O4;
  }
  if (std::abs(x.p) > eps)
    return x.p > 0.0 ? OrbitClass::O7 : OrbitClass::O8;
  if (std::abs(x.E) > eps)
    return x.E > 0.0 ? OrbitClass::O9 : OrbitClass::O10;
  return OrbitClass::O11;
}

/// 6x6 coadjoint action matrix of g in the ordered basis
/// (D_s, K, D_T, X, T, Theta): dual rows transform by y -> y * M(g), and
/// M(g) * coords(Y) gives the coordinates of g^{-1} Y g.
inline Mat6 coadjoint_matrix_affine(const AffineElement& g,
                                    const MassParam& mass) {
  const double m = mass.m;
  const double ets = std::exp(g.tau - g.sigma);
  const double esi = std::exp(-g.sigma);
  const double eti = std::exp(-g.tau);
  const double w = std::exp(g.tau - 2.0 * g.sigma);
  Mat6 r = Mat6::Zero();
  r(0, 0) = 1.0;
  r(1, 0) = g.v * ets;
  r(1, 1) = ets;
  r(1, 2) = -g.v * ets;
  r(2, 2) = 1.0;
  r(3, 0) = g.a * esi;
  r(3, 1) = g.b * esi;
  r(3, 2) = -g.v * g.b * esi;
  r(3, 3) = esi;
  r(3, 4) = -g.v * esi;
  r(4, 2) = g.b * eti;
  r(4, 4) = eti;
  r(5, 0) = w * (2.0 * g.theta - m * g.v * g.a);
  r(5, 1) = w * (m * g.a - m * g.v * g.b);
  r(5, 2) = w * (0.5 * m * g.v * g.v * g.b - g.theta);
  r(5, 3) = -m * g.v * w;
  r(5, 4) = 0.5 * m * g.v * g.v * w;
  r(5, 5) = w;
  return r;
}

/// Orbit point (0,0,0,0,k1,k2) * M(g). The last three components sit on the
/// dual orbit selected by the signs of (k1, k2); the first three sweep the
/// cotangent fibre.
inline Row6 coadjoint_orbit_point(double k1, double k2, const AffineElement& g,
                                  const MassParam& mass) {
  if (k1 == 0.0 && k2 == 0.0)
    throw std::invalid_argument("coadjoint_orbit_point: (k1,k2) == (0,0)");
  Row6 seed = Row6::Zero();
  seed(4) = k1;
  seed(5) = k2;
  return seed * coadjoint_matrix_affine(g, mass);
}

/// Representative (k1, k2) pairs generating the four open coadjoint orbits.
inline std::pair<double, double> representative_vector(int j) {
  switch (j) {
    case 1: return {1.0, 1.0};
    case 2: return {-1.0, 1.0};
    case 3: return {-1.0, -1.0};
    case 4: return {1.0, -1.0};
    default:
      throw std::out_of_range("representative_vector: j must be in 1..4");
  }
}

/// Base-manifold coordinates of an orbit point, reordered as (p, E, q).
inline DualPoint3 base_point(const Row6& r) {
  return DualPoint3{r(3), r(4), r(5)};
}

/// Delta(p, E, q) = q (p^2 - 2 m q E). Vanishes exactly on the orbit
/// boundaries; its sign is constant on each open orbit.
inline double delta_polynomial(const DualPoint3& x, const MassParam& mass) {
  return x.q * (x.p * x.p - 2.0 * mass.m * x.q * x.E);
}

/// Row (p0, E0, q0) * (sinch(X_q/2))^{-1}. The q component only picks up
/// the positive factor 1/sinch, so its sign is preserved exactly.
inline DualPoint3 inv_sinch_pullback(const DualPoint3& x0,
                                     const SubalgebraCoords& xq,
                                     const MassParam& mass) {
  const Row3 row(x0.p, x0.E, x0.q);
  const Row3 out = row * inv_sinch_Xq_closed(xq, mass);
  return DualPoint3{out(0), out(1), out(2)};
}

/// True when the point cannot leave its dual orbit under the inverse-sinch
/// map: the zero-crossing equation for Delta has a real solution iff
/// p0^2 - 2 m q0 E0 < 0.
inline bool stability_condition(const DualPoint3& x0, const MassParam& mass) {
  if (x0.q == 0.0)
    throw std::invalid_argument("stability_condition: q must be nonzero");
  return x0.p * x0.p - 2.0 * mass.m * x0.q * x0.E > 0.0;
}

/// Dual action of a boost: gamma is fixed and E - p^2/(2 m gamma) invariant.
inline GalileiDualPoint galilei_dual_action(double v, const GalileiDualPoint& x,
                                            const MassParam& mass) {
  GalileiDualPoint out;
  out.gamma = x.gamma;
  out.E = 0.5 * mass.m * x.gamma * v * v + x.E - x.p * v;
  out.p = x.p - mass.m * x.gamma * v;
  return out;
}

inline double galilei_internal_energy(const GalileiDualPoint& x,
                                      const MassParam& mass) {
  return x.E - x.p * x.p / (2.0 * mass.m * x.gamma);
}

/// 4x4 coadjoint action matrix in the basis (K, X, T, Theta); identical for
/// both central extensions of the same (b, a, v).
inline Mat4 coadjoint_matrix_galilei(const GalileiElement& g,
                                     const MassParam& mass) {
  const double m = mass.m;
  Mat4 r = Mat4::Identity();
  r(1, 0) = g.b;
  r(1, 2) = -g.v;
  r(3, 0) = m * (g.a - g.v * g.b);
  r(3, 1) = -m * g.v;
  r(3, 2) = 0.5 * m * g.v * g.v;
  return r;
}

inline GalileiCoadjointClass classify_galilei_coadjoint(const Row4& y,
                                                        double eps) {
  if (!(eps > 0.0))
    throw std::invalid_argument("classify_galilei_coadjoint: eps > 0");
  if (std::abs(y(3)) > eps) return GalileiCoadjointClass::ParabolaBundle;
  if (std::abs(y(1)) > eps) return GalileiCoadjointClass::PlaneOrbit;
  if (std::abs(y(0)) > eps || std::abs(y(2)) > eps)
    return GalileiCoadjointClass::PointOrbit;
  return GalileiCoadjointClass::Origin;
}

/// Kirillov coordinate k1 of a parabola-bundle point: the third component
/// minus the parabola height, constant along the orbit.
inline double galilei_parabola_k1(const Row4& y, const MassParam& mass) {
  if (y(3) == 0.0)
    throw std::invalid_argument("galilei_parabola_k1: fourth component zero");
  return y(2) - y(1) * y(1) / (2.0 * mass.m * y(3));
}

}  // namespace galiwig
