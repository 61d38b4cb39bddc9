#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>

#include "galiwig/fields.hpp"
#include "galiwig/lie.hpp"
#include "galiwig/measures.hpp"
#include "galiwig/orbits.hpp"
#include "galiwig/quadrature.hpp"
#include "galiwig/representations.hpp"
#include "galiwig/rng.hpp"

namespace galiwig {

/// Point of a six-dimensional coadjoint orbit: cotangent coordinates
/// (k1s, k2s, k3s) over the base point (k1, k3 + k1^2/(2 m k2), k2).
/// k2, k3 > 0 selects the orbit over the q > 0, E0 > 0 region; the other
/// regions are reached through the sign symmetries of the representatives.
struct PhaseSpacePoint6 {
  double k1s = 0.0, k2s = 0.0, k3s = 0.0;
  double k1 = 0.0;
  double k2 = 1.0;
  double k3 = 1.0;

  Row3 gamma_p(const MassParam& mass) const {
    return Row3(k1, k3 + k1 * k1 / (2.0 * mass.m * k2), k2);
  }
};

struct WignerResult {
  cplx value = 0.0;
  double err_estimate = 0.0;
  bool converged = true;
};

/// Converged means the half-order disagreement is below this fraction of
/// the value (with a small absolute floor for values near zero). Sampled
/// fields contribute an interpolation floor of order h^4, so demanding
/// much more than 1e-5 from the flag would be fiction.
inline constexpr double kWignerConvergedRelTol = 1e-5;
inline constexpr double kWignerConvergedAbsTol = 1e-8;

inline bool wigner_converged(const cplx& value, double err) {
  return err <= std::max(kWignerConvergedAbsTol,
                         kWignerConvergedRelTol * std::abs(value));
}

/// Scalar weight of the integrand: the product of the two Duflo-Moore
/// square roots and the determinant ratio, reduced to the closed form
///   2 m |k2|^2 [s13 / (s1 s3 sD^3)]^{1/2} |k3 (k3+r)/s3 - k3 r sD/s1^2|^{1/2}
/// with r = (k1 - m k2 x2/(x1-x3))^2 / (2 m k2) and sD the sinch of the
/// third half-eigenvalue x1 - x3/2. Points with |x1 - x3| inside the strip
/// are rejected; the quadrature grids never produce them.
inline double wigner_factor(double k1, double k2, double k3,
                            const SubalgebraCoords& xq, const MassParam& mass,
                            double strip = kDegenerateGap) {
  const double gap = xq.x1 - xq.x3;
  if (std::abs(gap) <= strip)
    throw std::domain_error("wigner_factor: singular strip");
  const double m = mass.m;
  const double s1 = sinch_scalar(0.5 * xq.x1);
  const double s3 = sinch_scalar(0.5 * xq.x3);
  const double sD = sinch_scalar(xq.x1 - 0.5 * xq.x3);
  const double s13 = sinch_scalar(0.5 * gap);
  const double t = k1 - m * k2 * xq.x2 / gap;
  const double r = t * t / (2.0 * m * k2);
  const double bracket =
      std::abs(k3 * (k3 + r) / s3 - k3 * r * sD / (s1 * s1));
  return 2.0 * m * k2 * k2 * std::sqrt(s13 / (s1 * s3 * sD * sD * sD)) *
         std::sqrt(bracket);
}

/// The same weight assembled from its factors: the density at the pulled
/// back point, the density at the base point, and the two determinants.
inline double wigner_factor_composed(double k1, double k2, double k3,
                                     const SubalgebraCoords& xq,
                                     const MassParam& mass) {
  const double m = mass.m;
  const Row3 gp(k1, k3 + k1 * k1 / (2.0 * m * k2), k2);
  const DualPoint3 moved =
      inv_sinch_pullback(DualPoint3{gp(0), gp(1), gp(2)}, xq, mass);
  const double c_moved = duflo_moore_density_c1(
      moved.p, moved.q,
      moved.E - moved.p * moved.p / (2.0 * m * moved.q), mass);
  const double c_base = duflo_moore_density_c1(k1, k2, k3, mass);
  const double det_num = det_sinch_ad(xq);
  const double det_den = sinch_scalar(0.5 * xq.x1) *
                         sinch_scalar(0.5 * xq.x3) *
                         sinch_scalar(xq.x1 - 0.5 * xq.x3);
  return std::sqrt(std::abs(det_num / det_den) /
                   (c_moved * c_base));
}

namespace detail {

/// Tensor rule with one extra node on the x3 axis: nodes of consecutive
/// Gauss-Legendre orders interlace, so no tensor point meets the plane
/// x1 = x3 and the singular strip excludes nothing in practice.
struct AffineRule {
  QuadratureRule a, b, c;
  explicit AffineRule(int n, double half_width)
      : a(gauss_legendre_symmetric(n, half_width)),
        b(gauss_legendre_symmetric(n, half_width)),
        c(gauss_legendre_symmetric(n + 1, half_width)) {}
};

template <class Integrand>
cplx affine_tensor_sum(const AffineRule& rule, double strip,
                       const Integrand& f) {
  cplx total = 0.0;
  for (std::size_t i = 0; i < rule.a.nodes.size(); ++i) {
    const double x1 = rule.a.nodes[i];
    for (std::size_t k = 0; k < rule.c.nodes.size(); ++k) {
      const double x3 = rule.c.nodes[k];
      if (std::abs(x1 - x3) <= strip) continue;
      const double wik = rule.a.weights[i] * rule.c.weights[k];
      for (std::size_t j = 0; j < rule.b.nodes.size(); ++j) {
        total += wik * rule.b.weights[j] * f(x1, rule.b.nodes[j], x3);
      }
    }
  }
  return total;
}

}  // namespace detail

/// Wigner value at one phase-space point, by tensor Gauss-Legendre
/// quadrature of
///   e^{-i x . gamma_q} conj(psi(gp e^{Xq/2}/sinch)) phi(gp e^{-Xq/2}/sinch)
/// times wigner_factor. The error estimate compares against the half-order
/// rule; converged means the estimate is below 1e-6 relative.
inline WignerResult wigner_affine(const SampledWavefunction3D& phi,
                                  const SampledWavefunction3D& psi,
                                  const PhaseSpacePoint6& pt,
                                  const MassParam& mass,
                                  const QuadratureSpec& quad) {
  quad.validate();
  if (pt.k2 == 0.0 || pt.k3 == 0.0)
    throw std::invalid_argument("wigner_affine: base point needs k2, k3 != 0");
  const Row3 gp = pt.gamma_p(mass);

  auto integrand = [&](double x1, double x2, double x3) -> cplx {
    const SubalgebraCoords xq{x1, x2, x3};
    const SubalgebraCoords half{0.5 * x1, 0.5 * x2, 0.5 * x3};
    const SubalgebraCoords mhalf{-0.5 * x1, -0.5 * x2, -0.5 * x3};
    const Mat3 inv = inv_sinch_Xq_closed(xq, mass);
    const Row3 arg_psi = (gp * exp_Xq_closed(half, mass)) * inv;
    const Row3 arg_phi = (gp * exp_Xq_closed(mhalf, mass)) * inv;
    const cplx pair = std::conj(psi.eval(arg_psi(0), arg_psi(1), arg_psi(2))) *
                      phi.eval(arg_phi(0), arg_phi(1), arg_phi(2));
    if (pair == cplx(0.0)) return 0.0;
    const double phase = -(x1 * pt.k1s + x2 * pt.k2s + x3 * pt.k3s);
    return std::exp(cplx(0.0, phase)) * pair *
           wigner_factor(pt.k1, pt.k2, pt.k3, xq, mass, quad.singular_strip);
  };

  const detail::AffineRule fine(quad.nodes, quad.half_width);
  const detail::AffineRule coarse(std::max(8, quad.nodes / 2),
                                  quad.half_width);
  WignerResult out;
  out.value = detail::affine_tensor_sum(fine, quad.singular_strip, integrand);
  const cplx low =
      detail::affine_tensor_sum(coarse, quad.singular_strip, integrand);
  out.err_estimate = std::abs(out.value - low);
  out.converged = wigner_converged(out.value, out.err_estimate);
  return out;
}

namespace detail {

template <class Integrand>
WignerResult line_quadrature(double prefactor, const QuadratureSpec& quad,
                             const Integrand& f) {
  auto run = [&](int n) {
    const QuadratureRule rule = gauss_legendre_symmetric(n, quad.half_width);
    cplx total = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      total += rule.weights[i] * f(rule.nodes[i]);
    return prefactor * total;
  };
  WignerResult out;
  out.value = run(quad.nodes);
  const cplx low = run(std::max(8, quad.nodes / 2));
  out.err_estimate = std::abs(out.value - low);
  out.converged = wigner_converged(out.value, out.err_estimate);
  return out;
}

}  // namespace detail

/// Wigner function of the second central extension at the phase-space
/// point (k1s, k2s) over the orbit labelled (k1, k2):
///   m/sqrt(2 pi) int e^{i k1s v}
///     conj(psi_{-k2, E0(v)}(-k2s/k2 + m v/2)) phi_{-k2, E0(v)}(-k2s/k2 - m v/2) dv
/// with E0(v) = -k1 + k2s v/2 + k2 m v^2/8.
inline WignerResult wigner_galilei_xi2(const GalileiField& field_phi,
                                       const GalileiField& field_psi,
                                       double k1s, double k2s, double k1,
                                       double k2, const MassParam& mass,
                                       const QuadratureSpec& quad) {
  quad.validate();
  if (k2 == 0.0) throw std::invalid_argument("wigner_galilei_xi2: k2 != 0");
  const double m = mass.m;
  const double u = -k2s / k2;
  auto f = [&](double v) -> cplx {
    const double e0 = -k1 + 0.5 * k2s * v + 0.125 * k2 * m * v * v;
    return std::exp(cplx(0.0, k1s * v)) *
           std::conj(field_psi.eval(e0, u + 0.5 * m * v)) *
           field_phi.eval(e0, u - 0.5 * m * v);
  };
  return detail::line_quadrature(m / std::sqrt(2.0 * M_PI), quad, f);
}

/// The corresponding integral for the canonical exponent. The phi argument
/// does not move with v, which is what blocks this form from reducing to
/// the standard phase-space profile.
inline WignerResult wigner_galilei_xi1(const GalileiField& field_phi,
                                       const GalileiField& field_psi,
                                       double k1s, double k2s, double k1,
                                       double k2, const MassParam& mass,
                                       const QuadratureSpec& quad) {
  quad.validate();
  if (k2 == 0.0) throw std::invalid_argument("wigner_galilei_xi1: k2 != 0");
  const double m = mass.m;
  const double u = -k2s / k2;
  const cplx phi_fixed = field_phi.eval(-k1, u);
  auto f = [&](double v) -> cplx {
    return std::exp(cplx(0.0, k1s * v)) *
           std::conj(field_psi.eval(-k1, u + m * v)) * phi_fixed;
  };
  return detail::line_quadrature(m / std::sqrt(2.0 * M_PI), quad, f);
}

/// Degeneration of the xi2 form onto a single parabola orbit:
///   m/(2 pi sqrt(2 pi)) int e^{i k1s v}
///     conj(psi(-k2s/k2 + m v/2)) phi(-k2s/k2 - m v/2) dv.
inline WignerResult weyl_heisenberg_reduce(const SampledWavefunction1D& g_phi,
                                           const SampledWavefunction1D& g_psi,
                                           double k1s, double k2s, double k2,
                                           const MassParam& mass,
                                           const QuadratureSpec& quad) {
  quad.validate();
  if (k2 == 0.0)
    throw std::invalid_argument("weyl_heisenberg_reduce: k2 != 0");
  const double m = mass.m;
  const double u = -k2s / k2;
  auto f = [&](double v) -> cplx {
    return std::exp(cplx(0.0, k1s * v)) *
           std::conj(g_psi.eval(u + 0.5 * m * v)) *
           g_phi.eval(u - 0.5 * m * v);
  };
  return detail::line_quadrature(m / (2.0 * M_PI * std::sqrt(2.0 * M_PI)),
                                 quad, f);
}

/// Empirical reachability of the inverse-sinch map from sources in one
/// open orbit, plus the verdicts derived from it.
struct SupportMapRow {
  int source = 0;                    // 1..4
  long samples = 0;
  std::array<long, 11> reached{};    // counts per OrbitClass
  bool crossed_q_plane = false;
  bool stable_predicted = false;     // solvability algebra for this orbit
  bool left_orbit = false;           // any sample classified elsewhere
};

inline SupportMapRow support_map(int lambda, int n_points, int n_xq,
                                 const MassParam& mass,
                                 std::uint64_t seed = 1,
                                 double eps = 1e-9) {
  if (lambda < 1 || lambda > 4)
    throw std::out_of_range("support_map: lambda in 1..4");
  if (n_points <= 0 || n_xq <= 0)
    throw std::invalid_argument("support_map: counts > 0");
  const std::array<OrbitClass, 4> open{OrbitClass::O1, OrbitClass::O2,
                                       OrbitClass::O3, OrbitClass::O4};
  const OrbitClass source = open[lambda - 1];
  Rng rng(seed + static_cast<std::uint64_t>(lambda) * 7919);
  SupportMapRow row;
  row.source = lambda;
  // p^2 - 2 m q E = -2 m q E0, so the solvable (unstable) pair is the one
  // with sign(q) == sign(E0): orbits 1 and 3
  row.stable_predicted = lambda == 2 || lambda == 4;
  for (int i = 0; i < n_points; ++i) {
    const bool q_pos = lambda <= 2;
    const bool e0_pos = lambda == 1 || lambda == 4;
    DualPoint3 x;
    x.q = (q_pos ? 1.0 : -1.0) * rng.uniform(0.1, 2.5);
    x.p = rng.uniform(-2.5, 2.5);
    x.E = x.p * x.p / (2.0 * mass.m * x.q) +
          (e0_pos ? 1.0 : -1.0) * rng.uniform(0.1, 2.5);
    for (int j = 0; j < n_xq; ++j) {
      SubalgebraCoords xq;
      do {
        xq = SubalgebraCoords{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0),
                              rng.uniform(-3.0, 3.0)};
      } while (!in_domain(xq));
      const DualPoint3 y = inv_sinch_pullback(x, xq, mass);
      if (std::signbit(y.q) != std::signbit(x.q)) row.crossed_q_plane = true;
      const OrbitClass cls = classify_dual_orbit(y, mass, eps);
      ++row.reached[static_cast<int>(cls)];
      if (cls != source) row.left_orbit = true;
      ++row.samples;
    }
  }
  return row;
}

/// Reachability rows for all four sources together with the support
/// verdicts they imply, next to the two claims they are compared against.
struct SupportVerdicts {
  std::array<SupportMapRow, 4> rows;
  std::array<bool, 4> supported_inside{};   // derived from the reach matrix
  std::array<bool, 4> paper_final{};        // the summary's claim
  std::array<bool, 4> solvability{};        // stable under the leakage algebra
  bool any_crossing = false;
};

inline SupportVerdicts support_map_full(int n_points, int n_xq,
                                        const MassParam& mass,
                                        std::uint64_t seed = 1) {
  SupportVerdicts v;
  for (int lam = 1; lam <= 4; ++lam)
    v.rows[lam - 1] = support_map(lam, n_points, n_xq, mass, seed);
  const std::array<OrbitClass, 4> open{OrbitClass::O1, OrbitClass::O2,
                                       OrbitClass::O3, OrbitClass::O4};
  for (int lam = 1; lam <= 4; ++lam) {
    bool reached_by_other = false;
    for (int mu = 1; mu <= 4; ++mu) {
      if (mu == lam) continue;
      if (v.rows[mu - 1].reached[static_cast<int>(open[lam - 1])] > 0)
        reached_by_other = true;
    }
    v.supported_inside[lam - 1] = !reached_by_other;
    v.solvability[lam - 1] = v.rows[lam - 1].stable_predicted;
    v.any_crossing |= v.rows[lam - 1].crossed_q_plane;
  }
  v.paper_final = {true, false, false, true};
  return v;
}

}  // namespace galiwig
