#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "galiwig/groups.hpp"
#include "galiwig/linalg.hpp"

namespace galiwig {

/// Coordinates (x1, x2, x3) of X_q = x1 D_s + x2 K + x3 D_T in the
/// dilation-boost subalgebra. The printed closed forms are quotients with
/// denominator x1 - x3; the functions below evaluate their removable limit
/// when the gap closes, so the whole of R^3 is usable.
struct SubalgebraCoords {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
};

/// Coefficients of D_s, K, D_T, X, T, Theta.
struct AlgebraCoords6 {
  double x1 = 0.0, x2 = 0.0, x3 = 0.0, x4 = 0.0, x5 = 0.0, x6 = 0.0;
};

/// Coefficients of K, X, T, Theta.
struct GalileiAlgebraCoords {
  double a1 = 0.0, a2 = 0.0, a3 = 0.0, a4 = 0.0;
};

/// Gap below which coordinates count as degenerate (x1 == x3).
inline constexpr double kDegenerateGap = 1e-6;

/// Gap below which divided differences switch to their Taylor branch. The
/// direct quotient loses eps/gap^2 digits through cancellation, so the
/// switch sits well above the degeneracy tolerance; the Taylor truncation
/// error at this gap is ~1e-18.
inline constexpr double kDividedDifferenceSwitch = 1e-3;

inline bool in_domain(const SubalgebraCoords& x, double tol = kDegenerateGap) {
  return std::abs(x.x1 - x.x3) > tol;
}

/// Generators (D_s, K, D_T, X, T, Theta) of the extended affine group,
/// matching the parameter order (sigma, v, tau, a, b, theta).
inline std::array<Mat4, 6> generators_affine(const MassParam& mass) {
  Mat4 ds = Mat4::Zero(), k = Mat4::Zero(), dt = Mat4::Zero();
  Mat4 x = Mat4::Zero(), t = Mat4::Zero(), th = Mat4::Zero();
  ds(0, 0) = 1.0;
  ds(2, 2) = 2.0;
  k(0, 1) = 1.0;
  k(2, 0) = mass.m;
  dt(1, 1) = 1.0;
  dt(2, 2) = -1.0;
  x(0, 3) = 1.0;
  t(1, 3) = 1.0;
  th(2, 3) = 1.0;
  return {ds, k, dt, x, t, th};
}

/// Generators (K, X, T, Theta) of the extended Galilei group for the given
/// exponent variant. Both satisfy [K,X] = m Theta, [K,T] = X, all else zero.
inline std::array<Mat4, 4> generators_galilei(Exponent variant,
                                              const MassParam& mass) {
  Mat4 k = Mat4::Zero(), x = Mat4::Zero(), t = Mat4::Zero(), th = Mat4::Zero();
  th(2, 3) = 1.0;
  if (variant == Exponent::Xi1) {
    k(0, 1) = 1.0;
    k(2, 0) = mass.m;
    x(0, 3) = 1.0;
    t(1, 3) = 1.0;
  } else {
    k(1, 3) = -1.0;
    k(2, 0) = 0.5 * mass.m;
    x(0, 3) = 1.0;
    x(2, 1) = 0.5 * mass.m;
    t(0, 1) = 1.0;
  }
  return {k, x, t, th};
}

/// 3x3 X_q with eigenvalues x1, x3, 2 x1 - x3.
inline Mat3 subalgebra_matrix(const SubalgebraCoords& x,
                              const MassParam& mass) {
  Mat3 r;
  r << x.x1, x.x2, 0.0,
       0.0, x.x3, 0.0,
       mass.m * x.x2, 0.0, 2.0 * x.x1 - x.x3;
  return r;
}

/// 4x4 matrix of x1 D_s + x2 K + x3 D_T + x4 X + x5 T + x6 Theta.
inline Mat4 algebra_matrix_affine(const AlgebraCoords6& c,
                                  const MassParam& mass) {
  Mat4 r = Mat4::Zero();
  r(0, 0) = c.x1;
  r(0, 1) = c.x2;
  r(0, 3) = c.x4;
  r(1, 1) = c.x3;
  r(1, 3) = c.x5;
  r(2, 0) = mass.m * c.x2;
  r(2, 2) = 2.0 * c.x1 - c.x3;
  r(2, 3) = c.x6;
  return r;
}

inline Mat4 algebra_matrix_galilei(const GalileiAlgebraCoords& c,
                                   Exponent variant, const MassParam& mass) {
  const auto gen = generators_galilei(variant, mass);
  return c.a1 * gen[0] + c.a2 * gen[1] + c.a3 * gen[2] + c.a4 * gen[3];
}

/// sinh(s)/s, extended by 1 at s = 0. Always >= 1.
inline double sinch_scalar(double s) {
  static const double taylor_0 = std::numeric_limits<double>::epsilon();
  static const double taylor_2 = std::sqrt(taylor_0);
  static const double taylor_4 = std::sqrt(taylor_2);
  const double a = std::abs(s);
  if (a >= taylor_4) return std::sinh(s) / s;
  double r = 1.0;
  if (a >= taylor_0) {
    const double s2 = s * s;
    r += s2 / 6.0;
    if (a >= taylor_2) r += s2 * s2 / 120.0;
  }
  return r;
}

/// (sinch(u) - 1)/u, the divided difference of sinch against 0.
inline double sinchm1_over(double u) {
  if (std::abs(u) >= 0.5) return (sinch_scalar(u) - 1.0) / u;
  const double u2 = u * u;
  // u/3! + u^3/5! + u^5/7! + u^7/9! + u^9/11!
  return u * (1.0 / 6.0 +
              u2 * (1.0 / 120.0 +
                    u2 * (1.0 / 5040.0 +
                          u2 * (1.0 / 362880.0 + u2 / 39916800.0))));
}

namespace detail {

/// derivs[k] = d^k/ds^k [sinh(s)/s] for k = 0..MaxOrder.
/// Near zero the explicit formula cancels badly, so the even Maclaurin
/// series is differentiated term by term instead.
template <int MaxOrder = 6>
std::array<double, MaxOrder + 1> sinch_derivs(double s) {
  static_assert(MaxOrder <= 8);
  std::array<double, MaxOrder + 1> d{};
  if (std::abs(s) < 1.0) {
    // factorial table up to (2j+1)! for j <= 18
    for (int n = 0; n <= MaxOrder; ++n) {
      double sum = 0.0;
      for (int j = (n + 1) / 2; j <= 18; ++j) {
        double c = 1.0;  // (2j)(2j-1)...(2j-n+1)
        for (int i = 0; i < n; ++i) c *= static_cast<double>(2 * j - i);
        if (c == 0.0) continue;
        double fact = 1.0;
        for (int i = 2; i <= 2 * j + 1; ++i) fact *= static_cast<double>(i);
        sum += c * std::pow(s, 2 * j - n) / fact;
      }
      d[n] = sum;
    }
    return d;
  }
  const double sh = std::sinh(s);
  const double ch = std::cosh(s);
  for (int n = 0; n <= MaxOrder; ++n) {
    double sum = 0.0;
    double perm = 1.0;  // n!/(n-k)!
    double spow = s;    // s^{k+1}
    for (int k = 0; k <= n; ++k) {
      const double sinh_deriv = ((n - k) % 2 == 0) ? sh : ch;
      sum += ((k % 2 == 0) ? 1.0 : -1.0) * perm * sinh_deriv / spow;
      perm *= static_cast<double>(n - k);
      spow *= s;
    }
    d[n] = sum;
  }
  return d;
}

/// Derivatives of 1/sinch via the Leibniz recursion on w * sinch = 1.
template <int MaxOrder = 6>
std::array<double, MaxOrder + 1> inv_sinch_derivs(double s) {
  const auto g = sinch_derivs<MaxOrder>(s);
  std::array<double, MaxOrder + 1> w{};
  w[0] = 1.0 / g[0];
  for (int n = 1; n <= MaxOrder; ++n) {
    double acc = 0.0;
    double binom = 1.0;
    for (int k = 0; k < n; ++k) {
      acc += binom * w[k] * g[n - k];
      binom = binom * static_cast<double>(n - k) / static_cast<double>(k + 1);
    }
    w[n] = -acc / g[0];
  }
  return w;
}

/// Value-and-derivatives bundle for the scalar functions the closed forms
/// are built from. derivs(s)[k] is the k-th derivative at s.
struct SinchHalfFn {
  std::array<double, 7> derivs(double s) const {
    auto d = sinch_derivs<6>(0.5 * s);
    double scale = 1.0;
    for (int n = 0; n <= 6; ++n, scale *= 0.5) d[n] *= scale;
    return d;
  }
};

struct InvSinchHalfFn {
  std::array<double, 7> derivs(double s) const {
    auto d = inv_sinch_derivs<6>(0.5 * s);
    double scale = 1.0;
    for (int n = 0; n <= 6; ++n, scale *= 0.5) d[n] *= scale;
    return d;
  }
};

/// First divided difference (f(a) - f(b))/(a - b); fourth-order Taylor
/// expansion about the midpoint below the degenerate-gap threshold.
template <class F>
double dd1(const F& f, double a, double b) {
  if (std::abs(a - b) > kDividedDifferenceSwitch)
    return (f.derivs(a)[0] - f.derivs(b)[0]) / (a - b);
  const double h = 0.5 * (a - b);
  const auto d = f.derivs(0.5 * (a + b));
  return d[1] + d[3] * h * h / 6.0 + d[5] * h * h * h * h / 120.0;
}

/// Second divided difference over the arithmetic triple (mu-d, mu, mu+d).
template <class F>
double dd2(const F& f, double mu, double d) {
  if (std::abs(d) > kDividedDifferenceSwitch) {
    const double fm = f.derivs(mu - d)[0];
    const double f0 = f.derivs(mu)[0];
    const double fp = f.derivs(mu + d)[0];
    return (fm - 2.0 * f0 + fp) / (2.0 * d * d);
  }
  const auto dv = f.derivs(mu);
  return 0.5 * dv[2] + dv[4] * d * d / 24.0 + dv[6] * d * d * d * d / 720.0;
}

/// f applied to X_q through its eigenstructure: eigenvalues are x1, x3 and
/// 2 x1 - x3, and the off-diagonal entries are first and second divided
/// differences of f over them.
template <class F>
Mat3 matrix_function_Xq(const SubalgebraCoords& x, const MassParam& mass,
                        const F& f) {
  const double lam1 = x.x1;
  const double lam2 = x.x3;
  const double lam3 = 2.0 * x.x1 - x.x3;
  Mat3 r = Mat3::Zero();
  r(0, 0) = f.derivs(lam1)[0];
  r(1, 1) = f.derivs(lam2)[0];
  r(2, 2) = f.derivs(lam3)[0];
  r(0, 1) = x.x2 * dd1(f, lam1, lam2);
  r(2, 0) = mass.m * x.x2 * dd1(f, lam3, lam1);
  r(2, 1) = mass.m * x.x2 * x.x2 * dd2(f, lam1, lam1 - lam2);
  return r;
}

}  // namespace detail

/// Result of a truncated matrix power series.
struct SeriesResult {
  MatX value;
  int terms = 0;
  bool converged = true;
};

/// sinch A = I + A^2/3! + A^4/5! + ... summed until the next term's largest
/// entry drops below tol relative to the partial sum. The series is entire,
/// so the cap is a safety net only.
inline SeriesResult sinch_matrix_series(const MatX& a, double tol = 1e-16,
                                        int max_terms = 60) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("sinch_matrix_series: square matrix required");
  if (!(tol > 0.0)) throw std::invalid_argument("sinch_matrix_series: tol > 0");
  const auto n = a.rows();
  const MatX a2 = a * a;
  SeriesResult out;
  out.value = MatX::Identity(n, n);
  MatX term = MatX::Identity(n, n);
  for (int k = 1; k <= max_terms; ++k) {
    term = term * a2 / static_cast<double>(2 * k * (2 * k + 1));
    out.value += term;
    ++out.terms;
    const double scale = std::max(1.0, out.value.cwiseAbs().maxCoeff());
    if (term.cwiseAbs().maxCoeff() < tol * scale) return out;
  }
  out.converged = false;
  return out;
}

/// exp(X_q) in closed form. The divided differences of exp reduce exactly to
/// sinch, so no branch is needed anywhere.
inline Mat3 exp_Xq_closed(const SubalgebraCoords& x, const MassParam& mass) {
  const double lam1 = x.x1;
  const double lam2 = x.x3;
  const double lam3 = 2.0 * x.x1 - x.x3;
  const double gap = x.x1 - x.x3;  // lam1 - lam2 == lam3 - lam1
  Mat3 r = Mat3::Zero();
  r(0, 0) = std::exp(lam1);
  r(1, 1) = std::exp(lam2);
  r(2, 2) = std::exp(lam3);
  // (e^a - e^b)/(a-b) = e^{(a+b)/2} sinch((a-b)/2)
  r(0, 1) = x.x2 * std::exp(0.5 * (lam1 + lam2)) * sinch_scalar(0.5 * gap);
  r(2, 0) =
      mass.m * x.x2 * std::exp(0.5 * (lam3 + lam1)) * sinch_scalar(0.5 * gap);
  // (e^{mu-d} - 2e^{mu} + e^{mu+d})/(2d^2) = e^{mu} sinch(d/2)^2 / 2
  const double sh = sinch_scalar(0.5 * gap);
  r(2, 1) = 0.5 * mass.m * x.x2 * x.x2 * std::exp(lam1) * sh * sh;
  return r;
}

/// sinch(X_q / 2) in closed form; agrees with the series on all of R^3.
inline Mat3 sinch_Xq_closed(const SubalgebraCoords& x, const MassParam& mass) {
  return detail::matrix_function_Xq(x, mass, detail::SinchHalfFn{});
}

/// Inverse of sinch(X_q / 2); well defined since scalar sinch never vanishes.
inline Mat3 inv_sinch_Xq_closed(const SubalgebraCoords& x,
                                const MassParam& mass) {
  return detail::matrix_function_Xq(x, mass, detail::InvSinchHalfFn{});
}

/// ad(X_q/2) in the ordered basis (K, D_s, D_T). Coordinate rows act by
/// right multiplication: coords([X_q/2, Z]) = coords(Z) * ad_subalgebra_half.
inline Mat3 ad_subalgebra_half(const SubalgebraCoords& x) {
  Mat3 r = Mat3::Zero();
  r(0, 0) = 0.5 * (x.x1 - x.x3);
  r(1, 0) = -0.5 * x.x2;
  r(2, 0) = 0.5 * x.x2;
  return r;
}

/// sinch(ad X_q/2) in closed form; the off-diagonal entries carry the
/// removable factor (sinch(u) - 1)/u.
inline Mat3 sinch_ad_closed(const SubalgebraCoords& x) {
  const double u = 0.5 * (x.x1 - x.x3);
  const double w = sinchm1_over(u);
  Mat3 r = Mat3::Identity();
  r(0, 0) = sinch_scalar(u);
  r(1, 0) = -0.5 * x.x2 * w;
  r(2, 0) = 0.5 * x.x2 * w;
  return r;
}

inline double det_sinch_ad(const SubalgebraCoords& x) {
  return sinch_scalar(0.5 * (x.x1 - x.x3));
}

}  // namespace galiwig
