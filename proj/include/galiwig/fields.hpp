#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace galiwig {

using cplx = std::complex<double>;

struct Grid1D {
  double lo = -1.0;
  double hi = 1.0;
  int n = 0;

  double step() const { return (hi - lo) / (n - 1); }
  double point(int i) const { return lo + step() * i; }
};

namespace detail {

/// Four-point Lagrange weights at local offset s in [0, 1] between the
/// middle pair of an equally spaced stencil.
inline std::array<double, 4> cubic_weights(double s) {
  return {-s * (s - 1.0) * (s - 2.0) / 6.0,
          (s + 1.0) * (s - 1.0) * (s - 2.0) / 2.0,
          -(s + 1.0) * s * (s - 2.0) / 2.0,
          (s + 1.0) * s * (s - 1.0) / 6.0};
}

/// Stencil base index and offset for evaluating at t; returns false when t
/// is outside the grid (zero extension). Points within 1e-9 steps of a
/// node snap onto it, so grid points reproduce exactly.
inline bool locate(const Grid1D& g, double t, int& base, double& s) {
  if (t < g.lo || t > g.hi) return false;
  double u = (t - g.lo) / g.step();
  const double r = std::round(u);
  if (std::abs(u - r) < 1e-9 && r >= 0.0 && r < g.n) u = r;
  base = static_cast<int>(std::floor(u));
  if (base >= g.n - 1) base = g.n - 2;
  s = u - base;
  return true;
}

}  // namespace detail

/// Complex samples on a uniform grid; norms by the trapezoid rule, point
/// evaluation by four-point interpolation with zero extension outside.
struct SampledWavefunction1D {
  Grid1D grid;
  std::vector<cplx> values;

  SampledWavefunction1D(Grid1D g, std::vector<cplx> v)
      : grid(g), values(std::move(v)) {
    if (grid.n < 16)
      throw std::invalid_argument("SampledWavefunction1D: need n >= 16");
    if (!(grid.lo < grid.hi))
      throw std::invalid_argument("SampledWavefunction1D: grid not increasing");
    if (values.size() != static_cast<std::size_t>(grid.n))
      throw std::invalid_argument("SampledWavefunction1D: value count");
  }

  cplx eval(double k) const {
    int base;
    double s;
    if (!detail::locate(grid, k, base, s)) return {};
    const auto w = detail::cubic_weights(s);
    cplx acc = 0.0;
    for (int j = 0; j < 4; ++j) {
      const int idx = base - 1 + j;
      if (idx < 0 || idx >= grid.n) continue;  // zero extension at the rim
      acc += w[j] * values[idx];
    }
    return acc;
  }

  double norm_sq() const {
    double acc = 0.0;
    for (int i = 0; i < grid.n; ++i) {
      const double w = (i == 0 || i == grid.n - 1) ? 0.5 : 1.0;
      acc += w * std::norm(values[i]);
    }
    return acc * grid.step();
  }

  double norm() const { return std::sqrt(norm_sq()); }
};

/// Tensor grid over a (p, E, q) box, values indexed p-major.
struct SampledWavefunction3D {
  std::array<Grid1D, 3> axes;  // (p, E, q)
  std::vector<cplx> values;

  SampledWavefunction3D(std::array<Grid1D, 3> ax, std::vector<cplx> v)
      : axes(ax), values(std::move(v)) {
    std::size_t total = 1;
    for (const auto& a : ax) {
      if (a.n < 4)
        throw std::invalid_argument("SampledWavefunction3D: need n >= 4");
      if (!(a.lo < a.hi))
        throw std::invalid_argument("SampledWavefunction3D: grid");
      total *= static_cast<std::size_t>(a.n);
    }
    if (values.size() != total)
      throw std::invalid_argument("SampledWavefunction3D: value count");
  }

  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * axes[1].n + j) * axes[2].n + k;
  }

  /// Separable cubic interpolation; zero outside the box. The optional
  /// counter tracks out-of-box requests.
  cplx eval(double p, double E, double q, long* out_of_box = nullptr) const {
    int bi, bj, bk;
    double si, sj, sk;
    if (!detail::locate(axes[0], p, bi, si) ||
        !detail::locate(axes[1], E, bj, sj) ||
        !detail::locate(axes[2], q, bk, sk)) {
      if (out_of_box) ++*out_of_box;
      return {};
    }
    const auto wi = detail::cubic_weights(si);
    const auto wj = detail::cubic_weights(sj);
    const auto wk = detail::cubic_weights(sk);
    cplx acc = 0.0;
    for (int a = 0; a < 4; ++a) {
      const int ia = bi - 1 + a;
      if (ia < 0 || ia >= axes[0].n) continue;
      for (int b = 0; b < 4; ++b) {
        const int jb = bj - 1 + b;
        if (jb < 0 || jb >= axes[1].n) continue;
        for (int c = 0; c < 4; ++c) {
          const int kc = bk - 1 + c;
          if (kc < 0 || kc >= axes[2].n) continue;
          acc += wi[a] * wj[b] * wk[c] * values[index(ia, jb, kc)];
        }
      }
    }
    return acc;
  }

  double norm_sq() const {
    double acc = 0.0;
    for (int i = 0; i < axes[0].n; ++i) {
      const double wi = (i == 0 || i == axes[0].n - 1) ? 0.5 : 1.0;
      for (int j = 0; j < axes[1].n; ++j) {
        const double wj = (j == 0 || j == axes[1].n - 1) ? 0.5 : 1.0;
        for (int k = 0; k < axes[2].n; ++k) {
          const double wk = (k == 0 || k == axes[2].n - 1) ? 0.5 : 1.0;
          acc += wi * wj * wk * std::norm(values[index(i, j, k)]);
        }
      }
    }
    return acc * axes[0].step() * axes[1].step() * axes[2].step();
  }

  double norm() const { return std::sqrt(norm_sq()); }
};

struct Gaussian1D {
  double center = 0.0;
  double width = 1.0;
  cplx amp = 1.0;

  cplx eval(double k) const {
    const double z = (k - center) / width;
    return amp * std::exp(-0.5 * z * z);
  }

  /// L2-normalized unit amplitude for this width.
  static Gaussian1D unit(double center = 0.0, double width = 1.0) {
    return {center, width, std::pow(M_PI * width * width, -0.25)};
  }
};

struct Gaussian3D {
  std::array<double, 3> center{0, 0, 0};
  std::array<double, 3> width{1, 1, 1};
  cplx amp = 1.0;

  cplx eval(double p, double E, double q) const {
    const double zp = (p - center[0]) / width[0];
    const double zE = (E - center[1]) / width[1];
    const double zq = (q - center[2]) / width[2];
    return amp * std::exp(-0.5 * (zp * zp + zE * zE + zq * zq));
  }
};

/// Separable test family: Gaussian in k times a Gaussian window in the
/// internal-energy label. The default window is effectively flat over the
/// label ranges the desk-scale integrals explore.
struct GalileiField {
  Gaussian1D k_part = Gaussian1D::unit();
  double e0_center = 0.0;
  double e0_width = 1e4;

  cplx eval(double e0, double k) const {
    const double z = (e0 - e0_center) / e0_width;
    return k_part.eval(k) * std::exp(-0.5 * z * z);
  }
};

inline SampledWavefunction1D sample_gaussian(const Gaussian1D& g, Grid1D grid) {
  std::vector<cplx> v(grid.n);
  for (int i = 0; i < grid.n; ++i) v[i] = g.eval(grid.point(i));
  return SampledWavefunction1D(grid, std::move(v));
}

inline SampledWavefunction3D sample_gaussian3(const Gaussian3D& g,
                                              std::array<Grid1D, 3> axes) {
  std::size_t total = 1;
  for (const auto& a : axes) total *= static_cast<std::size_t>(a.n);
  std::vector<cplx> v(total);
  std::size_t at = 0;
  for (int i = 0; i < axes[0].n; ++i)
    for (int j = 0; j < axes[1].n; ++j)
      for (int k = 0; k < axes[2].n; ++k)
        v[at++] = g.eval(axes[0].point(i), axes[1].point(j), axes[2].point(k));
  return SampledWavefunction3D(axes, std::move(v));
}

}  // namespace galiwig
