#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "galiwig/fields.hpp"
#include "galiwig/groups.hpp"
#include "galiwig/measures.hpp"
#include "galiwig/orbits.hpp"
#include "galiwig/quadrature.hpp"
#include "galiwig/report.hpp"

namespace galiwig {

/// Label (gamma, E0) of an induced representation; gamma = 0 labels the
/// degenerate line orbits, which carry no square-integrable representation.
struct UirLabel {
  double gamma;
  double e0;
  Exponent variant;

  UirLabel(double g, double e, Exponent var) : gamma(g), e0(e), variant(var) {
    if (g == 0.0 || !std::isfinite(g))
      throw std::invalid_argument("UirLabel: gamma must be nonzero");
  }
};

/// Induced representation on momentum wavefunctions. The phase follows the
/// extension variant; the argument shift k - m v is evaluated by grid
/// interpolation.
inline SampledWavefunction1D uir_galilei(const UirLabel& label,
                                         const GalileiElement& g,
                                         const SampledWavefunction1D& phi,
                                         const MassParam& mass) {
  if (label.variant != g.variant)
    throw std::invalid_argument("uir_galilei: variant mismatch");
  const double m = mass.m;
  std::vector<cplx> out(phi.grid.n);
  for (int i = 0; i < phi.grid.n; ++i) {
    const double k = phi.grid.point(i);
    double phase;
    if (label.variant == Exponent::Xi1) {
      phase = label.gamma * (g.theta + k * k * g.b / (2.0 * m) - k * g.a) +
              label.e0 * g.b;
    } else {
      phase = label.gamma * (g.theta - k * g.a + 0.5 * m * g.v * g.a +
                             k * k * g.b / (2.0 * m)) +
              label.e0 * g.b;
    }
    out[i] = std::exp(cplx(0.0, phase)) * phi.eval(k - m * g.v);
  }
  return SampledWavefunction1D(phi.grid, std::move(out));
}

struct QuasiRegularResult {
  SampledWavefunction3D field;
  long out_of_box = 0;
};

/// Quasi-regular representation on (p, E, q) wavefunctions:
/// (U f)(row) = e^{3 sigma/2} e^{i(q theta + E b + p a)} f(row * h).
inline QuasiRegularResult quasi_regular_affine(const AffineElement& g,
                                               const SampledWavefunction3D& f,
                                               const MassParam& mass) {
  const Mat3 h = h_matrix(HElement{g.v, g.sigma, g.tau}, mass);
  const double scale = std::exp(1.5 * g.sigma);
  std::vector<cplx> out(f.values.size());
  long misses = 0;
  std::size_t at = 0;
  for (int i = 0; i < f.axes[0].n; ++i) {
    const double p = f.axes[0].point(i);
    for (int j = 0; j < f.axes[1].n; ++j) {
      const double E = f.axes[1].point(j);
      for (int k = 0; k < f.axes[2].n; ++k) {
        const double q = f.axes[2].point(k);
        const Row3 moved = Row3(p, E, q) * h;
        const double phase = q * g.theta + E * g.b + p * g.a;
        out[at++] = scale * std::exp(cplx(0.0, phase)) *
                    f.eval(moved(0), moved(1), moved(2), &misses);
      }
    }
  }
  return {SampledWavefunction3D(f.axes, std::move(out)), misses};
}

/// Multiplier of the Duflo-Moore operator at a point of the q > 0, E0 > 0
/// orbit: (2 pi)^{3/2} sqrt(c1) in the chart k1' = p, k2' = q,
/// k3' = E - p^2/(2 m q).
inline double duflo_moore_factor(double p, double E, double q,
                                 const MassParam& mass) {
  const double k3 = E - p * p / (2.0 * mass.m * q);
  if (!(q > 0.0) || !(k3 > 0.0))
    throw std::domain_error("duflo_moore_factor: point outside the chart");
  return std::pow(2.0 * M_PI, 1.5) /
         (std::sqrt(2.0 * mass.m) * q * std::sqrt(k3));
}

/// Pointwise application of the Duflo-Moore operator; every sample of the
/// field must sit inside the chart.
inline SampledWavefunction3D duflo_moore_apply(const SampledWavefunction3D& f,
                                               const MassParam& mass) {
  std::vector<cplx> out(f.values.size());
  std::size_t at = 0;
  for (int i = 0; i < f.axes[0].n; ++i)
    for (int j = 0; j < f.axes[1].n; ++j)
      for (int k = 0; k < f.axes[2].n; ++k) {
        const double factor =
            duflo_moore_factor(f.axes[0].point(i), f.axes[1].point(j),
                               f.axes[2].point(k), mass);
        out[at] = factor * f.values[at];
        ++at;
      }
  return SampledWavefunction3D(f.axes, std::move(out));
}

/// Plancherel density m |gamma| on the label space.
inline double plancherel_density(const UirLabel& label, const MassParam& mass) {
  return mass.m * std::abs(label.gamma);
}

inline double duflo_moore_constant() { return std::pow(2.0 * M_PI, 1.5); }

struct OrthogonalityResult {
  double value = 0.0;
  double cauchy_defect = 0.0;
  bool warning = false;
};

/// Truncated orthogonality integral
///   I = int int |<psi | U(0,0,a,v) phi>|^2 da dv
/// over [-A, A] x [-V, V] with A = V = quad.half_width. For decaying
/// inputs I approaches (2 pi / (m |gamma|)) ||psi||^2 ||phi||^2; the defect
/// compares the requested box against a 25% larger one.
inline OrthogonalityResult reduced_orthogonality_integral(
    const SampledWavefunction1D& psi, const SampledWavefunction1D& phi,
    const UirLabel& label, const MassParam& mass, const QuadratureSpec& quad) {
  quad.validate();
  const double m = mass.m;
  const double gamma = label.gamma;
  const double h = psi.grid.step();

  auto boxed = [&](double half_width) {
    const QuadratureRule ra = gauss_legendre_symmetric(quad.nodes, half_width);
    const QuadratureRule rv = gauss_legendre_symmetric(quad.nodes, half_width);
    double total = 0.0;
    for (int iv = 0; iv < quad.nodes; ++iv) {
      const double v = rv.nodes[iv];
      // shifted copy phi(k - m v) on the grid of psi
      std::vector<cplx> shifted(psi.grid.n);
      for (int i = 0; i < psi.grid.n; ++i)
        shifted[i] = phi.eval(psi.grid.point(i) - m * v);
      for (int ia = 0; ia < quad.nodes; ++ia) {
        const double a = ra.nodes[ia];
        cplx inner = 0.0;
        for (int i = 0; i < psi.grid.n; ++i) {
          const double w = (i == 0 || i == psi.grid.n - 1) ? 0.5 : 1.0;
          const double k = psi.grid.point(i);
          inner += w * std::conj(psi.values[i]) *
                   std::exp(cplx(0.0, -gamma * k * a)) * shifted[i];
        }
        inner *= h;
        total += ra.weights[ia] * rv.weights[iv] * std::norm(inner);
      }
    }
    return total;
  };

  OrthogonalityResult out;
  out.value = boxed(quad.half_width);
  const double larger = boxed(1.25 * quad.half_width);
  out.cauchy_defect = std::abs(larger - out.value);
  out.warning =
      out.cauchy_defect > 0.005 * std::max({std::abs(out.value),
                                            std::abs(larger), 1e-300});
  return out;
}

/// Grid-level intertwining defect between two labels, minimized over a
/// family of phase and shift candidates. A spot demonstration that distinct
/// labels stay far from unitary equivalence; not a proof.
inline CheckResult uir_inequivalence_scan(const UirLabel& l1,
                                          const UirLabel& l2,
                                          const SampledWavefunction1D& phi,
                                          const MassParam& mass) {
  std::vector<GalileiElement> probes;
  for (double t : {0.4, -0.7})
    for (int which = 0; which < 4; ++which) {
      GalileiElement g;
      g.variant = l1.variant;
      (which == 0 ? g.theta : which == 1 ? g.b : which == 2 ? g.a : g.v) = t;
      probes.push_back(g);
    }

  double best = std::numeric_limits<double>::infinity();
  for (double alpha : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    for (double shift : {-0.5, 0.0, 0.5}) {
      auto apply_candidate = [&](const SampledWavefunction1D& f) {
        std::vector<cplx> v(f.grid.n);
        for (int i = 0; i < f.grid.n; ++i) {
          const double k = f.grid.point(i);
          v[i] = std::exp(cplx(0.0, alpha * k)) * f.eval(k - shift);
        }
        return SampledWavefunction1D(f.grid, std::move(v));
      };
      double defect = 0.0;
      for (const auto& g : probes) {
        const auto lhs = apply_candidate(uir_galilei(l1, g, phi, mass));
        const auto rhs = uir_galilei(l2, g, apply_candidate(phi), mass);
        double acc = 0.0;
        for (int i = 0; i < phi.grid.n; ++i)
          acc += std::norm(lhs.values[i] - rhs.values[i]);
        defect = std::max(defect, std::sqrt(acc * phi.grid.step()));
      }
      best = std::min(best, defect);
    }
  }

  CheckResult r;
  r.suite = "representations";
  r.name = "uir_inequivalence_defect";
  r.max_err = best;
  r.asserted = false;
  r.notes = "labels=(" + format_double(l1.gamma) + "," + format_double(l1.e0) +
            ")vs(" + format_double(l2.gamma) + "," + format_double(l2.e0) + ")";
  return r;
}

}  // namespace galiwig
