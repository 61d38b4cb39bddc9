#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace galiwig {

/// Tensor-product Gauss-Legendre description: symmetric box of the given
/// half-width per axis, fixed node count per axis, and a strip |x1 - x3|
/// below which integrand nodes are skipped (the closed forms reject it).
struct QuadratureSpec {
  double half_width = 4.0;
  int nodes = 48;
  double singular_strip = 1e-6;

  void validate() const {
    if (!(half_width > 0.0))
      throw std::invalid_argument("QuadratureSpec: half_width > 0");
    if (nodes < 8) throw std::invalid_argument("QuadratureSpec: nodes >= 8");
    if (singular_strip < 0.0)
      throw std::invalid_argument("QuadratureSpec: singular_strip >= 0");
  }
};

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1] by Newton iteration on P_n.
inline QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        // one polishing step after convergence
        p0 = 1.0;
        p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        break;
      }
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

/// Rule scaled to [-half_width, half_width].
inline QuadratureRule gauss_legendre_symmetric(int n, double half_width) {
  QuadratureRule rule = gauss_legendre(n);
  for (auto& x : rule.nodes) x *= half_width;
  for (auto& w : rule.weights) w *= half_width;
  return rule;
}

}  // namespace galiwig
