#pragma once

#include "galiwig/sampling.hpp"

namespace galiwig::testing {

using galiwig::random_affine;
using galiwig::random_dual_open;
using galiwig::random_galilei;
using galiwig::random_subalgebra;

inline double tuple_error(const AffineElement& g, const AffineElement& h) {
  auto e = [](double a, double b) {
    return std::abs(a - b) / std::max(1.0, std::abs(b));
  };
  double r = e(g.theta, h.theta);
  r = std::max(r, e(g.b, h.b));
  r = std::max(r, e(g.a, h.a));
  r = std::max(r, e(g.v, h.v));
  r = std::max(r, e(g.sigma, h.sigma));
  r = std::max(r, e(g.tau, h.tau));
  return r;
}

inline double tuple_error(const GalileiElement& g, const GalileiElement& h) {
  auto e = [](double a, double b) {
    return std::abs(a - b) / std::max(1.0, std::abs(b));
  };
  return std::max(std::max(e(g.theta, h.theta), e(g.b, h.b)),
                  std::max(e(g.a, h.a), e(g.v, h.v)));
}

}  // namespace galiwig::testing
