#pragma once

#include "galiwig/groups.hpp"
#include "galiwig/lie.hpp"
#include "galiwig/orbits.hpp"
#include "galiwig/rng.hpp"

namespace galiwig {

inline AffineElement random_affine(Rng& rng, double range = 1.5) {
  AffineElement g;
  g.theta = rng.uniform(-range, range);
  g.b = rng.uniform(-range, range);
  g.a = rng.uniform(-range, range);
  g.v = rng.uniform(-range, range);
  g.sigma = rng.uniform(-range, range);
  g.tau = rng.uniform(-range, range);
  return g;
}

inline GalileiElement random_galilei(Rng& rng, Exponent variant,
                                     double range = 1.5) {
  GalileiElement g;
  g.theta = rng.uniform(-range, range);
  g.b = rng.uniform(-range, range);
  g.a = rng.uniform(-range, range);
  g.v = rng.uniform(-range, range);
  g.variant = variant;
  return g;
}

inline HElement random_h(Rng& rng, double range = 1.5) {
  return HElement{rng.uniform(-range, range), rng.uniform(-range, range),
                  rng.uniform(-range, range)};
}

inline SubalgebraCoords random_subalgebra(Rng& rng, double range = 3.0,
                                          double min_gap = 0.1) {
  for (;;) {
    SubalgebraCoords x{rng.uniform(-range, range), rng.uniform(-range, range),
                       rng.uniform(-range, range)};
    if (std::abs(x.x1 - x.x3) > min_gap) return x;
  }
}

/// Random point in one of the four open dual orbits, with margins keeping
/// it away from the separating surfaces.
inline DualPoint3 random_dual_open(Rng& rng, OrbitClass orbit,
                                   const MassParam& mass) {
  const bool q_pos = orbit == OrbitClass::O1 || orbit == OrbitClass::O2;
  const bool e0_pos = orbit == OrbitClass::O1 || orbit == OrbitClass::O4;
  DualPoint3 x;
  x.q = (q_pos ? 1.0 : -1.0) * rng.uniform(0.1, 2.5);
  x.p = rng.uniform(-2.5, 2.5);
  const double e0 = (e0_pos ? 1.0 : -1.0) * rng.uniform(0.1, 2.5);
  x.E = x.p * x.p / (2.0 * mass.m * x.q) + e0;
  return x;
}

}  // namespace galiwig
