#pragma once

#include <array>
#include <functional>

namespace dickesim {

struct Optimum1D {
  double x = 0.0;
  double value = 0.0;
  int evaluations = 0;
  double lo = 0.0;
  double hi = 0.0;
};

// Brent minimization (golden section with parabolic refinement) on
// [lo, hi].  The objective must be unimodal there for the tolerance
// guarantee; callers needing robustness should wrap with a multistart.
Optimum1D minimize_scalar(const std::function<double(double)>& objective, double lo,
                          double hi, double xtol = 1e-8);

struct Optimum2D {
  std::array<double, 2> point{0.0, 0.0};
  double value = 0.0;
  double simplex_spread = 0.0;
  int evaluations = 0;
};

// Downhill-simplex minimization over the open domain {x > 0, y > 1},
// enforced by a softplus reparameterization so the simplex never sees
// the boundary.  `restarts` > 1 adds deterministic extra starts chosen
// from a fixed 16x16 log-spaced grid (x in [0.1, 20], y in [1.01, 50])
// ranked by objective value; the best result is returned.
Optimum2D minimize_2d(const std::function<double(double, double)>& objective,
                      std::array<double, 2> start, double tol = 1e-6, int restarts = 1);

}  // namespace dickesim
