#pragma once
#include <cmath>

namespace rlab {

// Standard compactly supported C-infinity bump on (-1, 1), normalized to
// value 1 at the center: exp(1 - 1/(1 - u^2)).
inline double smooth_bump(double u) {
  const double u2 = u * u;
  if (u2 >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - u2));
}

namespace detail {
inline double half_transition(double v) {
  return v > 0 ? std::exp(-1.0 / v) : 0.0;
}
}  // namespace detail

// C-infinity monotone step: 0 for v <= 0, 1 for v >= 1.
inline double smooth_step(double v) {
  const double h0 = detail::half_transition(v);
  const double h1 = detail::half_transition(1.0 - v);
  return h0 / (h0 + h1);
}

// C-infinity plateau on [-1, 1]: identically 1 for |u| <= 1 - roll,
// rolling smoothly to 0 at |u| = 1.
inline double smooth_plateau(double u, double roll = 0.3) {
  const double a = std::fabs(u);
  if (a >= 1.0) return 0.0;
  if (a <= 1.0 - roll) return 1.0;
  return smooth_step((1.0 - a) / roll);
}

}  // namespace rlab
