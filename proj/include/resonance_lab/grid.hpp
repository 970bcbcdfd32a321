#pragma once
#include <cmath>
#include <string>

#include "resonance_lab/errors.hpp"

namespace rlab {

// Uniform periodic grid on [-L/2, L/2) with a power-of-two point count.
// Physical samples live at x_i = -L/2 + i dx; frequency bins are stored in
// signed ascending order, xi_k = (k - n/2) * dxi with dxi = 2 pi / L.
struct Grid {
  int n_points = 0;
  double length = 0;

  Grid() = default;
  Grid(int n, double L) : n_points(n), length(L) {
    if (n < 8 || (n & (n - 1)) != 0)
      throw config_error("grid size must be a power of two >= 8, got " +
                         std::to_string(n));
    if (!(L > 0)) throw config_error("grid length must be positive");
  }

  double spacing() const { return length / n_points; }
  double frequency_step() const { return 2.0 * M_PI / length; }
  double max_frequency() const { return 0.5 * n_points * frequency_step(); }

  double x(int i) const { return -0.5 * length + i * spacing(); }
  double xi(int k) const { return (k - n_points / 2) * frequency_step(); }

  // nearest bin index for a frequency (clamped into range)
  int bin_of(double xi_value) const {
    int k = n_points / 2 +
            static_cast<int>(std::lround(xi_value / frequency_step()));
    if (k < 0) k = 0;
    if (k >= n_points) k = n_points - 1;
    return k;
  }

  bool operator==(const Grid& o) const {
    return n_points == o.n_points && length == o.length;
  }
};

}  // namespace rlab
