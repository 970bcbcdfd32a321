#pragma once
#include <algorithm>
#include <cmath>

namespace rlab {

// Axis-aligned rectangle in the (xi, eta) plane, where xi is the
// first-factor frequency and eta the second-factor frequency.
struct FrequencyBox {
  double xi_lo = 0, xi_hi = 0, eta_lo = 0, eta_hi = 0;

  bool contains(double xi, double eta) const {
    return xi >= xi_lo && xi <= xi_hi && eta >= eta_lo && eta <= eta_hi;
  }
  double xi_abs_max() const {
    return std::max(std::fabs(xi_lo), std::fabs(xi_hi));
  }
  double eta_abs_max() const {
    return std::max(std::fabs(eta_lo), std::fabs(eta_hi));
  }
  double diagonal() const {
    return std::hypot(xi_hi - xi_lo, eta_hi - eta_lo);
  }
  static FrequencyBox centered(double rx, double re) {
    return {-rx, rx, -re, re};
  }
};

}  // namespace rlab
