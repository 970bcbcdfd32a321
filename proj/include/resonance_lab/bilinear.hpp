#pragma once
#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <utility>

#include "resonance_lab/box.hpp"
#include "resonance_lab/errors.hpp"
#include "resonance_lab/smooth.hpp"
#include "resonance_lab/spectral.hpp"

namespace rlab {

// Compactly supported bilinear symbol m(xi, eta).  The evaluator is only
// consulted inside the support box; outside it the symbol is zero by
// construction.
struct BilinearSymbol {
  FrequencyBox support_box;
  std::function<complex(double, double)> evaluator;
  double sup_bound = 1.0;
  std::string smoothness_note;

  complex eval(double xi, double eta) const {
    if (!support_box.contains(xi, eta)) return complex(0, 0);
    return evaluator(xi, eta);
  }
};

inline BilinearSymbol make_constant_symbol(FrequencyBox box,
                                           complex value = complex(1, 0)) {
  BilinearSymbol m;
  m.support_box = box;
  m.evaluator = [value](double, double) { return value; };
  m.sup_bound = std::abs(value);
  m.smoothness_note = "constant on its box (sharp cutoff at the edge)";
  return m;
}

// Smooth product-plateau window: identically 1 on the inner (1 - roll)
// fraction of the box, rolling to 0 at the edge.
inline BilinearSymbol make_window_symbol(double center_xi, double center_eta,
                                         double half_width_xi,
                                         double half_width_eta,
                                         double roll = 0.3) {
  if (!(half_width_xi > 0) || !(half_width_eta > 0))
    throw config_error("window symbol half-widths must be positive");
  if (!(roll > 0) || !(roll < 1))
    throw config_error("window symbol roll fraction must lie in (0, 1)");
  BilinearSymbol m;
  m.support_box = FrequencyBox{center_xi - half_width_xi,
                               center_xi + half_width_xi,
                               center_eta - half_width_eta,
                               center_eta + half_width_eta};
  m.evaluator = [=](double xi, double eta) {
    return complex(smooth_plateau((xi - center_xi) / half_width_xi, roll) *
                       smooth_plateau((eta - center_eta) / half_width_eta,
                                      roll),
                   0.0);
  };
  m.sup_bound = 1.0;
  m.smoothness_note = "smooth plateau window (flat core, smooth roll-off)";
  return m;
}

// T_m(f,g) on the frequency side: the output coefficient at xi is the
// frequency_step-weighted sum over eta of m(xi - eta, eta) hat f(xi - eta)
// hat g(eta).  The normalization makes m == 1 reproduce the pointwise
// product f g exactly (discrete convolution theorem).
inline Spectrum apply_bilinear_multiplier(const BilinearSymbol& m,
                                          const Spectrum& f,
                                          const Spectrum& g) {
  if (!(f.grid == g.grid))
    throw config_error("bilinear multiplier requires matching grids");
  const Grid& grid = f.grid;
  const int n = grid.n_points;

  const double reff_f = std::min(f.support_radius, m.support_box.xi_abs_max());
  const double reff_g = std::min(g.support_radius, m.support_box.eta_abs_max());
  const double nyq = grid.max_frequency();
  if (reff_f + reff_g > nyq * (1 + 1e-12))
    throw config_error(
        "bilinear output support " + std::to_string(reff_f + reff_g) +
        " exceeds the Nyquist frequency " + std::to_string(nyq) +
        "; enlarge the grid or narrow the data");

  // index windows covering the effective supports
  const double dxi = grid.frequency_step();
  auto window = [&](double lo, double hi, int& k0, int& k1) {
    k0 = std::max(0, static_cast<int>(std::floor(lo / dxi)) + n / 2 - 1);
    k1 = std::min(n - 1, static_cast<int>(std::ceil(hi / dxi)) + n / 2 + 1);
  };
  int f0, f1, g0, g1;
  window(std::max(-f.support_radius, m.support_box.xi_lo),
         std::min(f.support_radius, m.support_box.xi_hi), f0, f1);
  window(std::max(-g.support_radius, m.support_box.eta_lo),
         std::min(g.support_radius, m.support_box.eta_hi), g0, g1);

  Spectrum out;
  out.grid = grid;
  out.coefficients.assign(static_cast<std::size_t>(n), complex(0, 0));
  out.support_radius = std::min(reff_f + reff_g, nyq);
  out.feature_width = std::min(f.feature_width, g.feature_width);

  const double scale = dxi / std::sqrt(2.0 * M_PI);
  for (int j = g0; j <= g1; ++j) {
    const complex gj = g.coefficients[j];
    if (gj == complex(0, 0)) continue;
    const double eta = grid.xi(j);
    if (eta < m.support_box.eta_lo || eta > m.support_box.eta_hi) continue;
    for (int i = f0; i <= f1; ++i) {
      const complex fi = f.coefficients[i];
      if (fi == complex(0, 0)) continue;
      const double xi = grid.xi(i);
      if (xi < m.support_box.xi_lo || xi > m.support_box.xi_hi) continue;
      const int k = i + j - n / 2;  // bin of the output frequency xi + eta
      if (k < 0 || k >= n) continue;
      const complex mv = m.evaluator(xi, eta);
      if (mv == complex(0, 0)) continue;
      out.coefficients[k] += scale * mv * fi * gj;
    }
  }
  return out;
}

}  // namespace rlab
