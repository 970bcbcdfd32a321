#pragma once
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "resonance_lab/dispersion.hpp"
#include "resonance_lab/errors.hpp"
#include "resonance_lab/fft.hpp"
#include "resonance_lab/grid.hpp"
#include "resonance_lab/smooth.hpp"

namespace rlab {

using complex = std::complex<double>;

// Complex field sampled on the spatial grid, together with its declared
// spectral footprint (band radius and smallest spectral feature width) so
// downstream operations can check aliasing and wrap-around preconditions.
struct SampledState {
  Grid grid;
  std::vector<complex> values;
  double support_radius = 0;  // declared band limit, |xi| <= support_radius
  double feature_width = 0;   // smallest spectral feature scale

  SampledState() = default;
  SampledState(Grid g, std::vector<complex> v)
      : grid(g),
        values(std::move(v)),
        support_radius(g.max_frequency()),
        feature_width(g.frequency_step()) {}
};

// Frequency-side representation; coefficients stored in signed ascending
// bin order, coefficient k living at frequency grid.xi(k).
struct Spectrum {
  Grid grid;
  std::vector<complex> coefficients;
  double support_radius = 0;
  double feature_width = 0;
};

struct NormSpec {
  enum class Kind { lebesgue, weighted_l2 };
  Kind kind = Kind::lebesgue;
  double q = 2.0;                                 // in [2, inf]
  double s = 0.0;                                 // weight exponent >= 0

  static NormSpec lebesgue(double q) {
    if (!(q >= 2.0))
      throw config_error("lebesgue exponent must satisfy q in [2, inf]");
    NormSpec n;
    n.kind = Kind::lebesgue;
    n.q = q;
    return n;
  }
  static NormSpec weighted(double s) {
    if (!(s >= 0.0)) throw config_error("weight exponent must satisfy s >= 0");
    NormSpec n;
    n.kind = Kind::weighted_l2;
    n.s = s;
    return n;
  }

  friend bool operator<(const NormSpec& a, const NormSpec& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.q != b.q) return a.q < b.q;
    return a.s < b.s;
  }
  friend bool operator==(const NormSpec& a, const NormSpec& b) {
    return a.kind == b.kind && a.q == b.q && a.s == b.s;
  }
};

// ---------------------------------------------------------------------------
// transforms (unitary convention: hat f(xi) = (2 pi)^{-1/2} int f e^{-i xi x})
// ---------------------------------------------------------------------------

inline Spectrum transform(const SampledState& state) {
  const Grid& g = state.grid;
  if (static_cast<int>(state.values.size()) != g.n_points)
    throw config_error("state length does not match its grid");
  std::vector<complex> a(state.values);
  // shift to centered frequencies: multiply by (-1)^i before, (-1)^k after
  for (int i = 1; i < g.n_points; i += 2) a[i] = -a[i];
  fft_pow2(a, -1);
  const double scale = g.spacing() / std::sqrt(2.0 * M_PI);
  for (int k = 0; k < g.n_points; ++k) {
    a[k] *= scale;
    if (k & 1) a[k] = -a[k];
  }
  Spectrum out;
  out.grid = g;
  out.coefficients = std::move(a);
  out.support_radius = state.support_radius;
  out.feature_width = state.feature_width;
  return out;
}

inline SampledState inverse_transform(const Spectrum& spec,
                                      int padding_factor = 1) {
  const Grid& g = spec.grid;
  if (static_cast<int>(spec.coefficients.size()) != g.n_points)
    throw config_error("spectrum length does not match its grid");
  if (padding_factor < 1 ||
      (padding_factor & (padding_factor - 1)) != 0)
    throw config_error("padding factor must be a power of two >= 1");

  const int n = g.n_points * padding_factor;
  Grid fine(n, g.length);
  std::vector<complex> a(static_cast<std::size_t>(n), complex(0, 0));
  const int off = (padding_factor - 1) * g.n_points / 2;
  for (int k = 0; k < g.n_points; ++k) a[k + off] = spec.coefficients[k];

  for (int k = 1; k < n; k += 2) a[k] = -a[k];
  fft_pow2(a, +1);
  const double scale = fine.frequency_step() / std::sqrt(2.0 * M_PI);
  for (int i = 0; i < n; ++i) {
    a[i] *= scale;
    if (i & 1) a[i] = -a[i];
  }
  SampledState out;
  out.grid = fine;
  out.values = std::move(a);
  out.support_radius = spec.support_radius;
  out.feature_width = spec.feature_width;
  return out;
}

// Free evolution: multiply each coefficient by exp(i t dr(xi_k)), the
// multiplier solving i d/dt v + dr(D) v = 0 ... v(t) = e^{i t dr(D)} f.
inline Spectrum apply_linear_group(const Spectrum& spec,
                                   const DispersionRelation& dr, double t) {
  Spectrum out = spec;
  for (int k = 0; k < out.grid.n_points; ++k) {
    const double ph = t * dr(out.grid.xi(k));
    out.coefficients[k] *= complex(std::cos(ph), std::sin(ph));
  }
  return out;
}

// ---------------------------------------------------------------------------
// norms
// ---------------------------------------------------------------------------

// L^q / weighted L^2 norms as Riemann sums on the grid; q = inf is the grid
// max.  For weighted norms, mass near the periodic boundary makes <x>
// meaningless, so such results are flagged unreliable through *reliable.
inline double norm(const SampledState& state, const NormSpec& spec,
                   bool* reliable = nullptr) {
  const Grid& g = state.grid;
  const double dx = g.spacing();
  if (reliable) *reliable = true;

  if (spec.kind == NormSpec::Kind::lebesgue) {
    if (std::isinf(spec.q)) {
      double m = 0;
      for (const auto& v : state.values) m = std::max(m, std::abs(v));
      return m;
    }
    double acc = 0;
    for (const auto& v : state.values) acc += std::pow(std::abs(v), spec.q);
    return std::pow(dx * acc, 1.0 / spec.q);
  }

  // weighted L^2 with weight <x>^s on the centered chart
  double total = 0, outer = 0, acc = 0;
  for (int i = 0; i < g.n_points; ++i) {
    const double x = g.x(i);
    const double m2 = std::norm(state.values[i]);
    total += m2;
    if (std::fabs(x) > 0.25 * g.length) outer += m2;
    acc += std::pow(1.0 + x * x, spec.s) * m2;
  }
  if (total > 0 && outer > 1e-6 * total && reliable) *reliable = false;
  return std::sqrt(dx * acc);
}

// ---------------------------------------------------------------------------
// witness data
// ---------------------------------------------------------------------------

enum class WitnessKind { gaussian, flat_spectrum, band_bump };

// Unit-L2 witness: a modulated Gaussian of spatial width `width`, or a
// frequency-side plateau / bump of half-width `width` centered at
// center_freq, shifted in space to center_x.
inline SampledState make_witness(WitnessKind kind, double center_x,
                                 double center_freq, double width,
                                 const Grid& grid) {
  if (!(width > 0)) throw config_error("witness width must be positive");

  Spectrum spec;
  spec.grid = grid;
  spec.coefficients.assign(static_cast<std::size_t>(grid.n_points),
                           complex(0, 0));

  double radius = 0, feature = 0;
  if (kind == WitnessKind::gaussian) {
    if (width < 2 * grid.spacing())
      throw config_error(
          "gaussian witness width below grid resolution (needs >= 2 dx)");
    // hat f(xi) = width * exp(-width^2 (xi-xi_c)^2 / 2) up to normalization;
    // |xi - xi_c| <= 6.8/width keeps the dropped tail below 1e-10 of peak
    radius = std::fabs(center_freq) + 6.8 / width;
    feature = 1.0 / width;
    if (radius > grid.max_frequency())
      throw config_error("gaussian witness spectrum exceeds the Nyquist box");
    for (int k = 0; k < grid.n_points; ++k) {
      const double u = width * (grid.xi(k) - center_freq);
      if (std::fabs(u) > 6.8) continue;
      spec.coefficients[k] = std::exp(-0.5 * u * u);
    }
  } else {
    if (width < 2 * grid.frequency_step())
      throw config_error(
          "spectral witness half-width below frequency resolution (needs >= "
          "2 dxi)");
    radius = std::fabs(center_freq) + width;
    feature = width;
    if (radius > grid.max_frequency())
      throw config_error("spectral witness exceeds the Nyquist box");
    for (int k = 0; k < grid.n_points; ++k) {
      const double u = (grid.xi(k) - center_freq) / width;
      if (std::fabs(u) >= 1.0) continue;
      spec.coefficients[k] = (kind == WitnessKind::flat_spectrum)
                                 ? smooth_plateau(u)
                                 : smooth_bump(u);
    }
  }

  // shift to center_x and normalize to unit L^2 (Plancherel on the bins)
  double l2sq = 0;
  for (int k = 0; k < grid.n_points; ++k) {
    const double ph = -center_x * grid.xi(k);
    spec.coefficients[k] *= complex(std::cos(ph), std::sin(ph));
    l2sq += std::norm(spec.coefficients[k]);
  }
  l2sq *= grid.frequency_step();
  if (l2sq <= 0) throw config_error("witness came out empty on this grid");
  const double inv = 1.0 / std::sqrt(l2sq);
  for (auto& cval : spec.coefficients) cval *= inv;

  spec.support_radius = radius;
  spec.feature_width = feature;
  return inverse_transform(spec);
}

}  // namespace rlab
