#pragma once
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "resonance_lab/bilinear.hpp"
#include "resonance_lab/dispersion.hpp"
#include "resonance_lab/errors.hpp"
#include "resonance_lab/geometry.hpp"
#include "resonance_lab/spectral.hpp"

namespace rlab {

// one experimental unit: dispersion triple, interaction symbol, data, grid,
// and the precomputed resonance geometry of the symbol support
struct Scenario {
  DispersionTriple triple;
  BilinearSymbol symbol;
  SampledState f;
  SampledState g;
  Grid grid;
  ResonanceGeometry geometry;
  std::string label;
  double t_max = 100.0;
};

namespace duh_detail {

inline double max_abs_d1(const Polynomial& p, double lo, double hi) {
  double m = std::max(std::fabs(p.d1(lo)), std::fabs(p.d1(hi)));
  std::array<double, 4> roots{};
  int count = 0;
  const auto& c = p.coeffs();
  detail::quadratic_roots_in(12.0 * c[4], 6.0 * c[3], 2.0 * c[2], lo, hi,
                             roots, count);
  for (int i = 0; i < count; ++i)
    m = std::max(m, std::fabs(p.d1(roots[i])));
  return m;
}

// fastest group velocity among the three dispersion relations over the
// frequency ranges the scenario can populate
inline double top_speed(const Scenario& sc) {
  const double nyq = sc.grid.max_frequency();
  const double rf = std::min(sc.f.support_radius, nyq);
  const double rg = std::min(sc.g.support_radius, nyq);
  const double rout = std::min(rf + rg, nyq);
  double v = max_abs_d1(sc.triple.a.p, -rout, rout);
  v = std::max(v, max_abs_d1(sc.triple.b.p, -rf, rf));
  v = std::max(v, max_abs_d1(sc.triple.c.p, -rg, rg));
  return v;
}

inline double min_feature_width(const Scenario& sc) {
  double w = std::min(sc.f.feature_width, sc.g.feature_width);
  if (!(w > 0)) w = sc.grid.frequency_step();
  return w;
}

// minimum of |field| over a dense sample of the symbol support box
template <class F>
double sampled_box_min(const FrequencyBox& box, F&& field, int n = 257) {
  double m = 1e308;
  for (int i = 0; i < n; ++i) {
    const double xi = box.xi_lo + (box.xi_hi - box.xi_lo) * i / (n - 1);
    for (int j = 0; j < n; ++j) {
      const double eta = box.eta_lo + (box.eta_hi - box.eta_lo) * j / (n - 1);
      m = std::min(m, std::fabs(field(xi, eta)));
    }
  }
  return m;
}

template <class F>
double sampled_box_max(const FrequencyBox& box, F&& field, int n = 129) {
  double m = 0;
  for (int i = 0; i < n; ++i) {
    const double xi = box.xi_lo + (box.xi_hi - box.xi_lo) * i / (n - 1);
    for (int j = 0; j < n; ++j) {
      const double eta = box.eta_lo + (box.eta_hi - box.eta_lo) * j / (n - 1);
      m = std::max(m, std::fabs(field(xi, eta)));
    }
  }
  return m;
}

inline std::complex<double> sinc(double z) {
  if (std::fabs(z) < 1e-8) return {1.0, 0.0};
  return {std::sin(z) / z, 0.0};
}

}  // namespace duh_detail

// how far a scenario can be evolved before the fastest wave packet wraps
// around the periodic box: L >= 2 v_max t + 10 / min_width
inline double wraparound_budget(const Scenario& sc) {
  const double v = duh_detail::top_speed(sc);
  const double slack = 10.0 / duh_detail::min_feature_width(sc);
  if (v <= 0) return 1e300;
  return (sc.grid.length - slack) / (2.0 * v);
}

inline void require_time(const Scenario& sc, double t) {
  if (!(t >= 0)) throw config_error("evolution time must be nonnegative");
  const double budget = wraparound_budget(sc);
  if (t > budget) {
    const double v = duh_detail::top_speed(sc);
    const double needed =
        2.0 * v * t + 10.0 / duh_detail::min_feature_width(sc);
    std::ostringstream os;
    os << "time " << t << " exceeds the wrap-around budget " << budget
       << " of scenario '" << sc.label << "': box length " << sc.grid.length
       << " is too short, at least " << needed << " is required";
    throw config_error(os.str());
  }
}

// assembles a Scenario, enforcing grid compatibility, alias safety of the
// data/symbol pairing, and the wrap-around bound for t_max
inline Scenario make_scenario(const DispersionTriple& triple,
                              const BilinearSymbol& symbol,
                              const SampledState& f, const SampledState& g,
                              double t_max, const std::string& label,
                              int geometry_resolution = 192) {
  if (!(f.grid == g.grid))
    throw config_error("scenario data must share one grid");
  Scenario sc;
  sc.triple = triple;
  sc.symbol = symbol;
  sc.f = f;
  sc.g = g;
  sc.grid = f.grid;
  sc.label = label;
  sc.t_max = t_max;

  // alias precheck: effective supports clipped by the symbol box
  const double nyq = sc.grid.max_frequency();
  const double reff_f = std::min(f.support_radius, symbol.support_box.xi_abs_max());
  const double reff_g = std::min(g.support_radius, symbol.support_box.eta_abs_max());
  if (reff_f + reff_g > nyq * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "scenario '" << label << "' is not alias-safe: effective supports "
       << reff_f << " + " << reff_g << " exceed the Nyquist frequency " << nyq;
    throw config_error(os.str());
  }
  require_time(sc, t_max);

  // the trace fills the resonant points, characteristic points and the
  // classification, all relative to the symbol support box
  sc.geometry = trace_resonance_sets(triple, symbol.support_box,
                                     geometry_resolution);
  return sc;
}

// sigma_t(xi, eta) = -e^{i t a(xi+eta)} m (e^{i t phi} - 1) / phi, written in
// the cancellation-free factorization -i t e^{ita} e^{it phi/2} sinc(t phi/2) m
inline BilinearSymbol duhamel_symbol(const DispersionTriple& triple,
                                     const BilinearSymbol& m, double t) {
  if (!(t >= 0)) throw config_error("duhamel symbol requires t >= 0");
  BilinearSymbol out;
  out.support_box = m.support_box;
  out.sup_bound = m.sup_bound * t;
  out.smoothness_note = m.smoothness_note;
  out.evaluator = [triple, m, t](double xi, double eta) {
    const std::complex<double> I(0, 1);
    const double ph = phi(triple, xi, eta);
    return -I * t * std::exp(I * (t * triple.a(xi + eta) + 0.5 * t * ph)) *
           duh_detail::sinc(0.5 * t * ph) * m.eval(xi, eta);
  };
  return out;
}

// symbol-form route: exact in the time integral, one bilinear application
inline Spectrum evolve(const Scenario& sc, double t) {
  require_time(sc, t);
  const Spectrum fh = transform(sc.f);
  const Spectrum gh = transform(sc.g);
  return apply_bilinear_multiplier(duhamel_symbol(sc.triple, sc.symbol, t), fh,
                                   gh);
}

// independent route: composite Simpson quadrature of
// -i int_0^t e^{i(t-s)a(D)} T_m(e^{isb(D)} f, e^{isc(D)} g) ds
inline Spectrum evolve_quadrature(const Scenario& sc, double t, int n_steps) {
  require_time(sc, t);
  const double sup_phi = duh_detail::sampled_box_max(
      sc.symbol.support_box,
      [&](double xi, double eta) { return phi(sc.triple, xi, eta); });
  const int min_steps =
      std::max(2, static_cast<int>(std::ceil(4.0 * t * sup_phi / M_PI)));
  if (n_steps < min_steps) {
    std::ostringstream os;
    os << "time quadrature under-resolved: n_steps " << n_steps
       << " is below the minimum " << min_steps << " required for t = " << t;
    throw config_error(os.str());
  }
  if (n_steps % 2 != 0)
    throw config_error("time quadrature requires an even n_steps");

  const Spectrum fh = transform(sc.f);
  const Spectrum gh = transform(sc.g);
  const std::complex<double> I(0, 1);
  Spectrum acc;
  const double h = t / n_steps;
  for (int k = 0; k <= n_steps; ++k) {
    const double s = h * k;
    const double w = (k == 0 || k == n_steps) ? 1.0 : (k % 2 ? 4.0 : 2.0);
    const Spectrum fs = apply_linear_group(fh, sc.triple.b, s);
    const Spectrum gs = apply_linear_group(gh, sc.triple.c, s);
    Spectrum node = apply_bilinear_multiplier(sc.symbol, fs, gs);
    node = apply_linear_group(node, sc.triple.a, t - s);
    const std::complex<double> factor = -I * w * h / 3.0;
    if (k == 0) {
      acc = node;
      for (auto& z : acc.coefficients) z *= factor;
    } else {
      for (std::size_t j = 0; j < acc.coefficients.size(); ++j)
        acc.coefficients[j] += factor * node.coefficients[j];
    }
  }
  return acc;
}

// exact identity available when the time-resonance set misses the support:
// u(t) = -T_{m/phi}(e^{itb} f, e^{itc} g) + e^{ita(D)} T_{m/phi}(f, g)
struct NoResonancePrediction {
  Spectrum value;           // the full two-term expression
  Spectrum asymptotic_part; // e^{ita(D)} T_{m/phi}(f, g), the persistent term
};

inline NoResonancePrediction predict_no_time_resonance(const Scenario& sc,
                                                       double t) {
  require_time(sc, t);
  const double scale =
      std::max(1.0, duh_detail::sampled_box_max(
                        sc.symbol.support_box, [&](double xi, double eta) {
                          return phi(sc.triple, xi, eta);
                        }));
  const double min_phi = duh_detail::sampled_box_min(
      sc.symbol.support_box,
      [&](double xi, double eta) { return phi(sc.triple, xi, eta); });
  if (!(min_phi > 1e-9 * scale)) {
    std::ostringstream os;
    os << "no-time-resonance identity requires phi bounded away from zero on "
          "the symbol support; sampled min |phi| = "
       << min_phi;
    throw hypothesis_error(os.str());
  }

  BilinearSymbol m_over_phi;
  m_over_phi.support_box = sc.symbol.support_box;
  m_over_phi.sup_bound = sc.symbol.sup_bound / min_phi;
  const BilinearSymbol m = sc.symbol;
  const DispersionTriple triple = sc.triple;
  m_over_phi.evaluator = [triple, m](double xi, double eta) {
    return m.eval(xi, eta) / phi(triple, xi, eta);
  };

  const Spectrum fh = transform(sc.f);
  const Spectrum gh = transform(sc.g);
  const Spectrum ft = apply_linear_group(fh, sc.triple.b, t);
  const Spectrum gt = apply_linear_group(gh, sc.triple.c, t);

  NoResonancePrediction out;
  out.asymptotic_part = apply_linear_group(
      apply_bilinear_multiplier(m_over_phi, fh, gh), sc.triple.a, t);
  out.value = apply_bilinear_multiplier(m_over_phi, ft, gt);
  for (std::size_t j = 0; j < out.value.coefficients.size(); ++j)
    out.value.coefficients[j] =
        -out.value.coefficients[j] + out.asymptotic_part.coefficients[j];
  return out;
}

// truncation of the Duhamel integral to [0, M]; closed form in s, so M = t
// reproduces evolve exactly
inline Spectrum predict_truncated_duhamel(const Scenario& sc, double t,
                                          double M) {
  require_time(sc, t);
  if (!(M >= 0 && M <= t))
    throw config_error("truncation point must satisfy 0 <= M <= t");
  const double delta_scale = std::max(
      1.0, duh_detail::sampled_box_max(
               sc.symbol.support_box, [&](double xi, double eta) {
                 return sc.triple.b.d1(xi) - sc.triple.c.d1(eta);
               }));
  const double min_delta = duh_detail::sampled_box_min(
      sc.symbol.support_box, [&](double xi, double eta) {
        return sc.triple.b.d1(xi) - sc.triple.c.d1(eta);
      });
  if (!(min_delta > 1e-9 * delta_scale)) {
    std::ostringstream os;
    os << "truncated Duhamel limit requires the space-resonance functional "
          "b'(xi) - c'(eta) bounded away from zero on the symbol support; "
          "sampled min = "
       << min_delta;
    throw hypothesis_error(os.str());
  }

  BilinearSymbol trunc;
  trunc.support_box = sc.symbol.support_box;
  trunc.sup_bound = sc.symbol.sup_bound * M;
  const BilinearSymbol m = sc.symbol;
  const DispersionTriple triple = sc.triple;
  trunc.evaluator = [triple, m, t, M](double xi, double eta) {
    const std::complex<double> I(0, 1);
    const double ph = phi(triple, xi, eta);
    return -I * M * std::exp(I * (t * triple.a(xi + eta) + 0.5 * M * ph)) *
           duh_detail::sinc(0.5 * M * ph) * m.eval(xi, eta);
  };
  const Spectrum fh = transform(sc.f);
  const Spectrum gh = transform(sc.g);
  return apply_bilinear_multiplier(trunc, fh, gh);
}

// sqrt(t) * sup_x |u(t) - prediction_M(t)| for a ladder of truncation points
inline std::vector<double> truncated_residuals(const Scenario& sc, double t,
                                               const std::vector<double>& Ms) {
  const Spectrum full = evolve(sc, t);
  std::vector<double> out;
  out.reserve(Ms.size());
  for (double M : Ms) {
    Spectrum pred = predict_truncated_duhamel(sc, t, M);
    for (std::size_t j = 0; j < pred.coefficients.size(); ++j)
      pred.coefficients[j] = full.coefficients[j] - pred.coefficients[j];
    const SampledState diff = inverse_transform(pred, 2);
    out.push_back(std::sqrt(t) * norm(diff, NormSpec::lebesgue(
                                           std::numeric_limits<double>::infinity())));
  }
  return out;
}

// batch evolution: one pass per time, all requested norms from the same
// reconstructed state (padding 2 for stable sup-norms)
struct EvolutionResult {
  enum class Method { symbol_form, time_quadrature };
  std::vector<double> times;
  std::vector<Spectrum> spectra;
  std::map<NormSpec, std::vector<double>> norm_table;
  Method method = Method::symbol_form;
};

inline EvolutionResult evolve_batch(const Scenario& sc,
                                    const std::vector<double>& times,
                                    const std::vector<NormSpec>& norms,
                                    EvolutionResult::Method method =
                                        EvolutionResult::Method::symbol_form,
                                    int quadrature_steps = 0) {
  EvolutionResult res;
  res.method = method;
  res.times = times;
  for (const NormSpec& ns : norms) res.norm_table[ns] = {};
  for (double t : times) {
    Spectrum sp = method == EvolutionResult::Method::symbol_form
                      ? evolve(sc, t)
                      : evolve_quadrature(sc, t, quadrature_steps);
    const SampledState state = inverse_transform(sp, 2);
    for (const NormSpec& ns : norms)
      res.norm_table[ns].push_back(norm(state, ns));
    res.spectra.push_back(std::move(sp));
  }
  return res;
}

}  // namespace rlab
