#pragma once

// Least-squares extraction of decay/growth laws from sampled norm histories.
// Three models:
//   power      v ~ C * t^e               (fit log v against log t)
//   power_log  v ~ C * t^e * (log t)^p   (p in {0,1}, chosen by residual)
//   pure_log   v ~ A * log t + B         (fit v against log t; A is reported
//                                         in fitted_exponent)

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "resonance_lab/errors.hpp"

namespace rlab {

enum class FitModel { power, power_log, pure_log };

inline const char* to_string(FitModel m) {
  switch (m) {
    case FitModel::power: return "power";
    case FitModel::power_log: return "power_log";
    default: return "pure_log";
  }
}

struct FitResult {
  FitModel model = FitModel::power;
  // Slope on the model's abscissa: the power of t for power/power_log, the
  // coefficient A of log t for pure_log.
  double fitted_exponent = 0;
  double fitted_log_power = 0;  // p for power_log, 1 for pure_log, else 0
  double r_squared = 0;
  double window_t_min = 0;
  double window_t_max = 0;
  double residual_max = 0;  // max |data - model| on the fit's ordinate
};

namespace fit_detail {

struct LineFit {
  double slope = 0;
  double intercept = 0;
  double r_squared = 1;
  double residual_max = 0;
  double residual_sq = 0;
};

inline LineFit fit_line(const std::vector<double>& xs,
                        const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  LineFit out;
  out.slope = sxy / sxx;  // abscissa spans a decade, sxx > 0
  out.intercept = my - out.slope * mx;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ys[i] - (out.slope * xs[i] + out.intercept);
    out.residual_sq += r * r;
    out.residual_max = std::max(out.residual_max, std::fabs(r));
  }
  if (syy > 0)
    out.r_squared = std::clamp(1.0 - out.residual_sq / syy, 0.0, 1.0);
  else
    out.r_squared = out.residual_sq > 0 ? 0.0 : 1.0;
  return out;
}

}  // namespace fit_detail

inline FitResult fit_decay(const std::vector<double>& times,
                           const std::vector<double>& values, FitModel model) {
  if (times.size() != values.size())
    throw domain_error("fit_decay: times and values must have equal length");
  if (times.size() < 8)
    throw domain_error("fit_decay: needs at least 8 samples");
  double t_min = times.front(), t_max = times.front();
  for (double t : times) {
    if (!(t > 0)) throw domain_error("fit_decay: sample times must be > 0");
    t_min = std::min(t_min, t);
    t_max = std::max(t_max, t);
  }
  if (t_max < 10.0 * t_min * (1.0 - 1e-12))
    throw domain_error(
        "fit_decay: sample times must span at least one decade (t_max >= "
        "10 t_min)");
  for (double v : values)
    if (!(v > 0))
      throw domain_error("fit_decay: values must be strictly positive");
  if (model == FitModel::power_log && !(t_min > 1.0))
    throw domain_error(
        "fit_decay: the power_log model needs all sample times > 1 (it uses "
        "log log t)");

  const std::size_t n = times.size();
  std::vector<double> logt(n);
  for (std::size_t i = 0; i < n; ++i) logt[i] = std::log(times[i]);

  FitResult out;
  out.model = model;
  out.window_t_min = t_min;
  out.window_t_max = t_max;

  if (model == FitModel::pure_log) {
    const auto lf = fit_detail::fit_line(logt, values);
    out.fitted_exponent = lf.slope;  // A in v ~ A log t + B
    out.fitted_log_power = 1;
    out.r_squared = lf.r_squared;
    out.residual_max = lf.residual_max;
    return out;
  }

  std::vector<double> logv(n);
  for (std::size_t i = 0; i < n; ++i) logv[i] = std::log(values[i]);

  if (model == FitModel::power) {
    const auto lf = fit_detail::fit_line(logt, logv);
    out.fitted_exponent = lf.slope;
    out.fitted_log_power = 0;
    out.r_squared = lf.r_squared;
    out.residual_max = lf.residual_max;
    return out;
  }

  // power_log: try p = 0 and p = 1, keep the smaller squared residual.
  fit_detail::LineFit best;
  int best_p = 0;
  for (int p = 0; p <= 1; ++p) {
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i)
      y[i] = logv[i] - p * std::log(logt[i]);
    const auto lf = fit_detail::fit_line(logt, y);
    if (p == 0 || lf.residual_sq < best.residual_sq) {
      best = lf;
      best_p = p;
    }
  }
  out.fitted_exponent = best.slope;
  out.fitted_log_power = best_p;
  out.r_squared = best.r_squared;
  out.residual_max = best.residual_max;
  return out;
}

}  // namespace rlab
