#pragma once
#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "resonance_lab/errors.hpp"
#include "resonance_lab/fresnel.hpp"
#include "resonance_lab/osc_quadrature.hpp"

namespace rlab {

enum class OscCase { b2_i, b2_ii, b2_iii, b2_iv, b3_i, b3_ii, b3_iii };

inline std::string to_string(OscCase c) {
  switch (c) {
    case OscCase::b2_i: return "b2_i";
    case OscCase::b2_ii: return "b2_ii";
    case OscCase::b2_iii: return "b2_iii";
    case OscCase::b2_iv: return "b2_iv";
    case OscCase::b3_i: return "b3_i";
    case OscCase::b3_ii: return "b3_ii";
    case OscCase::b3_iii: return "b3_iii";
  }
  return "?";
}

struct LeadingTerm {
  std::complex<double> value;
  double claimed_error_order;  // remainder = O(t^{claimed_error_order})
};

namespace osc_detail {

// signed minimum of the second derivative of a quartic over [a, b]:
// candidates are the endpoints plus the interior root of the (linear)
// third derivative
inline double signed_min_d2(const Polynomial& p, double a, double b) {
  double m = std::min(p.d2(a), p.d2(b));
  const double c3 = p.coeffs()[3], c4 = p.coeffs()[4];
  if (std::fabs(c4) > 0) {
    const double r = -c3 / (4.0 * c4);
    if (r > a && r < b) m = std::min(m, p.d2(r));
  }
  return m;
}

// locate a zero of the first derivative near the amplitude support by a
// bracketing scan followed by bisection and Newton polish
inline std::optional<double> stationary_point(const Polynomial& p, double lo,
                                              double hi) {
  const double w = std::max(hi - lo, 1.0);
  const double a = lo - 2.0 * w, b = hi + 2.0 * w;
  const int m = 1024;
  std::vector<double> roots;
  double prev_x = a, prev_v = p.d1(a);
  for (int k = 1; k <= m; ++k) {
    const double x = a + (b - a) * k / m;
    const double v = p.d1(x);
    if (prev_v == 0.0) roots.push_back(prev_x);
    else if ((prev_v < 0) != (v < 0)) {
      double xl = prev_x, xr = x, vl = prev_v;
      for (int it = 0; it < 80; ++it) {
        const double xm = 0.5 * (xl + xr);
        const double vm = p.d1(xm);
        if ((vm < 0) == (vl < 0)) { xl = xm; vl = vm; }
        else xr = xm;
      }
      double r = 0.5 * (xl + xr);
      for (int it = 0; it < 8; ++it) {
        const double d = p.d2(r);
        if (std::fabs(d) < 1e-14) break;
        r -= p.d1(r) / d;
      }
      roots.push_back(r);
    }
    prev_x = x;
    prev_v = v;
  }
  if (roots.empty()) return std::nullopt;
  const double center = 0.5 * (lo + hi);
  double best = roots.front();
  auto rank = [&](double r) {
    return (r >= lo && r <= hi) ? 0.0 : std::fabs(r - center);
  };
  for (double r : roots)
    if (rank(r) < rank(best)) best = r;
  return best;
}

[[noreturn]] inline void fail_hypothesis(OscCase c, const std::string& what) {
  throw hypothesis_error("leading term " + to_string(c) +
                         ": hypothesis failed: " + what);
}

inline void require_weight(const OscIntegralSpec& spec, OscCase c,
                           Weight::Kind kind) {
  if (spec.weight.kind != kind) {
    const char* names[] = {"no weight", "inverse square-root weight",
                           "shifted inverse square-root weight"};
    fail_hypothesis(c, std::string("requires ") +
                           names[static_cast<int>(kind)]);
  }
}

inline void require_model_phase(const OscIntegralSpec& spec, OscCase c,
                                int degree) {
  const auto& q = spec.phase.coeffs();
  const bool quadratic =
      std::fabs(q[0]) <= 1e-12 && std::fabs(q[1]) <= 1e-12 &&
      std::fabs(q[2] - 1.0) <= 1e-12 && std::fabs(q[3]) <= 1e-12 &&
      std::fabs(q[4]) <= 1e-12;
  const bool linear = std::fabs(q[0]) <= 1e-12 &&
                      std::fabs(q[1] - 1.0) <= 1e-12 &&
                      std::fabs(q[2]) <= 1e-12 && std::fabs(q[3]) <= 1e-12 &&
                      std::fabs(q[4]) <= 1e-12;
  if (degree == 2 && !quadratic)
    fail_hypothesis(c, "model phase sigma^2 required");
  if (degree == 1 && !linear) fail_hypothesis(c, "model phase sigma required");
}

}  // namespace osc_detail

// closed-form leading asymptotics for the oscillatory integral families;
// the claimed_error_order is the exponent of the remainder bound in t
inline LeadingTerm leading_term(const OscIntegralSpec& spec, OscCase which) {
  osc_detail::validate(spec);
  static const SpecialConstants sc = special_constants();
  const std::complex<double> I(0, 1);
  const double t = spec.t;
  const double rt = std::sqrt(t);
  const Polynomial& z = spec.phase;
  const double L = spec.lower_limit;
  const double a = std::max(L, spec.amplitude.lo());
  const double b = spec.amplitude.hi();
  if (!(a < b))
    return {std::complex<double>(0, 0), -1.0};

  using osc_detail::fail_hypothesis;
  using osc_detail::require_model_phase;
  using osc_detail::require_weight;

  switch (which) {
    case OscCase::b2_i: {
      require_weight(spec, which, Weight::Kind::none);
      const double m2 = osc_detail::signed_min_d2(z, a, b);
      if (!(m2 > 1e-9))
        fail_hypothesis(which,
                        "second derivative of the phase must be strictly "
                        "positive on the support");
      const auto s0 = osc_detail::stationary_point(z, a, b);
      if (!s0) fail_hypothesis(which, "no stationary point located");
      const double sig0 = *s0;
      const double gap = std::max(0.0, z(L) - z(sig0));
      const double w0 = (L >= sig0 ? 1.0 : -1.0) * std::sqrt(gap);
      const std::complex<double> val = std::exp(I * (t * z(sig0))) *
                                       spec.amplitude(sig0) *
                                       std::sqrt(2.0 / z.d2(sig0)) *
                                       fresnel_g1(rt * w0) / rt;
      return {val, -1.0};
    }
    case OscCase::b2_ii: {
      require_weight(spec, which, Weight::Kind::inv_sqrt_sigma);
      if (!(z.min_abs_derivative(1, a, b) > 1e-9))
        fail_hypothesis(which,
                        "first derivative of the phase must be bounded away "
                        "from zero on the support");
      const double d = z.d1(L);
      const std::complex<double> c0 = d > 0 ? sc.C0 : std::conj(sc.C0);
      const std::complex<double> val = spec.amplitude(L) *
                                       std::exp(I * (t * z(L))) * c0 /
                                       std::sqrt(t * std::fabs(d));
      return {val, -1.0};
    }
    case OscCase::b2_iii: {
      require_weight(spec, which, Weight::Kind::inv_sqrt_sigma);
      if (!(z.min_abs_derivative(2, a, b) > 1e-9))
        fail_hypothesis(which,
                        "second derivative of the phase must be bounded away "
                        "from zero on the support");
      const auto s0 = osc_detail::stationary_point(z, a, b);
      if (!s0) fail_hypothesis(which, "no stationary point located");
      const double sig0 = *s0;
      if (!(sig0 > 1e-9))
        fail_hypothesis(which,
                        "stationary point must be strictly positive");
      const double d0 = z.d1(L);
      std::complex<double> val(0, 0);
      if (std::fabs(d0) > 1e-14) {
        const std::complex<double> c0 = d0 > 0 ? sc.C0 : std::conj(sc.C0);
        val += spec.amplitude(L) * std::exp(I * (t * z(L))) * c0 /
               std::sqrt(t * std::fabs(d0));
      }
      const double h = z.d2(sig0);
      const double rho = h > 0 ? 1.0 : -1.0;
      val += std::sqrt(2.0 * M_PI) * std::exp(I * (t * z(sig0))) *
             std::exp(I * rho * M_PI / 4.0) * spec.amplitude(sig0) /
             (std::sqrt(sig0 * std::fabs(h)) * rt);
      return {val, -1.0};
    }
    case OscCase::b2_iv: {
      require_weight(spec, which, Weight::Kind::inv_sqrt_sigma);
      const double m2 = osc_detail::signed_min_d2(z, a, b);
      if (!(m2 > 1e-9))
        fail_hypothesis(which,
                        "second derivative of the phase must be strictly "
                        "positive on the support");
      const auto s0 = osc_detail::stationary_point(z, a, b);
      if (!s0) fail_hypothesis(which, "no stationary point located");
      const double sig0 = *s0;
      const double gap = std::max(0.0, z(0.0) - z(sig0));
      const double w0 = (sig0 > 0 ? -1.0 : 1.0) * std::sqrt(gap);
      double A0;
      if (std::fabs(sig0) <= 1e-10 * std::max(1.0, std::fabs(b))) {
        A0 = spec.amplitude(0.0) * std::pow(2.0 / z.d2(0.0), 0.25);
      } else {
        A0 = spec.amplitude(sig0) * std::sqrt(2.0 / z.d2(sig0)) *
             std::sqrt(std::sqrt(gap) / std::fabs(sig0));
      }
      const std::complex<double> val = std::exp(I * (t * z(sig0))) * A0 *
                                       std::pow(t, -0.25) *
                                       fresnel_g2(rt * w0);
      const double order = std::fabs(rt * sig0) < 1.0 ? -0.75 : -0.5;
      return {val, order};
    }
    case OscCase::b3_i: {
      require_weight(spec, which, Weight::Kind::none);
      require_model_phase(spec, which, 2);
      const std::complex<double> val =
          spec.amplitude(0.0) * fresnel_g1(rt * L) / rt;
      return {val, -1.0};
    }
    case OscCase::b3_ii: {
      require_weight(spec, which, Weight::Kind::inv_sqrt_sigma);
      require_model_phase(spec, which, 1);
      const std::complex<double> val = sc.C0 * spec.amplitude(0.0) / rt;
      return {val, -1.0};
    }
    case OscCase::b3_iii: {
      require_weight(spec, which, Weight::Kind::inv_sqrt_sigma_shifted);
      require_model_phase(spec, which, 2);
      const double eps = spec.weight.eps;
      const std::complex<double> val =
          spec.amplitude(0.0) * std::pow(t, -0.25) * fresnel_g2(rt * eps);
      const double order = std::fabs(rt * eps) < 1.0 ? -0.75 : -0.5;
      return {val, order};
    }
  }
  throw config_error("unknown oscillatory case");
}

}  // namespace rlab
