#pragma once
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "resonance_lab/dispersion.hpp"
#include "resonance_lab/errors.hpp"
#include "resonance_lab/fresnel.hpp"
#include "resonance_lab/smooth.hpp"

namespace rlab {

// smooth compactly supported amplitude factor chi(sigma)
struct Amplitude {
  enum class Kind { bump, plateau };
  Kind kind = Kind::bump;
  double center = 0.0;
  double radius = 1.0;
  double scale = 1.0;
  double roll = 0.3;  // plateau shoulder fraction

  double lo() const { return center - radius; }
  double hi() const { return center + radius; }

  double operator()(double sigma) const {
    const double u = (sigma - center) / radius;
    if (kind == Kind::bump) return scale * smooth_bump(u);
    return scale * smooth_plateau(u, roll);
  }
};

inline Amplitude bump_amplitude(double center, double radius,
                                double scale = 1.0) {
  if (!(radius > 0)) throw config_error("amplitude radius must be positive");
  return Amplitude{Amplitude::Kind::bump, center, radius, scale, 0.3};
}

inline Amplitude plateau_amplitude(double center, double radius,
                                   double scale = 1.0, double roll = 0.3) {
  if (!(radius > 0)) throw config_error("amplitude radius must be positive");
  if (!(roll > 0 && roll < 1))
    throw config_error("plateau roll fraction must lie in (0,1)");
  return Amplitude{Amplitude::Kind::plateau, center, radius, scale, roll};
}

// weight factor: 1, sigma^{-1/2}, or (sigma - eps)^{-1/2}
struct Weight {
  enum class Kind { none, inv_sqrt_sigma, inv_sqrt_sigma_shifted };
  Kind kind = Kind::none;
  double eps = 0.0;

  static Weight none_weight() { return Weight{Kind::none, 0.0}; }
  static Weight inv_sqrt() { return Weight{Kind::inv_sqrt_sigma, 0.0}; }
  static Weight inv_sqrt_shifted(double eps) {
    if (!(eps >= 0))
      throw config_error("shifted weight offset must be nonnegative");
    return Weight{Kind::inv_sqrt_sigma_shifted, eps};
  }

  bool singular() const { return kind != Kind::none; }
  double anchor() const {
    return kind == Kind::inv_sqrt_sigma_shifted ? eps : 0.0;
  }
};

// I(t) = int_{lower_limit}^{infinity} exp(i t phase(sigma)) weight(sigma)
//        amplitude(sigma) dsigma
struct OscIntegralSpec {
  Polynomial phase;
  Amplitude amplitude;
  Weight weight;
  double t = 1.0;
  double lower_limit = 0.0;
};

namespace osc_detail {

inline void validate(const OscIntegralSpec& spec) {
  if (!(spec.t > 0)) throw config_error("oscillatory time must be positive");
  if (!(spec.t <= 1e5))
    throw config_error("oscillatory time must not exceed 1e5");
  if (!(spec.lower_limit >= 0))
    throw config_error("lower integration limit must be nonnegative");
  if (spec.weight.singular() &&
      std::fabs(spec.weight.anchor() - spec.lower_limit) > 1e-12) {
    std::ostringstream os;
    os << "weight singularity at " << spec.weight.anchor()
       << " must coincide with the lower integration limit "
       << spec.lower_limit;
    throw config_error(os.str());
  }
}

// greedy oscillation-resolving breakpoints: panel width at u kept below
// pi / (4 rate(u) + 4)
template <class Rate>
std::vector<double> build_panels(Rate&& rate, double a, double b, double cap) {
  std::vector<double> bp{a};
  double u = a;
  while (u < b) {
    double step = std::min(cap, M_PI / (4.0 * std::fabs(rate(u)) + 4.0));
    double e = std::min(b, u + step);
    const double step2 =
        std::min(cap, M_PI / (4.0 * std::fabs(rate(e)) + 4.0));
    if (step2 < step) e = std::min(b, u + step2);
    bp.push_back(e);
    u = e;
  }
  return bp;
}

template <class F>
std::complex<double> sum_panels(F&& f, const std::vector<double>& bp,
                                int split) {
  std::complex<double> acc(0, 0);
  for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
    const double w = (bp[k + 1] - bp[k]) / split;
    for (int j = 0; j < split; ++j)
      acc += quad_detail::gl10(f, bp[k] + j * w, bp[k] + (j + 1) * w);
  }
  return acc;
}

}  // namespace osc_detail

// quadrature route: exact smooth truncation by the amplitude support,
// square-root substitution at a singular lower endpoint, and panel-halving
// refinement to an absolute tolerance of 1e-9
inline std::complex<double> oracle_integral(const OscIntegralSpec& spec) {
  osc_detail::validate(spec);
  const double a = std::max(spec.lower_limit, spec.amplitude.lo());
  const double b = spec.amplitude.hi();
  if (!(a < b)) return {0.0, 0.0};

  const std::complex<double> I(0, 1);
  const double t = spec.t;
  const Polynomial& z = spec.phase;

  // integrand in the working variable and its oscillation rate
  std::function<std::complex<double>(double)> f;
  std::function<double(double)> rate;
  double ulo, uhi, cap;
  if (!spec.weight.singular()) {
    ulo = a;
    uhi = b;
    cap = std::max(1e-3, (b - a) / 8.0);
    f = [&, t](double s) { return std::exp(I * (t * z(s))) * spec.amplitude(s); };
    rate = [&, t](double s) { return t * z.d1(s); };
  } else {
    // sigma = anchor + u^2 removes the (sigma - anchor)^{-1/2} factor
    const double anchor = spec.weight.anchor();
    ulo = std::sqrt(std::max(0.0, a - anchor));
    uhi = std::sqrt(b - anchor);
    cap = std::max(1e-3, (uhi - ulo) / 8.0);
    f = [&, t, anchor](double u) {
      const double s = anchor + u * u;
      return 2.0 * std::exp(I * (t * z(s))) * spec.amplitude(s);
    };
    rate = [&, t, anchor](double u) {
      return 2.0 * u * t * z.d1(anchor + u * u);
    };
  }

  // cheap node-count forecast before committing memory to the panel list
  const long budget = 60'000'000;
  {
    double rate_integral = 0.0;
    const int m = 256;
    const double h = (uhi - ulo) / m;
    for (int k = 0; k <= m; ++k)
      rate_integral += std::fabs(rate(ulo + k * h)) * (k == 0 || k == m ? 0.5 : 1.0);
    rate_integral *= h;
    const double est =
        (4.0 * rate_integral + 4.0 * (uhi - ulo)) / M_PI + (uhi - ulo) / cap + 2.0;
    if (est * 10.0 > static_cast<double>(budget)) {
      std::ostringstream os;
      os << "oscillatory quadrature node budget " << budget
         << " exceeded: about " << static_cast<long>(est * 10.0)
         << " evaluations required at the base resolution";
      throw accuracy_error(os.str());
    }
  }

  const std::vector<double> bp = osc_detail::build_panels(rate, ulo, uhi, cap);
  long nodes = static_cast<long>(bp.size()) * 10;
  std::complex<double> coarse = osc_detail::sum_panels(f, bp, 1);
  int split = 2;
  const double tol = 1e-9;
  for (int round = 0; round < 14; ++round) {
    const long next = static_cast<long>(bp.size()) * 10 * split;
    if (nodes + next > budget) {
      std::ostringstream os;
      os << "oscillatory quadrature node budget " << budget
         << " exceeded before reaching tolerance " << tol;
      throw accuracy_error(os.str());
    }
    const std::complex<double> fine = osc_detail::sum_panels(f, bp, split);
    nodes += next;
    if (std::abs(fine - coarse) <= tol) return fine;
    coarse = fine;
    split *= 2;
  }
  std::ostringstream os;
  os << "oscillatory quadrature failed to reach tolerance " << tol
     << " within the refinement limit";
  throw accuracy_error(os.str());
}

}  // namespace rlab
