#pragma once
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "resonance_lab/fresnel.hpp"
#include "resonance_lab/osc_leading.hpp"
#include "resonance_lab/osc_quadrature.hpp"

// Canonical demonstration integrals for the oscillatory leading-term
// families, together with far-field reference forms for the boundary
// profiles G1 and G2.  The command-line table writer and the acceptance
// checks both consume this catalogue, so the two stay in sync by
// construction.

namespace rlab {

// ---------------------------------------------------------------------------
// far-field reference forms: the main term each profile settles into on one
// side of the real line, and the order of the remainder it leaves behind
// ---------------------------------------------------------------------------

namespace osc_cases_detail {

inline const SpecialConstants& constants() {
  static const SpecialConstants sc = special_constants();
  return sc;
}

inline std::complex<double> g1_plus_main(double x) {
  const std::complex<double> I(0, 1);
  return -std::exp(I * x * x) / (2.0 * I * x);
}

inline std::complex<double> g1_plus_profile(double x) {
  return fresnel_g1(x);
}

inline std::complex<double> g1_minus_main(double) { return constants().C0; }

inline std::complex<double> g1_minus_profile(double x) {
  return fresnel_g1(-x);
}

inline std::complex<double> g2_plus_main(double x) {
  const std::complex<double> I(0, 1);
  return constants().C_plus * std::exp(I * x * x) * std::sqrt(2.0 / x);
}

inline std::complex<double> g2_plus_profile(double x) {
  return fresnel_g2(x);
}

// two stationary contributions after the square-root substitution
// sigma = -x + v^2: the endpoint v = 0 carries phase x^2, while the interior
// point v = sqrt(x) sits exactly where the original phase vanishes, so its
// contribution carries unit phase
inline std::complex<double> g2_minus_main(double x) {
  const std::complex<double> I(0, 1);
  return constants().C_minus * std::exp(I * x * x) * std::sqrt(2.0 / x) +
         std::sqrt(M_PI) * std::exp(I * M_PI / 4.0) / std::sqrt(x);
}

inline std::complex<double> g2_minus_profile(double x) {
  return fresnel_g2(-x);
}

}  // namespace osc_cases_detail

// one settled regime of a boundary profile: the profile restricted to one
// side (parametrised by x > 0), its far-field main term, and the claimed
// remainder order; remainder(x) should behave like x^{claimed_order}
struct FarFieldForm {
  std::string name;
  double claimed_order;
  std::complex<double> (*profile)(double);
  std::complex<double> (*main_term)(double);

  double remainder(double x) const {
    return std::abs(profile(x) - main_term(x));
  }
};

inline std::vector<FarFieldForm> far_field_forms() {
  using namespace osc_cases_detail;
  return {
      {"G1_plus", -2.0, &g1_plus_profile, &g1_plus_main},
      {"G1_minus", -1.0, &g1_minus_profile, &g1_minus_main},
      {"G2_plus", -5.0 / 6.0, &g2_plus_profile, &g2_plus_main},
      {"G2_minus", -5.0 / 7.0, &g2_minus_profile, &g2_minus_main},
  };
}

// ---------------------------------------------------------------------------
// canonical demonstration integrals, one per leading-term family (two for
// the shifted-weight family, which changes character at |sqrt(t) eps| = 1)
// ---------------------------------------------------------------------------

struct CanonicalOscCase {
  std::string label;
  OscCase which;
  Polynomial phase;
  Amplitude amplitude;
  Weight weight;
  double lower_limit = 0.0;
  std::string note;

  OscIntegralSpec spec_at(double t) const {
    return OscIntegralSpec{phase, amplitude, weight, t, lower_limit};
  }
};

inline std::vector<CanonicalOscCase> canonical_osc_cases() {
  std::vector<CanonicalOscCase> out;
  // convex phase, stationary point inside the support, endpoint below it:
  // the boundary layer is a Fresnel tail seen from its settled side
  out.push_back({"B2_i", OscCase::b2_i,
                 Polynomial::from_coeffs(0.0, -0.8, 1.0, 0.0, 0.0),
                 plateau_amplitude(0.4, 0.6), Weight::none_weight(), 0.0,
                 "convex phase, interior stationary point at 0.4"});
  // monotone phase with an inverse square-root endpoint singularity: the
  // endpoint alone produces the half-order decay
  out.push_back({"B2_ii", OscCase::b2_ii,
                 Polynomial::from_coeffs(0.0, 1.0, 0.3, 0.0, 0.0),
                 plateau_amplitude(0.3, 0.5), Weight::inv_sqrt(), 0.0,
                 "monotone phase, singular endpoint at 0"});
  // singular endpoint plus a separated interior stationary point: two
  // half-order contributions superpose
  out.push_back({"B2_iii", OscCase::b2_iii,
                 Polynomial::from_coeffs(0.25, -1.0, 1.0, 0.0, 0.0),
                 plateau_amplitude(0.5, 0.6), Weight::inv_sqrt(), 0.0,
                 "singular endpoint, stationary point at 0.5"});
  // stationary point colliding with the singular endpoint: the G2 boundary
  // layer at argument 0
  out.push_back({"B2_iv", OscCase::b2_iv,
                 Polynomial::from_coeffs(0.0, 0.0, 1.0, 0.0, 0.0),
                 plateau_amplitude(0.2, 0.5), Weight::inv_sqrt(), 0.0,
                 "stationary point at the singular endpoint"});
  // model quadratic phase truncated away from the stationary point
  out.push_back({"B3_i", OscCase::b3_i,
                 Polynomial::from_coeffs(0.0, 0.0, 1.0, 0.0, 0.0),
                 plateau_amplitude(0.3, 0.55), Weight::none_weight(), 0.2,
                 "model quadratic phase, lower limit 0.2"});
  // model linear phase against the inverse square-root singularity
  out.push_back({"B3_ii", OscCase::b3_ii,
                 Polynomial::from_coeffs(0.0, 1.0, 0.0, 0.0, 0.0),
                 plateau_amplitude(0.3, 0.55), Weight::inv_sqrt(), 0.0,
                 "model linear phase, singular endpoint"});
  // shifted singularity, small offset: |sqrt(t) eps| stays below 1 for
  // every tabulated time
  out.push_back({"B3_iii_small", OscCase::b3_iii,
                 Polynomial::from_coeffs(0.0, 0.0, 1.0, 0.0, 0.0),
                 plateau_amplitude(0.3, 0.55), Weight::inv_sqrt_shifted(0.003),
                 0.003, "shifted singularity, offset 0.003"});
  // shifted singularity, large offset: |sqrt(t) eps| stays above 1 for
  // every tabulated time
  out.push_back({"B3_iii_large", OscCase::b3_iii,
                 Polynomial::from_coeffs(0.0, 0.0, 1.0, 0.0, 0.0),
                 plateau_amplitude(0.3, 0.55), Weight::inv_sqrt_shifted(0.3),
                 0.3, "shifted singularity, offset 0.3"});
  return out;
}

}  // namespace rlab
