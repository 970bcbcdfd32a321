#pragma once

// Encoded decay/growth-rate tables: for a resonant-set geometry, a Lebesgue
// exponent q in [2, inf] and a data-weight exponent s >= 0, each regime below
// returns the predicted envelope  t^exponent * (log t)^log_power  for
// ||u(t)||_{L^q}.  Regimes whose stated rates carry an arbitrarily small
// epsilon loss are flagged delta_slack.
//
// Regimes:
//   geometry_table             unweighted data; rate keyed by the geometry of
//                              the resonant interaction set
//   transversal_generic        unweighted data; the generic rate under the
//                              transversality hypothesis on the group
//                              velocities, t^{1/2 + 1/(2q)}
//   weighted_interpolation     weighted data; rate interpolates linearly in s
//                              below s = 1/2
//   curve_weighted             interaction set is a noncharacteristic curve;
//                              weighted data
//   velocity_separated_weighted weighted data; the two input group velocities
//                              never coincide on the symbol support
//   point_resonance_weighted   weighted data; interaction set is a single
//                              transversal point (the sharp table)
//   point_resonance_lower      lower bounds for the transversal-point case
//                              (growth floor, not an upper envelope)

#include <cmath>
#include <limits>
#include <string>

#include "resonance_lab/errors.hpp"
#include "resonance_lab/geometry.hpp"

namespace rlab {

struct DecayLaw {
  double exponent = 0;   // power of t
  int log_power = 0;     // power of log t, >= 0
  bool delta_slack = false;  // rate stated up to an arbitrarily small loss

  friend bool operator==(const DecayLaw& a, const DecayLaw& b) {
    return a.exponent == b.exponent && a.log_power == b.log_power &&
           a.delta_slack == b.delta_slack;
  }
};

// Local log-log slope of the envelope t^e (log t)^p at time t; used to
// compare a measured power-fit exponent against a prediction that carries
// log factors.
inline double effective_exponent_at(const DecayLaw& law, double t) {
  if (!(t > 1.0))
    throw domain_error("effective_exponent_at: needs t > 1");
  return law.exponent + law.log_power / std::log(t);
}

enum class RateRegime {
  geometry_table,
  transversal_generic,
  weighted_interpolation,
  curve_weighted,
  velocity_separated_weighted,
  point_resonance_weighted,
  point_resonance_lower
};

inline const char* to_string(RateRegime r) {
  switch (r) {
    case RateRegime::geometry_table: return "geometry_table";
    case RateRegime::transversal_generic: return "transversal_generic";
    case RateRegime::weighted_interpolation: return "weighted_interpolation";
    case RateRegime::curve_weighted: return "curve_weighted";
    case RateRegime::velocity_separated_weighted:
      return "velocity_separated_weighted";
    case RateRegime::point_resonance_weighted:
      return "point_resonance_weighted";
    default: return "point_resonance_lower";
  }
}

namespace rate_detail {

constexpr double kBoundaryTol = 1e-12;

inline void require_q(double q) {
  if (!(q >= 2.0))
    throw domain_error("rate table requires q in [2, inf]");
}

inline void require_unweighted(double s, const char* regime) {
  if (s != 0.0)
    throw domain_error(std::string(regime) +
                       " is an unweighted-data table; it requires s = 0");
}

inline void reject_boundary(double s, double edge, const char* strip) {
  if (std::fabs(s - edge) <= kBoundaryTol)
    throw domain_error(std::string("rate table boundary s = ") + strip +
                       " is ambiguous between two regimes; query strictly "
                       "inside a strip");
}

}  // namespace rate_detail

inline DecayLaw expected_rate(const GammaClass& cls, double q, double s,
                              RateRegime regime) {
  using Tag = GammaClass::Tag;
  rate_detail::require_q(q);
  if (!(s >= 0.0))
    throw domain_error("rate table requires a weight exponent s >= 0");
  const bool qinf = std::isinf(q);
  const double inv_q = qinf ? 0.0 : 1.0 / q;
  const double half_q = 0.5 * inv_q;

  switch (regime) {
    case RateRegime::geometry_table: {
      rate_detail::require_unweighted(s, "geometry_table");
      switch (cls.tag) {
        case Tag::empty:
          return {0.0, 0, false};
        case Tag::point_order2_definite:
          return {0.5 + half_q, 0, false};
        case Tag::curve_noncharacteristic:
          if (qinf) return {0.0, 1, false};
          return {inv_q, 0, false};
        case Tag::curve_nonvanishing_curvature:
          return {0.25 + half_q, 0, false};
        case Tag::curve_general:
        case Tag::transversal_point_intersection:
          // A transversal point of the two resonant sets sits on a smooth
          // interaction curve with no extra structure usable here.
          return {0.5, 0, false};
      }
      throw domain_error("geometry_table: unclassified geometry");
    }

    case RateRegime::transversal_generic:
      rate_detail::require_unweighted(s, "transversal_generic");
      return {0.5 + half_q, 0, false};

    case RateRegime::weighted_interpolation:
      rate_detail::reject_boundary(s, 0.5, "1/2");
      if (s < 0.5) return {0.5 + half_q - s, 0, false};
      if (qinf) return {0.0, 1, false};
      // Re-derived by summing the frequency-ball pieces at dyadic scale
      // eps = 2^j t^{-1/2}; the sign of this strip's exponent is sensitive
      // to that summation and is encoded as +1/(2q).
      return {half_q, 0, false};

    case RateRegime::curve_weighted:
      if (qinf) return {0.0, 1, false};
      rate_detail::reject_boundary(s, 0.25, "1/4");
      if (s < 0.25) return {(1.0 - 4.0 * s) / q, 0, false};
      return {0.0, 1, false};

    case RateRegime::velocity_separated_weighted: {
      rate_detail::reject_boundary(s, inv_q, "1/q");
      rate_detail::reject_boundary(s, 1.0 - inv_q, "1 - 1/q");
      if (s < inv_q) return {half_q + 0.5 - 1.5 * s, 0, true};
      if (s < 1.0 - inv_q) return {0.5 - s, 0, true};
      return {inv_q - 0.5, 0, true};
    }

    case RateRegime::point_resonance_weighted:
      if (s > 1.0 + rate_detail::kBoundaryTol)
        throw domain_error(
            "point_resonance_weighted: valid for s in [0, 1] only");
      rate_detail::reject_boundary(s, 0.25, "1/4");
      if (s < 0.25)
        return {inv_q - s * (0.25 + 7.0 * half_q), 0, true};
      return {-s * (0.25 - half_q), 0, true};

    case RateRegime::point_resonance_lower:
      rate_detail::require_unweighted(s, "point_resonance_lower");
      if (q == 2.0) return {0.0, 1, false};
      return {half_q - 0.25, 0, false};
  }
  throw domain_error("unknown rate regime");
}

}  // namespace rlab
