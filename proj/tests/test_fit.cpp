// Least-squares law extraction and the encoded rate tables: exact recovery on
// synthetic histories, noise tolerance, input validation, frozen table values
// for every regime strip, and the cross-table consistency properties.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <vector>

#include "resonance_lab/decay_fit.hpp"
#include "resonance_lab/errors.hpp"
#include "resonance_lab/geometry.hpp"
#include "resonance_lab/rate_experiments.hpp"
#include "resonance_lab/rate_tables.hpp"
#include "resonance_lab/runner.hpp"

using namespace rlab;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

GammaClass tagged(GammaClass::Tag t) {
  GammaClass c;
  c.tag = t;
  return c;
}

std::vector<double> law_values(const std::vector<double>& ts, double c,
                               double e, int p) {
  std::vector<double> v;
  v.reserve(ts.size());
  for (double t : ts) v.push_back(c * std::pow(t, e) * std::pow(std::log(t), p));
  return v;
}

}  // namespace

TEST_CASE("power fit recovers a pure power law exactly") {
  const auto ts = time_ladder(10.0, 1000.0, 9);
  REQUIRE(ts.size() == 9);
  CHECK_THAT(ts.front(), WithinAbs(10.0, 1e-12));
  CHECK_THAT(ts.back(), WithinAbs(1000.0, 1e-9));

  const auto vals = law_values(ts, 3.0, -0.5, 0);
  const FitResult fit = fit_decay(ts, vals, FitModel::power);
  CHECK(fit.model == FitModel::power);
  CHECK_THAT(fit.fitted_exponent, WithinAbs(-0.5, 1e-10));
  CHECK(fit.fitted_log_power == 0.0);
  CHECK_THAT(fit.r_squared, WithinAbs(1.0, 1e-12));
  CHECK(fit.residual_max < 1e-10);
  CHECK_THAT(fit.window_t_min, WithinAbs(10.0, 1e-12));
  CHECK_THAT(fit.window_t_max, WithinAbs(1000.0, 1e-9));
}

TEST_CASE("pure_log fit recovers the log coefficient") {
  const auto ts = time_ladder(10.0, 1000.0, 9);
  std::vector<double> vals;
  for (double t : ts) vals.push_back(2.0 * std::log(t) + 5.0);
  const FitResult fit = fit_decay(ts, vals, FitModel::pure_log);
  CHECK(fit.model == FitModel::pure_log);
  CHECK_THAT(fit.fitted_exponent, WithinAbs(2.0, 1e-8));
  CHECK(fit.fitted_log_power == 1.0);
  CHECK_THAT(fit.r_squared, WithinAbs(1.0, 1e-12));
}

TEST_CASE("power_log fit selects the log factor when present") {
  const auto ts = time_ladder(100.0, 10000.0, 12);

  SECTION("t^{1/4} log t picks p = 1 and recovers the power exactly") {
    const auto vals = law_values(ts, 1.0, 0.25, 1);
    const FitResult fit = fit_decay(ts, vals, FitModel::power_log);
    CHECK(fit.fitted_log_power == 1.0);
    CHECK_THAT(fit.fitted_exponent, WithinAbs(0.25, 1e-10));
    CHECK(fit.residual_max < 1e-10);
  }

  SECTION("a log-free power law picks p = 0") {
    const auto vals = law_values(ts, 2.5, 0.7, 0);
    const FitResult fit = fit_decay(ts, vals, FitModel::power_log);
    CHECK(fit.fitted_log_power == 0.0);
    CHECK_THAT(fit.fitted_exponent, WithinAbs(0.7, 1e-10));
  }
}

TEST_CASE("power fit tolerates 5% multiplicative noise to within 0.05") {
  const auto ts = time_ladder(10.0, 1000.0, 40);
  std::vector<double> vals;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double wiggle = 1.0 + 0.05 * std::sin(7.3 * static_cast<double>(i));
    vals.push_back(3.0 * std::pow(ts[i], -0.5) * wiggle);
  }
  const FitResult fit = fit_decay(ts, vals, FitModel::power);
  CHECK_THAT(fit.fitted_exponent, WithinAbs(-0.5, 0.05));
  CHECK(fit.r_squared > 0.98);
  CHECK(fit.residual_max > 0.0);
}

TEST_CASE("fit_decay validates its inputs") {
  const auto ts = time_ladder(10.0, 1000.0, 9);
  const auto vals = law_values(ts, 1.0, -0.5, 0);

  SECTION("length mismatch") {
    auto short_vals = vals;
    short_vals.pop_back();
    CHECK_THROWS_MATCHES(fit_decay(ts, short_vals, FitModel::power),
                         domain_error, ContainsSubstring("equal length"));
  }

  SECTION("too few samples") {
    const auto ts7 = time_ladder(10.0, 1000.0, 7);
    const auto v7 = law_values(ts7, 1.0, -0.5, 0);
    CHECK_THROWS_MATCHES(fit_decay(ts7, v7, FitModel::power), domain_error,
                         ContainsSubstring("at least 8 samples"));
  }

  SECTION("window narrower than a decade") {
    const auto tsn = time_ladder(10.0, 50.0, 9);
    const auto vn = law_values(tsn, 1.0, -0.5, 0);
    CHECK_THROWS_MATCHES(fit_decay(tsn, vn, FitModel::power), domain_error,
                         ContainsSubstring("decade"));
  }

  SECTION("a decade is accepted exactly at the threshold") {
    const auto tsd = time_ladder(10.0, 100.0, 9);
    const auto vd = law_values(tsd, 1.0, -0.5, 0);
    CHECK_NOTHROW(fit_decay(tsd, vd, FitModel::power));
  }

  SECTION("nonpositive sample time") {
    auto bad = ts;
    bad[3] = 0.0;
    CHECK_THROWS_MATCHES(fit_decay(bad, vals, FitModel::power), domain_error,
                         ContainsSubstring("must be > 0"));
  }

  SECTION("nonpositive value") {
    auto bad = vals;
    bad[5] = -1e-3;
    CHECK_THROWS_MATCHES(fit_decay(ts, bad, FitModel::power), domain_error,
                         ContainsSubstring("strictly positive"));
  }

  SECTION("power_log requires times > 1") {
    const auto tsl = time_ladder(0.5, 50.0, 9);
    const auto vl = law_values(tsl, 1.0, 0.5, 0);
    CHECK_THROWS_MATCHES(fit_decay(tsl, vl, FitModel::power_log), domain_error,
                         ContainsSubstring("> 1"));
  }
}

TEST_CASE("FitModel names round-trip to text") {
  CHECK(std::string(to_string(FitModel::power)) == "power");
  CHECK(std::string(to_string(FitModel::power_log)) == "power_log");
  CHECK(std::string(to_string(FitModel::pure_log)) == "pure_log");
}

TEST_CASE("effective exponent of an envelope") {
  const DecayLaw plain{-0.25, 0, false};
  CHECK(effective_exponent_at(plain, 7.0) == -0.25);
  const DecayLaw logged{-0.25, 1, false};
  CHECK_THAT(effective_exponent_at(logged, std::exp(2.0)),
             WithinAbs(-0.25 + 0.5, 1e-12));
  CHECK_THROWS_AS(effective_exponent_at(logged, 1.0), domain_error);
  CHECK_THROWS_AS(effective_exponent_at(logged, 0.5), domain_error);
}

TEST_CASE("unweighted geometry table values") {
  using Tag = GammaClass::Tag;

  SECTION("q = 4") {
    const double q = 4.0;
    CHECK(expected_rate(tagged(Tag::empty), q, 0.0,
                        RateRegime::geometry_table) == DecayLaw{0.0, 0, false});
    CHECK(expected_rate(tagged(Tag::point_order2_definite), q, 0.0,
                        RateRegime::geometry_table) ==
          DecayLaw{0.625, 0, false});
    CHECK(expected_rate(tagged(Tag::curve_noncharacteristic), q, 0.0,
                        RateRegime::geometry_table) ==
          DecayLaw{0.25, 0, false});
    CHECK(expected_rate(tagged(Tag::curve_nonvanishing_curvature), q, 0.0,
                        RateRegime::geometry_table) ==
          DecayLaw{0.375, 0, false});
    CHECK(expected_rate(tagged(Tag::curve_general), q, 0.0,
                        RateRegime::geometry_table) == DecayLaw{0.5, 0, false});
    CHECK(expected_rate(tagged(Tag::transversal_point_intersection), q, 0.0,
                        RateRegime::geometry_table) == DecayLaw{0.5, 0, false});
  }

  SECTION("q = infinity turns the noncharacteristic rate into a log") {
    CHECK(expected_rate(tagged(Tag::curve_noncharacteristic), kInf, 0.0,
                        RateRegime::geometry_table) == DecayLaw{0.0, 1, false});
    CHECK(expected_rate(tagged(Tag::point_order2_definite), kInf, 0.0,
                        RateRegime::geometry_table) == DecayLaw{0.5, 0, false});
    CHECK(expected_rate(tagged(Tag::curve_nonvanishing_curvature), kInf, 0.0,
                        RateRegime::geometry_table) ==
          DecayLaw{0.25, 0, false});
  }

  SECTION("weighted queries are rejected") {
    CHECK_THROWS_MATCHES(expected_rate(tagged(Tag::empty), 2.0, 0.1,
                                       RateRegime::geometry_table),
                         domain_error, ContainsSubstring("requires s = 0"));
  }
}

TEST_CASE("generic transversal rate") {
  CHECK(expected_rate(tagged(GammaClass::Tag::transversal_point_intersection),
                      2.0, 0.0, RateRegime::transversal_generic) ==
        DecayLaw{0.75, 0, false});
  CHECK(expected_rate(tagged(GammaClass::Tag::curve_general), kInf, 0.0,
                      RateRegime::transversal_generic) ==
        DecayLaw{0.5, 0, false});
  CHECK_THROWS_MATCHES(
      expected_rate(tagged(GammaClass::Tag::empty), 4.0, 0.3,
                    RateRegime::transversal_generic),
      domain_error, ContainsSubstring("requires s = 0"));
}

TEST_CASE("weighted interpolation strip") {
  const GammaClass cls = tagged(GammaClass::Tag::transversal_point_intersection);

  SECTION("matches the generic rate at s = 0 for several q") {
    for (double q : {2.0, 3.0, 4.0, 6.0, kInf}) {
      const DecayLaw a =
          expected_rate(cls, q, 0.0, RateRegime::weighted_interpolation);
      const DecayLaw b =
          expected_rate(cls, q, 0.0, RateRegime::transversal_generic);
      CHECK(a == b);
    }
  }

  SECTION("linear in s below 1/2") {
    const double q = 4.0;
    CHECK(expected_rate(cls, q, 0.2, RateRegime::weighted_interpolation) ==
          DecayLaw{0.425, 0, false});
    for (double s1 : {0.05, 0.15, 0.3}) {
      const double s2 = s1 + 0.1;
      const double e1 =
          expected_rate(cls, q, s1, RateRegime::weighted_interpolation)
              .exponent;
      const double e2 =
          expected_rate(cls, q, s2, RateRegime::weighted_interpolation)
              .exponent;
      CHECK_THAT(e1 - e2, WithinAbs(0.1, 1e-12));
    }
  }

  SECTION("above 1/2 the rate freezes") {
    CHECK(expected_rate(cls, 4.0, 0.75, RateRegime::weighted_interpolation) ==
          DecayLaw{0.125, 0, false});
    CHECK(expected_rate(cls, kInf, 0.75, RateRegime::weighted_interpolation) ==
          DecayLaw{0.0, 1, false});
  }

  SECTION("the strip boundary s = 1/2 is rejected") {
    CHECK_THROWS_MATCHES(
        expected_rate(cls, 4.0, 0.5, RateRegime::weighted_interpolation),
        domain_error, ContainsSubstring("ambiguous between two regimes"));
  }
}

TEST_CASE("noncharacteristic curve with weighted data") {
  const GammaClass cls = tagged(GammaClass::Tag::curve_noncharacteristic);
  CHECK(expected_rate(cls, 4.0, 0.1, RateRegime::curve_weighted) ==
        DecayLaw{0.15, 0, false});
  CHECK(expected_rate(cls, 2.0, 0.0, RateRegime::curve_weighted) ==
        DecayLaw{0.5, 0, false});
  CHECK(expected_rate(cls, 4.0, 0.5, RateRegime::curve_weighted) ==
        DecayLaw{0.0, 1, false});
  CHECK(expected_rate(cls, kInf, 0.0, RateRegime::curve_weighted) ==
        DecayLaw{0.0, 1, false});
  CHECK(expected_rate(cls, kInf, 0.9, RateRegime::curve_weighted) ==
        DecayLaw{0.0, 1, false});
  CHECK_THROWS_MATCHES(
      expected_rate(cls, 4.0, 0.25, RateRegime::curve_weighted), domain_error,
      ContainsSubstring("ambiguous"));
}

TEST_CASE("separated group velocities with weighted data") {
  const GammaClass cls = tagged(GammaClass::Tag::empty);
  const double q = 4.0;  // strip edges at s = 1/4 and s = 3/4
  CHECK(expected_rate(cls, q, 0.1, RateRegime::velocity_separated_weighted) ==
        DecayLaw{0.475, 0, true});
  CHECK(expected_rate(cls, q, 0.5, RateRegime::velocity_separated_weighted) ==
        DecayLaw{0.0, 0, true});
  CHECK(expected_rate(cls, q, 0.9, RateRegime::velocity_separated_weighted) ==
        DecayLaw{-0.25, 0, true});
  CHECK_THROWS_MATCHES(
      expected_rate(cls, q, 0.25, RateRegime::velocity_separated_weighted),
      domain_error, ContainsSubstring("ambiguous"));
  CHECK_THROWS_MATCHES(
      expected_rate(cls, q, 0.75, RateRegime::velocity_separated_weighted),
      domain_error, ContainsSubstring("ambiguous"));
}

TEST_CASE("transversal point with weighted data (the sharp table)") {
  const GammaClass cls = tagged(GammaClass::Tag::transversal_point_intersection);
  const double q = 4.0;  // half_q = 0.125
  CHECK(expected_rate(cls, q, 0.1, RateRegime::point_resonance_weighted) ==
        DecayLaw{0.25 - 0.1 * (0.25 + 7.0 * 0.125), 0, true});
  CHECK(expected_rate(cls, q, 0.5, RateRegime::point_resonance_weighted) ==
        DecayLaw{-0.5 * 0.125, 0, true});
  CHECK(expected_rate(cls, q, 1.0, RateRegime::point_resonance_weighted) ==
        DecayLaw{-0.125, 0, true});
  CHECK(expected_rate(cls, kInf, 1.0, RateRegime::point_resonance_weighted) ==
        DecayLaw{-0.25, 0, true});
  CHECK_THROWS_MATCHES(
      expected_rate(cls, q, 1.2, RateRegime::point_resonance_weighted),
      domain_error, ContainsSubstring("[0, 1]"));
  CHECK_THROWS_MATCHES(
      expected_rate(cls, q, 0.25, RateRegime::point_resonance_weighted),
      domain_error, ContainsSubstring("ambiguous"));
}

TEST_CASE("transversal point growth floor") {
  const GammaClass cls = tagged(GammaClass::Tag::transversal_point_intersection);
  CHECK(expected_rate(cls, 2.0, 0.0, RateRegime::point_resonance_lower) ==
        DecayLaw{0.0, 1, false});
  CHECK(expected_rate(cls, 4.0, 0.0, RateRegime::point_resonance_lower) ==
        DecayLaw{-0.125, 0, false});
  CHECK(expected_rate(cls, kInf, 0.0, RateRegime::point_resonance_lower) ==
        DecayLaw{-0.25, 0, false});
  CHECK_THROWS_MATCHES(
      expected_rate(cls, 4.0, 0.2, RateRegime::point_resonance_lower),
      domain_error, ContainsSubstring("requires s = 0"));
}

TEST_CASE("rate table rejects out-of-range exponents") {
  const GammaClass cls = tagged(GammaClass::Tag::empty);
  CHECK_THROWS_MATCHES(
      expected_rate(cls, 1.5, 0.0, RateRegime::geometry_table), domain_error,
      ContainsSubstring("q in [2, inf]"));
  CHECK_THROWS_MATCHES(
      expected_rate(cls, 4.0, -0.1, RateRegime::velocity_separated_weighted),
      domain_error, ContainsSubstring("s >= 0"));
}

TEST_CASE("generic rate dominates every geometry rate and stays below 1") {
  using Tag = GammaClass::Tag;
  const Tag all_tags[] = {Tag::empty,
                          Tag::point_order2_definite,
                          Tag::curve_noncharacteristic,
                          Tag::curve_nonvanishing_curvature,
                          Tag::curve_general,
                          Tag::transversal_point_intersection};
  for (double q : {2.0, 3.0, 4.0, 6.0, kInf}) {
    const double generic =
        expected_rate(tagged(Tag::empty), q, 0.0,
                      RateRegime::transversal_generic)
            .exponent;
    CHECK(generic <= 1.0);
    for (Tag t : all_tags) {
      const DecayLaw law =
          expected_rate(tagged(t), q, 0.0, RateRegime::geometry_table);
      // Compare local envelope slopes far out so a log factor cannot tip the
      // comparison: 1/log(1e6) ~ 0.072 < every positive gap in the table.
      CHECK(effective_exponent_at(law, 1e6) <= generic + 1e-12);
    }
  }
}

TEST_CASE("table linearity pins the interpolated strip") {
  // The s < 1/2 strip is exactly the chord between its s = 0 value and its
  // limit at s -> 1/2: rate(s) = rate(0) - s.
  const GammaClass cls = tagged(GammaClass::Tag::transversal_point_intersection);
  for (double q : {2.0, 4.0, 6.0}) {
    const double at0 =
        expected_rate(cls, q, 0.0, RateRegime::weighted_interpolation).exponent;
    for (double s : {0.125, 0.25, 0.375}) {
      const double at_s =
          expected_rate(cls, q, s, RateRegime::weighted_interpolation).exponent;
      CHECK_THAT(at_s, WithinAbs(at0 - s, 1e-12));
    }
  }
}

namespace {

FitResult synthetic_fit(double exponent, double t_max) {
  FitResult f;
  f.model = FitModel::power;
  f.fitted_exponent = exponent;
  f.fitted_log_power = 0;
  f.r_squared = 1.0;
  f.window_t_min = 20.0;
  f.window_t_max = t_max;
  return f;
}

}  // namespace

TEST_CASE("upper-bound verdicts compare the fit against the local envelope") {
  const NormSpec ns = NormSpec::lebesgue(4.0);
  const DecayLaw predicted{-0.25, 0, false};

  SECTION("a fit below the envelope passes and reports its slack") {
    const RateVerdict v = rate_detail::make_upper_verdict(
        "demo", ns, predicted, synthetic_fit(-0.3, 500.0),
        RateRegime::point_resonance_weighted);
    CHECK(v.upper_bound_respected);
    CHECK_THAT(v.sharpness_gap, WithinAbs(0.05, 1e-12));
    CHECK(v.tolerance == 0.1);
    CHECK(v.label == "demo");
    CHECK(v.note.empty());
  }

  SECTION("a fit above envelope + tolerance fails") {
    const RateVerdict v = rate_detail::make_upper_verdict(
        "demo", ns, predicted, synthetic_fit(-0.1, 500.0),
        RateRegime::point_resonance_weighted);
    CHECK_FALSE(v.upper_bound_respected);
    CHECK_THAT(v.sharpness_gap, WithinAbs(-0.15, 1e-12));
  }

  SECTION("a log factor relaxes the envelope at finite times") {
    const DecayLaw logged{0.0, 1, false};
    const RateVerdict v = rate_detail::make_upper_verdict(
        "demo", ns, logged, synthetic_fit(0.15, 100.0),
        RateRegime::curve_weighted);
    // local slope at t = 100 is 1/log(100) ~ 0.217
    CHECK(v.upper_bound_respected);
  }

  SECTION("the convention-sensitive strip is flagged") {
    NormSpec wns = NormSpec::lebesgue(4.0);
    wns.s = 0.75;
    const DecayLaw frozen =
        expected_rate(tagged(GammaClass::Tag::transversal_point_intersection),
                      4.0, 0.75, RateRegime::weighted_interpolation);
    const RateVerdict v = rate_detail::make_upper_verdict(
        "demo", wns, frozen, synthetic_fit(0.0, 500.0),
        RateRegime::weighted_interpolation);
    CHECK_THAT(v.note, ContainsSubstring("convention-sensitive"));
  }
}

TEST_CASE("verdicts on noiseless laws never flip when the window grows") {
  const NormSpec ns = NormSpec::lebesgue(2.0);
  const DecayLaw laws[] = {{-0.5, 0, false}, {0.0, 1, false}, {0.25, 0, false}};
  for (const DecayLaw& law : laws) {
    bool was_respected = false;
    for (double t_hi : {100.0, 1000.0, 10000.0}) {
      const auto ts = time_ladder(10.0, t_hi, 16);
      const auto vals = law_values(ts, 2.0, law.exponent, law.log_power);
      const FitResult fit = fit_decay(ts, vals, FitModel::power);
      const RateVerdict v = rate_detail::make_upper_verdict(
          "synthetic", ns, law, fit, RateRegime::geometry_table);
      CHECK(v.upper_bound_respected);
      if (was_respected) CHECK(v.upper_bound_respected);
      was_respected = v.upper_bound_respected;
    }
  }
}
