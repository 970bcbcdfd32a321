#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <complex>
#include <map>
#include <string>

#include "fresnel_reference.hpp"
#include "resonance_lab/osc_cases.hpp"
#include "resonance_lab/osc_leading.hpp"
#include "resonance_lab/osc_quadrature.hpp"

using namespace rlab;
namespace ref = rlab_test_reference;

namespace {
std::map<std::string, OscIntegralSpec> reference_specs() {
  auto mk = [](Polynomial p, Amplitude a, Weight w, double t, double lo) {
    return OscIntegralSpec{p, a, w, t, lo};
  };
  std::map<std::string, OscIntegralSpec> specs;
  specs["parabola_shift_t50"] =
      mk(Polynomial::from_coeffs(1, -2, 1), bump_amplitude(1.0, 0.8),
         Weight::none_weight(), 50, 0);
  specs["parabola_shift_t400"] =
      mk(Polynomial::from_coeffs(1, -2, 1), bump_amplitude(1.0, 0.8),
         Weight::none_weight(), 400, 0);
  specs["linear_weighted_t50"] =
      mk(Polynomial::from_coeffs(0, 1), bump_amplitude(0.0, 1.0),
         Weight::inv_sqrt(), 50, 0);
  specs["linear_weighted_t400"] =
      mk(Polynomial::from_coeffs(0, 1), bump_amplitude(0.0, 1.0),
         Weight::inv_sqrt(), 400, 0);
  specs["square_shift_weighted_t50"] =
      mk(Polynomial::from_coeffs(0, 0, 1), bump_amplitude(0.0, 1.0),
         Weight::inv_sqrt_shifted(0.1), 50, 0.1);
  specs["square_shift_weighted_t400"] =
      mk(Polynomial::from_coeffs(0, 0, 1), bump_amplitude(0.0, 1.0),
         Weight::inv_sqrt_shifted(0.1), 400, 0.1);
  specs["interior_weighted_t50"] =
      mk(Polynomial::from_coeffs(1, -2, 1), bump_amplitude(1.0, 0.5),
         Weight::inv_sqrt(), 50, 0);
  specs["interior_weighted_t400"] =
      mk(Polynomial::from_coeffs(1, -2, 1), bump_amplitude(1.0, 0.5),
         Weight::inv_sqrt(), 400, 0);
  specs["quartic_t50"] =
      mk(Polynomial::from_coeffs(0, 0, -1, 0, 1), bump_amplitude(0.8, 0.7),
         Weight::none_weight(), 50, 0);
  return specs;
}
}  // namespace

TEST_CASE("amplitude profiles") {
  auto b = bump_amplitude(1.0, 0.5);
  CHECK(b(1.0) == Catch::Approx(1.0));
  CHECK(b(0.5) == 0.0);
  CHECK(b(1.5) == 0.0);
  CHECK(b(1.25) > 0.0);
  CHECK(b(1.25) < 1.0);
  auto p = plateau_amplitude(0.4, 0.6);
  CHECK(p(0.4) == 1.0);
  // flat over the inner 70 percent of the radius
  CHECK(p(0.4 + 0.6 * 0.69) == 1.0);
  CHECK(p(0.4 - 0.6 * 0.69) == 1.0);
  CHECK(p(1.0) == 0.0);
  CHECK(p(0.4 + 0.6 * 0.9) < 1.0);
  CHECK_THROWS_AS(bump_amplitude(0.0, -1.0), config_error);
  CHECK_THROWS_AS(plateau_amplitude(0.0, 0.0), config_error);
  CHECK_THROWS_AS(plateau_amplitude(0.0, 1.0, 1.0, 1.5), config_error);
}

TEST_CASE("oracle quadrature against frozen high-precision values") {
  auto specs = reference_specs();
  double worst = 0;
  for (const auto& r : ref::oracle_reference()) {
    const auto v = oracle_integral(specs.at(r.name));
    worst = std::max(worst, std::abs(v - r.value));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("oracle validation rejects malformed requests") {
  auto base = reference_specs().at("parabola_shift_t50");
  SECTION("time out of range") {
    auto s = base;
    s.t = 0.0;
    CHECK_THROWS_AS(oracle_integral(s), config_error);
    s.t = 2e5;
    CHECK_THROWS_AS(oracle_integral(s), config_error);
  }
  SECTION("negative lower limit") {
    auto s = base;
    s.lower_limit = -0.5;
    CHECK_THROWS_AS(oracle_integral(s), config_error);
  }
  SECTION("singular weight must be anchored at the lower limit") {
    auto s = reference_specs().at("square_shift_weighted_t50");
    s.lower_limit = 0.2;  // weight still anchored at 0.1
    CHECK_THROWS_AS(oracle_integral(s), config_error);
  }
  SECTION("node budget guard") {
    OscIntegralSpec s;
    s.phase = Polynomial::from_coeffs(0, 0, 200.0);
    s.amplitude = plateau_amplitude(0.5, 0.5);
    s.weight = Weight::none_weight();
    s.t = 1e5;
    s.lower_limit = 0.0;
    CHECK_THROWS_AS(oracle_integral(s), accuracy_error);
  }
}

TEST_CASE("leading terms track the oracle on the exact model cases") {
  // cases whose hypotheses the closed forms satisfy identically: the
  // leading expression then reproduces the oracle up to quadrature noise
  const double t = 1e4;
  SECTION("interior stationary point, no weight") {
    OscIntegralSpec s{Polynomial::from_coeffs(0, -0.8, 1),
                      plateau_amplitude(0.4, 0.6), Weight::none_weight(), t,
                      0.0};
    auto lt = leading_term(s, OscCase::b2_i);
    CHECK(std::abs(oracle_integral(s) - lt.value) < 1e-10);
  }
  SECTION("model quadratic phase from the endpoint, no weight") {
    OscIntegralSpec s{Polynomial::from_coeffs(0, 0, 1),
                      plateau_amplitude(0.3, 0.55), Weight::none_weight(), t,
                      0.2};
    auto lt = leading_term(s, OscCase::b3_i);
    CHECK(std::abs(oracle_integral(s) - lt.value) < 1e-10);
  }
  SECTION("model linear phase with the singular weight") {
    OscIntegralSpec s{Polynomial::from_coeffs(0, 1),
                      plateau_amplitude(0.3, 0.55), Weight::inv_sqrt(), t,
                      0.0};
    auto lt = leading_term(s, OscCase::b3_ii);
    CHECK(std::abs(oracle_integral(s) - lt.value) < 1e-10);
  }
  SECTION("model quadratic phase with the shifted singular weight") {
    for (double eps : {0.003, 0.3}) {
      OscIntegralSpec s{Polynomial::from_coeffs(0, 0, 1),
                        plateau_amplitude(0.3, 0.55),
                        Weight::inv_sqrt_shifted(eps), t, eps};
      auto lt = leading_term(s, OscCase::b3_iii);
      CHECK(std::abs(oracle_integral(s) - lt.value) < 1e-10);
    }
  }
}

TEST_CASE("leading-term hypothesis guards") {
  const double t = 100.0;
  SECTION("stationary-point case rejects a weight") {
    OscIntegralSpec s{Polynomial::from_coeffs(0, -0.8, 1),
                      plateau_amplitude(0.4, 0.6), Weight::inv_sqrt(), t, 0.0};
    CHECK_THROWS_AS(leading_term(s, OscCase::b2_i), hypothesis_error);
  }
  SECTION("nonstationary case rejects an interior stationary point") {
    OscIntegralSpec s{Polynomial::from_coeffs(0, -0.8, 1),
                      plateau_amplitude(0.4, 0.6), Weight::inv_sqrt(), t, 0.0};
    CHECK_THROWS_AS(leading_term(s, OscCase::b2_ii), hypothesis_error);
  }
  SECTION("model-phase cases insist on the model phase") {
    OscIntegralSpec s{Polynomial::from_coeffs(0.25, -1, 1),
                      plateau_amplitude(0.5, 0.6), Weight::inv_sqrt(), t, 0.0};
    CHECK_THROWS_AS(leading_term(s, OscCase::b3_i), hypothesis_error);
    CHECK_THROWS_AS(leading_term(s, OscCase::b3_ii), hypothesis_error);
    CHECK_THROWS_AS(leading_term(s, OscCase::b3_iii), hypothesis_error);
  }
  SECTION("weighted stationary case needs the stationary point right of 0") {
    OscIntegralSpec s{Polynomial::from_coeffs(0, 0.8, 1),
                      plateau_amplitude(0.5, 0.6), Weight::inv_sqrt(), t, 0.0};
    CHECK_THROWS_AS(leading_term(s, OscCase::b2_iii), hypothesis_error);
  }
}

TEST_CASE("remainder decay orders over the canonical catalog") {
  // two-point slope check at desk scale; the acceptance suite runs the
  // full three-point ladder
  for (const auto& cs : canonical_osc_cases()) {
    auto s50 = cs.spec_at(50.0);
    auto s400 = cs.spec_at(400.0);
    const double r50 =
        std::abs(oracle_integral(s50) - leading_term(s50, cs.which).value);
    const double r400 =
        std::abs(oracle_integral(s400) - leading_term(s400, cs.which).value);
    const double claimed = leading_term(s400, cs.which).claimed_error_order;
    INFO(cs.label);
    if (r50 < 1e-13 && r400 < 1e-13) continue;  // exact model identity
    const double slope = std::log(r400 / r50) / std::log(400.0 / 50.0);
    CHECK(slope <= claimed + 0.2);
  }
}

TEST_CASE("claimed order of the shifted-weight case switches regimes") {
  // |sqrt(t) eps| < 1: quarter-power decay; > 1: square-root decay
  OscIntegralSpec small{Polynomial::from_coeffs(0, 0, 1),
                        plateau_amplitude(0.3, 0.55),
                        Weight::inv_sqrt_shifted(0.003), 1e4, 0.003};
  OscIntegralSpec large{Polynomial::from_coeffs(0, 0, 1),
                        plateau_amplitude(0.3, 0.55),
                        Weight::inv_sqrt_shifted(0.3), 1e4, 0.3};
  CHECK(leading_term(small, OscCase::b3_iii).claimed_error_order ==
        Catch::Approx(-0.75));
  CHECK(leading_term(large, OscCase::b3_iii).claimed_error_order ==
        Catch::Approx(-0.5));
}

TEST_CASE("far-field remainder forms decay at their claimed orders") {
  // log-log slope fit of the remainder over x in [10, 100]; each slope
  // must be at least as steep as the claimed order (small slack for the
  // oscillatory component of the remainder)
  for (const auto& form : far_field_forms()) {
    std::vector<double> xs, rs;
    for (int i = 0; i < 25; ++i) {
      const double x = 10.0 * std::pow(10.0, i / 24.0);
      xs.push_back(x);
      rs.push_back(form.remainder(x));
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double lx = std::log(xs[i]), ly = std::log(rs[i]);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    const double n = static_cast<double>(xs.size());
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    INFO(form.name);
    CHECK(slope <= form.claimed_order + 0.2);
  }
}
