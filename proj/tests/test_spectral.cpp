#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <complex>
#include <random>

#include "resonance_lab/spectral.hpp"

using namespace rlab;
using Catch::Approx;

namespace {
const double kInf = std::numeric_limits<double>::infinity();

SampledState random_state(const Grid& g, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<complex> v(g.n_points);
  for (auto& z : v) z = complex(u(rng), u(rng));
  return SampledState(g, std::move(v));
}
}  // namespace

TEST_CASE("grid bookkeeping") {
  Grid g(256, 64.0);
  CHECK(g.spacing() == Approx(0.25));
  CHECK(g.frequency_step() == Approx(2.0 * M_PI / 64.0));
  CHECK(g.max_frequency() == Approx(128.0 * 2.0 * M_PI / 64.0));
  CHECK(g.x(0) == Approx(-32.0));
  CHECK(g.x(128) == Approx(0.0));
  CHECK(g.xi(128) == Approx(0.0));
  CHECK(g.xi(129) == Approx(g.frequency_step()));
  CHECK(g.bin_of(0.0) == 128);
  CHECK(g.bin_of(3.03 * g.frequency_step()) == 131);
  CHECK(g.bin_of(1e9) == 255);
  CHECK(g.bin_of(-1e9) == 0);
  CHECK_THROWS_AS(Grid(100, 10.0), config_error);  // not a power of two
  CHECK_THROWS_AS(Grid(4, 10.0), config_error);    // too small
  CHECK_THROWS_AS(Grid(64, -1.0), config_error);   // bad length
}

TEST_CASE("transform round trip and Plancherel") {
  Grid g(512, 100.0);
  auto st = random_state(g, 7);
  auto sp = transform(st);
  auto back = inverse_transform(sp);
  double max_err = 0;
  for (int i = 0; i < g.n_points; ++i)
    max_err = std::max(max_err, std::abs(back.values[i] - st.values[i]));
  CHECK(max_err < 1e-12);

  // Plancherel: sum |f|^2 dx == sum |hat f|^2 dxi
  double px = 0, pk = 0;
  for (const auto& v : st.values) px += std::norm(v);
  for (const auto& c : sp.coefficients) pk += std::norm(c);
  CHECK(px * g.spacing() == Approx(pk * g.frequency_step()).epsilon(1e-12));
}

TEST_CASE("transform of a centered gaussian matches the closed form") {
  // f(x) = exp(-x^2/2) has unitary transform exp(-xi^2/2)
  Grid g(2048, 200.0);
  std::vector<complex> v(g.n_points);
  for (int i = 0; i < g.n_points; ++i)
    v[i] = std::exp(-0.5 * g.x(i) * g.x(i));
  auto sp = transform(SampledState(g, std::move(v)));
  for (int k = 0; k < g.n_points; ++k) {
    const double xi = g.xi(k);
    if (std::fabs(xi) > 6.0) continue;
    CHECK(std::abs(sp.coefficients[k] - std::exp(-0.5 * xi * xi)) < 1e-10);
  }
}

TEST_CASE("linear group is a spectral phase multiplier") {
  Grid g(256, 50.0);
  auto st = random_state(g, 21);
  auto sp = transform(st);
  auto rel = quadratic_relation("a", 0.5, -1.0, 2.0);
  const double t = 3.25;
  auto moved = apply_linear_group(sp, rel, t);
  for (int k = 0; k < g.n_points; ++k) {
    const complex expect =
        sp.coefficients[k] *
        std::exp(complex(0, 1) * (t * rel(g.xi(k))));
    CHECK(std::abs(moved.coefficients[k] - expect) < 1e-12);
  }
  // modulus (hence every L^q norm of the spectrum) is conserved
  double n0 = 0, n1 = 0;
  for (int k = 0; k < g.n_points; ++k) {
    n0 += std::norm(sp.coefficients[k]);
    n1 += std::norm(moved.coefficients[k]);
  }
  CHECK(n0 == Approx(n1).epsilon(1e-13));
}

TEST_CASE("norm evaluation on a box profile") {
  Grid g(1024, 64.0);
  // indicator of [-1, 1] scaled by 3
  std::vector<complex> v(g.n_points, complex(0, 0));
  for (int i = 0; i < g.n_points; ++i)
    if (std::fabs(g.x(i)) <= 1.0) v[i] = 3.0;
  SampledState st(g, std::move(v));
  // |support| = 2 + dx (33 samples at dx = 1/16)
  const double measure = 33.0 * g.spacing();
  CHECK(norm(st, NormSpec::lebesgue(2)) ==
        Approx(3.0 * std::sqrt(measure)).epsilon(1e-12));
  CHECK(norm(st, NormSpec::lebesgue(4)) ==
        Approx(3.0 * std::pow(measure, 0.25)).epsilon(1e-12));
  CHECK(norm(st, NormSpec::lebesgue(kInf)) == Approx(3.0));
  // weighted norm dominates the plain L^2 norm
  bool reliable = false;
  const double w1 = norm(st, NormSpec::weighted(1.0), &reliable);
  CHECK(reliable);
  CHECK(w1 > norm(st, NormSpec::lebesgue(2)));
}

TEST_CASE("weighted norms near the periodic boundary are flagged") {
  Grid g(256, 32.0);
  std::vector<complex> v(g.n_points, complex(0, 0));
  v[1] = 1.0;  // nearly all mass at the left edge
  SampledState st(g, std::move(v));
  bool reliable = true;
  norm(st, NormSpec::weighted(0.5), &reliable);
  CHECK_FALSE(reliable);
}

TEST_CASE("norm spec validation") {
  CHECK_THROWS_WITH(NormSpec::lebesgue(1.5),
                    Catch::Matchers::ContainsSubstring("q in [2, inf]"));
  CHECK_THROWS_AS(NormSpec::weighted(-0.25), config_error);
  CHECK_NOTHROW(NormSpec::lebesgue(kInf));
  CHECK(NormSpec::lebesgue(2) < NormSpec::lebesgue(4));
  CHECK(NormSpec::lebesgue(2) == NormSpec::lebesgue(2));
  CHECK(NormSpec::weighted(0.5) < NormSpec::weighted(1.0));
}

TEST_CASE("gaussian witness: unit mass, declared band, correct spectrum") {
  Grid g(4096, 1200.0);
  auto f = make_witness(WitnessKind::gaussian, 0.0, 0.4, 8.0, g);
  CHECK(norm(f, NormSpec::lebesgue(2)) == Approx(1.0).epsilon(1e-10));
  CHECK(f.support_radius == Approx(0.4 + 6.8 / 8.0));
  CHECK(f.feature_width == Approx(1.0 / 8.0));
  // spectrum is a real gaussian bump at the requested center frequency
  auto sp = transform(f);
  int k_peak = 0;
  double peak = 0;
  for (int k = 0; k < g.n_points; ++k)
    if (std::abs(sp.coefficients[k]) > peak) {
      peak = std::abs(sp.coefficients[k]);
      k_peak = k;
    }
  CHECK(std::fabs(g.xi(k_peak) - 0.4) <= g.frequency_step());
  // coefficient ratios follow exp(-w^2 (xi - c)^2 / 2) exactly at the bins
  const int k1 = g.bin_of(0.4), k2 = g.bin_of(0.52);
  const double u1 = 8.0 * (g.xi(k1) - 0.4), u2 = 8.0 * (g.xi(k2) - 0.4);
  CHECK(std::abs(sp.coefficients[k2]) / std::abs(sp.coefficients[k1]) ==
        Approx(std::exp(-0.5 * (u2 * u2 - u1 * u1))).epsilon(1e-10));
}

TEST_CASE("spatial recentering shifts the witness") {
  Grid g(2048, 400.0);
  auto f = make_witness(WitnessKind::gaussian, 25.0, 0.0, 4.0, g);
  int i_peak = 0;
  double peak = 0;
  for (int i = 0; i < g.n_points; ++i)
    if (std::abs(f.values[i]) > peak) {
      peak = std::abs(f.values[i]);
      i_peak = i;
    }
  CHECK(std::fabs(g.x(i_peak) - 25.0) <= 2.0 * g.spacing());
}

TEST_CASE("spectral witnesses: plateau and bump supports") {
  Grid g(2048, 400.0);
  auto flat = make_witness(WitnessKind::flat_spectrum, 0.0, 1.0, 0.5, g);
  auto bump = make_witness(WitnessKind::band_bump, 0.0, 1.0, 0.5, g);
  CHECK(flat.support_radius == Approx(1.5));
  CHECK(bump.feature_width == Approx(0.5));
  auto fs = transform(flat);
  auto bs = transform(bump);
  // both vanish outside |xi - 1| < 0.5
  for (int k = 0; k < g.n_points; ++k)
    if (std::fabs(g.xi(k) - 1.0) >= 0.5) {
      CHECK(std::abs(fs.coefficients[k]) < 1e-13);
      CHECK(std::abs(bs.coefficients[k]) < 1e-13);
    }
  // the plateau is genuinely flat over its core while the bump is not
  const double f_mid = std::abs(fs.coefficients[g.bin_of(1.0)]);
  const double f_off = std::abs(fs.coefficients[g.bin_of(1.2)]);
  CHECK(f_mid == Approx(f_off).epsilon(1e-10));
  const double b_mid = std::abs(bs.coefficients[g.bin_of(1.0)]);
  const double b_off = std::abs(bs.coefficients[g.bin_of(1.2)]);
  CHECK(b_off < 0.9 * b_mid);
}

TEST_CASE("witness validation errors") {
  Grid g(256, 64.0);  // dx = 0.25, dxi ~ 0.0982, nyquist ~ 12.57
  CHECK_THROWS_WITH(make_witness(WitnessKind::gaussian, 0.0, 0.0, 0.4, g),
                    Catch::Matchers::ContainsSubstring(">= 2 dx"));
  CHECK_THROWS_WITH(make_witness(WitnessKind::gaussian, 0.0, 12.5, 8.0, g),
                    Catch::Matchers::ContainsSubstring("Nyquist"));
  CHECK_THROWS_WITH(make_witness(WitnessKind::band_bump, 0.0, 0.0, 0.1, g),
                    Catch::Matchers::ContainsSubstring("2 dxi"));
  CHECK_THROWS_AS(make_witness(WitnessKind::flat_spectrum, 0.0, 12.5, 1.0, g),
                  config_error);
}

TEST_CASE("padded inverse transform refines the sample grid only") {
  Grid g(512, 100.0);
  auto f = make_witness(WitnessKind::gaussian, 3.0, 0.5, 2.0, g);
  auto sp = transform(f);
  auto fine = inverse_transform(sp, 4);
  CHECK(fine.grid.n_points == 4 * g.n_points);
  CHECK(fine.grid.length == g.length);
  // the padded signal agrees with the original at the shared sample points
  for (int i = 0; i < g.n_points; ++i)
    CHECK(std::abs(fine.values[4 * i] - f.values[i]) < 1e-10);
  CHECK_THROWS_AS(inverse_transform(sp, 3), config_error);
}
