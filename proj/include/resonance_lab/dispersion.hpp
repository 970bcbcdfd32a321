#pragma once
#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "resonance_lab/errors.hpp"

namespace rlab {

// Real polynomial of degree <= 4 with exact derivative evaluation.  All
// dispersion relations and quadrature phases in the laboratory are of this
// form, so derivatives are never approximated by differences.
class Polynomial {
 public:
  Polynomial() : c_{} {}
  explicit Polynomial(std::array<double, 5> coeffs) : c_(coeffs) {}

  static Polynomial from_coeffs(double c0, double c1 = 0, double c2 = 0,
                                double c3 = 0, double c4 = 0) {
    return Polynomial({c0, c1, c2, c3, c4});
  }

  double operator()(double z) const {
    return c_[0] + z * (c_[1] + z * (c_[2] + z * (c_[3] + z * c_[4])));
  }
  double d1(double z) const {
    return c_[1] + z * (2 * c_[2] + z * (3 * c_[3] + z * 4 * c_[4]));
  }
  double d2(double z) const { return 2 * c_[2] + z * (6 * c_[3] + z * 12 * c_[4]); }
  double d3(double z) const { return 6 * c_[3] + 24 * c_[4] * z; }
  double d4(double) const { return 24 * c_[4]; }

  const std::array<double, 5>& coeffs() const { return c_; }

  // Minimum of |p'(k)| ... of |derivative of given order| on [lo, hi],
  // computed analytically: candidates are the endpoints, the real roots of
  // the next derivative (interior extrema) and the real roots of the
  // derivative itself (where the absolute value touches zero).
  double min_abs_derivative(int order, double lo, double hi) const;

 private:
  std::array<double, 5> c_;
};

namespace detail {

// Roots of a real quadratic a z^2 + b z + c inside [lo, hi], appended to out.
inline void quadratic_roots_in(double a, double b, double c, double lo,
                               double hi, std::array<double, 4>& out,
                               int& count) {
  auto push = [&](double r) {
    if (r >= lo && r <= hi && count < 4) out[count++] = r;
  };
  if (a == 0.0) {
    if (b != 0.0) push(-c / b);
    return;
  }
  const double disc = b * b - 4 * a * c;
  if (disc < 0) return;
  const double sq = std::sqrt(disc);
  // numerically stable pair
  const double q = -0.5 * (b + (b >= 0 ? sq : -sq));
  push(q / a);
  if (q != 0.0) push(c / q);
}

}  // namespace detail

inline double Polynomial::min_abs_derivative(int order, double lo,
                                             double hi) const {
  if (order < 1 || order > 3) throw domain_error("derivative order must be 1..3");
  auto eval = [&](double z) {
    switch (order) {
      case 1: return d1(z);
      case 2: return d2(z);
      default: return d3(z);
    }
  };
  double best = std::min(std::fabs(eval(lo)), std::fabs(eval(hi)));
  // stationary points of the derivative, and its zeros, both lie among the
  // roots of quadratics/linear forms for degree <= 4
  std::array<double, 4> cand{};
  int count = 0;
  if (order == 1) {
    // d1 is cubic: zeros of d2 (quadratic) are its extrema.
    detail::quadratic_roots_in(12 * c_[4], 6 * c_[3], 2 * c_[2], lo, hi, cand,
                               count);
    // zeros of d1 itself: scan for sign changes between sampled candidates —
    // instead solve d1=0 via its own structure: a cubic can have up to 3
    // roots; locate them by bisection between extrema/endpoints.
    std::array<double, 6> nodes{};
    int nn = 0;
    nodes[nn++] = lo;
    for (int i = 0; i < count; ++i) nodes[nn++] = cand[i];
    nodes[nn++] = hi;
    std::sort(nodes.begin(), nodes.begin() + nn);
    for (int i = 0; i + 1 < nn; ++i) {
      double a = nodes[i], b = nodes[i + 1];
      double fa = eval(a), fb = eval(b);
      if (fa == 0) best = 0;
      if (fa * fb < 0) best = 0;  // a zero of the derivative lies inside
    }
  } else if (order == 2) {
    detail::quadratic_roots_in(0, 24 * c_[4], 6 * c_[3], lo, hi, cand, count);
    std::array<double, 4> zero{};
    int zc = 0;
    detail::quadratic_roots_in(12 * c_[4], 6 * c_[3], 2 * c_[2], lo, hi, zero,
                               zc);
    if (zc > 0) best = 0;
  } else {
    // d3 linear: zero inside the interval?
    if (c_[4] != 0) {
      double r = -c_[3] / (4 * c_[4]);
      if (r >= lo && r <= hi) best = 0;
    }
  }
  for (int i = 0; i < count; ++i)
    best = std::min(best, std::fabs(eval(cand[i])));
  return best;
}

// One dispersion relation: a named degree-<=4 polynomial of the frequency.
struct DispersionRelation {
  Polynomial p;
  std::string name;

  double operator()(double z) const { return p(z); }
  double d1(double z) const { return p.d1(z); }
  double d2(double z) const { return p.d2(z); }
};

// The three dispersion relations (output, first input, second input) of the
// quadratic interaction u = T_t(f, g).  hypothesis_H records whether all
// three second derivatives are bounded away from zero on the working box,
// with the attained margin.
struct DispersionTriple {
  DispersionRelation a, b, c;
  bool hypothesis_H = false;
  double hypothesis_margin = 0;
};

// Interaction phase in (xi, eta) = (first factor frequency, second factor
// frequency) coordinates: the output frequency is xi + eta.
inline double phi(const DispersionTriple& d, double xi, double eta) {
  return -d.a(xi + eta) + d.b(xi) + d.c(eta);
}
inline double phi_xi(const DispersionTriple& d, double xi, double eta) {
  return -d.a.d1(xi + eta) + d.b.d1(xi);
}
inline double phi_eta(const DispersionTriple& d, double xi, double eta) {
  return -d.a.d1(xi + eta) + d.c.d1(eta);
}
inline double phi_xixi(const DispersionTriple& d, double xi, double eta) {
  return -d.a.d2(xi + eta) + d.b.d2(xi);
}
inline double phi_xieta(const DispersionTriple& d, double xi, double eta) {
  return -d.a.d2(xi + eta);
}
inline double phi_etaeta(const DispersionTriple& d, double xi, double eta) {
  return -d.a.d2(xi + eta) + d.c.d2(eta);
}

// Same phase in output-frequency coordinates: here xi is the output
// frequency and eta the second-factor frequency, Phi(xi,eta) = phi(xi-eta,eta).
inline double Phi(const DispersionTriple& d, double xi, double eta) {
  return -d.a(xi) + d.b(xi - eta) + d.c(eta);
}
inline double Phi_xi(const DispersionTriple& d, double xi, double eta) {
  return -d.a.d1(xi) + d.b.d1(xi - eta);
}
inline double Phi_eta(const DispersionTriple& d, double xi, double eta) {
  return -d.b.d1(xi - eta) + d.c.d1(eta);
}
inline double Phi_etaeta(const DispersionTriple& d, double xi, double eta) {
  return d.b.d2(xi - eta) + d.c.d2(eta);
}

// Separation margin of the convexity hypothesis: min over the three
// relations of min |second derivative| on [lo, hi].  Zero means the
// hypothesis fails somewhere on the box.
inline double convexity_margin(const DispersionTriple& d, double lo,
                               double hi) {
  double m = d.a.p.min_abs_derivative(2, lo, hi);
  m = std::min(m, d.b.p.min_abs_derivative(2, lo, hi));
  m = std::min(m, d.c.p.min_abs_derivative(2, lo, hi));
  return m;
}

// Evaluate the convexity hypothesis on [lo, hi] and record the result on
// the triple.
inline void check_convexity(DispersionTriple& d, double lo, double hi) {
  d.hypothesis_margin = convexity_margin(d, lo, hi);
  d.hypothesis_H = d.hypothesis_margin > 0;
}

// --- preset triples used throughout the experiment suite ------------------

inline DispersionRelation quadratic_relation(const std::string& name,
                                             double c0 = 0, double c1 = 0,
                                             double c2 = 1) {
  return {Polynomial::from_coeffs(c0, c1, c2), name};
}

// All three waves free-Schrodinger: resonances collapse onto the axes and
// the two zero sets meet only at the origin, tangentially.
inline DispersionTriple preset_schrodinger() {
  return {quadratic_relation("a"), quadratic_relation("b"),
          quadratic_relation("c")};
}

// First input carries a frequency-independent shift kappa: the time-resonant
// set becomes a hyperbola and meets the space-resonant diagonal
// transversally at two points.
inline DispersionTriple preset_schrodinger_shifted(double kappa) {
  return {quadratic_relation("a"),
          quadratic_relation("b", kappa), quadratic_relation("c")};
}

// Both inputs shifted by +5: the interaction phase is bounded away from
// zero on the working box (no time resonances at all).
inline DispersionTriple preset_gap() {
  return {quadratic_relation("a"), quadratic_relation("b", 5.0),
          quadratic_relation("c", 5.0)};
}

// Output wave four times slower: the phase is a positive-definite quadratic
// form and the resonant set is the single point at the origin.
inline DispersionTriple preset_definite() {
  return {{Polynomial::from_coeffs(0, 0, 0.25), "a"}, quadratic_relation("b"),
          quadratic_relation("c")};
}

// Output dispersion tilted by a transport term: a curved resonant set with
// nonvanishing curvature away from its characteristic points.
inline DispersionTriple preset_tilted() {
  return {{Polynomial::from_coeffs(0, 1, 1), "a"}, quadratic_relation("b"),
          quadratic_relation("c")};
}

}  // namespace rlab
