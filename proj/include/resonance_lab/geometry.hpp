#pragma once
#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "resonance_lab/box.hpp"
#include "resonance_lab/dispersion.hpp"
#include "resonance_lab/errors.hpp"

namespace rlab {

// ---------------------------------------------------------------------------
// phase evaluation (exact polynomial derivatives, no differencing)
// ---------------------------------------------------------------------------

enum class PhaseKind { phi, Phi, psi };

struct PhasePoint {
  double xi = 0, eta = 0;
  double sigma = 0, X = 0;  // only used by psi
};

// Derivative multi-index (d_xi, d_eta, d_sigma), total order <= 2.
inline double eval_phase(const DispersionTriple& d, PhaseKind which,
                         const PhasePoint& p, int dxi = 0, int deta = 0,
                         int dsigma = 0) {
  const int total = dxi + deta + dsigma;
  if (dxi < 0 || deta < 0 || dsigma < 0 || total > 2)
    throw domain_error("phase derivative order must be <= 2");
  if (which != PhaseKind::psi && dsigma != 0)
    throw domain_error("sigma derivative only applies to the three-variable phase");

  const double xi = p.xi, eta = p.eta, s = p.sigma;
  switch (which) {
    case PhaseKind::phi: {
      if (total == 0) return phi(d, xi, eta);
      if (dxi == 1 && deta == 0) return phi_xi(d, xi, eta);
      if (dxi == 0 && deta == 1) return phi_eta(d, xi, eta);
      if (dxi == 2) return phi_xixi(d, xi, eta);
      if (dxi == 1 && deta == 1) return phi_xieta(d, xi, eta);
      return phi_etaeta(d, xi, eta);
    }
    case PhaseKind::Phi: {
      if (total == 0) return Phi(d, xi, eta);
      if (dxi == 1 && deta == 0) return Phi_xi(d, xi, eta);
      if (dxi == 0 && deta == 1) return Phi_eta(d, xi, eta);
      if (dxi == 2) return -d.a.d2(xi) + d.b.d2(xi - eta);
      if (dxi == 1 && deta == 1) return -d.b.d2(xi - eta);
      return Phi_etaeta(d, xi, eta);
    }
    case PhaseKind::psi: {
      // psi(xi,eta,sigma) = (1-sigma) a(xi) + sigma b(xi-eta) + sigma c(eta)
      //                     + X xi
      if (total == 0)
        return (1 - s) * d.a(xi) + s * d.b(xi - eta) + s * d.c(eta) + p.X * xi;
      if (dxi == 1 && deta == 0 && dsigma == 0)
        return (1 - s) * d.a.d1(xi) + s * d.b.d1(xi - eta) + p.X;
      if (deta == 1 && dxi == 0 && dsigma == 0)
        return -s * d.b.d1(xi - eta) + s * d.c.d1(eta);
      if (dsigma == 1 && total == 1) return Phi(d, xi, eta);
      if (dxi == 2) return (1 - s) * d.a.d2(xi) + s * d.b.d2(xi - eta);
      if (dxi == 1 && deta == 1) return -s * d.b.d2(xi - eta);
      if (deta == 2) return s * Phi_etaeta(d, xi, eta);
      if (dxi == 1 && dsigma == 1) return Phi_xi(d, xi, eta);
      if (deta == 1 && dsigma == 1) return Phi_eta(d, xi, eta);
      return 0.0;  // d^2/d sigma^2
    }
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// traced geometry containers
// ---------------------------------------------------------------------------

struct Polyline {
  std::vector<std::array<double, 2>> pts;
  bool closed = false;
};

// Space-time resonant point in output-frequency coordinates.
struct ResonantPoint {
  double xi0 = 0, eta0 = 0;
  double phi_xi = 0;       // d/d xi of the output-coordinate phase there
  double phi_etaeta = 0;   // d2/d eta2 of the output-coordinate phase there
  bool transversal = false;
  bool refined = true;     // false if Newton did not converge (reported, kept)
};

struct CharacteristicPoint {
  enum class Direction { xi, eta, xi_plus_eta };
  double xi = 0, eta = 0;  // interaction (phi) coordinates
  Direction dir = Direction::xi;
};

inline const char* to_string(CharacteristicPoint::Direction d) {
  switch (d) {
    case CharacteristicPoint::Direction::xi: return "xi";
    case CharacteristicPoint::Direction::eta: return "eta";
    default: return "xi+eta";
  }
}

struct GammaClass {
  enum class Tag {
    empty,
    point_order2_definite,
    curve_noncharacteristic,
    curve_nonvanishing_curvature,
    curve_general,
    transversal_point_intersection
  };
  Tag tag = Tag::empty;
  bool mixed = false;       // ambiguous geometry inside the support
  std::string detail;       // evidence for the chosen tag / mixed report
};

inline const char* to_string(GammaClass::Tag t) {
  switch (t) {
    case GammaClass::Tag::empty: return "empty";
    case GammaClass::Tag::point_order2_definite: return "point_order2_definite";
    case GammaClass::Tag::curve_noncharacteristic:
      return "curve_noncharacteristic";
    case GammaClass::Tag::curve_nonvanishing_curvature:
      return "curve_nonvanishing_curvature";
    case GammaClass::Tag::curve_general: return "curve_general";
    default: return "transversal_point_intersection";
  }
}

struct ResonanceGeometry {
  FrequencyBox box;
  int resolution = 0;
  std::vector<Polyline> gamma;   // zero set of the interaction phase
  std::vector<Polyline> delta;   // zero set of (d_xi - d_eta) of that phase
  std::vector<ResonantPoint> points;
  std::vector<CharacteristicPoint> characteristic_points;
  GammaClass classification;
};

// phi-coordinates -> output coordinates: (xi, eta) |-> (xi + eta, eta)
inline std::array<double, 2> to_output_coords(const std::array<double, 2>& p) {
  return {p[0] + p[1], p[1]};
}

// ---------------------------------------------------------------------------
// implicit-curve tracing: marching squares + root polishing + chaining
// ---------------------------------------------------------------------------

namespace geo_detail {

struct Field {
  std::function<double(double, double)> value;
  std::function<std::array<double, 2>(double, double)> gradient;
};

inline double trace_tol(double scale) { return 1e-11 * std::max(1.0, scale); }

// Root of the field along the straight edge P0-P1 (signs differ or an
// endpoint vanishes): safeguarded Newton with a bisection bracket.
inline std::array<double, 2> polish_on_edge(const Field& F,
                                            std::array<double, 2> P0,
                                            std::array<double, 2> P1,
                                            double tol) {
  auto at = [&](double t) -> std::array<double, 2> {
    return {P0[0] + t * (P1[0] - P0[0]), P0[1] + t * (P1[1] - P0[1])};
  };
  double ta = 0, tb = 1;
  double fa = F.value(P0[0], P0[1]);
  double fb = F.value(P1[0], P1[1]);
  if (std::fabs(fa) <= tol) return P0;
  if (std::fabs(fb) <= tol) return P1;
  if (fa > 0 == fb > 0) return at(std::fabs(fa) < std::fabs(fb) ? 0.0 : 1.0);
  double t = fa / (fa - fb);
  const double dx = P1[0] - P0[0], dy = P1[1] - P0[1];
  for (int it = 0; it < 80; ++it) {
    auto p = at(t);
    const double f = F.value(p[0], p[1]);
    if (std::fabs(f) <= tol) return p;
    if ((f > 0) == (fa > 0)) {
      ta = t;
      fa = f;
    } else {
      tb = t;
      fb = f;
    }
    const auto g = F.gradient(p[0], p[1]);
    const double fp = g[0] * dx + g[1] * dy;
    double tn = (fp != 0) ? t - f / fp : -1;
    if (!(tn > ta && tn < tb)) tn = 0.5 * (ta + tb);
    t = tn;
  }
  return at(t);
}

struct Segment {
  std::int64_t e0, e1;  // edge keys of the two endpoints
};

// Trace the zero set of F on the box at the given resolution.  Returns
// chained polylines with polished vertices; also reports the max absolute
// sample (field scale) through *scale_out.
inline std::vector<Polyline> march(const Field& F, const FrequencyBox& box,
                                   int res, double* scale_out) {
  const int nx = res + 1, ny = res + 1;
  const double hx = (box.xi_hi - box.xi_lo) / res;
  const double hy = (box.eta_hi - box.eta_lo) / res;
  auto X = [&](int i) { return box.xi_lo + i * hx; };
  auto Y = [&](int j) { return box.eta_lo + j * hy; };

  std::vector<double> s(static_cast<std::size_t>(nx) * ny);
  double scale = 0;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const double v = F.value(X(i), Y(j));
      s[static_cast<std::size_t>(j) * nx + i] = v;
      scale = std::max(scale, std::fabs(v));
    }
  if (scale_out) *scale_out = scale;
  if (scale == 0.0)
    throw domain_error("degenerate geometry: field vanishes identically on the box");
  const double tol = trace_tol(scale);

  auto val = [&](int i, int j) { return s[static_cast<std::size_t>(j) * nx + i]; };
  auto pos = [&](double v) { return v > 0.0 || v == 0.0; };

  // edge keys: horizontal edge (i,j)-(i+1,j) -> key(i,j,0); vertical edge
  // (i,j)-(i,j+1) -> key(i,j,1)
  auto ekey = [&](int i, int j, int orient) -> std::int64_t {
    return ((static_cast<std::int64_t>(j) * nx + i) << 1) | orient;
  };

  std::map<std::int64_t, std::array<double, 2>> vertex;
  auto vertex_on = [&](int i, int j, int orient) -> std::int64_t {
    const std::int64_t k = ekey(i, j, orient);
    if (!vertex.count(k)) {
      std::array<double, 2> P0{X(i), Y(j)};
      std::array<double, 2> P1 =
          orient == 0 ? std::array<double, 2>{X(i + 1), Y(j)}
                      : std::array<double, 2>{X(i), Y(j + 1)};
      vertex[k] = polish_on_edge(F, P0, P1, tol);
    }
    return k;
  };

  std::vector<Segment> segs;
  for (int j = 0; j < res; ++j) {
    for (int i = 0; i < res; ++i) {
      const double v0 = val(i, j), v1 = val(i + 1, j), v2 = val(i + 1, j + 1),
                   v3 = val(i, j + 1);
      int code = (pos(v0) ? 1 : 0) | (pos(v1) ? 2 : 0) | (pos(v2) ? 4 : 0) |
                 (pos(v3) ? 8 : 0);
      if (code == 0 || code == 15) continue;
      // cell edges: 0 bottom (i,j,H), 1 right (i+1,j,V), 2 top (i,j+1,H),
      // 3 left (i,j,V)
      auto E = [&](int e) -> std::int64_t {
        switch (e) {
          case 0: return vertex_on(i, j, 0);
          case 1: return vertex_on(i + 1, j, 1);
          case 2: return vertex_on(i, j + 1, 0);
          default: return vertex_on(i, j, 1);
        }
      };
      auto add = [&](int ea, int eb) { segs.push_back({E(ea), E(eb)}); };
      switch (code) {
        case 1: case 14: add(3, 0); break;
        case 2: case 13: add(0, 1); break;
        case 3: case 12: add(3, 1); break;
        case 4: case 11: add(1, 2); break;
        case 6: case 9: add(0, 2); break;
        case 7: case 8: add(2, 3); break;
        case 5: case 10: {
          const double vc = F.value(X(i) + 0.5 * hx, Y(j) + 0.5 * hy);
          const bool center_like_c0 = pos(vc) == pos(v0);
          if ((code == 5) == center_like_c0) {
            add(0, 1);
            add(2, 3);
          } else {
            add(3, 0);
            add(1, 2);
          }
          break;
        }
        default: break;
      }
    }
  }

  // chain segments into polylines by shared edge keys
  std::multimap<std::int64_t, std::size_t> at_key;
  for (std::size_t k = 0; k < segs.size(); ++k) {
    at_key.insert({segs[k].e0, k});
    at_key.insert({segs[k].e1, k});
  }
  std::vector<bool> used(segs.size(), false);
  std::vector<Polyline> out;

  auto walk = [&](std::size_t start, bool from_e0) {
    std::vector<std::int64_t> keys;
    used[start] = true;
    std::int64_t a = from_e0 ? segs[start].e0 : segs[start].e1;
    std::int64_t b = from_e0 ? segs[start].e1 : segs[start].e0;
    keys.push_back(a);
    keys.push_back(b);
    bool closed = false;
    for (;;) {
      std::size_t next = segs.size();
      auto range = at_key.equal_range(keys.back());
      for (auto it = range.first; it != range.second; ++it)
        if (!used[it->second]) { next = it->second; break; }
      if (next == segs.size()) break;
      used[next] = true;
      const std::int64_t tail =
          segs[next].e0 == keys.back() ? segs[next].e1 : segs[next].e0;
      if (tail == keys.front()) { closed = true; break; }
      keys.push_back(tail);
    }
    Polyline pl;
    pl.closed = closed;
    pl.pts.reserve(keys.size());
    for (auto k : keys) pl.pts.push_back(vertex[k]);
    return pl;
  };

  // open chains first (start from edge keys of degree 1), then loops
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t k = 0; k < segs.size(); ++k) {
      if (used[k]) continue;
      if (pass == 0) {
        const bool deg1_e0 = at_key.count(segs[k].e0) == 1;
        const bool deg1_e1 = at_key.count(segs[k].e1) == 1;
        if (!deg1_e0 && !deg1_e1) continue;
        out.push_back(walk(k, deg1_e0));
      } else {
        out.push_back(walk(k, true));
      }
    }
  }
  return out;
}

// 2-D Newton with residual-first convergence check and a damped fallback
// for singular Jacobians.  Returns true if the residual target was met.
inline bool newton2(const std::function<void(double, double, double*, double*,
                                             std::array<double, 4>*)>& system,
                    double& x, double& y, double tol1, double tol2,
                    double step_cap) {
  for (int it = 0; it < 50; ++it) {
    double f1, f2;
    std::array<double, 4> J;
    system(x, y, &f1, &f2, &J);
    if (std::fabs(f1) <= tol1 && std::fabs(f2) <= tol2) return true;
    double det = J[0] * J[3] - J[1] * J[2];
    double dx, dy;
    const double jn = std::fabs(J[0]) + std::fabs(J[1]) + std::fabs(J[2]) +
                      std::fabs(J[3]);
    if (std::fabs(det) > 1e-14 * jn * jn) {
      dx = (-f1 * J[3] + f2 * J[1]) / det;
      dy = (-f2 * J[0] + f1 * J[2]) / det;
    } else {
      // Levenberg step on the normal equations
      const double a = J[0] * J[0] + J[2] * J[2];
      const double b = J[0] * J[1] + J[2] * J[3];
      const double c = J[1] * J[1] + J[3] * J[3];
      const double lam = 1e-8 * (a + c) + 1e-300;
      const double g1 = J[0] * f1 + J[2] * f2;
      const double g2 = J[1] * f1 + J[3] * f2;
      const double d2 = (a + lam) * (c + lam) - b * b;
      dx = (-g1 * (c + lam) + g2 * b) / d2;
      dy = (-g2 * (a + lam) + g1 * b) / d2;
    }
    const double sl = std::hypot(dx, dy);
    if (sl > step_cap) {
      dx *= step_cap / sl;
      dy *= step_cap / sl;
    }
    x += dx;
    y += dy;
  }
  double f1, f2;
  std::array<double, 4> J;
  system(x, y, &f1, &f2, &J);
  return std::fabs(f1) <= tol1 && std::fabs(f2) <= tol2;
}

inline bool segment_intersection(const std::array<double, 2>& a0,
                                 const std::array<double, 2>& a1,
                                 const std::array<double, 2>& b0,
                                 const std::array<double, 2>& b1,
                                 std::array<double, 2>* hit) {
  const double rx = a1[0] - a0[0], ry = a1[1] - a0[1];
  const double sx = b1[0] - b0[0], sy = b1[1] - b0[1];
  const double den = rx * sy - ry * sx;
  const double qx = b0[0] - a0[0], qy = b0[1] - a0[1];
  if (std::fabs(den) < 1e-300) return false;
  const double t = (qx * sy - qy * sx) / den;
  const double u = (qx * ry - qy * rx) / den;
  if (t < -1e-9 || t > 1 + 1e-9 || u < -1e-9 || u > 1 + 1e-9) return false;
  *hit = {a0[0] + t * rx, a0[1] + t * ry};
  return true;
}

}  // namespace geo_detail

// ---------------------------------------------------------------------------
// public geometry operations
// ---------------------------------------------------------------------------

inline std::vector<ResonantPoint> find_spacetime_points(
    const ResonanceGeometry& geom, const DispersionTriple& trip);

inline GammaClass classify(const ResonanceGeometry& geom,
                           const DispersionTriple& trip,
                           const FrequencyBox& symbol_support);

inline std::vector<CharacteristicPoint> find_characteristic_points(
    const ResonanceGeometry& geom, const DispersionTriple& trip,
    const FrequencyBox& within);

inline ResonanceGeometry trace_resonance_sets(const DispersionTriple& trip,
                                              const FrequencyBox& box,
                                              int resolution) {
  if (resolution < 64) throw config_error("trace resolution must be >= 64");
  ResonanceGeometry geom;
  geom.box = box;
  geom.resolution = resolution;

  geo_detail::Field phi_field{
      [&trip](double x, double y) { return phi(trip, x, y); },
      [&trip](double x, double y) -> std::array<double, 2> {
        return {phi_xi(trip, x, y), phi_eta(trip, x, y)};
      }};
  geo_detail::Field delta_field{
      [&trip](double x, double y) { return trip.b.d1(x) - trip.c.d1(y); },
      [&trip](double x, double y) -> std::array<double, 2> {
        return {trip.b.d2(x), -trip.c.d2(y)};
      }};

  double phi_scale = 0, delta_scale = 0;
  geom.gamma = geo_detail::march(phi_field, box, resolution, &phi_scale);
  geom.delta = geo_detail::march(delta_field, box, resolution, &delta_scale);

  // point-type zero set: no sign change anywhere, but the phase may still
  // touch zero at an interior critical point (definite Hessian case)
  if (geom.gamma.empty()) {
    const double hx = (box.xi_hi - box.xi_lo) / resolution;
    const double hy = (box.eta_hi - box.eta_lo) / resolution;
    double best = std::numeric_limits<double>::max(), bx = 0, by = 0;
    for (int j = 0; j <= resolution; ++j)
      for (int i = 0; i <= resolution; ++i) {
        const double x = box.xi_lo + i * hx, y = box.eta_lo + j * hy;
        const double v = std::fabs(phi(trip, x, y));
        if (v < best) { best = v; bx = x; by = y; }
      }
    // local Hessian bound to decide whether the minimum can be a touch point
    const double hess = std::fabs(phi_xixi(trip, bx, by)) +
                        2 * std::fabs(phi_xieta(trip, bx, by)) +
                        std::fabs(phi_etaeta(trip, bx, by));
    const double cell2 = hx * hx + hy * hy;
    if (best <= 10 * hess * cell2 + geo_detail::trace_tol(phi_scale)) {
      double x = bx, y = by;
      const bool ok = geo_detail::newton2(
          [&](double u, double v, double* f1, double* f2,
              std::array<double, 4>* J) {
            *f1 = phi_xi(trip, u, v);
            *f2 = phi_eta(trip, u, v);
            (*J) = {phi_xixi(trip, u, v), phi_xieta(trip, u, v),
                    phi_xieta(trip, u, v), phi_etaeta(trip, u, v)};
          },
          x, y, geo_detail::trace_tol(phi_scale),
          geo_detail::trace_tol(phi_scale), std::sqrt(cell2) * 4);
      if (ok && box.contains(x, y) &&
          std::fabs(phi(trip, x, y)) <= geo_detail::trace_tol(phi_scale)) {
        Polyline single;
        single.pts.push_back({x, y});
        geom.gamma.push_back(single);
      }
    }
  }

  geom.points = find_spacetime_points(geom, trip);
  geom.characteristic_points = find_characteristic_points(geom, trip, box);
  geom.classification = classify(geom, trip, box);
  return geom;
}

inline std::vector<ResonantPoint> find_spacetime_points(
    const ResonanceGeometry& geom, const DispersionTriple& trip) {
  const double diag = geom.box.diagonal();
  const double cell = diag / std::max(1, geom.resolution);

  // seeds: gamma x delta polyline segment intersections
  std::vector<std::array<double, 2>> seeds;
  auto each_segment = [](const std::vector<Polyline>& pls, auto&& fn) {
    for (const auto& pl : pls) {
      for (std::size_t i = 0; i + 1 < pl.pts.size(); ++i)
        fn(pl.pts[i], pl.pts[i + 1]);
      if (pl.closed && pl.pts.size() > 2) fn(pl.pts.back(), pl.pts.front());
    }
  };
  each_segment(geom.gamma, [&](const std::array<double, 2>& g0,
                               const std::array<double, 2>& g1) {
    each_segment(geom.delta, [&](const std::array<double, 2>& d0,
                                 const std::array<double, 2>& d1) {
      std::array<double, 2> hit;
      if (geo_detail::segment_intersection(g0, g1, d0, d1, &hit))
        seeds.push_back(hit);
    });
  });
  // point-type gamma entries near delta are seeds as well
  for (const auto& pl : geom.gamma) {
    if (pl.pts.size() != 1) continue;
    const auto& p = pl.pts[0];
    double dist = std::numeric_limits<double>::max();
    each_segment(geom.delta, [&](const std::array<double, 2>& d0,
                                 const std::array<double, 2>& d1) {
      const double vx = d1[0] - d0[0], vy = d1[1] - d0[1];
      const double wx = p[0] - d0[0], wy = p[1] - d0[1];
      const double len2 = vx * vx + vy * vy;
      double t = len2 > 0 ? (vx * wx + vy * wy) / len2 : 0;
      t = std::clamp(t, 0.0, 1.0);
      dist = std::min(dist, std::hypot(wx - t * vx, wy - t * vy));
    });
    if (dist <= 2 * cell) seeds.push_back(p);
  }

  // scales for the residual targets
  double phi_scale = 1, delta_scale = 1;
  for (const auto& sd : seeds) {
    phi_scale = std::max(phi_scale, std::fabs(phi(trip, sd[0], sd[1])) + 1);
    delta_scale = std::max(
        delta_scale, std::fabs(trip.b.d1(sd[0]) - trip.c.d1(sd[1])) + 1);
  }
  const double tol1 = geo_detail::trace_tol(phi_scale);
  const double tol2 = geo_detail::trace_tol(delta_scale);

  std::vector<ResonantPoint> points;
  std::vector<std::array<double, 2>> kept;  // phi-coordinates, for dedupe
  for (const auto& sd : seeds) {
    double x = sd[0], y = sd[1];
    const bool ok = geo_detail::newton2(
        [&](double u, double v, double* f1, double* f2,
            std::array<double, 4>* J) {
          *f1 = phi(trip, u, v);
          *f2 = trip.b.d1(u) - trip.c.d1(v);
          (*J) = {phi_xi(trip, u, v), phi_eta(trip, u, v), trip.b.d2(u),
                  -trip.c.d2(v)};
        },
        x, y, tol1, tol2, 4 * cell + 1e-6 * diag);

    bool dup = false;
    for (const auto& q : kept)
      if (std::hypot(q[0] - x, q[1] - y) <= 1e-6 * std::max(diag, 1.0))
        dup = true;
    if (dup) continue;
    kept.push_back({x, y});

    ResonantPoint rp;
    rp.refined = ok;
    rp.xi0 = x + y;  // output coordinates
    rp.eta0 = y;
    rp.phi_xi = Phi_xi(trip, rp.xi0, rp.eta0);
    rp.phi_etaeta = Phi_etaeta(trip, rp.xi0, rp.eta0);
    const double s1 =
        std::max({1.0, std::fabs(trip.a.d1(rp.xi0)),
                  std::fabs(trip.b.d1(rp.xi0 - rp.eta0))});
    const double s2 =
        std::max({1.0, std::fabs(trip.b.d2(rp.xi0 - rp.eta0)),
                  std::fabs(trip.c.d2(rp.eta0))});
    rp.transversal =
        std::fabs(rp.phi_xi) > 1e-6 * s1 && std::fabs(rp.phi_etaeta) > 1e-6 * s2;
    points.push_back(rp);
  }
  return points;
}

inline std::vector<CharacteristicPoint> find_characteristic_points(
    const ResonanceGeometry& geom, const DispersionTriple& trip,
    const FrequencyBox& within) {
  using Dir = CharacteristicPoint::Direction;
  const double diag = geom.box.diagonal();
  const double cell = diag / std::max(1, geom.resolution);
  std::vector<CharacteristicPoint> out;

  // the functional whose zero marks each characteristic direction: the
  // curve tangent is (-phi_eta, phi_xi), so phi_eta = 0 keeps xi constant,
  // phi_xi = 0 keeps eta constant, phi_xi = phi_eta keeps xi + eta constant
  auto functional = [&](Dir d, double x, double y) {
    switch (d) {
      case Dir::xi: return phi_eta(trip, x, y);
      case Dir::eta: return phi_xi(trip, x, y);
      default: return phi_xi(trip, x, y) - phi_eta(trip, x, y);
    }
  };
  auto push = [&](Dir d, double x, double y) {
    if (!within.contains(x, y)) return;
    for (const auto& c : out)
      if (c.dir == d && std::hypot(c.xi - x, c.eta - y) <= cell) return;
    out.push_back({x, y, d});
  };

  for (const auto& pl : geom.gamma) {
    if (pl.pts.size() < 2) continue;
    const std::size_t nseg = pl.pts.size() - (pl.closed ? 0 : 1);
    for (Dir d : {Dir::xi, Dir::eta, Dir::xi_plus_eta}) {
      for (std::size_t i = 0; i < nseg; ++i) {
        const auto& A = pl.pts[i];
        const auto& B = pl.pts[(i + 1) % pl.pts.size()];
        const double gscale =
            1 + std::hypot(phi_xi(trip, A[0], A[1]), phi_eta(trip, A[0], A[1]));
        const double ctol = 1e-9 * gscale;
        const double gA = functional(d, A[0], A[1]);
        const double gB = functional(d, B[0], B[1]);
        if (std::fabs(gA) <= ctol && std::fabs(gB) <= ctol) {
          push(d, 0.5 * (A[0] + B[0]), 0.5 * (A[1] + B[1]));
        } else if ((gA > 0) != (gB > 0)) {
          // bisect along the chord, then polish on the true curve
          double ta = 0, tb = 1, fa = gA;
          for (int it = 0; it < 60; ++it) {
            const double tm = 0.5 * (ta + tb);
            const double xm = A[0] + tm * (B[0] - A[0]);
            const double ym = A[1] + tm * (B[1] - A[1]);
            const double fm = functional(d, xm, ym);
            if ((fm > 0) == (fa > 0)) { ta = tm; fa = fm; }
            else tb = tm;
          }
          double x = A[0] + 0.5 * (ta + tb) * (B[0] - A[0]);
          double y = A[1] + 0.5 * (ta + tb) * (B[1] - A[1]);
          geo_detail::newton2(
              [&](double u, double v, double* f1, double* f2,
                  std::array<double, 4>* J) {
                *f1 = phi(trip, u, v);
                *f2 = functional(d, u, v);
                std::array<double, 2> g2;
                switch (d) {
                  case Dir::xi:
                    g2 = {phi_xieta(trip, u, v), phi_etaeta(trip, u, v)};
                    break;
                  case Dir::eta:
                    g2 = {phi_xixi(trip, u, v), phi_xieta(trip, u, v)};
                    break;
                  default:
                    g2 = {phi_xixi(trip, u, v) - phi_xieta(trip, u, v),
                          phi_xieta(trip, u, v) - phi_etaeta(trip, u, v)};
                }
                (*J) = {phi_xi(trip, u, v), phi_eta(trip, u, v), g2[0], g2[1]};
              },
              x, y, ctol, ctol, 2 * cell);
          push(d, x, y);
        }
      }
    }
  }
  return out;
}

// Signed curvature of the implicit curve {phi = 0} from exact derivatives.
inline double gamma_curvature(const DispersionTriple& trip, double x,
                              double y) {
  const double fx = phi_xi(trip, x, y), fy = phi_eta(trip, x, y);
  const double g = std::hypot(fx, fy);
  if (g < 1e-8) return std::numeric_limits<double>::quiet_NaN();
  const double fxx = phi_xixi(trip, x, y), fxy = phi_xieta(trip, x, y),
               fyy = phi_etaeta(trip, x, y);
  return (fxx * fy * fy - 2 * fxy * fx * fy + fyy * fx * fx) / (g * g * g);
}

inline GammaClass classify(const ResonanceGeometry& geom,
                           const DispersionTriple& trip,
                           const FrequencyBox& symbol_support) {
  GammaClass cls;

  // restrict the traced gamma to the support box
  bool any_curve = false;
  std::vector<std::array<double, 2>> curve_vertices;
  std::vector<std::array<double, 2>> isolated;
  for (const auto& pl : geom.gamma) {
    if (pl.pts.size() == 1) {
      if (symbol_support.contains(pl.pts[0][0], pl.pts[0][1]))
        isolated.push_back(pl.pts[0]);
      continue;
    }
    for (const auto& p : pl.pts)
      if (symbol_support.contains(p[0], p[1])) {
        any_curve = true;
        curve_vertices.push_back(p);
      }
  }

  if (!any_curve && isolated.empty()) {
    cls.tag = GammaClass::Tag::empty;
    cls.detail = "no zero set of the interaction phase inside the support";
    return cls;
  }

  if (!isolated.empty() && any_curve) {
    cls.mixed = true;
    cls.tag = GammaClass::Tag::curve_general;
    cls.detail = "mixed geometry: isolated touch point(s) and curve segments "
                 "both inside the support";
    return cls;
  }

  if (!isolated.empty()) {
    // single touch point: definite-Hessian test with exact derivatives
    const auto& p = isolated.front();
    const double gx = phi_xi(trip, p[0], p[1]), gy = phi_eta(trip, p[0], p[1]);
    const double fxx = phi_xixi(trip, p[0], p[1]);
    const double fxy = phi_xieta(trip, p[0], p[1]);
    const double fyy = phi_etaeta(trip, p[0], p[1]);
    const double tr = fxx + fyy;
    const double disc = std::sqrt(std::max(
        0.0, 0.25 * (fxx - fyy) * (fxx - fyy) + fxy * fxy));
    const double l1 = 0.5 * tr - disc, l2 = 0.5 * tr + disc;
    const bool grad_zero = std::hypot(gx, gy) <= 1e-6;
    const bool definite = (l1 > 1e-6 && l2 > 1e-6) ||
                          (l1 < -1e-6 && l2 < -1e-6);
    if (isolated.size() == 1 && grad_zero && definite) {
      cls.tag = GammaClass::Tag::point_order2_definite;
      cls.detail = "isolated zero with vanishing gradient and definite Hessian";
    } else {
      cls.mixed = true;
      cls.tag = GammaClass::Tag::curve_general;
      cls.detail = "isolated zero(s) without the definite-Hessian structure";
    }
    return cls;
  }

  // curve present: transversal space-time resonant point inside the support?
  for (const auto& rp : geom.points) {
    const double xf = rp.xi0 - rp.eta0, yf = rp.eta0;  // back to phi-coords
    if (rp.transversal && symbol_support.contains(xf, yf)) {
      cls.tag = GammaClass::Tag::transversal_point_intersection;
      cls.detail = "transversal intersection of the two resonant sets inside "
                   "the support";
      return cls;
    }
  }

  // characteristic points, with the output-direction exemption
  bool has_char = false;
  for (const auto& cp : geom.characteristic_points) {
    if (cp.dir == CharacteristicPoint::Direction::xi_plus_eta) continue;
    if (symbol_support.contains(cp.xi, cp.eta)) has_char = true;
  }
  if (!has_char) {
    cls.tag = GammaClass::Tag::curve_noncharacteristic;
    cls.detail = "curve with no characteristic point inside the support "
                 "(output-direction touches exempt)";
    return cls;
  }

  double min_curv = std::numeric_limits<double>::max();
  for (const auto& p : curve_vertices) {
    const double k = gamma_curvature(trip, p[0], p[1]);
    if (std::isnan(k)) continue;
    min_curv = std::min(min_curv, std::fabs(k));
  }
  if (min_curv != std::numeric_limits<double>::max() && min_curv >= 1e-3) {
    cls.tag = GammaClass::Tag::curve_nonvanishing_curvature;
    cls.detail = "characteristic curve with curvature bounded below on the "
                 "support";
    return cls;
  }
  cls.tag = GammaClass::Tag::curve_general;
  cls.detail = "curve with characteristic points and vanishing curvature";
  return cls;
}

}  // namespace rlab
