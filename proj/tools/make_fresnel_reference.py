#!/usr/bin/env python3
"""Generate frozen high-precision reference values for the boundary Fresnel
integrals

    G1(x) = int_x^inf exp(i s^2) ds
    G2(x) = int_x^inf exp(i s^2) / sqrt(s - x) ds

and for a handful of oscillatory-integral oracle cases

    I(t) = int_L^inf exp(i t zeta(s)) chi(s) w(s) ds .

Every emitted value is computed by two independent routes at high precision
and the routes are required to agree far below double precision before
anything is written.  Output: tests/fresnel_reference.hpp (C++ header with
plain arrays; no runtime dependency on this script).

Run from the repository root:  python3 tools/make_fresnel_reference.py
"""

import sys
from mpmath import mp, mpf, mpc, exp, sqrt, erfc, pi, quad, fabs, gamma

I = mpc(0, 1)


# ---------------------------------------------------------------------------
# G1: primary route via the rotated complementary error function,
#     G1(x) = e^{i pi/4} (sqrt(pi)/2) erfc(e^{-i pi/4} x),
# which follows from s = e^{i pi/4} v and the Gaussian integral.
# ---------------------------------------------------------------------------

def g1_erfc(x):
    return exp(I * pi / 4) * sqrt(pi) / 2 * erfc(exp(-I * pi / 4) * mpf(x))


def split_points(a, b, phase_scale):
    """Points dividing [a,b] so each piece spans <= ~pi of s^2-type phase."""
    pts = [mpf(a)]
    s = mpf(a)
    while s < b:
        step = pi / (2 * (fabs(phase_scale(s)) + 1))
        s = min(mpf(b), s + step)
        pts.append(s)
    return pts


def g1_tail_rotated(R):
    """int_R^inf e^{i s^2} ds via s = R + e^{i pi/4} u (steepest descent)."""
    def f(u):
        return exp(-sqrt(2) * R * u - u * u) * exp(I * sqrt(2) * R * u)
    umax = mpf(115) / (sqrt(2) * R) + 12
    val = quad(f, [0, umax / 4, umax])
    return exp(I * pi / 4) * exp(I * R * R) * val


def g1_quad(x):
    """Cross-check route: oscillation-split panels on [x, R] + rotated tail."""
    R = mpf(30)
    pts = split_points(x, R, lambda s: 2 * s)
    val = quad(lambda s: exp(I * s * s), pts)
    return val + g1_tail_rotated(R)


def g1_series(x):
    """Cross-check route for large |x|: integration-by-parts series.

    G1(x) = e^{i x^2} sum_k d_k x^{-(2k+1)},  d_0 = -1/(2i),
    d_{k+1} = d_k (2k+1)/(2i).  Asymptotic; summed while terms shrink.
    """
    x = mpf(x)
    d = -1 / (2 * I)
    total = mpc(0)
    term = d / x
    k = 0
    while fabs(term) > mpf(10) ** (-mp.dps - 5) and k < 200:
        total += term
        d = d * (2 * k + 1) / (2 * I)
        k += 1
        new_term = d / x ** (2 * k + 1)
        if fabs(new_term) > fabs(term):
            break
        term = new_term
    return exp(I * x * x) * total


def g1_reference(x):
    x = mpf(x)
    main = g1_erfc(x)
    if fabs(x) <= 30:
        check = g1_quad(x)
    elif x > 0:
        check = g1_series(x)
    else:
        check = c0_formula() - g1_series(-x)
    err = fabs(main - check)
    assert err < mpf(10) ** -22, f"G1 cross-check failed at x={x}: {err}"
    return main


def c0_formula():
    return (1 + I) * sqrt(pi / 2)


def c0_quadrature():
    R = mpf(12)
    pts = split_points(-R, R, lambda s: 2 * s)
    core = quad(lambda s: exp(I * s * s), pts)
    return core + 2 * g1_tail_rotated(R)


# ---------------------------------------------------------------------------
# G2 routes.  The substitution s = x + u^2 gives
#     G2(x) = 2 int_0^inf exp(i (x+u^2)^2) du .
#
# Route A (brute, |x| <= 20): real-axis panels up to s = R, then the tail
#   rotated at s = R along e^{i pi/4}.
# Route B (contour, x <= -8): descent ray from the branch point s = x in
#   direction e^{-i pi/4}, joining the diagonal s = e^{i pi/4} v through the
#   stationary point s = 0 exactly at v = x/sqrt(2).
# Route C (rotated, x >= 8): u = e^{i pi/8} w, fully damped for x > 0.
# ---------------------------------------------------------------------------

def g2_brute(x):
    x = mpf(x)
    R = mpf(12) + max(mpf(0), x)
    U = sqrt(R - x)
    pts = split_points(0, U, lambda u: 4 * u * (x + u * u))
    core = 2 * quad(lambda u: exp(I * (x + u * u) ** 2), pts)

    def tail_f(s):
        sig = R + exp(I * pi / 4) * s
        return exp(I * sig * sig) / sqrt(sig - x)
    smax = mpf(115) / (sqrt(2) * R) + 12
    tail = exp(I * pi / 4) * quad(tail_f, [0, smax / 4, smax])
    return core + tail


def g2_contour(x):
    x = mpf(x)
    assert x <= -8
    s1 = -x / sqrt(2)                       # ray length to the diagonal
    s_cut = min(s1, mpf(115) / (sqrt(2) * -x))

    # ray piece, with the sqrt weight removed by s = w^2
    def ray_f(w):
        sig = x + exp(-I * pi / 4) * w * w
        return exp(I * sig * sig)
    wmax = sqrt(s_cut)
    pts = split_points(0, wmax, lambda w: 2 * sqrt(2) * x * w)
    ray = 2 * exp(-I * pi / 8) * quad(ray_f, pts)

    # diagonal piece through the stationary point
    vlo = max(x / sqrt(2), -mpf(11))
    vhi = mpf(11)

    def diag_f(v):
        return exp(-v * v) / sqrt(exp(I * pi / 4) * v - x)
    diag = exp(I * pi / 4) * quad(diag_f, [vlo, 0, vhi])
    return ray + diag


def g2_rotated(x):
    x = mpf(x)
    assert x >= 8
    wmax = sqrt(mpf(115) / (sqrt(2) * x)) + mpf(3.5)

    def f(w):
        u2 = exp(I * pi / 4) * w * w
        return exp(I * (x + u2) ** 2)
    pts = split_points(0, wmax, lambda w: 2 * sqrt(2) * x * w)
    return 2 * exp(I * pi / 8) * quad(f, pts)


def g2_watson(x):
    """Extra check for x >= 8: asymptotic series
    G2 = e^{i pi/4} e^{i x^2} sum_k (-i)^k Gamma(2k+1/2) / (k! (2x)^{2k+1/2}).
    """
    x = mpf(x)
    total = mpc(0)
    prev = mpf('inf')
    for k in range(60):
        term = (-I) ** k * gamma(2 * k + mpf('0.5')) / \
            (gamma(k + 1) * (2 * x) ** (2 * k + mpf('0.5')))
        if fabs(term) > prev:
            break
        prev = fabs(term)
        total += term
        if prev < mpf(10) ** -30:
            break
    return exp(I * pi / 4) * exp(I * x * x) * total


def g2_reference(x):
    x = mpf(x)
    if x <= -8:
        main, check = g2_contour(x), None
        if x >= -20:
            check = g2_brute(x)
        else:
            mp.dps += 10
            check = g2_contour(x)
            mp.dps -= 10
    elif x >= 8:
        main, check = g2_rotated(x), g2_brute(x) if x <= 20 else g2_watson(x)
    else:
        main, check = g2_brute(x), g2_contour(x) if x <= -8 else None
        if check is None:
            mp.dps += 10
            check = g2_brute(x)
            mp.dps -= 10
    tol = mpf(10) ** (-22 if fabs(x) <= 20 else -12)
    err = fabs(main - check)
    assert err < tol, f"G2 cross-check failed at x={x}: {err}"
    return main


# ---------------------------------------------------------------------------
# Oscillatory oracle cases.  Same amplitude/phase formulas as the C++ suite.
# ---------------------------------------------------------------------------

def bump(s, c, r, scale=1):
    u = (mpf(s) - c) / r
    if fabs(u) >= 1:
        return mpf(0)
    return scale * exp(1 - 1 / (1 - u * u))


def poly_val(coeffs, s):
    acc = mpf(0)
    for c in reversed(coeffs):
        acc = acc * s + c
    return acc


def poly_der(coeffs):
    return [k * c for k, c in enumerate(coeffs)][1:]


def oracle_case(coeffs, amp, weight, lower, t):
    """I = int_lower^sup exp(i t zeta(s)) chi(s) w(s) ds, truncated where chi
    vanishes.  weight: ('none',) | ('inv_sqrt_sigma',) | ('shift', eps)."""
    c, r = amp
    lo = mpf(lower)
    hi = mpf(c) + mpf(r)
    if hi <= lo:
        return mpc(0)
    der = poly_der(coeffs)

    sing = None
    if weight[0] == 'inv_sqrt_sigma':
        sing = mpf(0)
    elif weight[0] == 'shift':
        sing = mpf(weight[1])

    if sing is not None and fabs(sing - lo) < mpf('1e-30'):
        # remove the endpoint singularity: s = lo + u^2, integrand doubles
        U = sqrt(hi - lo)

        def f(u):
            s = lo + u * u
            return 2 * exp(I * t * poly_val(coeffs, s)) * bump(s, c, r)
        pts = split_points(0, U, lambda u:
                           2 * t * u * poly_val(der, lo + u * u))
        return quad(f, pts)

    def f(s):
        w = mpf(1)
        if weight[0] == 'inv_sqrt_sigma':
            w = 1 / sqrt(s)
        elif weight[0] == 'shift':
            w = 1 / sqrt(s - mpf(weight[1]))
        return exp(I * t * poly_val(coeffs, s)) * bump(s, c, r) * w
    pts = split_points(lo, hi, lambda s: t * poly_val(der, s))
    return quad(f, pts)


def oracle_reference(coeffs, amp, weight, lower, t):
    mp.dps = 40
    a = oracle_case(coeffs, amp, weight, lower, t)
    mp.dps = 55
    b = oracle_case(coeffs, amp, weight, lower, t)
    mp.dps = 40
    err = fabs(a - b)
    assert err < mpf(10) ** -20, f"oracle cross-check failed: {err}"
    return b


# ---------------------------------------------------------------------------
# emission
# ---------------------------------------------------------------------------

def cnum(z):
    z = mpc(z)
    return "{%.17e, %.17e}" % (float(z.real), float(z.imag))


def main():
    mp.dps = 40

    g1_xs = [0, 0.1, 0.3, 0.5, 1, 1.5, 2, 2.5, 3, 4, 5, 6, 7, 7.5, 7.9,
             8, 8.1, 9, 10, 12, 15, 20, 30, 50, 75, 100, 300, 1000, 3000,
             10000]
    g1_xs = sorted(set([x for x in g1_xs] + [-x for x in g1_xs]))
    g2_xs = list(g1_xs)

    g1_rows = [(x, g1_reference(x)) for x in g1_xs]
    print("G1 done", flush=True)
    g2_rows = [(x, g2_reference(x)) for x in g2_xs]
    print("G2 done", flush=True)

    c0f, c0q = c0_formula(), c0_quadrature()
    assert fabs(c0f - c0q) < mpf(10) ** -25, fabs(c0f - c0q)
    cp = g1_reference(0)
    assert fabs(c0f - 2 * cp) < mpf(10) ** -25

    # (name, phase coeffs low->high, bump (center, radius), weight, lower, t)
    osc_cases = [
        ("parabola_shift_t50",  [1, -2, 1], (1.0, 0.8), ('none',), 0.0, 50),
        ("parabola_shift_t400", [1, -2, 1], (1.0, 0.8), ('none',), 0.0, 400),
        ("linear_weighted_t50", [0, 1], (0.0, 1.0), ('inv_sqrt_sigma',), 0.0, 50),
        ("linear_weighted_t400", [0, 1], (0.0, 1.0), ('inv_sqrt_sigma',), 0.0, 400),
        ("square_shift_weighted_t50", [0, 0, 1], (0.0, 1.0), ('shift', 0.1), 0.1, 50),
        ("square_shift_weighted_t400", [0, 0, 1], (0.0, 1.0), ('shift', 0.1), 0.1, 400),
        ("interior_weighted_t50", [1, -2, 1], (1.0, 0.5), ('inv_sqrt_sigma',), 0.0, 50),
        ("interior_weighted_t400", [1, -2, 1], (1.0, 0.5), ('inv_sqrt_sigma',), 0.0, 400),
        ("quartic_t50", [0, 0, -1, 0, 1], (0.8, 0.7), ('none',), 0.0, 50),
    ]
    osc_rows = []
    for name, coeffs, amp, weight, lower, t in osc_cases:
        osc_rows.append((name, oracle_reference(coeffs, amp, weight, lower, t)))
        print("osc", name, "done", flush=True)

    out = []
    out.append("// Frozen high-precision reference values for the Fresnel-type")
    out.append("// boundary integrals and the quadrature oracle.  Generated by")
    out.append("// tools/make_fresnel_reference.py; do not edit by hand.")
    out.append("#pragma once")
    out.append("#include <complex>")
    out.append("#include <vector>")
    out.append("")
    out.append("namespace rlab_test_reference {")
    out.append("")
    out.append("struct RefPoint { double x; std::complex<double> value; };")
    out.append("struct OscRef   { const char* name; std::complex<double> value; };")
    out.append("")
    out.append("inline const std::vector<RefPoint>& g1_reference() {")
    out.append("  static const std::vector<RefPoint> v = {")
    for x, z in g1_rows:
        out.append("      {%.17g, %s}," % (float(x), cnum(z)))
    out.append("  };")
    out.append("  return v;")
    out.append("}")
    out.append("")
    out.append("inline const std::vector<RefPoint>& g2_reference() {")
    out.append("  static const std::vector<RefPoint> v = {")
    for x, z in g2_rows:
        out.append("      {%.17g, %s}," % (float(x), cnum(z)))
    out.append("  };")
    out.append("  return v;")
    out.append("}")
    out.append("")
    out.append("inline std::complex<double> c0_reference()      { return %s; }" % cnum(c0f))
    out.append("inline std::complex<double> c_plus_reference()  { return %s; }" % cnum(cp))
    out.append("inline std::complex<double> c_minus_reference() { return %s; }" % cnum(mpc(cp).conjugate()))
    out.append("")
    out.append("inline const std::vector<OscRef>& oracle_reference() {")
    out.append("  static const std::vector<OscRef> v = {")
    for name, z in osc_rows:
        out.append("      {\"%s\", %s}," % (name, cnum(z)))
    out.append("  };")
    out.append("  return v;")
    out.append("}")
    out.append("")
    out.append("} // namespace rlab_test_reference")
    out.append("")

    with open("tests/fresnel_reference.hpp", "w") as fh:
        fh.write("\n".join(out))
    print("wrote tests/fresnel_reference.hpp")


if __name__ == "__main__":
    sys.exit(main())
