#!/usr/bin/env python3
"""Regenerate the numeric tables embedded in the dg-advect crate.

Produces two Rust source files:

  crates/dg-advect/src/basis/coeffs.rs
      Monomial coefficients of the L2-orthonormal polynomial basis on the
      reference triangle {(0,0),(1,0),(0,1)}, obtained by Gram-Schmidt
      orthonormalization of the monomial sequence in exact rational
      arithmetic (LDL^T factorization of the monomial Gram matrix).

  crates/dg-advect/src/quadrature/tables.rs
      Interior-point, positive-weight quadrature rules:
      - triangle rules of order 1 (centroid) and 2 (three-point symmetric),
      - triangle rules of orders 3..9 as conical products of Gauss-Legendre
        and Gauss-Jacobi (alpha=1) rules on the collapsed square,
      - Gauss-Legendre rules on (0,1) with 1..6 points.

Every table is verified against exact monomial moments before it is written.
Requires sympy and mpmath.
"""

from fractions import Fraction
from math import factorial
import sympy
from sympy.integrals.quadrature import gauss_legendre, gauss_jacobi
import mpmath

mpmath.mp.dps = 40

MAX_DEG = 4


def multi_index_table(p):
    out = []
    for deg in range(p + 1):
        for a2 in range(deg + 1):
            out.append((deg - a2, a2))
    return out


def monomial_moment(a1, a2):
    """Integral of x^a1 y^a2 over the reference triangle."""
    return Fraction(factorial(a1) * factorial(a2), factorial(a1 + a2 + 2))


def gram_matrix(indices):
    n = len(indices)
    g = [[Fraction(0)] * n for _ in range(n)]
    for i, (a1, a2) in enumerate(indices):
        for j, (b1, b2) in enumerate(indices):
            g[i][j] = monomial_moment(a1 + b1, a2 + b2)
    return g


def ldl(g):
    """Exact LDL^T of a symmetric positive definite rational matrix."""
    n = len(g)
    l = [[Fraction(0)] * n for _ in range(n)]
    d = [Fraction(0)] * n
    for i in range(n):
        for j in range(i):
            s = g[i][j] - sum(l[i][k] * l[j][k] * d[k] for k in range(j))
            l[i][j] = s / d[j]
        l[i][i] = Fraction(1)
        d[i] = g[i][i] - sum(l[i][k] ** 2 * d[k] for k in range(i))
        assert d[i] > 0
    return l, d


def unit_lower_inverse(l):
    n = len(l)
    inv = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        inv[i][i] = Fraction(1)
        for j in range(i):
            inv[i][j] = -sum(l[i][k] * inv[k][j] for k in range(j, i))
    return inv


def modal_coefficients():
    indices = multi_index_table(MAX_DEG)
    g = gram_matrix(indices)
    l, d = ldl(g)
    a = unit_lower_inverse(l)
    n = len(indices)
    coeffs = [[mpmath.mpf(0)] * n for _ in range(n)]
    for i in range(n):
        scale = 1 / mpmath.sqrt(mpmath.mpf(d[i].numerator) / d[i].denominator)
        for j in range(i + 1):
            coeffs[i][j] = scale * mpmath.mpf(a[i][j].numerator) / a[i][j].denominator
    # verify orthonormality against exact monomial moments
    for i in range(n):
        for j in range(n):
            acc = mpmath.mpf(0)
            for k, (a1, a2) in enumerate(indices):
                for m, (b1, b2) in enumerate(indices):
                    if coeffs[i][k] and coeffs[j][m]:
                        mom = monomial_moment(a1 + b1, a2 + b2)
                        acc += coeffs[i][k] * coeffs[j][m] * mpmath.mpf(mom.numerator) / mom.denominator
            target = 1 if i == j else 0
            assert abs(acc - target) < mpmath.mpf("1e-30"), (i, j, acc)
    return indices, coeffs


def legendre_01(npts):
    xs, ws = gauss_legendre(npts, 40)
    pts = [(mpmath.mpf(1) + mpmath.mpf(str(x))) / 2 for x in xs]
    wts = [mpmath.mpf(str(w)) / 2 for w in ws]
    order = [i for i, _ in sorted(enumerate(pts), key=lambda t: t[1])]
    return [pts[i] for i in order], [wts[i] for i in order]


def jacobi_01(npts):
    """Nodes/weights for integrals of the form int_0^1 (1-v) f(v) dv."""
    xs, ws = gauss_jacobi(npts, 1, 0, 40)
    pts = [(mpmath.mpf(1) + mpmath.mpf(str(x))) / 2 for x in xs]
    wts = [mpmath.mpf(str(w)) / 4 for w in ws]
    order = [i for i, _ in sorted(enumerate(pts), key=lambda t: t[1])]
    return [pts[i] for i in order], [wts[i] for i in order]


def triangle_rule(order):
    if order == 1:
        third = mpmath.mpf(1) / 3
        return [(third, third)], [mpmath.mpf(1) / 2]
    if order == 2:
        s = mpmath.mpf(1) / 6
        t = mpmath.mpf(2) / 3
        w = mpmath.mpf(1) / 6
        return [(s, s), (t, s), (s, t)], [w, w, w]
    npts = order // 2 + 1
    us, wus = legendre_01(npts)
    vs, wvs = jacobi_01(npts)
    pts, wts = [], []
    for v, wv in zip(vs, wvs):
        for u, wu in zip(us, wus):
            pts.append((u * (1 - v), v))
            wts.append(wu * wv)
    return pts, wts


def verify_triangle_rule(order, pts, wts):
    for a1 in range(order + 1):
        for a2 in range(order + 1 - a1):
            acc = mpmath.mpf(0)
            for (x, y), w in zip(pts, wts):
                acc += w * x**a1 * y**a2
            mom = monomial_moment(a1, a2)
            exact = mpmath.mpf(mom.numerator) / mom.denominator
            assert abs(acc - exact) < mpmath.mpf("1e-30"), (order, a1, a2)


def verify_edge_rule(npts, pts, wts):
    for deg in range(2 * npts):
        acc = sum(w * x**deg for x, w in zip(pts, wts))
        exact = mpmath.mpf(1) / (deg + 1)
        assert abs(acc - exact) < mpmath.mpf("1e-30"), (npts, deg)


def fmt(x):
    if x == 0:
        return "0.0"
    return mpmath.nstr(x, 17, strip_zeros=False)


def write_coeffs(path, indices, coeffs):
    n = len(indices)
    with open(path, "w") as f:
        f.write("// Generated by scripts/generate_tables.py; do not edit by hand.\n")
        f.write("\n")
        f.write("/// Number of basis functions in the degree-4 hierarchy.\n")
        f.write(f"pub const NUM_MODAL: usize = {n};\n\n")
        f.write("/// Row i holds the monomial coefficients of the i-th orthonormal\n")
        f.write("/// basis function; monomials are ordered by the linear index mapping.\n")
        f.write(f"pub const MODAL_COEFFS: [[f64; {n}]; {n}] = [\n")
        for i in range(n):
            f.write("    [" + ", ".join(fmt(c) for c in coeffs[i]) + "],\n")
        f.write("];\n")


def write_quad_tables(path):
    with open(path, "w") as f:
        f.write("// Generated by scripts/generate_tables.py; do not edit by hand.\n")
        f.write("\n")
        f.write("/// (points, weights) of the triangle rules, indexed by order - 1.\n")
        f.write("pub const TRIANGLE_RULES: [(&[[f64; 2]], &[f64]); 9] = [\n")
        for order in range(1, 10):
            pts, wts = triangle_rule(order)
            verify_triangle_rule(order, pts, wts)
            f.write(f"    // order {order}, {len(pts)} points\n")
            f.write("    (&[" + ", ".join(f"[{fmt(x)}, {fmt(y)}]" for x, y in pts) + "],\n")
            f.write("     &[" + ", ".join(fmt(w) for w in wts) + "]),\n")
        f.write("];\n\n")
        f.write("/// (points, weights) of the Gauss-Legendre rules on (0,1),\n")
        f.write("/// indexed by point count - 1; an n-point rule has order 2n-1.\n")
        f.write("pub const GAUSS_RULES: [(&[f64], &[f64]); 6] = [\n")
        for npts in range(1, 7):
            pts, wts = legendre_01(npts)
            verify_edge_rule(npts, pts, wts)
            f.write(f"    // {npts} points, order {2 * npts - 1}\n")
            f.write("    (&[" + ", ".join(fmt(p) for p in pts) + "],\n")
            f.write("     &[" + ", ".join(fmt(w) for w in wts) + "]),\n")
        f.write("];\n")


def main():
    indices, coeffs = modal_coefficients()
    write_coeffs("crates/dg-advect/src/basis/coeffs.rs", indices, coeffs)
    write_quad_tables("crates/dg-advect/src/quadrature/tables.rs")
    print("tables written and verified")


if __name__ == "__main__":
    main()
