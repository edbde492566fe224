"""Exact eigenvalue extraction over Q(X) via bivariate factorization.

Characteristic polynomials of the matrices handled here live in
Q(X)[T].  Clearing denominators gives an element of Q[X, T]; sympy's
exact factorization then exposes the factors that are linear in T, whose
roots are the eigenvalues lying in Q(X).  Factors of higher T-degree are
reported as a non-split remainder, never approximated.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import RatFunc
from .poly import Poly


class NonSplitError(ValueError):
    """The required eigenvalues do not all lie in Q(X)."""


def linear_eigenvalues(p: Poly) -> tuple[list[tuple[RatFunc, int]], int]:
    """Roots of p (coefficients in Q(X)) that lie in Q(X).

    Returns (roots, nonsplit_degree): `roots` pairs each Q(X) root with
    its multiplicity, sorted deterministically; `nonsplit_degree` counts
    the remaining roots living in proper extensions.
    """
    import sympy

    _T, _X = sympy.symbols("T X")
    if p.is_zero():
        raise ValueError("zero polynomial")
    coeffs = [RatFunc.coerce(c) for c in p.coeffs]
    den = Poly((Fraction(1),))
    from .poly import gcd as poly_gcd

    for c in coeffs:
        g = poly_gcd(den, c.den)
        den = den * c.den.exact_div(g)
    expr = sympy.Integer(0)
    for i, c in enumerate(coeffs):
        if c.is_zero():
            continue
        scaled = c.num * den.exact_div(c.den)
        for j, q in enumerate(scaled.coeffs):
            if q == 0:
                continue
            expr += sympy.Rational(q.numerator, q.denominator) * _X**j * _T**i
    _, factors = sympy.factor_list(sympy.Poly(expr, _T, _X))
    roots: list[tuple[RatFunc, int]] = []
    nonsplit = 0
    for factor, mult in factors:
        fpoly = sympy.Poly(factor, _T)
        deg_t = fpoly.degree()
        if deg_t == 0:
            continue
        if deg_t > 1:
            nonsplit += deg_t * mult
            continue
        a1, a0 = fpoly.all_coeffs()
        root = -_ratfunc_from_sympy(a0, _X) / _ratfunc_from_sympy(a1, _X)
        roots.append((root, mult))
    roots.sort(key=lambda rm: (str(rm[0]), rm[1]))
    return roots, nonsplit


def _ratfunc_from_sympy(expr, x_symbol) -> RatFunc:
    import sympy

    poly = sympy.Poly(sympy.expand(expr), x_symbol)
    coeffs = list(reversed(poly.all_coeffs()))
    return RatFunc(Poly(Fraction(c.p, c.q) for c in map(sympy.Rational, coeffs)))
