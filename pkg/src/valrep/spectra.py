"""Translation lengths, Jordan projections and building pseudodistances.

Everything here goes through characteristic polynomials and Newton
polygons: the Jordan projection of g over (Q(X), nu) is the sorted vector
of -nu(eigenvalue) values, read off the polygon of char_poly(g) without
extracting any root.  For symplectic g the valuation multiset is
symmetric under negation (eigenvalues pair as lambda, 1/lambda) and the
Jordan vector is its nonnegative half.

Two norms aggregate a Jordan vector into a length: the Siegel-model sum
of entries ("sum"), and the projective max-ratio spread ("spread").  The
orbit-point pseudodistance between g1 and g2 halves the polygon data of
t(h) h with h = g1^{-1} g2, since Cartan values are square roots of the
eigenvalues of t(h) h.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import Matrix, SingularMatrixError
from .valuation import NewtonPolygonResult, Valuation, newton_polygon

NORM_SUM = "sum"
NORM_SPREAD = "spread"
_NORMS = (NORM_SUM, NORM_SPREAD)


class NonSymplecticSpectrumError(ValueError):
    """Char-poly valuations failed the lambda <-> 1/lambda symmetry."""


def char_poly(g: Matrix):
    """Monic characteristic polynomial of g (exact)."""
    return g.char_poly()


def root_valuations(g: Matrix, val: Valuation) -> list[Fraction]:
    """nu(lambda) for all eigenvalues of an invertible g, nondecreasing."""
    p = g.char_poly()
    if p.coefficient(0) == 0:
        raise SingularMatrixError("matrix is singular; Jordan data undefined")
    result = newton_polygon(p, val)
    return result.expanded()


def jordan_valuation(
    g: Matrix, val: Valuation, mode: str = "symplectic"
) -> tuple[Fraction, ...]:
    """Jordan projection as -nu(eigenvalue) values, sorted nonincreasing.

    Symplectic mode checks the +/- symmetry of the valuation multiset and
    returns the nonnegative half (n entries for a 2n x 2n input).  Linear
    mode returns all values; consumers treat them projectively.
    """
    values = root_valuations(g, val)
    slopes = sorted((-v for v in values), reverse=True)
    if mode == "linear":
        return tuple(slopes)
    if mode != "symplectic":
        raise ValueError(f"unknown mode {mode!r}")
    if g.rows % 2:
        raise ValueError("symplectic mode needs even size")
    if sorted(values) != sorted(-v for v in values):
        raise NonSymplecticSpectrumError(
            "eigenvalue valuations are not symmetric under negation"
        )
    n = g.rows // 2
    return tuple(slopes[:n])


def translation_length(g: Matrix, val: Valuation, norm: str = NORM_SUM) -> Fraction:
    """Length of g on the building: sum of the Jordan vector, or its spread."""
    _check_norm(norm)
    if norm == NORM_SUM:
        return sum(jordan_valuation(g, val, mode="symplectic"), Fraction(0))
    slopes = jordan_valuation(g, val, mode="linear")
    return slopes[0] - slopes[-1]


def building_pseudodistance(
    g1: Matrix, g2: Matrix, val: Valuation, norm: str = NORM_SUM
) -> Fraction:
    """Pseudodistance between the orbit points of g1 and g2.

    With h = g1^{-1} g2 and m = t(h) h, the Cartan values of h have
    valuations equal to half the root valuations of char_poly(m); the
    "sum" norm aggregates max(-v/2, 0) over the whole (symmetric)
    multiset, the "spread" norm takes half the spread.
    """
    _check_norm(norm)
    h = g1.inverse() @ g2
    m = h.transpose() @ h
    values = root_valuations(m, val)
    if norm == NORM_SUM:
        half = Fraction(1, 2)
        return sum((max(-v * half, Fraction(0)) for v in values), Fraction(0))
    return Fraction(max(values) - min(values), 2)


def _check_norm(norm: str):
    if norm not in _NORMS:
        raise ValueError(f"norm must be one of {_NORMS}, got {norm!r}")
