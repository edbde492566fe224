"""Order-compatible valuations on Q(X) and the Newton polygon engine.

Two discrete valuations are supported, matching the two order families:
the (X-a)-adic valuation nu_a (pole/zero order at a rational point) and
the valuation at infinity with nu(X) = -1.  Values are Fractions, with a
single INFINITY sentinel for the zero element, so that the (1/K)Z period
arithmetic downstream stays exactly typed.

The Newton polygon of a polynomial over the valued field recovers the
multiset of valuations of its roots without extracting any root: each
lower-hull segment of slope s and horizontal extent m contributes m roots
of valuation -s.  Zero roots (vanishing low-order coefficients) are
reported separately as a block of valuation INFINITY.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .fields import OrderSpec, RatFunc
from .poly import Poly


class _Infinity:
    """Valuation of 0; larger than every finite value, absorbing under +."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("valrep.INFINITY")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__


INFINITY = _Infinity()

Value = Fraction | _Infinity


@dataclass(frozen=True)
class Valuation:
    """Discrete valuation on Q(X): (X-a)-adic, or the one at infinity."""

    kind: str
    a: Fraction | None = None

    _KINDS = ("adic", "at_inf")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown valuation kind {self.kind!r}")
        if self.kind == "adic":
            if self.a is None:
                raise ValueError("adic valuation needs a rational anchor")
            object.__setattr__(self, "a", Fraction(self.a))
        elif self.a is not None:
            raise ValueError("the valuation at infinity takes no anchor")

    @classmethod
    def adic(cls, a) -> "Valuation":
        return cls("adic", Fraction(a))

    @classmethod
    def at_infinity(cls) -> "Valuation":
        return cls("at_inf")

    def of(self, f) -> Value:
        """nu(f); INFINITY exactly for f = 0."""
        f = RatFunc.coerce(f)
        if f.is_zero():
            return INFINITY
        if self.kind == "adic":
            return Fraction(f.num.multiplicity_at(self.a) - f.den.multiplicity_at(self.a))
        return Fraction(f.den.degree - f.num.degree)

    def spec_string(self) -> str:
        return f"adic:{self.a}" if self.kind == "adic" else "atinf"

    @classmethod
    def from_spec_string(cls, text: str) -> "Valuation":
        head, _, anchor = text.partition(":")
        if head == "adic":
            return cls.adic(Fraction(anchor))
        if head == "atinf" and not anchor:
            return cls.at_infinity()
        raise ValueError(f"unknown valuation spec {text!r}")

    def __str__(self) -> str:
        return self.spec_string()


def nu(f, val: Valuation) -> Value:
    """Functional spelling of val.of(f)."""
    return val.of(f)


def canonical_valuation(order: OrderSpec) -> Valuation:
    """The order-compatible valuation paired with each order.

    a_+ and a_- pair with the (X-a)-adic valuation; both infinities pair
    with the valuation at infinity.
    """
    if order.kind in ("a_plus", "a_minus"):
        return Valuation.adic(order.a)
    return Valuation.at_infinity()


@dataclass(frozen=True)
class CompatibilityReport:
    """Outcome of checking 0 < x <= y  =>  nu(x) >= nu(y) on sample pairs."""

    compatible: bool
    pairs_checked: int
    witness: tuple[RatFunc, RatFunc] | None = None

    def __bool__(self) -> bool:
        return self.compatible


def check_order_compatibility(
    order: OrderSpec, val: Valuation, samples: Sequence[RatFunc]
) -> CompatibilityReport:
    """Verify order-compatibility of a valuation on all ordered sample pairs.

    For every pair with 0 < x <= y in the order, nu(x) >= nu(y) must hold.
    The first violating pair is reported rather than raised.
    """
    samples = [RatFunc.coerce(s) for s in samples]
    checked = 0
    for x in samples:
        if order.sign(x) <= 0:
            continue
        for y in samples:
            if order.sign(y) <= 0 or order.compare(x, y) > 0:
                continue
            checked += 1
            if not val.of(x) >= val.of(y):
                return CompatibilityReport(False, checked, (x, y))
    return CompatibilityReport(True, checked)


@dataclass(frozen=True)
class NewtonPolygonResult:
    """Root valuations of a polynomial over (Q(X), nu).

    `root_valuations` lists (valuation, multiplicity) pairs in
    nondecreasing valuation order; `zero_roots` counts roots equal to 0
    (valuation INFINITY), coming from vanishing low-order coefficients.
    Total multiplicity equals the degree of the input.
    """

    root_valuations: tuple[tuple[Fraction, int], ...]
    zero_roots: int = 0

    def expanded(self) -> list[Fraction]:
        """Finite root valuations with multiplicity, nondecreasing."""
        out: list[Fraction] = []
        for v, m in self.root_valuations:
            out.extend([v] * m)
        return out

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.root_valuations) + self.zero_roots


def newton_polygon(p: Poly, val: Valuation) -> NewtonPolygonResult:
    """Root-valuation multiset of p (coefficients in Q(X)) via the lower hull.

    Points (i, nu(c_i)) are taken over the nonzero coefficients; the lower
    convex hull's segment of slope s over horizontal extent m yields m
    roots of valuation -s.  A vanishing block of low-order coefficients
    contributes that many zero roots.
    """
    if p.is_zero():
        raise ValueError("Newton polygon of the zero polynomial")
    coeffs = [RatFunc.coerce(c) for c in p.coeffs]
    points = [(i, val.of(c)) for i, c in enumerate(coeffs) if not c.is_zero()]
    zero_roots = points[0][0]
    if len(points) == 1:
        return NewtonPolygonResult((), zero_roots)
    hull = _lower_hull(points)
    pairs: list[tuple[Fraction, int]] = []
    for (i0, v0), (i1, v1) in zip(hull, hull[1:]):
        slope = Fraction(v1 - v0, i1 - i0)
        pairs.append((-slope, i1 - i0))
    pairs.sort(key=lambda sm: sm[0])
    merged: list[tuple[Fraction, int]] = []
    for v, m in pairs:
        if merged and merged[-1][0] == v:
            merged[-1] = (v, merged[-1][1] + m)
        else:
            merged.append((v, m))
    return NewtonPolygonResult(tuple(merged), zero_roots)


def _lower_hull(points: list[tuple[int, Fraction]]) -> list[tuple[int, Fraction]]:
    hull: list[tuple[int, Fraction]] = []
    for pt in points:
        while len(hull) >= 2 and _turns_right_or_straight(hull[-2], hull[-1], pt):
            hull.pop()
        hull.append(pt)
    return hull


def _turns_right_or_straight(a, b, c) -> bool:
    # middle point b lies on or above the chord a->c; collinear points merge
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]) <= 0
