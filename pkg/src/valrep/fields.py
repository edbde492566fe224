"""The ordered field Q(X): exact rational functions and their non-Archimedean orders.

A `RatFunc` is a reduced fraction num/den of polynomials over Q with a
monic denominator; this canonical form is unique, so equality and hashing
are structural.  The four non-Archimedean orders on Q(X) are anchored at a
rational point a (from below or above) or at one of the two infinities.
Signs under an order are decided by exact deflation: factor out the
largest power of (X - a) and evaluate the cofactor at a; no numeric
evaluation is ever involved.

Under any of these orders Q(X) is non-Archimedean: at the order a_+ the
element 1/(X - a) is larger than every rational constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .poly import Poly, gcd

Rationalish = Union[int, Fraction]

_ZERO = Poly()
_ONE = Poly((Fraction(1),))


class RatFunc:
    """Element of Q(X) in canonical form: gcd(num, den) = 1, den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = _ONE if den is None else _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in Q(X)")
        if num.is_zero():
            object.__setattr__(self, "num", _ZERO)
            object.__setattr__(self, "den", _ONE)
            return
        g = gcd(num, den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        lead = den.leading()
        if lead != 1:
            num = Poly(c / lead for c in num.coeffs)
            den = den.monic()
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    # -- coercion and structure ----------------------------------------

    @staticmethod
    def coerce(value) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, (int, Fraction)):
            return RatFunc(Poly((Fraction(value),)))
        if isinstance(value, Poly):
            return RatFunc(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to Q(X)")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant rational function")
        return Fraction(0) if self.num.is_zero() else self.num.coeffs[0]

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.den == _ONE and self.num == Fraction(other)
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.as_fraction())
        return hash(("RatFunc", self.num.coeffs, self.den.coeffs))

    # -- field arithmetic -----------------------------------------------

    def __neg__(self) -> "RatFunc":
        return _raw(-self.num, self.den)

    def __add__(self, other) -> "RatFunc":
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        d1, d2 = self.den, other.den
        if d1.degree == 0 and d2.degree == 0:
            t = self.num + other.num
            return ZERO if t.is_zero() else _raw(t, _ONE)
        # classical coprime-part bookkeeping keeps outputs reduced without
        # a full gcd of the cross products
        g = gcd(d1, d2)
        if g.degree == 0:
            return _raw(self.num * d2 + other.num * d1, d1 * d2)
        d1r, d2r = d1.exact_div(g), d2.exact_div(g)
        t = self.num * d2r + other.num * d1r
        if t.is_zero():
            return ZERO
        h = gcd(t, g)
        if h.degree > 0:
            t = t.exact_div(h)
            g = g.exact_div(h)
        return _raw(t, d1r * d2r * g)

    __radd__ = __add__

    def __sub__(self, other):
        other = RatFunc.coerce(other)
        return self + (-other)

    def __rsub__(self, other):
        return RatFunc.coerce(other) + (-self)

    def __mul__(self, other) -> "RatFunc":
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        n1, d2 = _cross_reduce(self.num, other.den)
        n2, d1 = _cross_reduce(other.num, self.den)
        return _raw(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        other = RatFunc.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(X)")
        lead = other.num.leading()
        inv_num = other.den if lead == 1 else Poly(c / lead for c in other.den.coeffs)
        inv_den = other.num if lead == 1 else other.num.monic()
        return self * _raw(inv_num, inv_den)

    def __rtruediv__(self, other) -> "RatFunc":
        return RatFunc.coerce(other) / self

    def __pow__(self, k: int) -> "RatFunc":
        if k == 0:
            return ONE
        if k < 0:
            return (ONE / self) ** (-k)
        out, base = None, self
        while k:
            if k & 1:
                out = base if out is None else out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def inverse(self) -> "RatFunc":
        return ONE / self

    # -- evaluation and size ---------------------------------------------

    def evaluate(self, t: Rationalish) -> Fraction:
        """Exact value at X = t; raises ZeroDivisionError at a pole."""
        t = Fraction(t)
        d = self.den.evaluate(t)
        if d == 0:
            raise ZeroDivisionError(f"pole at X = {t}")
        n = self.num.evaluate(t)
        return Fraction(n) / d

    @property
    def degree(self) -> int:
        """Max of numerator and denominator degree (0 for the zero element)."""
        return max(self.num.degree, self.den.degree, 0)

    # -- display ----------------------------------------------------------

    def __str__(self) -> str:
        return format_ratfunc(self)

    def __repr__(self) -> str:
        return f"RatFunc({format_ratfunc(self)!r})"


def _raw(num: Poly, den: Poly) -> "RatFunc":
    """Construct without normalizing; callers guarantee the canonical form."""
    f = object.__new__(RatFunc)
    object.__setattr__(f, "num", num)
    object.__setattr__(f, "den", den)
    return f


def _cross_reduce(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if num.degree == 0 or den.degree == 0:
        return num, den
    g = gcd(num, den)
    if g.degree == 0:
        return num, den
    return num.exact_div(g), den.exact_div(g)


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly((Fraction(value),))
    if isinstance(value, (list, tuple)):
        return Poly(Fraction(c) for c in value)
    raise TypeError(f"cannot build a polynomial from {type(value).__name__}")


X = RatFunc(Poly((Fraction(0), Fraction(1))))
ZERO = RatFunc(Poly())
ONE = RatFunc(Poly((Fraction(1),)))


# -- canonical display --------------------------------------------------


def format_poly(p: Poly) -> str:
    """Canonical form, highest degree first, e.g. "-256*X^4+320*X^2-16"."""
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coefficient(i)
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if i == 0:
            body = _format_coeff(mag)
        else:
            xpow = "X" if i == 1 else f"X^{i}"
            body = xpow if mag == 1 else f"{_format_coeff(mag)}*{xpow}"
        parts.append(sign + body)
    return "".join(parts)


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_ratfunc(f: RatFunc) -> str:
    """Canonical display "p(X)/q(X)" with explicit parentheses."""
    if f.den == _ONE:
        return format_poly(f.num)
    return f"({format_poly(f.num)})/({format_poly(f.den)})"


# -- orders ----------------------------------------------------------------


@dataclass(frozen=True)
class OrderSpec:
    """One of the four non-Archimedean orders on Q(X).

    kind is "a_plus" or "a_minus" (anchored just above/below the rational
    point `a`) or "plus_inf" / "minus_inf".  Anchors are restricted to
    rational points.
    """

    kind: str
    a: Fraction | None = None

    _KINDS = ("a_plus", "a_minus", "plus_inf", "minus_inf")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.kind in ("a_plus", "a_minus"):
            if self.a is None:
                raise ValueError(f"order {self.kind} needs a rational anchor")
            object.__setattr__(self, "a", Fraction(self.a))
        elif self.a is not None:
            raise ValueError(f"order {self.kind} takes no anchor")

    @classmethod
    def at_plus(cls, a) -> "OrderSpec":
        return cls("a_plus", Fraction(a))

    @classmethod
    def at_minus(cls, a) -> "OrderSpec":
        return cls("a_minus", Fraction(a))

    @classmethod
    def plus_infinity(cls) -> "OrderSpec":
        return cls("plus_inf")

    @classmethod
    def minus_infinity(cls) -> "OrderSpec":
        return cls("minus_inf")

    # -- sign determination ------------------------------------------------

    def sign(self, f) -> int:
        """Sign of f in (Q(X), self): -1, 0 or +1.

        At a_+ write f = (X-a)^k * g with g(a) != 0; the sign is the sign
        of g(a).  At a_- an extra (-1)^k enters.  At +inf only the leading
        coefficients matter; at -inf an extra parity factor (-1)^(deg num
        - deg den) enters.
        """
        f = RatFunc.coerce(f)
        if f.is_zero():
            return 0
        if self.kind in ("a_plus", "a_minus"):
            k_num, g_num = f.num.deflate_at(self.a)
            k_den, g_den = f.den.deflate_at(self.a)
            s = _sign_q(g_num.evaluate(self.a)) * _sign_q(g_den.evaluate(self.a))
            if self.kind == "a_minus" and (k_num - k_den) % 2:
                s = -s
            return s
        s = _sign_q(f.num.leading()) * _sign_q(f.den.leading())
        if self.kind == "minus_inf" and (f.num.degree - f.den.degree) % 2:
            s = -s
        return s

    def compare(self, f, g) -> int:
        """Total-order comparison: -1 if f < g, 0 if f = g, +1 if f > g."""
        return self.sign(RatFunc.coerce(f) - RatFunc.coerce(g))

    def lt(self, f, g) -> bool:
        return self.compare(f, g) < 0

    def le(self, f, g) -> bool:
        return self.compare(f, g) <= 0

    def is_positive(self, f) -> bool:
        return self.sign(f) > 0

    def abs(self, f) -> RatFunc:
        f = RatFunc.coerce(f)
        return -f if self.sign(f) < 0 else f

    def infinitely_large_element(self) -> RatFunc:
        """A canonical element exceeding every rational constant in this order."""
        if self.kind == "a_plus":
            return ONE / (X - self.a)
        if self.kind == "a_minus":
            return ONE / (RatFunc.coerce(self.a) - X)
        if self.kind == "plus_inf":
            return X
        return -X

    # -- identification ------------------------------------------------------

    def spec_string(self) -> str:
        if self.kind == "a_plus":
            return f"aplus:{self.a}"
        if self.kind == "a_minus":
            return f"aminus:{self.a}"
        return "plusinf" if self.kind == "plus_inf" else "minusinf"

    @classmethod
    def from_spec_string(cls, text: str) -> "OrderSpec":
        head, _, anchor = text.partition(":")
        if head == "aplus":
            return cls.at_plus(Fraction(anchor))
        if head == "aminus":
            return cls.at_minus(Fraction(anchor))
        if head == "plusinf" and not anchor:
            return cls.plus_infinity()
        if head == "minusinf" and not anchor:
            return cls.minus_infinity()
        raise ValueError(f"unknown order spec {text!r}")

    def __str__(self) -> str:
        return self.spec_string()


def _sign_q(c: Fraction) -> int:
    return (c > 0) - (c < 0)


def element_sign(x, order: OrderSpec | None = None) -> int:
    """Sign of a field element: Fractions compare to 0, RatFuncs need an order."""
    if isinstance(x, RatFunc):
        if x.is_zero():
            return 0
        if order is None:
            if x.is_constant():
                return _sign_q(x.as_fraction())
            raise ValueError("sign of a non-constant element of Q(X) needs an OrderSpec")
        return order.sign(x)
    return (x > 0) - (x < 0)
