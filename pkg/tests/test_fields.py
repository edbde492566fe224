"""Field arithmetic, canonical forms and order axioms for Q(X)."""

import random
from fractions import Fraction

import pytest

from valrep.fields import ONE, OrderSpec, RatFunc, X, format_ratfunc
from valrep.poly import Poly

from helpers import random_ratfunc

ALL_ORDERS = [
    OrderSpec.at_plus(0),
    OrderSpec.at_minus(0),
    OrderSpec.at_plus(Fraction(3, 2)),
    OrderSpec.at_minus(-2),
    OrderSpec.plus_infinity(),
    OrderSpec.minus_infinity(),
]


def test_canonical_form_reduces_and_is_monic():
    f = RatFunc(Poly([Fraction(-2), Fraction(0), Fraction(2)]), Poly([Fraction(-2), Fraction(2)]))
    # (2X^2 - 2)/(2X - 2) = X + 1
    assert f == X + 1
    assert f.den == Poly([Fraction(1)])


def test_zero_normalizes_den_to_one():
    f = RatFunc(Poly(), Poly([Fraction(3), Fraction(5)]))
    assert f.is_zero()
    assert f.den.degree == 0 and f.den.leading() == 1


def test_equality_and_hash_are_structural():
    f = (X + 1) * (X - 1) / (X - 1)
    g = X + 1
    assert f == g
    assert hash(f) == hash(g)


def test_field_axioms_on_random_samples():
    rng = random.Random(7)
    for _ in range(200):
        f, g, h = (random_ratfunc(rng) for _ in range(3))
        assert (f + g) + h == f + (g + h)
        assert f * (g + h) == f * g + f * h
        assert (f * g) * h == f * (g * h)
        assert f + (-f) == 0
        if not f.is_zero():
            assert f * (ONE / f) == 1


def test_pow_and_inverse():
    f = (X + 2) / (X - 1)
    assert f ** 3 == f * f * f
    assert f ** -2 == ONE / (f * f)
    assert f ** 0 == 1


@pytest.mark.parametrize("order", ALL_ORDERS)
def test_order_is_total_and_compatible(order):
    rng = random.Random(hash(order.spec_string()) & 0xFFFF)
    for _ in range(150):
        f, g = random_ratfunc(rng), random_ratfunc(rng)
        sf, sg = order.sign(f), order.sign(g)
        assert sf in (-1, 0, 1)
        assert (sf == 0) == f.is_zero()
        if sf > 0 and sg > 0:
            assert order.sign(f + g) > 0
            assert order.sign(f * g) > 0
        # squares are nonnegative
        assert order.sign(f * f) in (0, 1)
        # trichotomy for the comparison
        assert order.compare(f, g) == -order.compare(g, f)


@pytest.mark.parametrize("order", ALL_ORDERS)
def test_infinitely_large_witness(order):
    w = order.infinitely_large_element()
    for r in (0, 1, 10**6, 2**64, 2**64 + 12345):
        assert order.compare(w, RatFunc.coerce(r)) > 0


def test_one_over_x_minus_a_dominates_rationals():
    # 1/(X - a) at the order a_+ exceeds every rational constant
    order = OrderSpec.at_plus(Fraction(5, 3))
    f = ONE / (X - Fraction(5, 3))
    assert order.sign(f) == 1
    for r in (Fraction(10**30), Fraction(2**64), Fraction(-7, 3)):
        assert order.compare(f, RatFunc.coerce(r)) > 0


def test_sign_examples():
    assert OrderSpec.plus_infinity().sign(-X * X + 3) == -1
    assert OrderSpec.at_plus(0).sign(RatFunc.coerce(0)) == 0
    # X - X^2 = X(1 - X) is positive just right of 0
    assert OrderSpec.at_plus(0).compare(X, X * X) > 0
    assert OrderSpec.at_plus(0).compare(X, X) == 0
    # 1/X beats any constant just right of 0
    assert OrderSpec.at_plus(0).compare(ONE / X, RatFunc.coerce(10**100)) > 0


def test_sign_at_minus_flips_odd_multiplicities():
    order_p = OrderSpec.at_plus(2)
    order_m = OrderSpec.at_minus(2)
    f = X - 2
    assert order_p.sign(f) == 1
    assert order_m.sign(f) == -1
    assert order_m.sign(f * f) == 1


def test_minus_infinity_parity():
    order = OrderSpec.minus_infinity()
    assert order.sign(X) == -1
    assert order.sign(X * X) == 1
    assert order.sign(ONE / X) == -1


def test_format_canonical():
    f = -256 * X ** 2 + 320 - 16 / (X * X)
    assert format_ratfunc(f) == "(-256*X^4+320*X^2-16)/(X^2)"
    assert format_ratfunc(X) == "X"
    assert format_ratfunc(RatFunc.coerce(Fraction(-3, 2))) == "-3/2"
    assert str(ONE / (X + 1)) == "(1)/(X+1)"


def test_evaluate_exact():
    f = (X ** 2 - 1) / (X + 2)
    assert f.evaluate(Fraction(1, 2)) == Fraction(-3, 10)
    with pytest.raises(ZeroDivisionError):
        f.evaluate(-2)
