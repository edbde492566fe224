"""Shared random generators for the test suite (seeded, deterministic)."""

from fractions import Fraction

from valrep.fields import RatFunc
from valrep.poly import Poly


def random_ratfunc(rng, max_deg=3, coeff_bound=6):
    def poly():
        return Poly(
            Fraction(rng.randint(-coeff_bound, coeff_bound))
            for _ in range(rng.randint(1, max_deg + 1))
        )

    num = poly()
    den = poly()
    while den.is_zero():
        den = poly()
    return RatFunc(num, den)
