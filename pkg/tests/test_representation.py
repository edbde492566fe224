"""RepTable validation, traces, sweeps and closed-point verdicts."""

import random
from fractions import Fraction

import pytest

from valrep.exprparse import parse_ratfunc
from valrep.fields import OrderSpec, RatFunc, X, format_ratfunc
from valrep.linalg import Matrix
from valrep.pants import boundary_words, pants_presentation, pants_rep
from valrep.representation import (
    ClosedPoint,
    DegreeGuardExceeded,
    GroupPresentation,
    NotClosedIntegral,
    RepresentationError,
    RepTable,
    UnknownVerdict,
    closed_point_verdict,
    integrality_certificate,
    sweep_translation_lengths,
)
from valrep.valuation import INFINITY, Valuation
from valrep.words import Word, parse_word

ORDER0 = OrderSpec.at_plus(0)
ADIC0 = Valuation.adic(0)


def diag_rep(entries):
    z = RatFunc.coerce(0)
    entries = [RatFunc.coerce(e) if not isinstance(e, RatFunc) else e for e in entries]
    mat = Matrix(
        [[entries[i] if i == j else z for j in range(len(entries))] for i in range(len(entries))]
    )
    pres = GroupPresentation(("a",), ())
    return RepTable(pres, {"a": mat}, ORDER0, ADIC0)


def test_pants_rep_validates():
    rep = pants_rep(ORDER0)
    assert rep.n == 2
    assert rep.evaluate(parse_word("c3 c2 c1")) == rep.identity_matrix()
    assert rep.evaluate(Word()) == rep.identity_matrix()


def test_trivial_rep_is_integral():
    pres = GroupPresentation(("a",), ())
    rep = RepTable(pres, {"a": Matrix.identity(4, RatFunc.coerce(1))}, ORDER0, ADIC0)
    verdict = closed_point_verdict(rep, radius=2)
    assert isinstance(verdict, NotClosedIntegral)
    assert all(v >= 0 for v in verdict.generator_valuations.values())


def test_reptable_rejects_non_symplectic():
    pres = GroupPresentation(("a",), ())
    bad = Matrix.identity(4, RatFunc.coerce(1)).scale(RatFunc.coerce(2))
    with pytest.raises(RepresentationError):
        RepTable(pres, {"a": bad}, ORDER0, ADIC0)


def test_reptable_rejects_bad_relator():
    pres = GroupPresentation(("a",), (parse_word("a a"),))
    g = diag_rep([X, RatFunc.coerce(1), 1 / X, RatFunc.coerce(1)]).images["a"]
    with pytest.raises(RepresentationError):
        RepTable(pres, {"a": g}, ORDER0, ADIC0)


def test_trace_is_class_function():
    rep = pants_rep(ORDER0)
    rng = random.Random(3)
    from valrep.words import words_of_length

    pool = list(words_of_length(("c1", "c2"), 2)) + list(words_of_length(("c1", "c2"), 3))
    conjugators = list(words_of_length(("c1", "c2"), 1)) + list(words_of_length(("c1", "c2"), 2))
    trace_cache = {}
    for _ in range(1000):
        w = rng.choice(pool)
        h = rng.choice(conjugators)
        if w not in trace_cache:
            trace_cache[w] = rep.trace(w)
        assert rep.trace(w.conjugate_by(h)) == trace_cache[w]


def test_trace_valuation_sample():
    rep = pants_rep(ORDER0)
    sample = dict(rep.trace_valuation_sample(2))
    assert sample[Word()] == 0  # trace 4, valuation 0
    assert sample[parse_word("c1")] == 0  # unipotent, trace 4
    assert sample[parse_word("c1 c2^-1")] == 0  # hyperbolic, but trace is constant 20
    # the square of c1^-2 c2^-1 has trace with a genuine pole at 0
    w = parse_word("c1^-2 c2^-1") ** 2
    assert rep.valuation.of(rep.trace(w)) == -2
    at_inf = pants_rep(OrderSpec.plus_infinity())
    assert at_inf.valuation.of(at_inf.trace(parse_word("c1^-2 c2^-1"))) == -2


def test_closed_point_verdicts_match_order_families():
    # just right of 0 and at infinity: closed, with an explicit witness;
    # at a = 1 (both sides): the representation is integral, not closed
    for spec in ("aplus:0", "plusinf"):
        order = OrderSpec.from_spec_string(spec)
        verdict = closed_point_verdict(pants_rep(order), radius=4)
        assert isinstance(verdict, ClosedPoint)
        assert verdict.length > 0
        assert verdict.witness == parse_word("c1 c2^-1")
    for spec in ("aplus:1", "aminus:1"):
        order = OrderSpec.from_spec_string(spec)
        verdict = closed_point_verdict(pants_rep(order), radius=2)
        assert isinstance(verdict, NotClosedIntegral)


def test_closed_verdict_monotone_in_radius():
    rep = pants_rep(ORDER0)
    v2 = closed_point_verdict(rep, radius=2)
    v5 = closed_point_verdict(rep, radius=5)
    assert isinstance(v2, ClosedPoint) and isinstance(v5, ClosedPoint)
    assert v2.witness == v5.witness and v2.length == v5.length


def test_unknown_verdict_when_radius_too_small():
    # make a rep with no short hyperbolic word by using a single unipotent
    pres = GroupPresentation(("a",), ())
    one, z = RatFunc.coerce(1), RatFunc.coerce(0)
    g = Matrix([[one, 1 / X], [z, one]])
    rep = RepTable(pres, {"a": g}, ORDER0, ADIC0)
    verdict = closed_point_verdict(rep, radius=3)
    # unipotent with a pole: not integral, but every word has length 0
    assert isinstance(verdict, UnknownVerdict)
    assert verdict.radius_searched == 3


def test_integrality_soundness_sweep():
    # NotClosedIntegral implies no positive-length word in a wide sweep
    rep = pants_rep(OrderSpec.at_plus(1))
    assert integrality_certificate(rep) is not None
    lengths = sweep_translation_lengths(rep, radius=6)
    assert lengths and all(value == 0 for _, value in lengths)


def test_degree_guard_fires():
    rep = pants_rep(ORDER0)
    with pytest.raises(DegreeGuardExceeded):
        list(rep.iter_ball(4, degree_bound=2))


def test_threaded_sweep_matches_sequential():
    rep = pants_rep(ORDER0)
    seq = sweep_translation_lengths(rep, radius=3, threads=1)
    par = sweep_translation_lengths(rep, radius=3, threads=4)
    assert seq == par
