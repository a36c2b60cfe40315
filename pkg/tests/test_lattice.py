from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lorkit.errors import BudgetExceeded, CapabilityError, InputError
from lorkit.groups import NumericalSemigroup, RationalGroup, SemigroupGroup
from lorkit.ideals import make_ideal
from lorkit.lattice import (
    IdealFraction,
    LatticeTerm,
    PIDEntailment,
    SemigroupEntailment,
    embed,
    embedding_faithful,
    entailment_laws,
    entails_pid,
    entails_pid_shortcut,
    fraction_equiv,
    fraction_leq,
    lattice_laws,
    oracle_for,
    parse_term,
    regularity_holds,
    term_equiv,
    term_inv,
    term_join,
    term_leq,
    term_meet,
    term_mul,
    term_normalize,
    term_valuation,
)
from lorkit.valuations import entails_by_valuations

Q = RationalGroup()
S23 = SemigroupGroup(NumericalSemigroup((2, 3)))
PID = PIDEntailment()

small = st.builds(
    lambda e2, e3, e5: Fraction(2) ** e2 * Fraction(3) ** e3 * Fraction(5) ** e5,
    st.integers(-2, 3),
    st.integers(-2, 2),
    st.integers(-1, 1),
)
sides = st.lists(small, min_size=1, max_size=3)
terms = st.lists(st.lists(small, min_size=1, max_size=2), min_size=1, max_size=2).map(lambda ms: LatticeTerm.of(*ms))


def test_entailment_examples():
    assert entails_pid([2, 3], [5])
    assert entails_pid([4, 6], [2])
    assert not entails_pid([4], [2])
    assert entails_pid([Fraction(1, 2)], [3])
    assert not entails_pid([6], [Fraction(3, 2)])


def test_entailment_frozen_triple_agreement(frozen):
    for case in frozen["entailment"]:
        A = [Fraction(x) for x in case["A"]]
        B = [Fraction(x) for x in case["B"]]
        assert entails_pid(A, B) == case["entails"], case
        assert entails_pid_shortcut(A, B) == case["entails"], case
        assert entails_by_valuations(A, B) == case["entails"], case


def test_entailment_rejects_empty_sides():
    with pytest.raises(InputError):
        entails_pid([], [1])


def test_entailment_laws_hold():
    assert entailment_laws(PID, samples=200).passed
    assert entailment_laws(SemigroupEntailment(S23), samples=200).passed


def test_oracle_for():
    assert isinstance(oracle_for(Q), PIDEntailment)
    assert isinstance(oracle_for(S23), SemigroupEntailment)
    with pytest.raises(CapabilityError):
        oracle_for(SemigroupGroup(NumericalSemigroup((4, 6))))


def test_term_examples():
    t = parse_term("(4 ^ 6) v 9 v 2", Q)
    assert term_normalize(t, PID).render(Q) == "2 v 9"
    assert term_leq(embed(2), parse_term("2 v 3", Q), PID)
    assert not term_leq(embed(4), parse_term("2 v 3", Q), PID)
    assert term_leq(embed(2), embed(4), PID)
    assert not term_leq(embed(4), embed(2), PID)
    assert term_leq(parse_term("4 ^ 6", Q), embed(2), PID)
    # (2 ^ 3) is the unit over Q/Z, so 1 lies below it
    assert term_leq(embed(1), parse_term("2 ^ 3", Q), PID)
    assert term_equiv(parse_term("2 * (3 v 5)", Q), parse_term("6 v 10", Q), PID)


def test_parse_errors():
    with pytest.raises(InputError):
        parse_term("", Q)
    with pytest.raises(InputError):
        parse_term("2 ^ ^ 3", Q)
    with pytest.raises(InputError):
        parse_term("(2 v 3", Q)


def test_term_inverse():
    t = parse_term("2 v 3", Q)
    assert term_equiv(term_inv(t, Q), parse_term("1/2 ^ 1/3", Q), PID)
    assert term_equiv(term_mul(t, term_inv(t, Q), Q), embed(1), PID)
    assert dict(term_valuation(term_inv(t, Q))) == {2: -1, 3: -1}


@settings(max_examples=60, deadline=None)
@given(terms, terms)
def test_pruned_leq_matches_exhaustive(t, u):
    assert term_leq(t, u, PID) == term_leq(t, u, PID, exhaustive=True)


@settings(max_examples=60, deadline=None)
@given(terms, terms)
def test_leq_matches_valuation_vectors(t, u):
    tv, uv = term_valuation(t), term_valuation(u)
    assert term_leq(t, u, PID) == tv.leq(uv)


@settings(max_examples=60, deadline=None)
@given(terms)
def test_normalize_idempotent_and_equivalent(t):
    n = term_normalize(t, PID)
    assert term_equiv(n, t, PID)
    assert term_normalize(n, PID) == n
    assert len(n.conjuncts) <= len(t.conjuncts)


def test_normalize_budget():
    t = LatticeTerm.of(*[[Fraction(2) ** i] for i in range(8)])
    with pytest.raises(BudgetExceeded):
        term_normalize(t, PID, budget=3)


def test_meet_join_shapes():
    a, b = embed(2), embed(3)
    assert term_meet(a, b) == LatticeTerm.of([2, 3])
    assert term_join(a, b) == LatticeTerm.of([2], [3])
    with pytest.raises(InputError):
        LatticeTerm.of([])


def test_term_valuation():
    t = parse_term("(4 ^ 6) v 9", Q)
    # max(min(2, 1), 0) at 2, max(min(0, 1), 2) at 3
    assert dict(term_valuation(t)) == {2: 1, 3: 2}


def test_regularity_and_laws_over_q():
    assert regularity_holds(PID, samples=200).passed
    assert lattice_laws(PID, samples=60).passed


def test_lattice_laws_over_semigroup():
    assert lattice_laws(SemigroupEntailment(S23), samples=60).passed


def test_embedding_faithful_over_q():
    assert embedding_faithful(Q, PID, samples=300).passed


def test_embedding_unfaithful_over_semigroup():
    ent = SemigroupEntailment(S23)
    assert not S23.divides(0, 1)
    assert term_leq(embed(0), embed(1), ent)
    report = embedding_faithful(S23, ent, samples=300)
    assert not report.passed


@given(sides, sides)
def test_shortcut_agrees(A, B):
    assert entails_pid(A, B) == entails_pid_shortcut(A, B) == entails_by_valuations(A, B)


def test_fraction_order():
    a = make_ideal("t", [2], Q)
    b = make_ideal("t", [4, 6], Q)
    one = make_ideal("t", [1], Q)
    F = IdealFraction(a, one)
    H = IdealFraction(b, one)
    assert fraction_leq(F, H) and fraction_leq(H, F)
    assert fraction_equiv(IdealFraction(make_ideal("t", [6], Q), make_ideal("t", [3], Q)), F)
    assert not fraction_leq(IdealFraction(make_ideal("t", [3], Q), one), F)


def test_fraction_capability():
    s = make_ideal("s", [0], S23)
    with pytest.raises(CapabilityError):
        fraction_leq(IdealFraction(s, s), IdealFraction(s, s))
    with pytest.raises(InputError):
        IdealFraction(make_ideal("t", [1], Q), make_ideal("v", [1], Q))


def test_random_triple_agreement():
    rng = random.Random(11)
    for _ in range(300):
        A = [Fraction(rng.randint(1, 10**4), rng.randint(1, 10**4)) for _ in range(rng.randint(1, 4))]
        B = [Fraction(rng.randint(1, 10**4), rng.randint(1, 10**4)) for _ in range(rng.randint(1, 4))]
        assert entails_pid(A, B) == entails_pid_shortcut(A, B) == entails_by_valuations(A, B)
