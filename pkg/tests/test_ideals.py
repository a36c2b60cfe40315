from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lorkit.errors import CapabilityError, InputError
from lorkit.groups import NumericalSemigroup, RationalGroup, SemigroupGroup
from lorkit.ideals import (
    check_axioms,
    ideal_meet,
    ideal_member,
    ideal_mul,
    ideal_subset,
    make_ideal,
    mutant_t_member,
    parse_ideal,
    residual_trivial,
    residual_witness,
)

Q = RationalGroup()
S23 = SemigroupGroup(NumericalSemigroup((2, 3)))
S35 = SemigroupGroup(NumericalSemigroup((3, 5)))

small = st.builds(
    lambda e2, e3, e5: Fraction(2) ** e2 * Fraction(3) ** e3 * Fraction(5) ** e5,
    st.integers(-2, 3),
    st.integers(-2, 2),
    st.integers(-1, 1),
)
gensets = st.lists(small, min_size=1, max_size=3)


def test_membership_examples():
    assert ideal_member("t", [4, 6], 10, Q)
    assert not ideal_member("t", [4, 6], 3, Q)
    assert ideal_member("s", [7], 7, Q)
    assert not ideal_member("s", [3], 4, S23)


def test_semigroup_membership_matches_frozen(frozen):
    for case in frozen["semigroup_membership"]:
        G = SemigroupGroup(NumericalSemigroup(tuple(case["S"])))
        assert ideal_member("s", case["A"], case["b"], G) == case["s"], case
        assert ideal_member("v", case["A"], case["b"], G) == case["v"], case
        assert ideal_member("t", case["A"], case["b"], G) == case["v"], case


def test_d_needs_a_ring():
    with pytest.raises(CapabilityError):
        ideal_member("d", [2], 4, S23)


def test_mul_examples():
    assert ideal_mul(make_ideal("t", [4, 6], Q), make_ideal("t", [9, 15], Q)) == make_ideal("t", [6], Q)
    assert ideal_mul(make_ideal("s", [2], S23), make_ideal("s", [3], S23)) == make_ideal("s", [5], S23)
    A = make_ideal("t", [4, 6], Q)
    assert ideal_mul(A, make_ideal("t", [1], Q)) == A


def test_meet_examples():
    assert ideal_meet(make_ideal("t", [4], Q), make_ideal("t", [6], Q)) == make_ideal("t", [2], Q)
    A = make_ideal("t", [Fraction(4, 9), 6], Q)
    assert ideal_meet(A, A) == A
    assert ideal_meet(make_ideal("t", [1], Q), make_ideal("t", [4, 6], Q)) == make_ideal("t", [1], Q)


def test_mixed_systems_rejected():
    with pytest.raises(InputError):
        ideal_mul(make_ideal("t", [2], Q), make_ideal("s", [2], Q))


def test_s_canonical_form_drops_dominated():
    assert make_ideal("s", [2, 6, 3], Q).generators == (2, 3)
    assert make_ideal("s", [2, 5, 3], S23).generators == (2, 3)


@given(gensets, small)
def test_t_equals_v_and_d_on_q(A, b):
    t = ideal_member("t", A, b, Q)
    assert ideal_member("v", A, b, Q) == t
    assert ideal_member("d", A, b, Q) == t


@settings(max_examples=60)
@given(st.sampled_from("svt"), gensets, gensets, gensets)
def test_arithmetic_laws(tag, A, B, C):
    I, J, K = (make_ideal(tag, X, Q) for X in (A, B, C))
    assert ideal_mul(I, J) == ideal_mul(J, I)
    assert ideal_meet(I, J) == ideal_meet(J, I)
    assert ideal_mul(ideal_mul(I, J), K) == ideal_mul(I, ideal_mul(J, K))
    assert ideal_meet(ideal_meet(I, J), K) == ideal_meet(I, ideal_meet(J, K))
    assert make_ideal(tag, I.generators, Q) == I
    assert ideal_subset(I, ideal_meet(I, J))


@settings(max_examples=40)
@given(st.sampled_from("sv"), st.lists(st.integers(-5, 10), min_size=1, max_size=3), st.lists(st.integers(-5, 10), min_size=1, max_size=3))
def test_semigroup_arithmetic_is_normalized(tag, A, B):
    I, J = make_ideal(tag, A, S23), make_ideal(tag, B, S23)
    M = ideal_mul(I, J)
    assert make_ideal(tag, M.generators, S23) == M
    assert all(ideal_member(tag, [a + b for a in A for b in B], x, S23) == (x in M) for x in range(-10, 25))


@pytest.mark.parametrize(
    "tag,G",
    [("s", Q), ("v", Q), ("t", Q), ("d", Q), ("s", S23), ("v", S23), ("s", S35), ("v", S35)],
)
def test_axioms_hold(tag, G):
    report = check_axioms(tag, G, samples=120, seed=7)
    assert report.passed, report.render()
    assert all(report.cases[law] > 0 for law in ("axiom1", "axiom2", "axiom3", "axiom4", "distributive"))


def test_mutant_breaks_only_axiom4():
    report = check_axioms(mutant_t_member, Q, samples=300, seed=0)
    assert report.failed_laws() == ["axiom4"]
    assert report.counterexamples["axiom4"]


def test_residuals():
    assert residual_trivial("t", [4, 6], Q)
    assert residual_trivial("s", [Fraction(1, 2), 3], Q)
    assert residual_witness("s", [2, 3], S23) == 1
    assert not residual_trivial("s", [2, 3], S23)
    assert residual_trivial("s", [0], S23)


def test_parse_ideal():
    assert parse_ideal("t{4,6}") == make_ideal("t", [2], Q)
    I = parse_ideal("s{2,3}@<2,3>")
    assert I.group == S23 and I.generators == (2, 3)
    assert str(I) == "s{2,3}@<2,3>"
    with pytest.raises(InputError):
        parse_ideal("x{1}")
