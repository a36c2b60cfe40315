from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lorkit.errors import CapabilityError, InputError
from lorkit.groups import (
    FACTOR_BOUND,
    NumericalSemigroup,
    PrimeValuationVector,
    RationalGroup,
    SemigroupGroup,
    divides,
    ext_gcd,
    factor_int,
    factorize,
    parse_instance,
    parse_rational,
    rational_gcd,
    rational_lcm,
)

positive = st.builds(Fraction, st.integers(1, 10**4), st.integers(1, 10**4))


def test_factorizations_match_frozen(frozen):
    for text, vec in frozen["factorizations"].items():
        assert dict(factorize(text)) == {int(p): e for p, e in vec.items()}


def test_factorize_examples():
    assert dict(factorize("18/5")) == {2: 1, 3: 2, 5: -1}
    assert dict(factorize("8/27")) == {2: 3, 3: -3}
    assert dict(factorize(1)) == {}


def test_large_factorization_uses_fallback():
    p, q = 1_000_003, 1_000_033
    assert factor_int(p * q) == {p: 1, q: 1}
    assert factor_int(2**61 - 1) == {2**61 - 1: 1}


def test_factor_bound():
    with pytest.raises(CapabilityError):
        factorize(FACTOR_BOUND + 1)


@pytest.mark.parametrize("bad", ["-3", "0", "4/6", "1/0", "x", "2/-3", ""])
def test_parse_rational_rejects(bad):
    with pytest.raises(InputError):
        parse_rational(bad)


def test_parse_rational_accepts():
    assert parse_rational("18/5") == Fraction(18, 5)
    assert parse_rational(" 7 ") == 7


@given(positive, positive)
def test_valuation_vectors_are_additive(a, b):
    assert factorize(a * b) == factorize(a) + factorize(b)
    assert (factorize(a) - factorize(b)).rational() == a / b


@given(st.lists(positive, min_size=1, max_size=4))
def test_gcd_divides_everything_and_lcm_is_divisible(xs):
    g, l = rational_gcd(xs), rational_lcm(xs)
    G = RationalGroup()
    assert all(G.divides(g, x) and G.divides(x, l) for x in xs)


@given(st.lists(st.integers(-500, 500), min_size=1, max_size=5))
def test_ext_gcd_combination(values):
    g, xs = ext_gcd(values)
    assert sum(x * v for x, v in zip(xs, values)) == g
    assert g >= 0


def test_frobenius_and_gaps_match_frozen(frozen):
    for key, F in frozen["frobenius"].items():
        S = NumericalSemigroup(tuple(int(x) for x in key.split(",")))
        assert S.frobenius == F
        assert sorted(S.gaps) == frozen["gaps"][key]
        assert S.conductor == F + 1


def test_semigroup_with_common_divisor():
    S = NumericalSemigroup((4, 6))
    assert S.gcd == 2
    assert S.conductor == 4
    assert 2 not in S and 4 in S and 3 not in S
    with pytest.raises(InputError):
        S.frobenius


def test_semigroup_parse_and_divides():
    G = parse_instance("<2,3>")
    assert isinstance(G, SemigroupGroup)
    assert divides(G, 2, 5)
    assert not divides(G, 3, 4)
    assert str(NumericalSemigroup.parse("<3, 5>")) == "<3,5>"


def test_rational_instance_divides():
    Q = parse_instance("Q")
    assert divides(Q, 2, 6)
    assert not divides(Q, 4, 6)
    assert divides(Q, Fraction(1, 2), 3)


def test_prime_valuation_vector_order():
    a, b = PrimeValuationVector({2: 1}), PrimeValuationVector({2: 2, 3: 1})
    assert a.leq(b) and not b.leq(a)
