"""p-adic valuations on Q, their valuation rings, and intersection checks.

Every valuation here has value group Z.  That is all Q/Z needs, since its
valuations are exactly the p-adic ones; valuations of higher rank are not
covered.

"Relevant primes" for a comparison are the primes dividing some numerator or
denominator in sight.  Every other prime gives value 0 to all the elements
involved, so it cannot separate them.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .errors import InputError
from .groups import RationalGroup, as_rational, is_prime, primes_of
from .ideals import SystemTag, ideal_member
from .reports import LawReport

DEFAULT_PRIMES = (2, 3, 5, 7)


def _vp(p: int, n: int) -> int:
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def value(p: int, a: Any) -> int:
    """Exponent of p in the nonzero rational a (sign ignored)."""
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    q = Fraction(a) if not isinstance(a, str) else as_rational(a)
    if q == 0:
        raise InputError("0 has no value")
    return _vp(p, abs(q.numerator)) - _vp(p, q.denominator)


@dataclass(frozen=True)
class PAdicValuation:
    p: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise InputError(f"{self.p} is not prime")

    def __call__(self, a: Any) -> int:
        return value(self.p, a)


@dataclass(frozen=True)
class Localization:
    """Z localized at the prime ideal (p): fractions with denominator prime to p."""

    p: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise InputError(f"{self.p} is not prime")

    def __contains__(self, a: Any) -> bool:
        return value(self.p, a) >= 0

    def is_unit(self, a: Any) -> bool:
        return value(self.p, a) == 0

    def meet(self, a: Any, b: Any) -> Fraction:
        """gcd in the valuation ring: the power of p with the smaller value."""
        return Fraction(self.p) ** min(value(self.p, a), value(self.p, b))


def localization_member(p: int, a: Any) -> bool:
    return a in Localization(p)


def _signed_sample(rng: random.Random, G: RationalGroup) -> Fraction:
    return G.sample(rng) * rng.choice((1, -1))


def valuation_additivity_check(p: int, samples: int = 500, seed: int = 0) -> LawReport:
    rng, G = random.Random(seed), RationalGroup()
    report = LawReport(f"additivity at {p}")
    for _ in range(samples):
        a, b = G.sample(rng), G.sample(rng)
        report.record("w(ab) = w(a) + w(b)", value(p, a * b) == value(p, a) + value(p, b), a=a, b=b)
    return report


def valuation_ultrametric_check(p: int, samples: int = 500, seed: int = 0) -> LawReport:
    """w(a+b) >= min(w(a), w(b)) for signed a, b; pairs with a+b = 0 are skipped."""
    rng, G = random.Random(seed), RationalGroup()
    report = LawReport(f"ultrametric at {p}")
    for i in range(samples):
        a = _signed_sample(rng, G)
        # every fifth pair is a + (-a) so the skip path is exercised
        b = -a if i % 5 == 0 else _signed_sample(rng, G)
        if a + b == 0:
            continue
        ok = value(p, a + b) >= min(value(p, a), value(p, b))
        report.record("w(a+b) >= min(w(a), w(b))", ok, a=a, b=b)
    return report


def divides_by_valuations(a: Any, b: Any, P: Iterable[int]) -> bool:
    """a divides b iff value(p, a) <= value(p, b) for every p in P."""
    a, b = as_rational(a), as_rational(b)
    P = set(P)
    missing = sorted(primes_of(a, b) - P)
    if missing:
        raise InputError(f"prime set is missing {missing}")
    return all(value(p, a) <= value(p, b) for p in P)


def nonintegral_witness(a: Any) -> int | None:
    """Smallest prime with negative value at a, or None when a is an integer."""
    a = as_rational(a)
    if a.denominator == 1:
        return None
    return min(primes_of(a.denominator))


def localization_linear_check(p: int, samples: int = 500, seed: int = 0) -> LawReport:
    rng, G = random.Random(seed), RationalGroup()
    report = LawReport(f"linearity at {p}")
    for _ in range(samples):
        a = G.sample(rng)
        report.record("a or 1/a in Z_(p)", localization_member(p, a) or localization_member(p, 1 / a), a=a)
    return report


def nonunit_meet_check(p: int, samples: int = 500, seed: int = 0) -> LawReport:
    """The nonunits of Z_(p) are closed under the meet of Z_(p)."""
    rng, L = random.Random(seed), Localization(p)
    G = RationalGroup(sample_primes=tuple(sorted({p, *DEFAULT_PRIMES})))
    report = LawReport(f"nonunit meets at {p}")
    for _ in range(samples):
        a, b = G.sample(rng), G.sample(rng)
        if a in L and b in L and not L.is_unit(a) and not L.is_unit(b):
            m = L.meet(a, b)
            report.record("meet of nonunits is a nonunit", m in L and not L.is_unit(m), a=a, b=b)
    return report


def entails_by_valuations(A: Sequence[Any], B: Sequence[Any]) -> bool:
    """min over A of v_p <= max over B of v_p at every relevant prime."""
    A = [as_rational(a) for a in A]
    B = [as_rational(b) for b in B]
    if not A or not B:
        raise InputError("entailment needs nonempty sides")
    return all(
        min(value(p, a) for a in A) <= max(value(p, b) for b in B)
        for p in sorted(primes_of(*A, *B))
    )


@dataclass(frozen=True)
class IntersectionCase:
    in_ideal: bool
    in_localizations: bool
    failing_prime: int | None

    @property
    def agrees(self) -> bool:
        return self.in_ideal == self.in_localizations


def intersection_case(A: Sequence[Any], b: Any) -> IntersectionCase:
    """Compare b in A_t with b in A*Z_(p) for every relevant p."""
    A = [as_rational(a) for a in A]
    b = as_rational(b)
    if not A:
        raise InputError("ideal needs generators")
    lhs = ideal_member(SystemTag.T, A, b, RationalGroup())
    failing = None
    for p in sorted(primes_of(*A, b)):
        if value(p, b) < min(value(p, a) for a in A):
            failing = p
            break
    return IntersectionCase(lhs, failing is None, failing)


def ideal_intersection_repr(A: Sequence[Any], samples: int = 200, seed: int = 0) -> LawReport:
    rng, G = random.Random(seed), RationalGroup()
    A = [as_rational(a) for a in A]
    report = LawReport(f"intersection representation of {{{', '.join(map(str, A))}}}")
    for _ in range(samples):
        # half the probes are multiples of a generator, so both verdicts occur
        b = G.sample(rng)
        if rng.random() < 0.5:
            b = rng.choice(A) * Fraction(rng.randint(1, 30))
        case = intersection_case(A, b)
        report.record("A_t = meet of localizations", case.agrees, b=b, failing_prime=case.failing_prime)
    return report

