"""Preordered commutative groups: the divisibility group of Q over Z and the
divisibility groups (Z, S) of numerical semigroups.

Order convention used throughout lorkit: ``a <= b`` ("a divides b") iff
``b * a^-1`` lies in the positive cone, i.e. is integral.  Meets are gcds and
joins are lcms.  The classical notation writes the cone the other way round
and calls the gcd a "sum"; the table below fixes the translation once.

    =====================  ===============================
    classical              lorkit
    =====================  ===============================
    a_r + b_r  (Summe)     ideal_meet(a, b)  (gcd side)
    a_r b_r                ideal_mul(a, b)
    b_r contains a_r       ideal_subset(a, b)
    g contains b a^-1      divides(a, b)
    =====================  ===============================
"""

from __future__ import annotations

import math
import random
import re
from abc import ABC, abstractmethod
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache, reduce
from typing import Any

from .errors import CapabilityError, InputError

FACTOR_BOUND = 2**63
TRIAL_LIMIT = 10**6


# ---------------------------------------------------------------------------
# exact rationals


def parse_rational(text: str) -> Fraction:
    """Parse ``num/den`` or ``num`` into a reduced positive Fraction.

    Non-reduced literals such as ``4/6`` are rejected rather than silently
    reduced, because the caller almost certainly meant something else.
    """
    m = re.fullmatch(r"\s*(\d+)\s*(?:/\s*(\d+))?\s*", text)
    if not m:
        raise InputError(f"not a positive rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise InputError(f"zero denominator in {text!r}")
    if num == 0:
        raise InputError(f"zero is not an element of the divisibility group: {text!r}")
    if math.gcd(num, den) != 1:
        raise InputError(f"rational literal not in lowest terms: {text!r}")
    return Fraction(num, den)


def as_rational(x: Any) -> Fraction:
    """Coerce ints, Fractions and literals to a validated positive Fraction."""
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise InputError(f"not an exact rational: {x!r}")
    q = Fraction(x)
    if q <= 0:
        raise InputError(f"only positive rationals are supported, got {q}")
    return q


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def rational_height(q: Fraction) -> int:
    return max(abs(q.numerator), q.denominator)


# ---------------------------------------------------------------------------
# factorization


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    sieve = bytearray([1]) * (TRIAL_LIMIT + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(TRIAL_LIMIT) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, TRIAL_LIMIT + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _check_bound(n: int) -> None:
    if n >= FACTOR_BOUND:
        raise CapabilityError(
            f"{n} exceeds the factorization bound 2^63 (FACTOR_BOUND={FACTOR_BOUND})"
        )


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    _check_bound(n)
    if n <= TRIAL_LIMIT:
        return n in _prime_set()
    return set(factor_int(n)) == {n}


@lru_cache(maxsize=1)
def _prime_set() -> frozenset[int]:
    return frozenset(_small_primes())


@lru_cache(maxsize=65536)
def factor_int(n: int) -> dict[int, int]:
    """Prime factorization of a positive integer below FACTOR_BOUND.

    Trial division by the primes up to TRIAL_LIMIT; a cofactor left over after
    that is either prime (when below TRIAL_LIMIT^2) or handed to sympy.
    """
    if n < 1:
        raise InputError(f"cannot factor {n}")
    _check_bound(n)
    out: dict[int, int] = {}
    for p in _small_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
    if n > 1:
        if n < TRIAL_LIMIT * TRIAL_LIMIT:
            out[n] = out.get(n, 0) + 1
        else:
            from sympy import factorint

            for p, e in factorint(n).items():
                out[int(p)] = out.get(int(p), 0) + int(e)
    return dict(sorted(out.items()))


class PrimeValuationVector(Mapping[int, int]):
    """Finite-support map prime -> nonzero exponent (an element of Z^(P))."""

    __slots__ = ("_data",)

    def __init__(self, entries: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        self._data = {int(p): int(e) for p, e in sorted(items) if e}

    def __getitem__(self, p: int) -> int:
        return self._data[p]

    def get(self, p: int, default: int = 0) -> int:  # type: ignore[override]
        return self._data.get(p, default)

    def __iter__(self) -> Iterator[int]:
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def __hash__(self) -> int:
        return hash(tuple(self._data.items()))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Mapping):
            return self._data == {p: e for p, e in other.items() if e}
        return NotImplemented

    def __repr__(self) -> str:
        return "{" + ", ".join(f"{p}:{e}" for p, e in self._data.items()) + "}"

    def __add__(self, other: PrimeValuationVector) -> PrimeValuationVector:
        out = dict(self._data)
        for p, e in other.items():
            out[p] = out.get(p, 0) + e
        return PrimeValuationVector(out)

    def __neg__(self) -> PrimeValuationVector:
        return PrimeValuationVector({p: -e for p, e in self._data.items()})

    def __sub__(self, other: PrimeValuationVector) -> PrimeValuationVector:
        return self + (-other)

    def leq(self, other: PrimeValuationVector) -> bool:
        """Pointwise comparison; absent primes count as exponent 0."""
        return all(self.get(p) <= other.get(p) for p in set(self) | set(other))

    def rational(self) -> Fraction:
        num = den = 1
        for p, e in self._data.items():
            if e > 0:
                num *= p**e
            else:
                den *= p**-e
        return Fraction(num, den)


def factorize(q: Fraction | int | str) -> PrimeValuationVector:
    q = as_rational(q)
    vec = dict(factor_int(q.numerator))
    for p, e in factor_int(q.denominator).items():
        vec[p] = vec.get(p, 0) - e
    return PrimeValuationVector(vec)


def primes_of(*items: Fraction | int) -> set[int]:
    out: set[int] = set()
    for x in items:
        q = Fraction(x)
        out |= set(factor_int(abs(q.numerator)))
        out |= set(factor_int(q.denominator))
    return out


def rational_gcd(items: Iterable[Fraction]) -> Fraction:
    """gcd of positive rationals in lowest terms: gcd(nums) / lcm(dens)."""
    items = list(items)
    if not items:
        raise InputError("gcd of an empty set")
    num = reduce(math.gcd, (abs(q.numerator) for q in items))
    den = reduce(math.lcm, (q.denominator for q in items))
    return Fraction(num, den)


def rational_lcm(items: Iterable[Fraction]) -> Fraction:
    items = list(items)
    if not items:
        raise InputError("lcm of an empty set")
    num = reduce(math.lcm, (abs(q.numerator) for q in items))
    den = reduce(math.gcd, (q.denominator for q in items))
    return Fraction(num, den)


def ext_gcd(values: list[int]) -> tuple[int, list[int]]:
    """Return ``(g, xs)`` with ``g = gcd(values) >= 0`` and ``sum(x*v) == g``."""
    g, xs = 0, [0] * len(values)
    for i, v in enumerate(values):
        # fold v into the running combination: g' = s*g + t*v
        old_r, r = g, v
        old_s, s = 1, 0
        old_t, t = 0, 1
        while r:
            quot = old_r // r
            old_r, r = r, old_r - quot * r
            old_s, s = s, old_s - quot * s
            old_t, t = t, old_t - quot * t
        if old_r < 0:
            old_r, old_s, old_t = -old_r, -old_s, -old_t
        xs = [x * old_s for x in xs]
        xs[i] = old_t
        g = old_r
    return g, xs


# ---------------------------------------------------------------------------
# numerical semigroups


@dataclass(frozen=True)
class NumericalSemigroup:
    """Additive submonoid of N generated by ``generators``.

    Generators with gcd d > 1 are accepted (the monoid is then d times a
    numerical semigroup); ``gaps`` and ``frobenius`` refuse such input since
    the complement in N is infinite.
    """

    generators: tuple[int, ...]

    def __post_init__(self) -> None:
        gens = tuple(sorted(set(int(g) for g in self.generators)))
        if not gens or any(g <= 0 for g in gens):
            raise InputError(f"semigroup generators must be positive integers: {self.generators}")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def parse(cls, text: str) -> NumericalSemigroup:
        m = re.fullmatch(r"\s*<\s*([\d\s,]+)>\s*", text)
        if not m:
            raise InputError(f"semigroup literal must look like <2,3>: {text!r}")
        parts = [p for p in m.group(1).replace(" ", "").split(",") if p]
        if not parts:
            raise InputError(f"empty semigroup literal: {text!r}")
        return cls(tuple(int(p) for p in parts))

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.generators)) + ">"

    @cached_property
    def gcd(self) -> int:
        return reduce(math.gcd, self.generators)

    @cached_property
    def _reduced(self) -> tuple[frozenset[int], int]:
        """Gap set and Frobenius number of S/d (always a numerical semigroup)."""
        gens = [g // self.gcd for g in self.generators]
        least = gens[0]
        member = [True]
        run = 1 if least == 1 else 0
        n = 0
        # stop once `least` consecutive members are seen: everything after is in S
        while run < least:
            n += 1
            ok = any(n >= g and member[n - g] for g in gens)
            member.append(ok)
            run = run + 1 if ok else 0
        gaps = frozenset(i for i, ok in enumerate(member) if not ok)
        return gaps, max(gaps, default=-1)

    @property
    def gaps(self) -> frozenset[int]:
        self._require_numerical()
        return self._reduced[0]

    @property
    def frobenius(self) -> int:
        self._require_numerical()
        return self._reduced[1]

    @property
    def conductor(self) -> int:
        """Least c with every multiple of gcd that is >= c lying in S."""
        return self.gcd * (self._reduced[1] + 1)

    def _require_numerical(self) -> None:
        if self.gcd != 1:
            raise InputError(f"gcd of {self} is {self.gcd}, so its gap set is infinite")

    def __contains__(self, n: int) -> bool:
        if n < 0 or n % self.gcd:
            return False
        return n // self.gcd not in self._reduced[0]


def sg_member(S: NumericalSemigroup, n: int) -> bool:
    return n in S


def frobenius_number(S: NumericalSemigroup) -> int:
    return S.frobenius


# ---------------------------------------------------------------------------
# divisibility groups


class DivisibilityGroup(ABC):
    """A commutative group with a positive cone of integral elements."""

    name: str
    has_ring: bool = False

    @property
    @abstractmethod
    def unit(self) -> Any: ...

    @abstractmethod
    def mul(self, a: Any, b: Any) -> Any: ...

    @abstractmethod
    def inv(self, a: Any) -> Any: ...

    @abstractmethod
    def is_integral(self, a: Any) -> bool: ...

    @abstractmethod
    def coerce(self, x: Any) -> Any:
        """Validate (and parse) an element, raising InputError when malformed."""

    @abstractmethod
    def sample(self, rng: random.Random) -> Any: ...

    @abstractmethod
    def height(self, a: Any) -> int: ...

    def key(self, a: Any) -> Any:
        return a

    def format(self, a: Any) -> str:
        return str(a)

    def div(self, a: Any, b: Any) -> Any:
        return self.mul(a, self.inv(b))

    def prod(self, items: Iterable[Any]) -> Any:
        return reduce(self.mul, items, self.unit)

    def divides(self, a: Any, b: Any) -> bool:
        return self.is_integral(self.div(b, a))

    def sort(self, items: Iterable[Any]) -> tuple[Any, ...]:
        return tuple(sorted(set(items), key=self.key))


@dataclass(frozen=True)
class RationalGroup(DivisibilityGroup):
    """Q>0 under multiplication with cone Z>0: the divisibility group of Z.

    ``sample_primes`` and ``sample_exponents`` only shape random sampling.
    """

    sample_primes: tuple[int, ...] = (2, 3, 5, 7)
    sample_exponents: tuple[int, int] = (-2, 3)
    name: str = field(default="Q/Z", init=False)
    has_ring: bool = field(default=True, init=False)

    @property
    def unit(self) -> Fraction:
        return Fraction(1)

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def inv(self, a: Fraction) -> Fraction:
        return 1 / a

    def is_integral(self, a: Fraction) -> bool:
        return a.denominator == 1

    def divides(self, a: Fraction, b: Fraction) -> bool:
        # b/a integral, without building the Fraction
        return (b.numerator * a.denominator) % (b.denominator * a.numerator) == 0

    def coerce(self, x: Any) -> Fraction:
        return as_rational(x)

    def sample(self, rng: random.Random) -> Fraction:
        lo, hi = self.sample_exponents
        q = Fraction(1)
        for p in self.sample_primes:
            q *= Fraction(p) ** rng.randint(lo, hi)
        return q

    def height(self, a: Fraction) -> int:
        return rational_height(a)

    def key(self, a: Fraction) -> tuple[int, Fraction]:
        return (rational_height(a), a)

    def format(self, a: Fraction) -> str:
        return format_rational(a)


@dataclass(frozen=True)
class SemigroupGroup(DivisibilityGroup):
    """The group dZ written additively, with cone S (d = gcd of S)."""

    S: NumericalSemigroup
    sample_radius: int = 10
    name: str = field(default="", init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "name", f"(Z,{self.S})")

    @property
    def unit(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return a + b

    def inv(self, a: int) -> int:
        return -a

    def is_integral(self, a: int) -> bool:
        return a in self.S

    def coerce(self, x: Any) -> int:
        if isinstance(x, str):
            if not re.fullmatch(r"\s*-?\d+\s*", x):
                raise InputError(f"not an integer literal: {x!r}")
            x = int(x)
        if isinstance(x, Fraction) and x.denominator == 1:
            x = int(x)
        if isinstance(x, bool) or not isinstance(x, int):
            raise InputError(f"elements of {self.name} are integers, got {x!r}")
        if x % self.S.gcd:
            raise InputError(f"{x} is not in the group {self.S.gcd}Z generated by {self.S}")
        return x

    def sample(self, rng: random.Random) -> int:
        return self.S.gcd * rng.randint(-self.sample_radius, self.sample_radius)

    def height(self, a: int) -> int:
        return abs(a)

    def key(self, a: int) -> tuple[int, int]:
        return (abs(a), a)

    @property
    def window(self) -> int:
        """Width after which everything above a point lies in its S-translate."""
        return self.S.conductor


def divides(G: DivisibilityGroup, a: Any, b: Any) -> bool:
    return G.divides(G.coerce(a), G.coerce(b))


def parse_instance(text: str) -> DivisibilityGroup:
    """``Q``/``QZ``/``Q/Z`` for the rational instance, ``<2,3>`` for (Z, S)."""
    t = text.strip()
    if t.upper() in {"Q", "QZ", "Q/Z", "Z"}:
        return RationalGroup()
    if t.startswith("<"):
        return SemigroupGroup(NumericalSemigroup.parse(t))
    raise InputError(f"unknown instance {text!r}; use Q or <g1,g2,...>")
