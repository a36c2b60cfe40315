"""The free lattice-ordered group over a preordered group, via entailment.

Only the relation ``a_1 ^ ... ^ a_m  <=  b_1 v ... v b_n`` has to be given.
Terms are kept in join-of-meets normal form and compared by reducing
``V_i ^A_i <= V_j ^B_j`` to oracle calls: every meet A_i must entail the
image of every choice function picking one element from each B_j.

Over Q/Z the relation is decided directly: 1 must lie in the sum of
the powers J, J^2, ... of the fractional ideal J generated over Z by all
a_i / b_j.  The partial sums are iterated literally; since Z is a PID the
loop can stop as soon as the reduced generator u/v of J has u != 1, because
every element of every power then has positive value at the primes of u.
"""

from __future__ import annotations

import itertools
import math
import random
import re
from abc import ABC, abstractmethod
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Any

from .closure import _decide_ra
from .errors import BudgetExceeded, CapabilityError, InputError
from .groups import (
    DivisibilityGroup,
    PrimeValuationVector,
    RationalGroup,
    SemigroupGroup,
    as_rational,
    factorize,
    rational_gcd,
)
from .ideals import FiniteIdeal, SystemTag, ideal_mul, ideal_subset
from .reports import LawReport

# ---------------------------------------------------------------------------
# fractional ideals of Z and the PID entailment


@dataclass(frozen=True)
class FractionalIdeal:
    """A fractional ideal of Z, stored by its positive generator."""

    gen: Fraction

    @classmethod
    def generated_by(cls, items: Iterable[Fraction]) -> FractionalIdeal:
        return cls(rational_gcd(items))

    def __add__(self, other: FractionalIdeal) -> FractionalIdeal:
        return FractionalIdeal(rational_gcd([self.gen, other.gen]))

    def __mul__(self, other: FractionalIdeal) -> FractionalIdeal:
        return FractionalIdeal(self.gen * other.gen)

    def __contains__(self, x: Fraction) -> bool:
        return (x / self.gen).denominator == 1


def entails_pid(A: Iterable[Any], B: Iterable[Any], max_rounds: int = 64) -> bool:
    A = [as_rational(a) for a in A]
    B = [as_rational(b) for b in B]
    if not A or not B:
        raise InputError("entailment needs nonempty sides")
    J = FractionalIdeal.generated_by(a / b for a in A for b in B)
    partial = J
    for _ in range(max_rounds):
        if 1 in partial:
            return True
        if J.gen.numerator != 1:
            return False
        partial = J + J * partial
    raise BudgetExceeded("entails_pid partial sums", max_rounds)  # pragma: no cover


def entails_pid_shortcut(A: Iterable[Any], B: Iterable[Any]) -> bool:
    """Closed form of the loop: gcd(A) divides lcm(B)."""
    A = [as_rational(a) for a in A]
    B = [as_rational(b) for b in B]
    g = rational_gcd(A)
    num = reduce(math.lcm, (b.numerator for b in B))
    den = reduce(math.gcd, (b.denominator for b in B))
    return ((Fraction(num, den)) / g).denominator == 1


class EntailmentOracle(ABC):
    """``entails(A, B)`` decides meet(A) <= join(B)."""

    group: DivisibilityGroup

    @abstractmethod
    def entails(self, A: Sequence[Any], B: Sequence[Any]) -> bool: ...


class PIDEntailment(EntailmentOracle):
    def __init__(self) -> None:
        self.group = RationalGroup()

    def entails(self, A: Sequence[Any], B: Sequence[Any]) -> bool:
        return entails_pid(A, B)


class SemigroupEntailment(EntailmentOracle):
    """Entailment generated by the s_a-ideals of (Z, S).

    For gcd 1 the s_a-order is the usual total order of Z (b is dependent on
    A iff b >= min A), so meet(A) <= join(B) iff some b in B is dependent.
    """

    def __init__(self, G: SemigroupGroup):
        if G.S.gcd != 1:
            raise CapabilityError(f"s-entailment needs gcd 1, {G.S} has gcd {G.S.gcd}")
        self.group = G

    def entails(self, A: Sequence[int], B: Sequence[int]) -> bool:
        return any(_decide_ra(SystemTag.S, list(A), b, self.group) for b in B)


def oracle_for(G: DivisibilityGroup) -> EntailmentOracle:
    if isinstance(G, RationalGroup):
        return PIDEntailment()
    if isinstance(G, SemigroupGroup):
        return SemigroupEntailment(G)
    raise CapabilityError(f"no entailment oracle for {G.name}")


# ---------------------------------------------------------------------------
# terms


@dataclass(frozen=True)
class LatticeTerm:
    """Join of meets: ``conjuncts`` is a set of nonempty meets."""

    conjuncts: frozenset[frozenset[Any]]

    def __post_init__(self) -> None:
        if not self.conjuncts or any(not c for c in self.conjuncts):
            raise InputError("lattice terms need nonempty joins of nonempty meets")

    @classmethod
    def of(cls, *meets: Iterable[Any]) -> LatticeTerm:
        return cls(frozenset(frozenset(m) for m in meets))

    def ordered(self, G: DivisibilityGroup) -> list[tuple[Any, ...]]:
        return sorted((G.sort(m) for m in self.conjuncts), key=lambda m: [G.key(x) for x in m])

    def render(self, G: DivisibilityGroup) -> str:
        parts = []
        meets = self.ordered(G)
        for m in meets:
            body = " ^ ".join(G.format(x) for x in m)
            parts.append(f"({body})" if len(m) > 1 and len(meets) > 1 else body)
        return " v ".join(parts)


def embed(a: Any) -> LatticeTerm:
    return LatticeTerm.of([a])


class _Counter:
    def __init__(self, oracle: EntailmentOracle, budget: int | None, what: str):
        self.oracle, self.budget, self.what, self.calls = oracle, budget, what, 0

    def __call__(self, A: Iterable[Any], B: Iterable[Any]) -> bool:
        self.calls += 1
        if self.budget is not None and self.calls > self.budget:
            raise BudgetExceeded(self.what, self.budget)
        return self.oracle.entails(list(A), list(B))


def _meet_leq(A: Iterable[Any], B: Iterable[Any], ent: Any) -> bool:
    return all(ent(A, [b]) for b in B)


def term_leq(
    t: LatticeTerm,
    u: LatticeTerm,
    oracle: EntailmentOracle,
    budget: int | None = None,
    exhaustive: bool = False,
) -> bool:
    """Every meet of t entails the image of every choice function on u.

    The default walk builds choice functions meet by meet and relies on
    monotonicity of the oracle: once a partial image is entailed every
    completion is, and a meet already hit by the partial image adds nothing.
    ``exhaustive=True`` enumerates all choice functions instead.
    """
    ent = _Counter(oracle, budget, "term_leq")
    G = oracle.group
    targets = u.ordered(G)
    for A in t.ordered(G):
        if exhaustive:
            if not all(ent(A, set(choice)) for choice in itertools.product(*targets)):
                return False
        elif not _choices_entailed(A, targets, 0, frozenset(), ent):
            return False
    return True


def _choices_entailed(A: Sequence[Any], targets: list[tuple[Any, ...]], i: int, chosen: frozenset[Any], ent: Any) -> bool:
    while i < len(targets) and chosen & set(targets[i]):
        i += 1
    if chosen and ent(A, chosen):
        return True
    if i == len(targets):
        return False
    return all(_choices_entailed(A, targets, i + 1, chosen | {b}, ent) for b in targets[i])


def term_equiv(t: LatticeTerm, u: LatticeTerm, oracle: EntailmentOracle) -> bool:
    return term_leq(t, u, oracle) and term_leq(u, t, oracle)


def term_mul(t: LatticeTerm, u: LatticeTerm, G: DivisibilityGroup) -> LatticeTerm:
    return LatticeTerm(frozenset(frozenset(G.mul(a, b) for a in A for b in B) for A in t.conjuncts for B in u.conjuncts))


def term_meet(t: LatticeTerm, u: LatticeTerm) -> LatticeTerm:
    return LatticeTerm(frozenset(A | B for A in t.conjuncts for B in u.conjuncts))


def term_join(t: LatticeTerm, u: LatticeTerm) -> LatticeTerm:
    return LatticeTerm(t.conjuncts | u.conjuncts)


def term_inv(t: LatticeTerm, G: DivisibilityGroup) -> LatticeTerm:
    """(V ^A_i)^-1 = ^ V A_i^-1, redistributed into join-of-meets form."""
    meets = t.ordered(G)
    return LatticeTerm(frozenset(frozenset(G.inv(x) for x in choice) for choice in itertools.product(*meets)))


def term_normalize(t: LatticeTerm, oracle: EntailmentOracle, budget: int | None = 10_000) -> LatticeTerm:
    """Drop every meet that lies below another one.

    Of several equivalent meets the first in canonical order survives.  The
    oracle call budget is enforced; overflow raises BudgetExceeded.
    """
    ent = _Counter(oracle, budget, "term_normalize")
    meets = t.ordered(oracle.group)
    removed = [False] * len(meets)
    for i, A in enumerate(meets):
        for j, B in enumerate(meets):
            if i == j or removed[j]:
                continue
            if _meet_leq(A, B, ent) and (j < i or not _meet_leq(B, A, ent)):
                removed[i] = True
                break
    return LatticeTerm(frozenset(frozenset(m) for m, r in zip(meets, removed) if not r))


def term_valuation(t: LatticeTerm) -> PrimeValuationVector:
    """Evaluate a term over Q/Z in Z^(P): max over meets of pointwise minima."""
    vecs = [[factorize(a) for a in A] for A in t.conjuncts]
    primes = sorted({p for group in vecs for v in group for p in v})
    out = {}
    for p in primes:
        out[p] = max(min(v.get(p) for v in group) for group in vecs)
    return PrimeValuationVector(out)


# ---------------------------------------------------------------------------
# term syntax: `(4 ^ 6) v 9 * 2`, precedence * over ^ over v


_TOKEN = re.compile(r"\s*(?:(?P<num>-?\d+(?:/\d+)?)|(?P<op>[()^*v]))")


def parse_term(text: str, G: DivisibilityGroup) -> LatticeTerm:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise InputError(f"cannot parse term at {text[pos:]!r}")
        tokens.append(m.group("num") or m.group("op"))
        pos = m.end()
    if not tokens:
        raise InputError("empty term")
    stream = iter(tokens + [None])
    cur = [next(stream)]

    def take() -> str | None:
        tok = cur[0]
        cur[0] = next(stream, None)
        return tok

    def join_level() -> LatticeTerm:
        t = meet_level()
        while cur[0] == "v":
            take()
            t = term_join(t, meet_level())
        return t

    def meet_level() -> LatticeTerm:
        t = mul_level()
        while cur[0] == "^":
            take()
            t = term_meet(t, mul_level())
        return t

    def mul_level() -> LatticeTerm:
        t = atom()
        while cur[0] == "*":
            take()
            t = term_mul(t, atom(), G)
        return t

    def atom() -> LatticeTerm:
        tok = take()
        if tok == "(":
            t = join_level()
            if take() != ")":
                raise InputError(f"unbalanced parentheses in {text!r}")
            return t
        if tok is None or tok in "()^*v":
            raise InputError(f"expected an element in {text!r}, got {tok!r}")
        return embed(G.coerce(tok))

    t = join_level()
    if cur[0] is not None:
        raise InputError(f"trailing input in term {text!r}")
    return t


# ---------------------------------------------------------------------------
# law suites


def _sample(G: DivisibilityGroup, rng: random.Random) -> Any:
    return G.sample(rng)


def regularity_holds(oracle: EntailmentOracle, samples: int = 500, seed: int = 0) -> LawReport:
    """x*a ^ y*b <= x*b v y*a on random a, b, x, y."""
    G = oracle.group
    rng = random.Random(seed)
    report = LawReport(f"regularity [{G.name}]")
    report.law("regularity")
    for _ in range(samples):
        a, b, x, y = (_sample(G, rng) for _ in range(4))
        lhs = LatticeTerm.of([G.mul(x, a), G.mul(y, b)])
        rhs = LatticeTerm.of([G.mul(x, b)], [G.mul(y, a)])
        report.record("regularity", term_leq(lhs, rhs, oracle), a=a, b=b, x=x, y=y)
    return report


def embedding_faithful(G: DivisibilityGroup, oracle: EntailmentOracle, samples: int = 500, seed: int = 0) -> LawReport:
    """divides(a, b) iff embed(a) <= embed(b), on random pairs."""
    rng = random.Random(seed)
    report = LawReport(f"embedding [{G.name}]")
    report.law("faithful")
    for _ in range(samples):
        a, b = _sample(G, rng), _sample(G, rng)
        ok = G.divides(a, b) == term_leq(embed(a), embed(b), oracle)
        report.record("faithful", ok, a=a, b=b, divides=G.divides(a, b))
    return report


def lattice_laws(oracle: EntailmentOracle, samples: int = 500, seed: int = 0) -> LawReport:
    """Preorder, bound, distributivity and monotonicity laws of the term order."""
    G = oracle.group
    rng = random.Random(seed)
    report = LawReport(f"term algebra [{G.name}]")

    def term() -> LatticeTerm:
        meets = [[_sample(G, rng) for _ in range(rng.randint(1, 2))] for _ in range(rng.randint(1, 2))]
        return LatticeTerm.of(*meets)

    leq = lambda s, t: term_leq(s, t, oracle)  # noqa: E731
    for _ in range(samples):
        t, u, w = term(), term(), term()
        report.record("reflexive", leq(t, t), t=t.render(G))
        # a chain lo <= u <= hi built by construction, so the premise always holds
        lo, hi = term_meet(t, u), term_join(u, w)
        if leq(lo, u) and leq(u, hi):
            report.record("transitive", leq(lo, hi), t=lo.render(G), u=u.render(G), w=hi.render(G))
        if leq(t, u) and leq(u, w):
            report.record("transitive", leq(t, w), t=t.render(G), u=u.render(G), w=w.render(G))
        m, j = term_meet(t, u), term_join(t, u)
        report.record("meet-lower", leq(m, t) and leq(m, u), t=t.render(G), u=u.render(G))
        report.record("join-upper", leq(t, j) and leq(u, j), t=t.render(G), u=u.render(G))
        if leq(w, t) and leq(w, u):
            report.record("meet-greatest", leq(w, m), t=t.render(G), u=u.render(G), w=w.render(G))
        if leq(t, w) and leq(u, w):
            report.record("join-least", leq(j, w), t=t.render(G), u=u.render(G), w=w.render(G))
        lhs = term_meet(t, term_join(u, w))
        rhs = term_join(term_meet(t, u), term_meet(t, w))
        report.record("distributive", term_equiv(lhs, rhs, oracle), t=t.render(G), u=u.render(G), w=w.render(G))
        if leq(t, u):
            report.record("mul-monotone", leq(term_mul(t, w, G), term_mul(u, w, G)), t=t.render(G), u=u.render(G), w=w.render(G))
        n = term_normalize(t, oracle)
        report.record("normalize", term_equiv(n, t, oracle) and term_normalize(n, oracle) == n, t=t.render(G))
    return report


def entailment_laws(oracle: EntailmentOracle, samples: int = 1000, seed: int = 0) -> LawReport:
    """Reflexivity, monotonicity, cut and translation for ``oracle.entails``."""
    G = oracle.group
    rng = random.Random(seed)
    report = LawReport(f"entailment [{G.name}]")
    ent = oracle.entails

    def side() -> list[Any]:
        return [_sample(G, rng) for _ in range(rng.randint(1, 3))]

    for _ in range(samples):
        A, B, c, x = side(), side(), _sample(G, rng), _sample(G, rng)
        shared = rng.choice(A)
        report.record("reflexive", ent(A, B + [shared]), A=A, B=B + [shared])
        if ent(A, B):
            report.record("monotone", ent(A + [c], B) and ent(A, B + [c]), A=A, B=B, c=c)
        if ent(A, B + [c]) and ent(A + [c], B):
            report.record("cut", ent(A, B), A=A, B=B, c=c)
        report.record(
            "translation",
            ent(A, B) == ent([G.mul(x, a) for a in A], [G.mul(x, b) for b in B]),
            A=A, B=B, x=x,
        )
    return report


# ---------------------------------------------------------------------------
# ideal fractions


@dataclass(frozen=True)
class IdealFraction:
    numerator: FiniteIdeal
    denominator: FiniteIdeal

    def __post_init__(self) -> None:
        if self.numerator.system is not self.denominator.system or self.numerator.group != self.denominator.group:
            raise InputError("ideal fraction needs numerator and denominator of the same system and instance")

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


def _cancellative(I: FiniteIdeal) -> bool:
    G = I.group
    if isinstance(G, RationalGroup):
        return I.system in (SystemTag.T, SystemTag.V, SystemTag.D)
    if isinstance(G, SemigroupGroup):
        return G.S.conductor == 0
    return False


def fraction_leq(F: IdealFraction, H: IdealFraction) -> bool:
    """Containment a/b <= c/d of ideal fractions, i.e. a*d inside b*c."""
    for I in (F.numerator, H.numerator):
        if not _cancellative(I):
            raise CapabilityError(f"{I.system}-ideals on {I.group.name} do not cancel; fractions are not defined")
    if F.numerator.system is not H.numerator.system or F.numerator.group != H.numerator.group:
        raise InputError("fractions over different systems")
    return ideal_subset(ideal_mul(F.numerator, H.denominator), ideal_mul(F.denominator, H.numerator))


def fraction_equiv(F: IdealFraction, H: IdealFraction) -> bool:
    return fraction_leq(F, H) and fraction_leq(H, F)
