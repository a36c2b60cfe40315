"""Integral dependence: the r_a-operation, r-closedness and Pruefer equations.

b is r-dependent on A when some finite C has b*C_r inside A_r*C_r.  That is
an existential over all finite sets, so :func:`ra_member` is three-valued: it
answers ``false`` only where an instance carries a decision argument and
``unknown`` once its search budget is spent.

Decision arguments used here:

* Q/Z with t, v or d: Z is a PID, r_a = r, so b is dependent iff gcd(A) | b.
* (Z, S) with s, v or t: the dependent elements are exactly those b in the
  group with b >= min(A).  Necessity compares minima of both sides; for
  sufficiency take C = {0, d, ..., conductor - d}, whose ideal is all of dN.
"""

from __future__ import annotations

import itertools
import json
import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any

from .errors import CapabilityError, InputError
from .groups import (
    DivisibilityGroup,
    NumericalSemigroup,
    RationalGroup,
    SemigroupGroup,
    as_rational,
    ext_gcd,
    factor_int,
    rational_gcd,
)
from .ideals import SystemTag, _check_system, _member, residual_witness, system


class Status(str, Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class RaWitness:
    c: tuple[Any, ...]

    def replay(self, sys: SystemTag | str, A: Sequence[Any], b: Any, G: DivisibilityGroup) -> bool:
        """Check b*c in (A*C)_r for every c in C."""
        sys = system(sys)
        if not self.c:
            return False
        AC = [G.mul(a, c) for a in A for c in self.c]
        return all(_member(sys, AC, G.mul(b, c), G) for c in self.c)


@dataclass(frozen=True)
class RaResult:
    status: Status
    witness: RaWitness | None = None
    budget: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.status is Status.TRUE


def _decide_ra(sys: SystemTag, A: Sequence[Any], b: Any, G: DivisibilityGroup) -> bool | None:
    if isinstance(G, RationalGroup) and sys in (SystemTag.T, SystemTag.V, SystemTag.D):
        return G.divides(rational_gcd(A), b)
    if isinstance(G, SemigroupGroup):
        return b >= min(A)
    return None


def _constructive_witness(sys: SystemTag, A: Sequence[Any], G: DivisibilityGroup) -> RaWitness:
    if isinstance(G, SemigroupGroup):
        d = G.S.gcd
        return RaWitness(tuple(range(0, max(G.window, d), d)))
    return RaWitness((G.unit,))


def witness_candidates(A: Sequence[Any], b: Any, G: DivisibilityGroup, max_size: int = 3) -> Iterable[tuple[Any, ...]]:
    """Candidate sets C in the documented search order.

    The pool is the unit, A, b and all pairwise quotients of A and b; subsets
    come by increasing size, then total height, then element keys.
    """
    base = list(A) + [b]
    pool = {G.unit, *base}
    pool |= {G.div(x, y) for x in base for y in base}
    pool = G.sort(pool)
    for size in range(1, max_size + 1):
        subsets = sorted(
            itertools.combinations(pool, size),
            key=lambda s: (sum(G.height(x) for x in s), [G.key(x) for x in s]),
        )
        yield from subsets


def ra_member(
    sys: SystemTag | str,
    A: Iterable[Any],
    b: Any,
    G: DivisibilityGroup,
    budget: int = 2000,
    max_size: int = 3,
) -> RaResult:
    sys = system(sys)
    _check_system(sys, G)
    A = list(G.sort(G.coerce(a) for a in A))
    if not A:
        raise InputError("r_a-closure of the empty set")
    b = G.coerce(b)

    decision = _decide_ra(sys, A, b, G)
    if decision is False:
        return RaResult(Status.FALSE, reason="decided")
    tried = 0
    for cand in witness_candidates(A, b, G, max_size):
        if tried >= budget:
            break
        tried += 1
        w = RaWitness(cand)
        if w.replay(sys, A, b, G):
            return RaResult(Status.TRUE, w, tried, "search")
    if decision is True:
        w = _constructive_witness(sys, A, G)
        if not w.replay(sys, A, b, G):  # pragma: no cover - would be a bug in the argument
            raise AssertionError(f"constructive witness failed for {sys}, {A}, {b}")
        return RaResult(Status.TRUE, w, tried, "constructed")
    return RaResult(Status.UNKNOWN, budget=budget, reason=f"no witness among {tried} candidates")


# ---------------------------------------------------------------------------
# r-closedness


@dataclass(frozen=True)
class ClosedResult:
    status: Status
    witness: tuple[tuple[Any, ...], Any] | None = None
    proof: str = ""

    def __bool__(self) -> bool:
        return self.status is Status.TRUE


def _decision_argument(G: DivisibilityGroup, sys: SystemTag) -> str | None:
    if isinstance(G, RationalGroup):
        if sys is SystemTag.S:
            return "Q/Z, s: x^k*c in C_s for all k bounds v_p(x) from below at every p"
        return f"Q/Z, {sys}: finite ideals are principal (gcd) and principal ideals cancel"
    if isinstance(G, SemigroupGroup) and sys is not SystemTag.D:
        # (Z, S) with gcd d is isomorphic to (Z, S/d)
        if _reduced_frobenius(G) == -1:
            return "S = dN: the group order is total, every ideal is principal"
        return "(Z,S): a gap x and C = [0, conductor) give x + C_r inside C_r"
    return None


def _reduced_frobenius(G: SemigroupGroup) -> int:
    d = G.S.gcd
    return NumericalSemigroup(tuple(g // d for g in G.S.generators)).frobenius


def _search_closedness(G: SemigroupGroup, sys: SystemTag, bound: int, seed: int) -> tuple[tuple[int, ...], int] | None:
    """Hunt for C, x with x non-integral and x + C_r inside C_r.

    Order: the generator set of S, then intervals [0, k), then seeded random
    subsets of the window.
    """
    rng = random.Random(seed)
    width = G.window + G.S.gcd
    candidates: list[tuple[int, ...]] = [G.S.generators]
    candidates += [tuple(range(0, k * G.S.gcd, G.S.gcd)) for k in range(2, width + 1)]
    for _ in range(max(0, bound - len(candidates))):
        size = rng.randint(2, 4)
        candidates.append(tuple(sorted(rng.sample(range(0, 2 * width, G.S.gcd), size))))
    for C in candidates[:bound]:
        x = residual_witness(sys, C, G)
        if x is not None:
            return C, x
    return None


def is_r_closed(
    G: DivisibilityGroup,
    sys: SystemTag | str,
    mode: str = "decide",
    bound: int = 200,
    seed: int = 0,
) -> ClosedResult:
    """Is every finite r-ideal cancellable (C_r : C_r = 1)?

    ``decide`` needs a registered argument and raises CapabilityError
    otherwise; ``search`` hunts for a counterexample and reports
    ``unknown`` (true up to the bound) when none turns up.
    """
    sys = system(sys)
    _check_system(sys, G)
    if mode == "decide":
        arg = _decision_argument(G, sys)
        if arg is None:
            raise CapabilityError(f"no registered decision argument for {sys} on {G.name}")
        if isinstance(G, SemigroupGroup) and _reduced_frobenius(G) != -1:
            found = _search_closedness(G, sys, bound=max(bound, G.window + 2), seed=seed)
            assert found is not None, "interval witness must exist for a proper semigroup"
            return ClosedResult(Status.FALSE, found, arg)
        return ClosedResult(Status.TRUE, proof=arg)
    if mode != "search":
        raise InputError(f"unknown mode {mode!r}; expected decide or search")
    if isinstance(G, SemigroupGroup):
        found = _search_closedness(G, sys, bound, seed)
        if found is not None:
            return ClosedResult(Status.FALSE, found, "search")
        return ClosedResult(Status.UNKNOWN, proof=f"no counterexample within {bound} candidates")
    rng = random.Random(seed)
    for _ in range(bound):
        C = [G.sample(rng) for _ in range(rng.randint(1, 3))]
        x = residual_witness(sys, C, G)
        if x is not None:  # pragma: no cover - Q/Z is closed
            return ClosedResult(Status.FALSE, (tuple(C), x), "search")
    return ClosedResult(Status.UNKNOWN, proof=f"no counterexample within {bound} candidates")


def closure_window(S: NumericalSemigroup, lo: int, hi: int) -> set[int]:
    """Elements of [lo, hi] that are s-dependent on the cone of (Z, S).

    Only elements of the group generated by S are considered, so for gcd 2
    the answer holds even numbers only.
    """
    if lo > hi:
        raise InputError(f"empty window [{lo}, {hi}]")
    G = SemigroupGroup(S)
    d = S.gcd
    start = lo + (-lo) % d
    return {n for n in range(start, hi + 1, d) if ra_member(SystemTag.S, [0], n, G)}


# ---------------------------------------------------------------------------
# Pruefer dependence


def monomials(m: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors of the degree-``degree`` monomials in m variables,
    in the order used by certificate combinations."""
    out = []
    for combo in itertools.combinations_with_replacement(range(m), degree):
        exps = [0] * m
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    return out


@dataclass(frozen=True)
class PruferCertificate:
    """b^k + c_1 b^(k-1) + ... + c_k = 0 with c_j in (A)^j.

    ``combos[j-1]`` holds integer coefficients, one per degree-j monomial of
    A (see :func:`monomials`), multiplying out to ``coeffs[j-1]`` or to its
    negative.
    """

    k: int
    coeffs: tuple[int, ...]
    combos: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict[str, Any]:
        return {"kind": "prufer", "k": self.k, "coeffs": list(self.coeffs), "bezout": [list(c) for c in self.combos]}

    @classmethod
    def from_json(cls, data: dict[str, Any] | str) -> PruferCertificate:
        if isinstance(data, str):
            data = json.loads(data)
        if data.get("kind") != "prufer":
            raise InputError("not a prufer certificate")
        try:
            return cls(int(data["k"]), tuple(int(c) for c in data["coeffs"]), tuple(tuple(int(x) for x in c) for c in data["bezout"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed prufer certificate: {exc}") from None


@dataclass(frozen=True)
class PruferRefutation:
    prime: int
    value_b: int
    value_ideal: int

    def __str__(self) -> str:
        return f"refuted at p={self.prime} (v_p(b)={self.value_b} < {self.value_ideal})"


def _ints(A: Iterable[int]) -> list[int]:
    out = []
    for a in A:
        if isinstance(a, Fraction):
            if a.denominator != 1:
                raise InputError(f"ideal generators must be integers, got {a}")
            a = a.numerator
        if isinstance(a, bool) or not isinstance(a, int) or a == 0:
            raise InputError(f"ideal generators must be nonzero integers, got {a!r}")
        out.append(a)
    if not out:
        raise InputError("empty ideal")
    return out


def prufer_check(b: Fraction | int | str, A: Iterable[int], cert: PruferCertificate) -> bool:
    b = Fraction(b) if not isinstance(b, str) else as_rational(b)
    A = _ints(A)
    if cert.k < 1 or len(cert.coeffs) != cert.k or len(cert.combos) != cert.k:
        raise InputError(f"certificate of degree {cert.k} carries {len(cert.coeffs)} coefficients and {len(cert.combos)} combinations")
    for j, (c, combo) in enumerate(zip(cert.coeffs, cert.combos), start=1):
        monos = monomials(len(A), j)
        if len(combo) != len(monos):
            raise InputError(f"combination for c_{j} needs {len(monos)} entries, got {len(combo)}")
        total = 0
        for coef, exps in zip(combo, monos):
            term = coef
            for a, e in zip(A, exps):
                term *= a**e
            total += term
        # a combination for -c_j proves membership just as well
        if total not in (c, -c):
            return False
    value = b**cert.k + sum(c * b ** (cert.k - j) for j, c in enumerate(cert.coeffs, start=1))
    return value == 0


def _vp(p: int, n: int) -> int:
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def prufer_search(b: Fraction | int | str, A: Iterable[int]) -> PruferCertificate | PruferRefutation:
    """Degree-one certificate or refutation over Z.

    Z is a PID, so b is integral over (A) iff b is in (A) = gcd(A)*Z, and a
    degree-one equation b - b = 0 with c_1 = -b written as a Bezout
    combination suffices.  Otherwise the least prime where the value of b
    falls below that of the ideal is reported.
    """
    b = Fraction(b) if not isinstance(b, str) else as_rational(b)
    A = _ints(A)
    g, xs = ext_gcd(A)
    if b.denominator == 1 and b.numerator % g == 0:
        scale = -b.numerator // g
        return PruferCertificate(1, (-b.numerator,), (tuple(x * scale for x in xs),))
    primes = set(factor_int(g)) | set(factor_int(b.denominator))
    for p in sorted(primes):
        vb = _vp(p, abs(b.numerator)) - _vp(p, b.denominator)
        vi = min(_vp(p, abs(a)) for a in A)
        if vb < vi:
            return PruferRefutation(p, vb, vi)
    raise AssertionError("gcd does not divide b yet no prime refutes")  # pragma: no cover
