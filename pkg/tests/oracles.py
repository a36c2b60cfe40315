"""Independent oracles for the test suite.

Nothing here imports lorkit.  Factorizations come from sympy, semigroups
are enumerated by dynamic programming, and the finite-domain oracle works
on plain sets of pairs.  ``python tests/oracles.py`` rewrites
tests/data/frozen.json from these functions alone.
"""

from __future__ import annotations

import itertools
import json
import random
from fractions import Fraction
from functools import reduce
from math import gcd
from pathlib import Path

from sympy import factorint

DATA = Path(__file__).parent / "data"


def vp(p: int, q: Fraction) -> int:
    q = Fraction(q)
    return factorint(abs(q.numerator)).get(p, 0) - factorint(q.denominator).get(p, 0)


def primes(*qs: Fraction) -> set[int]:
    out: set[int] = set()
    for q in qs:
        q = Fraction(q)
        out |= set(factorint(abs(q.numerator))) | set(factorint(q.denominator))
    return out


def valuation_entails(A: list[Fraction], B: list[Fraction]) -> bool:
    return all(min(vp(p, a) for a in A) <= max(vp(p, b) for b in B) for p in primes(*A, *B))


def semigroup_elements(gens: tuple[int, ...], upto: int) -> set[int]:
    d = reduce(gcd, gens)
    reach = [False] * (upto + 1)
    reach[0] = True
    for n in range(1, upto + 1):
        reach[n] = any(n >= g and reach[n - g] for g in gens)
    assert all(not reach[n] for n in range(upto + 1) if n % d)
    return {n for n, r in enumerate(reach) if r}


def frobenius(gens: tuple[int, ...]) -> int:
    elems = semigroup_elements(gens, 500)
    gaps = [n for n in range(500) if n not in elems]
    return max(gaps) if gaps else -1


def s_member(gens: tuple[int, ...], A: list[int], b: int) -> bool:
    S = semigroup_elements(gens, 400)
    return any(b - a in S for a in A)


def v_member(gens: tuple[int, ...], A: list[int], b: int, reach: int = 60) -> bool:
    """b lies in every principal ideal y + S that contains A (y scanned far below)."""
    S = semigroup_elements(gens, 400)
    for y in range(min(A) - reach, min(A) + 1):
        if all(a - y in S for a in A) and b - y not in S:
            return False
    return True


def dyn_oracle(inverted: set[int], A: list[Fraction], a: Fraction) -> int | None:
    for p in sorted(primes(*A, a) - inverted):
        if vp(p, a) < min(vp(p, x) for x in A):
            return p
    return None


def s_dependent_brute(gens: tuple[int, ...], b: int, radius: int = 4) -> bool:
    """Search C in [-radius, radius], |C| <= 2, with b + C inside (0 + C)_s."""
    S = semigroup_elements(gens, 400)
    pool = range(-radius, radius + 1)
    for k in (1, 2):
        for C in itertools.combinations(pool, k):
            if all(any(b + c - c2 in S for c2 in C) for c in C):
                return True
    return False


# ---------------------------------------------------------------------------
# finite domains on sets of pairs


def naive_allowable_total(carrier: int, R: set[tuple[int, int]], ops: list[tuple[int, ...]], meet: list[list[int]]) -> list[set[tuple[int, int]]]:
    """All total preorders containing R that respect operators and the meet rule."""
    out = []
    for ranks in itertools.product(range(carrier), repeat=carrier):
        S = {(a, b) for a in range(carrier) for b in range(carrier) if ranks[a] <= ranks[b]}
        if not R <= S:
            continue
        if any((f[a], f[b]) not in S for f in ops for a, b in S):
            continue
        if any((c, meet[a][b]) not in S for c in range(carrier) for a in range(carrier) for b in range(carrier) if (c, a) in S and (c, b) in S):
            continue
        out.append(S)
    return out


def naive_principal(carrier: int, R: set[tuple[int, int]], ops: list[tuple[int, ...]], meet: list[list[int]]) -> bool:
    orders = naive_allowable_total(carrier, R, ops, meet)
    full = {(a, b) for a in range(carrier) for b in range(carrier)}
    inter = reduce(set.__and__, orders, full)
    return inter <= R


def naive_closure(carrier: int, R: set[tuple[int, int]], ops: list[tuple[int, ...]], meet: list[list[int]], pairs: set[tuple[int, int]]) -> set[tuple[int, int]]:
    """Intersection of every allowable preorder (any relation at all) containing R and pairs."""
    cells = [(a, b) for a in range(carrier) for b in range(carrier)]
    out = set(cells)
    for mask in range(1 << len(cells)):
        S = {c for k, c in enumerate(cells) if mask >> k & 1}
        if not (R | pairs) <= S:
            continue
        if any((a, a) not in S for a in range(carrier)):
            continue
        if any((a, c) not in S for a, b in S for b2, c in S if b == b2):
            continue
        if any((f[a], f[b]) not in S for f in ops for a, b in S):
            continue
        if any((c, meet[a][b]) not in S for c, a in S for c2, b in S if c == c2):
            continue
        out &= S
    return out


# ---------------------------------------------------------------------------
# freezing


def _rational(rng: random.Random, bound: int = 10**4) -> Fraction:
    return Fraction(rng.randint(1, bound), rng.randint(1, bound))


def freeze() -> dict:
    rng = random.Random(20240601)
    out: dict = {}
    qs = ["18/5", "8/27", "1", "360", "49/600", "1024/243", "97", "9/20"]
    out["factorizations"] = {q: {str(p): vp(p, Fraction(q)) for p in sorted(primes(Fraction(q)))} for q in qs}
    sgs = [(2, 3), (3, 5), (3, 4, 5), (4, 6, 9), (5, 7), (1,), (6, 10, 15)]
    out["frobenius"] = {",".join(map(str, g)): frobenius(g) for g in sgs}
    out["gaps"] = {",".join(map(str, g)): sorted(n for n in range(frobenius(g) + 1) if n not in semigroup_elements(g, 200)) for g in sgs}

    ent = []
    for _ in range(200):
        A = [_rational(rng) for _ in range(rng.randint(1, 4))]
        B = [_rational(rng) for _ in range(rng.randint(1, 4))]
        ent.append({"A": [str(a) for a in A], "B": [str(b) for b in B], "entails": valuation_entails(A, B)})
    # small-prime instances so both verdicts are common
    for _ in range(200):
        A = [Fraction(2 ** rng.randint(-2, 3) * 3 ** rng.randint(-2, 2) * 5 ** rng.randint(-1, 1)) for _ in range(rng.randint(1, 3))]
        B = [Fraction(2 ** rng.randint(-2, 3) * 3 ** rng.randint(-2, 2) * 5 ** rng.randint(-1, 1)) for _ in range(rng.randint(1, 3))]
        ent.append({"A": [str(a) for a in A], "B": [str(b) for b in B], "entails": valuation_entails(A, B)})
    out["entailment"] = ent

    members = []
    for gens in [(2, 3), (3, 5)]:
        for _ in range(100):
            A = sorted({rng.randint(-6, 12) for _ in range(rng.randint(1, 3))})
            b = rng.randint(-6, 20)
            members.append({"S": list(gens), "A": A, "b": b, "s": s_member(gens, A, b), "v": v_member(gens, A, b)})
    out["semigroup_membership"] = members

    dyn = []
    for _ in range(150):
        A = [Fraction(rng.choice([2, 3, 5, 7]) ** rng.randint(0, 3) * rng.choice([1, 2, 3, 5, 7]) ** rng.randint(0, 2)) for _ in range(rng.randint(1, 4))]
        a = Fraction(2 ** rng.randint(0, 3) * 3 ** rng.randint(0, 3) * 5 ** rng.randint(0, 2) * 7 ** rng.randint(0, 1))
        inverted = sorted(rng.sample([2, 3, 5, 7], rng.randint(0, 1)))
        dyn.append({"ring": inverted, "A": [str(x) for x in A], "a": str(a), "refuted_at": dyn_oracle(set(inverted), A, a)})
    out["dynamical"] = dyn

    out["window_23_0_50"] = sorted(n for n in range(0, 51) if s_dependent_brute((2, 3), n))
    out["window_46_0_20"] = sorted(n for n in range(0, 21, 2) if s_dependent_brute((4, 6), n))
    return out


if __name__ == "__main__":
    DATA.mkdir(exist_ok=True)
    (DATA / "frozen.json").write_text(json.dumps(freeze(), indent=1, sort_keys=True) + "\n")
    print("wrote", DATA / "frozen.json")
