"""Finite domains: a preorder R on a finite carrier with order-preserving operators.

A preorder S on a semilattice domain H is *allowable* when it contains R,
the operators stay monotone for S, and ``c S a, c S b -> c S a^b`` with ^ the
meet of H.  These are Horn conditions, so allowable preorders are closed
under intersection and the least one containing given pairs is a fixpoint.

The domain of ideals H used here is D itself when D comes with a meet table,
and otherwise the semilattice of up-set unions of D (the s-ideals): finite
sets X represented by the up-set of X, ordered by reverse inclusion, with
union as meet.  Only the order and the operators of H matter; no product of
ideals is defined.

Both Horn closures and the enumeration oracles work on bitset rows: bit b
of ``rows[a]`` is set iff a S b.

Principal-domain criterion.  For a tuple of pairs and a choice of
orientations, close R under the oriented pairs; the domain passes if the
intersection over all orientations never leaves R.  Adding pairs only
enlarges every closure, so the intersection for a tuple contains the one for
any subtuple, and the tuple of all distinct pairs decides the criterion.
"""

from __future__ import annotations

import itertools
import json
import random
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from pathlib import Path
from typing import Any

from .errors import CapabilityError, InputError

CARRIER_CAP = 6
BRUTE_FORCE_H_CAP = 7
ENUMERATION_H_CAP = 4
REPORT_PAIR_CAP = 10


# ---------------------------------------------------------------------------
# relations as bitsets


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _warshall(rows: list[int]) -> list[int]:
    n = len(rows)
    for k in range(n):
        bit = 1 << k
        rk = rows[k]
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= rk
    return rows


@dataclass(frozen=True)
class PreorderMatrix:
    n: int
    rows: tuple[int, ...]

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]], close: bool = True) -> PreorderMatrix:
        rows = [1 << i for i in range(n)]
        for a, b in pairs:
            rows[a] |= 1 << b
        return cls(n, tuple(_warshall(rows) if close else rows))

    @classmethod
    def full(cls, n: int) -> PreorderMatrix:
        return cls(n, ((1 << n) - 1,) * n)

    def holds(self, a: int, b: int) -> bool:
        return bool(self.rows[a] >> b & 1)

    def pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in _bits(self.rows[a])]

    def __le__(self, other: PreorderMatrix) -> bool:
        return all(r & ~s == 0 for r, s in zip(self.rows, other.rows))

    def __and__(self, other: PreorderMatrix) -> PreorderMatrix:
        return PreorderMatrix(self.n, tuple(r & s for r, s in zip(self.rows, other.rows)))

    def minus(self, other: PreorderMatrix) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in _bits(self.rows[a] & ~other.rows[a])]

    @property
    def reflexive(self) -> bool:
        return all(self.rows[i] >> i & 1 for i in range(self.n))

    @property
    def transitive(self) -> bool:
        return all(self.rows[b] & ~self.rows[a] == 0 for a in range(self.n) for b in _bits(self.rows[a]))

    def to_lists(self) -> list[list[int]]:
        return [[int(self.holds(a, b)) for b in range(self.n)] for a in range(self.n)]


# ---------------------------------------------------------------------------
# domains


@dataclass(frozen=True)
class FiniteDomain:
    """Carrier labels, preorder R, generating operators, optional meet table.

    Operators and the meet are given by index tables.  Only generators of the
    operator monoid are stored: every condition here holds for a composite
    as soon as it holds for the factors.
    """

    carrier: tuple[str, ...]
    R: PreorderMatrix
    operators: tuple[tuple[int, ...], ...] = ()
    meet: tuple[tuple[int, ...], ...] | None = None
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        n = len(self.carrier)
        if n == 0:
            raise InputError("a domain needs a nonempty carrier")
        if len(set(self.carrier)) != n:
            raise InputError("carrier labels must be distinct")
        if self.R.n != n:
            raise InputError("relation size does not match the carrier")
        if not self.R.reflexive:
            raise InputError("R is not reflexive")
        if not self.R.transitive:
            raise InputError("R is not transitive")
        for f in self.operators:
            if len(f) != n or not all(0 <= v < n for v in f):
                raise InputError(f"operator table {list(f)} is not a map on the carrier")
            for a, b in self.R.pairs():
                if not self.R.holds(f[a], f[b]):
                    raise InputError(f"operator {list(f)} is not monotone at {self.carrier[a]}, {self.carrier[b]}")
        if self.meet is not None:
            self._check_meet()

    def _check_meet(self) -> None:
        n, R, m = len(self.carrier), self.R, self.meet
        assert m is not None
        if len(m) != n or any(len(row) != n or not all(0 <= v < n for v in row) for row in m):
            raise InputError("meet table must be an n x n table of carrier indices")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if R.holds(c, m[a][b]) != (R.holds(c, a) and R.holds(c, b)):
                        raise InputError(f"meet of {self.carrier[a]}, {self.carrier[b]} is not a greatest lower bound at {self.carrier[c]}")
                for f in self.operators:
                    lhs, rhs = f[m[a][b]], m[f[a]][f[b]]
                    if not (R.holds(lhs, rhs) and R.holds(rhs, lhs)):
                        raise InputError(f"operator {list(f)} does not preserve the meet")

    @property
    def size(self) -> int:
        return len(self.carrier)

    def index(self, label: Any) -> int:
        try:
            return self.carrier.index(str(label))
        except ValueError:
            raise InputError(f"{label!r} is not in the carrier {list(self.carrier)}") from None

    def unordered_pairs(self) -> list[tuple[int, int]]:
        return list(itertools.combinations(range(self.size), 2))

    @cached_property
    def ideal_domain(self) -> IdealDomain:
        return IdealDomain.of(self)

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "carrier": list(self.carrier),
            "relation": [[self.carrier[a], self.carrier[b]] for a, b in self.R.pairs() if a != b],
            "operators": [[self.carrier[v] for v in f] for f in self.operators],
        }
        if self.meet is not None:
            out["meet"] = [[self.carrier[v] for v in row] for row in self.meet]
        return out


@dataclass(frozen=True)
class IdealDomain:
    """The semilattice H the allowable preorders live on, with B embedded."""

    size: int
    R: tuple[int, ...]
    meet: tuple[tuple[int, ...], ...]
    operators: tuple[tuple[int, ...], ...]
    embed: tuple[int, ...]

    @classmethod
    def of(cls, D: FiniteDomain) -> IdealDomain:
        n = D.size
        if D.meet is not None:
            return cls(n, D.R.rows, D.meet, D.operators, tuple(range(n)))
        # s-ideals: up-sets of nonempty subsets, closed under union
        up = [D.R.rows[a] for a in range(n)]
        found = set(up)
        while True:
            more = {x | y for x in found for y in found} - found
            if not more:
                break
            found |= more
        elems = sorted(found, key=lambda x: (bin(x).count("1"), x))
        pos = {x: i for i, x in enumerate(elems)}
        m = len(elems)
        # X <= Y iff Y is contained in X
        R = tuple(sum(1 << j for j, y in enumerate(elems) if y & ~x == 0) for x in elems)
        meet = tuple(tuple(pos[x | y] for y in elems) for x in elems)

        def image(f: Sequence[int], x: int) -> int:
            out = 0
            for b in _bits(x):
                out |= up[f[b]]
            return out

        ops = tuple(tuple(pos[image(f, x)] for x in elems) for f in D.operators)
        return cls(m, R, meet, ops, tuple(pos[u] for u in up))


# ---------------------------------------------------------------------------
# closure


def _horn_closure(H: IdealDomain, rows: list[int]) -> list[int]:
    """Least allowable preorder of H containing ``rows``."""
    n, meet, ops = H.size, H.meet, H.operators
    rows = [r | H.R[i] | 1 << i for i, r in enumerate(rows)]
    changed = True
    while changed:
        before = list(rows)
        _warshall(rows)
        for f in ops:
            for a in range(n):
                fa = f[a]
                for b in _bits(rows[a]):
                    rows[fa] |= 1 << f[b]
        for c in range(n):
            up = list(_bits(rows[c]))
            for i, a in enumerate(up):
                ma = meet[a]
                for b in up[i + 1 :]:
                    rows[c] |= 1 << ma[b]
        changed = rows != before
    return rows


def _embed_pairs(D: FiniteDomain, H: IdealDomain, pairs: Iterable[tuple[int, int]]) -> list[int]:
    rows = [0] * H.size
    for a, b in pairs:
        rows[H.embed[a]] |= 1 << H.embed[b]
    return rows


def _restrict(D: FiniteDomain, H: IdealDomain, rows: Sequence[int]) -> PreorderMatrix:
    e = H.embed
    return PreorderMatrix(D.size, tuple(sum(1 << b for b in range(D.size) if rows[e[a]] >> e[b] & 1) for a in range(D.size)))


def _index_pairs(D: FiniteDomain, pairs: Iterable[tuple[Any, Any]]) -> list[tuple[int, int]]:
    return [(D.index(a), D.index(b)) for a, b in pairs]


def allowable_closure(D: FiniteDomain, pairs: Iterable[tuple[Any, Any]] = ()) -> PreorderMatrix:
    """Intersection of the allowable preorders containing R and the pairs, restricted to D.

    Pairs are given by carrier labels.
    """
    H = D.ideal_domain
    return _restrict(D, H, _horn_closure(H, _embed_pairs(D, H, _index_pairs(D, pairs))))


# ---------------------------------------------------------------------------
# enumeration oracles


@lru_cache(maxsize=None)
def _all_preorders(n: int) -> tuple[tuple[int, ...], ...]:
    cells = [(a, b) for a in range(n) for b in range(n) if a != b]
    out = []
    for mask in range(1 << len(cells)):
        rows = [1 << i for i in range(n)]
        for k, (a, b) in enumerate(cells):
            if mask >> k & 1:
                rows[a] |= 1 << b
        if all(rows[b] & ~rows[a] == 0 for a in range(n) for b in _bits(rows[a])):
            out.append(tuple(rows))
    return tuple(out)


def _is_allowable(H: IdealDomain, rows: Sequence[int]) -> bool:
    n = H.size
    if any(H.R[i] & ~rows[i] for i in range(n)):
        return False
    for f in H.operators:
        for a in range(n):
            for b in _bits(rows[a]):
                if not rows[f[a]] >> f[b] & 1:
                    return False
    for c in range(n):
        for a in _bits(rows[c]):
            for b in _bits(rows[c]):
                if not rows[c] >> H.meet[a][b] & 1:
                    return False
    return True


def allowable_preorders(D: FiniteDomain) -> list[tuple[int, ...]]:
    """Every allowable preorder of H, by testing all preorders of H."""
    H = D.ideal_domain
    if H.size > ENUMERATION_H_CAP:
        raise CapabilityError(f"preorder enumeration is capped at |H| <= {ENUMERATION_H_CAP} (|H| = {H.size})")
    return [rows for rows in _all_preorders(H.size) if _is_allowable(H, rows)]


def enumerated_closure(D: FiniteDomain, pairs: Iterable[tuple[Any, Any]] = (), preorders: Sequence[tuple[int, ...]] | None = None) -> PreorderMatrix:
    H = D.ideal_domain
    preorders = allowable_preorders(D) if preorders is None else preorders
    want = _embed_pairs(D, H, _index_pairs(D, pairs))
    acc = [(1 << H.size) - 1] * H.size
    for rows in preorders:
        if all(w & ~r == 0 for w, r in zip(want, rows)):
            acc = [x & r for x, r in zip(acc, rows)]
    return _restrict(D, H, acc)


def _total_preorders(n: int, base: Sequence[int]) -> Iterator[list[int]]:
    """Total preorders of {0..n-1} containing ``base``, as ordered partitions.

    Blocks are laid out from the bottom; a block may only be placed once
    everything below its members in ``base`` is placed.
    """
    below = [sum(1 << a for a in range(n) if base[a] >> b & 1) for b in range(n)]
    everything = (1 << n) - 1

    def extend(placed: int, blocks: list[int]) -> Iterator[list[int]]:
        if placed == everything:
            rows, above = [0] * n, everything
            for block in blocks:
                for a in _bits(block):
                    rows[a] = above
                above &= ~block
            yield rows
            return
        rest = everything & ~placed
        sub = rest
        while sub:
            if all(below[b] & ~(placed | sub) == 0 for b in _bits(sub)):
                yield from extend(placed | sub, blocks + [sub])
            sub = (sub - 1) & rest

    yield from extend(0, [])


@dataclass(frozen=True)
class BruteForceResult:
    holds: bool
    orders: int
    extra: tuple[tuple[str, str], ...]

    def __bool__(self) -> bool:
        return self.holds


def bruteforce_report(D: FiniteDomain) -> BruteForceResult:
    if D.size > CARRIER_CAP:
        raise CapabilityError(f"carrier size {D.size} exceeds the cap {CARRIER_CAP}")
    H = D.ideal_domain
    if H.size > BRUTE_FORCE_H_CAP:
        raise CapabilityError(f"ideal domain size {H.size} exceeds the brute-force cap {BRUTE_FORCE_H_CAP}")
    acc = [(1 << D.size) - 1] * D.size
    count = 0
    for rows in _total_preorders(H.size, H.R):
        if _is_allowable(H, rows):
            count += 1
            acc = [x & r for x, r in zip(acc, _restrict(D, H, rows).rows)]
    meet = PreorderMatrix(D.size, tuple(acc))
    extra = tuple((D.carrier[a], D.carrier[b]) for a, b in meet.minus(D.R))
    return BruteForceResult(not extra, count, extra)


def hauptbereich_bruteforce(D: FiniteDomain) -> bool:
    """R is the intersection of the restrictions of allowable total preorders of H."""
    return bruteforce_report(D).holds


# ---------------------------------------------------------------------------
# criterion


@dataclass(frozen=True)
class CriterionResult:
    holds: bool
    defeating: tuple[tuple[str, str], ...] | None = None
    extra: tuple[tuple[str, str], ...] = ()
    closures: int = 0

    def __bool__(self) -> bool:
        return self.holds


def _tuple_meet(D: FiniteDomain, H: IdealDomain, base: list[int], pairs: Sequence[tuple[int, int]], counter: list[int]) -> list[int]:
    """Intersection over all orientations of the closures of base + oriented pairs (on H)."""
    acc = [(1 << H.size) - 1] * H.size
    for signs in itertools.product((0, 1), repeat=len(pairs)):
        rows = list(base)
        for (a, b), s in zip(pairs, signs):
            x, y = (H.embed[a], H.embed[b]) if s == 0 else (H.embed[b], H.embed[a])
            rows[x] |= 1 << y
        counter[0] += 1
        rows = _horn_closure(H, rows)
        acc = [u & r for u, r in zip(acc, rows)]
    return acc


def _pruned_meet(D: FiniteDomain, H: IdealDomain, target: PreorderMatrix, counter: list[int]) -> list[int] | None:
    """Intersection over orientations of all pairs, walked depth first.

    When the current closure already orders a pair one way, the other
    orientation only yields larger leaves and is skipped.  Returns None as
    soon as the running intersection is inside ``target``.
    """
    pairs = [(H.embed[a], H.embed[b]) for a, b in D.unordered_pairs()]
    acc = [(1 << H.size) - 1] * H.size

    def inside() -> bool:
        return _restrict(D, H, acc) <= target

    def walk(rows: list[int], i: int) -> bool:
        nonlocal acc
        while i < len(pairs) and (rows[pairs[i][0]] >> pairs[i][1] & 1 or rows[pairs[i][1]] >> pairs[i][0] & 1):
            i += 1
        if i == len(pairs):
            acc = [u & r for u, r in zip(acc, rows)]
            return inside()
        a, b = pairs[i]
        for x, y in ((a, b), (b, a)):
            nxt = list(rows)
            nxt[x] |= 1 << y
            counter[0] += 1
            if walk(_horn_closure(H, nxt), i + 1):
                return True
        return False

    counter[0] += 1
    return None if walk(_horn_closure(H, [0] * H.size), 0) else acc


def criterion_report(D: FiniteDomain, exhaustive: bool = False, cap: int = CARRIER_CAP) -> CriterionResult:
    """Decide the principal-domain criterion and name the first defeating tuple.

    ``exhaustive=True`` runs every tuple of distinct pairs in (size, lex)
    order with every orientation, exactly as the criterion is stated.
    """
    if D.size > cap:
        raise CapabilityError(f"carrier size {D.size} exceeds the cap {cap}")
    H = D.ideal_domain
    base = _horn_closure(H, [0] * H.size)
    counter = [0]
    all_pairs = D.unordered_pairs()

    def tuples() -> Iterator[tuple[tuple[int, int], ...]]:
        for e in range(len(all_pairs) + 1):
            yield from itertools.combinations(all_pairs, e)

    def label(ps: Iterable[tuple[int, int]]) -> tuple[tuple[str, str], ...]:
        return tuple((D.carrier[a], D.carrier[b]) for a, b in ps)

    if exhaustive:
        for tup in tuples():
            meet = _restrict(D, H, _tuple_meet(D, H, base, tup, counter))
            if not meet <= D.R:
                return CriterionResult(False, label(tup), label(meet.minus(D.R)), counter[0])
        return CriterionResult(True, closures=counter[0])

    if _pruned_meet(D, H, D.R, counter) is None:
        return CriterionResult(True, closures=counter[0])
    if len(all_pairs) > REPORT_PAIR_CAP:
        meet = _restrict(D, H, _tuple_meet(D, H, base, all_pairs, counter))
        return CriterionResult(False, label(all_pairs), label(meet.minus(D.R)), counter[0])
    for tup in tuples():
        meet = _restrict(D, H, _tuple_meet(D, H, base, tup, counter))
        if not meet <= D.R:
            return CriterionResult(False, label(tup), label(meet.minus(D.R)), counter[0])
    raise AssertionError("the full tuple defeats the criterion but no tuple was found")  # pragma: no cover


def hauptbereich_criterion(D: FiniteDomain, exhaustive: bool = False, cap: int = CARRIER_CAP) -> bool:
    return criterion_report(D, exhaustive=exhaustive, cap=cap).holds


# ---------------------------------------------------------------------------
# construction and loading


def make_domain(
    carrier: Sequence[Any],
    relation: Iterable[tuple[Any, Any]] = (),
    operators: Iterable[Sequence[Any]] = (),
    meet: Sequence[Sequence[Any]] | None = None,
    name: str = "",
) -> FiniteDomain:
    """Build a domain from labels; R is the reflexive-transitive closure of ``relation``."""
    labels = tuple(str(c) for c in carrier)
    pos = {c: i for i, c in enumerate(labels)}

    def idx(x: Any) -> int:
        try:
            return pos[str(x)]
        except KeyError:
            raise InputError(f"{x!r} is not in the carrier {list(labels)}") from None

    R = PreorderMatrix.from_pairs(len(labels), [(idx(a), idx(b)) for a, b in relation])
    ops = tuple(tuple(idx(v) for v in f) for f in operators)
    mt = None if meet is None else tuple(tuple(idx(v) for v in row) for row in meet)
    return FiniteDomain(labels, R, ops, mt, name)


def domain_from_dict(obj: Any, name: str = "") -> FiniteDomain:
    if not isinstance(obj, dict) or "carrier" not in obj:
        raise InputError("a domain needs a 'carrier' list")
    unknown = set(obj) - {"carrier", "relation", "operators", "meet", "name"}
    if unknown:
        raise InputError(f"unknown domain keys {sorted(unknown)}")
    ops = obj.get("operators", [])
    if isinstance(ops, dict):
        ops = [ops[k] for k in sorted(ops)]
    try:
        return make_domain(obj["carrier"], [tuple(p) for p in obj.get("relation", [])], ops, obj.get("meet"), obj.get("name", name))
    except (TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"malformed domain: {exc}") from None


def load_domain(path: str | Path) -> FiniteDomain:
    """Read a domain from TOML (``.toml``) or JSON (anything else)."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        if path.suffix == ".toml":
            try:
                import tomllib
            except ModuleNotFoundError:  # Python 3.10
                import tomli as tomllib

            obj = tomllib.loads(text)
        else:
            obj = json.loads(text)
    except ValueError as exc:
        raise InputError(f"cannot parse {path}: {exc}") from None
    return domain_from_dict(obj, path.stem)


# ---------------------------------------------------------------------------
# populations


def singleton_domain() -> FiniteDomain:
    return make_domain(["a"], meet=[["a"]], name="singleton")


def chain_domain() -> FiniteDomain:
    return make_domain(["a", "b"], [("a", "b")], meet=[["a", "a"], ["a", "b"]], name="2-chain")


def vee_domain() -> FiniteDomain:
    """Two incomparable elements and their meet."""
    return make_domain(
        ["m", "a", "b"], [("m", "a"), ("m", "b")], meet=[["m", "m", "m"], ["m", "a", "m"], ["m", "m", "b"]], name="antichain-with-meet"
    )


def semigroup_fragment(generators: Sequence[int] = (2, 3), top: int = 3) -> FiniteDomain:
    """{0, ..., top} with a R b iff b - a lies in the semigroup or b = top; x -> min(x+1, top)."""
    from .groups import NumericalSemigroup

    S = NumericalSemigroup(tuple(generators))
    carrier = list(range(top + 1))
    rel = [(a, b) for a in carrier for b in carrier if b == top or (b >= a and (b - a) in S)]
    shift = [min(x + 1, top) for x in carrier]
    return make_domain(carrier, rel, [shift], name=f"fragment {S} up to {top}")


def _is_semilattice(n: int, rows: Sequence[int]) -> tuple[tuple[int, ...], ...] | None:
    """Canonical meet table (least index in the glb class), or None."""
    table = []
    for a in range(n):
        row = []
        for b in range(n):
            lower = [c for c in range(n) if rows[c] >> a & 1 and rows[c] >> b & 1]
            glb = [c for c in lower if all(rows[d] >> c & 1 for d in lower)]
            if not glb:
                return None
            row.append(min(glb))
        table.append(tuple(row))
    return tuple(table)


def _valid_operators(n: int, rows: Sequence[int], meet: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    out = []
    for f in itertools.product(range(n), repeat=n):
        if any(not rows[f[a]] >> f[b] & 1 for a in range(n) for b in _bits(rows[a])):
            continue
        ok = True
        for a in range(n):
            for b in range(n):
                x, y = f[meet[a][b]], meet[f[a]][f[b]]
                if not (rows[x] >> y & 1 and rows[y] >> x & 1):
                    ok = False
        if ok:
            out.append(f)
    return out


def all_semilattice_domains(n: int, max_operators: int = 2) -> Iterator[FiniteDomain]:
    """Every semilattice preorder on n labelled points with 0..max_operators generators.

    Generating sets are sets of distinct non-identity maps; the meet table
    uses the least-index representative of each glb class.
    """
    identity = tuple(range(n))
    labels = [str(i) for i in range(n)]
    for rows in _all_preorders(n):
        meet = _is_semilattice(n, rows)
        if meet is None:
            continue
        R = PreorderMatrix(n, rows)
        ops = [f for f in _valid_operators(n, rows, meet) if f != identity]
        for k in range(max_operators + 1):
            for gens in itertools.combinations(ops, k):
                yield FiniteDomain(tuple(labels), R, gens, meet)


def random_semilattice_domain(n: int, rng: random.Random, max_operators: int = 2) -> FiniteDomain:
    while True:
        rows = [1 << i for i in range(n)]
        for a in range(n):
            for b in range(n):
                if a != b and rng.random() < 0.3:
                    rows[a] |= 1 << b
        rows = _warshall(rows)
        meet = _is_semilattice(n, rows)
        if meet is not None:
            break
    identity = tuple(range(n))
    ops = [f for f in _valid_operators(n, rows, meet) if f != identity]
    k = min(len(ops), rng.randint(0, max_operators))
    gens = tuple(rng.sample(ops, k))
    return FiniteDomain(tuple(str(i) for i in range(n)), PreorderMatrix(n, tuple(rows)), gens, meet)


def domain_population(seed: int = 0, random_count: int = 200, max_size: int = 3, random_size: int = 4) -> Iterator[FiniteDomain]:
    for n in range(1, max_size + 1):
        yield from all_semilattice_domains(n)
    rng = random.Random(seed)
    for _ in range(random_count):
        yield random_semilattice_domain(random_size, rng)
