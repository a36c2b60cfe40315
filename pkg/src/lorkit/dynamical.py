"""Dynamical proofs of ideal membership over subrings of Q.

To show ``a in A*R`` without choosing a valuation ring, split on an element
z: in R[z] and in R[1/z] separately, prove the membership, splitting again if
needed.  A leaf claims *principal* membership ``a in a_i * R'``, i.e. that the
cofactor a / a_i lies in the leaf's ring R'.  Every valuation ring over R
contains z or 1/z, so it contains the ring of some leaf, and the principal
memberships at the leaves add up to ``a in A*V`` for every such V.

Over R = Z[1/P] the split on z = p^k/q^l inverts q on one side and p on the
other, independently of k and l (Bezout gives 1/q^l in Z[z]).  The search
therefore only tries quotients p/q of distinct non-inverted primes, with
iterative deepening.  When the target is in the ideal and n relevant primes
are not yet inverted, depth n - 1 always suffices.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any, Union

from .closure import Status
from .errors import InputError
from .groups import as_rational, format_rational, parse_rational, primes_of
from .valuations import value


@dataclass(frozen=True)
class SubringOfQ:
    """Z with the primes in ``inverted`` made units."""

    inverted: frozenset[int] = frozenset()

    @classmethod
    def of(cls, primes: Iterable[int] = ()) -> SubringOfQ:
        return cls(frozenset(primes))

    def __contains__(self, a: Any) -> bool:
        return primes_of(as_rational(a).denominator) <= self.inverted

    def __str__(self) -> str:
        if not self.inverted:
            return "Z"
        return "Z[" + ",".join(f"1/{p}" for p in sorted(self.inverted)) + "]"


def parse_ring(text: str) -> SubringOfQ:
    """``Z`` or ``Z[1/2,1/3]``."""
    text = text.replace(" ", "")
    if text == "Z":
        return SubringOfQ()
    if not (text.startswith("Z[") and text.endswith("]")):
        raise InputError(f"cannot parse ring {text!r}; expected Z or Z[1/p,...]")
    primes = []
    for part in text[2:-1].split(","):
        if not part.startswith("1/"):
            raise InputError(f"cannot parse ring {text!r}")
        primes.append(int(part[2:]))
    return SubringOfQ.of(primes)


def ring_extend(I: SubringOfQ, z: Any) -> SubringOfQ:
    """I[z]: adds the primes of z's denominator."""
    z = as_rational(z)
    return SubringOfQ(I.inverted | primes_of(z.denominator))


def membership_oracle(I: SubringOfQ, A: Sequence[Fraction], a: Fraction) -> int | None:
    """Least non-inverted prime p with v_p(a) < min v_p(A), or None if a in A*I."""
    for p in sorted(primes_of(*A, a) - I.inverted):
        if value(p, a) < min(value(p, x) for x in A):
            return p
    return None


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class DynLeaf:
    generator: Fraction
    cofactor: Fraction


@dataclass(frozen=True)
class DynBranch:
    z: Fraction
    integral: DynNode
    inverse: DynNode


DynNode = Union[DynLeaf, DynBranch, None]


def node_to_json(node: DynNode, ring: SubringOfQ) -> dict[str, Any]:
    if node is None:
        return {}
    base = {"ring": sorted(ring.inverted)}
    if isinstance(node, DynLeaf):
        return {**base, "leaf": {"generator": format_rational(node.generator), "cofactor": format_rational(node.cofactor)}}
    return {
        **base,
        "split": format_rational(node.z),
        "integral": node_to_json(node.integral, ring_extend(ring, node.z)),
        "inverse": node_to_json(node.inverse, ring_extend(ring, 1 / node.z)),
    }


def _rat(obj: Any) -> Fraction:
    if not isinstance(obj, str):
        raise InputError(f"expected a rational literal, got {obj!r}")
    return parse_rational(obj)


def node_from_json(obj: Any) -> DynNode:
    if not isinstance(obj, dict):
        raise InputError(f"certificate node must be an object, got {type(obj).__name__}")
    if not obj:
        return None
    if "leaf" in obj:
        leaf = obj["leaf"]
        if not isinstance(leaf, dict) or set(leaf) != {"generator", "cofactor"}:
            raise InputError("leaf needs exactly 'generator' and 'cofactor'")
        return DynLeaf(_rat(leaf["generator"]), _rat(leaf["cofactor"]))
    if {"split", "integral", "inverse"} <= set(obj):
        return DynBranch(_rat(obj["split"]), node_from_json(obj["integral"]), node_from_json(obj["inverse"]))
    raise InputError(f"certificate node has neither 'leaf' nor 'split': keys {sorted(obj)}")


def _ring_tags(obj: Any) -> Iterable[tuple[Any, ...]]:
    if isinstance(obj, dict) and obj:
        yield tuple(obj.get("ring", ()))
        for key in ("integral", "inverse"):
            if key in obj:
                yield from _ring_tags(obj[key])


@dataclass(frozen=True)
class DynCertificate:
    ring: SubringOfQ
    ideal: tuple[Fraction, ...]
    target: Fraction
    tree: DynNode

    @property
    def depth(self) -> int:
        return _depth(self.tree)

    def to_json(self) -> dict[str, Any]:
        return {
            "kind": "dyn",
            "ring": sorted(self.ring.inverted),
            "ideal": [format_rational(x) for x in self.ideal],
            "target": format_rational(self.target),
            "tree": node_to_json(self.tree, self.ring),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, obj: Any) -> DynCertificate:
        if not isinstance(obj, dict) or obj.get("kind") != "dyn":
            raise InputError("not a dynamical certificate (kind != 'dyn')")
        try:
            ring = SubringOfQ.of(int(p) for p in obj["ring"])
            ideal = tuple(_rat(x) for x in obj["ideal"])
            target = _rat(obj["target"])
            tree = node_from_json(obj["tree"])
        except KeyError as exc:
            raise InputError(f"certificate is missing the key {exc}") from None
        except (TypeError, ValueError) as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"malformed certificate: {exc}") from None
        cert = cls(ring, ideal, target, tree)
        # stored ring annotations are informative, but must not lie
        if list(_ring_tags(obj["tree"])) != list(_ring_tags(node_to_json(tree, ring))):
            raise InputError("certificate ring annotations do not match its splits")
        return cert


def _depth(node: DynNode) -> int:
    if isinstance(node, DynBranch):
        return 1 + max(_depth(node.integral), _depth(node.inverse))
    return 0


def _check_node(node: DynNode, I: SubringOfQ, A: Sequence[Fraction], a: Fraction) -> bool:
    if node is None:
        # no split and no evidence: only the unit ideal over a ring holding a
        return Fraction(1) in A and a in I
    if isinstance(node, DynLeaf):
        return node.generator in A and node.cofactor == a / node.generator and node.cofactor in I
    if isinstance(node, DynBranch):
        if node.z <= 0:
            raise InputError(f"split element must be positive, got {node.z}")
        return _check_node(node.integral, ring_extend(I, node.z), A, a) and _check_node(
            node.inverse, ring_extend(I, 1 / node.z), A, a
        )
    raise InputError(f"not a certificate node: {node!r}")


def replay(cert: DynCertificate | DynNode, I: SubringOfQ | None = None, A: Iterable[Any] | None = None, a: Any = None) -> bool:
    """Recompute every branch extension and leaf membership."""
    if isinstance(cert, DynCertificate):
        I = cert.ring if I is None else I
        A = cert.ideal if A is None else A
        a = cert.target if a is None else a
        if I != cert.ring or set(map(as_rational, A)) != set(cert.ideal) or as_rational(a) != cert.target:
            return False
        node = cert.tree
    else:
        node = cert
    if I is None or A is None or a is None:
        raise InputError("replaying a bare tree needs the ring, ideal and target")
    return _check_node(node, I, [as_rational(x) for x in A], as_rational(a))


def _leaves(node: DynNode, ring: SubringOfQ) -> list[tuple[DynLeaf, SubringOfQ]]:
    if isinstance(node, DynLeaf):
        return [(node, ring)]
    if isinstance(node, DynBranch):
        return _leaves(node.integral, ring_extend(ring, node.z)) + _leaves(node.inverse, ring_extend(ring, 1 / node.z))
    return []


def merged_branch_check(cert: DynCertificate) -> bool:
    """At every branch, the union of the leaf rings below it proves the claim at a leaf.

    The merged ring contains every leaf ring underneath, so any leaf's
    cofactor lies in it.
    """

    def walk(node: DynNode, ring: SubringOfQ) -> bool:
        if not isinstance(node, DynBranch):
            return True
        leaves = _leaves(node, ring)
        merged = SubringOfQ(frozenset().union(*(r.inverted for _, r in leaves)))
        ok = any(cert.target / g in merged for g in cert.ideal)
        return ok and walk(node.integral, ring_extend(ring, node.z)) and walk(node.inverse, ring_extend(ring, 1 / node.z))

    return walk(cert.tree, cert.ring)


# ---------------------------------------------------------------------------
# search


@dataclass(frozen=True)
class DynResult:
    status: Status
    certificate: DynCertificate | None = None
    prime: int | None = None
    depth: int = 0

    def render(self) -> str:
        if self.status is Status.TRUE:
            assert self.certificate is not None
            return f"Proved (depth {self.certificate.depth})"
        if self.status is Status.FALSE:
            return f"Refuted at p={self.prime}"
        return f"Unknown (depth budget {self.depth} exhausted)"


def _leaf(I: SubringOfQ, A: Sequence[Fraction], a: Fraction) -> DynLeaf | None:
    for g in A:
        if a / g in I:
            return DynLeaf(g, a / g)
    return None


def _split_candidates(I: SubringOfQ, A: Sequence[Fraction], a: Fraction) -> list[Fraction]:
    primes = sorted(primes_of(*A, a) - I.inverted)
    return [Fraction(p, q) for p, q in combinations(primes, 2)]


def _prove(I: SubringOfQ, A: Sequence[Fraction], a: Fraction, depth: int) -> DynNode | bool:
    leaf = _leaf(I, A, a)
    if leaf is not None:
        return leaf
    if depth == 0:
        return False
    for z in _split_candidates(I, A, a):
        left = _prove(ring_extend(I, z), A, a, depth - 1)
        if left is False:
            continue
        right = _prove(ring_extend(I, 1 / z), A, a, depth - 1)
        if right is False:
            continue
        return DynBranch(z, left, right)  # type: ignore[arg-type]
    return False


def dyn_prove(I: SubringOfQ, A: Iterable[Any], a: Any, depth: int = 3) -> DynResult:
    A = sorted({as_rational(x) for x in A})
    a = as_rational(a)
    if not A:
        raise InputError("the ideal needs at least one generator")
    if depth < 0:
        raise InputError("depth must be nonnegative")
    p = membership_oracle(I, A, a)
    if p is not None:
        return DynResult(Status.FALSE, prime=p, depth=depth)
    for d in range(depth + 1):
        tree = _prove(I, A, a, d)
        if tree is not False:
            return DynResult(Status.TRUE, DynCertificate(I, tuple(A), a, tree), depth=depth)  # type: ignore[arg-type]
    return DynResult(Status.UNKNOWN, depth=depth)
