from __future__ import annotations

import json
import random
from fractions import Fraction

import pytest

from lorkit.closure import Status
from lorkit.dynamical import (
    DynBranch,
    DynCertificate,
    DynLeaf,
    SubringOfQ,
    dyn_prove,
    membership_oracle,
    merged_branch_check,
    parse_ring,
    replay,
    ring_extend,
)
from lorkit.errors import InputError

Z = SubringOfQ()


def test_rings():
    assert str(Z) == "Z"
    assert parse_ring("Z[1/3, 1/2]") == SubringOfQ.of([2, 3])
    assert str(parse_ring("Z[1/3,1/2]")) == "Z[1/2,1/3]"
    assert ring_extend(Z, Fraction(4, 9)) == SubringOfQ.of([3])
    assert ring_extend(Z, Fraction(9, 4)) == SubringOfQ.of([2])
    assert Fraction(5, 6) in SubringOfQ.of([2, 3]) and Fraction(1, 5) not in SubringOfQ.of([2, 3])
    for bad in ("Q", "Z[2]", "Z[1/2"):
        with pytest.raises(InputError):
            parse_ring(bad)


def test_worked_example():
    res = dyn_prove(Z, [4, 9], 6)
    assert res.status is Status.TRUE and res.certificate.depth == 1
    tree = res.certificate.tree
    assert isinstance(tree, DynBranch) and tree.z == Fraction(2, 3)
    assert replay(res.certificate) and merged_branch_check(res.certificate)
    assert res.render() == "Proved (depth 1)"


def test_refutation_and_trivial_proof():
    res = dyn_prove(Z, [4], 2)
    assert res.status is Status.FALSE and res.prime == 2 and res.render() == "Refuted at p=2"
    res = dyn_prove(Z, [1], 7)
    assert res.status is Status.TRUE and res.certificate.depth == 0
    assert dyn_prove(SubringOfQ.of([2]), [4], 1).status is Status.TRUE


def test_depth_budget():
    # four relevant primes need depth three
    A = [Fraction(2 * 3 * 5), Fraction(2 * 3 * 7), Fraction(2 * 5 * 7), Fraction(3 * 5 * 7)]
    res = dyn_prove(Z, A, 1, depth=1)
    assert res.status is Status.UNKNOWN and "budget 1" in res.render()
    assert dyn_prove(Z, A, 1, depth=3).status is Status.TRUE


def test_tampered_certificates_fail():
    cert = dyn_prove(Z, [4, 9], 6).certificate
    bad_leaf = DynBranch(Fraction(2, 3), DynLeaf(Fraction(9), Fraction(2, 3)), DynLeaf(Fraction(4), Fraction(2)))
    assert not replay(DynCertificate(Z, cert.ideal, cert.target, bad_leaf))
    outside = DynBranch(Fraction(2, 3), DynLeaf(Fraction(5), Fraction(6, 5)), cert.tree.inverse)
    assert not replay(DynCertificate(Z, cert.ideal, cert.target, outside))
    assert not replay(cert, Z, [4, 9], 7)
    assert not replay(DynCertificate(Z, (Fraction(4),), Fraction(2), None))
    assert replay(DynCertificate(Z, (Fraction(1),), Fraction(3), None))
    with pytest.raises(InputError):
        replay(DynBranch(Fraction(-1), None, None), Z, [1], 1)


def test_json_round_trip():
    cert = dyn_prove(Z, [4, 9], 6).certificate
    data = json.loads(cert.dumps())
    assert data["kind"] == "dyn" and data["tree"]["split"] == "2/3"
    back = DynCertificate.from_json(data)
    assert back == cert and replay(back)


@pytest.mark.parametrize(
    "obj",
    [
        {"kind": "prufer"},
        {"kind": "dyn", "ring": [], "ideal": ["4"]},
        {"kind": "dyn", "ring": [], "ideal": ["4"], "target": "2", "tree": {"leaf": {"generator": "4"}}},
        {"kind": "dyn", "ring": [], "ideal": ["4"], "target": "2", "tree": {"oops": 1}},
        {"kind": "dyn", "ring": [], "ideal": [4], "target": "2", "tree": {}},
        {"kind": "dyn", "ring": [], "ideal": ["4"], "target": "x", "tree": {}},
    ],
)
def test_malformed_certificates(obj):
    with pytest.raises(InputError):
        DynCertificate.from_json(obj)


def test_lying_ring_annotation():
    data = json.loads(dyn_prove(Z, [4, 9], 6).certificate.dumps())
    data["tree"]["integral"]["ring"] = [5]
    with pytest.raises(InputError):
        DynCertificate.from_json(data)


def test_frozen_cases(frozen):
    for case in frozen["dynamical"]:
        I = SubringOfQ.of(case["ring"])
        A = [Fraction(x) for x in case["A"]]
        a = Fraction(case["a"])
        res = dyn_prove(I, A, a, depth=3)
        assert membership_oracle(I, A, a) == case["refuted_at"]
        if case["refuted_at"] is None:
            assert res.status is Status.TRUE and replay(res.certificate) and merged_branch_check(res.certificate)
        else:
            assert res.status is Status.FALSE and res.prime == case["refuted_at"]


def test_random_instances_decided():
    rng = random.Random(8)
    for _ in range(200):
        A = [Fraction(rng.choice([2, 3, 5, 7]) ** rng.randint(0, 2) * rng.choice([1, 2, 3, 5, 7])) for _ in range(rng.randint(1, 4))]
        a = Fraction(2 ** rng.randint(0, 2) * 3 ** rng.randint(0, 2) * 5 ** rng.randint(0, 1))
        res = dyn_prove(Z, A, a, depth=3)
        assert res.status is not Status.UNKNOWN
        if res.status is Status.TRUE:
            assert replay(res.certificate)
