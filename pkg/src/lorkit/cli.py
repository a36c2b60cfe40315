"""The ``lorkit`` command line.

Exit codes: 0 true/pass, 1 false/fail, 2 unknown or budget exhausted,
64 usage error, 65 input error, 69 capability error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, NoReturn

from . import __version__
from .closure import Status, closure_window, is_r_closed, prufer_check, prufer_search, ra_member, PruferCertificate
from .domains import (
    bruteforce_report,
    chain_domain,
    criterion_report,
    domain_population,
    load_domain,
    semigroup_fragment,
    singleton_domain,
    vee_domain,
    CARRIER_CAP,
)
from .dynamical import DynCertificate, dyn_prove, membership_oracle, parse_ring, replay
from .errors import BudgetExceeded, CapabilityError, InputError, LorkitError, UsageError
from .groups import NumericalSemigroup, RationalGroup, SemigroupGroup, divides, parse_instance, parse_rational
from .ideals import SystemTag, check_axioms, ideal_meet, ideal_member, ideal_mul, mutant_t_member, parse_ideal
from .lattice import (
    embedding_faithful,
    entailment_laws,
    entails_pid,
    lattice_laws,
    oracle_for,
    parse_term,
    regularity_holds,
    term_leq,
    term_normalize,
)
from .reports import LawReport
from .valuations import (
    entails_by_valuations,
    ideal_intersection_repr,
    intersection_case,
    localization_linear_check,
    nonintegral_witness,
    nonunit_meet_check,
    valuation_additivity_check,
    valuation_ultrametric_check,
    value,
)

DEFAULT_SEED = 0
VALUED_FLAGS = {"--seed", "--samples", "--depth", "--cap"}


@dataclass
class Outcome:
    code: int
    text: str
    data: Any = None
    extra: dict[str, Any] = field(default_factory=dict)


def _verdict(flag: bool, text: str | None = None, data: Any = None) -> Outcome:
    word = "true" if flag else "false"
    return Outcome(0 if flag else 1, word if text is None else f"{word} {text}", flag if data is None else data)


def _reports(reports: Sequence[LawReport], seed: int | None, expect_fail: Sequence[str] = ()) -> Outcome:
    """Pass iff every report passes, except those named in ``expect_fail`` which must fail."""
    ok = all(r.passed != (r.name in expect_fail) for r in reports)
    lines = [] if seed is None else [f"seed: {seed}"]
    for r in reports:
        lines.append(r.render() + ("  (expected to fail)" if r.name in expect_fail else ""))
    data = {"passed": ok, "reports": [r.to_json() for r in reports]}
    return Outcome(0 if ok else 1, "\n".join(lines), data, {} if seed is None else {"seed": seed})


def _list(text: str) -> list[str]:
    items = [x.strip() for x in text.split(",") if x.strip()]
    if not items:
        raise InputError(f"expected a comma separated list, got {text!r}")
    return items


def _fmt_set(G: Any, items: Sequence[Any]) -> str:
    return "{" + ",".join(G.format(x) for x in items) + "}"


# ---------------------------------------------------------------------------
# handlers


def cmd_divides(args: argparse.Namespace) -> Outcome:
    G = parse_instance(args.instance)
    return _verdict(divides(G, args.a, args.b))


def cmd_ideal_member(args: argparse.Namespace) -> Outcome:
    I = parse_ideal(args.ideal)
    return _verdict(ideal_member(I.system, I.generators, args.element, I.group))


def _ideal_outcome(I: Any) -> Outcome:
    return Outcome(0, str(I), {"ideal": str(I), "generators": [I.group.format(g) for g in I.generators]})


def cmd_ideal_mul(args: argparse.Namespace) -> Outcome:
    return _ideal_outcome(ideal_mul(parse_ideal(args.left), parse_ideal(args.right)))


def cmd_ideal_meet(args: argparse.Namespace) -> Outcome:
    return _ideal_outcome(ideal_meet(parse_ideal(args.left), parse_ideal(args.right)))


def cmd_ideal_axioms(args: argparse.Namespace) -> Outcome:
    G = parse_instance(args.instance)
    samples = args.samples or 500
    if args.mutant:
        if not isinstance(G, RationalGroup):
            raise CapabilityError("the shipped mutant is a t-system over Q")
        return _reports([check_axioms(mutant_t_member, G, samples, args.seed)], args.seed)
    return _reports([check_axioms(args.system, G, samples, args.seed)], args.seed)


def cmd_closure_ra(args: argparse.Namespace) -> Outcome:
    I = parse_ideal(args.ideal)
    G = I.group
    res = ra_member(I.system, I.generators, args.element, G, budget=args.budget)
    data: dict[str, Any] = {"status": str(res.status), "reason": res.reason}
    if res.witness is not None:
        data["witness"] = [G.format(c) for c in res.witness.c]
        return Outcome(0, f"true witness c={_fmt_set(G, res.witness.c)}", data)
    if res.status is Status.FALSE:
        return Outcome(1, "false", data)
    return Outcome(2, f"unknown ({res.reason})", data)


def cmd_closure_closed(args: argparse.Namespace) -> Outcome:
    G = parse_instance(args.instance)
    res = is_r_closed(G, args.system, mode=args.mode, bound=args.bound, seed=args.seed)
    data: dict[str, Any] = {"status": str(res.status), "proof": res.proof}
    if res.status is Status.TRUE:
        return Outcome(0, f"true ({res.proof})", data)
    if res.status is Status.FALSE:
        assert res.witness is not None
        C, x = res.witness
        data["witness"] = {"C": [G.format(c) for c in C], "x": G.format(x)}
        return Outcome(1, f"false witness C={_fmt_set(G, C)} x={G.format(x)}", data)
    return Outcome(2, f"unknown ({res.proof})", data)


def cmd_closure_window(args: argparse.Namespace) -> Outcome:
    S = NumericalSemigroup.parse(args.semigroup)
    if args.lo > args.hi:
        raise InputError(f"empty window [{args.lo}, {args.hi}]")
    got = sorted(closure_window(S, args.lo, args.hi))
    return Outcome(0, "{" + ",".join(map(str, got)) + "}", got)


def cmd_closure_prufer(args: argparse.Namespace) -> Outcome:
    A = [parse_rational(a) for a in _list(args.ideal)]
    if args.check:
        cert = PruferCertificate.from_json(_read_json(args.check))
        return _verdict(prufer_check(args.element, A, cert))
    res = prufer_search(args.element, A)
    if isinstance(res, PruferCertificate):
        return Outcome(0, f"true {json.dumps(res.to_json(), sort_keys=True)}", {"certificate": res.to_json()})
    return Outcome(1, f"false {res}", {"prime": res.prime, "value_b": res.value_b, "value_ideal": res.value_ideal})


def _sides(tokens: Sequence[str]) -> tuple[list[str], list[str]]:
    joined = " ".join(tokens)
    if joined.count(":") != 1:
        raise InputError("expected 'A : B' with comma separated sides")
    left, right = joined.split(":")
    return _list(left.replace(" ", "")), _list(right.replace(" ", ""))


def cmd_lattice_entails(args: argparse.Namespace) -> Outcome:
    G = parse_instance(args.instance)
    A, B = _sides(args.sides)
    oracle = oracle_for(G)
    return _verdict(oracle.entails([G.coerce(a) for a in A], [G.coerce(b) for b in B]))


def cmd_lattice_leq(args: argparse.Namespace) -> Outcome:
    G = parse_instance(args.instance)
    oracle = oracle_for(G)
    return _verdict(term_leq(parse_term(args.left, G), parse_term(args.right, G), oracle, budget=args.budget))


def cmd_lattice_normalize(args: argparse.Namespace) -> Outcome:
    G = parse_instance(args.instance)
    t = term_normalize(parse_term(args.term, G), oracle_for(G), budget=args.budget)
    return Outcome(0, t.render(G), t.render(G))


def cmd_lattice_laws(args: argparse.Namespace) -> Outcome:
    G = parse_instance(args.instance)
    oracle = oracle_for(G)
    n = args.samples or 500
    reports = [lattice_laws(oracle, n, args.seed), regularity_holds(oracle, n, args.seed), entailment_laws(oracle, n, args.seed)]
    return _reports(reports, args.seed)


def cmd_lattice_faithful(args: argparse.Namespace) -> Outcome:
    G = parse_instance(args.instance)
    return _reports([embedding_faithful(G, oracle_for(G), args.samples or 500, args.seed)], args.seed)


def cmd_val_value(args: argparse.Namespace) -> Outcome:
    v = value(args.prime, parse_rational(args.element))
    return Outcome(0, str(v), v)


def cmd_val_check(args: argparse.Namespace) -> Outcome:
    n, p, seed = args.samples or 500, args.prime, args.seed
    reports = [
        valuation_additivity_check(p, n, seed),
        valuation_ultrametric_check(p, n, seed),
        localization_linear_check(p, n, seed),
        nonunit_meet_check(p, n, seed),
    ]
    return _reports(reports, seed)


def cmd_val_witness(args: argparse.Namespace) -> Outcome:
    p = nonintegral_witness(parse_rational(args.element))
    return Outcome(0, "none" if p is None else str(p), p)


def cmd_val_intersect(args: argparse.Namespace) -> Outcome:
    A = [parse_rational(a) for a in _list(args.ideal)]
    if args.element is None:
        return _reports([ideal_intersection_repr(A, args.samples or 200, args.seed)], args.seed)
    case = intersection_case(A, parse_rational(args.element))
    data = {"in_ideal": case.in_ideal, "in_localizations": case.in_localizations, "failing_prime": case.failing_prime}
    if not case.agrees:  # pragma: no cover - would contradict the theorem
        return Outcome(1, f"disagreement {data}", data)
    return _verdict(case.in_ideal, None if case.failing_prime is None else f"(fails at p={case.failing_prime})", data)


def _read_json(source: str) -> Any:
    try:
        text = sys.stdin.read() if source == "-" else open(source).read()
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except ValueError as exc:
        raise InputError(f"{source} is not JSON: {exc}") from None


def cmd_prove_dyn(args: argparse.Namespace) -> Outcome:
    ring = parse_ring(args.ring)
    res = dyn_prove(ring, [parse_rational(a) for a in _list(args.ideal)], parse_rational(args.target), args.depth if args.depth is not None else 3)
    text = res.render()
    data: dict[str, Any] = {"verdict": {Status.TRUE: "proved", Status.FALSE: "refuted", Status.UNKNOWN: "unknown"}[res.status]}
    if res.certificate is not None:
        data["certificate"] = res.certificate.to_json()
        text += "\n" + res.certificate.dumps()
        if args.cert:
            with open(args.cert, "w") as fh:
                fh.write(res.certificate.dumps() + "\n")
    if res.prime is not None:
        data["prime"] = res.prime
    return Outcome({Status.TRUE: 0, Status.FALSE: 1, Status.UNKNOWN: 2}[res.status], text, data)


def cmd_prove_replay(args: argparse.Namespace) -> Outcome:
    obj = _read_json(args.certificate)
    # accept the bare certificate or the JSON output of `prove dyn`
    if isinstance(obj, dict) and isinstance(obj.get("result"), dict) and "certificate" in obj["result"]:
        obj = obj["result"]["certificate"]
    return _verdict(replay(DynCertificate.from_json(obj)))


BUILTIN_DOMAINS: dict[str, Callable[[], Any]] = {
    "singleton": singleton_domain,
    "chain": chain_domain,
    "vee": vee_domain,
    "fragment": semigroup_fragment,
}


def cmd_prove_domain(args: argparse.Namespace) -> Outcome:
    if (args.domain is None) == (args.builtin is None):
        raise UsageError("give exactly one of --domain FILE or --builtin NAME")
    D = load_domain(args.domain) if args.domain else BUILTIN_DOMAINS[args.builtin]()
    cap = args.cap if args.cap is not None else CARRIER_CAP
    if D.size > cap:
        raise CapabilityError(f"carrier size {D.size} exceeds the cap {cap}")
    if args.method == "bruteforce":
        bf = bruteforce_report(D)
        extra = "" if bf.holds else " adds " + " ".join(f"({a},{b})" for a, b in bf.extra)
        return _verdict(bf.holds, f"({bf.orders} allowable orders){extra}", {"holds": bf.holds, "extra": [list(p) for p in bf.extra]})
    res = criterion_report(D, exhaustive=args.exhaustive, cap=cap)
    data: dict[str, Any] = {"holds": res.holds, "closures": res.closures}
    if res.holds:
        return _verdict(True, None, data)
    assert res.defeating is not None
    data["defeating"] = [list(p) for p in res.defeating]
    data["extra"] = [list(p) for p in res.extra]
    tup = " ".join(f"({a},{b})" for a, b in res.defeating)
    extra = " ".join(f"({a},{b})" for a, b in res.extra)
    return _verdict(False, f"pairs {tup} add {extra}", data)


# ---------------------------------------------------------------------------
# selftest


def _agreement(name: str, law: str, cases: Sequence[tuple[bool, dict[str, Any]]]) -> LawReport:
    report = LawReport(name)
    for ok, detail in cases:
        report.record(law, ok, **detail)
    return report


def _random_rationals(rng: random.Random, k: int) -> list[Fraction]:
    return [Fraction(rng.randint(1, 10**4), rng.randint(1, 10**4)) for _ in range(k)]


def cmd_selftest(args: argparse.Namespace) -> Outcome:
    n, seed = args.samples or 100, args.seed
    rng = random.Random(seed)
    Q = RationalGroup()
    S23, S35 = SemigroupGroup(NumericalSemigroup((2, 3))), SemigroupGroup(NumericalSemigroup((3, 5)))
    reports: list[LawReport] = []
    for tag in "svtd":
        reports.append(check_axioms(tag, Q, n, seed))
    for G in (S23, S35):
        for tag in "sv":
            reports.append(check_axioms(tag, G, n, seed))
    mutant = check_axioms(mutant_t_member, Q, n, seed)
    reports.append(mutant)
    for G in (Q, S23):
        oracle = oracle_for(G)
        reports += [lattice_laws(oracle, n, seed), regularity_holds(oracle, n, seed), entailment_laws(oracle, n, seed)]
    reports.append(embedding_faithful(Q, oracle_for(Q), n, seed))
    unfaithful = embedding_faithful(S23, oracle_for(S23), n, seed)
    reports.append(unfaithful)

    cases = []
    for _ in range(n):
        A, B = _random_rationals(rng, rng.randint(1, 4)), _random_rationals(rng, rng.randint(1, 4))
        cases.append((entails_pid(A, B) == entails_by_valuations(A, B), {"A": A, "B": B}))
    reports.append(_agreement("entails_pid vs valuations", "agree", cases))

    cases = []
    for _ in range(n):
        A = [rng.randint(1, 60) for _ in range(rng.randint(1, 3))]
        b = rng.randint(1, 60)
        res = prufer_search(b, A)
        ok = entails_pid(A, [b]) == isinstance(res, PruferCertificate)
        if isinstance(res, PruferCertificate):
            ok = ok and prufer_check(b, A, res)
        cases.append((ok, {"A": A, "b": b}))
    reports.append(_agreement("prufer vs entails_pid", "agree", cases))

    for p in (2, 3, 5, 7):
        reports += [valuation_additivity_check(p, n, seed), valuation_ultrametric_check(p, n, seed), localization_linear_check(p, n, seed)]

    cases = []
    for _ in range(n):
        A = [Fraction(rng.choice([2, 3, 5, 7]) ** rng.randint(0, 3) * rng.randint(1, 9)) for _ in range(rng.randint(1, 3))]
        a = Fraction(rng.randint(1, 300))
        res = dyn_prove(parse_ring("Z"), A, a, 3)
        truth = membership_oracle(parse_ring("Z"), A, a) is None
        ok = res.status is not Status.UNKNOWN and (res.status is Status.TRUE) == truth
        if res.certificate is not None:
            ok = ok and replay(res.certificate)
        cases.append((ok, {"A": A, "a": a}))
    reports.append(_agreement("dyn_prove vs valuations", "agree", cases))

    cases = []
    for D in domain_population(seed, random_count=n):
        c, b = criterion_report(D).holds, bruteforce_report(D).holds
        cases.append((c == b, {"domain": D.to_json()}))
    reports.append(_agreement("criterion vs bruteforce", "agree", cases))

    return _reports(reports, seed, expect_fail=[mutant.name, unfaithful.name])


# ---------------------------------------------------------------------------
# parser


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


def _common(defaults: bool) -> argparse.ArgumentParser:
    """Shared flags; subcommand copies default to SUPPRESS so top-level values survive."""
    p = _Parser(add_help=False)
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    p.add_argument("--seed", type=int, default=d(DEFAULT_SEED), help=f"random seed (default {DEFAULT_SEED})")
    p.add_argument("--samples", type=int, default=d(None), help="sample count for randomized suites")
    p.add_argument("--depth", type=int, default=d(None), help="depth budget for the dynamical prover")
    p.add_argument("--cap", type=int, default=d(None), help="carrier size cap for finite domains")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common(False)
    parser = _Parser(prog="lorkit", description="Constructive divisibility theory at desk scale.", parents=[_common(True)])
    parser.add_argument("--version", action="version", version=f"lorkit {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def leaf(group: Any, name: str, func: Callable[[argparse.Namespace], Outcome], help: str) -> argparse.ArgumentParser:
        p = group.add_parser(name, parents=[common], help=help, description=help)
        p.set_defaults(func=func)
        return p

    def nest(name: str, help: str) -> Any:
        p = sub.add_parser(name, parents=[common], help=help, description=help)
        g = p.add_subparsers(dest="action", metavar="ACTION", parser_class=_Parser)
        g.required = True
        return g

    p = leaf(sub, "divides", cmd_divides, "does a divide b")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--instance", default="Q")

    g = nest("ideal", "finite ideals of the s, v, t and d systems")
    p = leaf(g, "member", cmd_ideal_member, "membership in an ideal literal such as t{4,6}")
    p.add_argument("ideal")
    p.add_argument("element")
    for name, func in (("mul", cmd_ideal_mul), ("meet", cmd_ideal_meet)):
        p = leaf(g, name, func, f"{name} of two ideals")
        p.add_argument("left")
        p.add_argument("right")
    p = leaf(g, "axioms", cmd_ideal_axioms, "randomized ideal-system axiom suite")
    p.add_argument("--system", default="t", choices=[t.value for t in SystemTag])
    p.add_argument("--instance", default="Q")
    p.add_argument("--mutant", action="store_true", help="run the shipped broken t-system instead")

    g = nest("closure", "r_a-dependence, r-closedness, Prufer dependence")
    p = leaf(g, "ra", cmd_closure_ra, "is an element r_a-dependent on an ideal")
    p.add_argument("ideal")
    p.add_argument("element")
    p.add_argument("--budget", type=int, default=2000)
    p = leaf(g, "closed", cmd_closure_closed, "is the instance r-closed")
    p.add_argument("--instance", default="Q")
    p.add_argument("--system", default="t", choices=[t.value for t in SystemTag])
    p.add_argument("--mode", default="decide", choices=["decide", "search"])
    p.add_argument("--bound", type=int, default=200)
    p = leaf(g, "window", cmd_closure_window, "s-dependent elements of a numerical semigroup in [lo, hi]")
    p.add_argument("semigroup")
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)
    p = leaf(g, "prufer", cmd_closure_prufer, "integral dependence of b on the ideal A of Z")
    p.add_argument("element")
    p.add_argument("ideal", help="comma separated integers")
    p.add_argument("--check", metavar="FILE", help="check a certificate instead of searching")

    g = nest("lattice", "the lattice-ordered group of an entailment relation")
    p = leaf(g, "entails", cmd_lattice_entails, "does meet(A) lie below join(B): A : B")
    p.add_argument("sides", nargs="+")
    p.add_argument("--instance", default="Q")
    p = leaf(g, "leq", cmd_lattice_leq, "compare two terms")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--instance", default="Q")
    p.add_argument("--budget", type=int, default=None)
    p = leaf(g, "normalize", cmd_lattice_normalize, "normal form of a term")
    p.add_argument("term")
    p.add_argument("--instance", default="Q")
    p.add_argument("--budget", type=int, default=10_000)
    p = leaf(g, "laws", cmd_lattice_laws, "lattice, regularity and entailment law suites")
    p.add_argument("--instance", default="Q")
    p = leaf(g, "faithful", cmd_lattice_faithful, "is the group embedded faithfully")
    p.add_argument("--instance", default="Q")

    g = nest("val", "p-adic valuations and localizations")
    p = leaf(g, "value", cmd_val_value, "v_p(a)")
    p.add_argument("-p", "--prime", type=int, required=True)
    p.add_argument("element")
    p = leaf(g, "check", cmd_val_check, "valuation and localization law suites at p")
    p.add_argument("-p", "--prime", type=int, required=True)
    p = leaf(g, "witness", cmd_val_witness, "least prime with negative value, or none")
    p.add_argument("element")
    p = leaf(g, "intersect", cmd_val_intersect, "A_t against the localizations of A")
    p.add_argument("ideal", help="comma separated rationals")
    p.add_argument("element", nargs="?")

    g = nest("prove", "dynamical proofs and finite domains")
    p = leaf(g, "dyn", cmd_prove_dyn, "prove target in ideal*ring by case splits")
    p.add_argument("--ring", default="Z")
    p.add_argument("--ideal", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--cert", metavar="FILE", help="also write the certificate here")
    p = leaf(g, "replay", cmd_prove_replay, "replay a certificate (FILE or - for stdin)")
    p.add_argument("certificate")
    p = leaf(g, "domain", cmd_prove_domain, "principal-domain criterion for a finite domain")
    p.add_argument("--domain", metavar="FILE")
    p.add_argument("--builtin", choices=sorted(BUILTIN_DOMAINS))
    p.add_argument("--method", default="criterion", choices=["criterion", "bruteforce"])
    p.add_argument("--exhaustive", action="store_true", help="test every tuple of pairs literally")

    leaf(sub, "selftest", cmd_selftest, "run every invariant suite and report per-law counts")
    return parser


SHORTHANDS = {"val": ("value", {"value", "check", "witness", "intersect"}), "prove": ("dyn", {"dyn", "replay", "domain"})}


def _expand(argv: list[str]) -> list[str]:
    """``lorkit val -p 3 18/5`` means ``val value``; ``lorkit prove --ring Z ...`` means ``prove dyn``."""
    i = 0
    while i < len(argv) and argv[i].startswith("-"):
        i += 2 if argv[i] in VALUED_FLAGS else 1
    if i < len(argv) and argv[i] in SHORTHANDS:
        default, actions = SHORTHANDS[argv[i]]
        rest = argv[i + 1 :]
        if rest and not (set(rest) & (actions | {"-h", "--help"})):
            return argv[: i + 1] + [default] + rest
    return argv


def run(argv: Sequence[str] | None = None) -> tuple[int, str, str]:
    """Parse and dispatch; returns (exit code, stdout text, stderr text)."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    want_json = "--json" in argv
    try:
        args = parser.parse_args(_expand(argv))
        out = args.func(args)
    except LorkitError as exc:
        code = exc.exit_code
        kind = {64: "usage", 65: "input", 69: "capability"}.get(code, "internal")
        if isinstance(exc, BudgetExceeded):
            code, kind = 2, "budget"
        if want_json:
            return code, json.dumps({"error": {"kind": kind, "message": str(exc)}, "exit": code}, sort_keys=True), ""
        hint = f"\n{parser.format_usage().rstrip()}" if code == 64 else ""
        return code, "", f"error: {exc}{hint}"
    if getattr(args, "json", False):
        payload = {"command": " ".join(x for x in (args.command, getattr(args, "action", None)) if x), "exit": out.code, "result": out.data, **out.extra}
        return out.code, json.dumps(payload, sort_keys=True), ""
    return out.code, out.text, ""


def main(argv: Sequence[str] | None = None) -> int:
    code, out, err = run(argv)
    if out:
        print(out)
    if err:
        print(err, file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
