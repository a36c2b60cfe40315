"""lorkit: systems of ideals, valuations, dynamical proofs and the free
lattice-ordered group of a divisibility group, checked at desk scale."""

from __future__ import annotations

__version__ = "0.1.0"

from .closure import Status, closure_window, is_r_closed, prufer_check, prufer_search, ra_member
from .domains import (
    FiniteDomain,
    PreorderMatrix,
    allowable_closure,
    hauptbereich_bruteforce,
    hauptbereich_criterion,
    load_domain,
    make_domain,
)
from .dynamical import DynCertificate, SubringOfQ, dyn_prove, replay, ring_extend
from .errors import BudgetExceeded, CapabilityError, InputError, LorkitError, UsageError
from .groups import (
    NumericalSemigroup,
    PrimeValuationVector,
    RationalGroup,
    SemigroupGroup,
    divides,
    factorize,
    parse_instance,
    parse_rational,
)
from .ideals import FiniteIdeal, SystemTag, check_axioms, ideal_meet, ideal_member, ideal_mul, make_ideal, parse_ideal
from .lattice import LatticeTerm, entails_pid, parse_term, term_leq, term_normalize
from .valuations import divides_by_valuations, nonintegral_witness, value

__all__ = [
    "BudgetExceeded",
    "CapabilityError",
    "DynCertificate",
    "FiniteDomain",
    "FiniteIdeal",
    "InputError",
    "LatticeTerm",
    "LorkitError",
    "NumericalSemigroup",
    "PreorderMatrix",
    "PrimeValuationVector",
    "RationalGroup",
    "SemigroupGroup",
    "Status",
    "SubringOfQ",
    "SystemTag",
    "UsageError",
    "allowable_closure",
    "check_axioms",
    "closure_window",
    "divides",
    "divides_by_valuations",
    "dyn_prove",
    "entails_pid",
    "factorize",
    "hauptbereich_bruteforce",
    "hauptbereich_criterion",
    "ideal_meet",
    "ideal_member",
    "ideal_mul",
    "is_r_closed",
    "load_domain",
    "make_domain",
    "make_ideal",
    "nonintegral_witness",
    "parse_ideal",
    "parse_instance",
    "parse_rational",
    "parse_term",
    "prufer_check",
    "prufer_search",
    "ra_member",
    "replay",
    "ring_extend",
    "term_leq",
    "term_normalize",
    "value",
]
