"""
trisolid.classify.core - Verifier registry and verdict reports.

Contains:
- verifier decorator registering a theorem-level check under a stable id
- VerdictReport / Step, the machine-checkable record of one argument
- ReportBuilder, which compares computed against expected values
- CaseRecord / FilterOutcome for enumerated classification cases

Example:

    @verifier(name="remark-final", order=230, doc="degree of the triple plane")
    def remark_final(ctx: VerificationContext) -> VerdictReport:
        report = ReportBuilder("remark-final", "...")
        report.check("S.(0,1)^2", remark_final_degree(), 3, Provenance.QUOTED)
        return report.build()
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import wraps
from typing import Any, Callable, Dict, List, Optional, Tuple

import sympy as sp

from trisolid.config import DEFAULT_WINDOW
from trisolid.errors import InvalidInputError, UnknownVerifierError
from trisolid.intersection import DivisorClass

logger = logging.getLogger(__name__)


class Provenance(Enum):
    """Where an expected value comes from."""

    QUOTED = "quoted"  # stated in the classification argument
    DERIVED = "derived"  # recomputed from the formulas
    TRIVIAL = "trivial"
    CITED = "cited"  # imported theorem, assumed not computed


@dataclass(frozen=True)
class VerificationContext:
    """Parameters shared by every verifier in a run."""

    window: int = DEFAULT_WINDOW

    def __post_init__(self) -> None:
        if self.window < 1:
            raise InvalidInputError("VerificationContext", f"window {self.window} < 1")


@dataclass(frozen=True, slots=True)
class Step:
    claim: str
    computed: Any
    expected: Any
    provenance: Provenance
    passed: bool


@dataclass(frozen=True)
class VerdictReport:
    theorem_id: str
    title: str
    steps: Tuple[Step, ...]
    notes: Tuple[str, ...] = ()

    @property
    def overall(self) -> bool:
        return all(step.passed for step in self.steps)

    def failures(self) -> List[Step]:
        return [step for step in self.steps if not step.passed]


@dataclass(frozen=True, slots=True)
class FilterOutcome:
    """Result of one filter on one case, with the values that decided it."""

    name: str
    passed: bool
    clause: str
    witness: Tuple[Tuple[str, Any], ...] = ()

    def get(self, key: str) -> Any:
        return dict(self.witness).get(key)


@dataclass(frozen=True)
class CaseRecord:
    """One row of the enumeration over P^2, annotated by the filter cascade."""

    id: int
    s: int
    b: int
    c: int
    filters: Tuple[FilterOutcome, ...] = field(default=())

    @property
    def survives(self) -> bool:
        return all(f.passed for f in self.filters)

    @property
    def first_failure(self) -> Optional[str]:
        for f in self.filters:
            if not f.passed:
                return f.name
        return None

    def filter(self, name: str) -> Optional[FilterOutcome]:
        for f in self.filters:
            if f.name == name:
                return f
        return None


def plain(value: Any) -> Any:
    """Convert a computed value to JSON-safe data; rationals become 'p/q'."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, sp.Integer):
        return int(value)
    if isinstance(value, sp.Rational):
        return f"{value.p}/{value.q}"
    if isinstance(value, DivisorClass):
        return list(value.coeffs)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, sp.Poly):
        return [plain(c) for c in value.all_coeffs()]
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [plain(v) for v in value]
        return sorted(items) if isinstance(value, (set, frozenset)) else items
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, sp.Basic):
        return str(value)
    raise TypeError(f"cannot serialise {type(value).__name__}")


class ReportBuilder:
    """Accumulates the steps of one VerdictReport."""

    def __init__(self, theorem_id: str, title: str):
        self.theorem_id = theorem_id
        self.title = title
        self._steps: List[Step] = []
        self._notes: List[str] = []

    def check(
        self, claim: str, computed: Any, expected: Any, provenance: Provenance
    ) -> bool:
        """Record a step that passes iff computed equals expected."""
        got, want = plain(computed), plain(expected)
        passed = got == want
        self._steps.append(Step(claim, got, want, provenance, passed))
        if not passed:
            logger.warning("%s: %s: got %r, expected %r", self.theorem_id, claim, got, want)
        return passed

    def cite(self, claim: str, reference: str) -> None:
        """Record an imported result as an assumed fact."""
        self._steps.append(
            Step(claim, "assumed", reference, Provenance.CITED, True)
        )

    def note(self, text: str) -> None:
        self._notes.append(text)

    def build(self) -> VerdictReport:
        report = VerdictReport(
            self.theorem_id, self.title, tuple(self._steps), tuple(self._notes)
        )
        logger.info(
            "%s: %s (%d steps)",
            self.theorem_id,
            "PASS" if report.overall else "FAIL",
            len(report.steps),
        )
        return report


# -----------------------------------------------------------------------------
# Registry
# -----------------------------------------------------------------------------

VerifierFunc = Callable[[VerificationContext], VerdictReport]

_verifiers: Dict[str, VerifierFunc] = {}


def verifier(
    name: str, order: int, doc: Optional[str] = None
) -> Callable[[Callable[[VerificationContext], VerdictReport]], VerifierFunc]:
    """
    Decorator registering a theorem-level verifier.

    Args:
        name: stable verifier id used on the command line
        order: position in `verify all`
        doc: one-line description (defaults to the docstring)
    """

    def decorator(
        func: Callable[[VerificationContext], VerdictReport],
    ) -> VerifierFunc:
        @wraps(func)
        def wrapper(ctx: VerificationContext) -> VerdictReport:
            report = func(ctx)
            if report.theorem_id != name:
                raise InvalidInputError(name, f"report claims id {report.theorem_id}")
            return report

        wrapper.verifier_name = name  # type: ignore[attr-defined]
        wrapper.verifier_order = order  # type: ignore[attr-defined]
        wrapper.verifier_doc = doc or (func.__doc__ or "").strip()  # type: ignore[attr-defined]

        _verifiers[name] = wrapper
        return wrapper

    return decorator


def get_verifier(name: str) -> Optional[VerifierFunc]:
    """Get a registered verifier by id."""
    return _verifiers.get(name)


def list_verifiers() -> List[str]:
    """All verifier ids in run order."""
    return sorted(_verifiers, key=lambda n: _verifiers[n].verifier_order)  # type: ignore[attr-defined]


def describe_verifier(name: str) -> str:
    func = _verifiers.get(name)
    if func is None:
        raise UnknownVerifierError(name, list_verifiers())
    return func.verifier_doc  # type: ignore[attr-defined]


def run_verifier(
    name: str, ctx: Optional[VerificationContext] = None
) -> VerdictReport:
    """Run one verifier, raising UnknownVerifierError for unknown ids."""
    func = _verifiers.get(name)
    if func is None:
        raise UnknownVerifierError(name, list_verifiers())
    return func(ctx or VerificationContext())


def run_all(ctx: Optional[VerificationContext] = None) -> List[VerdictReport]:
    """Every registered verifier, in run order."""
    ctx = ctx or VerificationContext()
    return [run_verifier(name, ctx) for name in list_verifiers()]
