"""Minimum-degree-indexed Hamiltonicity conditions and circumference bounds.

Four sufficient conditions for a Hamilton cycle, each read off the sorted
degree sequence ``d_1 <= ... <= d_n`` at indices around ``delta = d_1``:

    B   2*delta >= n
    D   2*d_delta >= n
    T2  d_delta + d_{delta+1} >= n
    T4  min(2*d_{delta+1}, d_delta + d_{delta+2}) >= n

and the matching lower bounds on the circumference of a 2-connected graph
with longest-path order ``p``:

    A   min(p, 2*delta)
    C   min(p, 2*d_delta)
    T1  min(p, d_delta + d_{delta+1})
    T3  min(p, 2*d_{delta+1}, d_delta + d_{delta+2})

Each condition is at least as strong as the one before, which
``implication_audit`` re-checks on every sequence it is given.

An index past ``n`` (only ``delta + 2`` for complete graphs) makes the
whole verdict or target ``INAPPLICABLE``; a term is never dropped from a
min.  For ``delta = 0`` the value ``d_0`` is read as 0.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from enum import Enum

from .errors import ChainViolation
from .graph import INAPPLICABLE, DegreeSequence, indexed_degree

CONDITIONS = ("B", "D", "T2", "T4")
BOUNDS = ("A", "C", "T1", "T3")


class Status(str, Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    INAPPLICABLE = "Inapplicable"


@dataclass(frozen=True)
class DegreeOperands:
    """The degree-sequence entries every condition draws on (None = index past n)."""

    n: int
    delta: int
    d_delta: int | None
    d_delta1: int | None
    d_delta2: int | None

    def as_dict(self) -> dict:
        return asdict(self)


def _d(ds: DegreeSequence, k: int) -> int | None:
    if k == 0:
        return 0
    value = indexed_degree(ds, k)
    return None if value is INAPPLICABLE else value


def degree_operands(ds: DegreeSequence) -> DegreeOperands:
    if not ds.values:
        return DegreeOperands(0, 0, None, None, None)
    delta = ds.delta
    return DegreeOperands(ds.n, delta, _d(ds, delta), _d(ds, delta + 1), _d(ds, delta + 2))


@dataclass(frozen=True)
class ConditionVerdict:
    theorem: str
    status: Status
    value: int | None  # left-hand side, compared against n
    operands: DegreeOperands

    @property
    def holds(self) -> bool:
        return self.status is Status.HOLDS


@dataclass(frozen=True)
class BoundTarget:
    theorem: str
    value: int | None  # None when inapplicable
    p: int
    terms: tuple[int, ...] = field(default=())

    @property
    def applicable(self) -> bool:
        return self.value is not None


def _condition_values(ops: DegreeOperands) -> dict[str, int | None]:
    def add(*xs: int | None) -> int | None:
        return None if any(x is None for x in xs) else sum(xs)

    t4 = None
    if ops.d_delta1 is not None and ops.d_delta2 is not None and ops.d_delta is not None:
        t4 = min(2 * ops.d_delta1, ops.d_delta + ops.d_delta2)
    return {
        "B": 2 * ops.delta,
        "D": add(ops.d_delta, ops.d_delta),
        "T2": add(ops.d_delta, ops.d_delta1),
        "T4": t4,
    }


def condition_verdicts(ds: DegreeSequence, n: int) -> dict[str, ConditionVerdict]:
    """Evaluate B, D, T2 and T4 independently; keys are in that order."""
    ops = degree_operands(ds)
    out = {}
    for name, value in _condition_values(ops).items():
        if value is None or n == 0:
            status = Status.INAPPLICABLE
        else:
            status = Status.HOLDS if value >= n else Status.FAILS
        out[name] = ConditionVerdict(name, status, value, ops)
    return out


def bound_targets(ds: DegreeSequence, p: int) -> dict[str, BoundTarget]:
    """Right-hand sides of the four circumference bounds for a given p."""
    ops = degree_operands(ds)
    rhs: dict[str, tuple[int, ...] | None] = {
        "A": (2 * ops.delta,),
        "C": None if ops.d_delta is None else (2 * ops.d_delta,),
        "T1": None if ops.d_delta is None or ops.d_delta1 is None else (ops.d_delta + ops.d_delta1,),
        "T3": None,
    }
    if ops.d_delta is not None and ops.d_delta1 is not None and ops.d_delta2 is not None:
        rhs["T3"] = (2 * ops.d_delta1, ops.d_delta + ops.d_delta2)
    out = {}
    for name, terms in rhs.items():
        if terms is None or not ds.values:
            out[name] = BoundTarget(name, None, p)
        else:
            out[name] = BoundTarget(name, min((p,) + terms), p, (p,) + terms)
    return out


@dataclass(frozen=True)
class ImplicationLink:
    weaker: str
    weaker_value: int | None
    stronger: str
    stronger_value: int | None
    ok: bool


@dataclass(frozen=True)
class ImplicationReport:
    operands: DegreeOperands
    links: tuple[ImplicationLink, ...]
    hamiltonicity_gate: bool  # False for n < 3: verdicts stand, implications are not claimed

    @property
    def ok(self) -> bool:
        return all(link.ok for link in self.links)


def implication_audit(ds: DegreeSequence, n: int, *, strict: bool = True) -> ImplicationReport:
    """Check 2d_1 <= 2d_delta <= d_delta+d_{delta+1} <= min(2d_{delta+1}, d_delta+d_{delta+2})
    and the verdict implications B => D => T2 => (T4 or inapplicable).

    With ``strict`` a broken link raises ``ChainViolation``; a broken link
    is always an implementation fault, never a property of the graph.
    """
    ops = degree_operands(ds)
    values = _condition_values(ops)
    verdicts = condition_verdicts(ds, n)
    links = []
    for a, b in zip(CONDITIONS, CONDITIONS[1:]):
        va, vb = values[a], values[b]
        ok_value = va is None or vb is None or va <= vb
        sa, sb = verdicts[a].status, verdicts[b].status
        ok_verdict = sa is not Status.HOLDS or sb is not Status.FAILS
        links.append(ImplicationLink(a, va, b, vb, ok_value and ok_verdict))
    report = ImplicationReport(ops, tuple(links), n >= 3)
    if strict and not report.ok:
        bad = [link for link in links if not link.ok]
        raise ChainViolation(f"degree-condition chain broken at {bad} for {ds.values}")
    return report
