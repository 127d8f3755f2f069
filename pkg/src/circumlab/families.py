"""The three sharpness families and a re-check of every sharpness claim.

    E1 = K_d + (d K_1 u K_2)   n = 2d+2, c = 2d+1, p = 2d+2
    E2 = K_d + complement(K_{d+1})   n = 2d+1, c = 2d,   p = 2d+1
    E3 = K_1 + 2 K_d           n = 2d+1, c = d+1,  p = 2d+1, one cut vertex

Clique vertices come first in every generated labelling.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from enum import Enum

from .errors import DeltaTooSmall, TooLarge
from .graph import (
    MAX_ORDER,
    Graph,
    complete_graph,
    cut_vertices,
    degree_sequence,
    disjoint_union,
    emit_graph6,
    empty_graph,
    join,
    vertex_connectivity,
)
from .oracles import circumference_order, is_hamiltonian, longest_path_order


class Family(str, Enum):
    E1 = "E1"
    E2 = "E2"
    E3 = "E3"


ORDER = {Family.E1: lambda d: 2 * d + 2, Family.E2: lambda d: 2 * d + 1, Family.E3: lambda d: 2 * d + 1}


@dataclass(frozen=True)
class FamilySpec:
    kind: Family
    delta: int

    @property
    def n(self) -> int:
        return ORDER[self.kind](self.delta)


def generate(spec: FamilySpec) -> Graph:
    d = spec.delta
    if d < 2:
        raise DeltaTooSmall(f"delta must be >= 2, got {d}")
    if spec.n > MAX_ORDER:
        raise TooLarge(f"{spec.kind.value} at delta={d} has {spec.n} vertices")
    if spec.kind is Family.E1:
        return join(complete_graph(d), disjoint_union(empty_graph(d), complete_graph(2)))
    if spec.kind is Family.E2:
        return join(complete_graph(d), empty_graph(d + 1))
    return join(complete_graph(1), disjoint_union(complete_graph(d), complete_graph(d)))


@dataclass(frozen=True)
class ClaimCheck:
    label: str
    relation: str  # e.g. "c < min{p, 2d_{delta+1}}"
    lhs: int
    rhs: int
    op: str  # "==", "<", ">=", "!="
    holds: bool
    asserted: bool = True  # False: recorded beside the published claim, not asserted
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.holds or not self.asserted


@dataclass
class SharpnessReport:
    family: str
    delta: int
    graph6: str
    n: int
    c: int
    p: int
    kappa: int
    cut_vertices: list[int]
    hamiltonian: bool
    degrees: dict[str, int | None]
    checks: list[ClaimCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(ch.passed for ch in self.checks)

    def failures(self) -> list[ClaimCheck]:
        return [ch for ch in self.checks if not ch.passed]

    def to_dict(self) -> dict:
        out = asdict(self)
        out["ok"] = self.ok
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


_OPS = {"==": int.__eq__, "<": int.__lt__, ">=": int.__ge__, "!=": int.__ne__}


def _check(report: SharpnessReport, label: str, relation: str, lhs: int, op: str, rhs: int,
           *, asserted: bool = True, note: str = "") -> None:
    report.checks.append(ClaimCheck(label, relation, lhs, rhs, op, _OPS[op](lhs, rhs), asserted, note))


def _base_report(spec: FamilySpec) -> tuple[SharpnessReport, dict[int, int | None]]:
    g = generate(spec)
    ds = degree_sequence(g)
    d = spec.delta
    dk = {k: ds.values[k - 1] if k <= g.n else None for k in (d, d + 1, d + 2, d + 3)}
    ham, _ = is_hamiltonian(g)
    report = SharpnessReport(
        family=spec.kind.value,
        delta=d,
        graph6=emit_graph6(g),
        n=g.n,
        c=circumference_order(g),
        p=longest_path_order(g),
        kappa=vertex_connectivity(g),
        cut_vertices=cut_vertices(g),
        hamiltonian=ham,
        degrees={"delta": ds.delta, "d_delta": dk[d], "d_delta+1": dk[d + 1],
                 "d_delta+2": dk[d + 2], "d_delta+3": dk[d + 3]},
    )
    return report, dk


def _audit_e1(d: int) -> SharpnessReport:
    r, dk = _base_report(FamilySpec(Family.E1, d))
    d0, d1, d2, d3 = dk[d], dk[d + 1], dk[d + 2], dk[d + 3]
    n, c, p = r.n, r.c, r.p
    _check(r, "order", "n = 2delta+2", n, "==", 2 * d + 2)
    _check(r, "circumference", "c = 2delta+1", c, "==", 2 * d + 1)
    _check(r, "longest path", "p = 2delta+2", p, "==", 2 * d + 2)
    _check(r, "2-connected", "kappa >= 2", r.kappa, ">=", 2)
    _check(r, "d_delta", "d_delta = delta", d0, "==", d)
    _check(r, "d_delta+1", "d_{delta+1} = delta+1", d1, "==", d + 1)
    _check(r, "d_delta+2", "d_{delta+2} = delta+1", d2, "==", d + 1)
    _check(r, "d_delta+3", "d_{delta+3} = 2delta+1", d3, "==", 2 * d + 1)
    _check(r, "non-hamiltonian", "c != n", c, "!=", n)
    _check(r, "T1 not to 2d_{delta+1}", "c < min{p, d_{delta+1}+d_{delta+1}}", c, "<", min(p, 2 * d1))
    _check(r, "T2 not to 2d_{delta+1}", "2d_{delta+1} >= n", 2 * d1, ">=", n)
    _check(r, "T3 not to d_{delta+1}+d_{delta+2}", "c < min{p, 2d_{delta+1}, d_{delta+1}+d_{delta+2}}",
           c, "<", min(p, 2 * d1, d1 + d2))
    _check(r, "T3 not to d_delta+d_{delta+3}", "c < min{p, 2d_{delta+1}, d_delta+d_{delta+3}}",
           c, "<", min(p, 2 * d1, d0 + d3))
    _check(r, "(a3)", "min{2d_{delta+1}, d_delta+d_{delta+2}} >= n", min(2 * d1, d0 + d2), ">=", n,
           asserted=False,
           note="listed as satisfied by this family; the computed left side is n-1, "
                "which is exactly why the graph escapes T4")
    _check(r, "(a4)", "min{2d_{delta+1}, d_{delta+1}+d_{delta+2}} >= n", min(2 * d1, d1 + d2), ">=", n)
    _check(r, "(a5)", "min{2d_{delta+1}, d_delta+d_{delta+3}} >= n", min(2 * d1, d0 + d3), ">=", n)
    return r


def _audit_e2(d: int) -> SharpnessReport:
    r, dk = _base_report(FamilySpec(Family.E2, d))
    d0, d1, d2 = dk[d], dk[d + 1], dk[d + 2]
    n, c, p = r.n, r.c, r.p
    _check(r, "order", "n = 2delta+1", n, "==", 2 * d + 1)
    _check(r, "circumference", "c = 2delta", c, "==", 2 * d)
    _check(r, "longest path", "p = 2delta+1", p, "==", 2 * d + 1)
    _check(r, "2-connected", "kappa >= 2", r.kappa, ">=", 2)
    _check(r, "d_delta", "d_delta = delta", d0, "==", d)
    _check(r, "d_delta+1", "d_{delta+1} = delta", d1, "==", d)
    _check(r, "d_delta+2", "d_{delta+2} = 2delta", d2, "==", 2 * d)
    _check(r, "non-hamiltonian", "c != n", c, "!=", n)
    _check(r, "T1 not to d_delta+d_{delta+2}", "c < min{p, d_delta+d_{delta+2}}", c, "<", min(p, d0 + d2))
    _check(r, "T1 not to +1", "c < min{p, d_delta+d_{delta+1}+1}", c, "<", min(p, d0 + d1 + 1))
    _check(r, "T2 not to d_delta+d_{delta+2}", "d_delta+d_{delta+2} >= n", d0 + d2, ">=", n)
    _check(r, "T2 not to n-1", "d_delta+d_{delta+1} >= n-1", d0 + d1, ">=", n - 1)
    _check(r, "T2 margin", "d_delta+d_{delta+1} = n-1", d0 + d1, "==", n - 1)
    _check(r, "T3 not to 2d_{delta+1}+1", "c < min{p, 2d_{delta+1}+1, d_delta+d_{delta+2}}",
           c, "<", min(p, 2 * d1 + 1, d0 + d2))
    _check(r, "T3 not to 2d_{delta+2}", "c < min{p, 2d_{delta+2}, d_delta+d_{delta+2}}",
           c, "<", min(p, 2 * d2, d0 + d2))
    _check(r, "(a1)", "min{2d_{delta+1}+1, d_delta+d_{delta+2}} >= n", min(2 * d1 + 1, d0 + d2), ">=", n)
    _check(r, "(a2)", "min{2d_{delta+2}, d_delta+d_{delta+2}} >= n", min(2 * d2, d0 + d2), ">=", n)
    return r


def _audit_e3(d: int) -> SharpnessReport:
    r, dk = _base_report(FamilySpec(Family.E3, d))
    d0, d1, d2 = dk[d], dk[d + 1], dk[d + 2]
    n, c, p = r.n, r.c, r.p
    _check(r, "order", "n = 2delta+1", n, "==", 2 * d + 1)
    _check(r, "circumference", "c = delta+1", c, "==", d + 1)
    _check(r, "longest path", "p = 2delta+1", p, "==", 2 * d + 1)
    _check(r, "cut vertex", "kappa = 1", r.kappa, "==", 1)
    _check(r, "d_delta", "d_delta = delta", d0, "==", d)
    _check(r, "d_delta+1", "d_{delta+1} = delta", d1, "==", d)
    _check(r, "d_delta+2", "d_{delta+2} = delta", d2, "==", d)
    _check(r, "T1 needs 2-connectivity", "c < min{p, d_delta+d_{delta+1}}", c, "<", min(p, d0 + d1))
    _check(r, "T3 needs 2-connectivity", "c < min{p, 2d_{delta+1}, d_delta+d_{delta+2}}",
           c, "<", min(p, 2 * d1, d0 + d2))
    return r


_AUDITS = {Family.E1: _audit_e1, Family.E2: _audit_e2, Family.E3: _audit_e3}


def sharpness_audit(delta: int, families: tuple[Family, ...] = tuple(Family)) -> list[SharpnessReport]:
    if delta < 2:
        raise DeltaTooSmall(f"delta must be >= 2, got {delta}")
    return [_AUDITS[Family(f)](delta) for f in families]


def format_table(reports: list[SharpnessReport]) -> str:
    """Aligned plain-text view: one block per report, one line per check."""
    lines = []
    for r in reports:
        lines.append(f"{r.family} delta={r.delta} n={r.n} c={r.c} p={r.p} kappa={r.kappa} "
                     f"graph6={r.graph6} {'OK' if r.ok else 'FAIL'}")
        width = max((len(ch.relation) for ch in r.checks), default=0)
        for ch in r.checks:
            status = "pass" if ch.holds else ("FAIL" if ch.asserted else "recorded")
            lines.append(f"  {ch.relation:<{width}}  {ch.lhs:>4} {ch.op:<2} {ch.rhs:<4} {status}"
                         + (f"  ({ch.note})" if ch.note else ""))
    return "\n".join(lines)
