"""Per-graph audit of every condition, bound and construction, plus labeled enumeration."""

from __future__ import annotations

import json
import os
from collections import Counter
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from multiprocessing import Pool
from operator import or_
from typing import Callable, Iterable, Iterator

from .certificate import certificate_to_dict, check_certificate
from .conditions import BOUNDS, CONDITIONS, bound_targets, condition_verdicts, degree_operands, implication_audit
from .errors import CircumlabError, GraphError, ResourceLimit, TooLarge
from .graph import (
    Graph,
    degree_sequence,
    emit_graph6,
    is_connected,
    is_two_connected,
    parse_graph6,
    vertex_connectivity,
)
from .oracles import MAX_EXACT_ORDER, circumference_order, longest_path_order
from .prover import (
    certified_long_cycle,
    check_rotations,
    find_minimal_vine,
    hamilton_via_condition,
    has_vine_with_at_most,
    vine_problems,
)

SCHEMA_VERSION = "circumlab.audit/1"
FILTERS = ("all", "connected", "two_connected")
MAX_ENUM_ORDER = 8


@dataclass
class AuditRecord:
    graph6: str
    n: int
    m: int
    delta: int
    d_delta: int | None
    d_delta1: int | None
    d_delta2: int | None
    kappa: int
    p: int | None  # None when the exact oracles were skipped (lazy mode)
    c: int | None
    hamiltonian: bool | None
    verdicts: dict[str, str]
    targets: dict[str, int | None]
    certificate: dict | None = None
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        out = {"schema": SCHEMA_VERSION}
        out.update(asdict(self))
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def audit_graph(g: Graph, *, lazy: bool = False, token: str | None = None) -> AuditRecord:
    """Check every claim that applies to ``g``; failures become violation flags.

    With ``lazy`` the exact oracles are skipped for graphs where no claim
    needs them (not 2-connected and no degree condition holds).
    """
    if g.n > MAX_EXACT_ORDER:
        raise ResourceLimit(f"n={g.n} exceeds the exact-oracle limit {MAX_EXACT_ORDER}")
    flags: list[str] = []
    token = emit_graph6(g) if token is None else token
    try:
        if parse_graph6(token) != g:
            flags.append("codec")
    except GraphError:
        flags.append("codec")

    ds = degree_sequence(g)
    ops = degree_operands(ds)
    verdicts = condition_verdicts(ds, g.n)
    if not implication_audit(ds, g.n, strict=False).ok:
        flags.append("chain")
    two_conn = is_two_connected(g)
    kappa = vertex_connectivity(g)
    if two_conn != (kappa >= 2 and g.n >= 3):
        flags.append("kappa")
    holding = [name for name in CONDITIONS if verdicts[name].holds] if g.n >= 3 else []

    p = c = ham = None
    cert = None
    summary = None
    if not lazy or two_conn or holding:
        p = longest_path_order(g)
        c = circumference_order(g)
        ham = g.n >= 3 and c == g.n
        if c > p:
            flags.append("c>p")
    targets = bound_targets(ds, p if p is not None else 0)

    if two_conn:
        for name in BOUNDS:
            if targets[name].applicable and c < targets[name].value:
                flags.append(f"bound:{name}")
        try:
            cert = certified_long_cycle(g)
        except CircumlabError as exc:
            flags.append(f"cert:{type(exc).__name__}")
        if cert is not None:
            cert_flags, vine_m = _certificate_flags(g, cert, c)
            flags += cert_flags
            summary = {
                "case": cert.case.value,
                "achieved": cert.achieved,
                "t1": cert.guaranteed_t1,
                "t3": cert.guaranteed_t3,
                "vine_m": vine_m,
                "cycle": list(cert.cycle.vertices),
            }

    for name in holding:
        if not ham:
            flags.append(f"{name}:not-hamiltonian")
        if name in ("T2", "T4") and kappa < 2:
            flags.append(f"{name}:kappa<2")
    if {"T2", "T4"} & set(holding):
        try:
            cycle = hamilton_via_condition(g, cert)
            if cycle.order != g.n or not cycle.is_valid():
                flags.append("hamilton:invalid")
        except CircumlabError as exc:
            flags.append(f"hamilton:{type(exc).__name__}")

    return AuditRecord(
        graph6=token,
        n=g.n,
        m=g.num_edges,
        delta=ops.delta,
        d_delta=ops.d_delta,
        d_delta1=ops.d_delta1,
        d_delta2=ops.d_delta2,
        kappa=kappa,
        p=p,
        c=c,
        hamiltonian=ham,
        verdicts={name: v.status.value for name, v in verdicts.items()},
        targets={name: t.value for name, t in targets.items()} if p is not None else dict.fromkeys(BOUNDS),
        certificate=summary,
        violations=flags,
    )


def _certificate_flags(g: Graph, cert, c: int) -> tuple[list[str], int | None]:
    """Flags for one certificate, and the length of the minimal vine on its path."""
    flags = []
    if cert.achieved > c:
        flags.append("cert:above-c")
    if check_certificate(certificate_to_dict(cert)):
        flags.append("cert:invalid")
    if not check_rotations(cert):
        flags.append("cert:rotation")
    # the vine is only needed for Case 1, but its claims hold on every longest path
    vine = cert.vine
    if vine is None:
        try:
            vine = find_minimal_vine(g, cert.path, longest=True)
        except CircumlabError:
            return flags + ["vine:not-found"], None
    if vine_problems(cert.path, vine) or len(vine.ears[0]) != 2 or len(vine.ears[-1]) != 2:
        flags.append("vine:invalid")
    if vine.m > 1 and has_vine_with_at_most(g, cert.path, vine.m - 1):
        flags.append("vine:not-minimal")
    return flags, vine.m


# -- labeled enumeration --------------------------------------------------------

def edge_pairs(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 bit order; bit k of an edge code is pair k."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def _row_table(n: int, pairs: list[tuple[int, int]]) -> list[tuple[int, ...]]:
    table = []
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for k, (i, j) in enumerate(pairs):
            if code >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        table.append(tuple(rows))
    return table


def graph_from_code(n: int, code: int) -> Graph:
    rows = [0] * n
    for k, (i, j) in enumerate(edge_pairs(n)):
        if code >> k & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


_FILTER_FN: dict[str, Callable[[Graph], bool]] = {
    "all": lambda g: True,
    "connected": is_connected,
    "two_connected": is_two_connected,
}


def _check_enum_args(n: int, filter: str) -> None:
    if n > MAX_ENUM_ORDER:
        raise TooLarge(f"labeled enumeration is capped at n={MAX_ENUM_ORDER}, got {n}")
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if filter not in _FILTER_FN:
        raise ValueError(f"unknown filter {filter!r}; choose from {FILTERS}")


@lru_cache(maxsize=2)
def _split_tables(n: int) -> tuple[int, list[tuple[int, ...]], list[tuple[int, ...]]]:
    pairs = edge_pairs(n)
    half = len(pairs) // 2
    return half, _row_table(n, pairs[:half]), _row_table(n, pairs[half:])


def iter_code_range(n: int, start: int, stop: int) -> Iterator[Graph]:
    """Graphs for edge codes ``start <= code < stop``, ascending."""
    half, low, high = _split_tables(n)
    mask = (1 << half) - 1
    for code in range(start, stop):
        yield Graph(n, tuple(map(or_, high[code >> half], low[code & mask])))


def enumerate_labeled(n: int, filter: str = "all") -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices passing ``filter``, by ascending edge code."""
    _check_enum_args(n, filter)
    keep = _FILTER_FN[filter]
    return (g for g in iter_code_range(n, 0, 1 << len(edge_pairs(n))) if keep(g))


# -- exhaustive sweeps ----------------------------------------------------------

@dataclass
class SweepTally:
    """Counts from auditing a block of labeled graphs; blocks merge by addition."""

    graphs: int = 0
    two_connected: int = 0
    certificates: int = 0
    condition_holders: int = 0  # T2 or T4 holds
    oracle_runs: int = 0
    cases: Counter = field(default_factory=Counter)
    vine_lengths: Counter = field(default_factory=Counter)
    violations: Counter = field(default_factory=Counter)
    examples: dict[str, str] = field(default_factory=dict)  # first token per violation flag

    def add(self, r: AuditRecord) -> None:
        self.graphs += 1
        if r.p is not None:
            self.oracle_runs += 1
        if r.verdicts["T2"] == "Holds" or r.verdicts["T4"] == "Holds":
            self.condition_holders += r.n >= 3
        if r.certificate is not None:
            self.two_connected += 1
            self.certificates += 1
            self.cases[r.certificate["case"]] += 1
            if r.certificate["vine_m"] is not None:
                self.vine_lengths[r.certificate["vine_m"]] += 1
        elif r.kappa >= 2 and r.n >= 3:
            self.two_connected += 1
        for flag in r.violations:
            self.violations[flag] += 1
            self.examples.setdefault(flag, r.graph6)

    def merge(self, other: SweepTally) -> SweepTally:
        self.graphs += other.graphs
        self.two_connected += other.two_connected
        self.certificates += other.certificates
        self.condition_holders += other.condition_holders
        self.oracle_runs += other.oracle_runs
        self.cases.update(other.cases)
        self.vine_lengths.update(other.vine_lengths)
        self.violations.update(other.violations)
        for flag, token in other.examples.items():
            self.examples.setdefault(flag, token)
        return self


def _sweep_block(args: tuple[int, int, int]) -> SweepTally:
    n, start, stop = args
    tally = SweepTally()
    for g in iter_code_range(n, start, stop):
        tally.add(audit_graph(g, lazy=True))
    return tally


def exhaustive_sweep(n: int, jobs: int = 1, block: int = 4096) -> SweepTally:
    """Lazy audit of every labeled graph on ``n`` vertices, tallied."""
    _check_enum_args(n, "all")
    total = 1 << len(edge_pairs(n))
    blocks = [(n, lo, min(lo + block, total)) for lo in range(0, total, block)]
    tally = SweepTally()
    if jobs <= 1:
        for b in blocks:
            tally.merge(_sweep_block(b))
        return tally
    with Pool(jobs) as pool:
        for part in pool.imap_unordered(_sweep_block, blocks):
            tally.merge(part)
    return tally


# -- streaming ------------------------------------------------------------------

@dataclass(frozen=True)
class StreamItem:
    """One input line after auditing: a record, or an input error at ``line``."""

    line: int
    token: str
    record: AuditRecord | None = None
    error: str | None = None

    def to_json(self) -> str:
        if self.record is not None:
            return self.record.to_json()
        data = {"schema": SCHEMA_VERSION, "line": self.line, "input": self.token, "error": self.error}
        return json.dumps(data, sort_keys=True, separators=(",", ":"))


def audit_line(item: tuple[int, str]) -> StreamItem:
    line, text = item
    token = text.strip()
    try:
        g = parse_graph6(token)
        return StreamItem(line, token, record=audit_graph(g, token=token))
    except (GraphError, ResourceLimit) as exc:
        return StreamItem(line, token, error=f"{type(exc).__name__}: {exc}")


def default_jobs() -> int:
    env = os.environ.get("CIRCUMLAB_JOBS")
    if env:
        return max(1, int(env))
    try:
        return max(1, len(os.sched_getaffinity(0)))
    except AttributeError:
        return os.cpu_count() or 1


def audit_stream(lines: Iterable[str], jobs: int = 1, chunksize: int = 64) -> Iterator[StreamItem]:
    """Audit graph6 lines in input order; blank lines are skipped.

    ``Pool.imap`` hands chunks to whichever worker is free and yields results
    in submission order, so the output does not depend on ``jobs``.
    """
    items = ((k, text) for k, text in enumerate(lines, 1) if text.strip())
    if jobs <= 1:
        yield from map(audit_line, items)
        return
    with Pool(jobs) as pool:
        yield from pool.imap(audit_line, items, chunksize)
