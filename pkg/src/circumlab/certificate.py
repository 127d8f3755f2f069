"""JSON form of cycle certificates and a validator that trusts none of the prover.

Schema (``schema`` = ``circumlab.certificate/1``)::

    graph6      str         host graph
    n           int
    path        [int]       extremal longest path v_1..v_p
    p           int
    marks       {x: [int], y: [int], tag: "TailHit"|"NonCrossing"|"Crossing"}
    case        "TailHit"|"Case1"|"Case2.1"|"Case2.2"
    vine        [[int]] | null   ears w_i..z_i (Case1 only)
    cycle       [int]
    achieved    int         cycle order
    guaranteed  {t1: int, t3: int | "inapplicable"}
    floors      {...}       endpoint-degree floors that were checked
    details     {...}       case-specific intermediate choices

``check_certificate`` re-derives everything it can from the adjacency of
the decoded graph and its degree sequence.
"""

from __future__ import annotations

import json
from dataclasses import asdict

from .errors import MalformedToken
from .graph import Graph, degree_sequence, emit_graph6, parse_graph6
from .prover import CycleCertificate

SCHEMA = "circumlab.certificate/1"


def certificate_to_dict(cert: CycleCertificate) -> dict:
    return {
        "schema": SCHEMA,
        "graph6": emit_graph6(cert.graph),
        "n": cert.graph.n,
        "path": list(cert.path.vertices),
        "p": cert.p,
        "marks": {"x": list(cert.marks.x_list), "y": list(cert.marks.y_list), "tag": cert.marks.tag.value},
        "case": cert.case.value,
        "vine": None if cert.vine is None else [list(ear) for ear in cert.vine.ears],
        "cycle": list(cert.cycle.vertices),
        "achieved": cert.achieved,
        "guaranteed": {
            "t1": cert.guaranteed_t1,
            "t3": "inapplicable" if cert.guaranteed_t3 is None else cert.guaranteed_t3,
        },
        "floors": asdict(cert.floors),
        "details": _jsonable(cert.details),
    }


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def certificate_to_json(cert: CycleCertificate, **kwargs) -> str:
    return json.dumps(certificate_to_dict(cert), **kwargs)


# -- independent validation ---------------------------------------------------

def _adjacent(g: Graph, a: int, b: int) -> bool:
    return 0 <= a < g.n and 0 <= b < g.n and bool(g.adj[a] >> b & 1)


def _simple_walk_ok(g: Graph, seq: list[int]) -> bool:
    return (
        bool(seq)
        and len(set(seq)) == len(seq)
        and all(0 <= v < g.n for v in seq)
        and all(_adjacent(g, a, b) for a, b in zip(seq, seq[1:]))
    )


def _nbrs(g: Graph, v: int) -> list[int]:
    return [u for u in range(g.n) if g.adj[v] >> u & 1]


def check_certificate(data: dict) -> list[str]:
    """Problems found in a serialized certificate; an empty list means it checks out."""
    problems: list[str] = []
    if data.get("schema") != SCHEMA:
        problems.append(f"unknown schema {data.get('schema')!r}")
    try:
        g = parse_graph6(data["graph6"])
    except (KeyError, MalformedToken) as exc:
        return problems + [f"graph does not decode: {exc}"]
    if data.get("n") != g.n:
        problems.append("n does not match the graph")

    path = list(data.get("path") or [])
    if not _simple_walk_ok(g, path):
        return problems + ["path is not a simple path of the graph"]
    p = len(path)
    if data.get("p") != p:
        problems.append("p does not match the path length")
    pos = {v: i for i, v in enumerate(path)}
    v1, vp = path[0], path[-1]
    if any(u not in pos for u in _nbrs(g, v1) + _nbrs(g, vp)):
        problems.append("an endpoint has a neighbour off the path, so the path is not longest")
        return problems

    xs = sorted(_nbrs(g, v1), key=pos.get)
    ys = sorted(_nbrs(g, vp), key=pos.get, reverse=True)
    marks = data.get("marks") or {}
    if marks.get("x") != xs or marks.get("y") != ys:
        problems.append("endpoint marks do not match the neighbourhoods")
    if xs[-1] == vp:
        tag = "TailHit"
    elif pos[xs[-1]] <= pos[ys[-1]]:
        tag = "NonCrossing"
    else:
        tag = "Crossing"
    if marks.get("tag") != tag:
        problems.append(f"mark tag should be {tag}")
    allowed = {"TailHit": {"TailHit"}, "NonCrossing": {"Case1"}, "Crossing": {"Case2.1", "Case2.2"}}[tag]
    if data.get("case") not in allowed:
        problems.append(f"case {data.get('case')!r} does not fit tag {tag}")

    cycle = list(data.get("cycle") or [])
    if len(cycle) < 3 or not _simple_walk_ok(g, cycle) or not _adjacent(g, cycle[-1], cycle[0]):
        problems.append("cycle is not a cycle of the graph")
    if data.get("achieved") != len(cycle):
        problems.append("achieved does not equal the cycle order")

    ds = degree_sequence(g).values
    delta = ds[0]

    def d(k: int) -> int | None:
        if k == 0:
            return 0
        return ds[k - 1] if k <= len(ds) else None

    t1 = min(p, d(delta) + d(delta + 1))
    t3 = None if d(delta + 2) is None else min(p, 2 * d(delta + 1), d(delta) + d(delta + 2))
    guaranteed = data.get("guaranteed") or {}
    if guaranteed.get("t1") != t1:
        problems.append(f"t1 guarantee should be {t1}")
    if guaranteed.get("t3") != ("inapplicable" if t3 is None else t3):
        problems.append(f"t3 guarantee should be {t3}")
    if len(cycle) < t1 or (t3 is not None and len(cycle) < t3):
        problems.append("cycle is shorter than a guarantee")

    vine = data.get("vine")
    if data.get("case") == "Case1":
        if not vine:
            problems.append("Case1 certificate without a vine")
        else:
            problems += _vine_check(g, path, pos, vine)
    elif vine:
        problems.append("vine present outside Case1")
    return problems


def _vine_check(g: Graph, path: list[int], pos: dict[int, int], vine: list[list[int]]) -> list[str]:
    out = []
    inner_seen: set[int] = set()
    for i, ear in enumerate(vine, 1):
        if len(ear) < 2 or not _simple_walk_ok(g, ear):
            out.append(f"ear {i} is not a path")
            continue
        if ear[0] not in pos or ear[-1] not in pos:
            out.append(f"ear {i} does not end on the path")
            continue
        inner = set(ear[1:-1])
        if inner & set(pos) or inner & inner_seen:
            out.append(f"ear {i} is not internally disjoint")
        inner_seen |= inner
    if out:
        return out
    w = [pos[e[0]] for e in vine]
    z = [pos[e[-1]] for e in vine]
    m = len(vine)
    ok = w[0] == 0 and z[-1] == len(path) - 1
    if m >= 2:
        ok = ok and w[0] < w[1] < z[0] and z[m - 2] < z[m - 1]
        ok = ok and all(z[i - 2] <= w[i] < z[i - 1] for i in range(2, m))
    if not ok:
        out.append("ear endpoints are not interleaved as a vine")
    if len(vine[0]) != 2 or len(vine[-1]) != 2:
        out.append("first and last ears of a vine on a longest path must be edges")
    return out
