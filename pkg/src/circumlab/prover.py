"""Constructive long-cycle certificates for 2-connected graphs.

The engine follows the longest-path proof of the degree-sum circumference
bounds step by step:

1. choose a longest path ``v_1 .. v_p`` maximising ``d(v_1)``, then
   ``d(v_p)``, then lexicographically smallest;
2. mark the neighbours ``x_1..x_t`` of ``v_1`` (along the path) and
   ``y_1..y_f`` of ``v_p`` (against it) and classify: the last x is v_p
   (tail hit), the marks do not cross (``x_t`` at or before ``y_f``), or
   they cross;
3. build a cycle: close the path (tail hit), do vine surgery (no
   crossing), or use a crossing pair of chords;
4. check the endpoint-degree floors that turn the cycle order into
   ``min(p, d_delta + d_{delta+1})`` and
   ``min(p, 2 d_{delta+1}, d_delta + d_{delta+2})``.

Every structural fact the argument relies on is re-checked at run time and
a failure raises a ``ProofStepError`` subclass carrying the intermediate
state.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator

from .conditions import bound_targets, condition_verdicts
from .errors import (
    ConditionNotSatisfied,
    ConstructionInvalid,
    InequalityViolated,
    NotLongestPath,
    NotTwoConnected,
    NoVineFound,
    ProofGapViolated,
)
from .graph import (
    INAPPLICABLE,
    DegreeSequence,
    Graph,
    cut_vertices,
    degree_sequence,
    indexed_degree,
    is_connected,
    is_two_connected,
    iter_bits,
    reach,
    vertex_connectivity,
)
from .oracles import (
    CycleWitness,
    OrientedPath,
    _mask_bits,
    _tables,
    is_cycle,
    is_path,
    longest_path_order,
)


class MarkTag(str, Enum):
    TAIL_HIT = "TailHit"
    NON_CROSSING = "NonCrossing"
    CROSSING = "Crossing"


class Case(str, Enum):
    TAIL_HIT = "TailHit"
    CASE1 = "Case1"
    CASE2_1 = "Case2.1"
    CASE2_2 = "Case2.2"


# -- extremal longest path ---------------------------------------------------

def _ends_from(g: Graph, s: int, p: int) -> int:
    """Mask of vertices at which some path of order p starting at s ends."""
    adj = g.adj
    bits = _mask_bits(g.n)
    sb = 1 << s
    table = [0] * (1 << g.n)
    table[sb] = sb
    out = 0
    for mask in range(sb + 1, 1 << g.n):
        if not mask & sb:
            continue
        bl = bits[mask]
        ends = 0
        for v, vb in bl:
            if vb != sb and adj[v] & table[mask ^ vb]:
                ends |= vb
        table[mask] = ends
        if ends and len(bl) == p:
            out |= ends
    return out


def _first_path(g: Graph, start: int, p: int, targets: int) -> tuple[int, ...] | None:
    """Lexicographically smallest path of order p from start ending in targets."""
    adj = g.adj
    seq = [start]

    def dfs(v: int, visited: int) -> bool:
        if len(seq) == p:
            return bool(targets >> v & 1)
        free = adj[v] & ~visited
        while free:
            low = free & -free
            free ^= low
            u = low.bit_length() - 1
            seq.append(u)
            if dfs(u, visited | low):
                return True
            seq.pop()
        return False

    return tuple(seq) if dfs(start, 1 << start) else None


def select_extremal_longest_path(g: Graph) -> OrientedPath:
    """Longest path maximising d(v_1), then d(v_p), then lexicographically least."""
    if g.n < 2:
        raise ValueError("an extremal longest path needs n >= 2")
    t = _tables(g)
    p = t.p
    if p == 1:
        return OrientedPath(g, (0,))
    endpoints = 0
    for mask, ends in enumerate(t.ends):
        if ends and mask.bit_count() == p:
            endpoints |= ends
    deg = g.degrees()
    d1 = max(deg[v] for v in iter_bits(endpoints))
    best: tuple[int, int, int] | None = None  # (-d(v_p), v_1, ends mask)
    for v1 in iter_bits(endpoints):
        if deg[v1] != d1:
            continue
        ends = _ends_from(g, v1, p)
        dp = max(deg[e] for e in iter_bits(ends))
        key = (-dp, v1)
        if best is None or key < best[:2]:
            best = (-dp, v1, ends)
    assert best is not None
    neg_dp, v1, ends = best
    targets = 0
    for e in iter_bits(ends):
        if deg[e] == -neg_dp:
            targets |= 1 << e
    seq = _first_path(g, v1, p, targets)
    if seq is None:
        raise ConstructionInvalid("no path realises the extremal endpoint degrees", {"v1": v1})
    return OrientedPath(g, seq)


# -- endpoint marks ------------------------------------------------------------

@dataclass(frozen=True)
class EndpointMarks:
    x_list: tuple[int, ...]  # N(v_1) in path order
    y_list: tuple[int, ...]  # N(v_p) in reverse path order
    tag: MarkTag

    @property
    def x_t(self) -> int:
        return self.x_list[-1]

    @property
    def y_f(self) -> int:
        return self.y_list[-1]


def rotate_at_start(path: OrientedPath, x: int) -> tuple[int, ...]:
    """The path x^- <-P v_1 x ->P v_p for a neighbour x of v_1."""
    k = path.position(x)
    vs = path.vertices
    return vs[k - 1 :: -1] + vs[k:]


def rotate_at_end(path: OrientedPath, y: int) -> tuple[int, ...]:
    """The path y^+ ->P v_p y <-P v_1 for a neighbour y of v_p."""
    k = path.position(y)
    vs = path.vertices
    return vs[k + 1 :] + vs[k::-1]


def endpoint_marks(g: Graph, path: OrientedPath) -> EndpointMarks:
    v1, vp = path.first, path.last
    off = g.full_mask & ~path.mask
    if g.adj[v1] & off or g.adj[vp] & off:
        raise NotLongestPath("an endpoint has a neighbour off the path", {"path": path.vertices})
    pos = path.position
    xs = tuple(sorted(g.neighbors(v1), key=pos))
    ys = tuple(sorted(g.neighbors(vp), key=pos, reverse=True))
    if not xs or not ys:
        raise NotLongestPath("path endpoints must have neighbours", {"path": path.vertices})
    for x in xs:
        rotated = rotate_at_start(path, x)
        if not is_path(g, rotated) or len(rotated) != path.order:
            raise ConstructionInvalid("rotation at v_1 is not a path", {"x": x, "rotated": rotated})
        if g.adj[rotated[0]] & off:
            raise NotLongestPath("rotated path extends, so the path was not longest",
                                 {"x": x, "rotated": rotated})
    for y in ys:
        rotated = rotate_at_end(path, y)
        if not is_path(g, rotated) or len(rotated) != path.order:
            raise ConstructionInvalid("rotation at v_p is not a path", {"y": y, "rotated": rotated})
        if g.adj[rotated[0]] & off:
            raise NotLongestPath("rotated path extends, so the path was not longest",
                                 {"y": y, "rotated": rotated})
    if xs[-1] == vp:
        tag = MarkTag.TAIL_HIT
    elif pos(xs[-1]) <= pos(ys[-1]):
        tag = MarkTag.NON_CROSSING
    else:
        tag = MarkTag.CROSSING
    return EndpointMarks(xs, ys, tag)


# -- degree floors ---------------------------------------------------------------

@dataclass(frozen=True)
class DegreeFloors:
    d_v1: int
    d_vp: int
    floor_v1: int  # d_{d(v_1)+1}
    floor_vp: int  # d_{d(v_p)}
    t1_floor: int  # d_delta + d_{delta+1}
    t3_floor: int | None  # min(2 d_{delta+1}, d_delta + d_{delta+2})
    t3_route: str | None
    t3_endpoint_floor: int | None  # lower bound on d(v_1)+d(v_p) from the T3 case split


def _dk(ds: DegreeSequence, k: int) -> int | None:
    v = indexed_degree(ds, k)
    return None if v is INAPPLICABLE else v


def degree_floor_inequalities(g: Graph, path: OrientedPath, marks: EndpointMarks) -> DegreeFloors:
    """Check the endpoint-degree inequalities an extremal path must satisfy.

    Raises ``InequalityViolated`` if any fails, which means the path was
    not chosen extremally.
    """
    deg = g.degrees()
    ds = degree_sequence(g)
    v1, vp = path.first, path.last
    a, b = deg[v1], deg[vp]
    state = {"path": path.vertices, "d_v1": a, "d_vp": b, "ds": ds.values}

    def require(ok: bool, what: str) -> None:
        if not ok:
            raise InequalityViolated(what, state)

    before_x = [path.pred(x) for x in marks.x_list]
    after_y = [path.succ(y) for y in marks.y_list]
    require(all(deg[u] <= a for u in before_x), "d(v_1) >= d(x_i^-) fails")
    require(a >= b, "d(v_1) >= d(v_p) fails")
    require(all(deg[u] <= b for u in after_y), "d(v_p) >= d(y_i^+) fails")
    # t+1 distinct vertices of degree <= d(v_1), f distinct of degree <= d(v_p)
    require(len(set(before_x) | {vp}) == a + 1, "x_i^- and v_p are not distinct")
    require(len(set(after_y)) == b, "y_i^+ are not distinct")

    floor_v1 = ds.values[a]  # d_{a+1}
    floor_vp = ds.values[b - 1]  # d_b
    require(a >= floor_v1, "d(v_1) >= d_{d(v_1)+1} fails")
    require(b >= floor_vp, "d(v_p) >= d_{d(v_p)} fails")

    delta = ds.delta
    d_delta, d_delta1, d_delta2 = _dk(ds, delta), _dk(ds, delta + 1), _dk(ds, delta + 2)
    t1_floor = d_delta + d_delta1
    require(floor_v1 + floor_vp >= t1_floor, "d_{d(v_1)+1} + d_{d(v_p)} >= d_delta + d_{delta+1} fails")

    t3_floor = route = route_floor = None
    if d_delta2 is not None:
        t3_floor = min(2 * d_delta1, d_delta + d_delta2)
        if b >= delta + 1:
            route = "d(v_p)>=delta+1"
            route_floor = d_delta2 + d_delta1
            require(floor_v1 >= d_delta2 and floor_vp >= d_delta1, route + " floors fail")
        elif a == delta:
            route = "d(v_1)=d(v_p)=delta"
            # v_1 joins the y_i^+ as an (f+1)-th vertex of degree <= d(v_p)
            require(v1 not in after_y and a <= b, "v_1 cannot extend the y_i^+ set")
            require(b >= ds.values[b], "d(v_p) >= d_{d(v_p)+1} fails")
            route_floor = 2 * d_delta1
            require(a >= d_delta1 and b >= d_delta1, route + " floors fail")
        else:
            route = "d(v_p)=delta<d(v_1)"
            route_floor = d_delta + d_delta2
            require(floor_v1 >= d_delta2, "d(v_1) >= d_{delta+2} fails")
        require(a + b >= route_floor >= t3_floor, "T3 endpoint floor fails")

    return DegreeFloors(a, b, floor_v1, floor_vp, t1_floor, t3_floor, route, route_floor)


# -- vines -------------------------------------------------------------------------

@dataclass(frozen=True)
class Vine:
    ears: tuple[tuple[int, ...], ...]  # each ear runs w_i -> z_i

    @property
    def m(self) -> int:
        return len(self.ears)

    def w(self, i: int) -> int:
        """Start of ear i (1-based)."""
        return self.ears[i - 1][0]

    def z(self, i: int) -> int:
        return self.ears[i - 1][-1]


def vine_problems(path: OrientedPath, vine: Vine) -> list[str]:
    """Everything wrong with ``vine`` as a vine on ``path``; empty when valid."""
    g = path.host
    problems = []
    seen_interior: set[int] = set()
    for i, ear in enumerate(vine.ears, 1):
        if len(ear) < 2 or not is_path(g, ear):
            problems.append(f"ear {i} is not a path of the host graph")
            continue
        if ear[0] not in path or ear[-1] not in path:
            problems.append(f"ear {i} does not end on the path")
        interior = set(ear[1:-1])
        if any(v in path for v in interior):
            problems.append(f"ear {i} meets the path inside")
        if not interior and abs(path.position(ear[0]) - path.position(ear[-1])) == 1:
            problems.append(f"ear {i} is an edge of the path")
        if interior & seen_interior:
            problems.append(f"ear {i} shares an inner vertex with an earlier ear")
        seen_interior |= interior
    if problems or not vine.ears:
        return problems or ["vine has no ears"]
    pos = path.position
    w = [pos(e[0]) for e in vine.ears]
    z = [pos(e[-1]) for e in vine.ears]
    m = vine.m
    if w[0] != 0:
        problems.append("w_1 is not v_1")
    if z[-1] != path.order - 1:
        problems.append("z_m is not v_p")
    if m >= 2:
        if not w[0] < w[1] < z[0]:
            problems.append("w_1 < w_2 < z_1 fails")
        for i in range(2, m):  # 0-based ear i, i.e. w_{i+1}
            if not z[i - 2] <= w[i] < z[i - 1]:
                problems.append(f"z_{i - 1} <= w_{i + 1} < z_{i} fails")
        if not z[m - 2] < z[m - 1]:
            problems.append("z_{m-1} < z_m fails")
    return problems


def _ears_from(g: Graph, path: OrientedPath, w: int, min_z: int, blocked: int) -> list[tuple[int, ...]]:
    """Ears from path vertex w to a path vertex at position >= min_z, avoiding blocked."""
    on_path = path.mask
    pos = path.position
    adj = g.adj
    out: list[tuple[int, ...]] = []
    seq = [w]

    def dfs(v: int, visited: int) -> None:
        for u in iter_bits(adj[v] & ~visited):
            if on_path >> u & 1:
                if pos(u) >= min_z and not (len(seq) == 1 and abs(pos(u) - pos(w)) == 1):
                    out.append(tuple(seq) + (u,))
            elif not blocked >> u & 1:
                seq.append(u)
                dfs(u, visited | 1 << u)
                seq.pop()

    dfs(w, 1 << w)
    out.sort(key=lambda ear: (-pos(ear[-1]), len(ear), ear))
    return out


def _search_vine(g: Graph, path: OrientedPath, limit: int) -> Vine | None:
    """A vine on path with at most ``limit`` ears, or None."""
    p = path.order
    pos = path.position
    vs = path.vertices
    ears: list[tuple[int, ...]] = []

    def interior_mask(ear: tuple[int, ...]) -> int:
        m = 0
        for v in ear[1:-1]:
            m |= 1 << v
        return m

    def place(used: int) -> bool:
        i = len(ears)  # ears placed so far
        z_cur = pos(ears[-1][-1])
        if z_cur == p - 1:
            return True
        if i == limit:
            return False
        lo = 1 if i == 1 else pos(ears[-2][-1])
        for wpos in range(lo, z_cur):
            for ear in _ears_from(g, path, vs[wpos], z_cur + 1, used):
                ears.append(ear)
                if place(used | interior_mask(ear)):
                    return True
                ears.pop()
        return False

    for first in _ears_from(g, path, vs[0], 2, 0):
        ears.append(first)
        if place(interior_mask(first)):
            return Vine(tuple(ears))
        ears.pop()
    return None


def find_minimal_vine(g: Graph, path: OrientedPath, *, longest: bool = False) -> Vine:
    """A vine on ``path`` with the fewest ears (iterative deepening).

    With ``longest`` the path is known to be a longest path, so the first
    and last ears must be single edges; that is checked too.
    """
    for limit in range(1, max(path.order - 2, 1) + 1):
        vine = _search_vine(g, path, limit)
        if vine is not None:
            break
    else:
        raise NoVineFound("no vine on the path", {"path": path.vertices})
    problems = vine_problems(path, vine)
    if problems:
        raise ConstructionInvalid("vine search returned an invalid vine",
                                  {"vine": vine.ears, "problems": problems})
    if longest and (len(vine.ears[0]) != 2 or len(vine.ears[-1]) != 2):
        raise ConstructionInvalid("first or last ear of a vine on a longest path is not an edge",
                                  {"vine": vine.ears, "path": path.vertices})
    return vine


def has_vine_with_at_most(g: Graph, path: OrientedPath, limit: int) -> bool:
    return limit >= 1 and _search_vine(g, path, limit) is not None


# -- cycle surgery -------------------------------------------------------------------

def _assemble_cycle(g: Graph, edges: list[tuple[int, int]], start: int, state: dict) -> CycleWitness:
    """Walk the 2-regular edge set around start; it must be one cycle."""
    nbrs: dict[int, list[int]] = {}
    for a, b in edges:
        nbrs.setdefault(a, []).append(b)
        nbrs.setdefault(b, []).append(a)
    if any(len(v) != 2 for v in nbrs.values()) or len(set(map(frozenset, edges))) != len(edges):
        raise ConstructionInvalid("surgery left a vertex without degree 2", {**state, "edges": edges})
    seq = [start]
    prev, cur = start, nbrs[start][0]
    while cur != start:
        seq.append(cur)
        a, b = nbrs[cur]
        prev, cur = cur, (b if a == prev else a)
    if len(seq) != len(nbrs) or not is_cycle(g, seq):
        raise ConstructionInvalid("surgery produced several cycles", {**state, "edges": edges})
    return CycleWitness(g, tuple(seq))


def _ear_edges(ear: tuple[int, ...]) -> list[tuple[int, int]]:
    return list(zip(ear, ear[1:]))


def _path_edges_outside(path: OrientedPath, cut: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Path edges not lying inside any of the position intervals in cut."""
    vs = path.vertices
    return [
        (vs[k], vs[k + 1])
        for k in range(len(vs) - 1)
        if not any(a <= k and k + 1 <= b for a, b in cut)
    ]


def build_case1_cycle(g: Graph, path: OrientedPath, marks: EndpointMarks, vine: Vine,
                      trace: dict | None = None) -> CycleWitness:
    """Vine surgery for non-crossing endpoint marks.

    For m >= 3 the first and last ears are replaced by the chords
    ``v_1 z_1*`` and ``v_p w_m*`` and the path segments spanned by
    consecutive ears are cut out, leaving a cycle through v_1, v_p and all
    of their neighbours.  m <= 2 (not reachable from a longest path with
    non-crossing marks) falls back to the plain vine cycle.
    """
    trace = {} if trace is None else trace
    pos = path.position
    p = path.order
    m = vine.m
    w = [None] + [pos(e[0]) for e in vine.ears]  # 1-based
    z = [None] + [pos(e[-1]) for e in vine.ears]
    state = {"path": path.vertices, "vine": vine.ears, "x": marks.x_list, "y": marks.y_list}
    v1, vp = path.first, path.last
    d1, dp = g.degree(v1), g.degree(vp)

    if m <= 2:
        cut = [(w[i], z[i - 1]) for i in range(2, m + 1)]
        edges = _path_edges_outside(path, cut)
        for ear in vine.ears:
            edges += _ear_edges(ear)
        trace.update(deleted=cut)
        cycle = _assemble_cycle(g, edges, v1, state)
        if m == 1 and cycle.order < p:
            raise ConstructionInvalid("single-ear vine cycle shorter than p", state)
        return cycle

    xt, yf = pos(marks.x_t), pos(marks.y_f)
    spacing = {
        "x_t<z_2": xt < z[2],
        "x_t<w_3": xt < w[3],
        "w_{m-1}<y_f": w[m - 1] < yf,
        "z_{m-2}<y_f": z[m - 2] < yf,
    }
    trace.update(spacing=spacing)
    # what the surgery needs: all marks survive
    if not (xt < z[2] and xt <= w[3] and w[m - 1] < yf and z[m - 2] <= yf):
        raise ConstructionInvalid("vine is not minimal: marks fall inside a deleted segment",
                                  {**state, "spacing": spacing})

    x_pos = [pos(x) for x in marks.x_list]
    y_pos = [pos(y) for y in marks.y_list]
    after_w2 = [q for q in x_pos if q > w[2]]
    before_zm1 = [q for q in y_pos if q < z[m - 1]]
    if not after_w2 or not before_zm1:
        raise ConstructionInvalid("no chord from v_1 past w_2 or from v_p before z_{m-1}", state)
    z1_star, wm_star = min(after_w2), max(before_zm1)
    cut = [(w[i], z[i - 1]) for i in range(3, m)] + [(w[2], z1_star), (wm_star, z[m - 1])]
    vs = path.vertices
    edges = _path_edges_outside(path, cut)
    for ear in vine.ears[1:-1]:
        edges += _ear_edges(ear)
    edges += [(v1, vs[z1_star]), (vp, vs[wm_star])]
    trace.update(z1_star=vs[z1_star], wm_star=vs[wm_star], deleted=cut)
    cycle = _assemble_cycle(g, edges, v1, {**state, "z1*": vs[z1_star], "wm*": vs[wm_star]})
    if cycle.order < d1 + dp + 1:
        raise ConstructionInvalid("Case 1 cycle is shorter than d(v_1)+d(v_p)+1",
                                  {**state, "cycle": cycle.vertices})
    return cycle


def build_case2_cycle(g: Graph, path: OrientedPath, marks: EndpointMarks,
                      trace: dict | None = None) -> tuple[Case, CycleWitness]:
    """Cycle from crossing marks: order p (Case 2.1) or >= d(v_1)+d(v_p) (Case 2.2)."""
    trace = {} if trace is None else trace
    pos = path.position
    vs = path.vertices
    v1, vp = path.first, path.last
    state = {"path": vs, "x": marks.x_list, "y": marks.y_list}
    if marks.tag is not MarkTag.CROSSING:
        raise ConstructionInvalid("case 2 needs crossing marks", state)
    y_set = set(marks.y_list)
    for x in marks.x_list:
        k = pos(x)
        if k >= 1 and vs[k - 1] in y_set:
            seq = (v1,) + vs[k:] + vs[k - 1 : 0 : -1]
            trace.update(v=x)
            cycle = CycleWitness(g, seq)
            if not cycle.is_valid() or cycle.order != path.order:
                raise ConstructionInvalid("Case 2.1 cycle invalid", {**state, "cycle": seq})
            return Case.CASE2_1, cycle

    yf = pos(marks.y_f)
    b = min(pos(x) for x in marks.x_list if pos(x) > yf)
    a = max(pos(y) for y in marks.y_list if pos(y) < b)
    marked = {pos(u) for u in marks.x_list + marks.y_list}
    if any(a < q < b for q in marked):
        raise ConstructionInvalid("crossing pair has a mark between it", {**state, "pair": (a, b)})
    seq = (v1,) + vs[b:] + vs[a:0:-1]
    trace.update(y_j=vs[a], x_i=vs[b])
    cycle = CycleWitness(g, seq)
    if not cycle.is_valid():
        raise ConstructionInvalid("Case 2.2 cycle invalid", {**state, "cycle": seq})
    if cycle.order < g.degree(v1) + g.degree(vp):
        raise ConstructionInvalid("Case 2.2 cycle shorter than d(v_1)+d(v_p)", {**state, "cycle": seq})
    return Case.CASE2_2, cycle


# -- certificates ------------------------------------------------------------------------

@dataclass(frozen=True)
class CycleCertificate:
    graph: Graph
    path: OrientedPath
    marks: EndpointMarks
    vine: Vine | None
    case: Case
    cycle: CycleWitness
    floors: DegreeFloors
    guaranteed_t1: int
    guaranteed_t3: int | None
    details: dict = field(default_factory=dict)

    @property
    def achieved(self) -> int:
        return self.cycle.order

    @property
    def p(self) -> int:
        return self.path.order


def _not_two_connected(g: Graph) -> NotTwoConnected:
    kappa = vertex_connectivity(g)
    cuts = cut_vertices(g)
    return NotTwoConnected(f"graph is not 2-connected (kappa={kappa})", kappa, cuts[0] if cuts else None)


def certified_long_cycle(g: Graph) -> CycleCertificate:
    """Run the whole construction on a 2-connected graph and check its bounds."""
    if g.n < 3 or not is_two_connected(g):
        raise _not_two_connected(g)
    path = select_extremal_longest_path(g)
    marks = endpoint_marks(g, path)
    floors = degree_floor_inequalities(g, path, marks)
    details: dict = {}
    vine = None
    if marks.tag is MarkTag.TAIL_HIT:
        case = Case.TAIL_HIT
        cycle = CycleWitness(g, path.vertices)
    elif marks.tag is MarkTag.NON_CROSSING:
        case = Case.CASE1
        vine = find_minimal_vine(g, path, longest=True)
        cycle = build_case1_cycle(g, path, marks, vine, details)
    else:
        case, cycle = build_case2_cycle(g, path, marks, details)

    targets = bound_targets(degree_sequence(g), path.order)
    t1, t3 = targets["T1"].value, targets["T3"].value
    cert = CycleCertificate(g, path, marks, vine, case, cycle, floors, t1, t3, details)
    if not cycle.is_valid():
        raise ConstructionInvalid("certificate cycle is not a cycle of the graph", {"cycle": cycle.vertices})
    if cert.achieved < t1 or (t3 is not None and cert.achieved < t3):
        raise ConstructionInvalid(
            f"achieved {cert.achieved} below guarantee (t1={t1}, t3={t3})",
            {"case": case.value, "path": path.vertices, "cycle": cycle.vertices},
        )
    return cert


def _extension_path(g: Graph, cycle: CycleWitness) -> tuple[int, ...] | None:
    """x^+ ->C x y for an edge xy leaving the cycle, if one exists."""
    on = set(cycle.vertices)
    vs = cycle.vertices
    for i, x in enumerate(vs):
        for y in g.neighbors(x):
            if y not in on:
                return vs[i + 1 :] + vs[: i + 1] + (y,)
    return None


def hamilton_via_condition(g: Graph, cert: CycleCertificate | None = None) -> CycleWitness:
    """Hamilton cycle for a graph meeting the T2 or T4 degree condition.

    ``cert`` lets a caller that already ran ``certified_long_cycle`` on ``g``
    reuse it.
    """
    verdicts = condition_verdicts(degree_sequence(g), g.n)
    if g.n < 3 or not (verdicts["T2"].holds or verdicts["T4"].holds):
        raise ConditionNotSatisfied(
            f"neither T2 nor T4 holds (T2={verdicts['T2'].status.value}, T4={verdicts['T4'].status.value})"
        )
    if not is_two_connected(g):
        raise ProofGapViolated("degree condition holds but the graph has a cut vertex",
                               {"cut_vertices": cut_vertices(g), "connected": is_connected(g)})
    if cert is None or cert.graph != g:
        cert = certified_long_cycle(g)
    if cert.achieved == g.n:
        return cert.cycle
    state = {"cycle": cert.cycle.vertices, "p": cert.p, "case": cert.case.value}
    if cert.achieved >= cert.p:
        state["longer_path"] = _extension_path(g, cert.cycle)
        raise ProofGapViolated("cycle of order >= p is not spanning", state)
    raise ProofGapViolated("cycle shorter than both p and the condition's bound", state)


def iter_rotations(cert: CycleCertificate) -> Iterator[tuple[int, ...]]:
    for x in cert.marks.x_list:
        yield rotate_at_start(cert.path, x)
    for y in cert.marks.y_list:
        yield rotate_at_end(cert.path, y)


def check_rotations(cert: CycleCertificate) -> bool:
    """Every rotated path is a path of order p in the host graph."""
    g, p = cert.graph, cert.p
    return all(len(r) == p and is_path(g, r) for r in iter_rotations(cert))


__all__ = [
    "Case",
    "CycleCertificate",
    "DegreeFloors",
    "EndpointMarks",
    "MarkTag",
    "Vine",
    "build_case1_cycle",
    "build_case2_cycle",
    "certified_long_cycle",
    "check_rotations",
    "degree_floor_inequalities",
    "endpoint_marks",
    "find_minimal_vine",
    "hamilton_via_condition",
    "has_vine_with_at_most",
    "longest_path_order",
    "rotate_at_end",
    "rotate_at_start",
    "select_extremal_longest_path",
    "vine_problems",
]
