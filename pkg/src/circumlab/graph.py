"""Immutable simple graphs on bitset adjacency rows.

Vertices are ``0..n-1``; ``adj[v]`` is an int whose bit ``u`` is set when
``uv`` is an edge.  Everything here is pure and the values are hashable, so
graphs can be shared freely between worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .errors import IndexOutOfRange, MalformedToken, SelfLoop, TooLarge

MAX_ORDER = 62


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for j in range(self.n) for i in iter_bits(self.adj[j] & ((1 << j) - 1))]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list.  Repeated edges are merged."""
    if not 0 <= n <= MAX_ORDER:
        raise TooLarge(f"order {n} outside 0..{MAX_ORDER}")
    adj = [0] * n
    for i, j in edges:
        if not (0 <= i < n and 0 <= j < n):
            raise IndexOutOfRange(f"edge ({i}, {j}) has an endpoint outside 0..{n - 1}")
        if i == j:
            raise SelfLoop(f"loop at vertex {i}")
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def _from_rows(n: int, rows: Iterable[int]) -> Graph:
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def complete_graph(n: int) -> Graph:
    if not 0 <= n <= MAX_ORDER:
        raise TooLarge(f"order {n} outside 0..{MAX_ORDER}")
    full = (1 << n) - 1
    return _from_rows(n, (full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Place ``h`` after ``g``: h's vertex v becomes ``g.n + v``."""
    n = g.n + h.n
    if n > MAX_ORDER:
        raise TooLarge(f"combined order {n} exceeds {MAX_ORDER}")
    return _from_rows(n, list(g.adj) + [row << g.n for row in h.adj])


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between V(g) and V(h)."""
    u = disjoint_union(g, h)
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << g.n
    rows = [row | h_mask for row in u.adj[: g.n]] + [row | g_mask for row in u.adj[g.n :]]
    return _from_rows(u.n, rows)


# -- graph6 -----------------------------------------------------------------

@lru_cache(maxsize=None)
def _pair_order(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for j in range(1, n) for i in range(j))


def emit_graph6(g: Graph) -> str:
    """Encode ``g`` as a header-less graph6 token."""
    if g.n > MAX_ORDER:
        raise TooLarge(f"graph6 short form holds at most {MAX_ORDER} vertices")
    out = [chr(g.n + 63)]
    adj = g.adj
    bits = [adj[i] >> j & 1 for i, j in _pair_order(g.n)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        a, b, c, d, e, f = bits[k : k + 6]
        out.append(chr((a << 5 | b << 4 | c << 3 | d << 2 | e << 1 | f) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 token (surrounding whitespace is ignored)."""
    token = text.strip()
    if token.startswith(">>graph6<<"):
        raise MalformedToken("graph6 header is not accepted")
    if not token:
        raise MalformedToken("empty token")
    codes = [ord(ch) - 63 for ch in token]
    if any(not 0 <= c <= 63 for c in codes):
        raise MalformedToken(f"character outside 63..126 in {token!r}")
    n = codes[0]
    if n > MAX_ORDER:
        raise MalformedToken(f"size byte {token[0]!r} denotes n > {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    body = codes[1:]
    if len(body) != (nbits + 5) // 6:
        raise MalformedToken(f"{token!r}: expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    pad = len(body) * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise MalformedToken(f"{token!r}: nonzero padding bits")
    adj = [0] * n
    bits = [c >> s & 1 for c in body for s in (5, 4, 3, 2, 1, 0)]
    for (i, j), bit in zip(_pair_order(n), bits):
        if bit:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, tuple(adj))


# -- degrees ----------------------------------------------------------------

class _Inapplicable:
    """Result of reading d_k with k > n.  A value, not an error."""

    _instance: _Inapplicable | None = None

    def __new__(cls) -> _Inapplicable:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INAPPLICABLE"

    def __reduce__(self) -> str:
        return "INAPPLICABLE"


INAPPLICABLE = _Inapplicable()


@dataclass(frozen=True, slots=True)
class DegreeSequence:
    values: tuple[int, ...]  # ascending

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def delta(self) -> int:
        return self.values[0]

    def d(self, k: int) -> int | _Inapplicable:
        return indexed_degree(self, k)


def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence(tuple(sorted(g.degrees())))


def indexed_degree(ds: DegreeSequence, k: int) -> int | _Inapplicable:
    """1-based access ``d_k``; ``INAPPLICABLE`` when ``k`` exceeds n."""
    if k < 1:
        raise IndexOutOfRange(f"degree index must be >= 1, got {k}")
    if k > len(ds.values):
        return INAPPLICABLE
    return ds.values[k - 1]


# -- connectivity -----------------------------------------------------------

def reach(g: Graph, start: int, allowed: int) -> int:
    """Mask of vertices reachable from ``start`` inside ``allowed``."""
    seen = frontier = 1 << start
    adj = g.adj
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def _connected_within(g: Graph, allowed: int) -> bool:
    if not allowed:
        return True
    start = (allowed & -allowed).bit_length() - 1
    return reach(g, start, allowed) == allowed


def _component_count(g: Graph, allowed: int) -> int:
    count = 0
    while allowed:
        start = (allowed & -allowed).bit_length() - 1
        allowed &= ~reach(g, start, allowed)
        count += 1
    return count


def is_connected(g: Graph) -> bool:
    return _connected_within(g, g.full_mask)


def is_complete(g: Graph) -> bool:
    return all(row.bit_count() == g.n - 1 for row in g.adj)


def cut_vertices(g: Graph) -> list[int]:
    """Vertices whose removal increases the number of components."""
    full = g.full_mask
    base = _component_count(g, full)
    return [v for v in range(g.n) if _component_count(g, full & ~(1 << v)) > base]


def is_two_connected(g: Graph) -> bool:
    if g.n < 3 or not is_connected(g):
        return False
    full = g.full_mask
    return all(_connected_within(g, full & ~(1 << v)) for v in range(g.n))


def minimum_vertex_cut(g: Graph) -> tuple[int, ...] | None:
    """A smallest separating vertex set, or None for complete graphs.

    Brute force over subsets of increasing size; fine at the orders this
    package targets.  A disconnected graph yields the empty cut.
    """
    if is_complete(g):
        return None
    full = g.full_mask
    if not _connected_within(g, full):
        return ()
    for k in range(1, g.n - 1):
        for cut in combinations(range(g.n), k):
            rest = full
            for v in cut:
                rest &= ~(1 << v)
            if not _connected_within(g, rest):
                return cut
    raise AssertionError("a non-complete graph always has a cut of size <= n-2")


def vertex_connectivity(g: Graph) -> int:
    """kappa(g), with kappa(K_n) = n-1 and 0 for disconnected graphs."""
    cut = minimum_vertex_cut(g)
    if cut is None:
        return max(g.n - 1, 0)
    return len(cut)
