"""Exact ground truth: longest paths, circumference, Hamiltonicity.

The searches run a dynamic program over vertex subsets.  For every mask
``S`` it records

* ``ends[S]``: vertices ``v`` such that ``G[S]`` has a Hamilton path ending
  at ``v`` (any start), and
* ``anchored[S]``: the same, restricted to paths that start at the lowest
  vertex of ``S``.

A longest path is a largest ``S`` with ``ends[S] != 0``; a longest cycle is
a largest ``S`` (at least 3 vertices) where some anchored end is adjacent to
the anchor.  Cost is O(2^n * n) bit operations, exact up to
``MAX_EXACT_ORDER`` vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator

from .errors import ResourceLimit
from .graph import Graph, iter_bits, reach

MAX_EXACT_ORDER = 16


@dataclass(frozen=True)
class OrientedPath:
    host: Graph
    vertices: tuple[int, ...]

    @cached_property
    def _pos(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def first(self) -> int:
        return self.vertices[0]

    @property
    def last(self) -> int:
        return self.vertices[-1]

    @cached_property
    def mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m

    def __contains__(self, v: int) -> bool:
        return v in self._pos

    def position(self, v: int) -> int:
        return self._pos[v]

    def succ(self, v: int) -> int | None:
        i = self._pos[v] + 1
        return self.vertices[i] if i < len(self.vertices) else None

    def pred(self, v: int) -> int | None:
        i = self._pos[v] - 1
        return self.vertices[i] if i >= 0 else None

    def precedes(self, a: int, b: int) -> bool:
        return self._pos[a] < self._pos[b]

    def precedes_eq(self, a: int, b: int) -> bool:
        return self._pos[a] <= self._pos[b]

    def segment(self, a: int, b: int) -> tuple[int, ...]:
        """Vertices from ``a`` to ``b`` inclusive, walking backwards if b precedes a."""
        i, j = self._pos[a], self._pos[b]
        if i <= j:
            return self.vertices[i : j + 1]
        return self.vertices[j : i + 1][::-1]

    def reversed(self) -> OrientedPath:
        return OrientedPath(self.host, self.vertices[::-1])

    def is_valid(self) -> bool:
        return is_path(self.host, self.vertices)


@dataclass(frozen=True)
class CycleWitness:
    host: Graph
    vertices: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.vertices)

    def is_valid(self) -> bool:
        return is_cycle(self.host, self.vertices)


def is_path(g: Graph, seq: tuple[int, ...] | list[int]) -> bool:
    if not seq or len(set(seq)) != len(seq):
        return False
    if any(not 0 <= v < g.n for v in seq):
        return False
    return all(g.has_edge(a, b) for a, b in zip(seq, seq[1:]))


def is_cycle(g: Graph, seq: tuple[int, ...] | list[int]) -> bool:
    return len(seq) >= 3 and is_path(g, seq) and g.has_edge(seq[-1], seq[0])


@lru_cache(maxsize=None)
def _mask_bits(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    return tuple(tuple((v, 1 << v) for v in iter_bits(mask)) for mask in range(1 << n))


@dataclass(frozen=True, slots=True)
class _Tables:
    ends: list[int]
    anchored: list[int]
    p: int
    c: int
    path_mask: int
    cycle_mask: int


@lru_cache(maxsize=8)
def _tables(g: Graph) -> _Tables:
    n = g.n
    if n > MAX_EXACT_ORDER:
        raise ResourceLimit(f"exact search is limited to n <= {MAX_EXACT_ORDER}, got n={n}")
    adj = g.adj
    size = 1 << n
    ends = [0] * size
    anchored = [0] * size
    bits = _mask_bits(n)
    best_p, path_mask = (1, 1) if n else (0, 0)
    best_c, cycle_mask = 0, 0
    for mask in range(1, size):
        bl = bits[mask]
        k = len(bl)
        if k == 1:
            ends[mask] = anchored[mask] = mask
            continue
        low = bl[0][1]
        e = a = 0
        for v, vb in bl:
            rest = mask ^ vb
            if adj[v] & ends[rest]:
                e |= vb
            if vb != low and adj[v] & anchored[rest]:
                a |= vb
        ends[mask] = e
        anchored[mask] = a
        if e and k > best_p:
            best_p, path_mask = k, mask
        if k >= 3 and k > best_c and a & adj[bl[0][0]]:
            best_c, cycle_mask = k, mask
    return _Tables(ends, anchored, best_p, best_c, path_mask, cycle_mask)


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def longest_path(g: Graph) -> tuple[int, OrientedPath]:
    """Order p of a longest path and one witness."""
    if g.n < 1:
        raise ValueError("longest_path needs at least one vertex")
    t = _tables(g)
    mask = t.path_mask
    v = _lowest(t.ends[mask])
    seq = [v]
    while mask != 1 << v:
        mask ^= 1 << v
        v = _lowest(g.adj[v] & t.ends[mask])
        seq.append(v)
    return t.p, OrientedPath(g, tuple(seq))


def longest_path_order(g: Graph) -> int:
    return _tables(g).p if g.n else 0


def circumference(g: Graph) -> tuple[int, CycleWitness | None]:
    """Order c of a longest cycle and a witness; ``(0, None)`` for forests."""
    if g.n < 3:
        return 0, None
    t = _tables(g)
    if not t.c:
        return 0, None
    mask = t.cycle_mask
    anchor = _lowest(mask)
    v = _lowest(t.anchored[mask] & g.adj[anchor])
    seq = [v]
    while mask != (1 << anchor) | (1 << v):
        mask ^= 1 << v
        v = _lowest(g.adj[v] & t.anchored[mask])
        seq.append(v)
    seq.append(anchor)
    return t.c, CycleWitness(g, tuple(reversed(seq)))


def circumference_order(g: Graph) -> int:
    return _tables(g).c if g.n >= 3 else 0


def is_hamiltonian(g: Graph) -> tuple[bool, CycleWitness | None]:
    """Hamiltonicity needs n >= 3; K1 and K2 are not Hamiltonian."""
    c, witness = circumference(g)
    if g.n >= 3 and c == g.n:
        return True, witness
    return False, None


def enumerate_longest_paths(g: Graph, *, max_paths: int = 1_000_000) -> Iterator[OrientedPath]:
    """Yield every oriented longest path once, in lexicographic order.

    Raises ``ResourceLimit`` (carrying the number already yielded) instead of
    stopping quietly when ``max_paths`` would be exceeded.
    """
    if g.n < 2:
        raise ValueError("enumerate_longest_paths needs n >= 2")
    p = longest_path_order(g)
    adj = g.adj
    full = g.full_mask
    count = 0
    seq: list[int] = []

    def extend(v: int, visited: int) -> Iterator[tuple[int, ...]]:
        if len(seq) == p:
            yield tuple(seq)
            return
        need = p - len(seq)
        if (reach(g, v, full & ~visited | 1 << v).bit_count() - 1) < need:
            return
        for u in iter_bits(adj[v] & ~visited):
            seq.append(u)
            yield from extend(u, visited | 1 << u)
            seq.pop()

    for s in range(g.n):
        seq.append(s)
        for found in extend(s, 1 << s):
            if count >= max_paths:
                raise ResourceLimit(f"more than {max_paths} longest paths", partial=count)
            count += 1
            yield OrientedPath(g, found)
        seq.pop()
