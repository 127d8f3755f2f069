from __future__ import annotations

from itertools import permutations

import networkx as nx
import pytest

from circumlab.errors import ResourceLimit
from circumlab.graph import build_graph, complete_graph, cycle_graph, disjoint_union, empty_graph, join, path_graph, petersen_graph
from circumlab.oracles import (
    circumference,
    circumference_order,
    enumerate_longest_paths,
    is_hamiltonian,
    is_cycle,
    is_path,
    longest_path,
    longest_path_order,
)

from conftest import random_graph, to_nx

BOWTIE = join(complete_graph(1), disjoint_union(complete_graph(2), complete_graph(2)))
E1 = join(complete_graph(2), disjoint_union(empty_graph(2), complete_graph(2)))
E2 = join(complete_graph(2), empty_graph(3))


def brute_paths(g):
    """All oriented simple paths of maximum order, by permutation filtering."""
    best: list[tuple[int, ...]] = []
    for k in range(g.n, 0, -1):
        best = [seq for seq in permutations(range(g.n), k) if all(g.has_edge(a, b) for a, b in zip(seq, seq[1:]))]
        if best:
            return best
    return [()]


def brute_circumference(g):
    G = to_nx(g)
    return max((len(c) for c in nx.simple_cycles(G) if len(c) >= 3), default=0)


def test_known_values():
    assert longest_path_order(BOWTIE) == 5
    assert longest_path_order(E1) == 6
    assert longest_path_order(empty_graph(1)) == 1
    assert circumference_order(E2) == 4
    assert circumference_order(BOWTIE) == 3
    c, witness = circumference(path_graph(4))
    assert c == 0 and witness is None


def test_hamiltonicity_examples():
    assert is_hamiltonian(complete_graph(4))[0]
    assert not is_hamiltonian(E2)[0]
    pet = petersen_graph()
    assert not is_hamiltonian(pet)[0]
    c, witness = circumference(pet)
    assert c == 9 and witness.is_valid() and witness.order == 9


def test_witnesses_are_valid(rng):
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 9))
        p, path = longest_path(g)
        assert path.order == p and is_path(g, path.vertices)
        c, cyc = circumference(g)
        if c:
            assert cyc.order == c and is_cycle(g, cyc.vertices)
        assert c <= p


def test_against_brute_force(rng):
    for _ in range(120):
        g = random_graph(rng, rng.randint(1, 7))
        paths = brute_paths(g)
        assert longest_path_order(g) == len(paths[0])
        assert circumference_order(g) == brute_circumference(g)
        ham, _ = is_hamiltonian(g) if g.n >= 3 else (False, None)
        assert ham == (g.n >= 3 and brute_circumference(g) == g.n)


def test_enumerated_paths_match_brute_force(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(2, 7))
        got = [pp.vertices for pp in enumerate_longest_paths(g)]
        assert len(got) == len(set(got))
        assert sorted(got) == sorted(brute_paths(g))


def test_enumeration_examples():
    assert len(list(enumerate_longest_paths(cycle_graph(5)))) == 10
    assert len(list(enumerate_longest_paths(complete_graph(3)))) == 6
    apex_side = {1, 2}
    for path in enumerate_longest_paths(BOWTIE):
        assert path.order == 5
        assert (path.first in apex_side) != (path.last in apex_side)


def test_enumeration_budget_is_loud():
    with pytest.raises(ResourceLimit) as info:
        list(enumerate_longest_paths(complete_graph(6), max_paths=10))
    assert info.value.partial == 10


def test_oracle_size_limit():
    with pytest.raises(ResourceLimit):
        longest_path_order(empty_graph(17))


def test_oriented_path_navigation():
    _, path = longest_path(cycle_graph(5))
    vs = path.vertices
    assert path.succ(vs[0]) == vs[1] and path.pred(vs[1]) == vs[0]
    assert path.precedes(vs[0], vs[2]) and path.precedes_eq(vs[2], vs[2])
    assert path.segment(vs[3], vs[1]) == (vs[3], vs[2], vs[1])
    assert path.reversed().vertices == vs[::-1]
