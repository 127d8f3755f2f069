from __future__ import annotations

import pytest

from circumlab.errors import (
    ConditionNotSatisfied,
    ConstructionInvalid,
    NotLongestPath,
    NotTwoConnected,
    NoVineFound,
)
from circumlab.graph import (
    build_graph,
    complete_graph,
    cycle_graph,
    degree_sequence,
    disjoint_union,
    empty_graph,
    is_connected,
    is_two_connected,
    join,
    parse_graph6,
    path_graph,
    petersen_graph,
)
from circumlab.oracles import OrientedPath, circumference_order, enumerate_longest_paths, is_path, longest_path
from circumlab.prover import (
    Case,
    MarkTag,
    Vine,
    build_case1_cycle,
    certified_long_cycle,
    check_rotations,
    degree_floor_inequalities,
    endpoint_marks,
    find_minimal_vine,
    hamilton_via_condition,
    has_vine_with_at_most,
    iter_rotations,
    select_extremal_longest_path,
    vine_problems,
)

from conftest import random_graph

BOWTIE = join(complete_graph(1), disjoint_union(complete_graph(2), complete_graph(2)))
E1 = join(complete_graph(2), disjoint_union(empty_graph(2), complete_graph(2)))
E2 = join(complete_graph(2), empty_graph(3))
# one labeled 2-connected 7-vertex graph per case, taken from an exhaustive scan
CASE_TOKENS = {
    Case.TAIL_HIT: ["F@Ue?", "F`Ue?"],
    Case.CASE1: ["FLjE?", "FljE?", "F\\jE?"],
    Case.CASE2_1: ["Fjme?", "Ft\\e?"],
    Case.CASE2_2: ["F]rE?", "F}rE?"],
}


def reference_extremal(g):
    """Oracle: enumerate every oriented longest path and apply the selection rule directly."""
    paths = [pp.vertices for pp in enumerate_longest_paths(g)]
    return min(paths, key=lambda vs: (-g.degree(vs[0]), -g.degree(vs[-1]), vs))


def brute_min_vine(g, path):
    """Smallest vine length by exhaustive ear enumeration, independent of the prover search."""
    pos = {v: i for i, v in enumerate(path)}
    p = len(path)
    off = [v for v in range(g.n) if v not in pos]
    ears = []

    def extend(seq, used):
        last = seq[-1]
        for u in range(g.n):
            if not g.has_edge(last, u) or u in used:
                continue
            if u in pos:
                if len(seq) > 1 or abs(pos[u] - pos[seq[0]]) > 1:
                    a, b = pos[seq[0]], pos[u]
                    if a < b:
                        ears.append((a, b, frozenset(seq[1:])))
            elif u in off:
                extend(seq + [u], used | {u})

    for v in path:
        extend([v], {v})

    def grow(chain, used, m):
        if chain[-1][1] == p - 1:
            return True
        if len(chain) == m:
            return False
        for a, b, inner in ears:
            if inner & used:
                continue
            k = len(chain)
            w_prev, z_prev = chain[-1][0], chain[-1][1]
            z_prevprev = chain[-2][1] if k >= 2 else None
            if k == 1 and not (w_prev < a < z_prev):
                continue
            if k >= 2 and not (z_prevprev <= a < z_prev):
                continue
            if not b > z_prev:
                continue
            if grow(chain + [(a, b)], used | inner, m):
                return True
        return False

    for m in range(1, p):
        for a, b, inner in ears:
            if a == 0 and grow([(a, b)], inner, m):
                return m
    return None


def test_extremal_path_matches_enumeration(rng):
    checked = 0
    while checked < 80:
        g = random_graph(rng, rng.randint(3, 7))
        if not g.num_edges:
            continue
        if not is_connected(g):
            continue
        assert select_extremal_longest_path(g).vertices == reference_extremal(g)
        checked += 1


def test_extremal_path_examples():
    for g in (E2, cycle_graph(5), BOWTIE):
        path = select_extremal_longest_path(g)
        assert g.degree(path.first) == g.degree(path.last) == 2


def test_marks_tailhit_examples():
    for g in (cycle_graph(5), complete_graph(4)):
        path = select_extremal_longest_path(g)
        marks = endpoint_marks(g, path)
        assert marks.tag is MarkTag.TAIL_HIT and marks.x_t == path.last


def test_marks_reject_short_path():
    g = cycle_graph(5)
    with pytest.raises(NotLongestPath):
        endpoint_marks(g, OrientedPath(g, (0, 1, 2)))


def test_floors_on_e2_and_c5():
    for g, total in ((E2, 4), (cycle_graph(5), 4)):
        path = select_extremal_longest_path(g)
        floors = degree_floor_inequalities(g, path, endpoint_marks(g, path))
        assert floors.d_v1 + floors.d_vp >= floors.t1_floor == total
    path = select_extremal_longest_path(E2)
    floors = degree_floor_inequalities(E2, path, endpoint_marks(E2, path))
    assert floors.t3_route == "d(v_1)=d(v_p)=delta"


def test_vine_examples():
    g = cycle_graph(5)
    _, path = longest_path(g)
    vine = find_minimal_vine(g, path, longest=True)
    assert vine.m == 1 and {vine.w(1), vine.z(1)} == {path.first, path.last}
    with pytest.raises(NoVineFound):
        find_minimal_vine(BOWTIE, select_extremal_longest_path(BOWTIE))
    path = select_extremal_longest_path(E2)
    vine = find_minimal_vine(E2, path)
    assert vine.m <= 3 and not has_vine_with_at_most(E2, path, vine.m - 1)
    assert brute_min_vine(E2, path.vertices) == vine.m


def test_vine_minimality_against_brute_force(rng):
    graphs = [parse_graph6(t) for ts in CASE_TOKENS.values() for t in ts]
    while len(graphs) < 60:
        g = random_graph(rng, rng.randint(4, 8))
        if is_two_connected(g):
            graphs.append(g)
    for g in graphs:
        path = select_extremal_longest_path(g)
        vine = find_minimal_vine(g, path, longest=True)
        assert vine_problems(path, vine) == []
        assert vine.m == brute_min_vine(g, path.vertices)


def test_vine_problems_catches_bad_chains():
    g = cycle_graph(6)
    path = OrientedPath(g, (0, 1, 2, 3, 4, 5))
    assert vine_problems(path, Vine(((0, 5),))) == []
    assert vine_problems(path, Vine(((1, 2),)))  # path edge, wrong start
    assert vine_problems(path, Vine(((0, 3),)))  # not an edge of the graph


@pytest.mark.parametrize("case,tokens", list(CASE_TOKENS.items()))
def test_each_case_is_reached(case, tokens):
    for token in tokens:
        g = parse_graph6(token)
        cert = certified_long_cycle(g)
        assert cert.case is case
        assert cert.cycle.is_valid()
        assert cert.achieved >= cert.guaranteed_t1
        assert cert.guaranteed_t3 is None or cert.achieved >= cert.guaranteed_t3
        assert cert.achieved <= circumference_order(g)
        assert check_rotations(cert)
        if case is Case.CASE1:
            assert cert.vine.m >= 3
            assert cert.achieved >= cert.floors.d_v1 + cert.floors.d_vp + 1
            assert set(cert.details["spacing"]) and "z1_star" in cert.details
        if case is Case.CASE2_1:
            assert cert.achieved == cert.p
        if case is Case.CASE2_2:
            assert cert.achieved >= cert.floors.d_v1 + cert.floors.d_vp


def test_certificate_examples():
    cert = certified_long_cycle(E2)
    assert cert.achieved == 4 == cert.guaranteed_t1 == cert.guaranteed_t3
    cert = certified_long_cycle(E1)
    assert cert.guaranteed_t3 == 5 and cert.achieved >= 5 and circumference_order(E1) == 5
    cert = certified_long_cycle(cycle_graph(5))
    assert cert.case is Case.TAIL_HIT and cert.achieved == 5
    cert = certified_long_cycle(petersen_graph())
    assert cert.achieved <= 9


def test_not_two_connected_reports_cut():
    with pytest.raises(NotTwoConnected) as info:
        certified_long_cycle(BOWTIE)
    assert info.value.kappa == 1 and info.value.cut_vertex == 0
    with pytest.raises(NotTwoConnected) as info:
        certified_long_cycle(path_graph(2))


def test_case1_surgery_rejects_a_tampered_vine():
    g = parse_graph6(CASE_TOKENS[Case.CASE1][0])
    path = select_extremal_longest_path(g)
    marks = endpoint_marks(g, path)
    vine = find_minimal_vine(g, path, longest=True)
    broken = Vine(vine.ears[:1] + vine.ears[2:])
    with pytest.raises(ConstructionInvalid):
        build_case1_cycle(g, path, marks, broken)


def test_hamilton_via_condition():
    cyc = hamilton_via_condition(complete_graph(4))
    assert cyc.order == 4 and cyc.is_valid()
    # K5 minus two disjoint edges: degrees (3,3,3,3,4), T2 gives 6 >= 5
    g = build_graph(5, [(i, j) for j in range(5) for i in range(j) if (i, j) not in {(0, 1), (2, 3)}])
    assert degree_sequence(g).values == (3, 3, 3, 3, 4)
    cyc = hamilton_via_condition(g)
    assert cyc.order == 5 and cyc.is_valid()
    with pytest.raises(ConditionNotSatisfied):
        hamilton_via_condition(E2)


def test_rotations_are_paths(rng):
    done = 0
    while done < 50:
        g = random_graph(rng, rng.randint(4, 9))
        if not is_two_connected(g):
            continue
        cert = certified_long_cycle(g)
        for rotated in iter_rotations(cert):
            assert len(rotated) == cert.p and is_path(g, rotated)
        done += 1
