from __future__ import annotations

import networkx as nx
import pytest

from circumlab.audit import (
    SCHEMA_VERSION,
    audit_graph,
    audit_stream,
    edge_pairs,
    enumerate_labeled,
    graph_from_code,
)
from circumlab.errors import TooLarge
from circumlab.graph import complete_graph, cycle_graph, emit_graph6, empty_graph, join, path_graph

from conftest import to_nx


def test_enumeration_counts():
    assert len(list(enumerate_labeled(3))) == 8
    assert len(list(enumerate_labeled(1))) == 1
    graphs = list(enumerate_labeled(4))
    expected = sum(1 for g in graphs if nx.node_connectivity(to_nx(g)) >= 2)
    assert len(list(enumerate_labeled(4, "two_connected"))) == expected == 10
    assert len(list(enumerate_labeled(4, "connected"))) == sum(nx.is_connected(to_nx(g)) for g in graphs) == 38
    with pytest.raises(TooLarge):
        list(enumerate_labeled(9))


def test_enumeration_order_is_edge_code_ascending():
    graphs = list(enumerate_labeled(5))
    assert graphs == [graph_from_code(5, code) for code in range(1 << len(edge_pairs(5)))]
    assert len({emit_graph6(g) for g in graphs}) == 1024


def test_k3_record():
    r = audit_graph(complete_graph(3))
    assert r.verdicts["B"] == "Holds" and r.hamiltonian
    assert r.certificate["achieved"] == 3 and r.ok
    assert r.to_dict()["schema"] == SCHEMA_VERSION


def test_non_hamiltonian_family_records():
    r = audit_graph(join(complete_graph(2), empty_graph(3)))
    assert r.ok and not r.hamiltonian and r.c == 4 and r.certificate["case"] == "Case2.2"


def test_lazy_mode_skips_oracles_only_when_nothing_needs_them():
    r = audit_graph(path_graph(4), lazy=True)
    assert r.p is None and r.ok
    r = audit_graph(cycle_graph(4), lazy=True)
    assert r.p == 4


def test_stream_keeps_order_and_reports_errors():
    lines = ["Bw", "", "@@", "C~"]
    items = list(audit_stream(lines))
    assert [it.line for it in items] == [1, 3, 4]
    assert items[1].error and items[1].record is None
    assert items[2].record.graph6 == "C~"


def test_six_vertex_two_connected_audit_is_clean():
    bad = [r for r in map(audit_graph, enumerate_labeled(6, "two_connected")) if r.violations]
    assert bad == []
