from __future__ import annotations

import random

import networkx as nx
import pytest

from circumlab.graph import Graph, build_graph


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def random_graph(rng: random.Random, n: int, density: float | None = None) -> Graph:
    q = rng.random() if density is None else density
    edges = [(i, j) for j in range(n) for i in range(j) if rng.random() < q]
    return build_graph(n, edges)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


_REPORT: list[str] = []


def report_line(criterion: int, ok: bool, detail: str) -> None:
    line = f"[criterion {criterion}] {'PASS' if ok else 'FAIL'}: {detail}"
    _REPORT.append(line)
    print("\n" + line)


def pytest_terminal_summary(terminalreporter):
    if _REPORT:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_REPORT):
            terminalreporter.write_line(line)
