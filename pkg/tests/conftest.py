from __future__ import annotations

import pathlib

import pytest

from mustpath.graph import Graph, parse_edge_list

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


def load_fixture(name: str) -> Graph:
    return parse_edge_list((FIXTURES / name).read_text())


def graph_from_pairs(pairs, labels=None) -> Graph:
    verts = sorted({v for p in pairs for v in p})
    labs = labels or {v: str(v) for v in verts}
    return Graph(verts, labs, {i: p for i, p in enumerate(pairs)})


def triangle() -> Graph:
    return graph_from_pairs([(0, 1), (1, 2), (0, 2)])


def cycle_graph(n: int) -> Graph:
    return graph_from_pairs([(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return graph_from_pairs([(i, j) for i in range(n) for j in range(i + 1, n)])


def prism() -> Graph:
    # two triangles 0,1,2 and 3,4,5 joined by rungs (i, i+3)
    pairs = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    return graph_from_pairs(pairs)


def theta(hops: int = 2) -> Graph:
    # vertices 0 (s) and 1 (t) joined by three internally disjoint paths
    pairs = []
    nxt = 2
    for _ in range(3):
        prev = 0
        for _ in range(hops - 1):
            pairs.append(tuple(sorted((prev, nxt))))
            prev = nxt
            nxt += 1
        pairs.append(tuple(sorted((prev, 1))))
    return graph_from_pairs(pairs)


@pytest.fixture(scope="session")
def figure2() -> Graph:
    return load_fixture("figure2.edges")


@pytest.fixture(scope="session")
def figure1() -> Graph:
    return load_fixture("figure1.edges")
