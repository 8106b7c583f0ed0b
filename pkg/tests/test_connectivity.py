from __future__ import annotations

import itertools

import pytest

from mustpath import connectivity as cn
from mustpath import oracle
from mustpath.graph import add_edge, induced_subgraph
from mustpath.connectivity import (
    ConnectivityError,
    edge_capacity_network,
    find_blocks,
    is_k_connected,
    max_flow,
    pep_chain_reduction,
    reduce_to_common_block,
    vertex_disjoint_paths,
    vertex_split_network,
)

from .conftest import complete_graph, cycle_graph, graph_from_pairs, prism


def brute_min_vertex_cut(g, s, t):
    """Smallest vertex set (avoiding s,t) whose removal separates s,t; None if adjacent."""
    if g.edge_between(s, t) is not None:
        return None
    others = [v for v in g.vertices if v not in (s, t)]
    for k in range(len(others) + 1):
        for combo in itertools.combinations(others, k):
            rest = set(g.vertices) - set(combo)
            sub = induced_subgraph(g, rest)
            if not _connected_between(sub, s, t):
                return set(combo)
    return set(others)


def _connected_between(g, s, t):
    seen = {s}
    stack = [s]
    while stack:
        v = stack.pop()
        for w, _ in g.adj[v]:
            if w == t:
                return True
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def brute_min_edge_cut_size(g):
    for k in range(1, g.m + 1):
        for combo in itertools.combinations(g.edges, k):
            if not cn.is_connected(
                graph_from_pairs_prekeep(g, set(combo))
            ):
                return k
    return g.m


def graph_from_pairs_prekeep(g, drop):
    from mustpath.graph import Graph

    return Graph(g.vertices, g.labels, {e: uv for e, uv in g.edges.items() if e not in drop})


# ---------------------------------------------------------------------------
# blocks


def test_find_blocks_figure1(figure1):
    tree = find_blocks(figure1)
    assert len(tree.blocks) == 4
    arts = {figure1.labels[v] for v in tree.articulation_vertices}
    assert arts == {"y", "x"}
    sets = sorted(
        [frozenset(figure1.labels[v] for v in b.vertices) for b in tree.blocks], key=sorted
    )
    assert frozenset({"s", "v1", "v2", "y", "x"}) in sets
    assert frozenset({"y", "z", "zp"}) in sets
    assert frozenset({"wp", "x"}) in sets


def test_find_blocks_cycle():
    tree = find_blocks(cycle_graph(5))
    assert len(tree.blocks) == 1
    assert not tree.articulation_vertices
    assert not tree.blocks[0].is_trivial


def test_find_blocks_path():
    tree = find_blocks(graph_from_pairs([(0, 1), (1, 2)]))
    assert len(tree.blocks) == 2
    assert all(b.is_trivial for b in tree.blocks)
    assert tree.articulation_vertices == frozenset({1})


def test_block_invariants_random():
    for seed in range(40):
        g = oracle.random_graph_suite(seed, "connected", 4 + seed % 6, 6 + seed % 8)
        tree = find_blocks(g)
        covered = sorted(e for b in tree.blocks for e in b.edges)
        assert covered == sorted(g.edges)  # every edge in exactly one block
        for v in g.vertices:
            in_many = len(tree.vertex_blocks[v]) >= 2
            assert in_many == (v in tree.articulation_vertices)
        for b in tree.blocks:
            sub = induced_subgraph(g, b.vertices)
            assert cn.is_biconnected(sub)


def test_reduce_to_common_block_two_triangles():
    g = graph_from_pairs([(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])
    assert reduce_to_common_block(g, 1, 3) is None
    sub = reduce_to_common_block(g, 1, 2)
    assert set(sub.vertices) == {0, 1, 2}


def test_reduce_to_common_block_cycle():
    g = cycle_graph(5)
    sub = reduce_to_common_block(g, 0, 3)
    assert sub.m == 5


def test_reduce_to_common_block_figure1(figure1):
    s, v1 = figure1.vertex_id("s"), figure1.vertex_id("v1")
    sub = reduce_to_common_block(figure1, s, v1)
    assert {figure1.labels[v] for v in sub.vertices} == {"s", "v1", "v2", "y", "x"}


def test_reduce_same_vertex_rejected():
    with pytest.raises(ConnectivityError):
        reduce_to_common_block(cycle_graph(4), 1, 1)


def test_pep_chain_path():
    g = graph_from_pairs([(0, 1), (1, 2), (2, 3)])
    assert pep_chain_reduction(g, 0, 3) is g
    assert pep_chain_reduction(g, 0, 2) is None  # vertex 3 dangles


def test_pep_chain_star():
    g = graph_from_pairs([(0, 1), (0, 2), (0, 3)])
    assert pep_chain_reduction(g, 1, 2) is None  # third leaf hangs off


def test_pep_chain_figure1(figure1):
    s, t = figure1.vertex_id("s"), figure1.vertex_id("t")
    plus, _ = add_edge(figure1, s, t)
    expect = cn.is_biconnected(plus)
    got = pep_chain_reduction(figure1, s, t) is not None
    assert got == expect
    assert got is False  # wp and the z-triangle hang off the s-t chain


# ---------------------------------------------------------------------------
# flow


def test_k4_vertex_split_flow():
    g = complete_graph(4)
    net = vertex_split_network(g, [0], [3])
    assert max_flow(net, 3) == 3


def test_c5_vertex_split_flow():
    g = cycle_graph(5)
    net = vertex_split_network(g, [0], [2])
    assert max_flow(net, 3) == 2


def test_prism_minus_rung_edge_flow():
    g = prism()
    rung = g.edge_between(0, 3)
    from mustpath.graph import remove_edge

    g2 = remove_edge(g, rung)
    # brute-force check: minimum edge cut separating 0 from 3 has size 2
    assert len(oracle.oracle_2_edge_cuts(g2, 0, 3)) >= 1
    net = edge_capacity_network(g2, 0, 3)
    assert max_flow(net, 3) == 2


def test_disjoint_paths_k4():
    g = complete_graph(4)
    paths = vertex_disjoint_paths(g, [0], [3], 3)
    assert paths is not None and len(paths) == 3
    lengths = sorted(len(p.edges) for p in paths)
    assert lengths == [1, 2, 2]
    _assert_disjoint(paths, {0}, {3})
    for p in paths:
        p.validate(g)


def test_disjoint_paths_c6_antipodal():
    g = cycle_graph(6)
    paths = vertex_disjoint_paths(g, [0], [3], 2)
    assert paths is not None
    assert sorted(len(p.edges) for p in paths) == [3, 3]
    _assert_disjoint(paths, {0}, {3})


def test_disjoint_paths_prism():
    g = prism()
    assert is_k_connected(g, 3)
    paths = vertex_disjoint_paths(g, [0], [4], 3)
    assert paths is not None and len(paths) == 3
    _assert_disjoint(paths, {0}, {4})
    for p in paths:
        p.validate(g)


def test_disjoint_paths_absent():
    g = cycle_graph(5)
    assert vertex_disjoint_paths(g, [0], [2], 3) is None


def test_disjoint_paths_sides():
    g = prism()
    paths = vertex_disjoint_paths(g, [0, 1, 2], [3, 4, 5], 3)
    assert paths is not None
    seen = set()
    for p in paths:
        assert not (set(p.vertices) & seen)
        seen |= set(p.vertices)
        assert p.vertices[0] in (0, 1, 2) and p.vertices[-1] in (3, 4, 5)


def test_disjoint_paths_shared_side_vertex():
    g = complete_graph(4)
    paths = vertex_disjoint_paths(g, [0, 1], [1, 2], 2)
    assert paths is not None
    assert any(len(p.vertices) == 1 for p in paths)  # the shared vertex path


def _assert_disjoint(paths, sa, sb):
    internal = [set(p.vertices[1:-1]) for p in paths]
    for i, a in enumerate(internal):
        assert not (a & (sa | sb))
        for b in internal[i + 1 :]:
            assert not (a & b)


def test_is_k_connected_basics():
    assert is_k_connected(complete_graph(4), 3)
    assert is_k_connected(cycle_graph(5), 2)
    assert not is_k_connected(cycle_graph(5), 3)
    assert is_k_connected(prism(), 3)
    with pytest.raises(ConnectivityError):
        is_k_connected(prism(), 4)


def test_is_k_connected_figure2(figure2):
    # {x, t} is a 2-cut, so the graph is biconnected but not triconnected
    assert is_k_connected(figure2, 2)
    assert not is_k_connected(figure2, 3)


def test_is_k_connected_vs_brute():
    for seed in range(60):
        g = oracle.random_graph_suite(seed, "connected", 4 + seed % 5, 5 + seed % 9)
        got3 = is_k_connected(g, 3)
        want3 = _brute_k_connected(g, 3)
        assert got3 == want3, f"seed {seed}"
        assert is_k_connected(g, 2) == _brute_k_connected(g, 2)


def _brute_k_connected(g, k):
    if g.n == k and g.m == k * (k - 1) // 2:
        return True
    if g.n < k + 1:
        return False
    for combo in itertools.combinations(g.vertices, k - 1):
        rest = set(g.vertices) - set(combo)
        if not rest:
            continue
        if not cn.is_connected(induced_subgraph(g, rest)):
            return False
    return True


def test_maxflow_equals_min_vertex_cut():
    # max-flow/min-cut consistency on the vertex-split network
    for seed in range(40):
        g = oracle.random_graph_suite(seed, "connected", 4 + seed % 5, 5 + seed % 7)
        for s in g.vertices[:2]:
            for t in g.vertices[-2:]:
                if s == t or g.edge_between(s, t) is not None:
                    continue
                cut = brute_min_vertex_cut(g, s, t)
                net = vertex_split_network(g, [s], [t])
                assert max_flow(net, g.n) == len(cut)


def test_edge_vertex_cut_theorem():
    # a k-edge cut in a graph with >= k+2 vertices implies a vertex cut of size <= k
    for seed in range(25):
        g = oracle.random_graph_suite(seed, "connected", 6, 8 + seed % 5)
        ec = brute_min_edge_cut_size(g)
        if g.n >= ec + 2:
            vc = _brute_min_vertex_cut_global(g)
            assert vc <= ec


def _brute_min_vertex_cut_global(g):
    for k in range(1, g.n - 1):
        for combo in itertools.combinations(g.vertices, k):
            rest = set(g.vertices) - set(combo)
            if len(rest) >= 2 and not cn.is_connected(induced_subgraph(g, rest)):
                return k
    return g.n - 1


def test_odd_min_cuts_do_not_cross():
    # pairs of 3-edge minimum cuts never split the vertices four ways
    found = 0
    for seed in range(80):
        g = oracle.random_graph_suite(seed, "triconnected", 6 + seed % 3, 9 + seed % 4)
        cuts = _all_min_edge_cuts(g, 3)
        if len(cuts) < 2:
            continue
        found += 1
        for c1, c2 in itertools.combinations(cuts, 2):
            parts = _quadrants(g, c1, c2)
            assert len([p for p in parts if p]) <= 3
    assert found >= 3


def _all_min_edge_cuts(g, size):
    if brute_min_edge_cut_size(g) != size:
        return []
    cuts = []
    for combo in itertools.combinations(g.edges, size):
        sub = graph_from_pairs_prekeep(g, set(combo))
        if not cn.is_connected(sub):
            if all(
                cn.is_connected(graph_from_pairs_prekeep(g, set(combo) - {e})) for e in combo
            ):
                cuts.append(combo)
    return cuts


def _quadrants(g, c1, c2):
    def side_split(cut):
        sub = graph_from_pairs_prekeep(g, set(cut))
        comp = _component(sub, g.vertices[0])
        return comp, set(g.vertices) - comp

    a1, b1 = side_split(c1)
    a2, b2 = side_split(c2)
    return [a1 & a2, a1 & b2, b1 & a2, b1 & b2]


def _component(g, start):
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w, _ in g.adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen
