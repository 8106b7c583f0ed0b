from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mustpath.graph import (
    EdgeRef,
    GraphError,
    ParseError,
    VertexRef,
    add_edge,
    graph_to_dot,
    induced_subgraph,
    parse_edge_list,
    remove_edge,
    to_edge_list,
)
from mustpath.connectivity import articulation_points

from .conftest import complete_graph, graph_from_pairs, load_fixture, triangle


def test_parse_triangle():
    g = parse_edge_list("a b\nb c\na c")
    assert g.n == 3 and g.m == 3
    assert g.labels == {0: "a", 1: "b", 2: "c"}


def test_parse_duplicate_collapsed():
    with pytest.warns(UserWarning, match="duplicate"):
        g = parse_edge_list("a b\na b")
    assert g.n == 2 and g.m == 1


def test_parse_self_loop_rejected():
    with pytest.raises(ParseError, match="self-loop"):
        parse_edge_list("a a")


def test_parse_reports_line_numbers():
    with pytest.raises(ParseError, match="line 3"):
        parse_edge_list("a b\nb c\nc\n")


def test_parse_empty_input():
    with pytest.raises(ParseError, match="no edges"):
        parse_edge_list("# just a comment\n")


def test_parse_comments_and_blank_lines():
    g = parse_edge_list("# header\n\na b\n  # indented comment\nb c\n")
    assert g.m == 2


def test_add_edge_path_to_triangle():
    g = graph_from_pairs([(0, 1), (1, 2)])
    g2, present = add_edge(g, 0, 2)
    assert not present
    assert g2.m == 3 and g.m == 2  # original untouched


def test_add_edge_already_present():
    g = triangle()
    g2, present = add_edge(g, 0, 1)
    assert present and g2 is g


def test_add_edge_rejects_self_loop():
    with pytest.raises(GraphError):
        add_edge(triangle(), 1, 1)


def test_add_edge_c4_chord_biconnected():
    # 4-cycle s-a-t-b plus chord (s,t): still no articulation vertex
    g = graph_from_pairs([(0, 1), (1, 2), (2, 3), (0, 3)])
    g2, _ = add_edge(g, 0, 2)
    assert articulation_points(g2) == frozenset()


def test_add_then_remove_roundtrip():
    g = graph_from_pairs([(0, 1), (1, 2)])
    g2, _ = add_edge(g, 0, 2)
    eid = g2.edge_between(0, 2)
    g3 = remove_edge(g2, eid)
    assert g3.edges == g.edges and g3.vertices == g.vertices


def test_induced_subgraph_edge():
    g = triangle()
    sub = induced_subgraph(g, {0, 1})
    assert sub.n == 2 and sub.m == 1
    assert sub.edge_between(0, 1) == g.edge_between(0, 1)  # edge id preserved


def test_induced_subgraph_identity():
    g = complete_graph(4)
    sub = induced_subgraph(g, g.vertices)
    assert sub.edges == g.edges


def test_induced_subgraph_figure1_block():
    g = load_fixture("figure1.edges")
    ids = {g.vertex_id(lab) for lab in ("s", "v1", "v2", "y", "x")}
    sub = induced_subgraph(g, ids)
    assert sub.n == 5 and sub.m == 8
    assert articulation_points(sub) == frozenset()


def test_induced_subgraph_empty_rejected():
    with pytest.raises(GraphError):
        induced_subgraph(triangle(), set())


def test_element_refs():
    g = triangle()
    assert g.element_exists(VertexRef(0))
    assert g.element_exists(EdgeRef(2))
    assert not g.element_exists(EdgeRef(9))


def test_to_dot_triangle():
    dot = graph_to_dot(triangle())
    assert dot.count(" -- ") == 3
    assert dot.count("label=") == 3


def test_to_dot_single_edge():
    dot = graph_to_dot(graph_from_pairs([(0, 1)]))
    assert dot.count(" -- ") == 1


label = st.text(alphabet="abcdefgh", min_size=1, max_size=2)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(label, label), min_size=1, max_size=25))
def test_parse_roundtrip(pairs):
    pairs = [(a, b) for a, b in pairs if a != b]
    if not pairs:
        return
    text = "\n".join(f"{a} {b}" for a, b in pairs)
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        g = parse_edge_list(text)
        g2 = parse_edge_list(to_edge_list(g))
    assert g2.n == g.n and g2.m == g.m
    assert {frozenset(e) for e in g2.edges.values()} == {
        frozenset(e) for e in g.edges.values()
    }
