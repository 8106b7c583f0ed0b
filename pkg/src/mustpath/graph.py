"""Core undirected-graph representation, element references, and text I/O.

Graphs are simple (no self-loops, no parallel edges) and immutable after
construction.  Vertex and edge identifiers are stable: every derived
structure (blocks, SPQR components, witnesses) refers back to the ids of
the graph it was built from, so subgraphs keep the original ids.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass


class GraphError(ValueError):
    """Invalid graph construction or query."""


class ParseError(GraphError):
    """Edge-list text rejected; carries the offending line/column."""

    def __init__(self, message: str, line: int, column: int | None = None):
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class VertexRef:
    """Reference to a vertex by id."""

    id: int


@dataclass(frozen=True)
class EdgeRef:
    """Reference to an edge by id."""

    id: int


ElementRef = VertexRef | EdgeRef


class Graph:
    """Undirected simple graph with stable, possibly non-contiguous ids.

    Attributes:
        vertices: sorted tuple of vertex ids
        labels: vertex id -> display label
        edges: edge id -> (u, v) with u < v
        adj: vertex id -> tuple of (neighbor, edge id), ascending by neighbor
    """

    __slots__ = ("vertices", "labels", "edges", "adj", "_pair_to_edge")

    def __init__(self, vertices, labels: dict[int, str], edges: dict[int, tuple[int, int]]):
        vs = tuple(sorted(set(vertices)))
        if not vs:
            raise GraphError("graph must have at least one vertex")
        vset = set(vs)
        norm: dict[int, tuple[int, int]] = {}
        pair_to_edge: dict[tuple[int, int], int] = {}
        for eid, (u, v) in edges.items():
            if u == v:
                raise GraphError(f"self-loop on vertex {u}")
            if u not in vset or v not in vset:
                raise GraphError(f"edge {eid} references unknown vertex")
            pair = (u, v) if u < v else (v, u)
            if pair in pair_to_edge:
                raise GraphError(f"parallel edge on {pair}")
            pair_to_edge[pair] = eid
            norm[eid] = pair
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in vs}
        for eid in sorted(norm):
            u, v = norm[eid]
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        self.vertices = vs
        self.labels = {v: labels.get(v, str(v)) for v in vs}
        self.edges = dict(sorted(norm.items()))
        self.adj = {v: tuple(sorted(nbrs)) for v, nbrs in adj.items()}
        self._pair_to_edge = pair_to_edge

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_vertex(self, v: int) -> bool:
        return v in self.adj

    def has_edge_id(self, eid: int) -> bool:
        return eid in self.edges

    def edge_ends(self, eid: int) -> tuple[int, int]:
        return self.edges[eid]

    def edge_between(self, u: int, v: int) -> int | None:
        pair = (u, v) if u < v else (v, u)
        return self._pair_to_edge.get(pair)

    def neighbors(self, v: int) -> tuple[tuple[int, int], ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def label(self, v: int) -> str:
        return self.labels[v]

    def vertex_id(self, label: str) -> int:
        for v, lab in self.labels.items():
            if lab == label:
                return v
        raise GraphError(f"unknown vertex label {label!r}")

    def element_exists(self, x: ElementRef) -> bool:
        if isinstance(x, VertexRef):
            return self.has_vertex(x.id)
        return self.has_edge_id(x.id)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Path:
    """Simple path as an alternating vertex/edge sequence.

    ``edges[i]`` joins ``vertices[i]`` and ``vertices[i + 1]``.  A single
    vertex with no edges is a valid (degenerate) path.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def validate(self, g: Graph) -> None:
        if len(self.vertices) != len(self.edges) + 1:
            raise GraphError("path vertex/edge counts inconsistent")
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("path repeats a vertex")
        for i, eid in enumerate(self.edges):
            if not g.has_edge_id(eid):
                raise GraphError(f"path uses unknown edge {eid}")
            if set(g.edge_ends(eid)) != {self.vertices[i], self.vertices[i + 1]}:
                raise GraphError(f"path edge {eid} not incident to its vertices")

    def reversed(self) -> Path:
        return Path(tuple(reversed(self.vertices)), tuple(reversed(self.edges)))

    def contains(self, x: ElementRef) -> bool:
        if isinstance(x, VertexRef):
            return x.id in self.vertices
        return x.id in self.edges


@dataclass(frozen=True)
class Cycle:
    """Simple cycle; ``edges[-1]`` closes ``vertices[-1]`` back to ``vertices[0]``."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def validate(self, g: Graph) -> None:
        if len(self.vertices) < 3 or len(self.edges) != len(self.vertices):
            raise GraphError("cycle needs at least three vertices and closing edge")
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("cycle repeats a vertex")
        k = len(self.vertices)
        for i, eid in enumerate(self.edges):
            if not g.has_edge_id(eid):
                raise GraphError(f"cycle uses unknown edge {eid}")
            a, b = self.vertices[i], self.vertices[(i + 1) % k]
            if set(g.edge_ends(eid)) != {a, b}:
                raise GraphError(f"cycle edge {eid} not incident to its vertices")

    def contains(self, x: ElementRef) -> bool:
        if isinstance(x, VertexRef):
            return x.id in self.vertices
        return x.id in self.edges


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` label pairs, one edge per line; ``#`` starts a comment line.

    Labels are interned to dense integer ids in first-appearance order.
    Duplicate edges are collapsed with a warning; self-loops are an error.
    """
    labels: dict[int, str] = {}
    ids: dict[str, int] = {}
    edges: dict[int, tuple[int, int]] = {}
    seen: set[tuple[int, int]] = set()

    def intern(tok: str) -> int:
        if tok not in ids:
            ids[tok] = len(ids)
            labels[ids[tok]] = tok
        return ids[tok]

    n_edges = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if len(toks) != 2:
            col = raw.index(toks[2]) + 1 if len(toks) > 2 else 1
            raise ParseError(f"expected two labels, got {len(toks)}", lineno, col)
        a, b = toks
        if a == b:
            raise ParseError(f"self-loop on {a!r}", lineno, raw.index(b, raw.index(a) + len(a)) + 1)
        u, v = intern(a), intern(b)
        pair = (u, v) if u < v else (v, u)
        if pair in seen:
            warnings.warn(f"line {lineno}: duplicate edge {a} {b} collapsed", stacklevel=2)
            continue
        seen.add(pair)
        edges[n_edges] = pair
        n_edges += 1
    if not edges:
        raise ParseError("no edges in input", 1)
    return Graph(range(len(ids)), labels, edges)


def to_edge_list(g: Graph) -> str:
    """Inverse of :func:`parse_edge_list` up to id renaming."""
    lines = []
    for eid in sorted(g.edges):
        u, v = g.edges[eid]
        lines.append(f"{g.labels[u]} {g.labels[v]}")
    return "\n".join(lines) + "\n"


def add_edge(g: Graph, u: int, v: int) -> tuple[Graph, bool]:
    """Return ``(g with (u, v), already_present)``.

    The flag lets callers of the path-to-cycle reduction know whether to
    drop the edge again afterwards.
    """
    if u == v:
        raise GraphError("cannot add self-loop")
    if not (g.has_vertex(u) and g.has_vertex(v)):
        raise GraphError("add_edge endpoints must exist")
    if g.edge_between(u, v) is not None:
        return g, True
    edges = dict(g.edges)
    new_id = max(edges) + 1 if edges else 0
    edges[new_id] = (u, v) if u < v else (v, u)
    return Graph(g.vertices, g.labels, edges), False


def remove_edge(g: Graph, eid: int) -> Graph:
    """Return g without edge ``eid``; all other ids are untouched."""
    if eid not in g.edges:
        raise GraphError(f"no edge {eid}")
    edges = {e: uv for e, uv in g.edges.items() if e != eid}
    return Graph(g.vertices, g.labels, edges)


def induced_subgraph(g: Graph, vs) -> Graph:
    """Subgraph on ``vs`` with every edge of g inside it; ids preserved."""
    vset = set(vs)
    if not vset:
        raise GraphError("induced_subgraph needs a nonempty vertex set")
    missing = vset - set(g.vertices)
    if missing:
        raise GraphError(f"unknown vertices {sorted(missing)}")
    edges = {eid: (u, v) for eid, (u, v) in g.edges.items() if u in vset and v in vset}
    return Graph(vset, g.labels, edges)


def graph_to_dot(g: Graph) -> str:
    """Render the graph as DOT text."""
    out = ["graph G {"]
    for v in g.vertices:
        out.append(f'  v{v} [label="{g.labels[v]}"];')
    for eid in sorted(g.edges):
        u, v = g.edges[eid]
        out.append(f"  v{u} -- v{v};")
    out.append("}")
    return "\n".join(out) + "\n"


def to_dot(obj) -> str:
    """DOT text for a Graph or an SpqrTree."""
    if isinstance(obj, Graph):
        return graph_to_dot(obj)
    from mustpath import spqr

    if isinstance(obj, spqr.SpqrTree):
        return spqr.spqr_to_dot(obj)
    raise TypeError(f"cannot render {type(obj).__name__} as DOT")
