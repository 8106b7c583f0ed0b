"""Brute-force ground truth for tests: exhaustive cycle search and seeded generators.

These oracles are deliberately independent of the decision machinery: the
cycle oracle is a pruned exhaustive DFS over simple paths, and the cut
oracle enumerates edge pairs directly.  They only scale to desk-size
graphs (|V| around 12).
"""

from __future__ import annotations

import hashlib
import random

from mustpath import connectivity
from mustpath.graph import EdgeRef, ElementRef, Graph, GraphError, VertexRef, add_edge


class OracleError(GraphError):
    """Oracle asked for something beyond its brute-force bounds."""


DEFAULT_VERTEX_BOUND = 12


def oracle_cep(g: Graph, x1: ElementRef, x2: ElementRef, x3: ElementRef, bound: int = DEFAULT_VERTEX_BOUND) -> bool:
    """True iff some simple cycle of g contains all three elements.

    Exhaustive DFS over simple paths anchored at one required element,
    memoizing failed (vertex, visited-set, edges-done) states.  Pruned by
    the fact that a simple cycle never leaves a biconnected block.
    """
    if g.n > bound:
        raise OracleError(f"oracle_cep bound exceeded: {g.n} > {bound}")
    elems = [x1, x2, x3]
    for x in elems:
        if not g.element_exists(x):
            raise OracleError(f"element {x} not in graph")

    if not connectivity.is_connected(g):
        comp = _component_of(g, _some_vertex_of(g, elems[0]))
        if not all(_element_vertices(g, x) <= comp for x in elems):
            return False
        g = _induced(g, comp)
    tree = connectivity.find_blocks(g)
    keys = [("edge", x.id) if isinstance(x, EdgeRef) else ("vertex", x.id) for x in elems]
    bid = connectivity.common_block(tree, keys)
    if bid is None:
        return False
    block = tree.blocks[bid]
    if block.is_trivial:
        return False
    sub = _induced(g, block.vertices)
    return _cycle_search(sub, elems)


def oracle_pep(g: Graph, s: int, t: int, w1: int, w2: int, bound: int = DEFAULT_VERTEX_BOUND) -> bool:
    """True iff a simple s-t path through both w1 and w2 exists."""
    plus, _present = add_edge(g, s, t)
    eid = plus.edge_between(s, t)
    assert eid is not None
    return oracle_cep(plus, EdgeRef(eid), VertexRef(w1), VertexRef(w2), bound=bound)


def _some_vertex_of(g: Graph, x: ElementRef) -> int:
    return x.id if isinstance(x, VertexRef) else g.edge_ends(x.id)[0]


def _element_vertices(g: Graph, x: ElementRef) -> set[int]:
    return {x.id} if isinstance(x, VertexRef) else set(g.edge_ends(x.id))


def _component_of(g: Graph, start: int) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w, _ in g.adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def _induced(g: Graph, vs) -> Graph:
    from mustpath.graph import induced_subgraph

    return induced_subgraph(g, vs)


def _cycle_search(g: Graph, elems: list[ElementRef]) -> bool:
    pos = {v: i for i, v in enumerate(g.vertices)}
    adj: list[list[tuple[int, int]]] = [[] for _ in g.vertices]
    for v in g.vertices:
        for w, eid in g.adj[v]:
            adj[pos[v]].append((pos[w], eid))

    req_vmask = 0
    req_edges: list[int] = []
    for x in elems:
        if isinstance(x, VertexRef):
            req_vmask |= 1 << pos[x.id]
        else:
            req_edges.append(x.id)

    anchor_edge = req_edges[0] if req_edges else None
    other_edges = req_edges[1:] if req_edges else []
    ebit = {eid: 1 << i for i, eid in enumerate(other_edges)}
    full_emask = (1 << len(other_edges)) - 1

    if anchor_edge is not None:
        a, b = g.edge_ends(anchor_edge)
        start, tgt = pos[b], pos[a]
        start_visited = 1 << start
        min_pop = 2  # path b..a plus the anchor edge closes a >=3 cycle unless b-a direct
        banned_edge = anchor_edge
    else:
        x1 = elems[0]
        assert isinstance(x1, VertexRef)
        start = tgt = pos[x1.id]
        start_visited = 1 << start
        min_pop = 3
        banned_edge = -1

    memo: set[tuple[int, int, int]] = set()

    def dfs(cur: int, visited: int, emask: int) -> bool:
        key = (cur, visited, emask)
        if key in memo:
            return False
        for w, eid in adj[cur]:
            if eid == banned_edge:
                continue
            new_emask = emask | ebit.get(eid, 0)
            if w == tgt:
                if (
                    new_emask == full_emask
                    and (visited | (1 << tgt)) & req_vmask == req_vmask
                    and _popcount(visited) + (0 if visited >> tgt & 1 else 1) >= min_pop
                ):
                    return True
            elif not visited >> w & 1:
                if dfs(w, visited | (1 << w), new_emask):
                    return True
        memo.add(key)
        return False

    # anchor edge case: closing b..a with the banned edge removed already
    # guarantees a cycle of length >= 3 unless the path is the single edge
    if anchor_edge is not None and start == tgt:  # pragma: no cover - impossible for simple graphs
        return False
    return dfs(start, start_visited, 0)


def _popcount(x: int) -> int:
    return bin(x).count("1")


def oracle_2_edge_cuts(g: Graph, s: int, t: int, bound: int = 64) -> set[frozenset[int]]:
    """All inclusion-minimal edge pairs whose removal disconnects s from t.

    A pair {e, f} separates s,t iff f is a bridge of g - e lying on every
    s-t route, so one bridge scan per removed edge enumerates everything.
    Pairs involving an edge that alone separates s,t are not minimal.
    """
    if g.m > bound:
        raise OracleError(f"oracle_2_edge_cuts bound exceeded: {g.m} > {bound}")
    lone = {e for e in g.edges if _separates(g, {e}, s, t)}
    cuts: set[frozenset[int]] = set()
    for e in sorted(g.edges):
        if e in lone:
            continue
        reduced = _drop_edges(g, {e})
        for f in _bridges(reduced):
            if f in lone or f == e:
                continue
            if _separates(g, {e, f}, s, t):
                cuts.add(frozenset((e, f)))
    return cuts


def _drop_edges(g: Graph, drop: set[int]) -> Graph:
    return Graph(g.vertices, g.labels, {e: uv for e, uv in g.edges.items() if e not in drop})


def _separates(g: Graph, drop: set[int], s: int, t: int) -> bool:
    seen = {s}
    stack = [s]
    while stack:
        v = stack.pop()
        for w, eid in g.adj[v]:
            if eid in drop or w in seen:
                continue
            if w == t:
                return False
            seen.add(w)
            stack.append(w)
    return True


def _bridges(g: Graph) -> set[int]:
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    out: set[int] = set()
    timer = 0
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack: list[list] = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            v, parent_edge, idx = frame
            if idx < len(g.adj[v]):
                frame[2] += 1
                w, eid = g.adj[v][idx]
                if eid == parent_edge:
                    continue
                if w in disc:
                    low[v] = min(low[v], disc[w])
                else:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append([w, eid, 0])
            else:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    low[pv] = min(low[pv], low[v])
                    if low[v] > disc[pv]:
                        out.add(frame[1])
    return out


def random_graph_suite(seed: int, klass: str, n: int, m: int) -> Graph:
    """Seeded deterministic random graph of a given connectivity class.

    ``klass`` is one of ``connected``, ``biconnected``, ``triconnected``.
    Built as a random spanning tree plus random extra edges, then
    augmented with further random edges until the class test passes.
    """
    if klass not in ("connected", "biconnected", "triconnected"):
        raise OracleError(f"unknown graph class {klass!r}")
    if n < 2:
        raise OracleError("need at least two vertices")
    rng = random.Random(seed)
    labels = {i: f"v{i}" for i in range(n)}
    order = list(range(n))
    rng.shuffle(order)
    pairs: set[tuple[int, int]] = set()
    for i in range(1, n):
        u = order[i]
        v = order[rng.randrange(i)]
        pairs.add((u, v) if u < v else (v, u))
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(all_pairs)
    want = max(m, n - 1)
    for pair in all_pairs:
        if len(pairs) >= want:
            break
        pairs.add(pair)

    def build() -> Graph:
        return Graph(range(n), labels, {i: p for i, p in enumerate(sorted(pairs))})

    def ok(g: Graph) -> bool:
        if klass == "connected":
            return connectivity.is_connected(g)
        if klass == "biconnected":
            return connectivity.is_biconnected(g)
        return connectivity.is_k_connected(g, 3)

    g = build()
    for pair in all_pairs:
        if ok(g):
            return g
        if pair in pairs:
            continue
        pairs.add(pair)
        g = build()
    if ok(g):
        return g
    raise OracleError(f"cannot make a {klass} graph on {n} vertices")


def graph_fingerprint(g: Graph) -> str:
    """Stable hash of the labeled edge list, for pinning generator outputs."""
    payload = ";".join(
        f"{g.labels[u]}-{g.labels[v]}" for u, v in (g.edges[e] for e in sorted(g.edges))
    )
    return hashlib.sha256(payload.encode()).hexdigest()[:16]
