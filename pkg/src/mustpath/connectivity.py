"""Blocks and articulation structure, biconnected reductions, and unit-capacity flow.

Everything here is deterministic: DFS/BFS visit neighbors in ascending
vertex id, augmenting paths are shortest (BFS), and block ids are ordered
by the smallest edge id they contain.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from mustpath.graph import Graph, GraphError, Path, add_edge, induced_subgraph


class ConnectivityError(GraphError):
    """Precondition failure in a connectivity operation."""


# ---------------------------------------------------------------------------
# Basic scans


def is_connected(g: Graph) -> bool:
    start = g.vertices[0]
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y, _ in g.adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == g.n


def _lowpoint_dfs(g: Graph):
    """Shared iterative lowpoint DFS.

    Returns (articulation set, list of biconnected edge components).
    Handles disconnected graphs by scanning every root.
    """
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    arts: set[int] = set()
    comps: list[set[int]] = []
    timer = 0
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        edge_stack: list[int] = []
        stack: list[list] = [[root, -1, 0]]  # vertex, parent edge id, adj index
        while stack:
            frame = stack[-1]
            v, parent_edge, idx = frame
            if idx < len(g.adj[v]):
                frame[2] += 1
                w, eid = g.adj[v][idx]
                if eid == parent_edge:
                    continue
                if w in disc:
                    if disc[w] < disc[v]:
                        edge_stack.append(eid)
                        if disc[w] < low[v]:
                            low[v] = disc[w]
                else:
                    edge_stack.append(eid)
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append([w, eid, 0])
            else:
                stack.pop()
                if not stack:
                    continue
                pv = stack[-1][0]
                tree_eid = frame[1]
                if low[v] < low[pv]:
                    low[pv] = low[v]
                if low[v] >= disc[pv]:
                    comp: set[int] = set()
                    while True:
                        e = edge_stack.pop()
                        comp.add(e)
                        if e == tree_eid:
                            break
                    comps.append(comp)
                    if pv != root:
                        arts.add(pv)
        if root_children >= 2:
            arts.add(root)
    return arts, comps


def articulation_points(g: Graph) -> frozenset[int]:
    arts, _ = _lowpoint_dfs(g)
    return frozenset(arts)


def is_biconnected(g: Graph) -> bool:
    """2-connected, with the complete graph on 2 vertices allowed."""
    if not is_connected(g):
        return False
    if g.n == 2:
        return g.m == 1
    if g.n < 2:
        return False
    return not articulation_points(g)


# ---------------------------------------------------------------------------
# Blocks


@dataclass(frozen=True)
class Block:
    id: int
    vertices: frozenset[int]
    edges: frozenset[int]
    is_trivial: bool


@dataclass(frozen=True)
class BlockTree:
    """Blocks plus articulation vertices, with the bipartite tree structure.

    Invariants: every edge lies in exactly one block; a vertex lies in two
    or more blocks iff it is an articulation vertex; the incidence
    structure between blocks and articulation vertices is a tree.
    """

    blocks: tuple[Block, ...]
    articulation_vertices: frozenset[int]
    edge_block: dict[int, int]
    vertex_blocks: dict[int, tuple[int, ...]]

    def blocks_of_vertex(self, v: int) -> tuple[int, ...]:
        return self.vertex_blocks[v]

    def block_of_edge(self, eid: int) -> int:
        return self.edge_block[eid]


def find_blocks(g: Graph) -> BlockTree:
    """Biconnected components via an edge-stack lowpoint DFS."""
    if not is_connected(g):
        raise ConnectivityError("find_blocks requires a connected graph")
    if g.m == 0:
        raise ConnectivityError("find_blocks requires at least one edge")
    arts, comps = _lowpoint_dfs(g)
    comps.sort(key=min)
    blocks = []
    edge_block: dict[int, int] = {}
    vertex_blocks: dict[int, list[int]] = {v: [] for v in g.vertices}
    for bid, comp in enumerate(comps):
        vset: set[int] = set()
        for e in comp:
            vset.update(g.edge_ends(e))
            edge_block[e] = bid
        for v in sorted(vset):
            vertex_blocks[v].append(bid)
        blocks.append(Block(bid, frozenset(vset), frozenset(comp), len(comp) == 1))
    return BlockTree(
        blocks=tuple(blocks),
        articulation_vertices=frozenset(arts),
        edge_block=edge_block,
        vertex_blocks={v: tuple(bs) for v, bs in vertex_blocks.items()},
    )


def common_block(tree: BlockTree, elems) -> int | None:
    """The unique block containing every element, or None.

    ``elems`` is an iterable of ("vertex", id) / ("edge", id) pairs.  Two
    distinct blocks share at most one vertex, so the result is unique.
    """
    candidates: set[int] | None = None
    for kind, ident in elems:
        cand = set(tree.vertex_blocks[ident]) if kind == "vertex" else {tree.edge_block[ident]}
        candidates = cand if candidates is None else candidates & cand
        if not candidates:
            return None
    assert candidates is not None
    return min(candidates)


def reduce_to_common_block(g: Graph, s: int, t: int) -> Graph | None:
    """The biconnected block containing both s and t, if one exists.

    A simple cycle never leaves a block, so a cycle query for s and t only
    makes sense inside their shared block.
    """
    if s == t:
        raise ConnectivityError("s and t must differ")
    tree = find_blocks(g)
    bid = common_block(tree, [("vertex", s), ("vertex", t)])
    if bid is None:
        return None
    return induced_subgraph(g, tree.blocks[bid].vertices)


def pep_chain_reduction(g: Graph, s: int, t: int) -> Graph | None:
    """g itself when g + (s, t) is biconnected, else None.

    Equivalent to the block tree forming a chain hung between s and t; the
    direct biconnectivity test stays exact even when s or t is itself an
    articulation vertex inside its end block.
    """
    if s == t:
        raise ConnectivityError("s and t must differ")
    if not is_connected(g):
        raise ConnectivityError("pep_chain_reduction requires a connected graph")
    plus, _ = add_edge(g, s, t)
    return g if is_biconnected(plus) else None


# ---------------------------------------------------------------------------
# Unit-capacity flow


class FlowNetwork:
    """Directed flow network with paired arcs (arc ``a ^ 1`` reverses ``a``).

    Two modes are built from graphs: ``vertex-split`` (each non-terminal
    vertex becomes a capacity-1 internal arc) and ``edge-capacity`` (each
    undirected edge becomes two anti-parallel capacity-1 arcs that act as
    each other's residual).
    """

    def __init__(self, node_count: int, source: int, sink: int, mode: str):
        self.node_count = node_count
        self.source = source
        self.sink = sink
        self.mode = mode
        self.head: list[int] = []
        self.cap: list[int] = []
        self.flow: list[int] = []
        self.tag: list[tuple] = []
        self.adj: list[list[int]] = [[] for _ in range(node_count)]
        self.meta: dict = {}

    def add_arc(self, u: int, v: int, cap: int, tag: tuple, rev_cap: int = 0) -> int:
        a = len(self.head)
        self.head.append(v)
        self.cap.append(cap)
        self.flow.append(0)
        self.tag.append(tag)
        self.adj[u].append(a)
        self.head.append(u)
        self.cap.append(rev_cap)
        self.flow.append(0)
        self.tag.append(("rev",) + tag)
        self.adj[v].append(a + 1)
        return a

    def value(self) -> int:
        return sum(f for a in self.adj[self.source] if (f := self.flow[a]) > 0)

    def bfs_augment(self) -> bool:
        """Push one unit along a shortest residual path; False if none exists."""
        parent_arc = [-1] * self.node_count
        parent_arc[self.source] = -2
        queue = deque([self.source])
        found = False
        while queue:
            x = queue.popleft()
            if x == self.sink:
                found = True
                break
            for a in self.adj[x]:
                y = self.head[a]
                if parent_arc[y] == -1 and self.flow[a] < self.cap[a]:
                    parent_arc[y] = a
                    queue.append(y)
        if not found:
            return False
        x = self.sink
        while x != self.source:
            a = parent_arc[x]
            self.flow[a] += 1
            self.flow[a ^ 1] -= 1
            x = self.head[a ^ 1]
        return True


def max_flow(net: FlowNetwork, limit: int) -> int:
    """Ford-Fulkerson with BFS labeling, one unit per iteration, up to limit."""
    if limit < 1:
        raise ConnectivityError("flow limit must be at least 1")
    total = net.value()
    while total < limit and net.bfs_augment():
        total += 1
    return total


def vertex_split_network(g: Graph, side_a, side_b) -> FlowNetwork:
    """Vertex-split network for internally vertex-disjoint path counting.

    Non-singleton sides get an artificial terminal with capacity-1 arcs so
    that each side vertex starts or ends at most one path.  Edge arcs get
    capacity 1: a unit of vertex flow never pushes two units through one
    edge, and this keeps a direct source-sink edge from being used twice.
    """
    side_a = sorted(set(side_a))
    side_b = sorted(set(side_b))
    pos = {v: i for i, v in enumerate(g.vertices)}
    n = g.n

    def node_in(v: int) -> int:
        return 2 * pos[v]

    def node_out(v: int) -> int:
        return 2 * pos[v] + 1

    extra = (1 if len(side_a) > 1 else 0) + (1 if len(side_b) > 1 else 0)
    count = 2 * n + extra
    nxt = 2 * n
    if len(side_a) > 1:
        source = nxt
        nxt += 1
    else:
        source = node_out(side_a[0])
    sink = nxt if len(side_b) > 1 else node_in(side_b[0])

    net = FlowNetwork(count, source, sink, "vertex-split")
    net.meta = {"pos": pos, "side_a": side_a, "side_b": side_b}
    blocked = set()
    if len(side_a) == 1:
        blocked.add(side_a[0])
    if len(side_b) == 1:
        blocked.add(side_b[0])
    for v in g.vertices:
        # singleton terminals carry no internal arc: paths may share only them
        cap = 0 if v in blocked else 1
        net.add_arc(node_in(v), node_out(v), cap, ("vertex", v))
    for eid in sorted(g.edges):
        u, v = g.edge_ends(eid)
        net.add_arc(node_out(u), node_in(v), 1, ("edge", eid, u, v))
        net.add_arc(node_out(v), node_in(u), 1, ("edge", eid, v, u))
    if len(side_a) > 1:
        for v in side_a:
            net.add_arc(source, node_in(v), 1, ("aux-src", v))
    if len(side_b) > 1:
        for v in side_b:
            net.add_arc(node_out(v), sink, 1, ("aux-snk", v))
    return net


def edge_capacity_network(g: Graph, s: int, t: int) -> FlowNetwork:
    """Each undirected edge becomes two anti-parallel unit arcs (mutual residuals)."""
    pos = {v: i for i, v in enumerate(g.vertices)}
    net = FlowNetwork(g.n, pos[s], pos[t], "edge-capacity")
    arc_of_edge = {}
    for eid in sorted(g.edges):
        u, v = g.edge_ends(eid)
        a = net.add_arc(pos[u], pos[v], 1, ("edge", eid, u, v), rev_cap=1)
        arc_of_edge[eid] = a
    net.meta = {"pos": pos, "vertex_at": list(g.vertices), "arc_of_edge": arc_of_edge}
    return net


def edge_net_flow(net: FlowNetwork, eid: int) -> int:
    """Net flow on an undirected edge: +1 from lower to higher endpoint id."""
    a = net.meta["arc_of_edge"][eid]
    return net.flow[a]


def vertex_disjoint_paths(g: Graph, side_a, side_b, k: int) -> list[Path] | None:
    """k internally vertex-disjoint paths from side_a to side_b, or None.

    Singleton sides allow sharing only at that vertex; larger sides give
    fully disjoint paths with no internal vertex in either side (prefixes
    and suffixes are truncated as needed).
    """
    if k < 1:
        raise ConnectivityError("k must be at least 1")
    side_a = sorted(set(side_a))
    side_b = sorted(set(side_b))
    if not side_a or not side_b:
        raise ConnectivityError("sides must be nonempty")
    net = vertex_split_network(g, side_a, side_b)
    if max_flow(net, k) < k:
        return None
    return _decompose_paths(net, g, side_a, side_b, k)


def _decompose_paths(net: FlowNetwork, g: Graph, side_a, side_b, k: int) -> list[Path]:
    used = [False] * len(net.head)
    paths: list[Path] = []
    for _ in range(k):
        x = net.source
        verts: list[int] = []
        eids: list[int] = []
        if len(side_a) == 1:
            verts.append(side_a[0])
        while x != net.sink:
            nxt = None
            for a in net.adj[x]:
                if not used[a] and net.flow[a] > 0:
                    nxt = a
                    break
            assert nxt is not None, "flow decomposition ran out of arcs"
            used[nxt] = True
            tag = net.tag[nxt]
            if tag[0] == "edge":
                eids.append(tag[1])
                verts.append(tag[3])
            elif tag[0] == "aux-src":
                verts.append(tag[1])
            x = net.head[nxt]
        paths.append(_truncate(g, verts, eids, set(side_a), set(side_b)))
    return paths


def _truncate(g: Graph, verts: list[int], eids: list[int], sa: set[int], sb: set[int]) -> Path:
    # keep from the last side_a vertex, cut at the first side_b vertex after it
    last_a = max(i for i, v in enumerate(verts) if v in sa)
    first_b = len(verts) - 1
    for i in range(last_a, len(verts)):
        if verts[i] in sb:
            first_b = i
            break
    verts2 = verts[last_a : first_b + 1]
    eids2 = eids[last_a:first_b]
    return Path(tuple(verts2), tuple(eids2))


def is_k_connected(g: Graph, k: int) -> bool:
    """Vertex k-connectivity for k in {2, 3}, complete graphs included."""
    if k not in (2, 3):
        raise ConnectivityError("only k=2 and k=3 are supported")
    if not is_connected(g):
        return False
    if k == 2:
        return is_biconnected(g)
    if g.n <= 3:
        # only the complete graph on 3 vertices counts as 3-connected
        return g.n == 3 and g.m == 3
    degs = [g.degree(v) for v in g.vertices]
    if min(degs) < 3:
        return False
    # any 2-cut leaves a component whose vertices all have degree <= n/2
    if min(degs) * 2 > g.n:
        return True
    # cuts avoiding v are caught by flow to non-neighbors of v; cuts
    # through v by the articulation scan of g - v
    v = min(g.vertices, key=lambda x: (g.degree(x), x))
    nbrs = {w for w, _ in g.adj[v]}
    for u in g.vertices:
        if u == v or u in nbrs:
            continue
        net = vertex_split_network(g, [v], [u])
        if max_flow(net, 3) < 3:
            return False
    rest = induced_subgraph(g, set(g.vertices) - {v})
    return is_biconnected(rest)
