"""SPQR tree construction, element representatives, and split-subgraph queries.

The tree is built by the recursive subdivision scheme: pick a separation
pair that either has three or more split subgraphs or carries an edge
(parallel case, emitting a P component), or has exactly two split
subgraphs with at least one biconnected (binary case); recurse into the
split subgraphs with a fresh virtual edge added to each.  Base cases emit
S (cycle) and R (triconnected, four or more vertices) components.

Construction is O(|V|*|E|)-ish via repeated articulation scans rather than
the linear-time algorithm; queries on the finished tree stay cheap.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from mustpath import connectivity
from mustpath._debug import debug_checks
from mustpath.graph import EdgeRef, ElementRef, Graph, GraphError, Path, VertexRef


class SpqrError(GraphError):
    """Precondition failure in SPQR construction or queries."""


class InternalInvariantError(RuntimeError):
    """A structural invariant the theory guarantees failed to hold."""


@dataclass(frozen=True)
class SkeletonEdge:
    """Skeleton edge of a component: real (graph edge id) or virtual (twin id)."""

    u: int
    v: int
    real_id: int | None = None
    virtual_id: int | None = None

    @property
    def is_virtual(self) -> bool:
        return self.virtual_id is not None

    def ends(self) -> tuple[int, int]:
        return (self.u, self.v)


_KIND_RANK = {"R": 0, "P": 1, "S": 2}


@dataclass(frozen=True)
class Component:
    id: int
    kind: str  # "S" | "P" | "R"
    vertices: tuple[int, ...]
    edges: tuple[SkeletonEdge, ...]

    def incident(self, v: int) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.edges) if v in (e.u, e.v))

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)


@dataclass(frozen=True)
class Representative:
    """r_C(x): either x itself (real in C) or the unique virtual edge covering it."""

    real: ElementRef | None = None
    virtual: tuple[int, int] | None = None  # (component id, skeleton edge index)

    @property
    def is_vertex(self) -> bool:
        return isinstance(self.real, VertexRef)

    @property
    def is_real_edge(self) -> bool:
        return isinstance(self.real, EdgeRef)


class SpqrTree:
    """Components twin-linked by structural edges, plus rooted-tree indexes."""

    def __init__(self, graph: Graph, components: list[Component], twin: dict):
        self.graph = graph
        self.components = tuple(components)
        self.twin = twin  # (comp id, edge idx) -> (comp id, edge idx)
        self.structural_edges: list[tuple[tuple[int, int], tuple[int, int]]] = []
        seen = set()
        for a, b in twin.items():
            key = tuple(sorted((a, b)))
            if key not in seen:
                seen.add(key)
                self.structural_edges.append((key[0], key[1]))
        self.structural_edges.sort()

        self.edge_home: dict[int, tuple[int, int]] = {}
        self.vertex_comps: dict[int, list[int]] = {v: [] for v in graph.vertices}
        for comp in self.components:
            for idx, e in enumerate(comp.edges):
                if e.real_id is not None:
                    self.edge_home[e.real_id] = (comp.id, idx)
            for v in comp.vertices:
                self.vertex_comps[v].append(comp.id)

        self.comp_adj: list[list[tuple[int, int]]] = [[] for _ in self.components]
        for (c1, i1), (c2, i2) in self.structural_edges:
            self.comp_adj[c1].append((c2, i1))
            self.comp_adj[c2].append((c1, i2))
        for lst in self.comp_adj:
            lst.sort()

        self.parent: list[int] = [-1] * len(self.components)
        self.parent_edge: list[int] = [-1] * len(self.components)  # edge idx in child toward parent
        self.depth: list[int] = [0] * len(self.components)
        self.tin: list[int] = [0] * len(self.components)
        self.tout: list[int] = [0] * len(self.components)
        self._index_tree()
        self._split_cache: dict[tuple[int, int], Graph] = {}
        self._split_vertex_cache: dict[tuple[int, int], frozenset[int]] = {}

    def _index_tree(self) -> None:
        timer = 0
        visited = [False] * len(self.components)
        stack: list[tuple[int, int]] = [(0, 0)]
        visited[0] = True
        order: list[int] = []
        while stack:
            c, idx = stack[-1]
            if idx == 0:
                self.tin[c] = timer
                timer += 1
                order.append(c)
            if idx < len(self.comp_adj[c]):
                stack[-1] = (c, idx + 1)
                nbr, _my_idx = self.comp_adj[c][idx]
                if not visited[nbr]:
                    visited[nbr] = True
                    self.parent[nbr] = c
                    twin_side = self.comp_adj[c][idx]
                    # edge index inside nbr pointing back to c
                    back = self.twin[(c, twin_side[1])]
                    assert back[0] == nbr
                    self.parent_edge[nbr] = back[1]
                    self.depth[nbr] = self.depth[c] + 1
                    stack.append((nbr, 0))
            else:
                self.tout[c] = timer
                timer += 1
                stack.pop()
        if not all(visited):
            raise InternalInvariantError("structural edges do not connect all components")

    # -- rooted-tree helpers -------------------------------------------------

    def _is_ancestor(self, a: int, b: int) -> bool:
        return self.tin[a] <= self.tin[b] and self.tout[b] <= self.tout[a]

    def _lca(self, a: int, b: int) -> int:
        while not self._is_ancestor(a, b):
            a = self.parent[a]
        return a

    def median(self, a: int, b: int, c: int) -> int:
        cands = (self._lca(a, b), self._lca(a, c), self._lca(b, c))
        return max(cands, key=lambda x: self.depth[x])

    def first_hop(self, c: int, target: int) -> tuple[int, int]:
        """Skeleton edge of c on the tree path toward target (as (c, edge idx))."""
        if c == target:
            raise SpqrError("no hop from a component to itself")
        if self._is_ancestor(c, target):
            x = target
            while self.parent[x] != c:
                x = self.parent[x]
            child_back = self.parent_edge[x]
            return self.twin[(x, child_back)]
        return (c, self.parent_edge[c])

    def preferred_home(self, v: int) -> int:
        comps = self.vertex_comps[v]
        if not comps:
            raise SpqrError(f"vertex {v} not in tree")
        return min(comps, key=lambda c: (_KIND_RANK[self.components[c].kind], c))

    def component_of_edge(self, eid: int) -> int:
        return self.edge_home[eid][0]

    def element_count(self) -> int:
        total = len(self.structural_edges) + len(self.components)
        for comp in self.components:
            total += len(comp.vertices) + len(comp.edges)
        return total


# ---------------------------------------------------------------------------
# Construction


def _adj_of(vertices, edges) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for u, v, _kind, _payload in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _components_without(adj: dict[int, list[int]], banned: set[int]) -> list[list[int]]:
    seen: set[int] = set(banned)
    out: list[list[int]] = []
    for start in sorted(adj):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        out.append(sorted(comp))
    return out


def _articulations(adj: dict[int, list[int]], skip: int) -> list[int]:
    """Articulation vertices of the subgraph without ``skip``."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    arts: set[int] = set()
    timer = 0
    verts = [v for v in sorted(adj) if v != skip]
    if not verts:
        return []
    for root in verts:
        if root in disc:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack: list[list] = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            v, parent, idx = frame
            nbrs = adj[v]
            if idx < len(nbrs):
                frame[2] += 1
                w = nbrs[idx]
                if w == skip:
                    continue
                if w == parent:
                    frame[1] = -1  # skip the tree edge once; inputs are simple
                    continue
                if w in disc:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                else:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append([w, v, 0])
            else:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    if low[v] < low[pv]:
                        low[pv] = low[v]
                    if pv != root and low[v] >= disc[pv]:
                        arts.add(pv)
        if root_children >= 2:
            arts.add(root)
    return sorted(arts)


def _is_biconnected_adj(vertices, edges) -> bool:
    adj = _adj_of(vertices, edges)
    comps = _components_without(adj, set())
    if len(comps) != 1 or len(vertices) < 3:
        return False
    return not _articulations(adj, skip=-1)


def _is_cycle(vertices, edges) -> bool:
    if len(edges) != len(vertices) or len(vertices) < 3:
        return False
    adj = _adj_of(vertices, edges)
    if any(len(adj[v]) != 2 for v in adj):
        return False
    return len(_components_without(adj, set())) == 1


def build_spqr(g: Graph, _pair_order: str = "ascending") -> SpqrTree:
    """SPQR tree of a biconnected graph with at least three edges.

    ``_pair_order`` flips the qualifying-pair scan direction; the result
    must be the same tree up to isomorphism (checked by tests).
    """
    if g.n < 3 or g.m < 3:
        raise SpqrError("build_spqr needs a biconnected graph that is not a single edge")
    if not connectivity.is_biconnected(g):
        raise SpqrError("build_spqr requires a biconnected graph")

    descending = _pair_order == "descending"
    components: list[Component] = []
    slots: dict[tuple[int, int], tuple[int, int]] = {}
    next_vid = 0

    def emit(kind: str, vertices, edges) -> None:
        cid = len(components)
        skel = []
        for idx, (u, v, ekind, payload) in enumerate(edges):
            a, b = (u, v) if u < v else (v, u)
            if ekind == "real":
                skel.append(SkeletonEdge(a, b, real_id=payload))
            else:
                vid, side = payload
                skel.append(SkeletonEdge(a, b, virtual_id=vid))
                slots[(vid, side)] = (cid, idx)
        components.append(Component(cid, kind, tuple(sorted(vertices)), tuple(skel)))

    tasks = deque()
    init_edges = [(u, v, "real", eid) for eid, (u, v) in sorted(g.edges.items())]
    tasks.append((tuple(g.vertices), init_edges))

    while tasks:
        vertices, edges = tasks.popleft()
        if _is_cycle(vertices, edges):
            emit("S", vertices, _sorted_edges(edges))
            continue
        adj = _adj_of(vertices, edges)
        pair = _find_qualifying_pair(vertices, edges, adj, descending)
        if pair is None:
            if len(vertices) < 4:
                raise InternalInvariantError("non-cycle component with fewer than 4 vertices")
            emit("R", vertices, _sorted_edges(edges))
            continue
        a, b, parts, mode = pair
        pole_edges = [e for e in edges if {e[0], e[1]} == {a, b}]
        rest = [e for e in edges if {e[0], e[1]} != {a, b}]
        part_index = {}
        for i, part in enumerate(parts):
            for v in part:
                part_index[v] = i
        part_edges: list[list] = [[] for _ in parts]
        for e in rest:
            u, v = e[0], e[1]
            i = part_index[u] if u in part_index else part_index[v]
            part_edges[i].append(e)
        if mode == "parallel":
            p_skel = []
            sub_virts = []
            for i in range(len(parts)):
                vid = next_vid
                next_vid += 1
                p_skel.append((a, b, "virt", (vid, 0)))
                sub_virts.append((a, b, "virt", (vid, 1)))
            p_skel.extend(pole_edges)
            emit("P", (a, b), p_skel)
            for i, part in enumerate(parts):
                tasks.append((tuple(sorted(set(part) | {a, b})), part_edges[i] + [sub_virts[i]]))
        else:
            assert not pole_edges
            vid = next_vid
            next_vid += 1
            for i, part in enumerate(parts):
                tasks.append(
                    (tuple(sorted(set(part) | {a, b})), part_edges[i] + [(a, b, "virt", (vid, i))])
                )

    twin: dict[tuple[int, int], tuple[int, int]] = {}
    by_vid: dict[int, list[tuple[int, int]]] = {}
    for (vid, _side), slot in slots.items():
        by_vid.setdefault(vid, []).append(slot)
    for vid, pair_slots in by_vid.items():
        if len(pair_slots) != 2:
            raise InternalInvariantError(f"virtual edge {vid} has {len(pair_slots)} copies")
        s1, s2 = pair_slots
        twin[s1] = s2
        twin[s2] = s1
    return SpqrTree(g, components, twin)


def _sorted_edges(edges):
    return sorted(edges, key=lambda e: (min(e[0], e[1]), max(e[0], e[1]), e[2], str(e[3])))


def _find_qualifying_pair(vertices, edges, adj, descending: bool):
    """First separation pair qualifying for the parallel or binary case.

    Returns (a, b, parts, mode) or None when no separation pair exists.
    """
    n = len(vertices)
    if n > 3 and min(len(adj[v]) for v in vertices) * 2 > n:
        return None  # min degree above n/2 rules out any 2-cut
    edge_pairs = {frozenset((e[0], e[1])) for e in edges}
    found_any = False
    for a in sorted(vertices, reverse=descending):
        partners = sorted(_articulations(adj, skip=a), reverse=descending)
        for b in partners:
            if (not descending and b <= a) or (descending and b >= a):
                continue
            found_any = True
            lo, hi = (a, b) if a < b else (b, a)
            parts = _components_without(adj, {a, b})
            if len(parts) < 2:
                continue
            if len(parts) >= 3 or frozenset((a, b)) in edge_pairs:
                return (lo, hi, parts, "parallel")
            for part in parts:
                svs = set(part) | {a, b}
                sub_edges = [e for e in edges if e[0] in svs and e[1] in svs]
                if _is_biconnected_adj(sorted(svs), sub_edges):
                    return (lo, hi, parts, "binary")
    if found_any:
        raise InternalInvariantError("separation pairs exist but none qualifies")
    return None


# ---------------------------------------------------------------------------
# Queries


def representative(tree: SpqrTree, c: int, x: ElementRef) -> Representative:
    """r_C(x): x itself when real in C, else the unique covering virtual edge."""
    comp = tree.components[c]
    if isinstance(x, VertexRef):
        if not tree.graph.has_vertex(x.id):
            raise SpqrError(f"vertex {x.id} not in graph")
        if x.id in comp.vertex_set():
            return Representative(real=x)
        target = tree.preferred_home(x.id)
    else:
        if not tree.graph.has_edge_id(x.id):
            raise SpqrError(f"edge {x.id} not in graph")
        home, idx = tree.edge_home[x.id]
        if home == c:
            return Representative(real=x)
        target = home
    return Representative(virtual=tree.first_hop(c, target))


def central_component(tree: SpqrTree, x1: ElementRef, x2: ElementRef, x3: ElementRef) -> int:
    """A component where the three elements have pairwise distinct representatives.

    The tree median of the elements' home components works in every case of
    the existence proof: coinciding homes, a home on the path between the
    other two, and the branching median all land on a central component.
    """
    homes = []
    for x in (x1, x2, x3):
        if isinstance(x, VertexRef):
            homes.append(tree.preferred_home(x.id))
        else:
            homes.append(tree.edge_home[x.id][0])
    m = tree.median(*homes)
    if debug_checks():
        reps = [representative(tree, m, x) for x in (x1, x2, x3)]
        if len({(r.real, r.virtual) for r in reps}) != 3:
            raise InternalInvariantError("median component is not central")
    return m


def split_vertices(tree: SpqrTree, c: int, idx: int) -> frozenset[int]:
    """Vertex set of G(C, e) for a virtual skeleton edge e of component c."""
    key = (c, idx)
    cached = tree._split_vertex_cache.get(key)
    if cached is not None:
        return cached
    e = tree.components[c].edges[idx]
    if not e.is_virtual:
        raise SpqrError("split_vertices needs a virtual edge")
    start, _sidx = tree.twin[key]
    verts: set[int] = set()
    seen = {c, start}
    queue = deque([start])
    while queue:
        comp = queue.popleft()
        verts.update(tree.components[comp].vertices)
        for nbr, _ in tree.comp_adj[comp]:
            if nbr not in seen:
                seen.add(nbr)
                queue.append(nbr)
    out = frozenset(verts)
    tree._split_vertex_cache[key] = out
    return out


def split_subgraph(tree: SpqrTree, c: int, idx: int) -> Graph:
    """G(C, e): all real vertices and edges hanging beyond virtual edge e."""
    key = (c, idx)
    cached = tree._split_cache.get(key)
    if cached is not None:
        return cached
    e = tree.components[c].edges[idx]
    if not e.is_virtual:
        raise SpqrError("split_subgraph needs a virtual edge")
    start, _sidx = tree.twin[key]
    verts: set[int] = set()
    eids: set[int] = set()
    seen = {c, start}
    queue = deque([start])
    while queue:
        comp_id = queue.popleft()
        comp = tree.components[comp_id]
        verts.update(comp.vertices)
        for se in comp.edges:
            if se.real_id is not None:
                eids.add(se.real_id)
        for nbr, _ in tree.comp_adj[comp_id]:
            if nbr not in seen:
                seen.add(nbr)
                queue.append(nbr)
    sub = Graph(verts, tree.graph.labels, {eid: tree.graph.edges[eid] for eid in eids})
    if debug_checks():
        plus, _ = _with_edge(sub, e.u, e.v)
        if not connectivity.is_biconnected(plus):
            raise InternalInvariantError("split subgraph plus its virtual edge is not biconnected")
    tree._split_cache[key] = sub
    tree._split_vertex_cache[key] = frozenset(verts)
    return sub


def _with_edge(g: Graph, u: int, v: int):
    from mustpath.graph import add_edge

    return add_edge(g, u, v)


def path_through_in_split(tree: SpqrTree, c: int, idx: int, x: ElementRef) -> Path:
    """Simple a-b path inside G(C, e) that contains element x."""
    e = tree.components[c].edges[idx]
    if not e.is_virtual:
        raise SpqrError("path_through_in_split needs a virtual edge")
    a, b = e.u, e.v
    sub = split_subgraph(tree, c, idx)
    if isinstance(x, VertexRef):
        if x.id in (a, b) or not sub.has_vertex(x.id):
            raise SpqrError("element outside the split subgraph")
        paths = connectivity.vertex_disjoint_paths(sub, [x.id], [a, b], 2)
        if paths is None:
            raise InternalInvariantError("split subgraph lost its two terminal paths")
        p1, p2 = paths
        if p1.vertices[-1] == a:
            to_a, to_b = p1, p2
        else:
            to_a, to_b = p2, p1
        verts = tuple(reversed(to_a.vertices)) + to_b.vertices[1:]
        eids = tuple(reversed(to_a.edges)) + to_b.edges
        return Path(verts, eids)
    if not sub.has_edge_id(x.id):
        raise SpqrError("element outside the split subgraph")
    u, v = sub.edge_ends(x.id)
    if {u, v} == {a, b}:
        return Path((a, b), (x.id,))
    paths = connectivity.vertex_disjoint_paths(sub, [u, v], [a, b], 2)
    if paths is None:
        raise InternalInvariantError("split subgraph lost its two terminal paths")
    p1, p2 = paths
    if p1.vertices[-1] == a:
        to_a, to_b = p1, p2
    else:
        to_a, to_b = p2, p1
    # a ...(rev to_a)... x-end, across x, x-other-end ...(to_b)... b
    first = tuple(reversed(to_a.vertices))
    second = to_b.vertices
    verts = first + second
    eids = tuple(reversed(to_a.edges)) + (x.id,) + to_b.edges
    path = Path(verts, eids)
    path.validate(sub)
    return path


def s_cycle_order(comp: Component) -> list[int]:
    """Vertices of an S component in skeleton cycle order."""
    adj: dict[int, list[int]] = {}
    for e in comp.edges:
        adj.setdefault(e.u, []).append(e.v)
        adj.setdefault(e.v, []).append(e.u)
    start = min(adj)
    order = [start]
    prev = -1
    cur = start
    while True:
        nbrs = [w for w in adj[cur] if w != prev]
        nxt = min(nbrs) if len(order) == 1 else nbrs[0]
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return order


def separation_pairs(tree: SpqrTree) -> set[frozenset[int]]:
    """All 2-cuts of the graph, as modeled by the tree."""
    out: set[frozenset[int]] = set()
    for comp in tree.components:
        if comp.kind == "P":
            out.add(frozenset(comp.vertices))
        elif comp.kind == "S":
            order = s_cycle_order(comp)
            k = len(order)
            for i in range(k):
                for j in range(i + 2, k):
                    if i == 0 and j == k - 1:
                        continue
                    out.add(frozenset((order[i], order[j])))
    for (c1, i1), (c2, _i2) in tree.structural_edges:
        if tree.components[c1].kind != "P" and tree.components[c2].kind != "P":
            e = tree.components[c1].edges[i1]
            out.add(frozenset((e.u, e.v)))
    return out


def validate_spqr(tree: SpqrTree) -> None:
    """Check every structural invariant; raises InternalInvariantError."""
    g = tree.graph
    seen_real: dict[int, int] = {}
    for comp in tree.components:
        if comp.kind == "S":
            if not _is_cycle(comp.vertices, [(e.u, e.v, "x", None) for e in comp.edges]):
                raise InternalInvariantError(f"S component {comp.id} is not a cycle")
        elif comp.kind == "P":
            if len(comp.vertices) != 2 or len(comp.edges) < 3:
                raise InternalInvariantError(f"P component {comp.id} malformed")
            if sum(1 for e in comp.edges if e.real_id is not None) > 1:
                raise InternalInvariantError(f"P component {comp.id} has parallel real edges")
            if any({e.u, e.v} != set(comp.vertices) for e in comp.edges):
                raise InternalInvariantError(f"P component {comp.id} edge endpoints wrong")
        else:
            if len(comp.vertices) < 4:
                raise InternalInvariantError(f"R component {comp.id} too small")
            pairs = {(e.u, e.v) for e in comp.edges}
            if len(pairs) != len(comp.edges):
                raise InternalInvariantError(f"R component {comp.id} is not simple")
            skel = Graph(
                comp.vertices,
                {v: str(v) for v in comp.vertices},
                {i: (e.u, e.v) for i, e in enumerate(comp.edges)},
            )
            if not connectivity.is_k_connected(skel, 3):
                raise InternalInvariantError(f"R component {comp.id} is not triconnected")
        for e in comp.edges:
            if e.real_id is not None:
                if e.real_id in seen_real:
                    raise InternalInvariantError(f"edge {e.real_id} real in two components")
                seen_real[e.real_id] = comp.id
                if set(g.edge_ends(e.real_id)) != {e.u, e.v}:
                    raise InternalInvariantError(f"edge {e.real_id} endpoints differ from graph")
    if set(seen_real) != set(g.edges):
        raise InternalInvariantError("reconstruction does not cover the edge set")
    union_vertices = set()
    for comp in tree.components:
        union_vertices.update(comp.vertices)
    if union_vertices != set(g.vertices):
        raise InternalInvariantError("reconstruction does not cover the vertex set")
    for (c1, _), (c2, _) in tree.structural_edges:
        k1, k2 = tree.components[c1].kind, tree.components[c2].kind
        if k1 == k2 == "S" or k1 == k2 == "P":
            raise InternalInvariantError(f"adjacent {k1} components {c1},{c2}")
    for slot, other in tree.twin.items():
        if tree.twin[other] != slot:
            raise InternalInvariantError("twin map is not an involution")
        e1 = tree.components[slot[0]].edges[slot[1]]
        e2 = tree.components[other[0]].edges[other[1]]
        if (e1.u, e1.v) != (e2.u, e2.v):
            raise InternalInvariantError("twin endpoints disagree")
    if len(tree.structural_edges) != len(tree.components) - 1:
        raise InternalInvariantError("structural edges do not form a tree")
    if tree.element_count() > 8 * max(g.m, 1):
        raise InternalInvariantError("component elements exceed the linear bound")


# ---------------------------------------------------------------------------
# Export


def spqr_to_json(tree: SpqrTree) -> dict:
    comps = []
    for comp in tree.components:
        edges = []
        for idx, e in enumerate(comp.edges):
            if e.real_id is not None:
                edges.append(
                    {
                        "type": "real",
                        "u": tree.graph.labels[e.u],
                        "v": tree.graph.labels[e.v],
                        "edge": e.real_id,
                    }
                )
            else:
                twin = tree.twin[(comp.id, idx)]
                edges.append(
                    {
                        "type": "virtual",
                        "u": tree.graph.labels[e.u],
                        "v": tree.graph.labels[e.v],
                        "twin": [twin[0], twin[1]],
                    }
                )
        comps.append(
            {
                "id": comp.id,
                "kind": comp.kind,
                "vertices": [tree.graph.labels[v] for v in comp.vertices],
                "edges": edges,
            }
        )
    return {
        "components": comps,
        "structural_edges": [[c1, i1, c2, i2] for (c1, i1), (c2, i2) in tree.structural_edges],
    }


def spqr_to_dot(tree: SpqrTree) -> str:
    out = ["graph SPQR {", "  compound=true;"]
    for comp in tree.components:
        out.append(f"  subgraph cluster_{comp.id} {{")
        out.append(f'    label="{comp.kind}{comp.id}";')
        for v in comp.vertices:
            out.append(f'    c{comp.id}_v{v} [label="{tree.graph.labels[v]}"];')
        for e in comp.edges:
            style = "dashed" if e.is_virtual else "solid"
            out.append(f"    c{comp.id}_v{e.u} -- c{comp.id}_v{e.v} [style={style}];")
        out.append("  }")
    for (c1, i1), (c2, i2) in tree.structural_edges:
        e1 = tree.components[c1].edges[i1]
        e2 = tree.components[c2].edges[i2]
        out.append(
            f"  c{c1}_v{e1.u} -- c{c2}_v{e2.u} "
            f'[style=bold, ltail=cluster_{c1}, lhead=cluster_{c2}];'
        )
    out.append("}")
    return "\n".join(out) + "\n"
