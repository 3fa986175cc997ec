"""Finite simple graphs and the handful of surgical operations everything else builds on.

Vertices are non-negative integers.  Edges are unordered pairs, stored normalized
as (min, max) tuples.  All value types are immutable after construction; every
operation returns a new object and uses deterministic tie-breaking (smallest id
first) so that repeated runs produce identical output.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"loop edge at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph.

    Endpoints of supplied edges are added to the vertex set automatically, so
    ``Graph(edges=[(0, 1)])`` is the single edge.  Isolated vertices are kept.
    """

    __slots__ = ("vertices", "edges", "_adj", "_hash")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Sequence[int]] = ()):
        vs = set()
        for v in vertices:
            v = int(v)
            if v < 0:
                raise ValueError(f"negative vertex id {v}")
            vs.add(v)
        es = set()
        for e in edges:
            u, v = e
            es.add(norm_edge(int(u), int(v)))
        for u, v in es:
            if u < 0:
                raise ValueError(f"negative vertex id {u}")
            vs.add(u)
            vs.add(v)
        self.vertices: frozenset[int] = frozenset(vs)
        self.edges: frozenset[Edge] = frozenset(es)
        adj: dict[int, set[int]] = {v: set() for v in vs}
        for u, v in es:
            adj[u].add(v)
            adj[v].add(u)
        self._adj: dict[int, tuple[int, ...]] = {
            v: tuple(sorted(ns)) for v, ns in adj.items()
        }
        self._hash = hash((self.vertices, self.edges))

    # -- basic queries -------------------------------------------------

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def has_vertex(self, v: int) -> bool:
        return v in self.vertices

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_vertices(self) -> list[int]:
        return sorted(self.vertices)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    # -- derived subgraphs ---------------------------------------------

    def subgraph(self, keep: Iterable[int]) -> "Graph":
        keep = set(keep)
        return Graph(
            vertices=keep & self.vertices,
            edges=[e for e in self.edges if e[0] in keep and e[1] in keep],
        )

    def remove_vertices(self, drop: Iterable[int]) -> "Graph":
        drop = set(drop)
        return self.subgraph(self.vertices - drop)

    def remove_edges(self, drop: Iterable[Sequence[int]]) -> "Graph":
        gone = {norm_edge(u, v) for u, v in drop}
        return Graph(self.vertices, self.edges - gone)

    def add_edges(self, extra: Iterable[Sequence[int]]) -> "Graph":
        return Graph(self.vertices, list(self.edges) + [tuple(e) for e in extra])

    def edge_subgraph(self, keep_edges: Iterable[Sequence[int]]) -> "Graph":
        es = {norm_edge(u, v) for u, v in keep_edges}
        missing = es - self.edges
        if missing:
            raise ValueError(f"edges not in graph: {sorted(missing)}")
        vs = set()
        for u, v in es:
            vs.add(u)
            vs.add(v)
        return Graph(vs, es)

    # -- connectivity ---------------------------------------------------

    def components(self) -> list[frozenset[int]]:
        """Connected components, each a frozenset, ordered by smallest member."""
        seen: set[int] = set()
        comps = []
        for start in self.sorted_vertices():
            if start in seen:
                continue
            comp = {start}
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if y not in comp:
                        comp.add(y)
                        queue.append(y)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def is_connected_subset(self, vs: Iterable[int]) -> bool:
        """True if the given vertices induce a connected (non-empty) subgraph."""
        vs = set(vs)
        if not vs:
            return False
        start = min(vs)
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in self._adj[x]:
                if y in vs and y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen == vs

    def cycle_rank(self) -> int:
        return self.m - self.n + len(self.components())

    def shortest_path(self, src: int, dst: int, avoid: Iterable[int] = ()) -> list[int] | None:
        """BFS path from src to dst avoiding the given vertices; None if separated."""
        avoid = set(avoid)
        if src in avoid or dst in avoid:
            return None
        prev: dict[int, int] = {src: src}
        queue = deque([src])
        while queue:
            x = queue.popleft()
            if x == dst:
                path = [x]
                while prev[x] != x:
                    x = prev[x]
                    path.append(x)
                return path[::-1]
            for y in self._adj[x]:
                if y not in prev and y not in avoid:
                    prev[y] = x
                    queue.append(y)
        return None

    # -- relabeling ------------------------------------------------------

    def relabel(self, mapping: dict[int, int]) -> "Graph":
        """Apply an injective vertex relabeling; ids not in the map are kept."""
        img = {v: mapping.get(v, v) for v in self.vertices}
        if len(set(img.values())) != len(img):
            raise ValueError("relabeling is not injective")
        return Graph(
            img.values(),
            [(img[u], img[v]) for u, v in self.edges],
        )

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class MarkedGraph:
    """A graph together with a distinguished set of marked vertices."""

    graph: Graph
    marked: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        marked = frozenset(self.marked)
        object.__setattr__(self, "marked", marked)
        stray = marked - self.graph.vertices
        if stray:
            raise ValueError(f"marked vertices not in graph: {sorted(stray)}")

    def __repr__(self) -> str:
        return f"MarkedGraph(n={self.graph.n}, m={self.graph.m}, marked={len(self.marked)})"


@dataclass(frozen=True)
class PathSystem:
    """A family of pairwise disjoint paths plus the dual separator certificate.

    ``paths`` are vertex sequences (a single vertex is a trivial path).  The
    separator is a vertex set meeting every a-b path of the host graph; Menger
    duality makes len(paths) == len(separator) at the maximum.
    """

    paths: tuple[tuple[int, ...], ...]
    separator: frozenset[int]


# -- constructors --------------------------------------------------------


def complete_graph(k: int, offset: int = 0) -> Graph:
    vs = range(offset, offset + k)
    return Graph(vs, [(u, v) for u in vs for v in vs if u < v])


def complete_bipartite(a: int, b: int, offset: int = 0) -> Graph:
    left = range(offset, offset + a)
    right = range(offset + a, offset + a + b)
    return Graph(list(left) + list(right), [(u, v) for u in left for v in right])


def cycle_graph(k: int, offset: int = 0) -> Graph:
    if k < 3:
        raise ValueError("cycle needs at least 3 vertices")
    vs = list(range(offset, offset + k))
    return Graph(vs, [(vs[i], vs[(i + 1) % k]) for i in range(k)])


def path_graph(k: int, offset: int = 0) -> Graph:
    vs = list(range(offset, offset + k))
    return Graph(vs, [(vs[i], vs[i + 1]) for i in range(k - 1)])


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    """Disjoint union; copy j is shifted so its ids start above copy j-1's maximum."""
    vs: list[int] = []
    es: list[Edge] = []
    offset = 0
    for g in graphs:
        shift = offset - (min(g.vertices) if g.vertices else 0)
        vs.extend(v + shift for v in g.vertices)
        es.extend((u + shift, v + shift) for u, v in g.edges)
        if g.vertices:
            offset = max(v + shift for v in g.vertices) + 1
    return Graph(vs, es)


# -- surgery ---------------------------------------------------------------


def identify_vertices(g: Graph, v: int, w: int) -> Graph:
    """Merge w into v: w's edges are re-attached to v, loops and parallels dropped."""
    if v not in g.vertices or w not in g.vertices:
        raise ValueError("identify_vertices: endpoint not in graph")
    if v == w:
        raise ValueError("identify_vertices: the two vertices must differ")
    es = []
    for a, b in g.edges:
        a2 = v if a == w else a
        b2 = v if b == w else b
        if a2 != b2:
            es.append((a2, b2))
    return Graph(g.vertices - {w}, es)


def cone(g: Graph, over: Iterable[int]) -> tuple[Graph, int]:
    """Add a fresh apex joined to every vertex of ``over``; returns (graph, apex id)."""
    over = set(over)
    stray = over - g.vertices
    if stray:
        raise ValueError(f"cone: vertices not in graph: {sorted(stray)}")
    apex = max(g.vertices, default=-1) + 1
    return (
        Graph(set(g.vertices) | {apex}, list(g.edges) + [(apex, u) for u in over]),
        apex,
    )


def contract(g: Graph, contracted: Iterable[Sequence[int]]) -> tuple[Graph, dict[int, int]]:
    """Contract an edge set: quotient by components of (V, contracted edges).

    Each component is relabeled to its smallest vertex id.  Returns the quotient
    graph and the vertex -> representative map.  Loops vanish, parallels collapse.
    """
    ces = {norm_edge(u, v) for u, v in contracted}
    missing = ces - g.edges
    if missing:
        raise ValueError(f"contract: edges not in graph: {sorted(missing)}")
    parent = {v: v for v in g.vertices}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in ces:
        ru, rv = find(u), find(v)
        if ru != rv:
            # keep the smaller id as the class representative
            if ru < rv:
                parent[rv] = ru
            else:
                parent[ru] = rv
    rep = {v: find(v) for v in g.vertices}
    es = []
    for u, v in g.edges:
        a, b = rep[u], rep[v]
        if a != b:
            es.append((a, b))
    return Graph(set(rep.values()), es), rep


# -- disjoint paths / Menger ------------------------------------------------


def _max_flow_paths(
    g: Graph, a: frozenset[int], b: frozenset[int], internal_only: bool
) -> tuple[list[list[int]], set[int]]:
    """Unit-capacity vertex-split max flow between vertex sets.

    With internal_only=False every vertex has capacity one, so the paths are
    fully disjoint and the min cut is a vertex separator of equal size.  With
    internal_only=True the a/b vertices are uncapacitated; separator vertices
    are then read off the cut arcs (an a- or b-vertex can appear when a direct
    a-b edge must be counted).
    """
    verts = sorted(g.vertices)
    idx = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    # node 2i = v_in, 2i+1 = v_out; 2n = source, 2n+1 = sink
    src, snk = 2 * n, 2 * n + 1
    big = n + 1 + len(g.edges)
    cap: dict[tuple[int, int], int] = {}
    adj: dict[int, list[int]] = {src: [], snk: []}

    def add_arc(x: int, y: int, c: int) -> None:
        if (x, y) not in cap:
            cap[(x, y)] = 0
            cap[(y, x)] = cap.get((y, x), 0)
            adj.setdefault(x, []).append(y)
            adj.setdefault(y, []).append(x)
        cap[(x, y)] += c

    for v in verts:
        i = idx[v]
        c = big if (internal_only and (v in a or v in b)) else 1
        add_arc(2 * i, 2 * i + 1, c)
    for u, v in g.sorted_edges():
        iu, iv = idx[u], idx[v]
        # edge arcs carry capacity 1: a simple-graph edge is used by one path
        add_arc(2 * iu + 1, 2 * iv, 1)
        add_arc(2 * iv + 1, 2 * iu, 1)
    for v in sorted(a):
        add_arc(src, 2 * idx[v], big)
    for v in sorted(b):
        add_arc(2 * idx[v] + 1, snk, big)

    flow: dict[tuple[int, int], int] = {k: 0 for k in cap}

    def bfs_augment() -> bool:
        prev: dict[int, int] = {src: src}
        queue = deque([src])
        while queue:
            x = queue.popleft()
            if x == snk:
                break
            for y in adj.get(x, ()):
                if y not in prev and cap[(x, y)] - flow[(x, y)] > 0:
                    prev[y] = x
                    queue.append(y)
        if snk not in prev:
            return False
        y = snk
        while y != src:
            x = prev[y]
            flow[(x, y)] += 1
            flow[(y, x)] -= 1
            y = x
        return True

    while bfs_augment():
        pass

    # decompose the integral flow into source-sink paths
    residual_out: dict[int, list[int]] = {}
    for (x, y), f in sorted(flow.items()):
        for _ in range(max(0, f)):
            residual_out.setdefault(x, []).append(y)
    for lst in residual_out.values():
        lst.sort(reverse=True)
    raw_paths: list[list[int]] = []
    while residual_out.get(src):
        walk = [src]
        x = src
        while x != snk:
            nxt = residual_out[x].pop()
            walk.append(nxt)
            x = nxt
        raw_paths.append(walk)

    paths: list[list[int]] = []
    for walk in raw_paths:
        vp: list[int] = []
        for node in walk:
            if node in (src, snk):
                continue
            v = verts[node // 2]
            if not vp or vp[-1] != v:
                vp.append(v)
        # excise any revisiting loop (possible only through uncapacitated ends)
        seen: dict[int, int] = {}
        out: list[int] = []
        for v in vp:
            if v in seen:
                out = out[: seen[v] + 1]
                seen = {x: i for i, x in enumerate(out)}
            else:
                seen[v] = len(out)
                out.append(v)
        paths.append(out)

    # min cut from residual reachability
    reached = {src}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for y in adj.get(x, ()):
            if y not in reached and cap[(x, y)] - flow[(x, y)] > 0:
                reached.add(y)
                queue.append(y)
    def capacitated(v: int) -> bool:
        return not (internal_only and (v in a or v in b))

    separator: set[int] = set()
    for (x, y), c in sorted(cap.items()):
        if c > 0 and x in reached and y not in reached and flow[(x, y)] > 0:
            if x < 2 * n and y < 2 * n:
                if x // 2 == y // 2:
                    separator.add(verts[x // 2])
                else:
                    # cut edge arc: charge a capacitated endpoint so distinct
                    # arcs charge distinct vertices (unit caps force it); with
                    # both ends free (a direct a-b edge) charge the tail.
                    head, tail = verts[y // 2], verts[x // 2]
                    separator.add(head if capacitated(head) else tail)
    return paths, separator


def max_disjoint_paths(
    g: Graph,
    a: Iterable[int],
    b: Iterable[int],
    internal_only: bool = False,
) -> PathSystem:
    """Maximum family of disjoint a-b paths plus an equal-size separator.

    internal_only=False: paths are pairwise vertex-disjoint (endpoints too); the
    separator may use a/b vertices.  Vertices in both a and b yield trivial
    zero-length paths.  internal_only=True: paths may share endpoints lying in
    a or b but nothing else.
    """
    a = frozenset(a)
    b = frozenset(b)
    stray = (a | b) - g.vertices
    if stray:
        raise ValueError(f"path endpoints not in graph: {sorted(stray)}")
    if not a or not b:
        return PathSystem(paths=(), separator=frozenset())
    paths, separator = _max_flow_paths(g, a, b, internal_only)
    paths_t = tuple(tuple(p) for p in sorted(paths))
    return PathSystem(paths=paths_t, separator=frozenset(separator))


# -- blocks -----------------------------------------------------------------


@dataclass(frozen=True)
class BlockStructure:
    """Biconnected components: blocks partition the edges; bridges are 2-vertex blocks."""

    blocks: tuple[frozenset[Edge], ...]
    cut_vertices: frozenset[int]

    def block_graphs(self, g: Graph) -> list[Graph]:
        return [g.edge_subgraph(b) for b in self.blocks]


def blocks(g: Graph) -> BlockStructure:
    """Hopcroft-Tarjan biconnected components by iterative DFS."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    stack_edges: list[Edge] = []
    out_blocks: list[frozenset[Edge]] = []
    cuts: set[int] = set()
    timer = 0

    for root in g.sorted_vertices():
        if root in disc:
            continue
        parent[root] = None
        work: list[tuple[int, Iterator[int]]] = [(root, iter(g.neighbors(root)))]
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in disc:
                    parent[w] = v
                    stack_edges.append(norm_edge(v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    work.append((w, iter(g.neighbors(w))))
                    advanced = True
                    break
                elif w != parent[v] and disc[w] < disc[v]:
                    stack_edges.append(norm_edge(v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    # u separates: pop the finished block
                    blk: set[Edge] = set()
                    e = norm_edge(u, v)
                    while stack_edges:
                        top = stack_edges.pop()
                        blk.add(top)
                        if top == e:
                            break
                    out_blocks.append(frozenset(blk))
                    if u != root or root_children > 1:
                        cuts.add(u)
        if root_children > 1:
            cuts.add(root)
    out_blocks.sort(key=lambda b: sorted(b))
    return BlockStructure(blocks=tuple(out_blocks), cut_vertices=frozenset(cuts))


# -- minimal connecting forest ----------------------------------------------


def minimal_connecting_forest(g: Graph, terminals: Iterable[int]) -> Graph:
    """Inclusion-minimal forest joining the terminals within each component of g.

    Built per component as a BFS tree pruned of every non-terminal leaf, so the
    result's leaves all lie in the terminal set.
    """
    terminals = set(terminals)
    stray = terminals - g.vertices
    if stray:
        raise ValueError(f"terminals not in graph: {sorted(stray)}")
    forest_edges: list[Edge] = []
    forest_vertices: set[int] = set()
    for comp in g.components():
        terms = terminals & comp
        if len(terms) < 1:
            continue
        root = min(terms)
        prev: dict[int, int] = {root: root}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y in comp and y not in prev:
                    prev[y] = x
                    queue.append(y)
        tree: set[Edge] = set()
        deg: dict[int, int] = {}
        for v, p in prev.items():
            if v != p:
                e = norm_edge(v, p)
                tree.add(e)
                deg[v] = deg.get(v, 0) + 1
                deg[p] = deg.get(p, 0) + 1
        # prune non-terminal leaves until fixed point
        changed = True
        while changed:
            changed = False
            for e in sorted(tree):
                for leaf in e:
                    if deg.get(leaf, 0) == 1 and leaf not in terms:
                        tree.discard(e)
                        deg[e[0]] -= 1
                        deg[e[1]] -= 1
                        changed = True
                        break
                if changed:
                    break
        forest_edges.extend(sorted(tree))
        used = {v for e in tree for v in e}
        forest_vertices |= used if used else {root}
    return Graph(forest_vertices, forest_edges)
