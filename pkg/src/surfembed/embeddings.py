"""Rotation systems, face tracing, and orientable genus.

A rotation system fixes a cyclic order of neighbors at each vertex and thereby
a cellular embedding in an orientable surface; tracing the face orbits and
applying Euler's formula per component gives the genus.  The minimum over all
rotation systems is the graph's genus, computed here by a depth-first search
over incremental face tracings with two sound prunes: the Euler edge bound and
a faces-still-achievable bound (every face of a component with at least two
edges consumes at least three darts).

Planarity is delegated to networkx's linear-time left-right test; the answer is
never trusted as-is: a planar embedding is converted to a rotation system and
re-traced to genus 0, and a non-planar verdict is decoded into an explicit
K5/K33 subdivision witness and re-verified edge by edge.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Literal, Sequence

import networkx as nx

from .core import Edge, Graph, blocks, norm_edge

# ---------------------------------------------------------------------------
# rotation systems and faces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic neighbor order at every vertex (orientable embedding scheme)."""

    order: tuple[tuple[int, tuple[int, ...]], ...]

    @classmethod
    def from_dict(cls, rot: dict[int, Sequence[int]]) -> "RotationSystem":
        return cls(tuple((v, tuple(ns)) for v, ns in sorted(rot.items())))

    def as_dict(self) -> dict[int, tuple[int, ...]]:
        return {v: ns for v, ns in self.order}

    def at(self, v: int) -> tuple[int, ...]:
        for u, ns in self.order:
            if u == v:
                return ns
        raise KeyError(v)


def validate_rotation(g: Graph, rot: RotationSystem) -> None:
    d = rot.as_dict()
    if set(d) != set(g.vertices):
        raise ValueError("rotation vertices do not match the graph")
    for v, ns in d.items():
        if sorted(ns) != list(g.neighbors(v)):
            raise ValueError(f"rotation at {v} is not a permutation of its neighbors")


@dataclass(frozen=True)
class FaceSet:
    """Faces of a rotation system: each face is a tuple of darts (u, v)."""

    faces: tuple[tuple[tuple[int, int], ...], ...]

    def __len__(self) -> int:
        return len(self.faces)


def trace_faces(g: Graph, rot: RotationSystem) -> FaceSet:
    """Orbit decomposition of darts: after dart (u, v) comes (v, w) where w
    follows u in the rotation at v.  Every dart lies on exactly one face."""
    validate_rotation(g, rot)
    order = rot.as_dict()
    succ: dict[tuple[int, int], int] = {}
    for v, ns in order.items():
        k = len(ns)
        for i, u in enumerate(ns):
            succ[(v, u)] = ns[(i + 1) % k]
    darts = sorted((u, v) for u, v in list(g.edges) + [(b, a) for a, b in g.edges])
    unused = set(darts)
    faces = []
    for start in darts:
        if start not in unused:
            continue
        walk = []
        d = start
        while True:
            walk.append(d)
            unused.discard(d)
            u, v = d
            d = (v, succ[(v, u)])
            if d == start:
                break
        faces.append(tuple(walk))
    return FaceSet(faces=tuple(faces))


def genus_of_rotation(g: Graph, rot: RotationSystem) -> int:
    """Euler genus count: sum over components of (2 - V + E - F) / 2."""
    faces = trace_faces(g, rot)
    face_comp: dict[frozenset[int], int] = {}
    comps = g.components()

    def comp_of(v: int) -> int:
        for i, c in enumerate(comps):
            if v in c:
                return i
        raise KeyError(v)

    f_count = [0] * len(comps)
    for f in faces.faces:
        f_count[comp_of(f[0][0])] += 1
    total = 0
    for i, c in enumerate(comps):
        vs = len(c)
        es = sum(1 for e in g.edges if e[0] in c)
        fc = f_count[i] if es else 1
        euler = vs - es + fc
        if (2 - euler) % 2:
            raise AssertionError("odd Euler defect: face trace is inconsistent")
        total += (2 - euler) // 2
    return total


# ---------------------------------------------------------------------------
# exhaustive minimum genus
# ---------------------------------------------------------------------------


class BudgetExceeded(RuntimeError):
    """A genus value needed by a computation could not be certified within
    the given budget."""


@dataclass(frozen=True)
class GenusResult:
    """Outcome of a genus computation.

    status 'ok': genus is exact and rotation witnesses it.
    status 'exceeds-budget': genus > budget; lower_bound is certified.
    status 'timeout': search aborted; nothing is certified (upper_bound may
    still carry the best embedding found).
    """

    status: Literal["ok", "exceeds-budget", "timeout"]
    genus: int | None
    rotation: RotationSystem | None
    lower_bound: int
    upper_bound: int | None = None

    @property
    def certified(self) -> bool:
        return self.status in ("ok", "exceeds-budget")


class _Timeout(Exception):
    pass


class _Done(Exception):
    pass


def _component_min_genus(
    g: Graph, comp: frozenset[int], budget: int, deadline: float | None
) -> tuple[int | None, dict[int, tuple[int, ...]] | None, int]:
    """Exact genus of one component if <= budget.

    Returns (genus, rotation dict, certified lower bound).  genus None means
    the certified lower bound is budget + 1.  Raises _Timeout on deadline.
    """
    verts = sorted(comp, key=lambda v: (-g.degree(v), v))
    vn = len(verts)
    edges = [e for e in g.sorted_edges() if e[0] in comp]
    en = len(edges)
    if en == 0:
        return 0, {v: () for v in comp}, 0
    if en == 1:
        u, v = edges[0]
        return 0, {u: (v,), v: (u,)}, 0
    # Euler edge bound: E <= 3V - 6 + 6g for connected graphs on >= 3 vertices
    if vn >= 3:
        euler_lb = max(0, -(-(en - 3 * vn + 6) // 6))
        if euler_lb > budget:
            return None, None, euler_lb

    vidx = {v: i for i, v in enumerate(verts)}
    # dart 2i points idx_u -> idx_v for edge i, dart 2i+1 the reverse.
    # out-darts are grouped per vertex; rotations are built as successor pairs
    # over out-darts while faces are traced, so each full DFS leaf is exactly
    # one rotation system and the traversal is exhaustive.
    head = []
    for u, v in edges:
        head.append(vidx[v])
        head.append(vidx[u])
    nd = 2 * en
    out_darts: list[list[int]] = [[] for _ in range(vn)]
    for d in range(nd):
        out_darts[head[d ^ 1]].append(d)
    deg = [len(x) for x in out_darts]

    # dart processing order: darts of high-degree vertices first
    dart_rank = [0] * nd
    rank = 0
    for v in range(vn):
        for d in out_darts[v]:
            dart_rank[d] = rank
            rank += 1
    by_rank = sorted(range(nd), key=lambda d: dart_rank[d])

    succ = [-1] * nd  # successor among out-darts at the same vertex
    pred = [-1] * nd
    used = [False] * nd
    chain_start = list(range(nd))  # valid when indexed by a chain end
    chain_end = list(range(nd))  # valid when indexed by a chain start
    chain_size = [1] * nd  # valid when indexed by a chain start

    f_parity = (en - vn) % 2
    best_f = -1
    best_rot: list[int] | None = None
    f_budget = en - vn + 2 - 2 * budget  # faces needed for genus == budget
    f_planar = en - vn + 2
    nodes = 0

    def candidates(x: int, f0: int) -> list[int]:
        v = head[x ^ 1]  # vertex the out-dart x leaves from
        out = []
        close_opt = None
        for y in out_darts[v]:
            if pred[y] != -1:
                continue
            if chain_start[x] == y:
                # joining would close the rotation cycle at v
                if chain_size[y] != deg[v]:
                    continue
            if y == f0:
                close_opt = y
            elif not used[y]:
                out.append(y)
        out.sort()
        if close_opt is not None:
            out.insert(0, close_opt)
        return out

    def dfs(d_last: int, f0: int, closed: int, used_cnt: int) -> None:
        nonlocal best_f, best_rot, nodes
        nodes += 1
        if deadline is not None and nodes % 4096 == 0 and time.monotonic() > deadline:
            raise _Timeout
        need = f_budget if best_f < f_budget else best_f + 2
        remaining = nd - used_cnt
        ub = closed + 1 + remaining // 3
        if (ub - f_parity) % 2:
            ub -= 1
        if ub < need:
            return
        x = d_last ^ 1  # out-dart at the vertex the face just reached
        for y in candidates(x, f0):
            face_close = y == f0
            cycle_close = chain_start[x] == y  # pair completes the rotation at v
            sx = chain_start[x]
            ey = chain_end[y]
            szy = chain_size[y]
            succ[x] = y
            pred[y] = x
            if not cycle_close:
                chain_end[sx] = ey
                chain_start[ey] = sx
                chain_size[sx] += szy
            if face_close:
                nc = closed + 1
                nxt = -1
                for d in by_rank:
                    if not used[d]:
                        nxt = d
                        break
                if nxt == -1:
                    if nc > best_f:
                        best_f = nc
                        best_rot = succ.copy()
                        if best_f >= f_planar:
                            raise _Done
                else:
                    used[nxt] = True
                    dfs(nxt, nxt, nc, used_cnt + 1)
                    used[nxt] = False
            else:
                used[y] = True
                dfs(y, f0, closed, used_cnt + 1)
                used[y] = False
            succ[x] = -1
            pred[y] = -1
            if not cycle_close:
                chain_end[sx] = x
                chain_start[ey] = y
                chain_size[sx] -= szy

    first = by_rank[0]
    used[first] = True
    try:
        dfs(first, first, 0, 1)
    except _Done:
        pass

    if best_f < f_budget:
        return None, None, budget + 1
    genus = (2 - vn + en - best_f) // 2
    assert best_rot is not None
    # succ pairs -> cyclic neighbor order per vertex
    rot: dict[int, tuple[int, ...]] = {}
    for v in range(vn):
        ds = out_darts[v]
        start = ds[0]
        cyc = [start]
        cur = best_rot[start]
        while cur != start:
            cyc.append(cur)
            cur = best_rot[cur]
        rot[verts[v]] = tuple(verts[head[d]] for d in cyc)
    return genus, rot, genus


def min_genus(
    g: Graph, budget: int, timeout: float | None = None
) -> GenusResult:
    """Exact minimum orientable genus by exhaustive rotation search.

    Components are searched independently and their genera summed.  If the sum
    certifiably exceeds the budget the search stops with a certified lower
    bound; a timeout yields status 'timeout' with nothing certified.
    """
    if budget < 0:
        raise ValueError("budget must be >= 0")
    deadline = time.monotonic() + timeout if timeout is not None else None
    total = 0
    rot: dict[int, tuple[int, ...]] = {}
    comps = g.components()
    try:
        for comp in comps:
            res, crot, lb = _component_min_genus(g, comp, budget - total, deadline)
            if res is None:
                return GenusResult(
                    status="exceeds-budget",
                    genus=None,
                    rotation=None,
                    lower_bound=total + lb,
                )
            total += res
            assert crot is not None
            rot.update(crot)
    except _Timeout:
        return GenusResult(
            status="timeout", genus=None, rotation=None, lower_bound=0
        )
    rs = RotationSystem.from_dict(rot)
    assert genus_of_rotation(g, rs) == total
    return GenusResult(
        status="ok", genus=total, rotation=rs, lower_bound=total, upper_bound=total
    )


# ---------------------------------------------------------------------------
# planarity with verified witnesses
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KuratowskiWitness:
    """A K5 or K33 subdivision: branch vertices plus internally disjoint paths.

    For kind 'K5' the pattern vertices are 0..4, all pairs joined; for 'K33'
    they are 0..5 with parts {0,1,2} and {3,4,5}.  paths maps each pattern edge
    to the host path between the corresponding branch vertices.
    """

    kind: Literal["K5", "K33"]
    branch_vertices: tuple[int, ...]
    paths: tuple[tuple[tuple[int, int], tuple[int, ...]], ...]

    def path_dict(self) -> dict[tuple[int, int], tuple[int, ...]]:
        return dict(self.paths)

    def all_vertices(self) -> frozenset[int]:
        out = set(self.branch_vertices)
        for _, p in self.paths:
            out |= set(p)
        return frozenset(out)


def pattern_edges_of(kind: str) -> list[tuple[int, int]]:
    if kind == "K5":
        return [(i, j) for i in range(5) for j in range(i + 1, 5)]
    if kind == "K33":
        return [(i, j) for i in range(3) for j in range(3, 6)]
    raise ValueError(kind)


def verify_kuratowski(g: Graph, w: KuratowskiWitness) -> list[str]:
    """Re-check a subdivision witness; returns a list of violations (empty = good)."""
    bad: list[str] = []
    k = 5 if w.kind == "K5" else 6
    bv = w.branch_vertices
    if len(bv) != k or len(set(bv)) != k:
        bad.append(f"need {k} distinct branch vertices")
        return bad
    if set(bv) - g.vertices:
        bad.append("branch vertices outside graph")
        return bad
    want = set(pattern_edges_of(w.kind))
    got = {pe for pe, _ in w.paths}
    if want != got:
        bad.append("path set does not cover the pattern edges exactly")
        return bad
    interior_seen: set[int] = set()
    for (i, j), p in w.paths:
        if len(p) < 2 or p[0] != bv[i] or p[-1] != bv[j]:
            bad.append(f"path {i}-{j} endpoints wrong")
            continue
        for a, b in zip(p, p[1:]):
            if not g.has_edge(a, b):
                bad.append(f"path {i}-{j} uses non-edge {a}-{b}")
        inner = set(p[1:-1])
        if inner & set(bv):
            bad.append(f"path {i}-{j} passes through a branch vertex")
        if inner & interior_seen:
            bad.append(f"path {i}-{j} shares interior vertices with another path")
        if len(set(p)) != len(p):
            bad.append(f"path {i}-{j} revisits a vertex")
        interior_seen |= inner
    return bad


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    rotation: RotationSystem | None = None
    witness: KuratowskiWitness | None = None


def _decode_kuratowski(sub: Graph) -> KuratowskiWitness:
    """Read a K5/K33 subdivision off a Kuratowski subgraph."""
    work = sub
    while True:  # strip stray low-degree vertices, if any
        drop = [v for v in work.vertices if work.degree(v) <= 1]
        if not drop:
            break
        work = work.remove_vertices(drop)
    branch = sorted(v for v in work.vertices if work.degree(v) >= 3)
    paths: list[tuple[int, ...]] = []
    seen_edges: set[Edge] = set()
    for b in branch:
        for nb in work.neighbors(b):
            if norm_edge(b, nb) in seen_edges:
                continue
            path = [b, nb]
            seen_edges.add(norm_edge(b, nb))
            while work.degree(path[-1]) == 2:
                a, c = work.neighbors(path[-1])
                nxt = c if a == path[-2] else a
                seen_edges.add(norm_edge(path[-1], nxt))
                path.append(nxt)
            if path[-1] in branch and (path[0] < path[-1] or (path[0] == path[-1])):
                paths.append(tuple(path))
            elif path[-1] in branch:
                # keep one direction only; the reverse walk finds it again
                pass
    degs = sorted(work.degree(v) for v in branch)
    if len(branch) == 5 and degs == [4] * 5:
        kind = "K5"
        order = branch
    elif len(branch) == 6 and degs == [3] * 6:
        kind = "K33"
        # bipartition: vertices joined by a path are on opposite sides
        adj: dict[int, set[int]] = {b: set() for b in branch}
        for p in paths:
            adj[p[0]].add(p[-1])
            adj[p[-1]].add(p[0])
        a0 = branch[0]
        side_a = sorted(b for b in branch if b not in adj[a0])
        side_b = sorted(adj[a0])
        if len(side_a) != 3 or len(side_b) != 3:
            raise AssertionError("counterexample is not a K33 subdivision")
        order = side_a + side_b
    else:
        raise AssertionError("counterexample is not a Kuratowski subgraph")
    pos = {v: i for i, v in enumerate(order)}
    tagged = []
    for p in paths:
        i, j = pos[p[0]], pos[p[-1]]
        if i > j:
            i, j = j, i
            p = p[::-1]
        tagged.append(((i, j), p))
    tagged.sort()
    return KuratowskiWitness(kind=kind, branch_vertices=tuple(order), paths=tuple(tagged))


def planarity(g: Graph) -> PlanarityResult:
    """Planarity with evidence either way: a genus-0 rotation system or a
    verified K5/K33 subdivision witness."""
    ng = nx.Graph()
    ng.add_nodes_from(g.vertices)
    ng.add_edges_from(g.edges)
    ok, cert = nx.check_planarity(ng, counterexample=True)
    if ok:
        ok2, emb = nx.check_planarity(ng)
        assert ok2
        rot = {}
        for v in g.vertices:
            rot[v] = tuple(emb.neighbors_cw_order(v)) if g.degree(v) else ()
        rs = RotationSystem.from_dict(rot)
        if genus_of_rotation(g, rs) != 0:
            raise AssertionError("planar embedding did not trace to genus 0")
        return PlanarityResult(planar=True, rotation=rs)
    sub = Graph(cert.nodes(), cert.edges())
    w = _decode_kuratowski(sub)
    bad = verify_kuratowski(g, w)
    if bad:
        raise AssertionError(f"undecodable Kuratowski counterexample: {bad}")
    return PlanarityResult(planar=False, witness=w)


# ---------------------------------------------------------------------------
# additivity over blocks and components
# ---------------------------------------------------------------------------

_block_genus_cache: dict[tuple[frozenset[int], frozenset[Edge], int], GenusResult] = {}


def _block_min_genus(bg: Graph, budget: int, timeout: float | None) -> GenusResult:
    key = (bg.vertices, bg.edges, budget)
    hit = _block_genus_cache.get(key)
    if hit is not None:
        return hit
    pr = planarity(bg)
    if pr.planar:
        res = GenusResult(
            status="ok", genus=0, rotation=pr.rotation, lower_bound=0, upper_bound=0
        )
    else:
        if budget <= 0:
            res = GenusResult(
                status="exceeds-budget", genus=None, rotation=None, lower_bound=1
            )
        else:
            res = min_genus(bg, budget, timeout=timeout)
    _block_genus_cache[key] = res
    return res


def genus_additivity(
    g: Graph, budget: int, timeout: float | None = None
) -> GenusResult:
    """Genus via block decomposition: the genus of a graph is the sum of the
    genera of its biconnected blocks.  Rotations are reassembled at the cut
    vertices (each block's cyclic order kept contiguous) and re-traced, so the
    returned witness is verified end to end."""
    bs = blocks(g)
    total = 0
    rot: dict[int, list[int]] = {v: [] for v in g.vertices}
    for be in bs.blocks:
        bg = g.edge_subgraph(be)
        res = _block_min_genus(bg, budget - total, timeout)
        if res.status == "timeout":
            return res
        if res.status == "exceeds-budget":
            return GenusResult(
                status="exceeds-budget",
                genus=None,
                rotation=None,
                lower_bound=total + res.lower_bound,
            )
        assert res.rotation is not None and res.genus is not None
        total += res.genus
        for v, ns in res.rotation.as_dict().items():
            rot[v].extend(ns)
    rs = RotationSystem.from_dict({v: tuple(ns) for v, ns in rot.items()})
    traced = genus_of_rotation(g, rs)
    if traced != total:
        raise AssertionError(
            f"block additivity assembly traced to {traced}, expected {total}"
        )
    return GenusResult(
        status="ok", genus=total, rotation=rs, lower_bound=total, upper_bound=total
    )


# ---------------------------------------------------------------------------
# handle merge
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MergedEmbedding:
    graph: Graph
    rotation: RotationSystem
    genus_bound: int
    b_vertex_map: tuple[tuple[int, int], ...]  # original B id -> merged id


def handle_merge(
    a: Graph,
    rot_a: RotationSystem,
    b: Graph,
    rot_b: RotationSystem,
    identifications: Sequence[tuple[int, int]],
) -> MergedEmbedding:
    """Glue two embedded graphs by identifying vertex pairs, one handle per pair.

    Each identification splices the second vertex's cyclic order into the
    first's (one extra handle in the worst case), so the traced genus of the
    result is at most genus(a) + genus(b) + len(identifications).  The declared
    bound is exactly that sum; the construction is re-traced and checked
    against it.
    """
    validate_rotation(a, rot_a)
    validate_rotation(b, rot_b)
    if not identifications:
        raise ValueError("need at least one identification")
    shift = max(a.vertices, default=-1) + 1 - (min(b.vertices) if b.vertices else 0)
    bmap = {v: v + shift for v in b.vertices}
    ga = genus_of_rotation(a, rot_a)
    gb = genus_of_rotation(b, rot_b)
    bound = ga + gb + len(identifications)

    verts = set(a.vertices) | set(bmap.values())
    edges = set(a.edges) | {norm_edge(bmap[u], bmap[v]) for u, v in b.edges}
    rot: dict[int, list[int]] = {v: list(ns) for v, ns in rot_a.as_dict().items()}
    for v, ns in rot_b.as_dict().items():
        rot[bmap[v]] = [bmap[u] for u in ns]

    cur = {v: v for v in verts}  # id -> current merged representative

    def rep(v: int) -> int:
        while cur[v] != v:
            v = cur[v]
        return v

    for va, vb in identifications:
        if va not in a.vertices:
            raise ValueError(f"identification vertex {va} not in first graph")
        if vb not in b.vertices:
            raise ValueError(f"identification vertex {vb} not in second graph")
        x = rep(va)
        y = rep(bmap[vb])
        if x == y:
            continue
        rx, ry = rot[x], rot[y]
        if not ry:
            # trivial case: nothing to splice
            pass
        elif not rx:
            rot[x] = ry
        else:
            # splice y's cycle into x's right after x's first neighbor,
            # starting from y's first neighbor; any corner works for the bound
            rot[x] = [rx[0]] + ry + rx[1:]
        del rot[y]
        cur[y] = x
        # re-point y's edges at x, dropping loops
        new_edges = set()
        for u, v in edges:
            u2 = x if u == y else u
            v2 = x if v == y else v
            if u2 != v2:
                new_edges.add(norm_edge(u2, v2))
        edges = new_edges
        verts.discard(y)
        for v in list(rot):
            rot[v] = [x if u == y else u for u in rot[v]]
        # collapse parallel edges in the rotation: keep first occurrence
        seen: set[int] = set()
        dedup = []
        for u in rot[x]:
            if u not in seen:
                seen.add(u)
                dedup.append(u)
        rot[x] = dedup
        for v in list(rot):
            if v != x:
                rot[v] = [u for i, u in enumerate(rot[v]) if u != x or rot[v].index(u) == i]

    merged = Graph(verts, edges)
    rs = RotationSystem.from_dict({v: tuple(ns) for v, ns in rot.items()})
    traced = genus_of_rotation(merged, rs)
    if traced > bound:
        raise AssertionError(
            f"handle merge traced to genus {traced}, above the declared bound {bound}"
        )
    return MergedEmbedding(
        graph=merged,
        rotation=rs,
        genus_bound=bound,
        b_vertex_map=tuple(sorted(bmap.items())),
    )
