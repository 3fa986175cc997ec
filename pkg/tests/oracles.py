"""Independent brute-force reference implementations.

Nothing here imports the library's search code.  These run the slow,
obviously-correct route so the fast implementations have something
honest to disagree with.
"""

from __future__ import annotations

import functools
import itertools
import random

from surfembed.core import Graph
from surfembed.iso import canonical_form

# pattern edges, per-role degree needs, and interchangeable role groups
K5_PATTERN = ([(i, j) for i in range(5) for j in range(i + 1, 5)],
              [4] * 5, ((0, 1, 2, 3, 4),))
K33_PATTERN = ([(i, j) for i in range(3) for j in range(3, 6)],
               [3] * 6, ((0, 1, 2), (3, 4, 5)))
K4_PATTERN = ([(i, j) for i in range(4) for j in range(i + 1, 4)],
              [3] * 4, ((0, 1, 2, 3),))
K23_PATTERN = ([(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
               [3, 3, 2, 2, 2], ((0, 1), (2, 3, 4)))


def _adj(g: Graph) -> dict[int, set[int]]:
    return {v: set(g.neighbors(v)) for v in g.vertices}


def _routes(adj, start, goal, blocked):
    """All simple start-goal paths avoiding blocked, shortest first."""
    out = []
    stack = [(start, (start,))]
    while stack:
        v, path = stack.pop()
        for w in sorted(adj[v]):
            if w == goal:
                out.append(path + (w,))
            elif w not in blocked and w not in path:
                stack.append((w, path + (w,)))
    out.sort(key=len)
    return out


def _extend(adj, branch, edges, used):
    """Route the remaining pattern edges as internally disjoint paths."""
    if not edges:
        return True
    (i, j), rest = edges[0], edges[1:]
    a, b = branch[i], branch[j]
    blocked = (used | set(branch)) - {a, b}
    for path in _routes(adj, a, b, blocked):
        if _extend(adj, branch, rest, used | set(path[1:-1])):
            return True
    return False


def has_subdivision(g: Graph, pattern) -> bool:
    """Exhaustive search for a subdivision of the pattern inside g."""
    edges, degrees, groups = pattern
    adj = _adj(g)

    def choose(gi, taken, assignment):
        if gi == len(groups):
            branch = [0] * len(degrees)
            for grp, chosen in zip(groups, assignment):
                for role, v in zip(grp, chosen):
                    branch[role] = v
            return _extend(adj, branch, list(edges), set())
        grp = groups[gi]
        need = degrees[grp[0]]
        cands = [
            v for v in sorted(g.vertices)
            if len(adj[v]) >= need and v not in taken
        ]
        for chosen in itertools.combinations(cands, len(grp)):
            if choose(gi + 1, taken | set(chosen), assignment + [chosen]):
                return True
        return False

    return choose(0, set(), [])


def planar_by_subdivision(g: Graph) -> bool:
    """Planarity by Euler count plus exhaustive Kuratowski search."""
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    if g.n < 5:
        return True
    if has_subdivision(g, K5_PATTERN):
        return False
    if g.n >= 6 and has_subdivision(g, K33_PATTERN):
        return False
    return True


def has_k4_minor(g: Graph) -> bool:
    # max degree 3 patterns: minor containment equals subdivision containment
    return has_subdivision(g, K4_PATTERN)


def has_k23_minor(g: Graph) -> bool:
    return has_subdivision(g, K23_PATTERN)


def all_paths_between(g: Graph, srcs, dsts, forbid=frozenset()):
    """Every simple path from srcs to dsts avoiding forbid."""
    adj = _adj(g)
    dsts = set(dsts)
    out = []
    for a in sorted(set(srcs) - set(forbid)):
        if a in dsts:
            out.append((a,))
        stack = [(a, (a,))]
        while stack:
            v, path = stack.pop()
            for w in sorted(adj[v]):
                if w in path or w in forbid:
                    continue
                if w in dsts:
                    out.append(path + (w,))
                else:
                    stack.append((w, path + (w,)))
    return out


def separator_cuts_everything(g: Graph, srcs, dsts, separator) -> bool:
    sep = set(separator)
    return all(sep & set(p) for p in all_paths_between(g, srcs, dsts))


@functools.cache
def graphs_on(n: int) -> list[Graph]:
    """All graphs on vertex set 0..n-1, one per isomorphism class."""
    if n == 0:
        return [Graph([], [])]
    out: dict = {}
    for smaller in graphs_on(n - 1):
        old = sorted(smaller.vertices)
        for mask in range(1 << (n - 1)):
            nbrs = [old[i] for i in range(n - 1) if mask >> i & 1]
            g = Graph(range(n), list(smaller.edges) + [(v, n - 1) for v in nbrs])
            out.setdefault(canonical_form(g), g)
    return list(out.values())


def connected_graphs_on(n: int) -> list[Graph]:
    return [g for g in graphs_on(n) if len(g.components()) == 1]


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return Graph(range(n), edges)


def random_tree(rng: random.Random, n: int) -> Graph:
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return Graph(range(n), edges)
