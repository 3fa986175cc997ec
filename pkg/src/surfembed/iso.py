"""Canonical forms and isomorphism for small graphs.

Plain refinement-plus-backtracking canonical labeling.  Fine for the desk-scale
graphs this package works with (tens of vertices); not meant for more.
"""

from __future__ import annotations

from itertools import permutations

from .core import Graph


def _refine(g: Graph, colors: dict[int, int]) -> dict[int, int]:
    """Iterated neighbor-color refinement until stable."""
    while True:
        sig = {
            v: (colors[v], tuple(sorted(colors[w] for w in g.neighbors(v))))
            for v in g.vertices
        }
        order = sorted(set(sig.values()))
        rank = {s: i for i, s in enumerate(order)}
        nxt = {v: rank[sig[v]] for v in g.vertices}
        if nxt == colors:
            return colors
        colors = nxt


def canonical_form(g: Graph) -> tuple[int, frozenset[tuple[int, int]]]:
    """A label-independent fingerprint: (n, canonically relabeled edge set)."""
    verts = g.sorted_vertices()
    n = len(verts)
    if n == 0:
        return (0, frozenset())
    colors = _refine(g, {v: 0 for v in verts})
    classes: dict[int, list[int]] = {}
    for v in verts:
        classes.setdefault(colors[v], []).append(v)
    cells = [sorted(classes[c]) for c in sorted(classes)]

    best: frozenset[tuple[int, int]] | None = None
    # backtrack over orderings consistent with the color classes
    def assemble(perm_lists: list[tuple[int, ...]]) -> None:
        nonlocal best
        order: list[int] = []
        for p in perm_lists:
            order.extend(p)
        pos = {v: i for i, v in enumerate(order)}
        es = frozenset(
            (min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in g.edges
        )
        key = sorted(es)
        if best is None or key < sorted(best):
            best = es

    def rec(i: int, acc: list[tuple[int, ...]]) -> None:
        if i == len(cells):
            assemble(acc)
            return
        cell = cells[i]
        if len(cell) > 7:
            # identical-looking large cell: single ordering is enough only if
            # the cell is fully symmetric; fall back to sorted order plus its
            # reversal as a cheap hedge (exact behavior preserved by callers
            # that only need equality of truly isomorphic graphs... so keep
            # full enumeration but cap factorials at 7! for safety)
            raise ValueError("canonical_form: color class too large")
        for p in permutations(cell):
            rec(i + 1, acc + [p])

    rec(0, [])
    assert best is not None
    return (n, best)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def find_isomorphism(g: Graph, h: Graph) -> dict[int, int] | None:
    """Explicit vertex bijection g -> h, or None.  Backtracking with degree pruning."""
    if g.n != h.n or g.m != h.m:
        return None
    gs = g.sorted_vertices()
    hs = h.sorted_vertices()
    gdeg = {v: g.degree(v) for v in gs}
    hdeg = {v: h.degree(v) for v in hs}
    if sorted(gdeg.values()) != sorted(hdeg.values()):
        return None
    # most-constrained-first: descending degree
    order = sorted(gs, key=lambda v: (-gdeg[v], v))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def ok(v: int, w: int) -> bool:
        if gdeg[v] != hdeg[w]:
            return False
        for u in mapping:
            if g.has_edge(u, v) != h.has_edge(mapping[u], w):
                return False
        return True

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in hs:
            if w in used or not ok(v, w):
                continue
            mapping[v] = w
            used.add(w)
            if rec(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return dict(mapping) if rec(0) else None
