"""Edmonds blossom search: maximum matching and the two reachability
primitives (balanced and saturated alternating paths).

The workhorse is :func:`_sbt_search`, a single alternating-tree growth
from an exposed root with union-find blossom shrinking.  It is run only
on maximum matchings, so it never finds an augmenting path and merely
computes the maximal special blossom tree.  :func:`maximum_matching`
uses a separate classic search that augments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import (
    NotNearPerfectError,
    NotPerfectError,
    RootNotExposedError,
    VertexRangeError,
)
from .graph import Edge, Graph, Matching, build_matching, edge_key

_UNLABELED, _OUTER, _INNER = 0, 1, 2


def _sbt_search(
    adjacency: Sequence[Sequence[int]],
    mate: list[int],
    root: int,
    skip: int = -1,
) -> tuple[list[int], list[int], list[int], list[int]]:
    """Grow the maximal alternating tree from the exposed ``root``.

    ``mate`` must be a maximum matching of the graph (ignoring ``skip``)
    whose only exposed vertex is ``root``; no augmenting path can then
    exist and every blossom found is shrunk in place via union-find.

    Returns ``(label, uf, base_of, tree_parent)``: vertex labels
    (0 unlabeled, 1 outer, 2 inner), the union-find array whose classes
    on outer vertices are the outer blossoms, the base vertex per
    representative, and for each inner vertex the outer vertex that
    labeled it.
    """
    n = len(adjacency)
    label = [_UNLABELED] * n
    uf = list(range(n))
    base_of = list(range(n))
    tree_parent = [-1] * n
    mark = [-1] * n
    label[root] = _OUTER
    queue = [root]
    qi = 0
    token = 0
    append = queue.append

    while qi < len(queue):
        x = queue[qi]
        qi += 1
        for y in adjacency[x]:
            if y == skip:
                continue
            ly = label[y]
            if ly == _INNER:
                continue
            if ly == _UNLABELED:
                # y is matched (root is the only exposed vertex): grow.
                label[y] = _INNER
                tree_parent[y] = x
                w = mate[y]
                label[w] = _OUTER
                append(w)
                continue
            # y outer: edge between two outer blossoms -> shrink a cycle.
            rx = x
            while uf[rx] != rx:
                uf[rx] = uf[uf[rx]]
                rx = uf[rx]
            ry = y
            while uf[ry] != ry:
                uf[ry] = uf[uf[ry]]
                ry = uf[ry]
            if rx == ry:
                continue
            token += 1
            a, b = rx, ry
            lca = -1
            while lca < 0:
                if a >= 0:
                    if mark[a] == token:
                        lca = a
                        break
                    mark[a] = token
                    ba = base_of[a]
                    if ba == root:
                        a = -1
                    else:
                        a = tree_parent[mate[ba]]
                        while uf[a] != a:
                            uf[a] = uf[uf[a]]
                            a = uf[a]
                if b >= 0:
                    if mark[b] == token:
                        lca = b
                        break
                    mark[b] = token
                    bb = base_of[b]
                    if bb == root:
                        b = -1
                    else:
                        b = tree_parent[mate[bb]]
                        while uf[b] != b:
                            uf[b] = uf[uf[b]]
                            b = uf[b]
            for start in (rx, ry):
                r = start
                while r != lca:
                    bb = base_of[r]
                    i = mate[bb]  # inner vertex just above this blossom
                    uf[r] = lca
                    uf[i] = lca
                    label[i] = _OUTER
                    append(i)
                    r = tree_parent[i]
                    while uf[r] != r:
                        uf[r] = uf[uf[r]]
                        r = uf[r]
    return label, uf, base_of, tree_parent


def _find(uf: list[int], x: int) -> int:
    while uf[x] != x:
        uf[x] = uf[uf[x]]
        x = uf[x]
    return x


@dataclass(frozen=True)
class Sbt:
    """Maximal special blossom tree for a near-perfect matching.

    ``blossoms`` are the vertex sets of the outer blossoms, ordered by
    minimum vertex; ``blossom_of`` maps each outer vertex to its index in
    that tuple.  ``tree_arcs`` is the parent map of the shrunken tree:
    inner vertices point at the base vertex of the blossom that labeled
    them, and each non-root blossom base points at the inner vertex
    above it.
    """

    root: int
    outer_vertices: frozenset[int]
    root_blossom: frozenset[int]
    blossoms: tuple[frozenset[int], ...]
    blossom_of: Mapping[int, int] = field(hash=False)
    tree_arcs: Mapping[int, int] = field(hash=False)


@dataclass(frozen=True)
class MatchingResult:
    matching: Matching
    is_perfect: bool
    exposed: frozenset[int]


def _require_near_perfect(g: Graph, m: Matching, root: int) -> None:
    if g.n != m.n or not m.is_near_perfect:
        raise NotNearPerfectError("matching must expose exactly one vertex of g")
    if not (0 <= root < g.n):
        raise VertexRangeError(f"root {root} outside vertex range")
    if m.mate[root] >= 0:
        raise RootNotExposedError(f"root {root} is matched")


def build_max_sbt(g: Graph, m: Matching, root: int) -> Sbt:
    """Maximal special blossom tree of ``g`` rooted at the exposed vertex.

    The outer vertices are exactly those with a balanced alternating path
    to the root.

    Raises:
        NotNearPerfectError: the matching is not near-perfect.
        RootNotExposedError: ``root`` is covered by the matching.
    """
    _require_near_perfect(g, m, root)
    label, uf, base_of, tree_parent = _sbt_search(g.adjacency, list(m.mate), root)
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        if label[v] == _OUTER:
            groups.setdefault(_find(uf, v), []).append(v)
    reps = sorted(groups, key=lambda r: groups[r][0])
    blossoms = tuple(frozenset(groups[r]) for r in reps)
    blossom_of = {v: i for i, r in enumerate(reps) for v in groups[r]}
    root_rep = _find(uf, root)
    arcs: dict[int, int] = {}
    for v in range(g.n):
        if label[v] == _INNER:
            arcs[v] = base_of[_find(uf, tree_parent[v])]
    for r in reps:
        if r != root_rep:
            arcs[base_of[r]] = m.mate[base_of[r]]
    return Sbt(
        root=root,
        outer_vertices=frozenset(blossom_of),
        root_blossom=frozenset(groups[root_rep]),
        blossoms=blossoms,
        blossom_of=blossom_of,
        tree_arcs=arcs,
    )


def balanced_reachable(g: Graph, m: Matching, root: int) -> frozenset[int]:
    """Vertices with a balanced alternating path to the exposed ``root``."""
    _require_near_perfect(g, m, root)
    label, _, _, _ = _sbt_search(g.adjacency, list(m.mate), root)
    return frozenset(v for v in range(g.n) if label[v] == _OUTER)


def _require_perfect(g: Graph, m: Matching) -> None:
    if g.n != m.n or not m.is_perfect:
        raise NotPerfectError("operation requires a perfect matching of g")


def _saturated_reach_raw(g: Graph, mate: Sequence[int], u: int) -> list[int]:
    """Label array of the search certifying saturated paths from ``u``.

    A saturated path from ``u`` minus ``u`` itself is a balanced path to
    ``mate(u)`` avoiding ``u``, so one tree growth rooted at ``mate(u)``
    with ``u`` deleted answers the query.
    """
    root = mate[u]
    mate2 = list(mate)
    mate2[u] = -1
    mate2[root] = -1
    label, _, _, _ = _sbt_search(g.adjacency, mate2, root, skip=u)
    return label


def saturated_reachable(g: Graph, m: Matching, u: int) -> frozenset[int]:
    """Vertices joined to ``u`` by a saturated alternating path.

    Raises:
        NotPerfectError: the matching is not perfect on ``g``.
    """
    _require_perfect(g, m)
    if not (0 <= u < g.n):
        raise VertexRangeError(f"vertex {u} outside range")
    label = _saturated_reach_raw(g, m.mate, u)
    return frozenset(v for v in range(g.n) if label[v] == _OUTER)


def allowed_edges_at(g: Graph, m: Matching, u: int) -> frozenset[Edge]:
    """Edges at ``u`` lying in some perfect matching.

    An edge ``uv`` qualifies iff it is the matched edge at ``u`` or there
    is a saturated alternating path between ``u`` and ``v``; the matched
    partner is always saturated-reachable, so one reachability query
    suffices.

    Raises:
        NotPerfectError: the matching is not perfect on ``g``.
    """
    _require_perfect(g, m)
    if not (0 <= u < g.n):
        raise VertexRangeError(f"vertex {u} outside range")
    label = _saturated_reach_raw(g, m.mate, u)
    return frozenset(edge_key(u, v) for v in g.adjacency[u] if label[v] == _OUTER)


def maximum_matching(g: Graph) -> MatchingResult:
    """Maximum-cardinality matching by Edmonds' blossom algorithm.

    Starts from a greedy matching and runs one augmenting search per
    remaining exposed vertex.
    """
    n = g.n
    adjacency = g.adjacency
    mate = [-1] * n
    for v in range(n):
        if mate[v] < 0:
            for w in adjacency[v]:
                if mate[w] < 0:
                    mate[v] = w
                    mate[w] = v
                    break
    for v in range(n):
        if mate[v] < 0:
            _augment_from(adjacency, mate, v)
    edges = [(v, mate[v]) for v in range(n) if 0 <= mate[v] and v < mate[v]]
    matching = build_matching(g, edges)
    exposed = frozenset(v for v in range(n) if mate[v] < 0)
    return MatchingResult(
        matching=matching, is_perfect=not exposed, exposed=exposed
    )


def _augment_from(
    adjacency: Sequence[Sequence[int]], mate: list[int], root: int
) -> bool:
    """One augmenting-path search from ``root``; flips the path if found.

    Classic array-based blossom search: ``base`` maps vertices to their
    blossom base, ``p`` holds parent pointers on inner vertices for path
    recovery, and each shrink rebases the affected vertices.
    """
    n = len(adjacency)
    used = [False] * n
    p = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = [root]
    qi = 0
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        for to in adjacency[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] >= 0 and p[mate[to]] >= 0):
                # Cycle of odd length: shrink the blossom through v and to.
                curbase = _blossom_lca(mate, base, p, v, to)
                on_cycle = [False] * n
                _mark_blossom_path(mate, base, p, on_cycle, v, curbase, to)
                _mark_blossom_path(mate, base, p, on_cycle, to, curbase, v)
                for i in range(n):
                    if on_cycle[base[i]]:
                        base[i] = curbase
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif p[to] < 0:
                p[to] = v
                if mate[to] < 0:
                    _flip_augmenting_path(mate, p, to)
                    return True
                used[mate[to]] = True
                queue.append(mate[to])
    return False


def _blossom_lca(
    mate: list[int], base: list[int], p: list[int], a: int, b: int
) -> int:
    seen = set()
    v = a
    while True:
        v = base[v]
        seen.add(v)
        if mate[v] < 0:
            break
        v = p[mate[v]]
    v = b
    while True:
        v = base[v]
        if v in seen:
            return v
        v = p[mate[v]]


def _mark_blossom_path(
    mate: list[int],
    base: list[int],
    p: list[int],
    on_cycle: list[bool],
    v: int,
    b: int,
    child: int,
) -> None:
    while base[v] != b:
        on_cycle[base[v]] = True
        on_cycle[base[mate[v]]] = True
        p[v] = child
        child = mate[v]
        v = p[mate[v]]


def _flip_augmenting_path(mate: list[int], p: list[int], v: int) -> None:
    while v >= 0:
        pv = p[v]
        next_v = mate[pv]
        mate[v] = pv
        mate[pv] = v
        v = next_v
