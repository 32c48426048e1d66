"""Graph and matching value types plus the alternating-path vocabulary.

All types here are immutable after construction and safe to share across
threads.  Vertices are dense integer ids ``0..n-1``; external labels belong
to the CLI layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .errors import (
    DuplicateEdgeError,
    EmptySetError,
    MatchingError,
    NotAPathError,
    SelfLoopError,
    VertexRangeError,
)

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    """Normalize an unordered pair to ``(min, max)``."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` holds normalized pairs; ``adjacency[v]`` is the ascending
    tuple of neighbors of ``v``.  Construct through :func:`build_graph`.
    """

    n: int
    edges: frozenset[Edge]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


def build_graph(n: int, edge_list: Iterable[Edge]) -> Graph:
    """Validate and normalize an edge list into a :class:`Graph`.

    Raises:
        SelfLoopError: an edge joins a vertex to itself.
        DuplicateEdgeError: the same unordered pair appears twice.
        VertexRangeError: a vertex id is outside ``0..n-1``.
    """
    if n < 0:
        raise VertexRangeError(f"vertex count must be nonnegative, got {n}")
    seen: set[Edge] = set()
    adjacency: list[list[int]] = [[] for _ in range(n)]
    for u, v in edge_list:
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
        e = edge_key(u, v)
        if e in seen:
            raise DuplicateEdgeError(f"duplicate edge {e}")
        seen.add(e)
        adjacency[u].append(v)
        adjacency[v].append(u)
    return Graph(
        n=n,
        edges=frozenset(seen),
        adjacency=tuple(tuple(sorted(nbrs)) for nbrs in adjacency),
    )


@dataclass(frozen=True)
class Matching:
    """Edge subset with no two edges sharing a vertex.

    ``mate[v]`` is the matched partner of ``v`` or ``-1`` when ``v`` is
    exposed; it is an involution where defined.  Construct through
    :func:`build_matching`.
    """

    n: int
    edges: frozenset[Edge]
    mate: tuple[int, ...]

    @property
    def exposed(self) -> frozenset[int]:
        return frozenset(v for v in range(self.n) if self.mate[v] < 0)

    @property
    def is_perfect(self) -> bool:
        return all(p >= 0 for p in self.mate)

    @property
    def is_near_perfect(self) -> bool:
        return sum(1 for p in self.mate if p < 0) == 1


def build_matching(g: Graph, edges: Iterable[Edge]) -> Matching:
    """Validate ``edges`` as a matching of ``g``.

    Raises:
        MatchingError: an edge is missing from ``g`` or two edges share
            a vertex.
    """
    mate = [-1] * g.n
    norm: set[Edge] = set()
    for u, v in edges:
        e = edge_key(u, v)
        if e not in g.edges:
            raise MatchingError(f"edge {e} not in host graph")
        if mate[u] >= 0 or mate[v] >= 0:
            raise MatchingError(f"edge {e} shares a vertex with another matched edge")
        mate[u], mate[v] = v, u
        norm.add(e)
    return Matching(n=g.n, edges=frozenset(norm), mate=tuple(mate))


@dataclass(frozen=True)
class ContractedGraph:
    """Quotient of a graph by one vertex set, with simple-graph quotient.

    Parallel edge images are merged and loop images dropped.
    ``vertex_map[v]`` takes a base vertex to its quotient vertex;
    ``contracted_sets[q]`` is the base preimage of quotient vertex ``q``.
    Together they encode a partition of the base vertex set.
    """

    base: Graph
    quotient: Graph
    vertex_map: tuple[int, ...]
    contracted_sets: tuple[frozenset[int], ...]


def contract(g: Graph, X: Iterable[int]) -> ContractedGraph:
    """Collapse the vertex set ``X`` of ``g`` to a single quotient vertex.

    The contracted vertex gets the largest quotient id; the remaining
    vertices keep their relative order.

    Raises:
        EmptySetError: ``X`` is empty.
        VertexRangeError: ``X`` contains an id outside the graph.
    """
    xs = set(X)
    if not xs:
        raise EmptySetError("cannot contract the empty set")
    if any(not (0 <= v < g.n) for v in xs):
        raise VertexRangeError("contraction set outside vertex range")
    keep = [v for v in range(g.n) if v not in xs]
    h = len(keep)  # id of the contracted vertex
    vmap = [h] * g.n
    for i, v in enumerate(keep):
        vmap[v] = i
    qedges: set[Edge] = set()
    for u, v in g.edges:
        qu, qv = vmap[u], vmap[v]
        if qu != qv:
            qedges.add(edge_key(qu, qv))
    quotient = build_graph(h + 1, sorted(qedges))
    sets = [frozenset({v}) for v in keep] + [frozenset(xs)]
    return ContractedGraph(
        base=g,
        quotient=quotient,
        vertex_map=tuple(vmap),
        contracted_sets=tuple(sets),
    )


def induced_subgraph(g: Graph, X: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph of ``g`` induced by ``X``, with dense ids.

    Returns the subgraph together with the id remap: position ``i`` of the
    returned tuple is the original id of new vertex ``i`` (ascending order
    of ``X``).

    Raises:
        VertexRangeError: ``X`` contains an id outside the graph.
    """
    xs = sorted(set(X))
    if xs and not (0 <= xs[0] and xs[-1] < g.n):
        raise VertexRangeError("induced set outside vertex range")
    index = {v: i for i, v in enumerate(xs)}
    sub_edges = [
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    ]
    return build_graph(len(xs), sorted(sub_edges)), tuple(xs)


def neighbors_of_set(g: Graph, X: Iterable[int]) -> frozenset[int]:
    """Vertices outside ``X`` adjacent to some vertex of ``X``."""
    xs = set(X)
    if any(not (0 <= v < g.n) for v in xs):
        raise VertexRangeError("vertex set outside range")
    out: set[int] = set()
    for v in xs:
        out.update(w for w in g.adjacency[v] if w not in xs)
    return frozenset(out - xs)


class AltPathKind(Enum):
    """Alternating-path flavors.

    SATURATED and EXPOSED paths have an odd number of edges with both
    terminal edges respectively matched and unmatched.  BALANCED paths
    have an even number of edges and start with a matched edge at their
    source; the trivial one-vertex path counts as balanced.
    """

    SATURATED = "saturated"
    BALANCED = "balanced"
    EXPOSED = "exposed"


@dataclass(frozen=True)
class AltPath:
    """Classification of an alternating path; ``source`` is set for BALANCED."""

    kind: AltPathKind
    source: int | None = None


def classify_alternating_path(
    g: Graph, m: Matching, path: list[int] | tuple[int, ...]
) -> AltPath | None:
    """Classify a simple path of ``g`` against matching ``m``.

    Returns ``None`` when the path is not alternating (two consecutive
    unmatched edges).

    Raises:
        NotAPathError: repeated vertex, missing edge, or bad vertex id.
    """
    if not path:
        raise NotAPathError("empty vertex sequence")
    if len(set(path)) != len(path):
        raise NotAPathError("repeated vertex")
    for v in path:
        if not (0 <= v < g.n):
            raise NotAPathError(f"vertex {v} not in graph")
    in_m: list[bool] = []
    for u, v in zip(path, path[1:]):
        if not g.has_edge(u, v):
            raise NotAPathError(f"missing edge ({u}, {v})")
        in_m.append(m.mate[u] == v)
    k = len(in_m)
    if k == 0:
        return AltPath(AltPathKind.BALANCED, source=path[0])
    # Alternating means the unmatched edges form a matching of the path,
    # i.e. no two consecutive unmatched edges (consecutive matched edges
    # are impossible for a valid Matching).
    if any(not a and not b for a, b in zip(in_m, in_m[1:])):
        return None
    if k % 2 == 1:
        if in_m[0] and in_m[-1]:
            return AltPath(AltPathKind.SATURATED)
        if not in_m[0] and not in_m[-1]:
            return AltPath(AltPathKind.EXPOSED)
        return None
    if in_m[0]:
        return AltPath(AltPathKind.BALANCED, source=path[0])
    return AltPath(AltPathKind.BALANCED, source=path[-1])


