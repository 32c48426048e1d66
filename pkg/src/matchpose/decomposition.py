"""Allowed edges and factor-components of a factorizable graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .blossom import _OUTER, _require_perfect, _saturated_reach_raw
from .errors import InconsistentDecompositionError
from .graph import Edge, Graph, Matching, edge_key


@dataclass(frozen=True)
class FactorDecomposition:
    """Allowed-edge set and factor-components of one factorizable graph.

    ``components`` are the connected components of the allowed subgraph,
    ordered by minimum vertex; every component has even size since each
    matched edge is allowed.  ``matching`` records the perfect matching
    the decomposition was computed with (the result is matching-free, but
    downstream searches reuse it).
    """

    allowed: frozenset[Edge]
    components: tuple[frozenset[int], ...]
    component_of: tuple[int, ...]
    matching: Matching
    # Saturated-reachability labels recorded per searched vertex, so the
    # partition step can reuse the identical searches instead of redoing
    # them.  Pure cache: never compared or shown.
    _reach_cache: Mapping[int, bytes] = field(
        default_factory=dict, compare=False, repr=False, hash=False
    )

    @property
    def n(self) -> int:
        return len(self.component_of)


def components_of_edges(n: int, edges: Iterable[Edge]) -> tuple[frozenset[int], ...]:
    """Connected components of ``(0..n-1, edges)``, ordered by minimum vertex."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * n
    out: list[frozenset[int]] = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        comp = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
                    comp.append(w)
        out.append(frozenset(comp))
    return tuple(out)


def decompose(g: Graph, m: Matching) -> FactorDecomposition:
    """All allowed edges of ``g`` and the factor-components they span.

    One saturated-reachability search per vertex classifies the incident
    edges; a vertex whose incident edges are all classified already is
    skipped, which typically saves a large fraction of the searches.

    Raises:
        NotPerfectError: ``m`` is not a perfect matching of ``g``.
    """
    _require_perfect(g, m)
    n = g.n
    mate = m.mate
    allowed: set[Edge] = set(m.edges)
    undecided = [g.degree(v) for v in range(n)]
    decided: set[Edge] = set(m.edges)
    for u, v in m.edges:
        undecided[u] -= 1
        undecided[v] -= 1
    reach_cache: dict[int, bytes] = {}
    for u in range(n):
        if undecided[u] == 0:
            continue
        label = _saturated_reach_raw(g, mate, u)
        reach_cache[u] = bytes(label)
        for v in g.adjacency[u]:
            e = edge_key(u, v)
            if e in decided:
                continue
            decided.add(e)
            undecided[u] -= 1
            undecided[v] -= 1
            if label[v] == _OUTER:
                allowed.add(e)
    components = components_of_edges(n, allowed)
    component_of = [0] * n
    for ci, comp in enumerate(components):
        for v in comp:
            component_of[v] = ci
    return FactorDecomposition(
        allowed=frozenset(allowed),
        components=components,
        component_of=tuple(component_of),
        matching=m,
        _reach_cache=reach_cache,
    )


def is_elementary(d: FactorDecomposition) -> bool:
    """Whether the graph has exactly one factor-component."""
    return len(d.components) == 1


def is_separating(d: FactorDecomposition, X: Iterable[int]) -> bool:
    """Whether ``X`` is a union of whole factor-components.

    Also evaluates the matching-cut characterization against the stored
    matching and checks the direction that holds for a single matching:
    a component union never has a matched edge leaving it.  (The converse
    needs every perfect matching: in a 4-cycle with one fixed matching,
    a matched pair has no crossing matched edge yet splits the unique
    component.)
    """
    xs = set(X)
    by_components = all(
        comp <= xs or not (comp & xs) for comp in d.components
    )
    by_matching = all((u in xs) == (v in xs) for u, v in d.matching.edges)
    if by_components and not by_matching:
        raise InconsistentDecompositionError(
            "a matched edge crosses a union of components; decomposition is corrupt"
        )
    return by_components
