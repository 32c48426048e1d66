"""Generalized canonical partition: similarity classes inside each
factor-component."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .blossom import _OUTER, _require_perfect, _saturated_reach_raw, saturated_reachable
from .decomposition import FactorDecomposition, decompose
from .errors import DifferentComponentsError, InconsistentDecompositionError, VertexRangeError
from .graph import Graph, Matching


@dataclass(frozen=True)
class CanonicalPartition:
    """Partition of each factor-component into similarity classes.

    ``classes[i]`` is ``(component index, vertex set)``; classes are
    ordered by component and then by minimum vertex.  Two distinct
    vertices share a class exactly when no saturated alternating path
    joins them.
    """

    classes: tuple[tuple[int, frozenset[int]], ...]
    class_of: Mapping[int, int] = field(hash=False)


def generalized_partition(g: Graph, d: FactorDecomposition) -> CanonicalPartition:
    """Similarity classes of every factor-component of ``g``.

    For an unclassified vertex ``v`` of component H, the class of ``v``
    is ``V(H)`` minus the saturated-reachable set of ``v``; vertices
    already classified are skipped.  Since the similarity is an
    equivalence relation the sweep is consistent, which is verified as
    it goes.

    Raises:
        InconsistentDecompositionError: ``d`` does not fit ``g`` or the
            classes overlap (corrupt input).
    """
    m = d.matching
    _require_perfect(g, m)
    if sum(len(c) for c in d.components) != g.n or d.n != g.n:
        raise InconsistentDecompositionError("decomposition does not cover g")
    mate = m.mate
    cache = d._reach_cache
    classes: list[tuple[int, frozenset[int]]] = []
    class_of: dict[int, int] = {}
    for ci, comp in enumerate(d.components):
        verts = sorted(comp)
        for v in verts:
            if v in class_of:
                continue
            label = cache.get(v)
            if label is None:
                label = _saturated_reach_raw(g, mate, v)
            cls = frozenset(w for w in verts if label[w] != _OUTER)
            idx = len(classes)
            for w in cls:
                if w in class_of:
                    raise InconsistentDecompositionError(
                        f"class of {v} overlaps class {class_of[w]} at vertex {w}"
                    )
                class_of[w] = idx
            classes.append((ci, cls))
    return CanonicalPartition(classes=tuple(classes), class_of=class_of)


def gsim(
    g: Graph,
    m: Matching,
    u: int,
    v: int,
    d: FactorDecomposition | None = None,
) -> bool:
    """Similarity of two vertices of one factor-component.

    True iff ``u == v`` or no saturated alternating path joins them
    (equivalently, removing both vertices destroys factorizability).
    Pass a precomputed decomposition to avoid recomputing components for
    the same-component precondition check.

    Raises:
        DifferentComponentsError: the vertices lie in different
            factor-components.
        NotPerfectError: ``m`` is not perfect on ``g``.
    """
    _require_perfect(g, m)
    for w in (u, v):
        if not (0 <= w < g.n):
            raise VertexRangeError(f"vertex {w} outside range")
    if d is None:
        d = decompose(g, m)
    if d.component_of[u] != d.component_of[v]:
        raise DifferentComponentsError(
            f"vertices {u} and {v} lie in different factor-components"
        )
    if u == v:
        return True
    return v not in saturated_reachable(g, m, u)
