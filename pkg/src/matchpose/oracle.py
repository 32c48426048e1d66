"""Exponential-time reference implementations of the raw definitions.

Every fast algorithm in this package is cross-certified against the
routines here, which implement the definitions literally (enumeration and
backtracking).  Size bounds are explicit: exceeding one raises
:class:`TooLargeError` rather than truncating silently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotFactorizableError, TooLargeError
from .graph import (
    Edge,
    Graph,
    Matching,
    build_matching,
    contract,
    edge_key,
    induced_subgraph,
)

DEFAULT_MAX_N = 16
DEFAULT_MAX_SUBSET_N = 12


def _check_size(g: Graph, max_n: int | None, default: int) -> None:
    bound = default if max_n is None else max_n
    if g.n > bound:
        raise TooLargeError(f"n={g.n} exceeds oracle bound {bound}")


def _adjacency_sets(g: Graph) -> list[set[int]]:
    return [set(nbrs) for nbrs in g.adjacency]


def _matchings_covering(adj: list[set[int]], alive: list[bool]) -> list[list[Edge]]:
    """All perfect matchings of the subgraph on ``alive`` vertices.

    Backtracks on the lowest-id uncovered vertex, which keeps the search
    tree small on sparse graphs.
    """
    n = len(adj)
    out: list[list[Edge]] = []
    chosen: list[Edge] = []

    def rec(start: int) -> None:
        v = start
        while v < n and not alive[v]:
            v += 1
        if v == n:
            out.append(list(chosen))
            return
        alive[v] = False
        for w in adj[v]:
            if alive[w]:
                alive[w] = False
                chosen.append(edge_key(v, w))
                rec(v + 1)
                chosen.pop()
                alive[w] = True
        alive[v] = True

    rec(0)
    return out


def _has_perfect_matching(adj: list[set[int]], alive: list[bool]) -> bool:
    n = len(adj)

    def rec(start: int) -> bool:
        v = start
        while v < n and not alive[v]:
            v += 1
        if v == n:
            return True
        alive[v] = False
        for w in adj[v]:
            if alive[w]:
                alive[w] = False
                if rec(v + 1):
                    alive[w] = True
                    alive[v] = True
                    return True
                alive[w] = True
        alive[v] = True
        return False

    return rec(0)


def enumerate_perfect_matchings(g: Graph, max_n: int | None = None) -> list[Matching]:
    """All perfect matchings of ``g``, in lexicographic edge order.

    The empty graph has exactly one (the empty) perfect matching.

    Raises:
        TooLargeError: ``g.n`` exceeds the bound (default 16).
    """
    _check_size(g, max_n, DEFAULT_MAX_N)
    if g.n % 2 == 1:
        return []
    raw = _matchings_covering(_adjacency_sets(g), [True] * g.n)
    raw.sort()
    return [build_matching(g, edges) for edges in raw]


def oracle_factorizable(g: Graph, max_n: int | None = None) -> bool:
    """Whether ``g`` has a perfect matching; the empty graph counts as yes."""
    _check_size(g, max_n, DEFAULT_MAX_N)
    if g.n % 2 == 1:
        return False
    return _has_perfect_matching(_adjacency_sets(g), [True] * g.n)


def oracle_max_matching_size(g: Graph, max_n: int | None = None) -> int:
    """Cardinality of a maximum matching, by exhaustive backtracking."""
    _check_size(g, max_n, DEFAULT_MAX_N)
    adj = _adjacency_sets(g)
    alive = [True] * g.n

    def rec(start: int) -> int:
        v = start
        while v < g.n and not alive[v]:
            v += 1
        if v == g.n:
            return 0
        alive[v] = False
        best = rec(v + 1)  # leave v exposed
        for w in adj[v]:
            if alive[w]:
                alive[w] = False
                best = max(best, 1 + rec(v + 1))
                alive[w] = True
        alive[v] = True
        return best

    return rec(0)


def oracle_allowed(g: Graph, max_n: int | None = None) -> frozenset[Edge]:
    """Edges lying in at least one perfect matching.

    Raises:
        NotFactorizableError: ``g`` has no perfect matching.
    """
    matchings = enumerate_perfect_matchings(g, max_n)
    if not matchings and g.n > 0:
        raise NotFactorizableError("graph has no perfect matching")
    allowed: set[Edge] = set()
    for m in matchings:
        allowed.update(m.edges)
    return frozenset(allowed)


def _without_vertices(g: Graph, drop: set[int]) -> tuple[list[set[int]], list[bool]]:
    adj = _adjacency_sets(g)
    alive = [v not in drop for v in range(g.n)]
    return adj, alive


def oracle_factor_critical(g: Graph, max_n: int | None = None) -> bool:
    """Whether deleting any single vertex leaves a factorizable graph.

    A single vertex and the empty graph both qualify (vacuously for the
    latter).
    """
    _check_size(g, max_n, DEFAULT_MAX_N)
    if g.n % 2 == 0 and g.n > 0:
        return False
    adj = _adjacency_sets(g)
    for v in range(g.n):
        alive = [True] * g.n
        alive[v] = False
        if not _has_perfect_matching(adj, alive):
            return False
    return True


def oracle_gsim(g: Graph, u: int, v: int, max_n: int | None = None) -> bool:
    """Definitional similarity: ``u == v`` or ``g - u - v`` not factorizable."""
    _check_size(g, max_n, DEFAULT_MAX_N)
    if u == v:
        return True
    adj, alive = _without_vertices(g, {u, v})
    return not _has_perfect_matching(adj, alive)


def _components_arg(d) -> list[frozenset[int]]:
    """Accept a decomposition or a bare component list."""
    comps = getattr(d, "components", d)
    return [frozenset(c) for c in comps]


def oracle_gsim_classes(
    g: Graph, d, max_n: int | None = None
) -> list[tuple[int, frozenset[int]]]:
    """Equivalence classes of the definitional similarity, per component.

    ``d`` is a decomposition or a component list.  Returned as
    ``(component index, class)`` pairs sorted by minimum vertex, matching
    the fast partition's canonical order.
    """
    components = _components_arg(d)
    out: list[tuple[int, frozenset[int]]] = []
    for ci, comp in enumerate(components):
        verts = sorted(comp)
        assigned: dict[int, int] = {}
        for v in verts:
            if v in assigned:
                continue
            cls = {w for w in verts if w not in assigned and oracle_gsim(g, v, w, max_n)}
            for w in cls:
                assigned[w] = v
            out.append((ci, frozenset(cls)))
    return out


def _odd_components(g: Graph, removed: set[int]) -> int:
    seen = set(removed)
    count = 0
    for s in range(g.n):
        if s in seen:
            continue
        stack = [s]
        seen.add(s)
        size = 0
        while stack:
            v = stack.pop()
            size += 1
            for w in g.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if size % 2 == 1:
            count += 1
    return count


def oracle_maximal_barriers(
    g: Graph, max_n: int | None = None
) -> list[frozenset[int]]:
    """Inclusion-maximal vertex sets X with ``oc(g - X) = |X|``.

    Defined for factorizable graphs, where the deficiency maximum is zero.

    Raises:
        NotFactorizableError: ``g`` has no perfect matching.
        TooLargeError: subset enumeration bound exceeded (default 12).
    """
    _check_size(g, max_n, DEFAULT_MAX_SUBSET_N)
    if not oracle_factorizable(g, max(g.n, DEFAULT_MAX_N)):
        raise NotFactorizableError("barriers oracle requires a factorizable graph")
    barriers: list[set[int]] = []
    verts = list(range(g.n))
    for mask in range(1 << g.n):
        X = {verts[i] for i in range(g.n) if mask >> i & 1}
        if _odd_components(g, X) == len(X):
            barriers.append(X)
    maximal = [
        X for X in barriers if not any(X < Y for Y in barriers)
    ]
    maximal.sort(key=lambda s: (min(s) if s else -1, sorted(s)))
    return [frozenset(X) for X in maximal]


def oracle_leq(
    g: Graph,
    d,
    a: int,
    b: int,
    max_components: int | None = None,
) -> bool:
    """Definitional component order: some union of whole components that
    contains both end components contracts (by the lower one) to a
    factor-critical graph.

    ``d`` is a decomposition or a component list.  Exhaustive over the
    ``2^k`` component unions.

    Raises:
        TooLargeError: more components than the bound (default 12).
    """
    components = _components_arg(d)
    k = len(components)
    bound = DEFAULT_MAX_SUBSET_N if max_components is None else max_components
    if k > bound:
        raise TooLargeError(f"{k} components exceed oracle bound {bound}")
    if a == b:
        return True
    others = [i for i in range(k) if i not in (a, b)]
    base = set(components[a]) | set(components[b])
    for mask in range(1 << len(others)):
        X = set(base)
        for i, ci in enumerate(others):
            if mask >> i & 1:
                X.update(components[ci])
        sub, remap = induced_subgraph(g, X)
        index = {v: i for i, v in enumerate(remap)}
        image = {index[v] for v in components[a]}
        quotient = contract(sub, image).quotient
        if oracle_factor_critical(quotient, max(quotient.n, DEFAULT_MAX_N)):
            return True
    return False


def _saturated_paths_outside(
    g: Graph, m: Matching, banned: frozenset[int]
) -> list[list[int]]:
    """All simple M-saturated paths avoiding ``banned`` vertices.

    Paths are grown pair by pair (matched edge, then a free edge), so the
    alternation constraint prunes at every step.  Each path is reported
    once per direction; callers treat them as undirected.
    """
    out: list[list[int]] = []
    mate = m.mate

    def extend(path: list[int], used: set[int]) -> None:
        # invariant: path currently ends just after a matched edge
        out.append(list(path))
        tip = path[-1]
        for w in g.adjacency[tip]:
            if w in used or w in banned or mate[tip] == w:
                continue
            wm = mate[w]
            if wm < 0 or wm in used or wm in banned or wm == w:
                continue
            path.extend((w, wm))
            used.update((w, wm))
            extend(path, used)
            used.difference_update((w, wm))
            del path[-2:]

    for v in range(g.n):
        if v in banned:
            continue
        vm = mate[v]
        if vm < 0 or vm in banned:
            continue
        extend([v, vm], {v, vm})
    return out


def oracle_ear_sequence(
    g: Graph,
    m: Matching,
    d,
    a: int,
    b: int,
    max_n: int | None = None,
) -> bool:
    """Whether a chain of components linked by matching ears joins a to b.

    An ear relative to component H is a path or circuit with its end
    vertices in H whose remainder outside H is an M-saturated path; the
    chain step reaches every component met by an ear's internal vertices.
    ``d`` is a decomposition or a component list.
    """
    _check_size(g, max_n, DEFAULT_MAX_N)
    components = _components_arg(d)
    if a == b:
        return True
    comp_of: dict[int, int] = {}
    for ci, comp in enumerate(components):
        for v in comp:
            comp_of[v] = ci
    reached = {a}
    frontier = [a]
    while frontier:
        h = frontier.pop()
        hv = components[h]
        for path in _saturated_paths_outside(g, m, hv):
            p, q = path[0], path[-1]
            if not (set(g.adjacency[p]) & hv) or not (set(g.adjacency[q]) & hv):
                continue
            for v in path:
                ci = comp_of[v]
                if ci not in reached:
                    reached.add(ci)
                    if ci == b:
                        return True
                    frontier.append(ci)
    return b in reached


@dataclass(frozen=True)
class OracleReport:
    """One fast-vs-oracle comparison, serialized for the verify command."""

    subject: str
    instance: str
    fast_result: str
    oracle_result: str

    @property
    def agreed(self) -> bool:
        return self.fast_result == self.oracle_result


def make_report(subject: str, instance: str, fast, oracle) -> OracleReport:
    """Build a report from two values, canonicalizing via repr of sorted forms."""
    return OracleReport(
        subject=subject,
        instance=instance,
        fast_result=_canon(fast),
        oracle_result=_canon(oracle),
    )


def _canon(value) -> str:
    if isinstance(value, (frozenset, set)):
        return repr(sorted(_canon(v) for v in value))
    if isinstance(value, (list, tuple)):
        return repr([_canon(v) for v in value])
    return repr(value)
