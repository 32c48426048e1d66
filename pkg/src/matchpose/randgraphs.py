"""Random factorizable instances for tests and the verify command.

Every generator plants a perfect matching first and then adds extra
edges, so factorizability holds by construction.
"""

from __future__ import annotations

import random

from .errors import PreconditionViolatedError
from .graph import Edge, Graph, build_graph, edge_key


def _is_connected(n: int, edges: list[Edge]) -> bool:
    if n == 0:
        return True
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n


def _fill_edges(
    n: int, m: int, base: set[Edge], rng: random.Random, allowed_pair=None
) -> list[Edge]:
    edges = set(base)
    max_pairs = n * (n - 1) // 2
    if m > max_pairs:
        raise PreconditionViolatedError(f"m={m} exceeds simple-graph maximum")
    # Rejection sampling is fast while the graph stays sparse; fall back
    # to explicit enumeration of the complement when it is not.
    dense = m > max_pairs // 2
    if not dense:
        tries = 0
        while len(edges) < m and tries < 50 * m + 100:
            u = rng.randrange(n)
            v = rng.randrange(n)
            tries += 1
            if u == v:
                continue
            if allowed_pair is not None and not allowed_pair(u, v):
                continue
            edges.add(edge_key(u, v))
        if len(edges) == m:
            return sorted(edges)
    pool = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (u, v) not in edges and (allowed_pair is None or allowed_pair(u, v))
    ]
    need = m - len(edges)
    if need > len(pool):
        raise PreconditionViolatedError(
            f"cannot reach m={m} edges under the given constraints"
        )
    edges.update(rng.sample(pool, need))
    return sorted(edges)


def random_factorizable_graph(
    n: int,
    m: int,
    rng: random.Random,
    connected: bool = False,
    max_tries: int = 200,
) -> Graph:
    """Random graph on ``n`` vertices and ``m`` edges with a planted
    perfect matching.

    Raises:
        PreconditionViolatedError: impossible parameters, or no connected
            sample found within ``max_tries``.
    """
    if n % 2 or n < 0:
        raise PreconditionViolatedError("n must be even and nonnegative")
    if m < n // 2:
        raise PreconditionViolatedError("m must cover a perfect matching")
    for _ in range(max_tries):
        perm = list(range(n))
        rng.shuffle(perm)
        planted = {edge_key(perm[2 * i], perm[2 * i + 1]) for i in range(n // 2)}
        edges = _fill_edges(n, m, planted, rng)
        if not connected or _is_connected(n, edges):
            return build_graph(n, edges)
    raise PreconditionViolatedError(
        f"no connected sample with n={n}, m={m} in {max_tries} tries"
    )


def random_bipartite_factorizable(
    n: int,
    m: int,
    rng: random.Random,
    connected: bool = False,
    max_tries: int = 200,
) -> Graph:
    """Random bipartite graph with sides ``0..n/2-1`` and ``n/2..n-1`` and
    a planted perfect matching across them."""
    if n % 2 or n < 0:
        raise PreconditionViolatedError("n must be even and nonnegative")
    half = n // 2
    if m < half:
        raise PreconditionViolatedError("m must cover a perfect matching")

    def cross(u: int, v: int) -> bool:
        return (u < half) != (v < half)

    for _ in range(max_tries):
        right = list(range(half, n))
        rng.shuffle(right)
        planted = {edge_key(i, right[i]) for i in range(half)}
        edges = _fill_edges(n, m, planted, rng, allowed_pair=cross)
        if not connected or _is_connected(n, edges):
            return build_graph(n, edges)
    raise PreconditionViolatedError(
        f"no connected bipartite sample with n={n}, m={m} in {max_tries} tries"
    )
