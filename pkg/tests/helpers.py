"""Shared fixtures-in-spirit: tiny named graphs and definitional
path-level oracles used across the test modules."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from matchpose import (
    AltPathKind,
    Graph,
    Matching,
    build_graph,
    build_matching,
    classify_alternating_path,
)
from matchpose.oracle import oracle_factorizable


def k2() -> Graph:
    return build_graph(2, [(0, 1)])


def k3() -> Graph:
    return build_graph(3, [(0, 1), (1, 2), (0, 2)])


def k4() -> Graph:
    return build_graph(4, list(itertools.combinations(range(4), 2)))


def e1() -> Graph:
    """Two factor-components {0,1} < {2,3}: the smallest ordered pair."""
    return build_graph(4, [(0, 1), (2, 3), (0, 2), (0, 3)])


def e1_matching(g: Graph) -> Matching:
    return build_matching(g, [(0, 1), (2, 3)])


def cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_matching(g: Graph) -> Matching:
    return build_matching(g, [(i, i + 1) for i in range(0, g.n - 1, 2)])


def simple_paths_from(g: Graph, u: int) -> Iterator[list[int]]:
    """All simple paths of ``g`` starting at ``u`` (including trivial)."""
    path = [u]
    used = {u}

    def rec() -> Iterator[list[int]]:
        yield list(path)
        for w in g.adjacency[path[-1]]:
            if w not in used:
                path.append(w)
                used.add(w)
                yield from rec()
                used.discard(w)
                path.pop()

    yield from rec()


def saturated_path_exists(g: Graph, m: Matching, u: int, v: int) -> bool:
    """Definitional check by exhaustive simple-path enumeration."""
    if u == v:
        return False
    for p in simple_paths_from(g, u):
        if p[-1] != v:
            continue
        cls = classify_alternating_path(g, m, p)
        if cls is not None and cls.kind is AltPathKind.SATURATED:
            return True
    return False


def balanced_path_exists(g: Graph, m: Matching, u: int, v: int) -> bool:
    """Balanced path from ``u`` to ``v``, by exhaustive enumeration."""
    for p in simple_paths_from(g, u):
        if p[-1] != v:
            continue
        cls = classify_alternating_path(g, m, p)
        if cls is not None and cls.kind is AltPathKind.BALANCED and cls.source == u:
            return True
    return False


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in g.adjacency[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == g.n


def all_connected_factorizable(n: int) -> Iterator[Graph]:
    """Every labeled connected factorizable graph on ``n`` vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        if bin(mask).count("1") < n - 1:
            continue
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = build_graph(n, edges)
        if is_connected(g) and oracle_factorizable(g):
            yield g


def seeded(seed: int) -> random.Random:
    return random.Random(seed)


def grown_factorizable(n: int, rng: random.Random, extra: int = 0) -> Graph:
    """Factorizable graph grown pair by pair with ear attachments.

    Each new matched pair {a, b} gets edges to one existing vertex x,
    forming an odd circuit through the pair, which tends to produce rich
    component orders (unlike uniform random graphs, which are usually
    elementary or antichains).
    """
    assert n % 2 == 0 and n >= 2
    edges = {(0, 1)}
    for i in range(1, n // 2):
        a, b = 2 * i, 2 * i + 1
        edges.add((a, b))
        x = rng.randrange(a)
        edges.add((min(x, a), max(x, a)))
        edges.add((min(x, b), max(x, b)))
    pool = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (u, v) not in edges
    ]
    for e in rng.sample(pool, min(extra, len(pool))):
        edges.add(e)
    return build_graph(n, sorted(edges))
