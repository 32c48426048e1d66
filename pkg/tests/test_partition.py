import random

import pytest

from matchpose import (
    DifferentComponentsError,
    decompose,
    generalized_partition,
    gsim,
    induced_subgraph,
    is_elementary,
    maximum_matching,
    saturated_reachable,
)
from matchpose.oracle import (
    oracle_gsim,
    oracle_gsim_classes,
    oracle_maximal_barriers,
)
from matchpose.randgraphs import random_factorizable_graph

from helpers import cycle, cycle_matching, e1, e1_matching, k4


def test_partition_c6():
    g = cycle(6)
    d = decompose(g, cycle_matching(g))
    part = generalized_partition(g, d)
    assert [(ci, sorted(c)) for ci, c in part.classes] == [
        (0, [0, 2, 4]),
        (0, [1, 3, 5]),
    ]
    assert part.class_of[4] == 0 and part.class_of[5] == 1


def test_partition_e1_singletons():
    g = e1()
    d = decompose(g, e1_matching(g))
    part = generalized_partition(g, d)
    assert [(ci, sorted(c)) for ci, c in part.classes] == [
        (0, [0]),
        (0, [1]),
        (1, [2]),
        (1, [3]),
    ]


def test_partition_k4_singletons():
    g = k4()
    mr = maximum_matching(g)
    part = generalized_partition(g, decompose(g, mr.matching))
    assert all(len(c) == 1 for _, c in part.classes)


def test_gsim_examples():
    g = cycle(6)
    m = cycle_matching(g)
    d = decompose(g, m)
    assert gsim(g, m, 0, 2, d)
    assert not gsim(g, m, 0, 3, d)
    assert gsim(g, m, 4, 4, d)


def test_gsim_different_components():
    g, m = e1(), e1_matching(e1())
    with pytest.raises(DifferentComponentsError):
        gsim(g, m, 0, 3)


def test_gsim_is_equivalence_relation():
    rng = random.Random(73)
    for _ in range(25):
        n = rng.choice([4, 6, 8, 10, 12])
        g = random_factorizable_graph(n, rng.randint(n // 2, n * (n - 1) // 2), rng)
        m = maximum_matching(g).matching
        d = decompose(g, m)
        for comp in d.components:
            verts = sorted(comp)
            rel = {
                (u, v): gsim(g, m, u, v, d) for u in verts for v in verts
            }
            for u in verts:
                assert rel[(u, u)]
                for v in verts:
                    assert rel[(u, v)] == rel[(v, u)]
                    for w in verts:
                        if rel[(u, v)] and rel[(v, w)]:
                            assert rel[(u, w)]


def test_partition_matches_oracle_classes():
    rng = random.Random(79)
    for _ in range(60):
        n = rng.choice([2, 4, 6, 8])
        g = random_factorizable_graph(n, rng.randint(n // 2, n * (n - 1) // 2), rng)
        m = maximum_matching(g).matching
        d = decompose(g, m)
        part = generalized_partition(g, d)
        assert list(part.classes) == oracle_gsim_classes(g, list(d.components))
        for u in range(n):
            for v in range(n):
                if d.component_of[u] == d.component_of[v]:
                    assert (part.class_of[u] == part.class_of[v]) == oracle_gsim(
                        g, u, v
                    )


def test_classmates_have_no_saturated_path():
    rng = random.Random(83)
    for _ in range(20):
        n = rng.choice([6, 8, 10])
        g = random_factorizable_graph(n, rng.randint(n // 2, n * (n - 1) // 2), rng)
        m = maximum_matching(g).matching
        part = generalized_partition(g, decompose(g, m))
        for _, cls in part.classes:
            for u in cls:
                reach = saturated_reachable(g, m, u)
                assert not (reach & cls)


def test_elementary_classes_are_maximal_barriers():
    rng = random.Random(89)
    done = 0
    while done < 30:
        n = rng.choice([2, 4, 6, 8, 10])
        g = random_factorizable_graph(n, rng.randint(n // 2, n * (n - 1) // 2), rng)
        m = maximum_matching(g).matching
        d = decompose(g, m)
        if not is_elementary(d):
            continue
        done += 1
        part = generalized_partition(g, d)
        classes = sorted(sorted(c) for _, c in part.classes)
        barriers = sorted(sorted(b) for b in oracle_maximal_barriers(g))
        assert classes == barriers


def test_generalized_classes_refine_standalone_partition():
    """Each class is contained in a class of the component computed as a
    graph of its own."""
    rng = random.Random(97)
    for _ in range(25):
        n = rng.choice([4, 6, 8])
        g = random_factorizable_graph(n, rng.randint(n // 2, n * (n - 1) // 2), rng)
        m = maximum_matching(g).matching
        d = decompose(g, m)
        part = generalized_partition(g, d)
        for ci, comp in enumerate(d.components):
            sub, remap = induced_subgraph(g, comp)
            sub_m = maximum_matching(sub).matching
            sub_d = decompose(sub, sub_m)
            sub_part = generalized_partition(sub, sub_d)
            index = {v: i for i, v in enumerate(remap)}
            for cj, cls in part.classes:
                if cj != ci:
                    continue
                images = {sub_part.class_of[index[v]] for v in cls}
                assert len(images) == 1
