"""Maximum matching in general graphs, checked against exhaustive references."""

from __future__ import annotations

import random
from itertools import combinations

from hypothesis import given, settings
from hypothesis import strategies as st

from specfactor.constructions import (
    complete_graph,
    cycle,
    empty_graph,
    matching,
    path,
    petersen,
    star,
)
from specfactor.graph import Graph, join
from specfactor.matching import matching_number, max_matching
from specfactor.oracle import brute_force_deficiency

from conftest import random_graph


def exhaustive_matching_number(g: Graph) -> int:
    """Reference: try all edge subsets of each size, largest first."""
    edges = g.edges()
    for size in range(g.n // 2, 0, -1):
        for combo in combinations(edges, size):
            used = set()
            ok = True
            for u, v in combo:
                if u in used or v in used:
                    ok = False
                    break
                used.add(u)
                used.add(v)
            if ok:
                return size
    return 0


def test_hand_examples():
    assert matching_number(path(4)) == 2
    assert matching_number(path(5)) == 2
    assert matching_number(cycle(5)) == 2
    assert matching_number(cycle(6)) == 3
    assert matching_number(petersen()) == 5
    assert matching_number(star(4)) == 1
    assert matching_number(empty_graph(6)) == 0
    assert matching_number(matching(4)) == 4
    for n in range(1, 9):
        assert matching_number(complete_graph(n)) == n // 2


def test_complete_bipartite():
    for a, b in [(1, 3), (2, 2), (2, 5), (3, 3)]:
        g = join(empty_graph(a), empty_graph(b))
        assert matching_number(g) == min(a, b)


def test_max_matching_is_a_matching():
    rng = random.Random(7)
    for _ in range(200):
        g = random_graph(rng.randrange(0, 12), rng.random(), rng)
        mm = max_matching(g)
        used = set()
        for u, v in mm:
            assert g.has_edge(u, v)
            assert u not in used and v not in used
            used.add(u)
            used.add(v)
        assert len(mm) == matching_number(g)


@given(st.integers(min_value=0, max_value=10**6))
@settings(max_examples=150, deadline=None)
def test_matches_exhaustive_reference(seed):
    rng = random.Random(seed)
    g = random_graph(rng.randrange(0, 9), rng.random(), rng)
    assert matching_number(g) == exhaustive_matching_number(g)


@given(st.integers(min_value=0, max_value=10**6))
@settings(max_examples=60, deadline=None)
def test_agrees_with_degree_one_deficiency(seed):
    # the unmatched-vertex count equals the worst Tutte deficit at k = 1,
    # computed by the completely separate subset sweep
    rng = random.Random(seed)
    g = random_graph(rng.randrange(1, 10), rng.random(), rng)
    deficit, _ = brute_force_deficiency(g, 1)
    assert 2 * matching_number(g) == g.n - deficit


def test_augmenting_through_blossoms():
    # two triangles bridged by an edge force odd-cycle handling
    g = Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])
    assert matching_number(g) == 3
