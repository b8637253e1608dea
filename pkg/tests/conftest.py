"""Shared fixtures: corpora, random graphs, and independent references.

The naive deficiency reference here recomputes the Tutte functional from
its definition with a base-3 assignment counter and a union-find rebuilt
per pair, so the optimized sweep in the package is checked against an
implementation that shares no code with it.
"""

from __future__ import annotations

import random

import pytest

from specfactor.corpus import enumerate_connected_graphs, enumerate_connected_regular
from specfactor.graph import Graph


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def naive_delta(g: Graph, k: int, s: tuple[int, ...], t: tuple[int, ...]) -> int:
    n = g.n
    sset, tset = set(s), set(t)
    rest = [v for v in range(n) if v not in sset and v not in tset]
    uf = _UnionFind(n)
    for u, v in g.edges():
        if u in rest and v in rest:
            uf.union(u, v)
    comps: dict[int, list[int]] = {}
    for v in rest:
        comps.setdefault(uf.find(v), []).append(v)
    tau = 0
    for comp in comps.values():
        e_to_t = sum(1 for u, v in g.edges() if (u in comp) != (v in comp) and (u in tset or v in tset))
        if (e_to_t + k * len(comp)) % 2 == 1:
            tau += 1
    degree_sum = sum(
        sum(1 for w in g.neighbors(x) if w not in sset) for x in t
    )
    return k * len(s) + degree_sum - k * len(t) - tau


def naive_deficiency(g: Graph, k: int) -> int:
    worst = 0
    n = g.n
    for code in range(3 ** n):
        s, t = [], []
        c = code
        for v in range(n):
            c, which = divmod(c, 3)
            if which == 1:
                s.append(v)
            elif which == 2:
                t.append(v)
        worst = min(worst, naive_delta(g, k, tuple(s), tuple(t)))
    return -worst


@pytest.fixture(scope="session")
def connected_by_n() -> dict[int, list[Graph]]:
    return {n: enumerate_connected_graphs(n) for n in range(1, 9)}


@pytest.fixture(scope="session")
def cubic_corpus() -> list[Graph]:
    out: list[Graph] = []
    for n in (4, 6, 8, 10):
        out.extend(enumerate_connected_regular(n, 3))
    return out


@pytest.fixture(scope="session")
def quartic_corpus() -> list[Graph]:
    out: list[Graph] = []
    for n in (5, 6, 7, 8, 9, 10):
        out.extend(enumerate_connected_regular(n, 4))
    return out
