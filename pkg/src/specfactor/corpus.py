"""Graph corpora: exhaustive small-graph enumeration and seeded random models.

Connected graphs are enumerated by vertex extension (every connected graph
has a non-cut vertex, so each one on n vertices arises from a connected
graph on n-1 by attaching a new vertex to a non-empty subset).  Connected
regular graphs are built by repeatedly saturating one chosen vertex, with
states deduplicated up to degree-respecting isomorphism after every step;
both enumerations dedupe through canonical labelings.
"""

from __future__ import annotations

import random
from itertools import combinations
from math import comb

from .graph import Graph, component_masks
from .canon import canonical_key, canonical_labeling

_MAX_CONNECTED_N = 8
_MAX_REGULAR_N = 10

_connected_cache: dict[int, list[Graph]] = {}
_regular_cache: dict[tuple[int, int], list[Graph]] = {}


def enumerate_connected_graphs(n: int) -> list[Graph]:
    """All connected simple graphs on n vertices, one per isomorphism class."""
    if not 1 <= n <= _MAX_CONNECTED_N:
        raise ValueError(f"enumeration capped at 1 <= n <= {_MAX_CONNECTED_N}")
    if n in _connected_cache:
        return _connected_cache[n]
    if n == 1:
        out = [Graph(1)]
    else:
        out = []
        seen = set()
        new = n - 1
        for parent in enumerate_connected_graphs(n - 1):
            base_edges = parent.edges()
            for sub in range(1, 1 << new):
                edges = list(base_edges)
                m = sub
                while m:
                    lsb = m & -m
                    edges.append((lsb.bit_length() - 1, new))
                    m ^= lsb
                child = Graph(n, edges)
                key = canonical_key(child)
                if key not in seen:
                    seen.add(key)
                    out.append(child)
    _connected_cache[n] = out
    return out


def _relabeled_state(g: Graph, deficits: list[int]) -> tuple[tuple, Graph, tuple[int, ...]]:
    key, perm = canonical_labeling(g, deficits)
    return key, Graph.from_rows(key[0]), key[1]


def _completion_vertex(n: int, g: Graph, deficits) -> tuple[int, list[int]] | None:
    """Deficient vertex with the fewest saturating choices, with candidates."""
    best = None
    for v in range(n):
        if deficits[v] == 0:
            continue
        cands = [
            w
            for w in range(n)
            if w != v and deficits[w] > 0 and not g.has_edge(v, w)
        ]
        width = comb(len(cands), deficits[v])
        if best is None or width < best[0]:
            best = (width, v, cands)
    if best is None:
        return None
    return best[1], best[2]


def _viable(n: int, g: Graph, deficits: list[int]) -> bool:
    open_count = sum(1 for d in deficits if d > 0)
    for v in range(n):
        if deficits[v] == 0:
            continue
        free = open_count - 1 - sum(
            1 for w in g.neighbors(v) if deficits[w] > 0
        )
        if deficits[v] > free:
            return False
    # a saturated component that is not the whole graph can never reconnect
    full = (1 << n) - 1
    open_mask = 0
    for v in range(n):
        if deficits[v] > 0:
            open_mask |= 1 << v
    for comp in component_masks(g, full):
        if comp != full and comp & open_mask == 0:
            return False
    return True


def enumerate_connected_regular(n: int, r: int) -> list[Graph]:
    """All connected r-regular simple graphs on n vertices up to isomorphism."""
    if not 1 <= n <= _MAX_REGULAR_N:
        raise ValueError(f"enumeration capped at 1 <= n <= {_MAX_REGULAR_N}")
    if r < 0 or r >= n:
        raise ValueError("regularity must satisfy 0 <= r < n")
    if (n * r) % 2 != 0:
        raise ValueError("n*r must be even")
    cache_key = (n, r)
    if cache_key in _regular_cache:
        return _regular_cache[cache_key]

    if r == 0:
        out = [Graph(1)] if n == 1 else []
    else:
        start = Graph(n)
        frontier: dict[tuple, tuple[Graph, tuple[int, ...]]] = {}
        key, cg, cdefs = _relabeled_state(start, [r] * n)
        frontier[key] = (cg, cdefs)
        done: dict[tuple, Graph] = {}
        while frontier:
            nxt: dict[tuple, tuple[Graph, tuple[int, ...]]] = {}
            for g, defs in frontier.values():
                picked = _completion_vertex(n, g, defs)
                assert picked is not None
                v, cands = picked
                need = defs[v]
                for combo in combinations(cands, need):
                    edges = g.edges()
                    edges.extend((min(v, w), max(v, w)) for w in combo)
                    child = Graph(n, edges)
                    cdefs = list(defs)
                    cdefs[v] = 0
                    for w in combo:
                        cdefs[w] -= 1
                    if all(d == 0 for d in cdefs):
                        if child.is_connected():
                            ckey = canonical_key(child)
                            if ckey not in done:
                                done[ckey] = child
                        continue
                    if not _viable(n, child, cdefs):
                        continue
                    skey, sg, sdefs = _relabeled_state(child, cdefs)
                    if skey not in nxt:
                        nxt[skey] = (sg, sdefs)
            frontier = nxt
        out = list(done.values())
    _regular_cache[cache_key] = out
    return out


def random_regular(n: int, r: int, seed: int, tries: int = 2000) -> Graph:
    """Connected r-regular graph from the stub-pairing model with rejection."""
    if n < 1 or r < 0 or r >= n:
        raise ValueError("need 0 <= r < n")
    if (n * r) % 2 != 0:
        raise ValueError("n*r must be even")
    rng = random.Random(seed)
    degrees = [r] * n
    g = _pair_degrees(degrees, rng, tries)
    if g is None:
        raise RuntimeError("rejection budget exhausted generating a regular graph")
    return g


def _pair_degrees(degrees: list[int], rng: random.Random, tries: int) -> Graph | None:
    n = len(degrees)
    stubs = [v for v in range(n) for _ in range(degrees[v])]
    for _ in range(tries):
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if not ok:
            continue
        g = Graph(n, sorted(edges))
        if g.is_connected():
            return g
    return None


def random_class_member(
    r: int,
    m: int,
    parity: str,
    seed: int,
    n_choices: tuple[int, ...] | None = None,
    tries: int = 2000,
) -> Graph:
    """Connected irregular graph with max degree r and 2e >= rn - m, its
    order parity set by the family (even: n opposite to r, odd: n same as r).

    Built by imposing a degree deficit d <= m (d == m mod 2, so rn - d is
    even) on a random degree sequence and pairing stubs; vertex 0 keeps
    degree r so the maximum is exact.
    """
    if parity == "even":
        if r < 4:
            raise ValueError("even family needs r >= 4")
        if m % 2 != 0 or not 2 <= m <= r + 1:
            raise ValueError("even family needs even m with 2 <= m <= r+1")
        want = (r + 1) % 2
    elif parity == "odd":
        if r < 3:
            raise ValueError("odd family needs r >= 3")
        if (m - r) % 2 != 0 or not 1 <= m <= r + 1:
            raise ValueError("odd family needs 1 <= m <= r+1 with m == r (mod 2)")
        want = r % 2
    else:
        raise ValueError("parity must be 'even' or 'odd'")

    rng = random.Random(seed)
    if n_choices is None:
        n_choices = tuple(n for n in range(r + 1, r + 16) if n % 2 == want)
    else:
        n_choices = tuple(n_choices)
        if any(n % 2 != want or n < r + 1 for n in n_choices):
            raise ValueError("n choices violate the family order constraints")

    lo = 2 if m % 2 == 0 else 1
    for _ in range(tries):
        n = rng.choice(n_choices)
        degrees = [r] * n
        left = rng.randrange(lo, m + 1, 2)
        while left > 0:
            v = rng.randrange(1, n)
            if degrees[v] > 1:
                degrees[v] -= 1
                left -= 1
        g = _pair_degrees(degrees, rng, 50)
        if g is None:
            continue
        assert g.max_degree() == r and not g.is_regular()
        return g
    raise RuntimeError("rejection budget exhausted generating a class member")
