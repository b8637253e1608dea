"""Immutable simple graphs on vertex set {0, ..., n-1} with bitmask adjacency."""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class Graph:
    """Undirected simple graph.

    Adjacency is one integer bitmask per vertex, which keeps the exhaustive
    enumeration and Tutte-condition loops fast without any third-party
    dependency.  Instances are immutable by convention: no mutator is
    exposed, so graphs are safe to hash, memoize and share.
    """

    __slots__ = ("n", "_rows")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self._rows = tuple(rows)

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        """Build from adjacency bitmasks; rows must be symmetric and loop-free."""
        g = cls.__new__(cls)
        n = len(rows)
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} has bits outside 0..{n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, row in enumerate(rows):
            m = row
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                if not (rows[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        g.n = n
        g._rows = tuple(rows)
        return g

    # -- accessors ---------------------------------------------------------

    def row(self, v: int) -> int:
        """Adjacency bitmask of v."""
        return self._rows[v]

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self._rows)

    def max_degree(self) -> int:
        return max((r.bit_count() for r in self._rows), default=0)

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._rows[u] >> v) & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        m = self._rows[v]
        while m:
            lsb = m & -m
            yield lsb.bit_length() - 1
            m ^= lsb

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            m = self._rows[v] >> (v + 1)
            while m:
                lsb = m & -m
                out.append((v, v + 1 + lsb.bit_length() - 1))
                m ^= lsb
        return out

    def is_regular(self) -> bool:
        degs = self.degrees()
        return len(set(degs)) <= 1

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return len(connected_components(self)) == 1

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


def complement(g: Graph) -> Graph:
    """Edge-complement on the same vertex set."""
    full = (1 << g.n) - 1
    return Graph.from_rows(
        [(~g.row(v)) & full & ~(1 << v) for v in range(g.n)]
    )


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Vertices of h are relabeled to g.n, ..., g.n + h.n - 1."""
    rows = list(g.rows) + [r << g.n for r in h.rows]
    return Graph.from_rows(rows)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every cross edge; h is relabeled after g."""
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    rows = [g.row(v) | hmask for v in range(g.n)]
    rows += [(h.row(v) << g.n) | gmask for v in range(h.n)]
    return Graph.from_rows(rows)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on the given vertices, relabeled 0.. in sorted order."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(vs)}
    rows = [0] * len(vs)
    for v in vs:
        m = g.row(v)
        while m:
            lsb = m & -m
            u = lsb.bit_length() - 1
            m ^= lsb
            if u in index:
                rows[index[v]] |= 1 << index[u]
    return Graph.from_rows(rows)


def component_masks(g: Graph, present: int | None = None) -> list[int]:
    """Connected components of the subgraph induced on a vertex bitmask.

    Returns one bitmask per component, ordered by smallest member.  With
    present=None the whole vertex set is used.
    """
    rows = g.rows
    rem = ((1 << g.n) - 1) if present is None else present
    comps = []
    while rem:
        comp = rem & -rem
        frontier = comp
        while frontier:
            nxt = 0
            m = frontier
            while m:
                lsb = m & -m
                nxt |= rows[lsb.bit_length() - 1]
                m ^= lsb
            frontier = nxt & rem & ~comp
            comp |= frontier
        comps.append(comp)
        rem &= ~comp
    return comps


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of the components, each sorted, ordered by smallest member."""
    return [_mask_to_list(m) for m in component_masks(g)]


def _mask_to_list(mask: int) -> list[int]:
    out = []
    while mask:
        lsb = mask & -mask
        out.append(lsb.bit_length() - 1)
        mask ^= lsb
    return out
