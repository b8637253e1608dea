"""Ground-truth factor criteria by exhaustive evaluation over disjoint (S, T).

delta(S,T) = k|S| + sum of d_{G-S}(x) over x in T - k|T| - tau, where tau
counts the components C of G - (S u T) with e(C,T) + k|C| odd.  A k-factor
exists iff delta is never negative; the deficiency is the maximum of -delta
(never below zero since delta(empty, empty) = -tau <= 0).

The sweep enumerates the 3^n assignments vertex -> {S, T, neither} grouped
by U = S u T, computing the component structure once per U; only parities
of e(C,T) enter tau, so all k are served by two parity counters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, component_masks

_DEFAULT_CAP = 14


@dataclass(frozen=True)
class STPair:
    s: tuple[int, ...]
    t: tuple[int, ...]


@dataclass(frozen=True)
class DeltaBreakdown:
    k_s: int
    degree_sum: int
    k_t: int
    tau: int
    delta: int


def _mask_of(g: Graph, vertices: Iterable[int], label: str) -> int:
    m = 0
    for v in vertices:
        if not 0 <= v < g.n:
            raise ValueError(f"{label} contains vertex {v}, out of range")
        m |= 1 << v
    return m


def _as_masks(g: Graph, st) -> tuple[int, int]:
    if isinstance(st, STPair):
        s_iter, t_iter = st.s, st.t
    else:
        s_iter, t_iter = st
    smask = _mask_of(g, s_iter, "S")
    tmask = _mask_of(g, t_iter, "T")
    if smask & tmask:
        raise ValueError("S and T must be disjoint")
    return smask, tmask


def _mask_to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        lsb = mask & -mask
        out.append(lsb.bit_length() - 1)
        mask ^= lsb
    return tuple(out)


def _tau(g: Graph, k: int, smask: int, tmask: int) -> int:
    present = ((1 << g.n) - 1) & ~(smask | tmask)
    count = 0
    for comp in component_masks(g, present):
        e_ct = 0
        m = comp
        while m:
            lsb = m & -m
            e_ct += (g.row(lsb.bit_length() - 1) & tmask).bit_count()
            m ^= lsb
        if (e_ct + k * comp.bit_count()) % 2 == 1:
            count += 1
    return count


def count_k_odd_components(g: Graph, k: int, st) -> int:
    smask, tmask = _as_masks(g, st)
    return _tau(g, k, smask, tmask)


def delta(g: Graph, k: int, st) -> DeltaBreakdown:
    smask, tmask = _as_masks(g, st)
    tau = _tau(g, k, smask, tmask)
    degree_sum = 0
    m = tmask
    while m:
        lsb = m & -m
        x = lsb.bit_length() - 1
        degree_sum += (g.row(x) & ~smask).bit_count()
        m ^= lsb
    k_s = k * smask.bit_count()
    k_t = k * tmask.bit_count()
    return DeltaBreakdown(
        k_s=k_s,
        degree_sum=degree_sum,
        k_t=k_t,
        tau=tau,
        delta=k_s + degree_sum - k_t - tau,
    )


def _check_cap(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise ValueError(f"exhaustive sweep capped at n <= {cap}, got n = {g.n}")


def _sweep(g: Graph, ks: Sequence[int], collect_for: int | None = None):
    """Best -delta per k over all disjoint (S, T), first maximizer kept.

    Iteration order: U = S u T ascending as a bitmask integer, T descending
    over submasks of U, which makes (empty, empty) the first pair visited.
    When collect_for is a k value, every optimal pair for it is gathered.
    """
    n = g.n
    rows = g.rows
    deg = [r.bit_count() for r in rows]
    full = (1 << n) - 1
    best: dict[int, int] = {}
    arg: dict[int, tuple[int, int]] = {}
    gathered: list[tuple[int, int]] = []
    for u in range(full + 1):
        comps = component_masks(g, full & ~u)
        cdata = []
        for comp in comps:
            oc = 0
            m = u
            while m:
                lsb = m & -m
                if (rows[lsb.bit_length() - 1] & comp).bit_count() & 1:
                    oc |= lsb
                m ^= lsb
            cdata.append((oc, comp.bit_count() & 1))
        tsub = u
        while True:
            smask = u ^ tsub
            szdiff = smask.bit_count() - tsub.bit_count()
            degsum = 0
            m = tsub
            while m:
                lsb = m & -m
                x = lsb.bit_length() - 1
                degsum += deg[x] - (rows[x] & smask).bit_count()
                m ^= lsb
            tau_even = 0
            tau_odd = 0
            for oc, codd in cdata:
                pe = (tsub & oc).bit_count() & 1
                tau_even += pe
                tau_odd += pe ^ codd
            for k in ks:
                tau = tau_odd if k & 1 else tau_even
                val = tau - degsum - k * szdiff
                prev = best.get(k)
                if prev is None or val > prev:
                    best[k] = val
                    arg[k] = (smask, tsub)
                    if k == collect_for:
                        gathered = [(smask, tsub)]
                elif val == prev and k == collect_for:
                    gathered.append((smask, tsub))
            if tsub == 0:
                break
            tsub = (tsub - 1) & u
    return best, arg, gathered


def brute_force_deficiency(g: Graph, k: int, cap: int = _DEFAULT_CAP) -> tuple[int, STPair]:
    """Maximum of -delta over all disjoint (S, T) with a maximizing pair.

    The first maximizer in sweep order is returned, so a graph with a
    k-factor always reports (0, (empty, empty)).
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    _check_cap(g, cap)
    if g.n == 0:
        return 0, STPair((), ())
    best, arg, _ = _sweep(g, [k])
    smask, tmask = arg[k]
    return best[k], STPair(_mask_to_tuple(smask), _mask_to_tuple(tmask))


def brute_force_deficiency_multi(
    g: Graph, ks: Sequence[int], cap: int = _DEFAULT_CAP
) -> dict[int, tuple[int, STPair]]:
    """One 3^n sweep serving several k values at once."""
    if any(k < 0 for k in ks):
        raise ValueError("k must be non-negative")
    _check_cap(g, cap)
    if g.n == 0:
        return {k: (0, STPair((), ())) for k in ks}
    best, arg, _ = _sweep(g, list(ks))
    out = {}
    for k in ks:
        smask, tmask = arg[k]
        out[k] = (best[k], STPair(_mask_to_tuple(smask), _mask_to_tuple(tmask)))
    return out


def optimal_pairs(g: Graph, k: int, cap: int = _DEFAULT_CAP) -> tuple[int, list[STPair]]:
    """Deficiency plus every disjoint pair attaining it, in sweep order."""
    if k < 0:
        raise ValueError("k must be non-negative")
    _check_cap(g, cap)
    if g.n == 0:
        return 0, [STPair((), ())]
    best, _, gathered = _sweep(g, [k], collect_for=k)
    pairs = [STPair(_mask_to_tuple(s), _mask_to_tuple(t)) for s, t in gathered]
    return best[k], pairs


def brute_force_has_k_factor(g: Graph, k: int, cap: int = _DEFAULT_CAP) -> bool:
    return brute_force_deficiency(g, k, cap=cap)[0] == 0
