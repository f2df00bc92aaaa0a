"""Exhaustive deficiency scan over all disjoint (S, T) pairs.

For every removal set R = S u T (enumerated in ascending |R|, then value)
and every split of R into (S, T), evaluates

    delta(S, T) = f(S) + deg_{G-S}(T) - f(T) - q(S, T)

and reports the smallest |S| + |T| carrying a violation delta < 0, or -1
when none exists.  Component parities are folded into per-vertex XOR masks
so the inner submask loop touches only table lookups.

The scan is a 3^n enumeration; a numba kernel keeps it fast at the n <= 14
bound.  A pure-Python mirror of the same loop serves as fallback and as a
cross-check target in the tests.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):  # type: ignore[misc]
        def wrap(fn):
            return fn

        return wrap


@njit(cache=True, nogil=True)
def _scan_slice(n, adj, fsum, degsum, order, pc, start, end):  # pragma: no cover
    full = (1 << n) - 1
    comp_masks = np.empty(n + 1, np.int64)
    par = np.empty(max(n, 1), np.int64)
    for oi in range(start, end):
        R = order[oi]
        rest = full & ~R
        # connected components of the surviving vertices
        c = 0
        fd_odd = 0
        rem = rest
        while rem:
            comp = rem & (-rem)
            while True:
                grow = comp
                mm = comp
                while mm:
                    b = mm & (-mm)
                    grow |= adj[pc[b - 1]]
                    mm ^= b
                grow &= rest
                if grow == comp:
                    break
                comp = grow
            comp_masks[c] = comp
            if fsum[comp] & 1:
                fd_odd |= 1 << c
            c += 1
            rem &= ~comp
        # per-vertex component parity masks
        mm = R
        while mm:
            b = mm & (-mm)
            v = pc[b - 1]
            pmask = 0
            for j in range(c):
                if pc[adj[v] & comp_masks[j]] & 1:
                    pmask |= 1 << j
            par[v] = pmask
            mm ^= b
        # all splits of R into (S, T)
        T = R
        while True:
            S = R ^ T
            acc = 0
            e_ts = 0
            mm = T
            while mm:
                b = mm & (-mm)
                y = pc[b - 1]
                acc ^= par[y]
                e_ts += pc[adj[y] & S]
                mm ^= b
            dlt = fsum[S] + degsum[T] - e_ts - fsum[T] - pc[fd_odd ^ acc]
            if dlt < 0:
                return pc[R]
            if T == 0:
                break
            T = (T - 1) & R
    return -1


def _scan_slice_pure(n, adj, fsum, degsum, order, pc, start, end):
    """Pure-Python mirror of :func:`_scan_slice` (identical semantics)."""
    full = (1 << n) - 1
    for oi in range(start, end):
        R = int(order[oi])
        rest = full & ~R
        comp_masks = []
        fd_odd = 0
        rem = rest
        while rem:
            comp = rem & (-rem)
            while True:
                grow = comp
                mm = comp
                while mm:
                    b = mm & (-mm)
                    grow |= int(adj[int(pc[b - 1])])
                    mm ^= b
                grow &= rest
                if grow == comp:
                    break
                comp = grow
            if int(fsum[comp]) & 1:
                fd_odd |= 1 << len(comp_masks)
            comp_masks.append(comp)
            rem &= ~comp
        par = {}
        mm = R
        while mm:
            b = mm & (-mm)
            v = int(pc[b - 1])
            pmask = 0
            for j, cm in enumerate(comp_masks):
                if int(pc[int(adj[v]) & cm]) & 1:
                    pmask |= 1 << j
            par[v] = pmask
            mm ^= b
        T = R
        while True:
            S = R ^ T
            acc = 0
            e_ts = 0
            mm = T
            while mm:
                b = mm & (-mm)
                y = int(pc[b - 1])
                acc ^= par[y]
                e_ts += int(pc[int(adj[y]) & S])
                mm ^= b
            dlt = (
                int(fsum[S]) + int(degsum[T]) - e_ts - int(fsum[T])
                - int(pc[fd_odd ^ acc])
            )
            if dlt < 0:
                return int(pc[R])
            if T == 0:
                break
            T = (T - 1) & R
    return -1


def _tables(n: int, adj_masks, f_targets, degrees):
    size = 1 << n
    pc = np.zeros(size, np.int64)
    fsum = np.zeros(size, np.int64)
    degsum = np.zeros(size, np.int64)
    for v in range(n):
        half = 1 << v
        pc.reshape(-1, 2 * half)[:, half:] += 1
        fsum.reshape(-1, 2 * half)[:, half:] += f_targets[v]
        degsum.reshape(-1, 2 * half)[:, half:] += degrees[v]
    order = np.argsort(pc, kind="stable").astype(np.int64)
    adj = np.array(list(adj_masks), dtype=np.int64) if n else np.zeros(0, np.int64)
    return adj, fsum, degsum, order, pc


def scan_min_violation_size(g, f, *, jobs: int = 1, force_pure: bool = False) -> int:
    """Smallest |S|+|T| over violating pairs of ``g`` under spec ``f``; -1 if none."""
    n = g.n
    adj, fsum, degsum, order, pc = _tables(
        n, g.adjacency_masks(), f.targets, [g.degree(v) for v in range(n)]
    )
    kernel = _scan_slice_pure if (force_pure or not HAVE_NUMBA) else _scan_slice
    size = 1 << n
    if jobs <= 1 or size < 1024:
        return int(kernel(n, adj, fsum, degsum, order, pc, 0, size))
    bounds = np.linspace(0, size, jobs + 1).astype(int)
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        results = list(
            pool.map(
                lambda se: int(kernel(n, adj, fsum, degsum, order, pc, se[0], se[1])),
                zip(bounds[:-1], bounds[1:]),
            )
        )
    hits = [r for r in results if r >= 0]
    return min(hits) if hits else -1
