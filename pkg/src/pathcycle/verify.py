"""Checkers for the structural hypotheses used by the solver and families.

Every checker is a pure function of an immutable :class:`~pathcycle.graphs.Graph`
and returns either a plain value or a :class:`PropertyReport`.  A failing
report always carries a witness that can be re-checked against the graph
without trusting this module.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graphs import Graph, as_vertex_set

Edge = tuple[int, int]


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of a structural check.

    ``holds`` is ``True``/``False`` for decided checks and ``None`` when the
    input exceeded the check's exhaustion bound ("undecided at this scale").
    """

    name: str
    holds: bool | None
    witness: object = None
    detail: str = ""

    def format_line(self) -> str:
        if self.holds is None:
            return f"{self.name}: UNDECIDED {self.detail}".rstrip()
        if self.holds:
            return f"{self.name}: PASS"
        parts = [f"{self.name}: FAIL"]
        if self.witness is not None:
            parts.append(repr(self.witness))
        if self.detail:
            parts.append(self.detail)
        return " ".join(parts)


def check_regular(g: Graph, r: int) -> PropertyReport:
    """Does every vertex have degree exactly ``r``?"""
    if r <= 0:
        raise ValueError("degree must be positive")
    for v in range(g.n):
        if g.degree(v) != r:
            return PropertyReport(
                "regular", False, witness=(v, g.degree(v)),
                detail=f"vertex {v} has degree {g.degree(v)}, expected {r}",
            )
    return PropertyReport("regular", True)


# -- edge connectivity ----------------------------------------------------


def _max_flow_unit(g: Graph, source: int, sink: int) -> tuple[int, set[int]]:
    """Max flow with unit capacity per undirected edge, plus the residual
    source-side vertex set at termination (a minimum cut shore)."""
    # residual capacities: cap[u][v] for both orientations of each edge
    cap = [dict.fromkeys(g.neighbors(v), 1) for v in range(g.n)]
    flow = 0
    while True:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            u = queue.popleft()
            for v, c in cap[u].items():
                if c > 0 and v not in parent:
                    parent[v] = u
                    queue.append(v)
        if sink not in parent:
            return flow, set(parent)
        v = sink
        while v != source:
            u = parent[v]
            cap[u][v] -= 1
            cap[v][u] = cap[v].get(u, 0) + 1
            v = u
        flow += 1


def edge_connectivity(g: Graph) -> tuple[int, tuple[Edge, ...]]:
    """Global edge connectivity and one minimum edge cut.

    Computed as the minimum over v != 0 of max-flow(0, v) with unit edge
    capacities.  Returns (0, ()) for disconnected or trivial graphs; for
    n >= 2 the value is 0 exactly when the graph is disconnected.
    """
    if g.n <= 1:
        return 0, ()
    best = None
    best_side: set[int] = set()
    for v in range(1, g.n):
        value, side = _max_flow_unit(g, 0, v)
        if best is None or value < best:
            best, best_side = value, side
            if best == 0:
                break
    cut = tuple(
        e for e in g.edges if (e[0] in best_side) != (e[1] in best_side)
    )
    assert len(cut) == best, "residual cut size must equal the flow value"
    return best, cut


def _bridges(n: int, adj: list[list[int]]) -> list[Edge]:
    """Bridges of a simple graph given by adjacency lists (iterative DFS)."""
    disc = [0] * n
    low = [0] * n
    parent = [-1] * n
    timer = 1
    out: list[Edge] = []
    for root in range(n):
        if disc[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack: list[tuple[int, int]] = [(root, 0)]
        while stack:
            v, idx = stack[-1]
            if idx < len(adj[v]):
                stack[-1] = (v, idx + 1)
                u = adj[v][idx]
                if u == parent[v]:
                    continue  # single back edge to the parent (simple graph)
                if disc[u]:
                    if disc[u] < low[v]:
                        low[v] = disc[u]
                else:
                    parent[u] = v
                    disc[u] = low[u] = timer
                    timer += 1
                    stack.append((u, 0))
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] > disc[p]:
                        out.append((min(p, v), max(p, v)))
    return out


def essential_edge_connectivity_at_least(
    g: Graph,
    k: int,
    *,
    max_k: int = 4,
    max_edges: int = 2000,
    max_work: int = 200_000_000,
) -> PropertyReport:
    """Is the graph essentially k-edge-connected?

    Holds when no set of at most k-1 edges disconnects the graph into two
    or more components of order >= 2.  The search enumerates minimal
    violating sets: every minimal violating set of size j consists of j-1
    edges plus a bridge of the graph with those j-1 edges removed, so it
    suffices to scan (j-1)-subsets and refine with a bridge computation.
    Inputs beyond the exhaustion bound yield an undecided report.
    """
    if k <= 0:
        raise ValueError("k must be positive")
    name = "essential-edge-connectivity"
    m = g.edge_count
    if not (k <= max_k or m <= max_edges):
        return PropertyReport(name, None, detail=f"k={k} with {m} edges exceeds the bound")
    # work estimate: C(m, j-1) * O(m) bridge scans for the largest j
    jmax = k - 1
    if jmax >= 1:
        est = m
        for j in range(2, jmax + 1):
            est *= max(m - j + 1, 1)
        if est * max(m, 1) > max_work:
            return PropertyReport(
                name, None, detail=f"k={k} with {m} edges exceeds the work budget"
            )

    def splits_two_big(removed: frozenset[Edge]) -> bool:
        adj = [[u for u in g.neighbors(v)
                if (min(v, u), max(v, u)) not in removed]
               for v in range(g.n)]
        seen = [False] * g.n
        big = 0
        for s in range(g.n):
            if seen[s]:
                continue
            seen[s] = True
            size = 1
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        size += 1
                        queue.append(y)
            if size >= 2:
                big += 1
                if big >= 2:
                    return True
        return False

    for j in range(1, k):
        for prefix in itertools.combinations(g.edges, j - 1):
            removed = frozenset(prefix)
            adj = [[u for u in g.neighbors(v)
                    if (min(v, u), max(v, u)) not in removed]
                   for v in range(g.n)]
            for b in _bridges(g.n, adj):
                cand = removed | {b}
                if len(cand) == j and splits_two_big(cand):
                    return PropertyReport(
                        name, False, witness=tuple(sorted(cand)),
                        detail=f"removing {j} edges leaves two components of order >= 2",
                    )
    return PropertyReport(name, True)


# -- induced stars --------------------------------------------------------


def find_induced_star(g: Graph, m: int) -> tuple[int, tuple[int, ...]] | None:
    """Find a vertex with ``m`` pairwise non-adjacent neighbors, if any.

    Returns (center, leaves) for the first center in vertex order, searching
    its neighborhood for an independent set by branch and bound; ``None``
    means the graph is K_{1,m}-free.
    """
    if m <= 0:
        raise ValueError("star size must be positive")
    masks = g.adjacency_masks()
    for center in range(g.n):
        nbrs = g.neighbors(center)
        if len(nbrs) < m:
            continue
        found = _independent_subset(nbrs, masks, m)
        if found is not None:
            return center, found
    return None


def _independent_subset(
    candidates: tuple[int, ...], masks: tuple[int, ...], m: int
) -> tuple[int, ...] | None:
    chosen: list[int] = []
    k = len(candidates)

    def extend(start: int, blocked: int) -> bool:
        if len(chosen) == m:
            return True
        if len(chosen) + (k - start) < m:
            return False
        for i in range(start, k):
            v = candidates[i]
            if blocked >> v & 1:
                continue
            chosen.append(v)
            if extend(i + 1, blocked | masks[v]):
                return True
            chosen.pop()
        return False

    if extend(0, 0):
        return tuple(chosen)
    return None


# -- terminal sets --------------------------------------------------------


def check_terminal_set(g: Graph, w: Iterable[int], mode: str) -> PropertyReport:
    """Check a terminal set under ``distance3`` or ``nbhd1``.

    distance3: even size and pairwise distance >= 3.
    nbhd1: even size and every vertex has at most one neighbor in W.
    The report notes the implication distance3 => nbhd1 when relevant.
    """
    if mode not in ("distance3", "nbhd1"):
        raise ValueError(f"unknown mode {mode!r}")
    ws = as_vertex_set(g, w, "terminal set")
    name = f"terminals-{mode}"
    if len(ws) % 2 != 0:
        return PropertyReport(name, False, witness=len(ws), detail="terminal set has odd size")
    wset = set(ws)

    def nbhd1_violation() -> tuple[int, tuple[int, ...]] | None:
        for v in range(g.n):
            inside = [u for u in g.neighbors(v) if u in wset]
            if len(inside) > 1:
                return v, tuple(inside)
        return None

    if mode == "nbhd1":
        bad = nbhd1_violation()
        if bad is not None:
            return PropertyReport(
                name, False, witness=bad,
                detail=f"vertex {bad[0]} has neighbors {list(bad[1])} in W",
            )
        return PropertyReport(name, True)

    # distance3: bounded BFS to depth 2 from each terminal
    for a in ws:
        dist = {a: 0}
        queue = deque([a])
        while queue:
            x = queue.popleft()
            if dist[x] == 2:
                continue
            for y in g.neighbors(x):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        for b in ws:
            if b != a and b in dist:
                return PropertyReport(
                    name, False, witness=(a, b, dist[b]),
                    detail=f"terminals {a} and {b} are at distance {dist[b]}",
                )
    detail = ""
    if nbhd1_violation() is None:
        detail = "implies nbhd1: confirmed"
    return PropertyReport(name, True, detail=detail)


# -- path-system criterion ------------------------------------------------


def path_system_criterion(g: Graph, *, max_vertices: int = 18) -> PropertyReport:
    """Check that removing any proper vertex subset S leaves at most |S|+1
    components (the all-terminal-sets path-system criterion)."""
    name = "path-system-criterion"
    n = g.n
    if n > max_vertices:
        return PropertyReport(name, None, detail=f"{n} vertices exceeds bound {max_vertices}")
    masks = g.adjacency_masks()
    full = (1 << n) - 1
    for s_mask in range(1 << n):
        if s_mask == full and n > 0:
            continue  # proper subsets only
        rest = full & ~s_mask
        comps = 0
        rem = rest
        while rem:
            comps += 1
            comp = rem & (-rem)
            while True:
                grow = comp
                mm = comp
                while mm:
                    b = mm & (-mm)
                    grow |= masks[b.bit_length() - 1]
                    mm ^= b
                grow &= rest
                if grow == comp:
                    break
                comp = grow
            rem &= ~comp
        size = bin(s_mask).count("1")
        if comps > size + 1:
            s = tuple(v for v in range(n) if s_mask >> v & 1)
            return PropertyReport(
                name, False, witness=(s, comps),
                detail=f"removing S={list(s)} leaves {comps} components > |S|+1={size + 1}",
            )
    return PropertyReport(name, True)
