"""Spanning path-cycle systems via degree-constrained factors.

A graph has a spanning path-cycle system with path end-vertices exactly W
iff it has a factor F with deg_F = 1 on W and 2 elsewhere.  Factors with a
prescribed degree function f are found through the classical gadget
reduction to perfect matching: each vertex v becomes deg(v) edge ports
plus deg(v) - f(v) core vertices, ports joined completely to cores of the
same vertex, and each original edge joins its two ports.  Perfect
matchings of the gadget correspond to f-factors of the original graph.

:func:`brute_force_f_factor` is an independent exhaustive oracle used to
cross-check the matching pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import UndecidedAtScaleError
from .graphs import Graph, as_vertex_set
from .matching import Matching, maximum_matching

Edge = tuple[int, int]


@dataclass(frozen=True)
class DegreeSpec:
    """Required degree f(v) for every vertex, indexed by vertex."""

    targets: tuple[int, ...]

    def __post_init__(self):
        if any(t < 0 for t in self.targets):
            raise ValueError("degree targets must be nonnegative")

    def __getitem__(self, v: int) -> int:
        return self.targets[v]

    def __len__(self) -> int:
        return len(self.targets)

    @property
    def total(self) -> int:
        return sum(self.targets)

    def subset_sum(self, vertices: Iterable[int]) -> int:
        return sum(self.targets[v] for v in vertices)


def degree_spec_from_terminals(g: Graph, w: Iterable[int]) -> DegreeSpec:
    """f = 1 on the terminal set, 2 elsewhere; |W| must be even."""
    ws = as_vertex_set(g, w, "terminal set")
    if len(ws) % 2 != 0:
        raise ValueError(f"terminal set has odd size {len(ws)}")
    targets = [2] * g.n
    for v in ws:
        targets[v] = 1
    return DegreeSpec(tuple(targets))


# -- gadget reduction ------------------------------------------------------


@dataclass(frozen=True)
class GadgetGraph:
    """Perfect-matching gadget for an f-factor instance.

    ``origin[i]`` describes gadget vertex i as ("port", v, edge) or
    ("core", v, slot).  ``port_pairs[j]`` gives the two port vertices of
    original edge ``host.edges[j]``.
    """

    host: Graph
    spec: DegreeSpec
    graph: Graph
    origin: tuple[tuple, ...]
    port_pairs: tuple[tuple[int, int], ...]

    @property
    def port_count(self) -> int:
        return sum(1 for o in self.origin if o[0] == "port")

    @property
    def core_count(self) -> int:
        return sum(1 for o in self.origin if o[0] == "core")

    def ports_of(self, v: int) -> list[int]:
        return [i for i, o in enumerate(self.origin) if o[0] == "port" and o[1] == v]

    def cores_of(self, v: int) -> list[int]:
        return [i for i, o in enumerate(self.origin) if o[0] == "core" and o[1] == v]


def build_gadget(g: Graph, f: DegreeSpec) -> GadgetGraph:
    """Construct the matching gadget; requires f(v) <= deg(v) everywhere."""
    if len(f) != g.n:
        raise ValueError("degree spec length does not match vertex count")
    for v in range(g.n):
        if f[v] > g.degree(v):
            raise ValueError(f"f({v}) = {f[v]} exceeds degree {g.degree(v)}")
    origin: list[tuple] = []
    port_of: dict[tuple[int, Edge], int] = {}
    ports: list[list[int]] = [[] for _ in range(g.n)]
    cores: list[list[int]] = [[] for _ in range(g.n)]
    for v in range(g.n):
        for u in g.neighbors(v):
            e = (v, u) if v < u else (u, v)
            port_of[(v, e)] = len(origin)
            ports[v].append(len(origin))
            origin.append(("port", v, e))
        for slot in range(g.degree(v) - f[v]):
            cores[v].append(len(origin))
            origin.append(("core", v, slot))
    edges: list[Edge] = []
    for v in range(g.n):
        for p in ports[v]:
            for c in cores[v]:
                edges.append((p, c))
    port_pairs = []
    for e in g.edges:
        pu, pv = port_of[(e[0], e)], port_of[(e[1], e)]
        edges.append((min(pu, pv), max(pu, pv)))
        port_pairs.append((pu, pv))
    gg = Graph(len(origin), edges)
    return GadgetGraph(g, f, gg, tuple(origin), tuple(port_pairs))


@dataclass(frozen=True)
class FFactor:
    """A spanning subgraph given by its edge set, on vertices 0..n-1."""

    n: int
    edges: tuple[Edge, ...]

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def matches_spec(self, f: DegreeSpec) -> bool:
        return self.degrees() == list(f.targets)


def extract_f_factor(gg: GadgetGraph, matching: Matching) -> FFactor:
    """Read the factor off a perfect gadget matching."""
    if not matching.is_perfect(gg.graph):
        raise ValueError("matching is not perfect on the gadget")
    matched = set(matching.pairs)
    chosen = [
        e for e, (pu, pv) in zip(gg.host.edges, gg.port_pairs)
        if (min(pu, pv), max(pu, pv)) in matched
    ]
    factor = FFactor(gg.host.n, tuple(sorted(chosen)))
    if not factor.matches_spec(gg.spec):
        raise AssertionError("gadget matching produced a degree-violating factor")
    return factor


def matching_from_factor(gg: GadgetGraph, factor: FFactor) -> Matching:
    """Reverse map: build a perfect gadget matching from an f-factor.

    Ports of factor edges are matched across; the remaining ports of each
    vertex are matched to its cores in index order.
    """
    chosen = set(factor.edges)
    mate = [-1] * gg.graph.n
    for e, (pu, pv) in zip(gg.host.edges, gg.port_pairs):
        if e in chosen:
            mate[pu] = pv
            mate[pv] = pu
    for v in range(gg.host.n):
        free_ports = [p for p in gg.ports_of(v) if mate[p] < 0]
        cores = gg.cores_of(v)
        if len(free_ports) != len(cores):
            raise ValueError("factor does not meet the degree spec at vertex %d" % v)
        for p, c in zip(free_ports, cores):
            mate[p] = c
            mate[c] = p
    m = Matching.from_mates(mate)
    assert m.is_perfect(gg.graph)
    return m


# -- decomposition ---------------------------------------------------------


@dataclass(frozen=True)
class PathCycleSystem:
    """Vertex-disjoint paths and cycles covering all vertices.

    Canonical form: every path runs from its smaller endpoint, every cycle
    starts at its minimum vertex heading toward the smaller neighbor, and
    both lists are sorted by first vertex.
    """

    paths: tuple[tuple[int, ...], ...]
    cycles: tuple[tuple[int, ...], ...]

    def format(self) -> str:
        lines = [" ".join(["path:"] + [str(v) for v in p]) for p in self.paths]
        lines += [" ".join(["cycle:"] + [str(v) for v in c]) for c in self.cycles]
        return "\n".join(lines) + ("\n" if lines else "")

    def covered_vertices(self) -> list[int]:
        out: list[int] = []
        for p in self.paths:
            out.extend(p)
        for c in self.cycles:
            out.extend(c)
        return sorted(out)

    def endpoints(self) -> tuple[int, ...]:
        out: list[int] = []
        for p in self.paths:
            out.append(p[0])
            out.append(p[-1])
        return tuple(sorted(out))

    def validate(self, g: Graph, w: Iterable[int]) -> None:
        """Assert every structural invariant against the host graph."""
        ws = as_vertex_set(g, w, "terminal set")
        if self.covered_vertices() != list(range(g.n)):
            raise AssertionError("components do not partition the vertex set")
        for p in self.paths:
            if len(p) < 2:
                raise AssertionError(f"path {p} has no edge")
            for a, b in zip(p, p[1:]):
                if not g.has_edge(a, b):
                    raise AssertionError(f"path step {a}-{b} is not an edge")
        for c in self.cycles:
            if len(c) < 3:
                raise AssertionError(f"cycle {c} has fewer than 3 vertices")
            for a, b in zip(c, c[1:] + (c[0],)):
                if not g.has_edge(a, b):
                    raise AssertionError(f"cycle step {a}-{b} is not an edge")
        if self.endpoints() != ws:
            raise AssertionError(
                f"path endpoints {self.endpoints()} differ from terminals {ws}"
            )
        wset = set(ws)
        for p in self.paths:
            for inner in p[1:-1]:
                if inner in wset:
                    raise AssertionError(f"terminal {inner} is interior to a path")
        for c in self.cycles:
            for v in c:
                if v in wset:
                    raise AssertionError(f"terminal {v} lies on a cycle")


def decompose_system(factor: FFactor, w: Iterable[int]) -> PathCycleSystem:
    """Split a degree-(1 on W, 2 elsewhere) factor into paths and cycles."""
    n = factor.n
    ws = tuple(sorted(set(w)))
    wset = set(ws)
    deg = factor.degrees()
    expected = [1 if v in wset else 2 for v in range(n)]
    if deg != expected:
        raise ValueError("factor degrees do not match the terminal spec")
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in factor.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * n
    paths: list[tuple[int, ...]] = []
    cycles: list[tuple[int, ...]] = []

    def walk(start: int, first: int) -> list[int]:
        out = [start, first]
        seen[start] = seen[first] = True
        prev, cur = start, first
        while True:
            nxts = [x for x in adj[cur] if x != prev]
            if not nxts:
                return out
            nxt = nxts[0]
            if nxt == start:
                return out
            seen[nxt] = True
            out.append(nxt)
            prev, cur = cur, nxt

    for v in ws:  # paths first: walk from each endpoint of smaller index
        if seen[v]:
            continue
        trail = walk(v, adj[v][0])
        if trail[0] > trail[-1]:
            trail.reverse()
        paths.append(tuple(trail))
    for v in range(n):
        if seen[v]:
            continue
        nbrs = sorted(adj[v])
        trail = walk(v, nbrs[0])  # min vertex first, toward smaller neighbor
        cycles.append(tuple(trail))
    return PathCycleSystem(
        tuple(sorted(paths, key=lambda p: p[0])),
        tuple(sorted(cycles, key=lambda c: c[0])),
    )


# -- solver ----------------------------------------------------------------


def find_f_factor(g: Graph, f: DegreeSpec) -> FFactor | None:
    """Some f-factor of g, or None when none exists (gadget + matching)."""
    if f.total % 2 != 0:
        return None
    if any(f[v] > g.degree(v) for v in range(g.n)):
        return None
    gg = build_gadget(g, f)
    m = maximum_matching(gg.graph)
    if not m.is_perfect(gg.graph):
        return None
    return extract_f_factor(gg, m)


def solve(g: Graph, w: Iterable[int]) -> PathCycleSystem | None:
    """Spanning path-cycle system with path ends exactly W; None if infeasible."""
    f = degree_spec_from_terminals(g, w)
    factor = find_f_factor(g, f)
    if factor is None:
        return None
    system = decompose_system(factor, w)
    system.validate(g, w)
    return system


# -- exhaustive oracle -----------------------------------------------------


def brute_force_f_factor(
    g: Graph, f: DegreeSpec, *, max_edges: int = 24
) -> FFactor | None:
    """Exhaustive f-factor search with degree pruning; independent of the
    matching pipeline.  Raises UndecidedAtScaleError beyond ``max_edges``."""
    m = g.edge_count
    if m > max_edges:
        raise UndecidedAtScaleError(
            f"{m} edges exceeds the brute-force bound {max_edges}"
        )
    if len(f) != g.n:
        raise ValueError("degree spec length does not match vertex count")
    if f.total % 2 != 0 or any(f[v] > g.degree(v) for v in range(g.n)):
        return None
    edges = g.edges
    remaining = [g.degree(v) for v in range(g.n)]
    chosen_deg = [0] * g.n
    picked: list[Edge] = []

    def feasible(v: int) -> bool:
        return chosen_deg[v] <= f[v] <= chosen_deg[v] + remaining[v]

    def rec(i: int) -> bool:
        if i == m:
            return all(chosen_deg[v] == f[v] for v in range(g.n))
        u, v = edges[i]
        remaining[u] -= 1
        remaining[v] -= 1
        # try including the edge
        if chosen_deg[u] < f[u] and chosen_deg[v] < f[v]:
            chosen_deg[u] += 1
            chosen_deg[v] += 1
            picked.append((u, v))
            if feasible(u) and feasible(v) and rec(i + 1):
                return True
            picked.pop()
            chosen_deg[u] -= 1
            chosen_deg[v] -= 1
        # try excluding it
        if feasible(u) and feasible(v) and rec(i + 1):
            return True
        remaining[u] += 1
        remaining[v] += 1
        return False

    if rec(0):
        return FFactor(g.n, tuple(picked))
    return None
