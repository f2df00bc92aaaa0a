"""Simple undirected graphs on dense integer vertices, plus text I/O.

Vertices are always 0..n-1.  Graphs are immutable after construction and
safe to share between threads.  The text format is line oriented ASCII:

    c optional comment
    p <n> <m>
    e <u> <v>        (exactly m lines, 0 <= u < v < n)

A terminal-set file is a single line of whitespace-separated vertex
indices (possibly empty).
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .errors import GraphFormatError

#: Sentinel returned by :func:`distance` for vertices in different components.
INFINITY = float("inf")


def _normalize_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph.

    ``Graph(n, edges)`` rejects self-loops, duplicate edges and vertex
    indices outside 0..n-1.
    """

    __slots__ = ("n", "edges", "_adj", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen: set[tuple[int, int]] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) has a vertex outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = _normalize_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge ({e[0]},{e[1]})")
            seen.add(e)
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))
        self._adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self._masks: tuple[int, ...] | None = None

    # -- basic queries ----------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        return v in self._adj[u]

    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighborhoods as bitmasks; computed once and cached."""
        if self._masks is None:
            masks = []
            for v in range(self.n):
                m = 0
                for u in self._adj[v]:
                    m |= 1 << u
                masks.append(m)
            self._masks = tuple(masks)
        return self._masks

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def as_vertex_set(g: Graph, vertices: Iterable[int], name: str = "vertex set") -> tuple[int, ...]:
    """Normalize to a sorted duplicate-free tuple, validating against ``g``."""
    vs = sorted(set(vertices))
    if vs and not (0 <= vs[0] and vs[-1] < g.n):
        bad = vs[0] if vs[0] < 0 else vs[-1]
        raise ValueError(f"{name}: vertex {bad} outside 0..{g.n - 1}")
    return tuple(vs)


# -- text I/O -------------------------------------------------------------


def parse_graph(text: str | bytes) -> Graph:
    """Parse the ``p``/``e`` line format; errors name the offending line."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    n = None
    m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c ") or line == "c":
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise GraphFormatError("second 'p' header", lineno)
            if len(fields) != 3:
                raise GraphFormatError("header must be 'p <n> <m>'", lineno)
            try:
                n, m = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError("non-integer header field", lineno) from None
            if n < 0 or m < 0:
                raise GraphFormatError("negative count in header", lineno)
        elif fields[0] == "e":
            if n is None:
                raise GraphFormatError("edge line before 'p' header", lineno)
            if len(fields) != 3:
                raise GraphFormatError("edge line must be 'e <u> <v>'", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError("non-integer vertex index", lineno) from None
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"vertex index out of range in edge ({u},{v})", lineno)
            if u > v:
                raise GraphFormatError(f"edge ({u},{v}) must be written with u < v", lineno)
            if (u, v) in seen:
                raise GraphFormatError(f"duplicate edge ({u},{v})", lineno)
            seen.add((u, v))
            edges.append((u, v))
        else:
            raise GraphFormatError(f"unknown line type {fields[0]!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p' header")
    if m != len(edges):
        raise GraphFormatError(f"header promises {m} edges, found {len(edges)}")
    return Graph(n, edges)


def serialize_graph(g: Graph, comments: Sequence[str] = ()) -> str:
    """Canonical serialization: sorted edges, ``u < v``, LF line endings."""
    lines = [f"c {c}" for c in comments]
    lines.append(f"p {g.n} {g.edge_count}")
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_terminals(text: str | bytes, g: Graph | None = None) -> tuple[int, ...]:
    """Parse a terminal-set file: whitespace-separated indices, maybe empty."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    fields = text.split()
    try:
        vs = [int(f) for f in fields]
    except ValueError:
        raise GraphFormatError("non-integer terminal index") from None
    if len(set(vs)) != len(vs):
        raise GraphFormatError("duplicate terminal index")
    w = tuple(sorted(vs))
    if g is not None and w and not (0 <= w[0] and w[-1] < g.n):
        raise GraphFormatError("terminal index outside 0..n-1")
    return w


def serialize_terminals(w: Iterable[int]) -> str:
    return " ".join(str(v) for v in sorted(w)) + "\n"


# -- traversal primitives -------------------------------------------------


def components_after_removal(g: Graph, removed: Iterable[int]) -> list[tuple[int, ...]]:
    """Connected components of the subgraph induced on V(g) minus ``removed``.

    Blocks are sorted tuples, listed by ascending minimum vertex.
    """
    gone = set(as_vertex_set(g, removed, "removed set"))
    seen = [False] * g.n
    blocks: list[tuple[int, ...]] = []
    for start in range(g.n):
        if start in gone or seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if not seen[v] and v not in gone:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        blocks.append(tuple(sorted(comp)))
    return blocks


def distance(g: Graph, u: int, v: int) -> int | float:
    """Shortest-path length; :data:`INFINITY` when u and v are disconnected."""
    for x in (u, v):
        if not (0 <= x < g.n):
            raise ValueError(f"vertex {x} outside 0..{g.n - 1}")
    if u == v:
        return 0
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        d = dist[x] + 1
        for y in g.neighbors(x):
            if y not in dist:
                if y == v:
                    return d
                dist[y] = d
                queue.append(y)
    return INFINITY


def edge_count_between(g: Graph, a: Iterable[int], b: Iterable[int]) -> int:
    """Number of edges with one endpoint in ``a`` and the other in ``b``."""
    sa = set(as_vertex_set(g, a, "first set"))
    sb = set(as_vertex_set(g, b, "second set"))
    if sa & sb:
        raise ValueError(f"sets overlap at vertex {min(sa & sb)}")
    if len(sa) > len(sb):
        sa, sb = sb, sa
    return sum(1 for u in sa for v in g.neighbors(u) if v in sb)


def is_connected(g: Graph) -> bool:
    return len(components_after_removal(g, ())) <= 1
