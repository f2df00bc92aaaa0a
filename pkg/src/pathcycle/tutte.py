"""Deficiency certificates for f-factor infeasibility.

For disjoint vertex sets S, T the deficiency is

    delta(S, T) = f(S) + deg_{G-S}(T) - f(T) - q(S, T),

where q counts the components D of G - (S u T) with f(V(D)) + e(D, T) odd.
An f-factor exists iff delta(S, T) >= 0 for every disjoint pair, and
delta always has the parity of f(V(G)).  A pair with delta < 0 is an
infeasibility certificate that can be replayed in linear time.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from ._certkernel import scan_min_violation_size
from .errors import GraphFormatError, UndecidedAtScaleError
from .factor import DegreeSpec
from .graphs import Graph, as_vertex_set, components_after_removal, edge_count_between


def _disjoint_sets(
    g: Graph, s: Iterable[int], t: Iterable[int]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    ss = as_vertex_set(g, s, "S")
    ts = as_vertex_set(g, t, "T")
    overlap = set(ss) & set(ts)
    if overlap:
        raise ValueError(f"S and T overlap at vertex {min(overlap)}")
    return ss, ts


def odd_components(
    g: Graph, f: DegreeSpec, s: Iterable[int], t: Iterable[int]
) -> tuple[int, list[tuple[int, ...]]]:
    """The f-odd components of G - (S u T): those D with f(V(D)) + e(D,T) odd."""
    ss, ts = _disjoint_sets(g, s, t)
    odd = [
        comp
        for comp in components_after_removal(g, ss + ts)
        if (f.subset_sum(comp) + edge_count_between(g, comp, ts)) % 2 == 1
    ]
    return len(odd), odd


def delta(g: Graph, f: DegreeSpec, s: Iterable[int], t: Iterable[int]) -> int:
    """Exact deficiency of the pair (S, T)."""
    ss, ts = _disjoint_sets(g, s, t)
    s_set = set(ss)
    q, _ = odd_components(g, f, ss, ts)
    deg_gs_t = sum(
        1 for y in ts for x in g.neighbors(y) if x not in s_set
    )
    value = f.subset_sum(ss) + deg_gs_t - f.subset_sum(ts) - q
    if (value - f.total) % 2 != 0:
        raise AssertionError("deficiency parity disagrees with f(V(G))")
    return value


@dataclass(frozen=True)
class TutteCertificate:
    """A disjoint pair (S, T) with its deficiency and f-odd components."""

    s: tuple[int, ...]
    t: tuple[int, ...]
    delta: int
    odd_components: tuple[tuple[int, ...], ...]

    @property
    def q(self) -> int:
        return len(self.odd_components)

    def validate(self, g: Graph, f: DegreeSpec) -> None:
        q, comps = odd_components(g, f, self.s, self.t)
        if tuple(comps) != self.odd_components:
            raise AssertionError("stored odd components do not recompute")
        if delta(g, f, self.s, self.t) != self.delta:
            raise AssertionError("stored deficiency does not recompute")


def evaluate_pair(
    g: Graph, f: DegreeSpec, s: Iterable[int], t: Iterable[int]
) -> TutteCertificate:
    """Deficiency and odd components of a given pair, packaged for replay."""
    ss, ts = _disjoint_sets(g, s, t)
    q, comps = odd_components(g, f, ss, ts)
    return TutteCertificate(ss, ts, delta(g, f, ss, ts), tuple(comps))


# -- exhaustive search ------------------------------------------------------


def _subsets_lex(universe: tuple[int, ...], max_size: int) -> Iterator[tuple[int, ...]]:
    """All subsets of size <= max_size in tuple-lexicographic order."""
    n = len(universe)
    prefix: list[int] = []

    def rec(start: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) >= max_size:
            return
        for i in range(start, n):
            prefix.append(universe[i])
            yield tuple(prefix)
            yield from rec(i + 1)
            prefix.pop()

    yield ()
    yield from rec(0)


def search_certificate(
    g: Graph,
    f: DegreeSpec,
    *,
    max_vertices: int = 14,
    jobs: int = 1,
) -> TutteCertificate | None:
    """Exhaustive certificate search over all disjoint (S, T) pairs.

    Returns the violating pair that is least under (|S| + |T|, S, T) with
    subsets compared lexicographically as sorted tuples, or ``None`` when
    every pair has nonnegative deficiency (equivalently, an f-factor
    exists).  Raises :class:`UndecidedAtScaleError` above ``max_vertices``.
    """
    if g.n > max_vertices:
        raise UndecidedAtScaleError(
            f"{g.n} vertices exceeds the certificate search bound {max_vertices}"
        )
    if len(f) != g.n:
        raise ValueError("degree spec length does not match vertex count")
    k = scan_min_violation_size(g, f, jobs=jobs)
    if k < 0:
        return None
    vertices = tuple(range(g.n))
    for s in _subsets_lex(vertices, k):
        rest = tuple(v for v in vertices if v not in set(s))
        need = k - len(s)
        if need > len(rest):
            continue
        for t in itertools.combinations(rest, need):
            if delta(g, f, s, t) < 0:
                return evaluate_pair(g, f, s, t)
    raise AssertionError("scan reported a violation the ordered search cannot find")


# -- witness files -----------------------------------------------------------


def format_certificate(cert: TutteCertificate) -> str:
    def row(label: str, vs: tuple[int, ...]) -> str:
        return f"{label}:" + ("" if not vs else " " + " ".join(map(str, vs)))

    lines = [
        row("S", cert.s),
        row("T", cert.t),
        f"delta: {cert.delta}",
        f"odd: {cert.q}",
    ]
    lines.extend(row("comp", comp) for comp in cert.odd_components)
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> TutteCertificate:
    s: tuple[int, ...] | None = None
    t: tuple[int, ...] | None = None
    dlt: int | None = None
    odd: int | None = None
    comps: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c "):
            continue
        label, _, rest = line.partition(":")
        if label not in ("S", "T", "delta", "odd", "comp"):
            raise GraphFormatError(f"unknown witness line {label!r}", lineno)
        fields = rest.split()
        try:
            if label == "S":
                s = tuple(int(x) for x in fields)
            elif label == "T":
                t = tuple(int(x) for x in fields)
            elif label == "delta":
                dlt = int(fields[0])
            elif label == "odd":
                odd = int(fields[0])
            else:
                comps.append(tuple(int(x) for x in fields))
        except (ValueError, IndexError):
            raise GraphFormatError("malformed witness line", lineno) from None
    if s is None or t is None or dlt is None:
        raise GraphFormatError("witness file must contain S, T and delta lines")
    if odd is not None and odd != len(comps):
        raise GraphFormatError(
            f"witness declares {odd} odd components, lists {len(comps)}"
        )
    return TutteCertificate(s, t, dlt, tuple(comps))
