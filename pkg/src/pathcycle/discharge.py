"""Runtime verifier for the charge-redistribution argument.

Given disjoint (S, T) and terminals W on an r-regular instance, assigns
initial charges

    phi(D) = 0 for each f-odd component D,
    phi(x) = 1 on S_1 = S n W,   2 on S_2 = S - W,
    phi(y) = deg_{G-S-U}(y) on T,

then moves charge along edges: S_1 sends 1/r to adjacent T vertices and
odd components, S_2 sends (2r-1)/(r(r-1)) to adjacent T vertices and 1/r
to odd components, and each odd component sends (r-1)/r to each adjacent
T vertex.  All arithmetic is exact: charges are integer multiples of
1/(r(r-1)) throughout, exposed as fractions.

The report checks, unconditionally, conservation of the total charge, the
identity  sum_{S u T} phi = f(S) + deg_{G-S}(T) - e(T, U),  and the exact
reconstruction of delta(S, T) from final charges; and, flagged with their
preconditions, the local lower bounds phi*(x) >= 0 on S, phi*(y) >= 2 on
T, and phi*(D) >= 1 - e(T, D), whose conjunction forces delta >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .factor import degree_spec_from_terminals
from .graphs import Graph, as_vertex_set
from .tutte import delta as tutte_delta
from .tutte import odd_components
from .verify import check_regular, edge_connectivity, find_induced_star


@dataclass(frozen=True)
class RuleConstants:
    """The three transfer amounts for a given degree r, as exact fractions."""

    r: int
    s1_to_neighbor: Fraction        # rule for S_1 vertices, and S to components
    s2_to_terminal: Fraction        # rule for S_2 vertices toward T
    component_to_terminal: Fraction
    claim4_single_neighbor: Fraction  # bound value when deg_{G-S-U}(y) = 1

    @property
    def inequalities_hold(self) -> bool:
        return (
            self.s1_to_neighbor
            <= self.s2_to_terminal
            <= self.component_to_terminal
        )


def rule_constants(r: int) -> RuleConstants:
    if r < 2:
        raise ValueError("degree must be at least 2")
    rr = r * (r - 1)
    return RuleConstants(
        r=r,
        s1_to_neighbor=Fraction(1, r),
        s2_to_terminal=Fraction(2 * r - 1, rr),
        component_to_terminal=Fraction(r - 1, r),
        claim4_single_neighbor=Fraction(3 * r * r - 5 * r + 1, rr),
    )


@dataclass(frozen=True)
class GraphHypotheses:
    """Instance-level preconditions of the charge-bound claims."""

    r: int
    regular: bool
    star_free: bool
    edge_connected: bool  # lambda(G) >= r

    @classmethod
    def compute(cls, g: Graph, r: int) -> "GraphHypotheses":
        lam, _ = edge_connectivity(g)
        return cls(
            r=r,
            regular=check_regular(g, r).holds is True,
            star_free=find_induced_star(g, r) is None,
            edge_connected=lam >= r,
        )


@dataclass(frozen=True)
class ChargeState:
    """Initial and final charges of one discharge run."""

    s1: tuple[int, ...]
    s2: tuple[int, ...]
    t: tuple[int, ...]
    u: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    initial_vertex: dict[int, Fraction]
    initial_component: tuple[Fraction, ...]
    final_vertex: dict[int, Fraction]
    final_component: tuple[Fraction, ...]

    @property
    def total_initial(self) -> Fraction:
        return sum(self.initial_vertex.values(), Fraction(0)) + sum(
            self.initial_component, Fraction(0)
        )

    @property
    def total_final(self) -> Fraction:
        return sum(self.final_vertex.values(), Fraction(0)) + sum(
            self.final_component, Fraction(0)
        )


@dataclass(frozen=True)
class ClaimCheck:
    name: str
    holds: bool
    guaranteed: bool
    missing_preconditions: tuple[str, ...]
    first_violation: object = None

    def format_line(self) -> str:
        status = "PASS" if self.holds else f"FAIL {self.first_violation!r}"
        if self.guaranteed:
            note = "guaranteed by preconditions"
        else:
            note = "not guaranteed: missing " + ", ".join(self.missing_preconditions)
        return f"{self.name}: {status} ({note})"


@dataclass(frozen=True)
class DischargeReport:
    r: int
    state: ChargeState
    conservation_ok: bool
    identity_lhs: Fraction
    identity_rhs: int
    t_independent: bool
    terminal_nbhd1: bool
    hypotheses: GraphHypotheses
    claim_s_nonnegative: ClaimCheck
    claim_t_at_least_two: ClaimCheck
    claim_component_bound: ClaimCheck
    derived_delta: int
    direct_delta: int

    @property
    def identity_ok(self) -> bool:
        return self.identity_lhs == self.identity_rhs

    @property
    def delta_consistent(self) -> bool:
        return self.derived_delta == self.direct_delta

    @property
    def all_bounds_hold(self) -> bool:
        return (
            self.claim_s_nonnegative.holds
            and self.claim_t_at_least_two.holds
            and self.claim_component_bound.holds
        )

    def format(self) -> str:
        lines = [
            f"conservation: {'PASS' if self.conservation_ok else 'FAIL'}"
            f" (total = {self.state.total_initial})",
            f"charge-identity: {'PASS' if self.identity_ok else 'FAIL'}"
            f" ({self.identity_lhs} vs {self.identity_rhs})",
            self.claim_s_nonnegative.format_line(),
            self.claim_t_at_least_two.format_line(),
            self.claim_component_bound.format_line(),
            f"delta: {self.derived_delta}"
            f" (direct evaluation {'agrees' if self.delta_consistent else 'DISAGREES'})",
        ]
        if self.all_bounds_hold:
            lines.append("conclusion: all bounds hold, delta >= 0 forced")
        return "\n".join(lines) + "\n"


def discharge(
    g: Graph,
    w: Iterable[int],
    s: Iterable[int],
    t: Iterable[int],
    r: int,
    *,
    hypotheses: GraphHypotheses | None = None,
) -> DischargeReport:
    """Run the discharge procedure and check every claimed bound.

    ``r`` must be at least 4: the rule-amount ordering that the bounds rely
    on fails below that.  ``hypotheses`` may carry precomputed instance
    checks (the edge-connectivity check is the expensive one); when absent
    they are computed here.
    """
    if r < 4:
        raise ValueError("discharge rules require r >= 4")
    ws = as_vertex_set(g, w, "terminal set")
    f = degree_spec_from_terminals(g, ws)
    ss = as_vertex_set(g, s, "S")
    ts = as_vertex_set(g, t, "T")
    if set(ss) & set(ts):
        raise ValueError("S and T overlap")
    if hypotheses is None:
        hypotheses = GraphHypotheses.compute(g, r)

    q, comps = odd_components(g, f, ss, ts)
    comp_id = {}
    for j, comp in enumerate(comps):
        for v in comp:
            comp_id[v] = j
    u_set = frozenset(comp_id)
    s_set, t_set = set(ss), set(ts)
    wset = set(ws)
    s1 = tuple(v for v in ss if v in wset)
    s2 = tuple(v for v in ss if v not in wset)

    scale = r * (r - 1)
    amt_s1 = r - 1              # 1/r
    amt_s2_t = 2 * r - 1        # (2r-1)/(r(r-1))
    amt_s_comp = r - 1          # 1/r
    amt_comp_t = (r - 1) ** 2   # (r-1)/r

    init_v: dict[int, int] = {}
    for v in s1:
        init_v[v] = scale
    for v in s2:
        init_v[v] = 2 * scale
    for y in ts:
        outside = sum(
            1 for x in g.neighbors(y) if x not in s_set and x not in u_set
        )
        init_v[y] = outside * scale
    init_c = [0] * q

    final_v = dict(init_v)
    final_c = list(init_c)
    for x, y in g.edges:
        for a, b in ((x, y), (y, x)):
            if a in s_set:
                one = a in wset
                if b in t_set:
                    amt = amt_s1 if one else amt_s2_t
                    final_v[a] -= amt
                    final_v[b] += amt
                elif b in u_set:
                    final_v[a] -= amt_s_comp
                    final_c[comp_id[b]] += amt_s_comp
            elif a in u_set and b in t_set:
                final_c[comp_id[a]] -= amt_comp_t
                final_v[b] += amt_comp_t

    state = ChargeState(
        s1=s1,
        s2=s2,
        t=ts,
        u=tuple(sorted(u_set)),
        components=tuple(comps),
        initial_vertex={v: Fraction(c, scale) for v, c in init_v.items()},
        initial_component=tuple(Fraction(c, scale) for c in init_c),
        final_vertex={v: Fraction(c, scale) for v, c in final_v.items()},
        final_component=tuple(Fraction(c, scale) for c in final_c),
    )

    conservation = sum(init_v.values()) + sum(init_c) == sum(final_v.values()) + sum(
        final_c
    )

    deg_gs_t = sum(1 for y in ts for x in g.neighbors(y) if x not in s_set)
    e_t_u = sum(1 for y in ts for x in g.neighbors(y) if x in u_set)
    identity_lhs = Fraction(sum(init_v.values()), scale)
    identity_rhs = f.subset_sum(ss) + deg_gs_t - e_t_u

    t_independent = all(not g.has_edge(a, b) for a in ts for b in ts if a < b)
    nbhd1 = all(
        sum(1 for x in g.neighbors(v) if x in wset) <= 1 for v in range(g.n)
    )

    def claim(name, holds, first, needed: dict[str, bool]) -> ClaimCheck:
        missing = tuple(k for k, ok in needed.items() if not ok)
        return ClaimCheck(name, holds, not missing, missing, first)

    viol3 = next((v for v in ss if final_v[v] < 0), None)
    claim3 = claim(
        "claim-s-nonnegative",
        viol3 is None,
        None if viol3 is None else (viol3, Fraction(final_v[viol3], scale)),
        {
            "r-regular": hypotheses.regular,
            "star-free": hypotheses.star_free,
            "T independent": t_independent,
        },
    )
    viol4 = next((y for y in ts if final_v[y] < 2 * scale), None)
    claim4 = claim(
        "claim-t-at-least-two",
        viol4 is None,
        None if viol4 is None else (viol4, Fraction(final_v[viol4], scale)),
        {
            "r-regular": hypotheses.regular,
            "terminal nbhd1": nbhd1,
        },
    )
    e_t_comp = [0] * q
    for y in ts:
        for x in g.neighbors(y):
            j = comp_id.get(x)
            if j is not None:
                e_t_comp[j] += 1
    viol5 = next(
        (j for j in range(q) if final_c[j] < scale * (1 - e_t_comp[j])),
        None,
    )
    claim5 = claim(
        "claim-component-bound",
        viol5 is None,
        None if viol5 is None else (comps[viol5], Fraction(final_c[viol5], scale)),
        {"r-edge-connected": hypotheses.edge_connected},
    )

    # delta reconstructed from final charges: exact division by the scale
    total_final = sum(final_v.values()) + sum(final_c)
    numerator = total_final + scale * (e_t_u - f.subset_sum(ts) - q)
    if numerator % scale != 0:
        raise AssertionError("reconstructed deficiency is not an integer")
    derived = numerator // scale
    direct = tutte_delta(g, f, ss, ts)

    return DischargeReport(
        r=r,
        state=state,
        conservation_ok=conservation,
        identity_lhs=identity_lhs,
        identity_rhs=identity_rhs,
        t_independent=t_independent,
        terminal_nbhd1=nbhd1,
        hypotheses=hypotheses,
        claim_s_nonnegative=claim3,
        claim_t_at_least_two=claim4,
        claim_component_bound=claim5,
        derived_delta=derived,
        direct_delta=direct,
    )
