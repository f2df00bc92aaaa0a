import itertools
import random

import pytest

from pathcycle.graphs import Graph, components_after_removal
from pathcycle.verify import (
    check_regular,
    check_terminal_set,
    edge_connectivity,
    essential_edge_connectivity_at_least,
    find_induced_star,
    path_system_criterion,
)

from .conftest import (
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    random_connected_graph,
    star_graph,
)


# -- regularity ----------------------------------------------------------------


def test_regular_cycle():
    assert check_regular(cycle_graph(5), 2).holds


def test_regular_path_fails_at_endpoint():
    rep = check_regular(path_graph(3), 2)
    assert rep.holds is False
    vertex, deg = rep.witness
    assert deg == 1 and path_graph(3).degree(vertex) == 1


# -- edge connectivity -----------------------------------------------------------


def test_edge_connectivity_examples():
    assert edge_connectivity(cycle_graph(6))[0] == 2
    assert edge_connectivity(complete_graph(4))[0] == 3


def test_edge_connectivity_disconnected_is_zero():
    g = Graph(4, [(0, 1), (2, 3)])
    assert edge_connectivity(g)[0] == 0


def test_edge_connectivity_cut_witness_disconnects():
    rng = random.Random(3)
    for _ in range(15):
        g = random_connected_graph(rng, 8, 0.3)
        lam, cut = edge_connectivity(g)
        assert lam <= min(g.degree(v) for v in range(g.n))
        assert len(cut) == lam
        kept = [e for e in g.edges if e not in set(cut)]
        assert len(components_after_removal(Graph(g.n, kept), [])) >= 2


# -- essential edge connectivity --------------------------------------------------


def _naive_essential_at_least(g, k):
    for j in range(1, k):
        for combo in itertools.combinations(g.edges, j):
            kept = [e for e in g.edges if e not in set(combo)]
            comps = components_after_removal(Graph(g.n, kept), [])
            if sum(1 for c in comps if len(c) >= 2) >= 2:
                return False
    return True


def test_essential_k4_holds():
    rep = essential_edge_connectivity_at_least(complete_graph(4), 3)
    assert rep.holds is True
    assert _naive_essential_at_least(complete_graph(4), 3)


def test_essential_bridge_between_triangles():
    g = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
    rep = essential_edge_connectivity_at_least(g, 2)
    assert rep.holds is False
    assert rep.witness == ((2, 3),)
    # witness re-applied really splits two big components
    kept = [e for e in g.edges if e not in set(rep.witness)]
    comps = components_after_removal(Graph(g.n, kept), [])
    assert sum(1 for c in comps if len(c) >= 2) >= 2


def test_essential_star_never_fails():
    rep = essential_edge_connectivity_at_least(star_graph(5), 99)
    assert rep.holds is True


def test_essential_matches_naive_on_random_graphs():
    rng = random.Random(17)
    for _ in range(12):
        g = random_connected_graph(rng, 7, 0.35)
        for k in (2, 3):
            rep = essential_edge_connectivity_at_least(g, k)
            assert rep.holds == _naive_essential_at_least(g, k)


def test_essential_undecided_beyond_bounds():
    g = cycle_graph(12)
    rep = essential_edge_connectivity_at_least(g, 9, max_k=4, max_edges=5)
    assert rep.holds is None


# -- induced stars ----------------------------------------------------------------


def test_star_k4_has_no_two_independent_neighbors():
    assert find_induced_star(complete_graph(4), 2) is None


def test_star_detects_claw_center():
    center, leaves = find_induced_star(star_graph(3), 3)
    assert center == 0 and leaves == (1, 2, 3)


def test_petersen_has_claw():
    g = petersen_graph()
    found = find_induced_star(g, 3)
    assert found is not None
    center, leaves = found
    for leaf in leaves:
        assert g.has_edge(center, leaf)
    for a, b in itertools.combinations(leaves, 2):
        assert not g.has_edge(a, b)


def test_star_witness_is_independent_on_random_graphs():
    rng = random.Random(23)
    for _ in range(20):
        g = random_connected_graph(rng, 8, 0.4)
        for m in (2, 3, 4):
            found = find_induced_star(g, m)
            if found is None:
                continue
            center, leaves = found
            assert len(leaves) == m
            assert all(g.has_edge(center, x) for x in leaves)
            assert all(
                not g.has_edge(a, b) for a, b in itertools.combinations(leaves, 2)
            )


# -- terminal sets -----------------------------------------------------------------


def test_terminals_distance3_holds_on_c7():
    assert check_terminal_set(cycle_graph(7), [0, 3], "distance3").holds


def test_terminals_distance2_fails_both_modes():
    g = cycle_graph(7)
    rep = check_terminal_set(g, [0, 2], "distance3")
    assert rep.holds is False
    a, b, d = rep.witness
    assert d == 2
    rep2 = check_terminal_set(g, [0, 2], "nbhd1")
    assert rep2.holds is False
    assert rep2.witness[0] == 1  # the middle vertex sees both terminals


def test_terminals_empty_holds_both_modes():
    g = cycle_graph(5)
    assert check_terminal_set(g, [], "distance3").holds
    assert check_terminal_set(g, [], "nbhd1").holds


def test_terminals_odd_size_fails():
    assert check_terminal_set(cycle_graph(7), [0], "distance3").holds is False


def test_terminals_outside_graph():
    with pytest.raises(ValueError):
        check_terminal_set(cycle_graph(4), [9], "nbhd1")


def test_distance3_implies_nbhd1():
    rng = random.Random(31)
    hits = 0
    while hits < 25:
        g = random_connected_graph(rng, 9, 0.25)
        size = rng.choice([2, 4])
        w = tuple(sorted(rng.sample(range(g.n), size)))
        if check_terminal_set(g, w, "distance3").holds:
            hits += 1
            assert check_terminal_set(g, w, "nbhd1").holds


# -- path-system criterion -----------------------------------------------------------


def test_criterion_holds_on_cycles():
    for n in (3, 5, 8):
        assert path_system_criterion(cycle_graph(n)).holds


def test_criterion_fails_on_branching_tree():
    g = Graph(4, [(0, 1), (0, 2), (0, 3)])
    rep = path_system_criterion(g)
    assert rep.holds is False
    s, comps = rep.witness
    assert s == (0,) and comps == 3


def test_criterion_fails_on_star_center():
    rep = path_system_criterion(star_graph(3))
    assert rep.holds is False and rep.witness[0] == (0,)


def test_criterion_undecided_beyond_bound():
    assert path_system_criterion(cycle_graph(20)).holds is None
