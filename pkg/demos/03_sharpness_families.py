"""The sharpness families: instances where weaker hypotheses fail.

The existence theorem needs three things of an r-regular graph: edge
connectivity r, K_{1,r}-freeness, and a terminal set whose vertices are
never two-deep in any neighborhood.  Each generator below relaxes exactly
one hypothesis and emits a graph, terminals, and a witness pair of
deficiency -2 proving no spanning path-cycle system exists.
"""

import time

from pathcycle import (
    degree_spec_from_terminals,
    edge_connectivity,
    evaluate_pair,
    find_induced_star,
    gen_prop1_bipartite,
    gen_prop1_odd,
    gen_prop2_r4,
    solve,
    verify_claims,
)

# Edge connectivity one below the degree (odd r): hubs plus 2r+2 blocks.
inst = gen_prop1_odd(5, 6)
print(f"prop1-odd(5,6): {inst.graph.n} vertices, |W| = {len(inst.w)}")
print("  claims:", ", ".join(inst.claims))
lam, cut = edge_connectivity(inst.graph)
print("  computed edge connectivity:", lam, "(one sharp cut has", len(cut), "edges)")

s, t, expected = inst.witness
f = degree_spec_from_terminals(inst.graph, inst.w)
cert = evaluate_pair(inst.graph, f, s, t)
print(f"  witness: |S| = {len(cert.s)}, T empty, {cert.q} odd blocks,"
      f" delta = {cert.delta}")

t0 = time.time()
print("  solve:", solve(inst.graph, inst.w), f"({time.time() - t0:.2f}s)")

# Missing K_{1,r}-freeness: a bipartite instance; both terminals on one
# side make the two sides' degree sums disagree, no witness pair needed.
bip = gen_prop1_bipartite(4, 12)
star = find_induced_star(bip.graph, 4)
print(f"prop1-bipartite(4,12): induced star at vertex {star[0]},"
      f" leaves {star[1]}")
print("  solve:", solve(bip.graph, bip.w))

# Sharp terminal condition (r = 4): some neighborhoods carry two
# terminals, and that is already too many.
r4 = gen_prop2_r4(6)
print(f"prop2-r4(6): {r4.graph.n} vertices, |W| = {len(r4.w)}")
reports = verify_claims(r4)
for rep in reports:
    print(" ", rep.format_line(), f"[{rep.detail}]" if rep.detail else "")
assert all(rep.holds for rep in reports)
print("  solve:", solve(r4.graph, r4.w))
