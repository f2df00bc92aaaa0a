"""Finding spanning path-cycle systems with prescribed path ends.

A spanning path-cycle system with respect to an even vertex set W covers
every vertex by disjoint paths and cycles, with the path end-vertices
being exactly W.  Existence is equivalent to a factor with degree 1 on W
and 2 elsewhere, which the solver finds through the gadget reduction to
perfect matching.
"""

from pathcycle import Graph, parse_graph, serialize_graph, solve

# A hexagon with no terminals: the only system is the cycle itself.
c6 = Graph(6, [(i, (i + 1) % 6) for i in range(6)])
print("C6, W = {}:")
print(solve(c6, []).format())

# K4 with terminals 0 and 1: one spanning path from 0 to 1.
k4 = Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
system = solve(k4, [0, 1])
print("K4, W = {0, 1}:")
print(system.format())
system.validate(k4, [0, 1])

# Text round trip: the file format is canonical, so systems and graphs
# are reproducible byte for byte.
text = serialize_graph(k4)
print("K4 serialized:")
print(text)
assert parse_graph(text) == k4

# A five-cycle with terminals at distance two is infeasible: vertex 1
# would need degree 2 using only its edges to the two degree-1 terminals.
c5 = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
print("C5, W = {0, 2}:", solve(c5, [0, 2]))

# Larger feasible example: two terminals on a Moebius-Kantor-like graph.
g = Graph(8, [(i, (i + 1) % 8) for i in range(8)] + [(i, (i + 4) % 8) for i in range(4)])
system = solve(g, [0, 3])
print("wheel-like graph, W = {0, 3}:")
print(system.format())
