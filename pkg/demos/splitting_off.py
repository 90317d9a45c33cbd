"""
Splitting off at a degree-4 vertex
==================================

A pair of edges ``sv, vt`` at ``v`` is split off by replacing it with ``st``.
In a 4-regular 4-edge-connected multigraph some pairs keep every other pair of
vertices 4-edge-connected (admissible pairs) and some do not. This script
inspects a graph with a hidden weak spot.
"""

from splitoff import MultiGraph, admissible_set, complete_split_at, figure1_case, is_admissible_fast
from splitoff.convex_oracle import brute_admissible

# Two blocks, each K5 minus two disjoint edges, linked by two edges and through vertex 10.
edges = []
for base, missing in ((0, {(0, 1), (2, 3)}), (5, {(5, 6), (7, 8)})):
    for a in range(base, base + 5):
        for b in range(a + 1, base + 5):
            if (a, b) not in missing:
                edges.append((a, b))
edges += [(2, 7), (3, 8), (10, 0), (10, 1), (10, 5), (10, 6)]
g = MultiGraph.from_edges(11, edges)
print(g)

# Vertex 10 has four distinct neighbours, so admissibility needs a flow test.
v, e = 10, 18  # e joins 10 and 0
print("neighbourhood shape:", figure1_case(g, v, e).value)
for f in g.incident(v):
    if f != e:
        print(f"  pair ({e}, {f}) to {g.other_end(f, v)}: fast={is_admissible_fast(g, v, e, f)}"
              f" brute={brute_admissible(g, v, e, f)}")

# Pairing 0 with 1 would leave only two edges between the blocks.
members = admissible_set(g, v, e).members
print("admissible partners:", members)

# A complete splitting removes v; the yz edge is priced c(z) - c(x).
g.set_cost(20, 3)
g.set_cost(19, 7)
step = complete_split_at(g, v, e, members[0], members[1])
print(step)
print("yz cost:", g.cost(step.created_yz), "vertices left:", g.number_of_vertices())
