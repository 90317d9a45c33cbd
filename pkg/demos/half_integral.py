"""
From a half-integral LP point to a 2ECM solution
================================================

Given a half-integral point ``x`` of the subtour LP with metric costs, doubling
``x`` gives a 4-regular 4-edge-connected multigraph. Running the 2/3
algorithm on it yields a 2-edge-connected multisubgraph of cost at most
``4/3 c^T x``.
"""

from fractions import Fraction

from splitoff import (
    HalfIntegralSolution,
    MultiGraph,
    brute_optimal_2ecm,
    metric_complete_instance,
    solve_half_integral,
    support_multigraph,
    validate_solution,
)
from splitoff.half_integral import expand_to_raw, solution_on_closure

# A raw network: a hexagon with two chords, priced by length.
raw = MultiGraph.from_edges(6, [
    (0, 1, 2), (1, 2, 2), (2, 3, 2), (3, 4, 2), (4, 5, 2), (5, 0, 2), (0, 3, 3), (1, 4, 5),
])
inst = metric_complete_instance(raw)

# Triangles {0, 2, 4} and {1, 3, 5} at 1/2 plus the matching 0-1, 2-3, 4-5 at 1.
half = Fraction(1, 2)
x = {(0, 1): 1, (2, 3): 1, (4, 5): 1}
x.update({p: half for p in [(0, 2), (2, 4), (0, 4), (1, 3), (3, 5), (1, 5)]})
s = solution_on_closure(inst, x)
report = validate_solution(s)
print("feasible:", report.feasible, "metric:", report.metric_ok, "min cut:", report.min_cut)

g = support_multigraph(s)
print("support:", g.number_of_vertices(), "vertices,", g.number_of_edges(), "edge records")

cert = solve_half_integral(s, best_edge=True)
print("c^T x =", s.objective(), " output cost =", cert.cost, " bound 4/3 c^T x =", cert.bound)
print("pairs used:", dict(cert.edges))

# Map closure pairs back to walks in the raw network.
walks = expand_to_raw(inst, cert.edges)
print("raw edges used:", dict(walks))

# This x is feasible but not LP-optimal (c^T x exceeds the optimum), so only
# the bound against c^T x is promised; against the optimum it is not.
_, opt = brute_optimal_2ecm(inst.dist, s.n)
print("optimal 2ECM cost:", opt)

# A half-integral point need not come from a graph: give it directly.
k5 = HalfIntegralSolution(5, {(a, b): half for a in range(5) for b in range(a + 1, 5)},
                          {(a, b): 1 for a in range(5) for b in range(a + 1, 5)})
print("half-K5:", solve_half_integral(k5).cost, "<=", Fraction(4, 3) * k5.objective())
