"""
Cubic 3-edge-connected graphs within 7/8 of the edge cost
=========================================================

Pick a 2-factor ``F`` that meets every 3- and 4-edge cut, so that contracting
its cycles leaves a 5-edge-connected graph. Two candidate answers follow:
``F`` plus a Christofides tour of the contracted graph, and the 2/3 algorithm
run on the point that is 1/2 on ``F`` and 1 on the matching. The cheaper one
costs at most ``7/8 c(G)``.
"""

import random

from splitoff import find_good_two_factor, solve_cubic_seven_eighths
from splitoff.generators import petersen, random_cubic_3ec, rational_cost

g = petersen()
tf = find_good_two_factor(g)
print("2-factor cycles:", tf.cycles)
print("contracted graph:", tf.contracted, "5-edge-connected:", tf.five_ec)

cert = solve_cubic_seven_eighths(g)
print("cost", cert.cost, "bound", cert.bound)
print("H1 (factor + tour):", cert.details["cost_h1"], " H2 (half-integral route):", cert.details["cost_h2"])
print("checks:", cert.checks)

rng = random.Random(3)
for n in (8, 12, 16):
    h = random_cubic_3ec(n, rng, rational_cost(0, 10))
    c = solve_cubic_seven_eighths(h, try_all=True)
    print(f"n={n}: cost {c.cost} <= {c.bound} ({float(c.cost / c.bound):.3f} of the bound)")
