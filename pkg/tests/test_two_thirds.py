import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_is_2ec, brute_min_2ec_subgraph, multiset_pairs
from splitoff.errors import DomainError, InvariantViolation
from splitoff.generators import complete_graph, doubled_cycle, random_4reg4ec, rational_cost
from splitoff.multigraph import MultiGraph
from splitoff.splitting import SplitStep
from splitoff.two_thirds import TWO_THIRDS, choose_labels, lift_step, solve_two_thirds


def test_choose_labels_skips_inadmissible(two_k5_through_v):
    g = two_k5_through_v
    for eid, c in ((19, 9), (20, 5), (21, 2)):
        g.set_cost(eid, c)
    assert choose_labels(g, 10, 18) == (20, 21, 19)


def test_choose_labels_ties_go_to_smaller_ids(k5):
    e, a, b, c = k5.incident(4)
    assert choose_labels(k5, 4, e) == (a, b, c)


def test_choose_labels_orders_by_cost(two_k5_through_v):
    g = two_k5_through_v
    g.set_cost(20, 1)
    g.set_cost(21, 4)
    x, y, z = choose_labels(g, 10, 18)
    assert (x, y, z) == (21, 20, 19)
    assert g.cost(x) >= g.cost(y)


STEP = SplitStep(center=4, designated=0, x_edge=1, y_edge=2, z_edge=3,
                 created_ux=10, created_yz=11, cost_assigned_yz=Fraction(4))


def test_lift_subdivides_yz():
    assert lift_step(Counter({11: 1, 5: 1}), STEP) == Counter({5: 1, 2: 1, 3: 1})


def test_lift_adds_ear():
    assert lift_step(Counter({5: 1}), STEP) == Counter({5: 1, 2: 1, 1: 1})


def test_lift_rejects_designated():
    with pytest.raises(InvariantViolation):
        lift_step(Counter({10: 1}), STEP)


def test_lift_cost_identity():
    cost = {1: 3, 2: 2, 3: 7, 11: 4}
    delta_sub = -cost[11] + cost[2] + cost[3]
    delta_ear = cost[2] + cost[1]
    assert delta_sub == delta_ear == 5


def test_base_case_two_cheapest():
    g = MultiGraph.from_edges(2, [(0, 1, 5), (0, 1, 1), (0, 1, 2), (0, 1, 3)])
    cert = solve_two_thirds(g, 0)
    assert cert.edges == Counter({1: 1, 2: 1})
    assert cert.cost == 3 and cert.bound == 4
    assert cert.ok and cert.trace_length == 0


def test_k5_unit(k5):
    for e in k5.edge_ids():
        cert = solve_two_thirds(k5, e, verify_levels=True)
        assert cert.ok and cert.bound == 6 and cert.cost <= 6
        assert cert.cost >= brute_min_2ec_subgraph(k5, forbidden=e) == 5


def test_doubled_cycle_with_negative_edge():
    g = doubled_cycle(4)
    neg = g.edge_ids()[2]
    g.set_cost(neg, -10)
    e = g.edge_ids()[0]
    cert = solve_two_thirds(g, e)
    assert cert.bound == Fraction(-8, 3)
    assert cert.cost <= Fraction(-8, 3)
    assert neg in cert.edges


def test_input_is_not_mutated(k5):
    before = [(r.id, r.u, r.v, r.cost) for r in k5.edges()]
    solve_two_thirds(k5, 3)
    assert [(r.id, r.u, r.v, r.cost) for r in k5.edges()] == before


def test_rejects_bad_inputs():
    k5_minus = complete_graph(5)
    k5_minus.remove_edge(9)  # edge 3-4
    with pytest.raises(DomainError, match="vertex 3 has degree 3"):
        solve_two_thirds(k5_minus, 0)
    two_blocks = MultiGraph(10)
    for base in (0, 5):
        for a in range(base, base + 5):
            for b in range(a + 1, base + 5):
                if (a - base, b - base) != (0, 1):
                    two_blocks.add_edge(a, b)
    two_blocks.add_edge(0, 5)
    two_blocks.add_edge(1, 6)
    with pytest.raises(DomainError, match="4-edge-connected"):
        solve_two_thirds(two_blocks, 0)
    with pytest.raises(DomainError):
        solve_two_thirds(complete_graph(5), 99)


@st.composite
def instances(draw, max_n=6):
    n = draw(st.integers(2, max_n))
    rng = random.Random(draw(st.integers(0, 2**32)))
    g = random_4reg4ec(n, rng, rational_cost(-10, 10))
    e = draw(st.sampled_from(g.edge_ids()))
    return g, e


@settings(max_examples=60, deadline=None)
@given(instances())
def test_postconditions_against_oracles(inst):
    g, e = inst
    cert = solve_two_thirds(g, e, verify_levels=True)
    assert e not in cert.edges
    assert all(m == 1 for m in cert.edges.values())
    assert brute_is_2ec(g.vertices(), multiset_pairs(g, cert.edges))
    assert cert.cost == sum((g.cost(i) for i in cert.edges), Fraction(0))
    assert cert.cost <= TWO_THIRDS * (g.total_cost() - g.cost(e))
    assert cert.cost >= brute_min_2ec_subgraph(g, forbidden=e)
    assert cert.checks["lift_levels"]
