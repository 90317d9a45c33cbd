"""Acceptance gate: one test per criterion, each logging a PASS/FAIL line.

Every bound is checked with exact rationals; graph properties are re-derived
with the brute-force references in ``oracles.py``.
"""

import random
import time
from collections import Counter
from fractions import Fraction

from corpus import cost_matrix, four_regular_corpus, half_integral_corpus, is_lp_optimal
from oracles import brute_is_2ec, multiset_pairs
from splitoff.convex_oracle import brute_admissible, brute_optimal_2ecm, convex_decomposition
from splitoff.cubic78 import solve_cubic_seven_eighths
from splitoff.generators import (
    circulant,
    k4,
    k33,
    mobius_kantor,
    petersen,
    prism,
    random_cubic_3ec,
    rational_cost,
    with_random_costs,
)
from splitoff.half_integral import solve_half_integral
from splitoff.splitting import Figure1Case, complete_split_at, figure1_case, is_admissible_fast
from splitoff.two_thirds import lift_step, solve_two_thirds

TWO_THIRDS = Fraction(2, 3)
FOUR_THIRDS = Fraction(4, 3)


def test_criterion_1_two_thirds_bound(record):
    corpus = four_regular_corpus()
    start = time.perf_counter()
    runs, failures = 0, []
    for idx, g in enumerate(corpus):
        for e in g.edge_ids():
            runs += 1
            cert = solve_two_thirds(g, e)
            h = cert.edges
            ok = (
                e not in h
                and all(g.has_edge(i) and m == 1 for i, m in h.items())
                and brute_is_2ec(g.vertices(), multiset_pairs(g, h))
                and cert.cost == sum((g.cost(i) for i in h), Fraction(0))
                and cert.cost <= TWO_THIRDS * (g.total_cost() - g.cost(e))
            )
            if not ok:
                failures.append((idx, e))
    elapsed = time.perf_counter() - start
    sizes = sorted({g.number_of_vertices() for g in corpus})
    ok = not failures and len(corpus) >= 200 and sizes == list(range(2, 9)) and elapsed < 60
    assert record(
        1, "two-thirds bound, exhaustive small sweep", ok,
        f"{len(corpus)} instances, n in {sizes[0]}..{sizes[-1]}, {runs} designated edges, "
        f"{len(failures)} failures, {elapsed:.1f} s (budget 60 s)",
    ), failures[:5]


def test_criterion_2_convex_identity(record):
    corpus = [g for g in four_regular_corpus() if g.number_of_vertices() <= 7]
    start = time.perf_counter()
    runs, members, failures = 0, 0, []
    for idx, g in enumerate(corpus):
        target = {i: TWO_THIRDS for i in g.edge_ids()}
        for e in g.edge_ids():
            runs += 1
            comb = convex_decomposition(g, e)
            coord = Counter()
            ok = sum(w for w, _ in comb.items) == 1 and all(w > 0 for w, _ in comb.items)
            for w, h in comb.items:
                members += 1
                ok &= all(m == 1 for m in h.values())
                ok &= brute_is_2ec(g.vertices(), multiset_pairs(g, h))
                for i in h:
                    coord[i] += w
            ok &= dict(coord) == {i: c for i, c in target.items() if i != e}
            if not ok:
                failures.append((idx, e))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 120
    assert record(
        2, "convex decomposition identity", ok,
        f"{len(corpus)} instances with n <= 7, {runs} designated edges, {members} subgraphs, "
        f"{len(failures)} failures, {elapsed:.1f} s (budget 120 s)",
    ), failures[:5]


def test_criterion_3_four_thirds_bound(record):
    corpus = half_integral_corpus()
    start = time.perf_counter()
    failures, worst, small = [], Fraction(0), 0
    for idx, s in enumerate(corpus):
        cert = solve_half_integral(s)
        pairs = [p for p, m in cert.edges.items() for _ in range(m)]
        ok = (
            cert.cost <= FOUR_THIRDS * s.objective()
            and all(m <= 2 for m in cert.edges.values())
            and brute_is_2ec(range(s.n), pairs)
        )
        if s.n <= 6:
            small += 1
            _, opt = brute_optimal_2ecm(cost_matrix(s), s.n)
            ok &= is_lp_optimal(s) and opt <= cert.cost and cert.cost <= FOUR_THIRDS * opt
            if opt > 0:
                worst = max(worst, cert.cost / opt)
        if not ok:
            failures.append(idx)
    elapsed = time.perf_counter() - start
    ok = not failures and len(corpus) >= 100 and max(s.n for s in corpus) <= 10 and elapsed < 120
    assert record(
        3, "four-thirds bound on half-integral points", ok,
        f"{len(corpus)} points (n <= 10, {small} with n <= 6 against the exact optimum), "
        f"worst ratio to optimum {worst} = {float(worst):.3f}, {len(failures)} failures, "
        f"{elapsed:.1f} s (budget 120 s)",
    ), failures[:5]


def test_criterion_4_admissibility_oracle(record):
    corpus = four_regular_corpus()
    start = time.perf_counter()
    triples, disagreements = 0, []
    seen = {case: set() for case in Figure1Case}
    for idx, g in enumerate(corpus):
        if g.number_of_vertices() < 3:
            continue  # four parallel edges: nothing to split
        for v in g.vertices():
            for e in g.incident(v):
                seen[figure1_case(g, v, e)].add(idx)
                for f in g.incident(v):
                    if f == e:
                        continue
                    triples += 1
                    if is_admissible_fast(g, v, e, f) != brute_admissible(g, v, e, f):
                        disagreements.append((idx, v, e, f))
    elapsed = time.perf_counter() - start
    coverage = {case.value: len(ids) for case, ids in seen.items()}
    ok = not disagreements and min(coverage.values()) >= 5
    assert record(
        4, "admissibility oracle equivalence", ok,
        f"{triples} (instance, v, e, f) triples, {len(disagreements)} disagreements, "
        f"instances per configuration {coverage}, {elapsed:.1f} s",
    ), disagreements[:5]


def test_criterion_5_seven_eighths_bound(record):
    named = [("Petersen", petersen()), ("K4", k4()), ("K3,3", k33()), ("prism", prism()),
             ("Moebius-Kantor", mobius_kantor())]
    rng = random.Random(78)
    variants = []
    for name, g in named:
        for _ in range(3):
            variants.append((f"{name} random costs", with_random_costs(g, rng, rational_cost(0, 10))))
    for n in (4, 6, 8, 10, 12, 14, 16):
        variants.append((f"random cubic n={n}", random_cubic_3ec(n, rng, rational_cost(0, 10))))
    start = time.perf_counter()
    failures, petersen_cost = [], None
    for name, g in named + variants:
        cert = solve_cubic_seven_eighths(g)
        ok = (
            cert.cost <= Fraction(7, 8) * g.total_cost()
            and all(cert.checks.values())
            and all(m <= 2 for m in cert.edges.values())
            and brute_is_2ec(g.vertices(), multiset_pairs(g, cert.edges))
        )
        if name == "Petersen":
            petersen_cost = cert.cost
        if not ok:
            failures.append(name)
    elapsed = time.perf_counter() - start
    ok = not failures and len(variants) >= 20 and petersen_cost <= 13 and elapsed < 60
    assert record(
        5, "seven-eighths bound on cubic graphs", ok,
        f"5 named graphs + {len(variants)} random-cost variants, Petersen unit cost {petersen_cost}, "
        f"{len(failures)} failures, {elapsed:.1f} s (budget 60 s)",
    ), failures


def test_criterion_6_quadratic_scaling(record):
    sizes = (250, 500, 1000, 2000)
    times = []
    for n in sizes:
        g = circulant(n)
        best = None
        for _ in range(2):
            t0 = time.perf_counter()
            cert = solve_two_thirds(g, 0)
            dt = time.perf_counter() - t0
            best = dt if best is None else min(best, dt)
        assert cert.bound_holds
        times.append(best)
    ratios = [b / a for a, b in zip(times, times[1:])]
    ok = all(r <= 5 for r in ratios) and times[-1] < 30
    assert record(
        6, "quadratic scaling on circulants", ok,
        "times " + ", ".join(f"n={n}: {t:.2f} s" for n, t in zip(sizes, times))
        + "; doubling ratios " + ", ".join(f"{r:.2f}" for r in ratios) + " (limit 5, n=2000 under 30 s)",
    )


def _replay_levels(g, e, cert):
    """Rebuild every recursion level from the trace, then lift the base answer with oracle checks.

    Returns (all checks passed, number of levels checked).
    """
    trace = cert.details["trace"]
    price = {i: g.cost(i) for i in g.edge_ids()}
    levels = []
    work = g.copy()
    designated = e
    for step in trace:
        levels.append(work.copy())
        again = complete_split_at(work, step.center, designated, step.x_edge, step.y_edge, check=False)
        if again != step:
            return False, 0
        price[step.created_ux] = Fraction(0)
        price[step.created_yz] = step.cost_assigned_yz
        designated = step.created_ux
    rest = sorted((f for f in work.edge_ids() if f != designated), key=lambda f: (price[f], f))
    h = Counter(rest[:2])
    ok = brute_is_2ec(work.vertices(), multiset_pairs(work, h))
    for step, level in zip(reversed(trace), reversed(levels)):
        child_cost = sum((price[i] for i in h), Fraction(0))
        h = lift_step(h, step)
        ok &= brute_is_2ec(level.vertices(), multiset_pairs(level, h))
        ok &= sum((price[i] for i in h), Fraction(0)) == child_cost + price[step.x_edge] + price[step.y_edge]
    return ok and h == cert.edges, len(trace) + 1


def test_criterion_7_lift_preservation(record):
    corpus = four_regular_corpus()
    start = time.perf_counter()
    runs, level_checks, failures = 0, 0, []
    for idx, g in enumerate(corpus):
        for e in g.edge_ids():
            runs += 1
            cert = solve_two_thirds(g, e, verify_levels=True)
            ok, count = _replay_levels(g, e, cert)
            level_checks += count
            if not (ok and cert.checks["lift_levels"]):
                failures.append((idx, e))
    elapsed = time.perf_counter() - start
    assert record(
        7, "lift preserves 2-edge-connectivity at every level", not failures,
        f"{runs} runs, {level_checks} levels checked by cut enumeration and by the debug mode, "
        f"{len(failures)} failures, {elapsed:.1f} s",
    ), failures[:5]
