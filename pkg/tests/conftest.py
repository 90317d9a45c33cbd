import pytest

from splitoff.generators import complete_graph, doubled_cycle
from splitoff.multigraph import MultiGraph

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def k5():
    return complete_graph(5)


@pytest.fixture
def doubled_c4():
    return doubled_cycle(4)


@pytest.fixture
def parallel_u_graph():
    # v = 0 has a double edge to 1 and single edges to 2 and 3
    return MultiGraph.from_edges(4, [(0, 1), (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 3)])


@pytest.fixture
def two_k5_through_v():
    """Two K5-minus-a-matching blocks joined by two edges and through vertex 10.

    Block A is 0..4 without 0-1 and 2-3, block B is 5..9 without 5-6 and 7-8;
    vertex 10 is joined to 0, 1, 5 and 6 (edge ids 18..21).
    """
    edges = []
    for base, (p, q) in ((0, ((0, 1), (2, 3))), (5, ((5, 6), (7, 8)))):
        for a in range(base, base + 5):
            for b in range(a + 1, base + 5):
                if (a, b) not in (p, q):
                    edges.append((a, b))
    edges += [(2, 7), (3, 8)]
    edges += [(10, 0), (10, 1), (10, 5), (10, 6)]
    return MultiGraph.from_edges(11, edges)


@pytest.fixture
def record():
    """Log one PASS/FAIL line for an acceptance criterion and return the verdict."""

    def log(number: int, title: str, ok: bool, detail: str) -> bool:
        line = f"{'PASS' if ok else 'FAIL'} criterion {number} ({title}): {detail}"
        print(line)
        ACCEPTANCE_LINES.append(line)
        return ok

    return log


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
