import random

import pytest

from lowhigh.graph import FlowGraph


def make_g1():
    return FlowGraph(4, 1, [(1, 2), (2, 3), (3, 4)])


def make_g2():
    return FlowGraph(5, 1, [(1, 2), (2, 3), (3, 4), (1, 5), (5, 4)])


def make_g3():
    return FlowGraph(3, 1, [(1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2)])


def random_edges(seed, n_lo=5, n_hi=60, d_lo=1.5, d_hi=6.0):
    """Seeded random multigraph edge list, loops and duplicates allowed."""
    rnd = random.Random(seed)
    n = rnd.randint(n_lo, n_hi)
    m = int(rnd.uniform(d_lo, d_hi) * n)
    return n, [(rnd.randint(1, n), rnd.randint(1, n)) for _ in range(m)]


def strongly_connected_graph(n, m, seed):
    rnd = random.Random(seed)
    perm = list(range(1, n + 1))
    rnd.shuffle(perm)
    edges = {(perm[i], perm[(i + 1) % n]) for i in range(n)}
    while len(edges) < m:
        u, v = rnd.randint(1, n), rnd.randint(1, n)
        if u != v:
            edges.add((u, v))
    return FlowGraph(n, 1, sorted(edges))


@pytest.fixture
def g1():
    return make_g1()


@pytest.fixture
def g2():
    return make_g2()


@pytest.fixture
def g3():
    return make_g3()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for name in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[name])
