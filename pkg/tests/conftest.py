import itertools
import random

import pytest

from pccycles import ColoredDigraph, ColoredGraph, is_pc_cycle


def random_graph(rng: random.Random, n: int, c: int, density: float = 0.5) -> ColoredGraph:
    edges = [
        (u, v, rng.randint(1, c))
        for u, v in itertools.combinations(range(n), 2)
        if rng.random() < density
    ]
    return ColoredGraph(n, c, tuple(edges))


def random_digraph(rng: random.Random, n: int, c: int, density: float = 0.5) -> ColoredDigraph:
    arcs = [
        (u, v, rng.randint(1, c))
        for u in range(n)
        for v in range(n)
        if u != v and rng.random() < density
    ]
    return ColoredDigraph(n, c, tuple(arcs))


def brute_force_pc_cycles(G):
    """Every PC cycle as a vertex tuple, by trying all vertex sequences."""
    low = 2 if G.directed else 3
    out = []
    for k in range(low, G.n + 1):
        for seq in itertools.permutations(range(G.n), k):
            if is_pc_cycle(G, seq):
                out.append(seq)
    return out


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def alt_c4():
    return ColoredGraph(4, 2, ((0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 3, 2)))


@pytest.fixture
def mono_triangle():
    return ColoredGraph(3, 2, ((0, 1, 1), (1, 2, 1), (0, 2, 1)))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
