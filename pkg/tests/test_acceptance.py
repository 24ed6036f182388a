"""Exit criteria for the package; one pass/fail line per criterion is printed
in the terminal summary."""

import itertools
import math
import random
import time

import pytest

from conftest import random_digraph, random_graph
from pccycles import (
    ColoredGraph,
    build,
    color_degree,
    conjecture_report,
    decide_pc_undirected,
    delta_mon,
    delta_out_mon,
    double,
    find_pc_cycle_directed,
    find_pc_cycle_exhaustive,
    gsy_bounds,
    is_pc_cycle,
    lemma_order_bound,
    literal_lemma_bound,
    lower_bound_d,
    max_pcfree_delta,
    merge_colors,
    merged_upper_bound,
    order_of,
)
from pccycles.detect import _Counter, _cycles

RESULTS: list[str] = []


@pytest.fixture
def criterion(request):
    """Time the test body and record a summary line whatever the outcome."""
    state = {}

    def start(number, title, limit_s):
        state.update(number=number, title=title, limit=limit_s, t0=time.perf_counter())

    yield start
    elapsed = time.perf_counter() - state["t0"]
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    RESULTS.append(
        f"criterion {state['number']:>2}: {'PASS' if ok else 'FAIL'}  "
        f"{state['title']}  ({elapsed:.2f}s, limit {state['limit']}s)"
    )


def _within(criterion_limit, t0):
    assert time.perf_counter() - t0 < criterion_limit


def _vectors(max_sum, c):
    return [p for p in itertools.product(range(max_sum + 1), repeat=c) if sum(p) <= max_sum]


def _recurrence(p):
    # independent restatement of the order recurrence (no memo, no symmetry)
    if not any(p):
        return 1
    return 1 + sum(_recurrence(p[:i] + (p[i] - 1,) + p[i + 1:]) for i in range(len(p)) if p[i])


def test_c1_construction_orders(criterion):
    criterion(1, "construction orders", 1)
    t0 = time.perf_counter()
    expected = {(1, 1): 5, (2, 2): 19, (3, 3): 69, (1, 1, 1): 16, (2, 2, 2): 271, (3, 3, 3): 5248}
    for p, n in expected.items():
        assert _recurrence(p) == n
        assert order_of(p, 1) == n
        assert build(p, 1).n == n
    _within(1, t0)


def test_c2_theorem_family(criterion):
    criterion(2, "delta_mon(build(p)) = min p and no PC cycle, s <= 7, c in {2,3}, b in {1,3}", 60)
    t0 = time.perf_counter()
    count = 0
    for c in (2, 3):
        for b in (1, 3):
            for p in _vectors(7, c):
                G = build(p, b)
                assert delta_mon(G) == min(p), (p, b)
                res = decide_pc_undirected(G)
                assert not res.has_pc_cycle, (p, b)
                count += 1
    assert count == 2 * (36 + 120)
    _within(60, t0)


def test_c3_lemma_bound(criterion):
    criterion(3, "order <= s*c^s on criterion-2 range; s*2^s fails at (3,3,3)", 1)
    t0 = time.perf_counter()
    for c in (2, 3):
        for p in _vectors(7, c):
            s = sum(p)
            if s >= 1:
                assert order_of(p, 1) <= lemma_order_bound(s, c)
    assert order_of((3, 3, 3), 1) == 5248
    assert literal_lemma_bound(9) == 4608
    assert order_of((3, 3, 3), 1) > literal_lemma_bound(9)
    assert order_of((3, 3, 3), 1) <= lemma_order_bound(9, 3) == 177147
    _within(1, t0)


def test_c4_oracle_equivalence(criterion):
    criterion(4, "decider == exhaustive on all 3^10 instances (n=5) + 1000 random", 300)
    t0 = time.perf_counter()
    pairs = list(itertools.combinations(range(5), 2))
    disagreements = 0
    total = 0
    for states in itertools.product(range(3), repeat=len(pairs)):
        G = ColoredGraph(5, 2, tuple((u, v, k) for (u, v), k in zip(pairs, states) if k))
        total += 1
        if decide_pc_undirected(G).has_pc_cycle != find_pc_cycle_exhaustive(G).has_pc_cycle:
            disagreements += 1
    assert total == 59049
    rng = random.Random(4)
    for _ in range(1000):
        G = random_graph(rng, rng.randint(1, 8), rng.randint(2, 3), rng.choice([0.2, 0.4, 0.6, 0.9]))
        if decide_pc_undirected(G).has_pc_cycle != find_pc_cycle_exhaustive(G).has_pc_cycle:
            disagreements += 1
    assert disagreements == 0
    _within(300, t0)


def test_c5_doubling(criterion):
    criterion(5, "PC(H) <=> PC(double(H)) on 500 random instances; arc/degree invariants", 120)
    t0 = time.perf_counter()
    rng = random.Random(5)
    for _ in range(500):
        H = random_graph(rng, rng.randint(1, 7), rng.randint(2, 3), rng.choice([0.3, 0.5, 0.8]))
        D = double(H)
        assert D.m == 2 * H.m
        assert set(D.arcs) == {a for u, v, k in H.edges for a in ((u, v, k), (v, u, k))}
        for v in range(H.n):
            for i in range(1, H.c + 1):
                assert color_degree(D, v, i) == color_degree(H, v, i)
        assert find_pc_cycle_directed(D).has_pc_cycle == find_pc_cycle_exhaustive(H).has_pc_cycle
    _within(120, t0)


def test_c6_merge(criterion):
    criterion(6, "merged PC cycles revalidate in D; delta+(D') >= 2 delta+(D), 500 digraphs c=4", 120)
    t0 = time.perf_counter()
    rng = random.Random(6)
    found = 0
    for _ in range(500):
        D = random_digraph(rng, rng.randint(1, 6), 4, rng.choice([0.3, 0.6, 0.9]))
        M = merge_colors(D)
        for vs, _ in _cycles(M, None, _Counter()):
            found += 1
            assert is_pc_cycle(D, vs)
        assert delta_out_mon(M) >= 2 * delta_out_mon(D)
    assert found > 0
    _within(120, t0)


def test_c7_exact_extremal(criterion):
    criterion(7, "d(2,2)=d(3,2)=1, d(5,2)>=2, directed n<=4 dominance", 600)
    t0 = time.perf_counter()
    for n in (2, 3):
        rep = max_pcfree_delta(n, 2)
        assert rep.max_delta == 0 and rep.d_exact == 1
    rep5 = max_pcfree_delta(5, 2)
    assert rep5.max_delta >= 1 and rep5.d_exact >= 2
    G11 = build((1, 1))
    assert not find_pc_cycle_exhaustive(G11).has_pc_cycle and delta_mon(G11) == 1
    assert not find_pc_cycle_exhaustive(rep5.witness).has_pc_cycle
    assert delta_mon(rep5.witness) == rep5.max_delta
    for n in (2, 3, 4):
        und = max_pcfree_delta(n, 2)
        dirr = max_pcfree_delta(n, 2, directed=True)
        assert not find_pc_cycle_directed(dirr.witness).has_pc_cycle
        assert delta_out_mon(dirr.witness) == dirr.max_delta
        assert dirr.max_delta >= und.max_delta
        assert not find_pc_cycle_directed(double(und.witness)).has_pc_cycle
    _within(600, t0)


def test_c8_conjecture_refutation(criterion):
    criterion(8, "conjecture violated on G(1,1,1) and G(2,2)", 1)
    t0 = time.perf_counter()
    rep = conjecture_report(build((1, 1, 1), 1))
    assert (rep.c, rep.d, rep.claimed, rep.observed, rep.verdict) == (3, 1, 4, None, "violated")
    rep = conjecture_report(build((2, 2), 1))
    assert (rep.c, rep.d, rep.claimed, rep.observed, rep.verdict) == (2, 2, 4, None, "violated")
    _within(1, t0)


def test_c9_bound_formulas(criterion):
    criterion(9, "bound formulas at spot values (1e-9); lower_bound_d(order(q..q), c) <= q+1", 1)
    tol = 1e-9
    t0 = time.perf_counter()
    assert abs(lower_bound_d(1024, 2) - (10 - math.log2(10)) / 2) < tol
    assert abs(lower_bound_d(4, 2) - 0.5) < tol
    assert abs(lower_bound_d(27, 3) - (3 - 1) / 3) < tol
    lo, hi = gsy_bounds(16)
    assert abs(lo - 1.25) < tol and abs(hi - (4 - 2 / 3)) < tol
    lo, hi = gsy_bounds(2**16)
    assert abs(lo - 4.5) < tol and abs(hi - (16 - 4 / 3)) < tol
    lo, hi = gsy_bounds(256, 0.5, -0.5)
    assert abs(lo - (2 + 3 / 8 + 0.5)) < tol and abs(hi - (8 - 1 - 0.5)) < tol
    assert abs(merged_upper_bound(16, 4) - 5 / 3) < tol
    assert abs(merged_upper_bound(16, 5) - 5 / 3) < tol
    assert abs(merged_upper_bound(1024, 2, 1.0) - gsy_bounds(1024, 0, 1.0)[1]) < tol
    for c in (2, 3):
        for q in (1, 2, 3):
            n = order_of((q,) * c, 1)
            assert lower_bound_d(n, c) <= q + 1
    _within(1, t0)
