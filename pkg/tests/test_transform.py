from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_digraph, random_graph
from pccycles import (
    ColoredDigraph,
    ColoredGraph,
    build,
    color_degree,
    decide_pc_undirected,
    delta_out_mon,
    double,
    find_pc_cycle_directed,
    is_pc_cycle,
    merge_colors,
    read_pcg,
    recolor,
)
from pccycles.detect import _cycles, _Counter

DATA = Path(__file__).parent / "data"


def test_double_single_edge():
    D = double(ColoredGraph(2, 2, ((0, 1, 1),)))
    assert D.arcs == ((0, 1, 1), (1, 0, 1))
    assert not find_pc_cycle_directed(D).has_pc_cycle


def test_double_alternating_c4(alt_c4):
    res = find_pc_cycle_directed(double(alt_c4))
    assert res.has_pc_cycle
    assert is_pc_cycle(alt_c4, res.cycle.vertices)


def test_double_g11():
    assert not find_pc_cycle_directed(double(build((1, 1)))).has_pc_cycle


def test_doubling_equivalence_and_degrees(rng):
    for _ in range(300):
        H = random_graph(rng, rng.randint(1, 7), rng.randint(2, 3))
        D = double(H)
        assert D.m == 2 * H.m and D.n == H.n and D.c == H.c
        for v in range(H.n):
            for i in range(1, H.c + 1):
                assert color_degree(D, v, i) == color_degree(H, v, i)
        assert find_pc_cycle_directed(D).has_pc_cycle == decide_pc_undirected(H).has_pc_cycle


def test_merge_mapping_table():
    D = ColoredDigraph(3, 4, ((0, 1, 1), (1, 2, 2), (2, 0, 3), (0, 2, 4)))
    assert [k for _, _, k in merge_colors(D).arcs] == [1, 2, 1, 2]
    assert merge_colors(D).c == 2
    assert [((u, v), k) for u, v, k in merge_colors(D).arcs] == [((0, 1), 1), ((0, 2), 2), ((1, 2), 1), ((2, 0), 2)]


def test_merge_identity_at_two_colors(rng):
    for _ in range(50):
        D = random_digraph(rng, rng.randint(1, 6), 2)
        assert merge_colors(D) == D
        assert merge_colors(merge_colors(D)) == merge_colors(D)


def test_merge_odd_c_split():
    D = ColoredDigraph(2, 5, ((0, 1, 2), (1, 0, 3)))
    assert merge_colors(D).arcs == ((0, 1, 1), (1, 0, 2))


def test_merge_raises_min_degree():
    # every vertex has exactly one out-arc of each color 1..4
    n, c = 5, 4
    arcs = [(v, (v + k) % n, k) for v in range(n) for k in range(1, c + 1)]
    D = ColoredDigraph(n, c, tuple(arcs))
    assert delta_out_mon(D) == 1
    assert delta_out_mon(merge_colors(D)) >= 2


def _all_pc_cycles(D):
    return list(_cycles(D, None, _Counter()))


def test_merge_forward_preservation(rng):
    for _ in range(200):
        D = random_digraph(rng, rng.randint(2, 5), 4)
        merged = merge_colors(D)
        assert set((u, v) for u, v, _ in merged.arcs) == set((u, v) for u, v, _ in D.arcs)
        for vs, _ in _all_pc_cycles(merged):
            assert is_pc_cycle(D, vs)
        assert delta_out_mon(merged) >= 2 * delta_out_mon(D)


def test_merge_converse_fails_on_stored_instance():
    D = read_pcg(DATA / "merge_converse.pcg")
    assert D.directed and D.c == 4
    res = find_pc_cycle_directed(D)
    assert res.has_pc_cycle and res.cycle.validate(D)
    assert not find_pc_cycle_directed(merge_colors(D)).has_pc_cycle


def test_recolor_sequence_mapping():
    G = ColoredGraph(3, 3, ((0, 1, 1), (1, 2, 3)))
    assert recolor(G, [2, 2, 1], 2).edges == ((0, 1, 2), (1, 2, 1))
    with pytest.raises(ValueError):
        recolor(G, [1, 2], 2)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6), st.integers(2, 6), st.randoms(use_true_random=False))
def test_merge_degree_bound_property(n, c, r):
    D = random_digraph(r, n, c, 0.6)
    assert delta_out_mon(merge_colors(D)) >= (c // 2) * delta_out_mon(D)
