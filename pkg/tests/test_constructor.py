import random

import pytest
from hypothesis import given, settings

from gkindep import (
    CyclicInputError,
    NotExtremalError,
    ParameterError,
    RangeError,
    base_bound,
    brute_force_alpha,
    build_graph,
    complete_graph,
    construct_set,
    cycle_graph,
    cycle_space_dimension,
    equality_refinement,
    figure1_graph,
    path_graph,
    phase_a,
    phase_b,
    star_graph,
    verify_set,
)

from helpers import gnp, graphs, ks


@given(graphs())
def test_phase_a_always_leaves_a_forest(g):
    x, u = phase_a(g)
    assert x | u == frozenset(range(g.n)) and not (x & u)
    assert len(x) <= cycle_space_dimension(g)
    sub_edges = [(a, b) for a, b in g.edges if a in u and b in u]
    sub = build_graph(g.n, sub_edges)
    assert cycle_space_dimension(sub) == 0


def test_phase_a_on_forest_removes_nothing():
    x, u = phase_a(path_graph(6))
    assert x == frozenset() and u == frozenset(range(6))


def test_phase_a_c5():
    x, u = phase_a(cycle_graph(5))
    assert x == frozenset({4})
    assert u == frozenset({0, 1, 2, 3})


def test_phase_a_k4_removes_fewer_than_omega():
    x, u = phase_a(complete_graph(4))
    assert x == frozenset({2, 3})  # omega is 3, but vertex 3 closes two back edges
    assert u == frozenset({0, 1})


def test_phase_b_p7_trace():
    s = phase_b(path_graph(7), range(7), 3)
    assert s == frozenset({0, 2, 3, 5, 6})


def test_phase_b_star_removes_center():
    g = star_graph(5)
    s = phase_b(g, range(6), 3)
    assert s == frozenset({1, 2, 3, 4, 5})
    assert brute_force_alpha(g, 3) == len(s)


def test_phase_b_small_components_untouched():
    g = build_graph(4, [(0, 1), (2, 3)])
    assert phase_b(g, range(4), 3) == frozenset(range(4))


def test_phase_b_rejects_cycles():
    with pytest.raises(CyclicInputError):
        phase_b(cycle_graph(5), range(5), 3)


def test_phase_b_rejects_bad_k():
    with pytest.raises(ParameterError):
        phase_b(path_graph(3), range(3), 1)


@given(graphs(), ks())
@settings(max_examples=60)
def test_phase_b_removal_budget(g, k):
    _, u = phase_a(g)
    s = phase_b(g, u, k)
    assert len(u) - len(s) <= len(u) // k
    assert verify_set(g, k, s) <= k - 1


def test_construct_c5():
    result = construct_set(cycle_graph(5), 3)
    assert sorted(result.vertices) == [0, 2, 3]
    assert result.guarantee == 3
    assert result.phase_a_removed == frozenset({4})
    assert result.phase_b_removed == frozenset({1})


def test_construct_figure1_meets_sharp_bound():
    for k in (2, 3, 4):
        result = construct_set(figure1_graph(k), k)
        assert result.guarantee == 5 * (k - 1)
        assert len(result.vertices) >= 5 * (k - 1)


def test_construct_partitions_vertices():
    g = gnp(11, 30, 0.2)
    result = construct_set(g, 4)
    pieces = (result.vertices, result.phase_a_removed, result.phase_b_removed)
    assert frozenset().union(*pieces) == frozenset(range(g.n))
    assert sum(len(p) for p in pieces) == g.n


@given(graphs(), ks())
@settings(max_examples=60)
def test_construct_guarantee_and_validity(g, k):
    result = construct_set(g, k)
    omega = cycle_space_dimension(g)
    assert result.guarantee == base_bound(g.n, omega, k)
    assert len(result.vertices) >= result.guarantee
    assert result.max_component <= k - 1
    assert result.max_component == verify_set(g, k, result.vertices)


def test_construct_is_deterministic():
    g = gnp(5, 40, 0.15)
    assert construct_set(g, 3) == construct_set(g, 3)


def test_verify_examples():
    assert verify_set(cycle_graph(5), 3, {0, 2, 3}) == 2
    assert verify_set(cycle_graph(5), 3, set()) == 0
    assert verify_set(path_graph(3), 3, {0, 1, 2}) == 3  # invalid for k=3


def test_verify_range_checked():
    with pytest.raises(RangeError):
        verify_set(path_graph(3), 3, {5})


def test_refinement_c7():
    result = equality_refinement(cycle_graph(7), 3)
    assert len(result.vertices) == 4
    assert result.max_component <= 2


def test_refinement_figure1_exact():
    for k in (2, 3, 4):
        g = figure1_graph(k)
        result = equality_refinement(g, k)
        assert len(result.vertices) == 5 * (k - 1)
        assert verify_set(g, k, result.vertices) <= k - 1


def test_refinement_p6():
    result = equality_refinement(path_graph(6), 3)
    assert len(result.vertices) == 4


def test_refinement_demands_extremal_input():
    with pytest.raises(NotExtremalError):
        equality_refinement(cycle_graph(6), 3)  # length 0 mod 3
    bowtie = build_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    with pytest.raises(NotExtremalError):
        equality_refinement(bowtie, 3)


def test_refinement_handles_multi_attachment_cycles():
    # one 7-cycle with two 3-vertex paths hanging from different cycle
    # vertices: each path must shed its own bridge endpoint
    edges = [(i, (i + 1) % 7) for i in range(7)]
    edges += [(7, 8), (8, 9), (0, 7)]
    edges += [(10, 11), (11, 12), (4, 10)]
    g = build_graph(13, edges)
    result = equality_refinement(g, 3)
    assert len(result.vertices) == 8
    assert verify_set(g, 3, result.vertices) <= 2
    assert brute_force_alpha(g, 3) == 8


def test_construct_linear_pipeline_on_random_seeds():
    rng = random.Random(99)
    for _ in range(25):
        n = rng.randint(1, 60)
        g = gnp(rng, n, rng.choice([0.05, 0.1, 0.3]))
        for k in (2, 3, 5):
            result = construct_set(g, k)
            assert len(result.vertices) >= result.guarantee
            assert result.max_component <= k - 1
