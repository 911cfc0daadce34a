import random

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from domkit import (
    Bipartition,
    GraphError,
    NotBipartiteError,
    NotDominatingError,
    bipartition,
    build_graph,
    complete_bipartite,
    cycle,
    double_star,
    gamma_oracle,
    i_oracle,
    independent_dominating_from,
    is_dominating,
    is_independent,
    max_degree,
    proof_violations,
    random_bipartite,
    verify_theorem3,
)

from conftest import bipartite_graphs, random_dominating_set

K33 = complete_bipartite(3)


def test_k33_trace():
    t = independent_dominating_from(K33, bipartition(K33), {0, 3})
    assert t.i0 == set()
    assert t.a1 == {0} and t.b1 == {3}
    assert not t.swapped
    assert t.a2 == {1, 2}
    assert t.result == {0, 1, 2}
    assert 2 * len(t.result) <= 2 * 3
    assert i_oracle(K33).value == 3
    assert proof_violations(K33, t) == []


def test_double_star_trace():
    g = double_star(3)  # centers 0 (A) and 1 (B); leaves of 1 are 5, 6, 7
    parts = bipartition(g)
    assert 0 in parts.part_a and 1 in parts.part_b
    t = independent_dominating_from(g, parts, {0, 1})
    assert t.i0 == set() and t.a1 == {0} and t.b1 == {1}
    assert t.a2 == {5, 6, 7}
    assert t.result == {0, 5, 6, 7}
    assert len(t.result) == 4 == i_oracle(g).value


def test_independent_input_is_fixed_point():
    g = cycle(6)
    d = {0, 3}
    t = independent_dominating_from(g, bipartition(g), d)
    assert t.i0 == d and not t.a1 and not t.b1 and not t.a2
    assert t.result == d


def test_swap_when_b_side_heavier():
    # Path 0-1-2-3-4 colored A B A B A; D = {1, 2, 3}: A1 = {2}, B1 = {1, 3}
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    t = independent_dominating_from(g, bipartition(g), {1, 2, 3})
    assert t.swapped
    assert t.a1 == {1, 3} and t.b1 == {2}
    assert t.part_a == {1, 3}
    assert t.a2 == set()
    assert t.result == {1, 3}
    assert proof_violations(g, t) == []


def test_tie_keeps_orientation():
    t = independent_dominating_from(K33, bipartition(K33), {0, 3})
    assert len(t.a1) == len(t.b1) and not t.swapped


def test_isolated_vertices_flow_through():
    g = build_graph(5, [(0, 1), (1, 2)])  # 3 and 4 isolated
    d = {1, 3, 4}
    t = independent_dominating_from(g, bipartition(g), d)
    assert {3, 4} <= t.i0
    assert {3, 4} <= t.result
    assert proof_violations(g, t) == []


def test_transform_errors():
    with pytest.raises(NotDominatingError) as info:
        independent_dominating_from(cycle(4), bipartition(cycle(4)), {0})
    assert info.value.vertex == 2
    with pytest.raises(GraphError):
        independent_dominating_from(build_graph(2, [(0, 1)]), bipartition(build_graph(2, [(0, 1)])), {0})
    bad = Bipartition(("A", "A", "B", "B"))
    with pytest.raises(GraphError):
        independent_dominating_from(cycle(4), bad, {0, 2})


def test_verify_theorem3_examples():
    r = verify_theorem3(K33)
    assert (r.gamma, r.i, r.delta, r.holds) == (2, 3, 3, True)
    assert 2 * r.i == r.gamma * r.delta
    r = verify_theorem3(double_star(4))
    assert (r.gamma, r.i, r.delta) == (2, 5, 5) and r.holds
    assert 2 * r.i == r.gamma * r.delta == 10
    r = verify_theorem3(cycle(6))
    assert (r.gamma, r.i, r.delta) == (2, 2, 2) and r.holds
    assert 2 * r.i == r.gamma * r.delta == 4
    assert r.i <= r.transform_size <= r.bound


def test_verify_theorem3_oracle_route_agrees():
    g = random_bipartite(5, 6, 0.4, 3)
    a = verify_theorem3(g, method="oracle")
    b = verify_theorem3(g)
    assert (a.gamma, a.i, a.delta) == (b.gamma, b.i, b.delta)


def test_verify_theorem3_rejects():
    with pytest.raises(NotBipartiteError) as info:
        verify_theorem3(cycle(5))
    assert len(info.value.cycle) == 5
    with pytest.raises(GraphError):
        verify_theorem3(complete_bipartite(1))


@settings(max_examples=300, deadline=None)
@given(bipartite_graphs(), st.randoms(use_true_random=False), st.floats(0.0, 1.0))
def test_any_dominating_set_transforms(g, r, density):
    assume(max_degree(g) >= 2)
    d = random_dominating_set(g, r, density)
    t = independent_dominating_from(g, bipartition(g), d)
    assert is_independent(g, t.result)
    assert is_dominating(g, t.result)
    assert 2 * len(t.result) <= len(d) * t.delta
    assert proof_violations(g, t) == []


def test_minimum_dominating_set_from_oracle():
    rng = random.Random(99)
    for _ in range(100):
        na, nb = rng.randint(2, 7), rng.randint(2, 7)
        g = random_bipartite(na, nb, rng.choice([0.3, 0.5, 0.8]), rng.getrandbits(32))
        if max_degree(g) < 2:
            continue
        d = gamma_oracle(g).witness
        t = independent_dominating_from(g, bipartition(g), d)
        assert not proof_violations(g, t)
        assert i_oracle(g).value <= len(t.result) <= len(d) * t.delta // 2
