import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lowhigh.dominators import brute_force_dominators, certify_dominator_tree
from lowhigh.graph import FlowGraph, IdOutOfRange
from lowhigh.incremental import (
    VARIANTS,
    LowHighState,
    affected_search,
    baseline_slt,
    baseline_slt_nca,
    check_ids,
    compute_low_high,
    initialize,
    insert_edge,
    insert_edge_simple,
    sparse_subgraph,
)
from lowhigh.lowhigh import verify_low_high
from conftest import make_g1, make_g2, make_g3, random_edges


def assert_consistent(st_):
    G, D = st_.graph, st_.dom
    assert D.parent_map() == brute_force_dominators(G).parent_map()
    assert verify_low_high(G, D, st_.order())
    assert certify_dominator_tree(G, D, st_.order())


def test_initialize_g2_frozen():
    st_ = initialize(make_g2())
    assert st_.order() == [1, 2, 3, 4, 5]
    assert (st_.low[4], st_.high[4]) == (3, 5)
    assert (st_.b[4], st_.r[4]) == (3, 5)
    assert st_.mark[1:] == [False, True, True, False, True]
    assert_consistent(st_)


def test_initialize_chain_and_isolated():
    st_ = initialize(make_g1())
    assert st_.order() == [1, 2, 3, 4] and all(st_.mark[2:])
    lonely = initialize(FlowGraph(4, 1, [(2, 3), (3, 4)]))
    assert lonely.order() == [1]


def test_affected_search_examples():
    st_ = initialize(make_g2())
    st_.graph.add_edge(1, 3)
    rep = affected_search(st_, 1, 3)
    assert (rep.A, rep.z, rep.c, rep.last) == ([3], 1, 2, {3: (1, 3)})
    st_ = initialize(make_g2())
    st_.graph.add_edge(2, 4)
    assert affected_search(st_, 2, 4).A == []
    st_ = initialize(make_g1())
    st_.graph.add_edge(1, 4)
    assert affected_search(st_, 1, 4).A == [4]


def test_insert_edge_g2():
    st_ = initialize(make_g2())
    rep = insert_edge(st_, 1, 3)
    assert rep.A == [3]
    assert st_.dom.parent_map() == {2: 1, 3: 1, 4: 1, 5: 1}
    assert st_.mark[3] and {st_.b[3], st_.r[3]} <= {1, 2}
    order = st_.order()
    assert order.index(4) < order.index(5)
    assert_consistent(st_)


def test_insert_self_loop_and_unreachable():
    st_ = initialize(make_g1())
    before = st_.dom.parent_map()
    insert_edge(st_, 3, 3)
    assert st_.dom.parent_map() == before and st_.graph.m == 4
    st_ = initialize(FlowGraph(7, 1, [(1, 2)]))
    insert_edge(st_, 7, 2)
    assert st_.dom.parent_map() == {2: 1} and st_.graph.m == 2


def test_insert_reaches_new_vertex_restarts():
    st_ = initialize(FlowGraph(3, 1, [(1, 2), (3, 2)]))
    insert_edge(st_, 2, 3)
    assert st_.stats.restarts == 1
    assert_consistent(st_)


def test_simple_variant_g2():
    st_ = initialize(make_g2())
    insert_edge_simple(st_, 1, 3)
    assert st_.dom.parent_map() == {2: 1, 3: 1, 4: 1, 5: 1}
    assert_consistent(st_)


def test_sparse_subgraph_size():
    n, edges = random_edges(5, 20, 30)
    st_ = LowHighState(n, 1)
    for u, v in edges:
        if st_.dom.reachable[u] and st_.dom.reachable[v]:
            st_.graph.add_edge(u, v)
            rep = affected_search(st_, u, v)
            H = sparse_subgraph(st_, rep)
            assert H.m <= 3 * (n - 1) + 1
            st_.graph.out_adj[u].pop()
            st_.graph.in_adj[v].pop()
            st_.graph._mult[(u, v)] -= 1
            st_.graph.m -= 1
        insert_edge(st_, u, v)


def test_slt_nca_recompute_rules():
    st_ = initialize(make_g2())
    baseline_slt_nca(st_, 2, 4)
    assert st_.stats.recomputes == 0
    baseline_slt_nca(st_, 1, 3)
    assert st_.stats.recomputes == 1
    assert_consistent(st_)
    st_ = initialize(FlowGraph(5, 1, [(1, 2)]))
    baseline_slt(st_, 4, 2)
    assert st_.stats.recomputes == 0
    baseline_slt(st_, 2, 1)
    assert st_.stats.recomputes == 1


def test_compute_low_high_g3():
    D, order, trees = compute_low_high(make_g3())
    assert D.parent_map() == {2: 1, 3: 1}
    G = make_g3()
    for v in (2, 3):
        assert G.has_edge(trees.b_parent[v], v) and G.has_edge(trees.r_parent[v], v)
        assert trees.b_parent[v] != trees.r_parent[v]


def test_check_ids():
    with pytest.raises(IdOutOfRange):
        check_ids(initialize(make_g1()), 1, 9)


@pytest.mark.parametrize("variant", sorted(VARIANTS))
@pytest.mark.parametrize("seed", range(12))
def test_variants_against_oracle(variant, seed):
    n, edges = random_edges(seed, 3, 18, 1.5, 4.0)
    st_ = LowHighState(n, 1)
    for u, v in edges:
        VARIANTS[variant](st_, u, v)
        assert_consistent(st_)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 12).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.tuples(st.integers(1, n), st.integers(1, n)), max_size=40))))
def test_insert_edge_property(data):
    n, edges = data
    st_ = LowHighState(n, 1)
    for u, v in edges:
        insert_edge(st_, u, v)
        assert_consistent(st_)
        for w in range(1, n + 1):
            if w != 1 and st_.dom.reachable[w]:
                assert st_.mark[w] == st_.graph.has_edge(st_.dom.parent[w], w)
                assert (st_.low[w] and st_.high[w]) or st_.mark[w]
