import pytest
from hypothesis import given, strategies as st

from obskit.multigraph import (
    K0,
    BudgetExceededError,
    EnumBudget,
    MultiGraph,
    are_isomorphic,
    canonical_form,
    contract_edge,
    copies,
    delete_edge,
    delete_vertex,
    disjoint_union,
    enum_key,
    enumerate_graphs,
    format_graph_set,
    format_graph_text,
    from_graph6,
    lift_pair,
    parse_graph_set,
    parse_graph_text,
    relabel_canonically,
    subdivide_edge,
    to_graph6,
    tree_code,
)

from conftest import multigraphs, shuffled


def P(n):
    return MultiGraph.build(n, [(i, i + 1) for i in range(n - 1)])


def C(n):
    return MultiGraph.build(n, [(i, (i + 1) % n) for i in range(n)])


def K(n):
    return MultiGraph.build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


# -- construction ------------------------------------------------------------


def test_build_normalizes_pairs_and_accumulates():
    g = MultiGraph.build(3, [(1, 0), (0, 1), (1, 2, 2)])
    assert g.edges == ((0, 1, 2), (1, 2, 2))
    assert g.total_units == 4
    assert g.multiplicity(2, 1) == 2
    assert g.multiplicity(0, 2) == 0


def test_constructor_rejects_bad_edges():
    with pytest.raises(ValueError):
        MultiGraph(2, ((0, 0, 1),))
    with pytest.raises(ValueError):
        MultiGraph(2, ((0, 1, 0),))
    with pytest.raises(ValueError):
        MultiGraph(2, ((0, 2, 1),))
    with pytest.raises(ValueError):
        MultiGraph(3, ((1, 2, 1), (0, 1, 1)))  # unsorted
    with pytest.raises(ValueError):
        MultiGraph.build(3, [(0, 0)])
    with pytest.raises(ValueError):
        MultiGraph(-1)


def test_empty_graph_is_valid():
    assert K0.n == 0
    assert K0.edges == ()
    assert K0.total_units == 0
    assert canonical_form(K0) == canonical_form(MultiGraph(0))


def test_degree_views():
    g = MultiGraph.build(3, [(0, 1, 3), (1, 2)])
    assert g.edge_degrees == (3, 4, 1)
    assert g.degrees == (1, 2, 1)
    assert g.adj[1] == {0: 3, 2: 1}
    assert not g.is_simple()
    assert g.simplify().edges == ((0, 1, 1), (1, 2, 1))


# -- elementary operations ---------------------------------------------------


def test_delete_vertex_relabels_downward():
    g = P(4)
    h = delete_vertex(g, 1)
    assert h.n == 3
    assert h.edges == ((1, 2, 1),)
    with pytest.raises(ValueError):
        delete_vertex(g, 4)


def test_delete_edge_unit_semantics():
    g = MultiGraph.build(2, [(0, 1, 3)])
    assert delete_edge(g, 0, 1).edges == ((0, 1, 2),)
    assert delete_edge(g, 1, 0, units=3).edges == ()
    with pytest.raises(ValueError):
        delete_edge(g, 0, 1, units=4)
    with pytest.raises(ValueError):
        delete_edge(P(3), 0, 2)


def test_contract_edge_modes():
    # contracting one side of C4 closes a parallel pair
    g = C(4)
    assert contract_edge(g, 0, 1, simple=False).edges == ((0, 1, 1), (0, 2, 1), (1, 2, 1))
    assert contract_edge(C(3), 0, 1).edges == ((0, 1, 1),)  # simple default
    multi = MultiGraph.build(3, [(0, 1, 2), (0, 2), (1, 2)])
    assert contract_edge(multi, 0, 1, simple=False).edges == ((0, 1, 2),)


def test_lift_pair_conserves_endpoint_degrees():
    g = P(3)
    h = lift_pair(g, 0, 1, 2)
    assert h.n == 3
    assert h.edges == ((0, 2, 1),)
    with pytest.raises(ValueError):
        lift_pair(g, 0, 1, 0)
    with pytest.raises(ValueError):
        lift_pair(h, 0, 1, 2)


def test_subdivide_then_contract_roundtrips():
    g = K(3)
    h = subdivide_edge(g, 0, 1)
    assert h.n == 4 and h.multiplicity(0, 1) == 0
    back = contract_edge(h, 0, 3)
    assert are_isomorphic(back, g)


def test_disjoint_union_and_copies():
    g = disjoint_union(P(2), C(3))
    assert (g.n, g.total_units) == (5, 4)
    assert copies(3, MultiGraph(1)).n == 3
    with pytest.raises(ValueError):
        copies(0, P(2))


# -- canonical forms and isomorphism -----------------------------------------


@given(multigraphs(max_n=6, max_mult=2), st.integers(0, 10**6))
def test_canonical_form_is_relabeling_invariant(g, seed):
    assert canonical_form(shuffled(g, seed)) == canonical_form(g)


@given(multigraphs(max_n=6, max_mult=2))
def test_relabel_canonically_is_idempotent(g):
    c = relabel_canonically(g)
    assert relabel_canonically(c) == c
    assert canonical_form(c) == canonical_form(g)


def test_are_isomorphic_distinguishes_same_degree_sequences():
    # C3 + P2 and P5 share the degree multiset
    a = MultiGraph.build(5, [(0, 1), (1, 2), (0, 2), (3, 4)])
    assert sorted(a.edge_degrees) == sorted(P(5).edge_degrees)
    assert not are_isomorphic(a, P(5))
    assert are_isomorphic(C(4), shuffled(C(4), 7))


def test_tree_code_only_on_trees():
    assert tree_code(P(4)) is not None
    assert tree_code(MultiGraph(1)) == "()"
    assert tree_code(C(4)) is None
    assert tree_code(MultiGraph.build(2, [(0, 1, 2)])) is None
    # same vertex and unit count as a tree, but disconnected with a cycle
    forest_like = MultiGraph.build(5, [(0, 1), (1, 2), (0, 2), (3, 4)])
    assert tree_code(forest_like) is None


@given(st.integers(2, 9), st.integers(0, 10**6))
def test_tree_code_invariant_on_random_trees(n, seed):
    import random
    rng = random.Random(seed)
    # random recursive tree
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    t = MultiGraph.build(n, edges)
    assert tree_code(t) == tree_code(shuffled(t, seed + 1))


def test_distinct_small_trees_have_distinct_codes():
    star = MultiGraph.build(4, [(0, 1), (0, 2), (0, 3)])
    codes = {tree_code(P(4)), tree_code(star)}
    assert None not in codes and len(codes) == 2


# -- enumeration -------------------------------------------------------------


def test_enumeration_counts_frozen():
    # unlabeled multigraph counts, empty graph included
    assert len(list(enumerate_graphs(4, 2))) == 81
    assert len(list(enumerate_graphs(6, 1))) == 209


def test_enumeration_is_sorted_and_duplicate_free():
    keys = [enum_key(g) for g in enumerate_graphs(5, 2)]
    assert keys == sorted(keys)
    assert len(keys) == len(set(keys))


def test_enumeration_respects_predicate():
    trees = list(enumerate_graphs(5, 1, predicate=lambda g: tree_code(g) is not None))
    assert [g.n for g in trees] == [1, 2, 3, 4, 4, 5, 5, 5]


def test_enumeration_budget_guard():
    with pytest.raises(BudgetExceededError):
        list(enumerate_graphs(9, 1))
    tight = EnumBudget(max_simple_vertices=3)
    with pytest.raises(BudgetExceededError):
        list(enumerate_graphs(4, 1, budget=tight))
    assert len(list(enumerate_graphs(4, 1, budget=EnumBudget(max_simple_vertices=4)))) == 19


# -- serialization -----------------------------------------------------------


@given(multigraphs(max_n=6, max_mult=3))
def test_text_roundtrip(g):
    assert parse_graph_text(format_graph_text(g)) == g


@given(multigraphs(max_n=8, max_mult=1))
def test_graph6_roundtrip_for_simple_graphs(g):
    assert from_graph6(to_graph6(g)) == g


def test_graph6_rejects_multigraphs():
    with pytest.raises(ValueError):
        to_graph6(MultiGraph.build(2, [(0, 1, 2)]))


def test_graph_set_roundtrip_preserves_order():
    batch = [K0, P(3), C(4), MultiGraph.build(2, [(0, 1, 5)])]
    text = format_graph_set(batch, comment="four graphs")
    assert parse_graph_set(text) == batch


def test_parse_graph_text_rejects_garbage():
    with pytest.raises(ValueError):
        parse_graph_text("n 2\ne 0 5\n")
    with pytest.raises(ValueError):
        parse_graph_text("nonsense")
