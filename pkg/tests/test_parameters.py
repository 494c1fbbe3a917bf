import pytest
from hypothesis import given, settings, strategies as st

from obskit.multigraph import MultiGraph, contract_edge, delete_edge, delete_vertex
from obskit.families import (
    complete,
    complete_bipartite,
    fan,
    grid,
    path,
    star,
    ternary_tree,
    ternary_tree_apex,
    theta,
)
from obskit import parameters as P
from obskit.parameters import (
    BI_PATHWIDTH,
    CUTWIDTH,
    EDGE_DEGREE,
    PATHWIDTH,
    TREEWIDTH,
    ParameterKind,
    bi_pathwidth,
    cutwidth,
    edge_degree,
    is_z_apex_witness,
    layout_cutwidth_cost,
    layout_pathwidth_cost,
    layout_treewidth_cost,
    parameter_at_most,
    parameter_value,
    parse_kind,
    pathwidth,
    treewidth,
    treewidth_by_elimination,
    z_apex,
    z_apex_kind,
)
from obskit.relations import Relation

from conftest import multigraphs

K3, K4, K5 = complete(3), complete(4), complete(5)


# width values on the standard shapes; all checked against independent
# solvers at least once before being frozen here
FROZEN = [
    # graph,            tw, pw, cw, edeg, bipw
    (grid(2),            2,  2,  2,  2,  2),
    (grid(3),            3,  3,  4,  4,  3),
    (ternary_tree(1),    1,  1,  2,  3,  1),
    (ternary_tree(2),    1,  2,  3,  3,  1),
    (ternary_tree_apex(2), 2, 3,  5,  6,  3),
    (theta(4),           1,  1,  4,  4,  1),
    (star(5),            1,  1,  3,  5,  1),
    (path(6),            1,  1,  1,  2,  1),
    (K4,                 3,  3,  4,  3,  3),
    (K5,                 4,  4,  6,  4,  4),
    (complete_bipartite(2, 3), 2, 2, 3, 3, 2),
    (fan(5),             2,  2,  3,  4,  2),
    (MultiGraph(0),      0,  0,  0,  0,  0),
    (MultiGraph(1),      0,  0,  0,  0,  0),
]


@pytest.mark.parametrize("g,tw,pw,cw,edeg,bipw", FROZEN)
def test_frozen_width_values(g, tw, pw, cw, edeg, bipw):
    assert treewidth(g)[0] == tw
    assert pathwidth(g)[0] == pw
    assert cutwidth(g)[0] == cw
    assert edge_degree(g) == edeg
    assert bi_pathwidth(g) == bipw


def test_treewidth_empty_and_edgeless():
    assert treewidth(MultiGraph(4))[0] == 0
    assert treewidth_by_elimination(MultiGraph(0)) == 0


def test_cutwidth_counts_multiplicities():
    assert cutwidth(theta(2))[0] == 2
    assert cutwidth(theta(7))[0] == 7
    assert cutwidth(MultiGraph.build(3, [(0, 1, 3), (1, 2, 3)]))[0] == 3


def test_size_caps_raise():
    from obskit.multigraph import BudgetExceededError
    with pytest.raises(BudgetExceededError):
        treewidth(path(P.MAX_TREEWIDTH_VERTICES + 1))
    with pytest.raises(BudgetExceededError):
        cutwidth(path(P.MAX_CUTWIDTH_VERTICES + 1))
    with pytest.raises(BudgetExceededError):
        z_apex(path(P.MAX_Z_APEX_VERTICES + 1), [K3])


@settings(max_examples=60)
@given(multigraphs(max_n=6, max_mult=1, min_n=0))
def test_two_treewidth_solvers_agree(g):
    assert treewidth(g)[0] == treewidth_by_elimination(g)


@settings(max_examples=40)
@given(multigraphs(max_n=6, max_mult=2))
def test_layouts_witness_their_widths(g):
    tw, lay = treewidth(g)
    assert layout_treewidth_cost(g, lay) == tw
    pw, lay = pathwidth(g)
    assert layout_pathwidth_cost(g, lay) == pw
    cw, lay = cutwidth(g)
    assert layout_cutwidth_cost(g, lay) == cw


@settings(max_examples=30)
@given(multigraphs(max_n=6, max_mult=1, min_n=1))
def test_minor_steps_never_raise_treewidth(g):
    tw = treewidth(g)[0]
    for v in range(g.n):
        assert treewidth(delete_vertex(g, v))[0] <= tw
    for u, v, _ in g.edges:
        assert treewidth(delete_edge(g, u, v))[0] <= tw
        assert treewidth(contract_edge(g, u, v))[0] <= tw


def test_pathwidth_sandwich():
    for g in (grid(3), K4, fan(5), ternary_tree(2), theta(3)):
        tw = treewidth(g)[0]
        pw = pathwidth(g)[0]
        assert tw <= pw
        assert cutwidth(g)[0] >= pw  # layouts refine


# -- apex deletion distance ------------------------------------------------------


def test_z_apex_values():
    assert z_apex(K5, [K3]) == (3, (0, 1, 2))
    assert z_apex(K4, [K3])[0] == 2
    assert z_apex(path(6), [K3]) == (0, ())
    assert z_apex(grid(3), [K4, complete_bipartite(2, 3)])[0] == 1


def test_z_apex_witness_checker():
    assert is_z_apex_witness(K5, [K3], (0, 1, 2))
    assert not is_z_apex_witness(K5, [K3], (0, 1))
    assert is_z_apex_witness(path(6), [K3], ())


def test_z_apex_with_nothing_to_exclude_is_zero():
    assert z_apex(K4, []) == (0, ())


# -- kinds ------------------------------------------------------------------------


def test_parse_kind_identity_and_aliases():
    assert parse_kind("treewidth") is TREEWIDTH
    assert parse_kind("tw") is TREEWIDTH
    assert parse_kind("pw") is PATHWIDTH
    assert parse_kind("cutwidth") is CUTWIDTH
    assert parse_kind("bi_pathwidth") is BI_PATHWIDTH
    assert parse_kind("edge_degree") is EDGE_DEGREE
    with pytest.raises(ValueError):
        parse_kind("chromatic")


def test_monotone_relations_per_kind():
    assert TREEWIDTH.monotone_relation is Relation.MINOR
    assert PATHWIDTH.monotone_relation is Relation.MINOR
    assert BI_PATHWIDTH.monotone_relation is Relation.MINOR
    assert CUTWIDTH.monotone_relation is Relation.IMMERSION
    assert EDGE_DEGREE.monotone_relation is Relation.IMMERSION
    zk = z_apex_kind([K3])
    assert zk.monotone_relation is Relation.MINOR
    assert zk.z_list == (K3,)


def test_parameter_value_dispatch():
    assert parameter_value(TREEWIDTH, K4) == 3
    assert parameter_value(CUTWIDTH, theta(4)) == 4
    assert parameter_value(z_apex_kind([K3]), K5) == 3
    assert parameter_at_most(TREEWIDTH, 3, K4)
    assert not parameter_at_most(TREEWIDTH, 2, K4)
