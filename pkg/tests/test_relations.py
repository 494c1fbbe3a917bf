import pytest
from hypothesis import given, settings, strategies as st

from obskit.multigraph import MultiGraph, canonical_form, copies
from obskit.families import (
    complete,
    complete_bipartite,
    grid,
    path,
    star,
    theta,
)
from obskit.relations import (
    Mode,
    Relation,
    compose_minor_models,
    contains,
    dedup_graphs,
    default_mode,
    down_closure_within,
    immersion_by_liftings,
    immersion_reachable_set,
    is_antichain,
    min_elements,
    parse_relation,
    set_dominates,
    subgraph_map_as_model,
    up_closure_within,
    verify_minor_model,
    verify_subgraph_map,
)

from conftest import multigraphs

K3, K4, K5 = complete(3), complete(4), complete(5)
K23 = complete_bipartite(2, 3)

# K_{1,4} spread over a two-center tree: a minor (merge the centers) but not
# a topological minor (no single vertex has four branches)
DOUBLE_STAR = MultiGraph.build(6, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)])
K14 = star(4)


def test_parse_relation_accepts_aliases():
    assert parse_relation("minor") is Relation.MINOR
    assert parse_relation("tm") is Relation.TOPOLOGICAL_MINOR
    assert parse_relation("immersion") is Relation.IMMERSION
    assert parse_relation("sub") is Relation.SUBGRAPH
    with pytest.raises(ValueError):
        parse_relation("homomorphism")


def test_default_modes():
    assert default_mode(Relation.MINOR) is Mode.SIMPLE
    assert default_mode(Relation.TOPOLOGICAL_MINOR) is Mode.SIMPLE
    assert default_mode(Relation.SUBGRAPH) is Mode.MULTI
    assert default_mode(Relation.IMMERSION) is Mode.MULTI


# -- pinned containment facts -------------------------------------------------


def test_minor_examples():
    assert contains(Relation.MINOR, K3, grid(2))
    assert contains(Relation.MINOR, K4, grid(3))
    assert not contains(Relation.MINOR, K5, grid(3))
    assert contains(Relation.MINOR, K23, grid(3))
    assert not contains(Relation.MINOR, K3, path(10))


def test_minor_versus_topological_minor_separation():
    assert contains(Relation.MINOR, K14, DOUBLE_STAR)
    assert not contains(Relation.TOPOLOGICAL_MINOR, K14, DOUBLE_STAR)
    # degree <= 3 patterns cannot see the difference
    assert contains(Relation.MINOR, star(3), DOUBLE_STAR)
    assert contains(Relation.TOPOLOGICAL_MINOR, star(3), DOUBLE_STAR)


def test_immersion_examples():
    assert contains(Relation.IMMERSION, theta(3), K4)
    assert not contains(Relation.IMMERSION, theta(4), K4)
    assert contains(Relation.IMMERSION, theta(2), copies(2, K3))
    assert not contains(Relation.SUBGRAPH, theta(2), K4)


def test_subgraph_respects_multiplicity():
    single = MultiGraph.build(2, [(0, 1)])
    double = MultiGraph.build(2, [(0, 1, 2)])
    assert contains(Relation.SUBGRAPH, single, double)
    assert not contains(Relation.SUBGRAPH, double, single)
    # under minors the default simple mode erases the parallel pair
    assert contains(Relation.MINOR, double, single, mode=Mode.SIMPLE)
    assert not contains(Relation.MINOR, double, single, mode=Mode.MULTI)


def test_empty_and_tiny_patterns():
    assert contains(Relation.MINOR, MultiGraph(0), K3)
    assert contains(Relation.SUBGRAPH, MultiGraph(1), K3)
    assert not contains(Relation.MINOR, MultiGraph(1), MultiGraph(0))


def test_size_caps_guard_the_search():
    from obskit.multigraph import BudgetExceededError
    big = path(12)
    with pytest.raises(BudgetExceededError):
        contains(Relation.SUBGRAPH, big, grid(4))
    # explicit caps lift the guard
    assert contains(Relation.SUBGRAPH, path(9), grid(3), max_pattern=9)


def test_degree_bounded_hosts_shortcut_stays_correct():
    # hosts that are paths or cycles reject every branching pattern at once,
    # well past the generic size caps
    cyc = MultiGraph.build(20, [(i, (i + 1) % 20) for i in range(20)])
    assert not contains(Relation.MINOR, star(3), cyc)
    assert not contains(Relation.TOPOLOGICAL_MINOR, K14, path(30))
    assert not contains(Relation.IMMERSION, star(3), path(25))
    assert not contains(Relation.MINOR, K3, path(100))


def test_tree_minor_fast_path_matches_search():
    # trees bypass the size caps entirely
    spider = MultiGraph.build(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    assert contains(Relation.MINOR, star(3), spider)
    assert not contains(Relation.MINOR, star(4), spider)
    assert contains(Relation.MINOR, path(40), path(60))
    assert contains(Relation.MINOR, spider, MultiGraph.build(
        25, [(i, i + 1) for i in range(20)] + [(5, 21), (10, 22), (15, 23), (21, 24)]))


@settings(max_examples=60)
@given(multigraphs(max_n=4, max_mult=2), multigraphs(max_n=4, max_mult=2))
def test_relation_lattice_on_small_pairs(h, g):
    sub = contains(Relation.SUBGRAPH, h, g)
    tm = contains(Relation.TOPOLOGICAL_MINOR, h, g, mode=Mode.MULTI)
    mnr = contains(Relation.MINOR, h, g, mode=Mode.MULTI)
    imm = contains(Relation.IMMERSION, h, g)
    if sub:
        assert tm
    if tm:
        assert mnr
        assert imm


@settings(max_examples=60)
@given(multigraphs(max_n=4, max_mult=2), multigraphs(max_n=4, max_mult=2))
def test_immersion_engines_agree(h, g):
    assert contains(Relation.IMMERSION, h, g) == immersion_by_liftings(g, h)


@settings(max_examples=40)
@given(multigraphs(max_n=4, max_mult=2), multigraphs(max_n=4, max_mult=2))
def test_containment_is_reflexive_and_respects_size(h, g):
    for rel in Relation:
        assert contains(rel, g, g, mode=Mode.MULTI)
        if h.n > g.n or h.total_units > g.total_units:
            assert not contains(rel, h, g, mode=Mode.MULTI)


def test_immersion_reachable_set_is_downward_closed_sample():
    reach = immersion_reachable_set(K4)
    assert canonical_form(K3) in reach
    assert canonical_form(theta(3)) in reach
    assert canonical_form(theta(4)) not in reach


# -- set-level helpers ----------------------------------------------------------


def test_dedup_and_min_elements():
    sq = grid(2)
    assert len(dedup_graphs([K3, sq, K3])) == 2
    mins = min_elements(Relation.MINOR, [K5, K3, K4, sq])
    assert mins == [K3]
    assert is_antichain(Relation.MINOR, [K4, K23])
    assert not is_antichain(Relation.MINOR, [K3, K4])


def test_set_dominates_direction():
    # every member of the second set lies above some member of the first
    assert set_dominates(Relation.MINOR, [K3], [K4, K5])
    assert not set_dominates(Relation.MINOR, [K4], [K3])
    assert set_dominates(Relation.MINOR, [], [])


def test_closure_helpers():
    universe = [MultiGraph(0), MultiGraph(1), path(2), path(3), K3, K4]
    below = down_closure_within(Relation.MINOR, [K3], universe)
    assert K4 not in below and K3 in below and path(3) in below
    above = up_closure_within(Relation.MINOR, [K3], universe)
    assert above == [K3, K4]


# -- witness checkers ------------------------------------------------------------


def test_verify_subgraph_map():
    c4 = grid(2)
    assert verify_subgraph_map(path(3), c4, (0, 1, 3))
    assert not verify_subgraph_map(path(3), c4, (0, 3, 1))
    assert not verify_subgraph_map(path(3), c4, (0, 1, 1))
    assert not verify_subgraph_map(path(3), c4, (0, 1))


def test_verify_minor_model():
    c4 = grid(2)
    assert c4.multiplicity(1, 2) == 0
    assert verify_minor_model(K3, c4, [(0,), (1,), (3, 2)])
    # (1, 2) is not connected inside the host
    assert not verify_minor_model(K3, c4, [(0,), (1, 2), (3,)])
    assert not verify_minor_model(K3, c4, [(0,), (1,), (2,)])
    assert not verify_minor_model(K3, c4, [(0,), (1,), ()])
    theta2 = theta(2)
    host = MultiGraph.build(3, [(0, 1), (1, 2), (0, 2)])
    assert verify_minor_model(theta2, host, [(0,), (1, 2)], mode=Mode.MULTI)
    assert not verify_minor_model(theta2, MultiGraph.build(2, [(0, 1)]),
                                  [(0,), (1,)], mode=Mode.MULTI)


def test_model_composition():
    # P3 inside C4 inside the 3x3 grid, composed into one model
    c4 = grid(2)
    inner = subgraph_map_as_model((0, 1, 3))
    assert verify_minor_model(path(3), c4, inner)
    outer = [(0,), (1, 2), (3,), (4, 5, 6, 7, 8)]
    assert verify_minor_model(c4, grid(3), outer)
    combined = compose_minor_models(inner, outer)
    assert verify_minor_model(path(3), grid(3), combined)
