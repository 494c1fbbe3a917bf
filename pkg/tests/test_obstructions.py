import pytest

from obskit.multigraph import MultiGraph, canonical_form, copies
from obskit.families import complete, complete_bipartite, grid, path, star, theta
from obskit.obstructions import (
    BUILTIN_CLASSES,
    ChainNotFoundError,
    NonClosedPredicateError,
    ObstructionReport,
    compute_obstructions,
    fixture_graphs,
    is_apex_forest,
    is_forest,
    is_outerplanar,
    is_star_or_edgeless,
    is_subcubic_forest,
    is_theta_like,
    obstruction_chain,
    universal_sample_check,
)
from obskit.parameters import EDGE_DEGREE, TREEWIDTH
from obskit.relations import Relation, is_antichain
from obskit.families import GRID_FAMILY, COMPLETE_FAMILY

K3, K4 = complete(3), complete(4)


def keys(graphs):
    return sorted(canonical_form(g) for g in graphs)


# -- predicates ---------------------------------------------------------------


def test_forest_predicate():
    assert is_forest(MultiGraph(0))
    assert is_forest(path(5))
    assert not is_forest(K3)
    assert not is_forest(theta(2))  # a parallel pair is a cycle


def test_outerplanar_predicate():
    assert is_outerplanar(path(4))
    assert is_outerplanar(K3)
    assert not is_outerplanar(K4)
    assert not is_outerplanar(complete_bipartite(2, 3))


def test_apex_forest_predicate():
    assert is_apex_forest(K3)
    assert is_apex_forest(grid(2))
    assert not is_apex_forest(K4)
    assert not is_apex_forest(copies(2, K3))


def test_degree_restricted_predicates():
    assert is_subcubic_forest(star(3))
    assert not is_subcubic_forest(star(4))
    assert is_star_or_edgeless(star(5))
    assert is_star_or_edgeless(MultiGraph(3))
    # one star plus stray edges is inside the lift-closure
    assert is_star_or_edgeless(MultiGraph.build(5, [(0, 1), (0, 2), (3, 4)]))
    assert not is_star_or_edgeless(path(4))
    assert is_theta_like(theta(9))
    assert is_theta_like(MultiGraph(2))
    assert not is_theta_like(path(3))


# -- the scan -----------------------------------------------------------------


def test_forest_obstructions_small_bound():
    rep = compute_obstructions(Relation.MINOR, is_forest, 4)
    assert keys(rep.obstructions) == keys([K3])
    assert rep.n_max == 4 and rep.mult_max == 1
    assert "complete up to" in rep.note
    assert list(rep) == list(rep.obstructions)


def test_theta_like_obstructions():
    rep = compute_obstructions(Relation.IMMERSION, is_theta_like, 4, 2)
    assert keys(rep.obstructions) == keys([MultiGraph(3)])


def test_non_closed_predicate_detected():
    def literal_star_or_edgeless(g):  # not closed: stars lose leaves badly
        if not g.edges:
            return True
        degs = sorted(g.edge_degrees)
        return g.n >= 2 and degs[:-1] == [1] * (g.n - 1)

    with pytest.raises(NonClosedPredicateError) as err:
        compute_obstructions(Relation.IMMERSION, literal_star_or_edgeless, 4, 1)
    assert err.value.member.n <= 4


def test_obstructions_are_an_antichain_by_construction():
    rep = compute_obstructions(Relation.MINOR, is_apex_forest, 5)
    assert is_antichain(Relation.MINOR, list(rep))


def test_bounded_universe_hides_large_obstructions():
    # at n<=3 the outerplanar scan cannot see either obstruction
    rep = compute_obstructions(Relation.MINOR, is_outerplanar, 3)
    assert rep.obstructions == ()


# -- fixtures -----------------------------------------------------------------


def test_fixture_files_parse_and_stay_antichains():
    for name, expect in [("obstructions_forests.txt", 1),
                         ("obstructions_outerplanar.txt", 2),
                         ("obstructions_apex_forest.txt", 3),
                         ("obstructions_subcubic_forest.txt", 2),
                         ("obstructions_star_or_edgeless.txt", 3),
                         ("obstructions_theta_like.txt", 1)]:
        graphs = fixture_graphs(name)
        assert len(graphs) == expect, name
        rel = BUILTIN_CLASSES[name[len("obstructions_"):-4]][0]
        assert is_antichain(rel, graphs), name


def test_apex_forest_third_fixture_contents():
    third = fixture_graphs("apex_forest_third_obstruction.txt")
    assert len(third) == 1
    g = third[0]
    assert (g.n, g.total_units) == (6, 9)
    assert sorted(g.edge_degrees) == [2, 2, 2, 4, 4, 4]
    assert not is_apex_forest(g)
    full = fixture_graphs("obstructions_apex_forest.txt")
    assert canonical_form(g) in keys(full)


def test_subcubic_forest_obstructions_at_stated_bound():
    rep = compute_obstructions(Relation.IMMERSION, is_subcubic_forest, 5, 2)
    assert keys(rep.obstructions) == keys([theta(2), star(4)])


def test_star_or_edgeless_fixture_is_the_honest_set():
    # computed at n<=6, mult<=2: a theta pair, the 4-path, and two stacked
    # 3-paths; the 4-path is minimal because lifting its middle makes a
    # member, and nothing smaller dominates it
    graphs = fixture_graphs("obstructions_star_or_edgeless.txt")
    sizes = sorted((g.n, g.total_units) for g in graphs)
    assert sizes == [(2, 2), (4, 3), (6, 4)]
    rep = compute_obstructions(Relation.IMMERSION, is_star_or_edgeless, 6, 2)
    assert keys(rep.obstructions) == keys(graphs)


def test_unknown_fixture_name():
    with pytest.raises(FileNotFoundError):
        fixture_graphs("no_such_fixture.txt")


# -- parameter level chains ----------------------------------------------------


def test_treewidth_chain():
    ch = obstruction_chain(TREEWIDTH, Relation.MINOR, 2, n_max=5)
    assert keys(ch.graphs) == keys([K3, K4])
    assert ch.levels == (1, 2)
    assert ch.verify()


def test_edge_degree_chain():
    ch = obstruction_chain(EDGE_DEGREE, Relation.IMMERSION, 2)
    assert [(g.n, g.total_units) for g in ch.graphs] == [(2, 2), (2, 3)]
    assert ch.verify()


def test_chain_not_found_in_tiny_universe():
    with pytest.raises(ChainNotFoundError):
        obstruction_chain(TREEWIDTH, Relation.MINOR, 3, n_max=4)


def test_universal_sample_check_embeds_into_grids():
    rep = universal_sample_check(TREEWIDTH, Relation.MINOR,
                                 [GRID_FAMILY, COMPLETE_FAMILY], 2, n_max=5)
    assert [e.level for e in rep.entries] == [1, 2]
    assert all(e.note == "embedded" for e in rep.entries)
    assert [(e.family, e.index) for e in rep.entries] == [("grid", 2), ("grid", 3)]
