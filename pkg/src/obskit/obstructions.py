"""Obstruction sets computed exhaustively inside a bounded graph universe.

A report lists every graph in the universe that violates a containment-closed
predicate while every single-step reduction of it satisfies the predicate.
Single steps are relation-specific: vertex deletion, edge deletion and edge
contraction for minors; vertex deletion, edge deletion and lifting for
immersions.  Because any proper minor (or immersion) of a graph is reachable
through single steps, step-minimal violators are exactly the minimal ones,
and that equivalence is itself re-checked on small universes by the tests.

Reports are complete only up to their (n_max, mult_max) bound: an obstruction
with more vertices is invisible, so every report carries its bound and a note
saying so.  Predicates are assumed closed; a deterministic sample of members
has all of its reductions re-checked, and a counterexample aborts the scan
rather than producing a garbage antichain.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from importlib import resources

import networkx as nx

from .multigraph import (
    MultiGraph,
    canonical_form,
    contract_edge,
    delete_edge,
    delete_vertex,
    enumerate_graphs,
    lift_pair,
    parse_graph_set,
)
from .parameters import ParameterKind, parameter_at_most
from .relations import Mode, Relation, contains, is_antichain, parse_relation


class NonClosedPredicateError(ValueError):
    """A sampled member has a reduction that leaves the class."""

    def __init__(self, member: MultiGraph, reduct: MultiGraph, relation):
        self.member = member
        self.reduct = reduct
        self.relation = relation
        super().__init__(
            f"predicate is not {relation.value}-closed: a member on "
            f"{member.n} vertices has a single-step reduction on "
            f"{reduct.n} vertices outside the class")


class ChainNotFoundError(ValueError):
    """No ascending chain exists inside the searched universe."""


def _single_step_reductions(g, relation, mode):
    simple = mode is Mode.SIMPLE
    for v in range(g.n):
        yield delete_vertex(g, v)
    for u, v, _ in g.edges:
        yield delete_edge(g, u, v, 1)
    if relation in (Relation.MINOR, Relation.TOPOLOGICAL_MINOR):
        for u, v, _ in g.edges:
            yield contract_edge(g, u, v, simple=simple)
    elif relation is Relation.IMMERSION:
        for y in range(g.n):
            nbrs = sorted(g.adj[y])
            for i, x in enumerate(nbrs):
                for z in nbrs[i + 1:]:
                    yield lift_pair(g, x, y, z)


@dataclass(frozen=True)
class ObstructionReport:
    relation: Relation
    mode: Mode
    class_desc: str
    n_max: int
    mult_max: int
    obstructions: tuple[MultiGraph, ...]
    note: str

    def __iter__(self):
        return iter(self.obstructions)


def compute_obstructions(relation, predicate, n_max, mult_max=1, *,
                         class_desc=None, closure_samples=100,
                         rng_seed=0) -> ObstructionReport:
    """All step-minimal predicate violators with at most n_max vertices.

    The scan bails out of a violator as soon as one reduction also violates,
    so the cost is dominated by the graphs near the boundary of the class.
    """
    relation = parse_relation(relation)
    mode = Mode.SIMPLE if mult_max == 1 else Mode.MULTI
    desc = class_desc or getattr(predicate, "__name__", "predicate")

    members = []
    found = []
    for g in enumerate_graphs(n_max, mult_max):
        if predicate(g):
            members.append(g)
        elif all(predicate(r) for r in _single_step_reductions(g, relation, mode)):
            found.append(g)

    rng = random.Random(rng_seed)
    sample = (members if len(members) <= closure_samples
              else rng.sample(members, closure_samples))
    for m in sample:
        for r in _single_step_reductions(m, relation, mode):
            if not predicate(r):
                raise NonClosedPredicateError(m, r, relation)

    if not is_antichain(relation, found, mode=mode):
        raise AssertionError(
            f"step-minimal set for {desc} is not an antichain; "
            "the predicate cannot be containment-closed")
    return ObstructionReport(
        relation=relation, mode=mode, class_desc=desc,
        n_max=n_max, mult_max=mult_max, obstructions=tuple(found),
        note=f"complete up to n<={n_max}, mult<={mult_max}; "
             "larger obstructions are invisible at this bound")


# -- built-in class predicates --------------------------------------------------


def _nx_simple(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from((u, v) for u, v, _ in g.edges)
    return G


def is_forest(g) -> bool:
    """No cycles; a parallel pair already counts as a two-edge cycle."""
    if any(m > 1 for *_, m in g.edges):
        return False
    if g.n == 0:
        return True
    return nx.is_forest(_nx_simple(g))


def is_outerplanar(g) -> bool:
    """Planar with every vertex on one face: adding a universal vertex must
    keep the graph planar.  Equivalent to excluding K4 and K_{2,3} as minors,
    which is exactly what the obstruction scan recovers."""
    H = _nx_simple(g)
    H.add_node(g.n)
    H.add_edges_from((g.n, v) for v in range(g.n))
    return nx.check_planarity(H, counterexample=False)[0]


def is_apex_forest(g) -> bool:
    """Some single vertex deletion (or none) leaves a forest."""
    if is_forest(g):
        return True
    return any(is_forest(delete_vertex(g, v)) for v in range(g.n))


def is_subcubic_forest(g) -> bool:
    return is_forest(g) and max(g.edge_degrees, default=0) <= 3


def is_star_or_edgeless(g) -> bool:
    """Immersion-downward closure of the stars and the edgeless graphs.

    The literal class (a star, or no edges at all) is not closed: deleting an
    edge of a star strands a leaf.  The closure is the simple graphs with at
    most one vertex meeting two or more edges, i.e. at most one star plus
    single edges and isolated vertices.
    """
    if any(m > 1 for *_, m in g.edges):
        return False
    return sum(1 for d in g.edge_degrees if d >= 2) <= 1


def is_theta_like(g) -> bool:
    """Downward closure of the two-vertex multigraphs.

    The closure brings in the two-vertex edgeless graph (delete the edge of
    K2), so membership is simply order at most two.
    """
    return g.n <= 2


#: name -> (default relation, predicate); the CLI's --class choices.
BUILTIN_CLASSES = {
    "forests": (Relation.MINOR, is_forest),
    "outerplanar": (Relation.MINOR, is_outerplanar),
    "apex_forest": (Relation.MINOR, is_apex_forest),
    "subcubic_forest": (Relation.IMMERSION, is_subcubic_forest),
    "star_or_edgeless": (Relation.IMMERSION, is_star_or_edgeless),
    "theta_like": (Relation.IMMERSION, is_theta_like),
}


# -- obstruction sets of parameter level classes --------------------------------

_KIND_OBS_CACHE: dict = {}


def _kind_bounds(kind: ParameterKind, length: int):
    if kind.monotone_relation is Relation.MINOR:
        return 7, 1
    return 4, length + 1


def obstructions_for_kind(kind: ParameterKind, relation, level, n_max, mult_max):
    relation = parse_relation(relation)
    key = (kind.tag, tuple(canonical_form(z) for z in kind.z_list),
           relation, level, n_max, mult_max)
    if key not in _KIND_OBS_CACHE:
        _KIND_OBS_CACHE[key] = compute_obstructions(
            relation, lambda g: parameter_at_most(kind, level, g),
            n_max, mult_max,
            class_desc=f"{kind.tag} <= {level}")
    return _KIND_OBS_CACHE[key]


@dataclass(frozen=True)
class ObstructionChain:
    kind: ParameterKind
    relation: Relation
    levels: tuple[int, ...]
    graphs: tuple[MultiGraph, ...]
    n_max: int
    mult_max: int

    def verify(self) -> bool:
        mode = Mode.SIMPLE if self.mult_max == 1 else Mode.MULTI
        for level, g in zip(self.levels, self.graphs):
            if parameter_at_most(self.kind, level, g):
                return False
            rep = obstructions_for_kind(self.kind, self.relation, level,
                                        self.n_max, self.mult_max)
            if canonical_form(g) not in {canonical_form(o) for o in rep}:
                return False
        return all(contains(self.relation, a, b, mode=mode)
                   for a, b in zip(self.graphs, self.graphs[1:]))


def obstruction_chain(kind: ParameterKind, relation, length, *,
                      n_max=None, mult_max=None) -> ObstructionChain:
    """An ascending chain with one obstruction from each level 1..length.

    Searched depth-first in enumeration order, so the result is the
    lexicographically least chain inside the universe bound.
    """
    relation = parse_relation(relation)
    default_n, default_m = _kind_bounds(kind, length)
    n_max = default_n if n_max is None else n_max
    mult_max = default_m if mult_max is None else mult_max
    mode = Mode.SIMPLE if mult_max == 1 else Mode.MULTI
    reports = [obstructions_for_kind(kind, relation, lvl, n_max, mult_max)
               for lvl in range(1, length + 1)]

    def extend(prefix):
        lvl = len(prefix)
        if lvl == length:
            return prefix
        for cand in reports[lvl].obstructions:
            if prefix and not contains(relation, prefix[-1], cand, mode=mode):
                continue
            full = extend(prefix + [cand])
            if full is not None:
                return full
        return None

    chain = extend([])
    if chain is None:
        raise ChainNotFoundError(
            f"no ascending obstruction chain of length {length} for "
            f"{kind.tag} within n<={n_max}, mult<={mult_max}")
    return ObstructionChain(kind=kind, relation=relation,
                            levels=tuple(range(1, length + 1)),
                            graphs=tuple(chain), n_max=n_max, mult_max=mult_max)


# -- sampled obstruction-to-family embedding ------------------------------------

NO_EMBEDDING_NOTE = ("no obs-to-family embedding; "
                     "equivalence checked via gap_report instead")


@dataclass(frozen=True)
class SampleCheckEntry:
    level: int
    obstruction: MultiGraph | None
    family: str | None
    index: int | None
    note: str


@dataclass(frozen=True)
class SampleCheckReport:
    kind: ParameterKind
    relation: Relation
    entries: tuple[SampleCheckEntry, ...]
    n_max: int
    mult_max: int


def universal_sample_check(kind: ParameterKind, relation, families, k_max, *,
                           n_max=None, mult_max=None,
                           index_cap=8) -> SampleCheckReport:
    """For each level k, embed one obstruction into a family member.

    Takes the enumeration-least obstruction of the level-k class and reports
    the least family index containing it.  Obstructions need not embed at
    all (no tree contains a triangle); that outcome is recorded, not fatal.
    """
    relation = parse_relation(relation)
    default_n, default_m = _kind_bounds(kind, k_max)
    n_max = default_n if n_max is None else n_max
    mult_max = default_m if mult_max is None else mult_max
    entries = []
    for level in range(1, k_max + 1):
        rep = obstructions_for_kind(kind, relation, level, n_max, mult_max)
        if not rep.obstructions:
            entries.append(SampleCheckEntry(level, None, None, None,
                                            "no obstruction within bound"))
            continue
        target = rep.obstructions[0]
        best = None
        for fam in families:
            for idx in range(fam.base_index, fam.base_index + index_cap + 1):
                if best is not None and idx >= best[1]:
                    break
                if contains(relation, target, fam.member(idx), max_host=512):
                    best = (fam.name, idx)
                    break
        if best is None:
            entries.append(SampleCheckEntry(level, target, None, None,
                                            NO_EMBEDDING_NOTE))
        else:
            entries.append(SampleCheckEntry(level, target, best[0], best[1],
                                            "embedded"))
    return SampleCheckReport(kind=kind, relation=relation,
                             entries=tuple(entries),
                             n_max=n_max, mult_max=mult_max)


# -- packaged golden fixtures ----------------------------------------------------


def fixture_graphs(name: str) -> list[MultiGraph]:
    """Graphs from a packaged fixture file under fixtures/."""
    text = resources.files(__package__).joinpath("fixtures", name).read_text()
    return parse_graph_set(text)
