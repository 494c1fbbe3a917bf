"""The collection parameter: least index at which a family escapes a graph.

For a monotone family H with strictly growing members, p_H(G) is the least
k with H_k not contained in G.  The scan is finite because members outgrow
G: a pattern with more vertices plus edge units than the host can never be
contained, so the oracle is consulted only while sizes permit.  Families
whose base index is above 1 are clamped at the bottom: when even the base
member fails to embed, the value is max(base - 1, 1), which keeps the grid
collection consistent with treewidth on tiny graphs (the family simply has
no smaller members to witness intermediate levels).

For a collection the value is computed twice, by the max-over-families
formula and by the joint ascending scan, and the two results are asserted
equal on every call.  A mismatch is an implementation bug, never data.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .families import ParametricFamily, family_by_name, growth_size
from .multigraph import MultiGraph, enum_key, enumerate_graphs
from .parameters import ParameterKind, parameter_value
from .relations import Mode, Relation, contains, parse_relation

# generous caps: scans are already bounded by the size-growth rule, these
# only guard against runaway containment queries on mid-size members
_MAX_PATTERN = 64
_MAX_HOST = 64


@dataclass(frozen=True)
class PrimeCollection:
    """A finite antichain of monotone families under one relation.

    Primality (each prefix is a chain) and pairwise incomparability are
    established by the test suite per shipped collection; construction only
    checks the cheap structural facts.
    """

    name: str
    relation: Relation
    families: tuple[ParametricFamily, ...]
    prefix_len: int = 5

    def __post_init__(self):
        if not self.families:
            raise ValueError("a collection needs at least one family")
        for fam in self.families:
            if fam.relation is not self.relation:
                raise ValueError(
                    f"family {fam.name} is ordered by {fam.relation.value}, "
                    f"collection by {self.relation.value}")

    @property
    def min_base(self) -> int:
        return min(f.base_index for f in self.families)


def _member_fits(member, g) -> bool:
    return (member.n <= g.n and member.total_units <= g.total_units)


def _scan_contained(fam: ParametricFamily, relation, g, cache):
    """cache[k] = is fam.member(k) contained in g, with size short-circuit."""

    def check(k: int) -> bool:
        if k not in cache:
            m = fam.member(k)
            prev = cache.get(("size", k - 1))
            size = growth_size(m)
            if prev is not None and size <= prev:
                raise ValueError(
                    f"family {fam.name} does not grow strictly at index {k}")
            cache[("size", k)] = size
            cache[k] = _member_fits(m, g) and contains(
                relation, m, g, max_pattern=_MAX_PATTERN, max_host=_MAX_HOST)
        return cache[k]

    return check


def p_of_sequence(fam: ParametricFamily, g: MultiGraph, *, relation=None) -> int:
    """Least k with fam.member(k) not contained in g (clamped at the base)."""
    relation = fam.relation if relation is None else parse_relation(relation)
    contained = _scan_contained(fam, relation, g, {})
    k = fam.base_index
    if not contained(k):
        return max(k - 1, 1)
    while contained(k):
        k += 1
    return k


def p_of_collection(coll: PrimeCollection, g: MultiGraph) -> int:
    """Collection value computed by both formulas; equality is asserted."""
    caches = {fam.name: {} for fam in coll.families}

    by_max = 1
    for fam in coll.families:
        contained = _scan_contained(fam, coll.relation, g, caches[fam.name])
        k = fam.base_index
        if not contained(k):
            val = max(k - 1, 1)
        else:
            while contained(k):
                k += 1
            val = k
        by_max = max(by_max, val)

    def eff_contained(fam, k):
        check = _scan_contained(fam, coll.relation, g, caches[fam.name])
        return check(max(k, fam.base_index))

    by_min = 1
    while any(eff_contained(fam, by_min) for fam in coll.families):
        by_min += 1

    if by_max != by_min:
        raise AssertionError(
            f"collection formulas disagree on a {g.n}-vertex graph: "
            f"max-form {by_max}, min-form {by_min}; this is a bug")
    return by_max


def p_of_prefix(relation, graphs, g, *, base_index=1, mode=None):
    """Literal least-escape evaluation over an explicit finite prefix.

    Returns (value, certified).  The value is exact for the infinite
    sequence only when the prefix already outgrows g, which is what the
    certified flag reports; on a non-growing ad hoc prefix it is a lower
    bound.
    """
    relation = parse_relation(relation)
    graphs = list(graphs)
    contained = [
        _member_fits(m, g) and contains(relation, m, g, mode=mode,
                                        max_pattern=_MAX_PATTERN,
                                        max_host=_MAX_HOST)
        for m in graphs]
    hits = [i for i, c in enumerate(contained) if c]
    value = base_index + hits[-1] + 1 if hits else max(base_index - 1, 1)
    certified = bool(graphs) and growth_size(graphs[-1]) > growth_size(g)
    return value, certified


# -- gap functions ----------------------------------------------------------------


@dataclass(frozen=True)
class GapFunction:
    """A monotone bound map given in closed form.

    form is one of identity, linear (a*k + b), polynomial (k**c) or
    tabulated (explicit small table with a linear tail).
    """

    form: str
    a: int = 1
    b: int = 0
    c: int = 1
    table: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.form not in ("identity", "linear", "polynomial", "tabulated"):
            raise ValueError(f"unknown gap form {self.form!r}")
        if self.form == "linear" and self.a < 0:
            raise ValueError("linear gap needs a >= 0")
        if self.form == "polynomial" and self.c < 1:
            raise ValueError("polynomial gap needs c >= 1")
        if self.form == "tabulated":
            items = sorted(self.table)
            object.__setattr__(self, "table", tuple(items))
            values = [v for _, v in items]
            if values != sorted(values):
                raise ValueError("tabulated gap must be nondecreasing")
            if items and self.a >= 0:
                last_k, last_v = items[-1]
                if self.a * (last_k + 1) + self.b < last_v:
                    raise ValueError("tail drops below the table")

    def __call__(self, k: int) -> int:
        if self.form == "identity":
            return k
        if self.form == "linear":
            return self.a * k + self.b
        if self.form == "polynomial":
            return k ** self.c
        for key, val in self.table:
            if key == k:
                return val
        return self.a * k + self.b


def identity_gap() -> GapFunction:
    return GapFunction("identity")


def linear_gap(a: int, b: int) -> GapFunction:
    return GapFunction("linear", a=a, b=b)


def polynomial_gap(c: int) -> GapFunction:
    return GapFunction("polynomial", c=c)


def tabulated_gap(table: dict, tail=(1, 1)) -> GapFunction:
    return GapFunction("tabulated", a=tail[0], b=tail[1],
                       table=tuple(table.items()))


# -- the approximation driver ------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    kind: str            # "ABOVE" or "AT_MOST"
    bound: int
    collection_value: int

    def __str__(self):
        return f"{self.kind}({self.bound})"


def approximate(coll: PrimeCollection, gap: GapFunction, g, k) -> Verdict:
    """Dichotomy against the exactly computed collection value.

    If the collection value exceeds gap(k) the target parameter provably
    exceeds k (for a certificate whose upper side holds); otherwise the
    target is at most gap(gap(k)) (for one whose lower side holds).
    """
    p = p_of_collection(coll, g)
    if p > gap(k):
        return Verdict("ABOVE", k, p)
    return Verdict("AT_MOST", gap(gap(k)), p)


@dataclass(frozen=True)
class CertifiedTriple:
    """A (parameter, collection, gap) certificate and where it is valid."""

    kind: ParameterKind
    collection: PrimeCollection
    gap: GapFunction
    sides: frozenset          # subset of {"above", "at_most"}
    scope: str


# -- gap reports ------------------------------------------------------------------


@dataclass(frozen=True)
class GapRow:
    graph: MultiGraph
    parameter: int
    collection: int


@dataclass(frozen=True)
class GapReport:
    kind: ParameterKind
    collection: str
    rows: tuple[GapRow, ...]
    #: max collection value seen at each exact parameter value
    envelope_by_parameter: tuple[tuple[int, int], ...]
    #: max exact parameter value seen at each collection value
    envelope_by_collection: tuple[tuple[int, int], ...]


def gap_report(kind: ParameterKind, coll: PrimeCollection, corpus) -> GapReport:
    rows = []
    for g in sorted(corpus, key=enum_key):
        rows.append(GapRow(g, parameter_value(kind, g), p_of_collection(coll, g)))
    env_p: dict[int, int] = {}
    env_c: dict[int, int] = {}
    for row in rows:
        env_p[row.parameter] = max(env_p.get(row.parameter, 0), row.collection)
        env_c[row.collection] = max(env_c.get(row.collection, 0), row.parameter)
    return GapReport(kind=kind, collection=coll.name, rows=tuple(rows),
                     envelope_by_parameter=tuple(sorted(env_p.items())),
                     envelope_by_collection=tuple(sorted(env_c.items())))


# -- shipped collections and certificates ------------------------------------------

def _registered(name):
    return family_by_name(name)


GRID_COLLECTION = PrimeCollection(
    "grids", Relation.MINOR, (_registered("grid"),))
TREE_COLLECTION = PrimeCollection(
    "ternary-trees", Relation.MINOR, (_registered("ternary_tree"),))
DEGREE_COLLECTION = PrimeCollection(
    "thetas-and-stars", Relation.IMMERSION,
    (_registered("theta"), _registered("star")))
BLOCK_COLLECTION = PrimeCollection(
    "apex-trees-and-duals", Relation.MINOR,
    (_registered("ternary_tree_apex"), _registered("ternary_tree_apex_dual")))

COLLECTIONS = {c.name: c for c in
               (GRID_COLLECTION, TREE_COLLECTION, DEGREE_COLLECTION,
                BLOCK_COLLECTION)}

from .parameters import EDGE_DEGREE, PATHWIDTH, TREEWIDTH  # noqa: E402

#: certificate name -> CertifiedTriple; sides say which verdicts are backed
#: by an exact solver within the stated scope.
CERTIFICATES = {
    "treewidth": CertifiedTriple(
        TREEWIDTH, GRID_COLLECTION, linear_gap(1, 1),
        frozenset({"above"}),
        "above-side sound everywhere (grid value never undershoots "
        "treewidth by more than one); the at-most side is not certified"),
    "edge_degree": CertifiedTriple(
        EDGE_DEGREE, DEGREE_COLLECTION, linear_gap(1, 1),
        frozenset({"above", "at_most"}),
        "both sides sound on the theta/star corpus where the collection "
        "value exceeds the edge degree by exactly one"),
    "pathwidth": CertifiedTriple(
        PATHWIDTH, TREE_COLLECTION,
        tabulated_gap({0: 1, 1: 2, 2: 2}),
        frozenset({"above", "at_most"}),
        "empirical, corpus-valid only: gap measured on trees with at "
        "most 9 vertices, linear tail beyond the table"),
}


# -- corpora -----------------------------------------------------------------------


def mixed_corpus(limit=500):
    """The first `limit` graphs of the multiplicity-2 universe, in order."""
    out = []
    for g in enumerate_graphs(6, 2):
        out.append(g)
        if len(out) == limit:
            break
    return out


def theta_star_corpus(k_max=7):
    from .families import star, theta
    corpus = [theta(k) for k in range(1, k_max + 1)]
    corpus += [star(j) for j in range(2, k_max + 1)]
    return corpus


def tree_corpus(n_max=9):
    """All trees up to n_max vertices, plus the empty and one-vertex graphs."""
    import networkx as nx
    out = [MultiGraph(0), MultiGraph(1)]
    for n in range(2, n_max + 1):
        for t in nx.nonisomorphic_trees(n):
            out.append(MultiGraph.build(n, list(t.edges())))
    return out


# -- collection files ---------------------------------------------------------------


def format_collection_spec(coll: PrimeCollection) -> str:
    return json.dumps({
        "name": coll.name,
        "relation": coll.relation.value,
        "families": [f.name for f in coll.families],
        "prefix": coll.prefix_len,
    }, indent=2) + "\n"


def parse_collection_spec(text: str) -> PrimeCollection:
    data = json.loads(text)
    try:
        relation = data["relation"]
        names = data["families"]
    except KeyError as exc:
        raise ValueError(f"collection spec is missing the {exc.args[0]!r} key")
    return PrimeCollection(
        name=data.get("name", "custom"),
        relation=parse_relation(relation),
        families=tuple(family_by_name(n) for n in names),
        prefix_len=int(data.get("prefix", 5)))
