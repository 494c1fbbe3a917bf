"""Exact solvers for the width and apex parameters used across the toolkit.

All solvers are exponential subset dynamic programs over vertex bitmasks,
exact at desk scale and guarded by hard vertex caps.  Width parameters of a
multigraph are those of its simplification, except cutwidth, which counts
edge multiplicities.  The empty graph evaluates to 0 everywhere so the
parameters stay total and monotone at the bottom.

Each solver that promises a witness returns one that an independent checker
(`layout_*_cost`, `is_z_apex_witness`) re-evaluates without consulting the
DP tables.

bi_pathwidth is the maximum pathwidth over blocks.  A minimum would not be
minor-monotone (a pendant edge glued to K4 would drag the value down to 1),
so the maximum is the only reading compatible with monotonicity; outputs
carry a `block_rule: max` flag to make the convention visible.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx

from .multigraph import BudgetExceededError, MultiGraph, delete_vertex
from .relations import Relation, contains

MAX_TREEWIDTH_VERTICES = 16
MAX_PATHWIDTH_VERTICES = 16
MAX_CUTWIDTH_VERTICES = 14
MAX_Z_APEX_VERTICES = 12


@dataclass(frozen=True)
class Layout:
    """A linear layout: order[i] is the vertex at position i+1."""

    order: tuple[int, ...]


def _check_cap(g: MultiGraph, cap: int, what: str):
    if g.n > cap:
        raise BudgetExceededError(
            f"{what} solver capped", {"vertices": g.n, "cap": cap})


def _neighbor_masks(g: MultiGraph) -> list[int]:
    masks = [0] * g.n
    for u, v, _ in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _component_mask(start: int, allowed: int, nmask: list[int]) -> int:
    comp = 1 << start
    frontier = comp
    while frontier:
        grown = 0
        m = frontier
        while m:
            low = m & -m
            grown |= nmask[low.bit_length() - 1]
            m ^= low
        grown &= allowed & ~comp
        comp |= grown
        frontier = grown
    return comp


def _mask_neighbors(mask: int, nmask: list[int]) -> int:
    out = 0
    m = mask
    while m:
        low = m & -m
        out |= nmask[low.bit_length() - 1]
        m ^= low
    return out


def _states_by_popcount(n: int) -> list[int]:
    return sorted(range(1 << n), key=lambda s: (s.bit_count(), s))


def treewidth(g: MultiGraph) -> tuple[int, Layout]:
    """Exact treewidth with a witness layout.

    Uses the layout characterization: at each position, count the earlier
    vertices adjacent to the connected component (within the unplaced
    suffix) of the vertex placed there; treewidth is the min over layouts
    of the worst position.
    """
    g = g.simplify()
    _check_cap(g, MAX_TREEWIDTH_VERTICES, "treewidth")
    n = g.n
    if n == 0:
        return 0, Layout(())
    nmask = _neighbor_masks(g)
    full = (1 << n) - 1
    size = 1 << n
    dp = [n] * size
    choice = [-1] * size
    dp[0] = 0
    for s in _states_by_popcount(n):
        if s == 0:
            continue
        best, bv = n, -1
        for v in range(n):
            bit = 1 << v
            if not s & bit:
                continue
            prev = s ^ bit
            if dp[prev] >= best:
                continue
            comp = _component_mask(v, full & ~prev, nmask)
            cost = (_mask_neighbors(comp, nmask) & prev).bit_count()
            val = dp[prev] if dp[prev] > cost else cost
            if val < best:
                best, bv = val, v
        dp[s] = best
        choice[s] = bv
    order: list[int] = []
    s = full
    while s:
        v = choice[s]
        order.append(v)
        s ^= 1 << v
    order.reverse()
    return dp[full], Layout(tuple(order))


def treewidth_by_elimination(g: MultiGraph) -> int:
    """Treewidth again, as the cheapest worst elimination degree.

    Eliminating v costs the number of still-present vertices adjacent to
    the component of v inside the already-eliminated region plus v.  Kept
    as a separately coded oracle so the two solvers can be compared.
    """
    g = g.simplify()
    _check_cap(g, MAX_TREEWIDTH_VERTICES, "treewidth")
    n = g.n
    if n == 0:
        return 0
    nmask = _neighbor_masks(g)
    full = (1 << n) - 1
    size = 1 << n
    dp = [n] * size
    dp[0] = 0
    for s in _states_by_popcount(n):
        if s == 0:
            continue
        best = n
        for v in range(n):
            bit = 1 << v
            if not s & bit:
                continue
            prev = s ^ bit
            if dp[prev] >= best:
                continue
            comp = _component_mask(v, prev | bit, nmask)
            cost = (_mask_neighbors(comp, nmask) & full & ~(prev | bit)).bit_count()
            val = dp[prev] if dp[prev] > cost else cost
            if val < best:
                best = val
        dp[s] = best
    return dp[full]


def pathwidth(g: MultiGraph) -> tuple[int, Layout]:
    """Exact pathwidth via vertex separation, with a witness layout."""
    g = g.simplify()
    _check_cap(g, MAX_PATHWIDTH_VERTICES, "pathwidth")
    n = g.n
    if n == 0:
        return 0, Layout(())
    nmask = _neighbor_masks(g)
    full = (1 << n) - 1
    size = 1 << n
    boundary = [0] * size
    for s in range(size):
        b = 0
        m = s
        while m:
            low = m & -m
            if nmask[low.bit_length() - 1] & ~s & full:
                b += 1
            m ^= low
        boundary[s] = b
    dp = [n] * size
    choice = [-1] * size
    dp[0] = 0
    for s in _states_by_popcount(n):
        if s == 0:
            continue
        best, bv = n, -1
        for v in range(n):
            bit = 1 << v
            if not s & bit:
                continue
            prev = s ^ bit
            cost = boundary[prev]
            val = dp[prev] if dp[prev] > cost else cost
            if val < best:
                best, bv = val, v
        dp[s] = best
        choice[s] = bv
    order: list[int] = []
    s = full
    while s:
        v = choice[s]
        order.append(v)
        s ^= 1 << v
    order.reverse()
    return dp[full], Layout(tuple(order))


def cutwidth(g: MultiGraph) -> tuple[int, Layout]:
    """Exact cutwidth, counting multiplicities, with a witness layout."""
    _check_cap(g, MAX_CUTWIDTH_VERTICES, "cutwidth")
    n = g.n
    if n == 0:
        return 0, Layout(())
    full = (1 << n) - 1
    size = 1 << n
    adj = g.adj
    cut = [0] * size
    for s in range(1, size):
        low = s & -s
        v = low.bit_length() - 1
        prev = s ^ low
        delta = 0
        for w, m in adj[v].items():
            delta -= m if prev >> w & 1 else -m
        cut[s] = cut[prev] + delta
    dp = [1 << 30] * size
    choice = [-1] * size
    dp[0] = 0
    for s in _states_by_popcount(n):
        if s == 0:
            continue
        here = cut[s]
        best, bv = 1 << 30, -1
        for v in range(n):
            bit = 1 << v
            if not s & bit:
                continue
            prev = s ^ bit
            val = dp[prev] if dp[prev] > here else here
            if val < best:
                best, bv = val, v
        dp[s] = best
        choice[s] = bv
    order: list[int] = []
    s = full
    while s:
        v = choice[s]
        order.append(v)
        s ^= 1 << v
    order.reverse()
    return dp[full], Layout(tuple(order))


def edge_degree(g: MultiGraph) -> int:
    """Largest number of edge units meeting one vertex (0 for no vertices)."""
    return max(g.edge_degrees, default=0)


def _blocks(g: MultiGraph) -> list[MultiGraph]:
    """Blocks of the simplified graph: 2-connected pieces, bridges, and
    isolated vertices, each relabeled to its own vertex range."""
    g = g.simplify()
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from((u, v) for u, v, _ in g.edges)
    out = []
    covered: set[int] = set()
    for comp in nx.biconnected_components(G):
        vs = sorted(comp)
        covered.update(vs)
        pos = {v: i for i, v in enumerate(vs)}
        edges = [(pos[u], pos[v]) for u, v, _ in g.edges
                 if u in comp and v in comp]
        out.append(MultiGraph.build(len(vs), edges))
    for v in range(g.n):
        if v not in covered:
            out.append(MultiGraph(1))
    return out


def bi_pathwidth(g: MultiGraph) -> int:
    """Maximum pathwidth over the blocks of g (see the module docstring)."""
    _check_cap(g, MAX_PATHWIDTH_VERTICES, "bi_pathwidth")
    return max((pathwidth(b)[0] for b in _blocks(g)), default=0)


def z_apex(g: MultiGraph, z_list) -> tuple[int, tuple[int, ...]]:
    """Minimum number of vertex deletions leaving no member of z_list as a
    minor, with the deletion set as witness."""
    _check_cap(g, MAX_Z_APEX_VERTICES, "z_apex")
    z_list = list(z_list)
    for size in range(g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            if is_z_apex_witness(g, z_list, combo):
                return size, combo
    raise AssertionError("deleting every vertex leaves K0, which has no minors")


# -- independent witness checkers ---------------------------------------------

def layout_treewidth_cost(g: MultiGraph, layout: Layout) -> int:
    g = g.simplify()
    order = list(layout.order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("layout is not a permutation of the vertices")
    worst = 0
    for i, v in enumerate(order):
        prefix = set(order[:i])
        suffix = set(order[i:])
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y in suffix and y not in comp:
                    comp.add(y)
                    stack.append(y)
        cost = sum(1 for u in prefix if any(y in comp for y in g.adj[u]))
        worst = max(worst, cost)
    return worst


def layout_pathwidth_cost(g: MultiGraph, layout: Layout) -> int:
    g = g.simplify()
    order = list(layout.order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("layout is not a permutation of the vertices")
    worst = 0
    for i in range(len(order)):
        prefix = set(order[:i])
        suffix = set(order[i:])
        cost = sum(1 for u in prefix if any(y in suffix for y in g.adj[u]))
        worst = max(worst, cost)
    return worst


def layout_cutwidth_cost(g: MultiGraph, layout: Layout) -> int:
    order = list(layout.order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("layout is not a permutation of the vertices")
    pos = {v: i for i, v in enumerate(order)}
    worst = 0
    for i in range(1, len(order)):
        cost = sum(m for u, v, m in g.edges if (pos[u] < i) != (pos[v] < i))
        worst = max(worst, cost)
    return worst


def is_z_apex_witness(g: MultiGraph, z_list, deletions) -> bool:
    remaining = g
    for v in sorted(set(deletions), reverse=True):
        remaining = delete_vertex(remaining, v)
    return not any(contains(Relation.MINOR, z, remaining) for z in z_list)


# -- parameter kinds -----------------------------------------------------------

@dataclass(frozen=True)
class ParameterKind:
    """A named parameter, optionally carrying the forbidden-minor list that
    the apex variant deletes toward."""

    tag: str
    z_list: tuple[MultiGraph, ...] = ()

    @property
    def monotone_relation(self) -> Relation:
        if self.tag in ("cutwidth", "edge_degree"):
            return Relation.IMMERSION
        return Relation.MINOR

    def __str__(self) -> str:
        return self.tag


TREEWIDTH = ParameterKind("treewidth")
PATHWIDTH = ParameterKind("pathwidth")
CUTWIDTH = ParameterKind("cutwidth")
BI_PATHWIDTH = ParameterKind("bi_pathwidth")
EDGE_DEGREE = ParameterKind("edge_degree")


def z_apex_kind(z_list) -> ParameterKind:
    return ParameterKind("z_apex", tuple(z_list))


KIND_ALIASES = {
    "treewidth": "treewidth", "tw": "treewidth",
    "pathwidth": "pathwidth", "pw": "pathwidth",
    "cutwidth": "cutwidth", "cw": "cutwidth",
    "bi_pathwidth": "bi_pathwidth", "bi-pathwidth": "bi_pathwidth",
    "bi_pw": "bi_pathwidth", "bipw": "bi_pathwidth",
    "edge_degree": "edge_degree", "edge-degree": "edge_degree",
    "ed": "edge_degree",
    "z_apex": "z_apex", "z-apex": "z_apex", "zapex": "z_apex",
}


_KIND_BY_TAG = {k.tag: k for k in
                (TREEWIDTH, PATHWIDTH, CUTWIDTH, BI_PATHWIDTH, EDGE_DEGREE)}


def parse_kind(name: str, z_list=()) -> ParameterKind:
    try:
        tag = KIND_ALIASES[name.strip().lower()]
    except KeyError:
        raise ValueError(f"unknown parameter kind {name!r}; choose from "
                         f"{sorted(set(KIND_ALIASES))}")
    if tag == "z_apex":
        if not z_list:
            raise ValueError("z_apex needs a non-empty forbidden-minor list")
        return z_apex_kind(z_list)
    return _KIND_BY_TAG[tag]


def parameter_value(kind: ParameterKind, g: MultiGraph) -> int:
    if kind.tag == "treewidth":
        return treewidth(g)[0]
    if kind.tag == "pathwidth":
        return pathwidth(g)[0]
    if kind.tag == "cutwidth":
        return cutwidth(g)[0]
    if kind.tag == "bi_pathwidth":
        return bi_pathwidth(g)
    if kind.tag == "edge_degree":
        return edge_degree(g)
    if kind.tag == "z_apex":
        return z_apex(g, kind.z_list)[0]
    raise ValueError(f"unknown parameter kind {kind.tag!r}")


def parameter_at_most(kind: ParameterKind, k: int, g: MultiGraph) -> bool:
    return parameter_value(kind, g) <= k
