"""Decision procedures for four containment quasi-orders on multigraphs.

`contains(rel, h, g)` asks whether the host g contains the pattern h under
the chosen relation.  All four searches are exact and deterministic.
Subgraph, topological-minor, and immersion queries run backtracking
searches in ascending label order; minor queries first try the subgraph
shortcut, then descend through single-step host reductions with
canonical-form memoization, so a negative answer costs at most one visit
per minor class of the (normalized) host.  Pattern and host sizes are
capped (8 and 16 vertices by default); callers that know their instance is
tractable may raise the caps explicitly.  Oversized patterns are rejected by the trivial size comparison
before the cap applies, and equal-size instances are settled by isomorphism,
so reflexivity and reverse-direction queries work at any size.

Multiplicity semantics (multi mode):

* subgraph: injective vertex map, mult_h(u,v) <= mult_g(image pair),
* topological minor: injective map plus one path per pattern edge unit,
  paths internally vertex-disjoint from each other and from the images;
  parallel pattern units may be routed directly while distinct host units
  remain between the image pair,
* minor: disjoint connected branch sets, mult_h(u,v) distinct host units
  between the sets for each pattern pair,
* immersion: injective map plus one path per pattern edge unit, paths
  pairwise edge-unit-disjoint; paths may pass through images.

Simple mode collapses multiplicities on both sides first.  Minor and
topological minor default to simple mode, subgraph and immersion to multi.
Every CLI-facing report records which mode was in force.
"""
from __future__ import annotations

import itertools
import time
from enum import Enum

from .multigraph import (
    BudgetExceededError,
    MultiGraph,
    are_isomorphic,
    canonical_form,
    contract_edge,
    delete_edge,
    delete_vertex,
    enum_key,
    lift_pair,
)

DEFAULT_MAX_PATTERN = 8
DEFAULT_MAX_HOST = 16


class Relation(str, Enum):
    SUBGRAPH = "subgraph"
    TOPOLOGICAL_MINOR = "topological_minor"
    MINOR = "minor"
    IMMERSION = "immersion"


class Mode(str, Enum):
    SIMPLE = "simple"
    MULTI = "multi"


RELATION_ALIASES = {
    "subgraph": Relation.SUBGRAPH,
    "sub": Relation.SUBGRAPH,
    "topological_minor": Relation.TOPOLOGICAL_MINOR,
    "topological-minor": Relation.TOPOLOGICAL_MINOR,
    "tm": Relation.TOPOLOGICAL_MINOR,
    "minor": Relation.MINOR,
    "immersion": Relation.IMMERSION,
    "im": Relation.IMMERSION,
}


def parse_relation(name: str) -> Relation:
    try:
        return RELATION_ALIASES[name.strip().lower()]
    except KeyError:
        raise ValueError(f"unknown relation {name!r}; choose from "
                         f"{sorted(set(RELATION_ALIASES))}")


def default_mode(relation: Relation) -> Mode:
    if relation in (Relation.MINOR, Relation.TOPOLOGICAL_MINOR):
        return Mode.SIMPLE
    return Mode.MULTI


class _Deadline:
    """Cheap cooperative wall-clock cutoff; check() is called in inner loops."""

    __slots__ = ("until", "ticks")

    def __init__(self, budget_ms: float | None):
        self.until = None if budget_ms is None else time.monotonic() + budget_ms / 1000.0
        self.ticks = 0

    def check(self):
        if self.until is None:
            return
        self.ticks += 1
        if self.ticks & 0xFF:
            return
        if time.monotonic() > self.until:
            raise BudgetExceededError("containment search exceeded its time budget")


def _embed_order(h: MultiGraph) -> list[int]:
    """Pattern vertices ordered so each new one touches placed ones when possible."""
    remaining = set(range(h.n))
    order: list[int] = []
    placed: set[int] = set()
    while remaining:
        if not order:
            v = max(remaining, key=lambda x: (h.edge_degrees[x], -x))
        else:
            v = max(remaining,
                    key=lambda x: (sum(1 for u in h.adj[x] if u in placed),
                                   h.edge_degrees[x], -x))
        order.append(v)
        placed.add(v)
        remaining.discard(v)
    return order


def _degree_dominated(g: MultiGraph, h: MultiGraph) -> bool:
    hd = sorted(h.edge_degrees, reverse=True)
    gd = sorted(g.edge_degrees, reverse=True)
    return all(a <= b for a, b in zip(hd, gd))


def _subgraph(g: MultiGraph, h: MultiGraph, dl: _Deadline) -> bool:
    if h.n > g.n or h.total_units > g.total_units:
        return False
    if not _degree_dominated(g, h):
        return False
    order = _embed_order(h)
    image = [-1] * h.n
    used = [False] * g.n

    def place(i: int) -> bool:
        dl.check()
        if i == len(order):
            return True
        v = order[i]
        need = [(image[u], m) for u, m in h.adj[v].items() if image[u] >= 0]
        for w in range(g.n):
            if used[w] or g.edge_degrees[w] < h.edge_degrees[v]:
                continue
            if all(g.multiplicity(w, iu) >= m for iu, m in need):
                image[v] = w
                used[w] = True
                if place(i + 1):
                    return True
                image[v] = -1
                used[w] = False
        return False

    return place(0)


def _minor_paths(g: MultiGraph, h: MultiGraph, dl: _Deadline) -> bool:
    """Branch-set search: fix roots, then grow crossing paths. Fast on small
    positive instances, kept as an independent engine for cross-checks."""
    if h.n == 0:
        return True
    if h.n > g.n or h.total_units > g.total_units:
        return False
    if _subgraph(g, h, dl):
        return True

    reqs: list[tuple[int, int]] = []
    for u, v, m in h.edges:
        reqs.extend([(u, v)] * m)
    owner = [-1] * g.n
    used: dict[tuple[int, int], int] = {}
    gadj = g.adj

    def satisfy(ri: int) -> bool:
        dl.check()
        if ri == len(reqs):
            return True
        u, v = reqs[ri]
        # a spare host unit already crossing between the two branch sets
        for a, b, m in g.edges:
            oa, ob = owner[a], owner[b]
            if ((oa == u and ob == v) or (oa == v and ob == u)) and used.get((a, b), 0) < m:
                used[(a, b)] = used.get((a, b), 0) + 1
                if satisfy(ri + 1):
                    return True
                used[(a, b)] -= 1
        # otherwise grow both sets along a fresh path and claim its crossing unit;
        # interiors are split between the two sets at every possible point
        path: list[int] = []
        on_path = [False] * g.n

        def dfs(x: int) -> bool:
            dl.check()
            for y in sorted(gadj[x]):
                if owner[y] == v:
                    if len(path) < 2:
                        continue  # a direct edge is a crossing unit, handled above
                    full = path + [y]
                    k = len(path) - 1
                    for j in range(k + 1):
                        for t in range(1, j + 1):
                            owner[full[t]] = u
                        for t in range(j + 1, k + 1):
                            owner[full[t]] = v
                        a, b = full[j], full[j + 1]
                        key = (a, b) if a < b else (b, a)
                        used[key] = used.get(key, 0) + 1
                        if satisfy(ri + 1):
                            return True
                        used[key] -= 1
                        for t in range(1, k + 1):
                            owner[full[t]] = -1
                elif owner[y] == -1 and not on_path[y]:
                    path.append(y)
                    on_path[y] = True
                    if dfs(y):
                        return True
                    path.pop()
                    on_path[y] = False
            return False

        for a0 in range(g.n):
            if owner[a0] != u:
                continue
            path = [a0]
            on_path = [False] * g.n
            on_path[a0] = True
            if dfs(a0):
                return True
        return False

    for roots in itertools.permutations(range(g.n), h.n):
        for i, r in enumerate(roots):
            owner[r] = i
        used.clear()
        if satisfy(0):
            return True
        for r in roots:
            owner[r] = -1
    return False


def _minor_steps(g: MultiGraph, multi: bool):
    """Every single-step reduction: any strict minor lives below one of
    these (uncovered vertex, contractible branch edge, or surplus unit)."""
    for v in range(g.n):
        yield delete_vertex(g, v)
    for u, v, _ in g.edges:
        yield delete_edge(g, u, v, 1)
        yield contract_edge(g, u, v, simple=not multi)


def _minor(g: MultiGraph, h: MultiGraph, dl: _Deadline, multi: bool = False) -> bool:
    """Descend through host reductions with canonical-form memoization.

    Unlike a direct model search, the cost of a negative answer is bounded
    by the number of distinct (normalized) minor classes of the host, which
    stays small for sparse hosts.
    """
    if h.n == 0:
        return True
    if h.total_units == 0:
        return g.n >= h.n
    if h.n > g.n or h.total_units > g.total_units:
        return False
    if _subgraph(g, h, dl):
        return True
    hkey = canonical_form(h)
    memo: dict[bytes, bool] = {}

    def down(x: MultiGraph) -> bool:
        if x.n == h.n and x.total_units == h.total_units:
            return canonical_form(x) == hkey
        key = canonical_form(x)
        hit = memo.get(key)
        if hit is not None:
            return hit
        dl.check()
        found = False
        seen: set[bytes] = set()
        for red in _minor_steps(x, multi):
            red = _reduce_host(h, red, multi)
            if red.n < h.n or red.total_units < h.total_units:
                continue
            rk = canonical_form(red)
            if rk in seen:
                continue
            seen.add(rk)
            if down(red):
                found = True
                break
        memo[key] = found
        return found

    return down(_reduce_host(h, g, multi))


def _topological(g: MultiGraph, h: MultiGraph, dl: _Deadline) -> bool:
    if h.n > g.n or h.total_units > g.total_units:
        return False
    if not _degree_dominated(g, h):
        return False
    order = _embed_order(h)
    image = [-1] * h.n
    used_v = [False] * g.n
    units: list[tuple[int, int]] = []
    for u, v, m in h.edges:
        units.extend([(u, v)] * m)
    direct_used: dict[tuple[int, int], int] = {}

    def route(qi: int) -> bool:
        dl.check()
        if qi == len(units):
            return True
        u, v = units[qi]
        a, b = image[u], image[v]
        key = (a, b) if a < b else (b, a)
        if direct_used.get(key, 0) < g.multiplicity(a, b):
            direct_used[key] = direct_used.get(key, 0) + 1
            if route(qi + 1):
                return True
            direct_used[key] -= 1
        path: list[int] = []

        def dfs(x: int) -> bool:
            dl.check()
            for y in sorted(g.adj[x]):
                if y == b:
                    if path and route(qi + 1):
                        return True
                elif not used_v[y]:
                    path.append(y)
                    used_v[y] = True
                    if dfs(y):
                        return True
                    path.pop()
                    used_v[y] = False
            return False

        return dfs(a)

    def place(i: int) -> bool:
        dl.check()
        if i == len(order):
            return route(0)
        v = order[i]
        for w in range(g.n):
            if used_v[w] or g.edge_degrees[w] < h.edge_degrees[v]:
                continue
            image[v] = w
            used_v[w] = True
            if place(i + 1):
                return True
            image[v] = -1
            used_v[w] = False
        return False

    return place(0)


def _immersion(g: MultiGraph, h: MultiGraph, dl: _Deadline) -> bool:
    if h.n > g.n or h.total_units > g.total_units:
        return False
    if not _degree_dominated(g, h):
        return False
    if _subgraph(g, h, dl):
        return True
    order = _embed_order(h)
    image = [-1] * h.n
    taken = [False] * g.n
    cap = dict(g.edge_dict)
    units: list[tuple[int, int]] = []
    for u, v, m in h.edges:
        units.extend([(u, v)] * m)

    def route(qi: int) -> bool:
        dl.check()
        if qi == len(units):
            return True
        u, v = units[qi]
        a, b = image[u], image[v]
        visited = [False] * g.n

        def dfs(x: int) -> bool:
            dl.check()
            if x == b:
                return route(qi + 1)
            visited[x] = True
            for y in sorted(g.adj[x]):
                key = (x, y) if x < y else (y, x)
                if not visited[y] and cap[key] > 0:
                    cap[key] -= 1
                    if dfs(y):
                        return True
                    cap[key] += 1
            visited[x] = False
            return False

        return dfs(a)

    def place(i: int) -> bool:
        dl.check()
        if i == len(order):
            return route(0)
        v = order[i]
        for w in range(g.n):
            if taken[w] or g.edge_degrees[w] < h.edge_degrees[v]:
                continue
            image[v] = w
            taken[w] = True
            if place(i + 1):
                return True
            image[v] = -1
            taken[w] = False
        return False

    return place(0)


def _reduce_host(h: MultiGraph, g: MultiGraph, multi: bool = False) -> MultiGraph:
    """Shrink the host without changing minor or topological-minor
    containment of h.

    Host vertices with edge degree below the pattern's minimum edge degree
    capped at 2 are dead weight: an isolated vertex cannot join any branch
    set, and a degree-1 vertex can serve only as a removable branch leaf or
    path end.  When the pattern minimum degree is >= 3 and the host is kept
    simple, host degree-2 vertices can carry nothing but a through-path, so
    they are suppressed (one incident edge contracted).  Iterates to a
    fixed point.
    """
    if h.n == 0:
        return g
    low = min(h.edge_degrees)
    if low < 1:
        return g
    cut = min(low, 2) - 1
    while g.n:
        degs = g.edge_degrees
        drop = [v for v in range(g.n) if degs[v] <= cut]
        if drop:
            for v in reversed(drop):
                g = delete_vertex(g, v)
            continue
        if low >= 3 and not multi:
            two = next((v for v in range(g.n) if degs[v] == 2
                        and len(g.adj[v]) == 2), None)
            if two is not None:
                g = contract_edge(g, two, min(g.adj[two]), simple=True)
                continue
        break
    return g


def _is_tree(g: MultiGraph) -> bool:
    if g.n == 0 or any(m > 1 for *_, m in g.edges):
        return False
    if g.total_units != g.n - 1:
        return False
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def _tree_minor(h: MultiGraph, g: MultiGraph) -> bool:
    """Minor containment between trees, in polynomial time.

    A minor model of a tree in a tree assigns each pattern vertex a subtree
    of the host.  Root the host anywhere; the model's topmost host vertex d
    lies in the branch set of some pattern vertex r, and the rest of the
    model hangs below d.  So try every choice of r and d, and decide each
    by a packing recursion: pack(r, c) is the set of subsets of r's
    children that the host subtree below c can fully embed while c itself
    belongs to r's branch set.  A host child either extends the branch set
    (recurse), hosts exactly one full pattern child (the connecting edge
    forces its branch set to contain that host child), or is unused.
    """
    if h.n == 1:
        return True
    gch: list[list[int]] = [[] for _ in range(g.n)]
    stack = [0]
    seen = [False] * g.n
    seen[0] = True
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            if not seen[w]:
                seen[w] = True
                gch[v].append(w)
                stack.append(w)

    for root in range(h.n):
        hch: list[list[int]] = [[] for _ in range(h.n)]
        hstack = [root]
        hseen = [False] * h.n
        hseen[root] = True
        while hstack:
            v = hstack.pop()
            for w in h.adj[v]:
                if not hseen[w]:
                    hseen[w] = True
                    hch[v].append(w)
                    hstack.append(w)
        bit = {(v, c): 1 << i
               for v in range(h.n) for i, c in enumerate(hch[v])}

        embeds: dict[tuple[int, int], bool] = {}
        packs: dict[tuple[int, int], frozenset] = {}

        def pack(hv: int, gc: int) -> frozenset:
            key = (hv, gc)
            got = packs.get(key)
            if got is not None:
                return got
            masks = {0}
            for c in gch[gc]:
                options = set(pack(hv, c))
                for child in hch[hv]:
                    if embed(child, c):
                        options.add(bit[(hv, child)])
                if options != {0}:
                    masks = {m | o for m in masks for o in options
                             if not m & o} | masks
            got = frozenset(masks)
            packs[key] = got
            return got

        def embed(hv: int, gv: int) -> bool:
            key = (hv, gv)
            got = embeds.get(key)
            if got is None:
                full = (1 << len(hch[hv])) - 1
                got = embeds[key] = full in pack(hv, gv)
            return got

        if any(embed(root, d) for d in range(g.n)):
            return True
    return False


def contains(rel: Relation | str, h: MultiGraph, g: MultiGraph,
             mode: Mode | str | None = None,
             budget_ms: float | None = None,
             max_pattern: int = DEFAULT_MAX_PATTERN,
             max_host: int = DEFAULT_MAX_HOST) -> bool:
    """True when the host g contains the pattern h under `rel`.

    Size caps reject instances the search cannot be trusted to finish;
    raise them only when the instance is known to be benign (for example a
    containment that an explicit embedding certifies).
    """
    rel = parse_relation(rel) if isinstance(rel, str) else rel
    if mode is None:
        mode = default_mode(rel)
    else:
        mode = Mode(mode)
    if mode is Mode.SIMPLE:
        g, h = g.simplify(), h.simplify()
    if h.n > g.n or h.total_units > g.total_units:
        return False
    if h.n == g.n and h.total_units == g.total_units:
        # any strict step of the relation loses a vertex or an edge unit,
        # so equal-size containment degenerates to isomorphism
        return are_isomorphic(h, g)
    if h.n and max(h.edge_degrees) >= 3 and (
            not g.n or max(g.edge_degrees) <= 2):
        # hosts made of paths and cycles stay that way: deletions only
        # lower degrees, contracting inside a degree-2 host keeps every
        # degree at 2, and lifting through a degree-2 vertex is neutral
        return False
    if rel in (Relation.MINOR, Relation.TOPOLOGICAL_MINOR):
        g = _reduce_host(h, g, mode is Mode.MULTI)
        if h.n > g.n or h.total_units > g.total_units:
            return False
        if h.n == g.n and h.total_units == g.total_units:
            return are_isomorphic(h, g)
    if (rel is Relation.MINOR and _is_tree(h) and _is_tree(g)
            and max(h.edge_degrees) <= 12):
        # polynomial and uncapped; the degree guard bounds the mask sets
        return _tree_minor(h, g)
    if h.n > max_pattern or g.n > max_host:
        raise BudgetExceededError(
            "containment instance exceeds the size caps",
            {"pattern_vertices": h.n, "host_vertices": g.n,
             "max_pattern": max_pattern, "max_host": max_host})
    dl = _Deadline(budget_ms)
    if rel is Relation.SUBGRAPH:
        return _subgraph(g, h, dl)
    if rel is Relation.MINOR:
        return _minor(g, h, dl, mode is Mode.MULTI)
    if rel is Relation.TOPOLOGICAL_MINOR:
        return _topological(g, h, dl)
    if rel is Relation.IMMERSION:
        return _immersion(g, h, dl)
    raise ValueError(f"unknown relation {rel!r}")


# -- set-level operators ------------------------------------------------------

def dedup_graphs(graphs) -> list[MultiGraph]:
    """Drop isomorphic repeats and return the survivors sorted by enum_key."""
    by_form: dict[bytes, MultiGraph] = {}
    for g in graphs:
        by_form.setdefault(canonical_form(g), g)
    return sorted(by_form.values(), key=enum_key)


def min_elements(rel: Relation | str, s, **limits) -> list[MultiGraph]:
    """The minimal members of s under the relation, as an antichain."""
    members = dedup_graphs(s)
    out = []
    for i, m in enumerate(members):
        if any(i != j and contains(rel, x, m, **limits)
               for j, x in enumerate(members)):
            continue
        out.append(m)
    return out


def set_dominates(rel: Relation | str, a, b, **limits) -> bool:
    """Every member of b contains some member of a (vacuously true for empty b)."""
    a = list(a)
    return all(any(contains(rel, x, y, **limits) for x in a) for y in b)


def excl_within(rel: Relation | str, obstructions, universe, **limits) -> list[MultiGraph]:
    """Members of the universe that contain no obstruction."""
    obstructions = list(obstructions)
    return [g for g in dedup_graphs(universe)
            if not any(contains(rel, o, g, **limits) for o in obstructions)]


def down_closure_within(rel: Relation | str, seeds, universe, **limits) -> list[MultiGraph]:
    """Members of the universe lying below some seed."""
    seeds = list(seeds)
    return [g for g in dedup_graphs(universe)
            if any(contains(rel, g, s, **limits) for s in seeds)]


def up_closure_within(rel: Relation | str, seeds, universe, **limits) -> list[MultiGraph]:
    """Members of the universe lying above some seed."""
    seeds = list(seeds)
    return [g for g in dedup_graphs(universe)
            if any(contains(rel, s, g, **limits) for s in seeds)]


def is_antichain(rel: Relation | str, graphs, **limits) -> bool:
    """No member contains another (isomorphic repeats also fail)."""
    gs = list(graphs)
    for i, a in enumerate(gs):
        for j, b in enumerate(gs):
            if i != j and contains(rel, a, b, **limits):
                return False
    return True


# -- witness checkers ---------------------------------------------------------
#
# Containments between graphs too large for the blind search are asserted
# through explicit witnesses checked here in linear-ish time.  A witness that
# verifies is a proof of containment regardless of how it was found.

def verify_subgraph_map(h: MultiGraph, g: MultiGraph, image) -> bool:
    """image[v] is the host vertex for pattern vertex v; checks injectivity
    and multiplicity-respecting edge preservation."""
    image = list(image)
    if len(image) != h.n:
        return False
    if any(not (0 <= w < g.n) for w in image):
        return False
    if len(set(image)) != h.n:
        return False
    return all(g.multiplicity(image[u], image[v]) >= m for u, v, m in h.edges)


def verify_minor_model(h: MultiGraph, g: MultiGraph, branch_sets,
                       mode: Mode | str = Mode.SIMPLE) -> bool:
    """branch_sets[v] lists the host vertices standing for pattern vertex v.

    Checks: sets nonempty, pairwise disjoint, each connected in the host,
    and for every pattern edge enough host units run between the two sets
    (at least one in simple mode, the full multiplicity in multi mode).
    """
    mode = Mode(mode)
    if mode is Mode.SIMPLE:
        h, g = h.simplify(), g.simplify()
    sets = [tuple(s) for s in branch_sets]
    if len(sets) != h.n:
        return False
    seen: set[int] = set()
    for s in sets:
        if not s:
            return False
        for w in s:
            if not (0 <= w < g.n) or w in seen:
                return False
            seen.add(w)
    for s in sets:
        block = set(s)
        frontier = [s[0]]
        reached = {s[0]}
        while frontier:
            x = frontier.pop()
            for y in g.adj[x]:
                if y in block and y not in reached:
                    reached.add(y)
                    frontier.append(y)
        if reached != block:
            return False
    owner = {}
    for i, s in enumerate(sets):
        for w in s:
            owner[w] = i
    crossing: dict[tuple[int, int], int] = {}
    for a, b, m in g.edges:
        oa, ob = owner.get(a), owner.get(b)
        if oa is None or ob is None or oa == ob:
            continue
        key = (oa, ob) if oa < ob else (ob, oa)
        crossing[key] = crossing.get(key, 0) + m
    return all(crossing.get((u, v), 0) >= m for u, v, m in h.edges)


# -- an independent immersion decision, for cross-checks ---------------------

def immersion_reachable_set(g: MultiGraph, max_states: int = 500000) -> frozenset[bytes]:
    """Canonical forms of everything reachable from g by vertex deletions,
    edge unit deletions, and lifts.

    Reachability under these moves is an alternative description of
    immersion containment, so this set doubles as an oracle independent of
    the path search.  Every move strictly shrinks vertex count plus unit
    count, so the walk terminates.  Intended for tiny graphs.
    """
    seen: set[bytes] = set()
    stack = [g]
    while stack:
        x = stack.pop()
        c = canonical_form(x)
        if c in seen:
            continue
        seen.add(c)
        if len(seen) > max_states:
            raise BudgetExceededError("lifting walk state cap exceeded",
                                      {"states": len(seen)})
        for v in range(x.n):
            stack.append(delete_vertex(x, v))
        for a, b, _ in x.edges:
            stack.append(delete_edge(x, a, b))
        for y in range(x.n):
            nbrs = sorted(x.adj[y])
            for ai in range(len(nbrs)):
                for bi in range(ai + 1, len(nbrs)):
                    stack.append(lift_pair(x, nbrs[ai], y, nbrs[bi]))
    return frozenset(seen)


def immersion_by_liftings(g: MultiGraph, h: MultiGraph,
                          max_states: int = 500000) -> bool:
    """Immersion containment decided by the lifting walk alone."""
    if h.n > g.n or h.total_units > g.total_units:
        return False
    target = canonical_form(h)
    seen: set[bytes] = set()
    stack = [g]
    while stack:
        x = stack.pop()
        if x.n < h.n or x.total_units < h.total_units:
            continue  # moves only shrink, so x can no longer reach h
        c = canonical_form(x)
        if c in seen:
            continue
        seen.add(c)
        if len(seen) > max_states:
            raise BudgetExceededError("lifting walk state cap exceeded",
                                      {"states": len(seen)})
        if c == target:
            return True
        if x.n > h.n:
            for v in range(x.n):
                stack.append(delete_vertex(x, v))
        if x.total_units > h.total_units:
            for a, b, _ in x.edges:
                stack.append(delete_edge(x, a, b))
            for y in range(x.n):
                nbrs = sorted(x.adj[y])
                for ai in range(len(nbrs)):
                    for bi in range(ai + 1, len(nbrs)):
                        stack.append(lift_pair(x, nbrs[ai], y, nbrs[bi]))
    return False


def subgraph_map_as_model(image) -> tuple[frozenset[int], ...]:
    """View an injective vertex image as a minor model of singleton sets."""
    return tuple(frozenset((w,)) for w in image)


def compose_minor_models(inner, outer) -> tuple[frozenset[int], ...]:
    """Chain branch sets for A inside B with branch sets for B inside C
    into branch sets for A inside C."""
    outer = [frozenset(s) for s in outer]
    return tuple(frozenset(w for v in s for w in outer[v]) for s in inner)
