"""Loopless undirected multigraphs with exact isomorphism machinery.

Graphs are immutable: vertices are 0..n-1, edges are unordered pairs with an
integer multiplicity >= 1.  The empty graph (n = 0) is a valid value and takes
part in enumeration.  Everything downstream (containment tests, parameter
solvers, obstruction scans) relies on three guarantees made here:

* `canonical_form` returns identical bytes exactly for isomorphic graphs,
* `enum_key` is a total order refining vertex count, so enumeration order is
  reproducible across runs and platforms,
* `enumerate_graphs` yields exactly one representative per isomorphism class.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Iterator


class GraphFormatError(ValueError):
    """Raised when graph text or graph6 input is malformed."""


class BudgetExceededError(RuntimeError):
    """Raised when a request exceeds the configured size caps.

    `detail` carries the offending sizes so callers (and the CLI) can report
    what was asked for versus what is allowed.
    """

    def __init__(self, message: str, detail: dict | None = None):
        super().__init__(message)
        self.detail = detail or {}


@dataclass(frozen=True)
class EnumBudget:
    """Size caps for exhaustive enumeration."""

    max_simple_vertices: int = 8
    max_multi_vertices: int = 6
    max_multiplicity: int = 8


DEFAULT_ENUM_BUDGET = EnumBudget()


@dataclass(frozen=True)
class MultiGraph:
    """A loopless multigraph on vertices 0..n-1.

    `edges` is a sorted tuple of (u, v, mult) with u < v and mult >= 1.
    Use `MultiGraph.build` to construct from unnormalized edge data.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be >= 0")
        seen = set()
        prev = None
        for u, v, m in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range or not u<v for n={self.n}")
            if m < 1:
                raise ValueError(f"edge ({u},{v}) has multiplicity {m} < 1")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge pair ({u},{v})")
            seen.add((u, v))
            if prev is not None and (u, v) < prev:
                raise ValueError("edges must be sorted; use MultiGraph.build")
            prev = (u, v)

    @staticmethod
    def build(n: int, edge_items: Iterable[tuple[int, int] | tuple[int, int, int]] | dict) -> "MultiGraph":
        """Normalize arbitrary edge data: pairs get multiplicity 1, repeats accumulate."""
        acc: dict[tuple[int, int], int] = {}
        items: Iterable
        if isinstance(edge_items, dict):
            items = [(u, v, m) for (u, v), m in edge_items.items()]
        else:
            items = edge_items
        for item in items:
            if len(item) == 2:
                u, v = item
                m = 1
            else:
                u, v, m = item
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            if u > v:
                u, v = v, u
            acc[(u, v)] = acc.get((u, v), 0) + m
        edges = tuple(sorted((u, v, m) for (u, v), m in acc.items()))
        return MultiGraph(n, edges)

    # -- derived views -----------------------------------------------------

    @cached_property
    def edge_dict(self) -> dict[tuple[int, int], int]:
        return {(u, v): m for u, v, m in self.edges}

    @cached_property
    def adj(self) -> tuple[dict[int, int], ...]:
        """Per-vertex neighbor -> multiplicity maps."""
        a: list[dict[int, int]] = [dict() for _ in range(self.n)]
        for u, v, m in self.edges:
            a[u][v] = m
            a[v][u] = m
        return tuple(a)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v, _ in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def edge_degrees(self) -> tuple[int, ...]:
        d = [0] * self.n
        for u, v, m in self.edges:
            d[u] += m
            d[v] += m
        return tuple(d)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """Simple degrees: number of distinct neighbors."""
        d = [0] * self.n
        for u, v, _ in self.edges:
            d[u] += 1
            d[v] += 1
        return tuple(d)

    @property
    def total_units(self) -> int:
        return sum(m for _, _, m in self.edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def multiplicity(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self.edge_dict.get((u, v), 0)

    def is_simple(self) -> bool:
        return all(m == 1 for _, _, m in self.edges)

    def simplify(self) -> "MultiGraph":
        if self.is_simple():
            return self
        return MultiGraph(self.n, tuple((u, v, 1) for u, v, _ in self.edges))

    def max_multiplicity(self) -> int:
        return max((m for _, _, m in self.edges), default=0)

    @cached_property
    def _canonical(self) -> bytes:
        return _canonical_bytes(self)

    def __repr__(self):
        return f"MultiGraph(n={self.n}, edges={list(self.edges)})"


K0 = MultiGraph(0)


# -- elementary operations -------------------------------------------------

def delete_vertex(g: MultiGraph, v: int) -> MultiGraph:
    """Remove v and its incident edges; remaining labels stay in order."""
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range")
    relabel = {u: (u if u < v else u - 1) for u in range(g.n) if u != v}
    edges = [(relabel[u], relabel[w], m) for u, w, m in g.edges if u != v and w != v]
    return MultiGraph.build(g.n - 1, edges)


def delete_edge(g: MultiGraph, u: int, v: int, units: int = 1) -> MultiGraph:
    """Remove `units` of multiplicity from edge uv; the pair disappears at 0."""
    if u > v:
        u, v = v, u
    m = g.multiplicity(u, v)
    if m == 0:
        raise ValueError(f"no edge ({u},{v})")
    if not (1 <= units <= m):
        raise ValueError(f"cannot remove {units} units from multiplicity {m}")
    edges = [(a, b, mm) for a, b, mm in g.edges if (a, b) != (u, v)]
    if m > units:
        edges.append((u, v, m - units))
    return MultiGraph.build(g.n, edges)


def contract_edge(g: MultiGraph, u: int, v: int, simple: bool | None = None) -> MultiGraph:
    """Contract edge uv into min(u, v).

    simple mode collapses parallel edges created by the merge to multiplicity
    1; multigraph mode accumulates them.  Loops vanish in both modes.  The
    default mode matches the graph: simple graphs contract simply.
    """
    if g.multiplicity(u, v) == 0:
        raise ValueError(f"no edge ({u},{v})")
    if simple is None:
        simple = g.is_simple()
    keep, gone = min(u, v), max(u, v)
    acc: dict[tuple[int, int], int] = {}
    for a, b, m in g.edges:
        a2 = keep if a == gone else a
        b2 = keep if b == gone else b
        if a2 == b2:
            continue  # the contracted pair, and any loop, vanish
        if a2 > b2:
            a2, b2 = b2, a2
        acc[(a2, b2)] = acc.get((a2, b2), 0) + m
    if simple:
        acc = {e: 1 for e in acc}
    relabel = {w: (w if w < gone else w - 1) for w in range(g.n) if w != gone}
    edges = [(relabel[a], relabel[b], m) for (a, b), m in acc.items()]
    return MultiGraph.build(g.n - 1, edges)


def lift_pair(g: MultiGraph, x: int, y: int, z: int) -> MultiGraph:
    """Lift the pair of edges xy, yz: remove one unit from each, add unit xz.

    Requires x != z (no loops).  Total edge-degree of x and z is preserved and
    the edge-degree of y drops by 2.
    """
    if x == z:
        raise ValueError("lift endpoints must differ (loops not allowed)")
    if g.multiplicity(x, y) == 0 or g.multiplicity(y, z) == 0:
        raise ValueError("both edges of the lifted pair must exist")
    h = delete_edge(g, x, y)
    h = delete_edge(h, y, z)
    items = list(h.edges) + [(min(x, z), max(x, z), 1)]
    return MultiGraph.build(g.n, items)


def subdivide_edge(g: MultiGraph, u: int, v: int) -> MultiGraph:
    """Replace one unit of uv by a path through a fresh vertex n."""
    if g.multiplicity(u, v) == 0:
        raise ValueError(f"no edge ({u},{v})")
    h = delete_edge(g, u, v)
    w = g.n
    items = list(h.edges) + [(u, w, 1), (v, w, 1)]
    return MultiGraph.build(g.n + 1, items)


def disjoint_union(a: MultiGraph, b: MultiGraph) -> MultiGraph:
    edges = list(a.edges) + [(u + a.n, v + a.n, m) for u, v, m in b.edges]
    return MultiGraph.build(a.n + b.n, edges)


def copies(k: int, z: MultiGraph) -> MultiGraph:
    """k disjoint copies of z (k >= 1)."""
    if k < 1:
        raise ValueError("need a positive number of copies")
    out = z
    for _ in range(k - 1):
        out = disjoint_union(out, z)
    return out


# -- canonical forms -------------------------------------------------------

def _mult_matrix(g: MultiGraph) -> list[list[int]]:
    n = g.n
    mat = [[0] * n for _ in range(n)]
    for u, v, m in g.edges:
        mat[u][v] = m
        mat[v][u] = m
    return mat


def _stable_colors(n: int, mat: list[list[int]], colors: list[int]) -> list[int]:
    """Iterated color refinement by full (color, multiplicity) profiles."""
    while True:
        sigs = []
        for v in range(n):
            row = mat[v]
            profile = tuple(sorted((colors[u], row[u]) for u in range(n) if u != v))
            sigs.append((colors[v], profile))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _canonical_order(g: MultiGraph) -> list[int]:
    """A vertex order realizing the minimal adjacency encoding.

    The search places vertices in blocks of the refined coloring (valid since
    refinement is isomorphism-invariant) and prunes on the partial encoding.
    Highly symmetric graphs explore every automorphic branch, which is fine
    at the sizes enumeration works with.
    """
    n = g.n
    if n == 0:
        return []
    mat = _mult_matrix(g)
    colors = _stable_colors(n, mat, [0] * n)
    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(colors[v], []).append(v)
    color_seq = sorted(by_color)

    best_rows: list[tuple[int, ...]] | None = None
    best_order: list[int] | None = None
    order: list[int] = []
    remaining = {c: set(vs) for c, vs in by_color.items()}

    def dfs(depth: int, rows: list[tuple[int, ...]]):
        nonlocal best_rows, best_order
        if depth == n:
            if best_rows is None or rows < best_rows:
                best_rows = list(rows)
                best_order = list(order)
            return
        block = 0
        while not remaining[color_seq[block]]:
            block += 1
        cell = remaining[color_seq[block]]
        for v in sorted(cell):
            row = tuple(mat[v][u] for u in order)
            if best_rows is not None:
                probe = rows + [row]
                if probe > best_rows[: len(probe)]:
                    continue
            cell.discard(v)
            order.append(v)
            rows.append(row)
            dfs(depth + 1, rows)
            rows.pop()
            order.pop()
            cell.add(v)

    dfs(0, [])
    assert best_order is not None
    return best_order


def _canonical_bytes(g: MultiGraph) -> bytes:
    n = g.n
    if n > 255:
        raise BudgetExceededError("canonical form limited to 255 vertices", {"n": n})
    order = _canonical_order(g)
    mat = _mult_matrix(g)
    vals = bytearray()
    vals.append(n)
    for i in range(n):
        for j in range(i):
            m = mat[order[i]][order[j]]
            if m > 255:
                raise BudgetExceededError("multiplicity beyond canonical byte range",
                                          {"multiplicity": m})
            vals.append(m)
    return bytes(vals)


def canonical_form(g: MultiGraph) -> bytes:
    """Bytes identical exactly for isomorphic graphs."""
    return g._canonical


def relabel_canonically(g: MultiGraph) -> MultiGraph:
    """An isomorphic copy whose labels follow the canonical order."""
    order = _canonical_order(g)
    pos = {v: i for i, v in enumerate(order)}
    return MultiGraph.build(g.n, [(pos[u], pos[v], m) for u, v, m in g.edges])


def tree_code(g: MultiGraph) -> str | None:
    """Canonical code for a simple connected acyclic graph, else None.

    Linear-time rooted-code comparison from the centroid, so tree
    isomorphism stays cheap where the generic canonical search would choke
    on leaf symmetry.
    """
    if g.n == 0 or g.total_units != g.n - 1 or any(m > 1 for *_, m in g.edges):
        return None
    if g.n == 1:
        return "()"
    adj = {v: set(g.adj[v]) for v in range(g.n)}
    layer = [v for v in range(g.n) if len(adj[v]) == 1]
    remaining = g.n
    while remaining > 2:
        nxt = []
        for v in layer:
            if not adj[v]:
                continue
            (w,) = adj[v]
            adj[w].discard(v)
            adj[v].clear()
            if len(adj[w]) == 1:
                nxt.append(w)
        remaining -= len(layer)
        if not nxt and remaining > 2:
            return None   # a cycle survived the peeling
        layer = nxt

    def code(v, parent):
        subs = sorted(code(w, v) for w in g.adj[v] if w != parent)
        return "(" + "".join(subs) + ")"

    centers = [v for v in range(g.n) if adj[v]] or layer
    return min(code(c, -1) for c in centers[:2])


def are_isomorphic(a: MultiGraph, b: MultiGraph) -> bool:
    if a.n != b.n or a.total_units != b.total_units:
        return False
    if a.edges == b.edges:
        return True
    if sorted(a.edge_degrees) != sorted(b.edge_degrees):
        return False
    ca, cb = tree_code(a), tree_code(b)
    if ca is not None or cb is not None:
        return ca == cb
    return canonical_form(a) == canonical_form(b)


def enum_key(g: MultiGraph) -> tuple[int, int, bytes]:
    """Total order on isomorphism classes: vertex count, edge units, canonical bytes."""
    return (g.n, g.total_units, canonical_form(g))


# -- exhaustive enumeration ------------------------------------------------

def _check_enum_budget(n_max: int, mult_max: int, budget: EnumBudget):
    if mult_max < 1:
        raise ValueError("mult_max must be >= 1")
    if mult_max > budget.max_multiplicity:
        raise BudgetExceededError("multiplicity cap exceeded",
                                  {"mult_max": mult_max, "allowed": budget.max_multiplicity})
    cap = budget.max_simple_vertices if mult_max == 1 else budget.max_multi_vertices
    if n_max > cap:
        raise BudgetExceededError(
            f"enumeration to {n_max} vertices at mult_max={mult_max} exceeds the budget",
            {"n_max": n_max, "mult_max": mult_max, "allowed": cap})


def _extend_layer(layer: list[MultiGraph], n: int, mult_max: int,
                  member: Callable[[MultiGraph], bool] | None = None) -> list[MultiGraph]:
    """All isomorphism classes on n vertices obtained by attaching one vertex.

    Every graph on n vertices arises this way from the class of any of its
    single-vertex deletions, so extending every (n-1)-class by every
    attachment pattern is exhaustive.
    """
    seen: dict[bytes, MultiGraph] = {}
    for parent in layer:
        base = list(parent.edges)
        for attach in itertools.product(range(mult_max + 1), repeat=n - 1):
            extra = [(u, n - 1, m) for u, m in enumerate(attach) if m > 0]
            child = MultiGraph(n, tuple(sorted(base + extra)))
            if member is not None and not member(child):
                continue
            key = canonical_form(child)
            if key not in seen:
                seen[key] = child
    return sorted(seen.values(), key=enum_key)


def enumerate_graphs(n_max: int, mult_max: int = 1,
                     predicate: Callable[[MultiGraph], bool] | None = None,
                     budget: EnumBudget = DEFAULT_ENUM_BUDGET) -> Iterator[MultiGraph]:
    """One representative per isomorphism class, in enumeration order.

    Covers every graph with at most n_max vertices and edge multiplicities at
    most mult_max.  `predicate` filters the output only; generation itself is
    exhaustive.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    _check_enum_budget(n_max, mult_max, budget)
    layer = [K0]
    if predicate is None or predicate(K0):
        yield K0
    for n in range(1, n_max + 1):
        layer = _extend_layer(layer, n, mult_max)
        for g in layer:
            if predicate is None or predicate(g):
                yield g


def enumerate_closed(n_max: int, mult_max: int,
                     member: Callable[[MultiGraph], bool]) -> Iterator[MultiGraph]:
    """Members of a vertex-deletion-closed class, in enumeration order.

    Layers are grown inside the class: a member on n vertices stays a member
    after deleting its last vertex, so extending member classes reaches every
    member.  No budget cap applies; callers bound n_max themselves.
    """
    if member(K0):
        yield K0
    layer = [K0] if member(K0) else []
    if not layer:
        return
    for n in range(1, n_max + 1):
        layer = _extend_layer(layer, n, mult_max, member=member)
        yield from layer


# -- serialization ---------------------------------------------------------

def format_graph_text(g: MultiGraph) -> str:
    """The plain text format: `n N` then one `e u v mult` line per edge pair."""
    lines = [f"n {g.n}"]
    for u, v, m in g.edges:
        lines.append(f"e {u} {v} {m}")
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> MultiGraph:
    n: int | None = None
    edges: list[tuple[int, int, int]] = []
    pairs = set()
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                raise GraphFormatError(f"line {ln}: repeated n line")
            if len(parts) != 2:
                raise GraphFormatError(f"line {ln}: expected 'n <count>'")
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphFormatError(f"line {ln}: bad vertex count {parts[1]!r}")
            if n < 0:
                raise GraphFormatError(f"line {ln}: negative vertex count")
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError(f"line {ln}: edge before n line")
            if len(parts) != 4:
                raise GraphFormatError(f"line {ln}: expected 'e <u> <v> <mult>'")
            try:
                u, v, m = int(parts[1]), int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError(f"line {ln}: bad edge numbers")
            if u == v:
                raise GraphFormatError(f"line {ln}: loop at {u}")
            if u > v:
                u, v = v, u
            if not (0 <= u < v < n):
                raise GraphFormatError(f"line {ln}: edge ({u},{v}) out of range")
            if (u, v) in pairs:
                raise GraphFormatError(f"line {ln}: duplicate pair ({u},{v})")
            if m < 1:
                raise GraphFormatError(f"line {ln}: multiplicity {m} < 1")
            pairs.add((u, v))
            edges.append((u, v, m))
        else:
            raise GraphFormatError(f"line {ln}: unknown directive {parts[0]!r}")
    if n is None:
        raise GraphFormatError("missing n line")
    return MultiGraph(n, tuple(sorted(edges)))


def to_graph6(g: MultiGraph) -> str:
    """graph6 encoding (simple graphs only)."""
    if not g.is_simple():
        raise GraphFormatError("graph6 encodes simple graphs only")
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        raise GraphFormatError("graph too large for graph6")
    bits = []
    dct = g.edge_dict
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in dct else 0)
    while len(bits) % 6:
        bits.append(0)
    body = "".join(chr(sum(b << (5 - k) for k, b in enumerate(bits[i:i + 6])) + 63)
                   for i in range(0, len(bits), 6))
    return head + body


def from_graph6(s: str) -> MultiGraph:
    s = s.strip()
    if not s:
        raise GraphFormatError("empty graph6 string")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if s[0] == "~":
        if len(s) >= 4 and s[1] != "~":
            n = 0
            for c in s[1:4]:
                n = (n << 6) | (ord(c) - 63)
            rest = s[4:]
        else:
            raise GraphFormatError("unsupported graph6 size header")
    else:
        n = ord(s[0]) - 63
        rest = s[1:]
    if n < 0:
        raise GraphFormatError("bad graph6 header")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(rest) != need:
        raise GraphFormatError(f"graph6 body length {len(rest)}, expected {need}")
    bits = []
    for c in rest:
        x = ord(c) - 63
        if not (0 <= x < 64):
            raise GraphFormatError(f"bad graph6 byte {c!r}")
        bits.extend((x >> (5 - k)) & 1 for k in range(6))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j, 1))
            idx += 1
    return MultiGraph(n, tuple(sorted(edges)))


def format_graph_set(graphs: Iterable[MultiGraph], comment: str | None = None) -> str:
    """Several graphs in one text file, separated by blank lines."""
    parts = []
    if comment:
        parts.append("\n".join(f"# {line}" for line in comment.splitlines()))
    parts.extend(format_graph_text(g).rstrip("\n") for g in graphs)
    return "\n\n".join(parts) + "\n"


def parse_graph_set(text: str) -> list[MultiGraph]:
    out = []
    for block in text.split("\n\n"):
        lines = [ln for ln in block.splitlines()
                 if ln.strip() and not ln.lstrip().startswith("#")]
        if lines:
            out.append(parse_graph_text("\n".join(lines)))
    return out
