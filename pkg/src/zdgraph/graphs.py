"""Simple graphs and exact invariants: diameter, girth, clique, chromatic.

Conventions chosen to keep the invariant-preservation suite total:
the empty graph has diameter 0 and girth infinity; a disconnected graph
has diameter infinity (which cannot occur for zero-divisor graphs of valid
semigroups and therefore surfaces malformed inputs loudly).

Clique and chromatic numbers are computed exactly: branch and bound with a
greedy-colouring upper bound for cliques, and iterative deepening seeded by
the clique lower bound for colourings.  No heuristic value is ever reported
as an answer.  Both solvers fail fast above a configurable vertex guard.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .semigroups import (
    SemigroupMap,
    SemigroupTable,
    SizeGuardExceeded,
    NotNilpotentFree,
    check_armendariz,
    nilpotent_witness,
    zero_divisors,
)

INFINITY = math.inf

DEFAULT_MAX_CLIQUE_VERTICES = 200
DEFAULT_MAX_CHROMATIC_VERTICES = 64


class CountablyInfinite:
    """Symbolic cardinal for invariants of the symbolic infinite lattices."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "countably-infinite"


COUNTABLY_INFINITE = CountablyInfinite()

Value = Union[int, float]
Cardinal = Union[int, CountablyInfinite]


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph: labelled vertices, set of index pairs."""

    vertices: tuple[str, ...]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        n = len(self.vertices)
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"self-loop at {i}")
            if not (0 <= i < j < n):
                raise ValueError(f"bad edge ({i}, {j})")

    @property
    def n(self) -> int:
        return len(self.vertices)

    @staticmethod
    def from_edges(vertices: Iterable[str], edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        pairs = frozenset((min(i, j), max(i, j)) for i, j in edges)
        return SimpleGraph(tuple(vertices), pairs)


def adjacency_sets(G: SimpleGraph) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(G.n)]
    for i, j in G.edges:
        adj[i].add(j)
        adj[j].add(i)
    return adj


def _bfs_distances(adj: list[set[int]], start: int) -> list[Value]:
    dist: list[Value] = [INFINITY] * len(adj)
    dist[start] = 0
    q = deque([start])
    while q:
        v = q.popleft()
        for w in adj[v]:
            if dist[w] == INFINITY:
                dist[w] = dist[v] + 1
                q.append(w)
    return dist


def is_connected(G: SimpleGraph) -> bool:
    """Standard reachability; the empty graph counts as connected."""
    if G.n == 0:
        return True
    adj = adjacency_sets(G)
    dist = _bfs_distances(adj, 0)
    return all(d != INFINITY for d in dist)


def diameter(G: SimpleGraph) -> Value:
    """Supremum of pairwise distances; 0 for the empty graph."""
    if G.n == 0:
        return 0
    adj = adjacency_sets(G)
    best: Value = 0
    for v in range(G.n):
        dist = _bfs_distances(adj, v)
        m = max(dist)
        if m == INFINITY:
            return INFINITY
        best = max(best, m)
    return int(best)


def shortest_cycle(G: SimpleGraph) -> tuple[Value, Optional[tuple[int, ...]]]:
    """Length and vertices of a shortest cycle, or (inf, None) if acyclic.

    For each edge {u, v}, a shortest u-v path avoiding that edge closes a
    shortest cycle through it; the minimum over edges is the girth.
    """
    adj = adjacency_sets(G)
    best: Value = INFINITY
    best_cycle = None
    for u, v in sorted(G.edges):
        dist: list[Value] = [INFINITY] * G.n
        parent = [-1] * G.n
        dist[u] = 0
        q = deque([u])
        while q:
            x = q.popleft()
            if x == v:
                break
            for y in adj[x]:
                if {x, y} == {u, v}:
                    continue
                if dist[y] == INFINITY:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    q.append(y)
        if dist[v] != INFINITY and dist[v] + 1 < best:
            best = dist[v] + 1
            path = [v]
            while path[-1] != u:
                path.append(parent[path[-1]])
            best_cycle = tuple(reversed(path))
    return best, best_cycle


def girth(G: SimpleGraph) -> Value:
    return shortest_cycle(G)[0]


def _adjacency_masks(G: SimpleGraph) -> list[int]:
    masks = [0] * G.n
    for i, j in G.edges:
        masks[i] |= 1 << j
        masks[j] |= 1 << i
    return masks


def max_clique(G: SimpleGraph, max_vertices: int = DEFAULT_MAX_CLIQUE_VERTICES) -> tuple[int, ...]:
    """A maximum clique, found by exact branch and bound.

    Candidates are greedily coloured at every node; a branch is pruned when
    the current clique plus the colour bound cannot beat the incumbent.
    """
    n = G.n
    if n > max_vertices:
        raise SizeGuardExceeded(f"clique guard: {n} > {max_vertices} vertices")
    if n == 0:
        return ()
    adj = _adjacency_masks(G)
    best_mask = 1  # single vertex is always a clique
    best_size = 1

    def colour_order(cand: int) -> list[tuple[int, int]]:
        order = []
        colour = 0
        rest = cand
        while rest:
            colour += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~adj[v] & ~(1 << v)
                rest &= ~(1 << v)
                order.append((v, colour))
        return order

    def expand(cur_mask: int, cur_size: int, cand: int) -> None:
        nonlocal best_mask, best_size
        order = colour_order(cand)
        for v, colour in reversed(order):
            if cur_size + colour <= best_size:
                return
            new_cand = cand & adj[v]
            if new_cand:
                expand(cur_mask | (1 << v), cur_size + 1, new_cand)
            elif cur_size + 1 > best_size:
                best_size = cur_size + 1
                best_mask = cur_mask | (1 << v)
            cand &= ~(1 << v)

    expand(0, 0, (1 << n) - 1)
    return tuple(v for v in range(n) if best_mask >> v & 1)


def clique_number(G: SimpleGraph, max_vertices: int = DEFAULT_MAX_CLIQUE_VERTICES) -> int:
    return len(max_clique(G, max_vertices))


def _k_colouring(adj: list[set[int]], n: int, k: int, seed_clique: tuple[int, ...]) -> Optional[list[int]]:
    """Backtracking search for a proper k-colouring, or None.

    A maximum clique is pre-coloured with distinct colours (sound symmetry
    breaking), vertices are picked by saturation degree, and a fresh colour
    may only be introduced as the next unused one.
    """
    colours = [-1] * n
    for c, v in enumerate(seed_clique):
        colours[v] = c
    uncoloured = [v for v in range(n) if colours[v] == -1]
    max_used = len(seed_clique) - 1

    def pick() -> int:
        best_v, best_key = -1, (-1, -1)
        for v in uncoloured:
            if colours[v] != -1:
                continue
            sat = len({colours[u] for u in adj[v] if colours[u] != -1})
            key = (sat, len(adj[v]))
            if key > best_key:
                best_key, best_v = key, v
        return best_v

    def rec(remaining: int, max_used: int) -> bool:
        if remaining == 0:
            return True
        v = pick()
        used = {colours[u] for u in adj[v] if colours[u] != -1}
        limit = min(k - 1, max_used + 1)
        for c in range(limit + 1):
            if c in used:
                continue
            colours[v] = c
            if rec(remaining - 1, max(max_used, c)):
                return True
            colours[v] = -1
        return False

    if rec(len(uncoloured), max_used):
        return colours
    return None


def optimal_colouring(
    G: SimpleGraph, max_vertices: int = DEFAULT_MAX_CHROMATIC_VERTICES
) -> tuple[int, list[int]]:
    """Exact chromatic number with a witness colouring."""
    n = G.n
    if n > max_vertices:
        raise SizeGuardExceeded(f"chromatic guard: {n} > {max_vertices} vertices")
    if n == 0:
        return 0, []
    if not G.edges:
        return 1, [0] * n
    clique = max_clique(G, max_vertices=max(n, DEFAULT_MAX_CLIQUE_VERTICES))
    adj = adjacency_sets(G)
    for k in range(len(clique), n + 1):
        colours = _k_colouring(adj, n, k, clique)
        if colours is not None:
            return k, colours
    raise AssertionError("unreachable: n colours always suffice")


def chromatic_number(G: SimpleGraph, max_vertices: int = DEFAULT_MAX_CHROMATIC_VERTICES) -> int:
    return optimal_colouring(G, max_vertices)[0]


@dataclass(frozen=True)
class InvariantBundle:
    """The four invariants; chromatic >= clique is asserted when numeric."""

    diameter: Value
    girth: Value
    clique: Cardinal
    chromatic: Cardinal

    def __post_init__(self):
        if isinstance(self.clique, int) and isinstance(self.chromatic, int):
            assert self.chromatic >= self.clique

    def as_tuple(self):
        return (self.diameter, self.girth, self.clique, self.chromatic)


def invariant_bundle(
    G: SimpleGraph,
    max_clique_vertices: int = DEFAULT_MAX_CLIQUE_VERTICES,
    max_chromatic_vertices: int = DEFAULT_MAX_CHROMATIC_VERTICES,
) -> InvariantBundle:
    return InvariantBundle(
        diameter=diameter(G),
        girth=girth(G),
        clique=clique_number(G, max_clique_vertices),
        chromatic=chromatic_number(G, max_chromatic_vertices),
    )


# ---------------------------------------------------------------------------
# Graphs from semigroups


def zero_divisor_vertices(S: SemigroupTable) -> tuple[int, ...]:
    """Element indices of the nonzero zero-divisors, ascending."""
    return tuple(sorted(zero_divisors(S)))


def zero_divisor_graph(S: SemigroupTable) -> SimpleGraph:
    """Vertices are nonzero zero-divisors; {s, t} is an edge iff s*t = 0."""
    verts = zero_divisor_vertices(S)
    labels = tuple(S.elements[v] for v in verts)
    zero = S.zero
    edges = set()
    for a in range(len(verts)):
        row = S.product[verts[a]]
        for b in range(a + 1, len(verts)):
            if row[verts[b]] == zero:
                edges.add((a, b))
    return SimpleGraph(labels, frozenset(edges))


def beck_graph(S: SemigroupTable) -> SimpleGraph:
    """The graph on all elements with {a, b} an edge iff a*b = 0.

    Applied to the multiplicative semigroup of a ring this is the classical
    all-elements graph: 0 is connected to everything and non-zero-divisors
    connect only to 0.
    """
    zero = S.zero
    edges = set()
    for a in range(S.size):
        row = S.product[a]
        for b in range(a + 1, S.size):
            if row[b] == zero:
                edges.add((a, b))
    return SimpleGraph(tuple(S.elements), frozenset(edges))


# ---------------------------------------------------------------------------
# Invariant preservation under Armendariz maps


@dataclass(frozen=True)
class SuitePart:
    name: str
    applies: bool
    passed: bool
    details: str


@dataclass(frozen=True)
class InvariantSuiteReport:
    parts: tuple[SuitePart, ...]
    source_invariants: InvariantBundle
    target_invariants: InvariantBundle
    induced_map_bijective: bool
    girth4_pattern_edge: bool
    girth4_pattern_vertex: bool

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.parts)


def armendariz_invariant_suite(
    g: SemigroupMap,
    max_clique_vertices: int = DEFAULT_MAX_CLIQUE_VERTICES,
    max_chromatic_vertices: int = DEFAULT_MAX_CHROMATIC_VERTICES,
) -> InvariantSuiteReport:
    """Check the six invariant-preservation laws for a verified map.

    For an Armendariz map between finite nilpotent-free semigroups:
    (1) target diameter != 1 transfers exactly; (2) target diameter 1 gives
    source diameter 1 or 2 according to bijectivity of the induced vertex
    map; (3) finite girth transfers exactly; (4) infinite target girth
    forces source girth in {4, inf}; (5) clique numbers agree; (6) chromatic
    numbers agree.  Each part carries its computed values as the witness.
    """
    w = nilpotent_witness(g.source)
    if w is not None:
        raise NotNilpotentFree(f"source has nonzero nilpotent {w}")
    w = nilpotent_witness(g.target)
    if w is not None:
        raise NotNilpotentFree(f"target has nonzero nilpotent {w}")
    report = check_armendariz(g)
    if not report.is_armendariz:
        raise ValueError(f"map is not Armendariz: {report}")

    GS = zero_divisor_graph(g.source)
    GT = zero_divisor_graph(g.target)
    bs = invariant_bundle(GS, max_clique_vertices, max_chromatic_vertices)
    bt = invariant_bundle(GT, max_clique_vertices, max_chromatic_vertices)

    vs = zero_divisor_vertices(g.source)
    vt = zero_divisor_vertices(g.target)
    bijective = len(vs) == len(vt)

    # Fibre data over target vertices, for the two girth-4 witness patterns:
    # an edge whose endpoints both have non-singleton fibres, or a vertex
    # with a non-singleton fibre and at least two neighbours.
    fibre: dict[int, int] = {t: 0 for t in vt}
    for s in vs:
        fibre[g.assignment[s]] += 1
    vt_pos = {t: i for i, t in enumerate(vt)}
    adj_t = adjacency_sets(GT)
    pattern_edge = any(
        fibre[vt[i]] > 1 and fibre[vt[j]] > 1 for i, j in GT.edges
    )
    pattern_vertex = any(
        fibre[t] > 1 and len(adj_t[vt_pos[t]]) >= 2 for t in vt
    )

    parts = []
    applies = bt.diameter != 1
    parts.append(
        SuitePart(
            "diameter-transfer",
            applies,
            (not applies) or bs.diameter == bt.diameter,
            f"diam source={bs.diameter} target={bt.diameter}",
        )
    )
    applies = bt.diameter == 1
    expected = 1 if bijective else 2
    parts.append(
        SuitePart(
            "diameter-one-case",
            applies,
            (not applies) or bs.diameter == expected,
            f"diam source={bs.diameter} expected={expected} bijective={bijective}",
        )
    )
    applies = bt.girth != INFINITY
    parts.append(
        SuitePart(
            "girth-transfer",
            applies,
            (not applies) or bs.girth == bt.girth,
            f"girth source={bs.girth} target={bt.girth}",
        )
    )
    applies = bt.girth == INFINITY
    parts.append(
        SuitePart(
            "girth-acyclic-case",
            applies,
            (not applies) or bs.girth in (4, INFINITY),
            f"girth source={bs.girth}, patterns edge={pattern_edge} vertex={pattern_vertex}",
        )
    )
    parts.append(
        SuitePart(
            "clique-equal",
            True,
            bs.clique == bt.clique,
            f"clique source={bs.clique} target={bt.clique}",
        )
    )
    parts.append(
        SuitePart(
            "chromatic-equal",
            True,
            bs.chromatic == bt.chromatic,
            f"chromatic source={bs.chromatic} target={bt.chromatic}",
        )
    )
    return InvariantSuiteReport(
        parts=tuple(parts),
        source_invariants=bs,
        target_invariants=bt,
        induced_map_bijective=bijective,
        girth4_pattern_edge=pattern_edge,
        girth4_pattern_vertex=pattern_vertex,
    )


# ---------------------------------------------------------------------------
# Export


def to_dot(G: SimpleGraph, name: str = "zd") -> str:
    """Undirected DOT with labels quoted verbatim; bit-stable ordering."""
    lines = [f"graph {name} {{"]
    for v in G.vertices:
        lines.append(f'  "{v}";')
    for i, j in sorted(G.edges):
        lines.append(f'  "{G.vertices[i]}" -- "{G.vertices[j]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(G: SimpleGraph) -> str:
    return json.dumps(
        {"vertices": list(G.vertices), "edges": sorted([i, j] for i, j in G.edges)}
    )


def graph_from_json(text: str) -> SimpleGraph:
    data = json.loads(text)
    return SimpleGraph.from_edges(
        [str(v) for v in data["vertices"]],
        [(int(i), int(j)) for i, j in data["edges"]],
    )
