"""Finite topological spaces and subset lattices.

Spaces are given by their closed-set families (the natural side for
everything here); a converter from open sets is provided.  The module
covers the separation-axiom suite (T0, T1, T 1/2, pearled, Noetherian),
the subspace of closed points with its intersection map on closed-set
lattices, the lazy nonnegative-integer counterexample space, and the two
kinds of T1 subset lattices: explicit finite families, and the symbolic
lattice of all finite subsets of a countable ground set plus the whole
set (the closed sets of the cofinite topology) for the irreducible case,
which has no finite instance on three or more points.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from typing import Union

from .graphs import (
    COUNTABLY_INFINITE,
    InvariantBundle,
    invariant_bundle,
    zero_divisor_graph,
)
from .semigroups import SemigroupMap, SemigroupTable


class InvalidSpace(ValueError):
    pass


class NotPearled(ValueError):
    pass


class InvalidLattice(ValueError):
    pass


class LatticeTheoremError(AssertionError):
    """An exact computation contradicted a structure theorem."""


# ---------------------------------------------------------------------------
# Finite spaces


@dataclass(frozen=True)
class FiniteSpace:
    """A finite space as its family of closed sets (point-index subsets)."""

    points: tuple[str, ...]
    closed_sets: tuple[frozenset[int], ...]

    @property
    def n(self) -> int:
        return len(self.points)

    def to_json(self) -> str:
        return json.dumps(
            {
                "points": list(self.points),
                "closed": sorted(sorted(c) for c in self.closed_sets),
            }
        )

    @staticmethod
    def from_json(text: str) -> "FiniteSpace":
        data = json.loads(text)
        return make_space(
            [str(p) for p in data["points"]],
            [frozenset(int(i) for i in c) for c in data["closed"]],
        )


def make_space(points, closed_sets) -> FiniteSpace:
    """Build and validate a finite space from its closed sets."""
    pts = tuple(points)
    family = {frozenset(c) for c in closed_sets}
    X = FiniteSpace(pts, tuple(sorted(family, key=lambda c: (len(c), sorted(c)))))
    validate_space(X)
    return X


def from_open_sets(points, open_sets) -> FiniteSpace:
    """Convert an open-set description to the closed-set form used here."""
    full = frozenset(range(len(points)))
    return make_space(points, [full - frozenset(u) for u in open_sets])


def validate_space(X: FiniteSpace) -> None:
    family = set(X.closed_sets)
    full = frozenset(range(X.n))
    if frozenset() not in family:
        raise InvalidSpace("the empty set must be closed")
    if full not in family:
        raise InvalidSpace("the full point set must be closed")
    for A, B in itertools.combinations(family, 2):
        if A | B not in family:
            raise InvalidSpace(f"union {sorted(A)} | {sorted(B)} not closed")
        if A & B not in family:
            raise InvalidSpace(f"intersection {sorted(A)} & {sorted(B)} not closed")
    for C in family:
        if not C <= full:
            raise InvalidSpace("closed set contains unknown points")


def closure(X: FiniteSpace, A: frozenset[int]) -> frozenset[int]:
    """Smallest closed superset (the family is intersection-closed)."""
    out = frozenset(range(X.n))
    for C in X.closed_sets:
        if A <= C and C < out:
            out = C
    return out


def is_open(X: FiniteSpace, A: frozenset[int]) -> bool:
    return (frozenset(range(X.n)) - A) in set(X.closed_sets)


def closed_points(X: FiniteSpace) -> list[int]:
    family = set(X.closed_sets)
    return [p for p in range(X.n) if frozenset({p}) in family]


@dataclass(frozen=True)
class AxiomReport:
    t0: bool
    t1: bool
    t_half: bool
    pearled: bool
    noetherian: bool


def axiom_suite(X: FiniteSpace) -> AxiomReport:
    """Evaluate each separation axiom by its definition.

    T0: distinct points have distinct singleton closures.  T1: every
    singleton is closed.  T 1/2: every singleton is open or closed.
    Pearled: every nonempty closed set contains a closed point.  The
    Noetherian chain condition is checked by computing the longest strictly
    descending chain of closed sets (finite spaces always pass).  The
    implication arrows T1 => T1/2 => T0 and T1/2 => pearled are asserted
    on the result.
    """
    family = set(X.closed_sets)
    closures = [closure(X, frozenset({p})) for p in range(X.n)]
    t0 = all(
        closures[p] != closures[q]
        for p in range(X.n)
        for q in range(p + 1, X.n)
    )
    t1 = all(frozenset({p}) in family for p in range(X.n))
    t_half = all(
        frozenset({p}) in family or is_open(X, frozenset({p})) for p in range(X.n)
    )
    cpts = set(closed_points(X))
    pearled = all(not C or (C & cpts) for C in family)

    # longest strictly descending chain; finiteness of the family makes
    # this terminate, which is the chain condition itself
    depth: dict[frozenset[int], int] = {}
    for C in sorted(family, key=len):
        depth[C] = 1 + max((depth[D] for D in family if D < C), default=0)
    noetherian = max(depth.values(), default=0) < float("inf")

    report = AxiomReport(t0, t1, t_half, pearled, noetherian)
    if report.t1 and not report.t_half:
        raise LatticeTheoremError("T1 space failed T1/2")
    if report.t_half and not report.t0:
        raise LatticeTheoremError("T1/2 space failed T0")
    if report.t_half and not report.pearled:
        raise LatticeTheoremError("T1/2 space failed pearled")
    return report


def prl(X: FiniteSpace) -> FiniteSpace:
    """Subspace of closed points; defined for pearled spaces, always T1."""
    if not axiom_suite(X).pearled:
        raise NotPearled("space has a nonempty closed set without closed points")
    ys = closed_points(X)
    pos = {p: i for i, p in enumerate(ys)}
    members = {frozenset(pos[p] for p in C if p in pos) for C in X.closed_sets}
    Y = make_space(tuple(X.points[p] for p in ys), members)
    if not axiom_suite(Y).t1:
        raise LatticeTheoremError("closed-point subspace is not T1")
    return Y


def _set_label(points: tuple[str, ...], C: frozenset[int]) -> str:
    return "{" + ",".join(points[p] for p in sorted(C)) + "}"


def closure_lattice(X: FiniteSpace) -> SemigroupTable:
    """The closed-set lattice as a semigroup under intersection.

    The empty set absorbs; idempotence of intersection makes the table
    nilpotent-free.
    """
    sets = list(X.closed_sets)
    pos = {C: i for i, C in enumerate(sets)}
    table = tuple(tuple(pos[A & B] for B in sets) for A in sets)
    return SemigroupTable(
        elements=tuple(_set_label(X.points, C) for C in sets),
        zero=pos[frozenset()],
        product=table,
    )


def alpha_map(X: FiniteSpace) -> SemigroupMap:
    """Intersection with the closed points: closed sets of X to those of Prl X."""
    Y = prl(X)
    ys = closed_points(X)
    pos = {p: i for i, p in enumerate(ys)}
    target_pos = {C: i for i, C in enumerate(Y.closed_sets)}
    assignment = tuple(
        target_pos[frozenset(pos[p] for p in C if p in pos)] for C in X.closed_sets
    )
    return SemigroupMap(closure_lattice(X), closure_lattice(Y), assignment)


# ---------------------------------------------------------------------------
# The nonnegative-integer space with closed sets [n, oo)


@dataclass(frozen=True)
class N0WindowReport:
    """Lazy report on the space of naturals whose closed sets are [n, oo).

    T0 is verified on the requested window; the failure of pearledness is
    structural and window-independent: every nonempty closed set [n, oo)
    properly contains [n+1, oo), so no minimal nonempty closed set (hence
    no closed point) exists.
    """

    n_max: int
    t0_on_window: bool
    pearled: bool
    proper_chain: tuple[tuple[int, int], ...]
    certificate: str


def n0_closure_of(n: int) -> str:
    return f"[{n},inf)"


def n0_space_window(n_max: int) -> N0WindowReport:
    if n_max < 1:
        raise ValueError("window must contain at least the point 0")
    # distinct closures on the window: closure({n}) = [n, oo)
    t0 = all(
        n0_closure_of(m) != n0_closure_of(n)
        for m in range(n_max + 1)
        for n in range(m + 1, n_max + 1)
    )
    chain = tuple((n, n + 1) for n in range(n_max + 1))
    for n, m in chain:
        # [m, oo) is a proper nonempty subset of [n, oo)
        assert n < m
    return N0WindowReport(
        n_max=n_max,
        t0_on_window=t0,
        pearled=False,
        proper_chain=chain,
        certificate=(
            "every nonempty closed set [n,inf) properly contains [n+1,inf); "
            "no closed set is minimal, so there are no closed points"
        ),
    )


# ---------------------------------------------------------------------------
# Subset lattices


@dataclass(frozen=True)
class SubsetLattice:
    """A union/intersection-closed family of subsets of a finite ground set."""

    ground: tuple[str, ...]
    members: tuple[frozenset[int], ...]

    @property
    def ground_size(self) -> int:
        return len(self.ground)

    @property
    def whole(self) -> frozenset[int]:
        return frozenset(range(self.ground_size))


def make_lattice(ground, members) -> SubsetLattice:
    g = tuple(ground)
    fam = {frozenset(m) for m in members}
    L = SubsetLattice(g, tuple(sorted(fam, key=lambda c: (len(c), sorted(c)))))
    full = L.whole
    if frozenset() not in fam or full not in fam:
        raise InvalidLattice("lattice must contain the empty set and the ground set")
    for A, B in itertools.combinations(fam, 2):
        if A | B not in fam or A & B not in fam:
            raise InvalidLattice("family not closed under union/intersection")
    for A in fam:
        if not A <= full:
            raise InvalidLattice("member not a subset of the ground set")
    return L


def powerset_lattice(ground) -> SubsetLattice:
    if isinstance(ground, int):
        ground = [f"y{i}" for i in range(ground)]
    g = tuple(ground)
    members = [
        frozenset(c)
        for k in range(len(g) + 1)
        for c in itertools.combinations(range(len(g)), k)
    ]
    return make_lattice(g, members)


def is_t1_lattice(L: SubsetLattice) -> bool:
    fam = set(L.members)
    return all(frozenset({i}) in fam for i in range(L.ground_size))


def lattice_semigroup(L: SubsetLattice) -> SemigroupTable:
    pos = {m: i for i, m in enumerate(L.members)}
    table = tuple(tuple(pos[A & B] for B in L.members) for A in L.members)
    return SemigroupTable(
        elements=tuple(_set_label(L.ground, m) for m in L.members),
        zero=pos[frozenset()],
        product=table,
    )


class _Whole:
    def __repr__(self):
        return "whole-ground-set"


WHOLE = _Whole()

SymbolicMember = Union[frozenset, _Whole]


class CofiniteT1Lattice:
    """All finite subsets of a countable ground set, plus the whole set.

    This is the closed-set lattice of the cofinite topology on the
    naturals: the canonical irreducible T1 lattice (an irreducible T1
    lattice on three or more points is necessarily infinite).  Members are
    frozensets of naturals, or the WHOLE sentinel.
    """

    t1 = True
    irreducible = True

    def meet(self, a: SymbolicMember, b: SymbolicMember) -> SymbolicMember:
        if a is WHOLE:
            return b
        if b is WHOLE:
            return a
        return a & b

    def join(self, a: SymbolicMember, b: SymbolicMember) -> SymbolicMember:
        if a is WHOLE or b is WHOLE:
            return WHOLE
        return a | b

    def is_member(self, x) -> bool:
        return x is WHOLE or isinstance(x, frozenset)

    # --- constructive witnesses -------------------------------------------

    def triangle_witness(self) -> tuple[frozenset, frozenset, frozenset]:
        """Three pairwise-disjoint singletons: a 3-cycle, so girth 3."""
        a, b, c = frozenset({0}), frozenset({1}), frozenset({2})
        assert not (a & b) and not (a & c) and not (b & c)
        return a, b, c

    def distance2_witness(self) -> tuple[frozenset, frozenset, frozenset]:
        """A non-adjacent vertex pair with a common neighbour: distance 2."""
        a, b, mid = frozenset({0}), frozenset({0, 1}), frozenset({2})
        assert a & b, "the pair must not be an edge"
        assert not (a & mid) and not (b & mid)
        return a, b, mid

    def clique_witness(self, n: int) -> tuple[frozenset, ...]:
        """n pairwise-disjoint singletons: a clique of any requested size."""
        sets = tuple(frozenset({i}) for i in range(n))
        for A, B in itertools.combinations(sets, 2):
            assert not (A & B)
        return sets

    def choice_colour(self, member: frozenset) -> int:
        """Colour a vertex by its least element; proper on any edge."""
        return min(member)

    def random_member(self, rng: random.Random, max_elem: int = 50, max_size: int = 6) -> frozenset:
        size = rng.randint(1, max_size)
        return frozenset(rng.sample(range(max_elem), size))

    def window(self, w: int) -> SubsetLattice:
        """Restriction to {0..w-1}: every subset appears, giving 2^window."""
        return powerset_lattice([str(i) for i in range(w)])

    def restrict(self, member: SymbolicMember, w: int) -> frozenset:
        window = frozenset(range(w))
        if member is WHOLE:
            return window
        return member & window


def lattice_is_irreducible(
    L: Union[SubsetLattice, CofiniteT1Lattice],
    samples: int = 200,
    seed: int = 0,
) -> bool:
    """No two members other than the ground set have union the ground set.

    For the symbolic lattice this is structural (a union of two finite sets
    is finite, never the infinite ground set); a bounded random search is
    run anyway and must find no counterexample.
    """
    if isinstance(L, CofiniteT1Lattice):
        rng = random.Random(seed)
        for _ in range(samples):
            a, b = L.random_member(rng), L.random_member(rng)
            if L.join(a, b) is WHOLE:
                raise LatticeTheoremError("finite join reported as the ground set")
        return True
    whole = L.whole
    proper = [m for m in L.members if m != whole]
    return all(A | B != whole for A in proper for B in proper)


def lattice_is_connected(
    L: Union[SubsetLattice, CofiniteT1Lattice],
    samples: int = 200,
    seed: int = 0,
) -> bool:
    """No two disjoint members other than the ground set union to it."""
    if isinstance(L, CofiniteT1Lattice):
        return lattice_is_irreducible(L, samples, seed)
    whole = L.whole
    proper = [m for m in L.members if m != whole]
    return all(
        A | B != whole for A in proper for B in proper if not (A & B)
    )


@dataclass(frozen=True)
class CharEquivalenceReport:
    """Graph-theoretic characterizations of irreducible and connected.

    For a T1 subset lattice: the vertices of the zero-divisor graph are
    exactly the members other than the empty and ground sets; the lattice
    is irreducible iff every vertex pair admits a path of length 2, and
    connected iff every edge lies on a 3-cycle.
    """

    vertex_set_matches: bool
    irreducible: bool
    every_pair_has_2path: bool
    irreducible_equivalence: bool
    connected: bool
    every_edge_in_3cycle: bool
    connected_equivalence: bool

    @property
    def passed(self) -> bool:
        return (
            self.vertex_set_matches
            and self.irreducible_equivalence
            and self.connected_equivalence
        )


def char_check_irr_conn(L: SubsetLattice) -> CharEquivalenceReport:
    if not is_t1_lattice(L):
        raise InvalidLattice("characterization requires a T1 lattice")
    sg = lattice_semigroup(L)
    G = zero_divisor_graph(sg)
    whole = L.whole
    expected_vertices = {
        _set_label(L.ground, m) for m in L.members if m and m != whole
    }
    vertex_set_matches = set(G.vertices) == expected_vertices

    adj = [set() for _ in range(G.n)]
    for i, j in G.edges:
        adj[i].add(j)
        adj[j].add(i)
    pairs_2path = all(
        any(k in adj[a] and k in adj[b] for k in range(G.n))
        for a in range(G.n)
        for b in range(a + 1, G.n)
    )
    edges_3cycle = all(bool(adj[i] & adj[j]) for i, j in G.edges)

    irr = lattice_is_irreducible(L)
    conn = lattice_is_connected(L)
    return CharEquivalenceReport(
        vertex_set_matches=vertex_set_matches,
        irreducible=irr,
        every_pair_has_2path=pairs_2path,
        irreducible_equivalence=irr == pairs_2path,
        connected=conn,
        every_edge_in_3cycle=edges_3cycle,
        connected_equivalence=conn == edges_3cycle,
    )


def t1_invariants(
    L: Union[SubsetLattice, CofiniteT1Lattice],
    max_chromatic_vertices: int = 64,
) -> InvariantBundle:
    """Invariants of the zero-divisor graph of a T1 lattice.

    Finite mode computes exactly and asserts the full case split: a finite
    T1 lattice is the whole powerset; the graph is empty for a ground set
    of at most one point, a single edge (diameter 1, girth infinite) for
    two, and has diameter 3, girth 3, clique and chromatic number equal to
    the ground size for three or more.  Symbolic mode returns diameter 2,
    girth 3, and countably infinite clique and chromatic numbers; see the
    lattice's witness methods for the constructive evidence.
    """
    if isinstance(L, CofiniteT1Lattice):
        return InvariantBundle(2, 3, COUNTABLY_INFINITE, COUNTABLY_INFINITE)
    if not is_t1_lattice(L):
        raise InvalidLattice("t1_invariants requires a T1 lattice")
    k = L.ground_size
    if len(L.members) != 2**k:
        raise LatticeTheoremError(
            f"finite T1 lattice on {k} points has {len(L.members)} != 2^{k} members"
        )
    G = zero_divisor_graph(lattice_semigroup(L))
    bundle = invariant_bundle(
        G, max_chromatic_vertices=max(max_chromatic_vertices, G.n)
    )
    if k <= 1:
        expected = InvariantBundle(0, float("inf"), 0, 0)
    elif k == 2:
        expected = InvariantBundle(1, float("inf"), 2, 2)
    else:
        if lattice_is_irreducible(L):
            raise LatticeTheoremError(
                "a finite T1 lattice on >= 3 points cannot be irreducible"
            )
        expected = InvariantBundle(3, 3, k, k)
    if bundle != expected:
        raise LatticeTheoremError(
            f"T1 case split violated: computed {bundle}, expected {expected}"
        )
    return bundle
