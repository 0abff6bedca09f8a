"""Deterministic corpora: enumerations and seeded random generators.

Finite topologies are in bijection with preorders (closed sets are the
down-sets of the specialization order), so spaces are enumerated and
sampled through preorder matrices.  Posets are enumerated by choosing one
of three states per unordered pair and keeping the transitive outcomes.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .rings import FiniteRing, make_gf, make_product, make_zn
from .semigroups import SemigroupMap, SemigroupTable
from .spectra import FinitePoset
from .topology import FiniteSpace, SubsetLattice, make_lattice, make_space

_LETTERS = "abcdefgh"


def _space_from_preorder(leq: list[list[bool]]) -> FiniteSpace:
    """Closed sets are the down-sets of x <= y (x in the closure of y)."""
    n = len(leq)
    closed = []
    for bits in range(1 << n):
        A = {p for p in range(n) if bits >> p & 1}
        if all(leq[x][y] <= (x in A) for y in A for x in range(n)):
            closed.append(frozenset(A))
    return make_space(tuple(_LETTERS[i] for i in range(n)), closed)


def enumerate_topologies(n: int) -> Iterator[FiniteSpace]:
    """All topologies on n labelled points, via transitive reflexive relations."""
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    for bits in range(1 << len(off)):
        leq = [[i == j for j in range(n)] for i in range(n)]
        for k, (i, j) in enumerate(off):
            if bits >> k & 1:
                leq[i][j] = True
        if all(
            not (leq[a][b] and leq[b][c]) or leq[a][c]
            for a in range(n)
            for b in range(n)
            for c in range(n)
        ):
            yield _space_from_preorder(leq)


def random_space(rng: random.Random, n: int, density: float = 0.35) -> FiniteSpace:
    leq = [[i == j for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and rng.random() < density:
                leq[i][j] = True
    changed = True
    while changed:
        changed = False
        for a in range(n):
            for b in range(n):
                if leq[a][b]:
                    for c in range(n):
                        if leq[b][c] and not leq[a][c]:
                            leq[a][c] = True
                            changed = True
    return _space_from_preorder(leq)


def enumerate_posets(n: int) -> Iterator[FinitePoset]:
    """All partial orders on n labelled points."""
    if n == 0:
        yield FinitePoset((), ())
        return
    pairs = list(itertools.combinations(range(n), 2))
    labels = tuple(f"p{i}" for i in range(n))
    for states in itertools.product((0, 1, 2), repeat=len(pairs)):
        leq = [[i == j for j in range(n)] for i in range(n)]
        for (i, j), s in zip(pairs, states):
            if s == 1:
                leq[i][j] = True
            elif s == 2:
                leq[j][i] = True
        if all(
            not (leq[a][b] and leq[b][c]) or leq[a][c]
            for a in range(n)
            for b in range(n)
            for c in range(n)
        ):
            yield FinitePoset(labels, tuple(tuple(r) for r in leq))


def random_poset(rng: random.Random, n: int, density: float = 0.4) -> FinitePoset:
    order = list(range(n))
    rng.shuffle(order)
    leq = [[i == j for j in range(n)] for i in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < density:
                leq[order[a]][order[b]] = True
    for k in range(n):
        for i in range(n):
            if leq[i][k]:
                for j in range(n):
                    if leq[k][j]:
                        leq[i][j] = True
    return FinitePoset(tuple(f"p{i}" for i in range(n)), tuple(tuple(r) for r in leq))


def enumerate_t1_sublattices(n: int) -> Iterator[SubsetLattice]:
    """All union/intersection-closed families on n points that contain the
    empty set, the ground set, and every singleton."""
    ground = tuple(_LETTERS[i] for i in range(n))
    full = frozenset(range(n))
    required = {frozenset(), full} | {frozenset({i}) for i in range(n)}
    optional = [
        frozenset(c)
        for k in range(2, n)
        for c in itertools.combinations(range(n), k)
    ]
    for bits in range(1 << len(optional)):
        fam = set(required)
        for k, m in enumerate(optional):
            if bits >> k & 1:
                fam.add(m)
        if all(A | B in fam and A & B in fam for A in fam for B in fam):
            yield make_lattice(ground, fam)


# ---------------------------------------------------------------------------
# Ring corpora


def field_orders_up_to(n: int) -> list[int]:
    out = []
    for q in range(2, n + 1):
        m = q
        for p in range(2, q + 1):
            if m % p == 0:
                while m % p == 0:
                    m //= p
                break
        if m == 1:
            out.append(q)
    return out


def _squarefree(n: int) -> bool:
    for d in range(2, int(n**0.5) + 1):
        if n % (d * d) == 0:
            return False
    return True


def reduced_rings_up_to(max_order: int, max_factors: int = 4) -> list[FiniteRing]:
    """Reduced rings up to the order bound: squarefree Z_n, finite fields,
    and products of fields (every finite reduced commutative ring is such a
    product; the different constructions exercise different code paths)."""
    rings: list[FiniteRing] = []
    for n in range(2, max_order + 1):
        if _squarefree(n) and not _is_prime_power(n):
            rings.append(make_zn(n))
    fields = {q: make_gf(q) for q in field_orders_up_to(max_order)}
    rings.extend(fields.values())
    orders = sorted(fields)
    for k in range(2, max_factors + 1):
        for combo in itertools.combinations_with_replacement(orders, k):
            size = 1
            for q in combo:
                size *= q
            if size <= max_order:
                rings.append(make_product([fields[q] for q in combo]))
    return rings


def _is_prime_power(n: int) -> bool:
    for p in range(2, n + 1):
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
    return False


def small_reduced_rings_for_content(max_order: int = 9) -> list[FiniteRing]:
    """All reduced commutative rings of order <= the bound, up to isomorphism."""
    fields = {q: make_gf(q) for q in field_orders_up_to(max_order)}
    rings: list[FiniteRing] = list(fields.values())
    orders = sorted(fields)
    for k in (2, 3):
        for combo in itertools.combinations_with_replacement(orders, k):
            size = 1
            for q in combo:
                size *= q
            if size <= max_order:
                rings.append(make_product([fields[q] for q in combo]))
    return rings


# ---------------------------------------------------------------------------
# Armendariz map corpus


def permuted_copy(S: SemigroupTable, rng: random.Random) -> SemigroupMap:
    """A random isomorphism from S onto a relabelled copy of itself."""
    n = S.size
    perm = list(range(n))
    rng.shuffle(perm)
    prod = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            prod[perm[a]][perm[b]] = perm[S.product[a][b]]
    labels = [""] * n
    for a in range(n):
        labels[perm[a]] = S.elements[a]
    target = SemigroupTable(tuple(labels), perm[S.zero], tuple(tuple(r) for r in prod))
    return SemigroupMap(S, target, tuple(perm))


def armendariz_map_corpus(
    seed: int = 7,
    ring_order: int = 32,
    space_count: int = 220,
    poset_count: int = 220,
    iso_count: int = 60,
    max_points: int = 6,
) -> list[tuple[str, SemigroupMap]]:
    """Named (description, map) pairs for the invariant-preservation suite.

    Quotient projections of multiplicative semigroups of reduced rings,
    closed-point intersection maps of random pearled spaces, restrictions
    to maximal points of random posets, and random isomorphisms.
    """
    from .rings import is_reduced, multiplicative_semigroup
    from .semigroups import eq_quotient
    from .spectra import restrict_to_max
    from .topology import alpha_map, axiom_suite

    rng = random.Random(seed)
    out: list[tuple[str, SemigroupMap]] = []

    for R in reduced_rings_up_to(ring_order):
        assert is_reduced(R)
        q = eq_quotient(multiplicative_semigroup(R))
        out.append((f"eq-quotient {R.tag}", q.projection))

    made = 0
    while made < space_count:
        X = random_space(rng, rng.randint(1, max_points))
        if not axiom_suite(X).pearled:
            continue
        out.append((f"alpha map on {X.n}-point space", alpha_map(X)))
        made += 1

    for k in range(poset_count):
        P = random_poset(rng, rng.randint(1, max_points))
        out.append((f"max restriction on {P.n}-point poset #{k}", restrict_to_max(P)))

    bases = [multiplicative_semigroup(R) for R in reduced_rings_up_to(12)]
    for k in range(iso_count):
        S = bases[rng.randrange(len(bases))]
        out.append((f"random isomorphism #{k} of {S.size}-element semigroup",
                    permuted_copy(S, rng)))
    return out
