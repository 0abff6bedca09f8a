"""Truncated polynomial arithmetic over a finite ring, and the content map.

Polynomials of bounded degree are never wrapped into a fake quotient
semigroup (truncations are not closed under multiplication, and chopping
would introduce spurious nilpotents); zero-product relations between pairs
are checked directly, which is exactly what the Armendariz conditions
quantify over.

Enumeration order is degree-then-lexicographic in coefficient indices, so
every reported witness is the first counterexample in a canonical order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .graphs import SimpleGraph, clique_number, chromatic_number
from .rings import (
    FiniteRing,
    Ideal,
    gamma_graph,
    ideal_product,
    ideal_sum,
    is_reduced,
    principal_ideal,
)
from .semigroups import SizeGuardExceeded

DEFAULT_MAX_POLYS = 4096


@dataclass(frozen=True)
class TruncPoly:
    """A polynomial with ring-element coefficients, trailing zeros stripped.

    ``coeffs[i]`` is the index of the coefficient of X^i; the zero
    polynomial is the empty tuple.
    """

    ring: FiniteRing
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == self.ring.zero:
            raise ValueError("coefficients not normalized")

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> Optional[int]:
        return len(self.coeffs) - 1 if self.coeffs else None

    def label(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == self.ring.zero:
                continue
            lbl = self.ring.labels[c]
            if i == 0:
                terms.append(lbl)
            elif i == 1:
                terms.append(f"{lbl}*X")
            else:
                terms.append(f"{lbl}*X^{i}")
        return " + ".join(terms)


def make_poly(R: FiniteRing, coeffs) -> TruncPoly:
    cs = list(coeffs)
    while cs and cs[-1] == R.zero:
        cs.pop()
    return TruncPoly(R, tuple(cs))


def poly_mul(f: TruncPoly, g: TruncPoly) -> TruncPoly:
    """Exact convolution product."""
    if f.ring is not g.ring:
        raise ValueError("polynomials over different rings")
    R = f.ring
    if f.is_zero or g.is_zero:
        return make_poly(R, ())
    add, mul = R.add, R.mul
    out = [R.zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a == R.zero:
            continue
        row = mul[a]
        for j, b in enumerate(g.coeffs):
            out[i + j] = add[out[i + j]][row[b]]
    return make_poly(R, out)


def content(f: TruncPoly) -> Ideal:
    """The ideal generated by the coefficients; content(0) = (0)."""
    R = f.ring
    acc: Ideal = frozenset({R.zero})
    for c in set(f.coeffs):
        acc = ideal_sum(R, acc, principal_ideal(R, c))
    return acc


def polys_up_to_degree(R: FiniteRing, d: int) -> Iterator[TruncPoly]:
    """All |R|^(d+1) polynomials of degree <= d, canonical order.

    Order: the zero polynomial, then degree 0, 1, ..., d, lexicographic in
    coefficient indices within each degree.
    """
    yield TruncPoly(R, ())
    nonzero = [c for c in range(R.size) if c != R.zero]
    for deg in range(d + 1):
        for lower in itertools.product(range(R.size), repeat=deg):
            for lead in nonzero:
                yield TruncPoly(R, lower + (lead,))


def _poly_count(R: FiniteRing, d: int) -> int:
    return R.size ** (d + 1)


@dataclass(frozen=True)
class PairCheckReport:
    """Verdict of an exhaustive all-pairs polynomial check."""

    kind: str
    ring_tag: str
    degree: int
    passed: bool
    pairs_checked: int
    witness: Optional[tuple[str, str]] = None
    witness_note: str = ""


def _zero_product(f: TruncPoly, g: TruncPoly) -> bool:
    """fg = 0, by convolution with early exit on a nonzero coefficient."""
    R = f.ring
    if f.is_zero or g.is_zero:
        return True
    add, mul, zero = R.add, R.mul, R.zero
    fc, gc = f.coeffs, g.coeffs
    for k in range(len(fc) + len(gc) - 1):
        acc = zero
        lo = max(0, k - len(gc) + 1)
        hi = min(k, len(fc) - 1)
        for i in range(lo, hi + 1):
            acc = add[acc][mul[fc[i]][gc[k - i]]]
        if acc != zero:
            return False
    return True


def _all_coeff_products_zero(f: TruncPoly, g: TruncPoly) -> bool:
    """Every product of a coefficient of f with one of g vanishes.

    Equivalent to content(f) * content(g) = (0), since the product ideal is
    generated by the pairwise coefficient products.
    """
    R = f.ring
    mul, zero = R.mul, R.zero
    for a in f.coeffs:
        row = mul[a]
        for b in g.coeffs:
            if row[b] != zero:
                return False
    return True


def check_armendariz_ring(
    R: FiniteRing, degree_bound: int, max_polys: int = DEFAULT_MAX_POLYS
) -> PairCheckReport:
    """All pairs of degree <= d: fg = 0 <=> content(f)*content(g) = (0).

    Reduced rings must pass; non-reduced inputs are permitted and simply
    reported (Z_4, for instance, passes although it is not reduced).
    """
    if _poly_count(R, degree_bound) > max_polys:
        raise SizeGuardExceeded(
            f"{_poly_count(R, degree_bound)} polynomials exceed guard {max_polys}"
        )
    polys = list(polys_up_to_degree(R, degree_bound))
    pairs = 0
    for f in polys:
        for g in polys:
            pairs += 1
            if _zero_product(f, g) != _all_coeff_products_zero(f, g):
                return PairCheckReport(
                    "armendariz", R.tag, degree_bound, False, pairs,
                    (f.label(), g.label()),
                    "fg = 0 and content(f)content(g) = (0) disagree",
                )
    return PairCheckReport("armendariz", R.tag, degree_bound, True, pairs)


def check_gaussian(
    R: FiniteRing, degree_bound: int, max_polys: int = DEFAULT_MAX_POLYS
) -> PairCheckReport:
    """All pairs of degree <= d: content(fg) = content(f)*content(g)."""
    if _poly_count(R, degree_bound) > max_polys:
        raise SizeGuardExceeded(
            f"{_poly_count(R, degree_bound)} polynomials exceed guard {max_polys}"
        )
    polys = list(polys_up_to_degree(R, degree_bound))
    content_of = {f: content(f) for f in polys}
    prod_cache: dict[tuple[Ideal, Ideal], Ideal] = {}
    pairs = 0
    for f in polys:
        cf = content_of[f]
        for g in polys:
            pairs += 1
            key = (cf, content_of[g])
            prod = prod_cache.get(key)
            if prod is None:
                prod = ideal_product(R, *key)
                prod_cache[key] = prod
            if content(poly_mul(f, g)) != prod:
                return PairCheckReport(
                    "gaussian", R.tag, degree_bound, False, pairs,
                    (f.label(), g.label()),
                    "content(fg) != content(f)content(g)",
                )
    return PairCheckReport("gaussian", R.tag, degree_bound, True, pairs)


def check_content_containment(
    R: FiniteRing, degree_bound: int, max_polys: int = DEFAULT_MAX_POLYS
) -> PairCheckReport:
    """All pairs of degree <= d: content(fg) is contained in content(f)content(g)."""
    if _poly_count(R, degree_bound) > max_polys:
        raise SizeGuardExceeded(
            f"{_poly_count(R, degree_bound)} polynomials exceed guard {max_polys}"
        )
    polys = list(polys_up_to_degree(R, degree_bound))
    content_of = {f: content(f) for f in polys}
    prod_cache: dict[tuple[Ideal, Ideal], Ideal] = {}
    pairs = 0
    for f in polys:
        cf = content_of[f]
        for g in polys:
            pairs += 1
            key = (cf, content_of[g])
            prod = prod_cache.get(key)
            if prod is None:
                prod = ideal_product(R, *key)
                prod_cache[key] = prod
            fg = poly_mul(f, g)
            if any(c not in prod for c in fg.coeffs):
                return PairCheckReport(
                    "content-containment", R.tag, degree_bound, False, pairs,
                    (f.label(), g.label()),
                    "a coefficient of fg escapes content(f)content(g)",
                )
    return PairCheckReport("content-containment", R.tag, degree_bound, True, pairs)


def contents_hit(R: FiniteRing, degree_bound: int) -> set[Ideal]:
    """The set of ideals realized as contents of polynomials of degree <= d."""
    return {content(f) for f in polys_up_to_degree(R, degree_bound)}


# ---------------------------------------------------------------------------
# Clique/chromatic stability of the bounded-degree zero-divisor graph


def truncated_zero_divisor_graph(R: FiniteRing, degree_bound: int) -> SimpleGraph:
    """Graph on nonzero degree-<= d polynomials with a vanishing product.

    Vertices are polynomials annihilated by some nonzero polynomial of
    degree <= d; edges join distinct pairs whose product is the zero
    polynomial.  At degree 0 this is exactly the ring's zero-divisor graph.
    """
    polys = [f for f in polys_up_to_degree(R, degree_bound) if not f.is_zero]
    kill = [[_zero_product(f, g) for g in polys] for f in polys]
    verts = [i for i in range(len(polys)) if any(kill[i])]
    labels = tuple(polys[i].label() for i in verts)
    edges = set()
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            if kill[verts[a]][verts[b]]:
                edges.add((a, b))
    return SimpleGraph(labels, frozenset(edges))


@dataclass(frozen=True)
class StabilizationReport:
    ring_tag: str
    base_clique: int
    base_chromatic: int
    per_degree: tuple[tuple[int, int, int], ...]  # (degree, clique, chromatic)
    passed: bool


def clique_stabilization(
    R: FiniteRing, degree_bound: int, max_polys: int = DEFAULT_MAX_POLYS
) -> StabilizationReport:
    """clique and chromatic numbers of the truncated graphs match the ring's.

    Valid for reduced rings; each degree 0..degree_bound is checked.
    """
    if not is_reduced(R):
        raise ValueError("clique stabilization requires a reduced ring")
    if _poly_count(R, degree_bound) > max_polys:
        raise SizeGuardExceeded("polynomial enumeration over guard")
    base = gamma_graph(R)
    base_clq = clique_number(base)
    base_chi = chromatic_number(base)
    rows = []
    ok = True
    for d in range(degree_bound + 1):
        G = truncated_zero_divisor_graph(R, d)
        clq = clique_number(G)
        chi = chromatic_number(G, max_vertices=max(G.n, 64))
        rows.append((d, clq, chi))
        ok = ok and clq == base_clq and chi == base_chi
    return StabilizationReport(R.tag, base_clq, base_chi, tuple(rows), ok)
