"""Property-based checks of the structural invariants.

Graph solvers are validated against naive independent oracles; the
semigroup, ring, topology and lattice layers are checked against the laws
the structure theorems promise, over seeded random corpora.
"""

import math
import random

from hypothesis import given, settings, strategies as st

from zdgraph.corpus import (
    random_poset,
    random_space,
    reduced_rings_up_to,
)
from zdgraph.graphs import (
    SimpleGraph,
    beck_graph,
    chromatic_number,
    clique_number,
    diameter,
    girth,
    is_connected,
    zero_divisor_graph,
)
from zdgraph.rings import (
    is_reduced,
    make_gf,
    make_product,
    make_zn,
    multiplicative_semigroup,
)
from zdgraph.semigroups import (
    annihilator,
    check_armendariz,
    compose,
    eq_quotient,
    induced_final_map,
    is_nilpotent_free,
)
from zdgraph.spectra import restrict_to_max, sigma_spec, uspec_sigma
from zdgraph.topology import CofiniteT1Lattice, alpha_map, axiom_suite

INF = math.inf


# ---------------------------------------------------------------------------
# Graph solver oracles


def naive_clique_number(G: SimpleGraph) -> int:
    adj = {(i, j) for i, j in G.edges} | {(j, i) for i, j in G.edges}
    best = 0
    for mask in range(1 << G.n):
        vs = [v for v in range(G.n) if mask >> v & 1]
        if all((a, b) in adj for i, a in enumerate(vs) for b in vs[i + 1:]):
            best = max(best, len(vs))
    return best


def naive_chromatic_number(G: SimpleGraph) -> int:
    adj = [set() for _ in range(G.n)]
    for i, j in G.edges:
        adj[i].add(j)
        adj[j].add(i)

    def colourable(k):
        cols = [-1] * G.n

        def rec(v):
            if v == G.n:
                return True
            for c in range(k):
                if all(cols[u] != c for u in adj[v]):
                    cols[v] = c
                    if rec(v + 1):
                        return True
                    cols[v] = -1
            return False

        return rec(0)

    for k in range(G.n + 1):
        if colourable(k):
            return k
    return G.n


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    flags = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, f in zip(pairs, flags) if f]
    return SimpleGraph.from_edges([str(i) for i in range(n)], edges)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=12))
def test_clique_matches_naive_enumeration(G):
    assert clique_number(G) == naive_clique_number(G)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=10))
def test_chromatic_matches_naive_search(G):
    assert chromatic_number(G) == naive_chromatic_number(G)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=11))
def test_chromatic_at_least_clique(G):
    assert chromatic_number(G) >= clique_number(G)


def _to_networkx(G: SimpleGraph):
    import networkx as nx

    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    return H


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=12))
def test_metric_invariants_match_networkx(G):
    import networkx as nx

    H = _to_networkx(G)
    assert is_connected(G) == (G.n == 0 or nx.is_connected(H))
    if G.n and nx.is_connected(H):
        assert diameter(G) == nx.diameter(H)
    try:
        expected_girth = nx.girth(H)
    except Exception:
        expected_girth = INF
    assert girth(G) == expected_girth


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=12))
def test_clique_matches_networkx(G):
    import networkx as nx

    H = _to_networkx(G)
    expected = max((len(c) for c in nx.find_cliques(H)), default=0)
    assert clique_number(G) == expected


# ---------------------------------------------------------------------------
# Zero-divisor graph laws over random semigroups


def _corpus_semigroups(seed=13, spaces=25, posets=25):
    rng = random.Random(seed)
    out = [multiplicative_semigroup(R) for R in reduced_rings_up_to(16)]
    from zdgraph.topology import closure_lattice

    for _ in range(spaces):
        out.append(closure_lattice(random_space(rng, rng.randint(1, 5))))
    for _ in range(posets):
        out.append(sigma_spec(random_poset(rng, rng.randint(1, 5))))
    out.append(multiplicative_semigroup(make_zn(4)))  # nilpotents allowed here
    out.append(multiplicative_semigroup(make_zn(8)))
    return out


def test_zero_divisor_graphs_connected_small_diameter_constrained_girth():
    for S in _corpus_semigroups():
        G = zero_divisor_graph(S)
        assert is_connected(G)
        assert diameter(G) <= 3
        assert girth(G) in (3, 4, INF)


def test_quotient_projection_is_armendariz_and_nilpotent_free():
    for S in _corpus_semigroups():
        if not is_nilpotent_free(S):
            continue
        q = eq_quotient(S)
        assert check_armendariz(q.projection).is_armendariz
        assert is_nilpotent_free(q.quotient)


def test_annihilator_class_product_well_defined():
    for S in _corpus_semigroups():
        ann = [annihilator(S, s) for s in range(S.size)]
        classes = {}
        for s in range(S.size):
            classes.setdefault(ann[s], []).append(s)
        reps = list(classes.values())
        for c1 in reps:
            for c2 in reps:
                results = {ann[S.product[a][b]] for a in c1[:2] for b in c2[:2]}
                assert len(results) == 1


def test_finality_factorization_over_corpus():
    from zdgraph.corpus import permuted_copy

    rng = random.Random(3)
    count = 0
    for S in _corpus_semigroups(seed=23, spaces=10, posets=10):
        if not is_nilpotent_free(S) or S.size > 40:
            continue
        q = eq_quotient(S)
        for g in (q.projection, permuted_copy(S, rng)):
            h = induced_final_map(g)
            assert compose(h, g).assignment == q.projection.assignment
        count += 1
    assert count >= 10


def test_alpha_maps_armendariz_over_random_pearled_spaces():
    rng = random.Random(101)
    found = 0
    while found < 30:
        X = random_space(rng, rng.randint(1, 5))
        if not axiom_suite(X).pearled:
            continue
        found += 1
        a = alpha_map(X)
        assert check_armendariz(a).is_armendariz
        # the closed-point subspace realizes the annihilator quotient
        q = eq_quotient(a.source)
        assert q.quotient.size == a.target.size


def test_max_restrictions_armendariz_over_random_posets():
    rng = random.Random(7)
    for _ in range(30):
        P = random_poset(rng, rng.randint(1, 5))
        assert check_armendariz(restrict_to_max(P)).is_armendariz
        assert set(sigma_spec(P).elements) == set(uspec_sigma(P).elements)


def test_beck_relations_on_nondomain_rings():
    for R in (make_zn(6), make_zn(12), make_product([make_zn(2), make_zn(2)]),
              make_product([make_gf(4), make_zn(3)])):
        S = multiplicative_semigroup(R)
        G = zero_divisor_graph(S)
        if G.n == 0:
            continue
        G0 = beck_graph(S)
        assert clique_number(G0) == clique_number(G) + 1
        assert chromatic_number(G0) == chromatic_number(G) + 1


def test_reduced_rings_really_reduced():
    for R in reduced_rings_up_to(20):
        assert is_reduced(R)


def _comaximal_ring_corpus():
    out = [make_zn(n) for n in range(2, 25)]
    out.append(make_zn(36))  # (4) and (9) separate the two maximals: girth 4
    out += [make_product([make_gf(a), make_gf(b)]) for a, b in ((2, 2), (2, 4), (3, 5))]
    out += [make_product([make_gf(2), make_gf(2), make_gf(3)])]
    return out


def test_ideal_semigroup_identities_and_absorbers():
    from zdgraph.rings import enumerate_ideals, ideal_semigroup

    for R in (make_zn(12), make_product([make_gf(2), make_gf(3)])):
        n_ideals = len(enumerate_ideals(R))
        for op in ("mult", "add"):
            sg = ideal_semigroup(R, op).table
            zero_row = sg.product[sg.zero]
            assert all(x == sg.zero for x in zero_row)
            # the other extreme ideal is a two-sided identity
            identity = next(
                i for i in range(n_ideals)
                if all(sg.product[i][j] == j for j in range(n_ideals))
            )
            assert identity != sg.zero


def test_comaximal_two_maximal_case_split():
    """Diameter and girth of the ideals-under-addition graph follow the
    two-maximal-ideal case analysis, exhaustively over the corpus."""
    from zdgraph.rings import (
        enumerate_ideals,
        ideal_semigroup,
        maximal_ideals,
    )

    legs = {"diam1": 0, "diam2": 0, "gir4": 0, "girinf": 0}
    for R in _comaximal_ring_corpus():
        ideals = enumerate_ideals(R)
        maxes = maximal_ideals(R, ideals)
        if len(maxes) != 2:
            continue
        m1, m2 = maxes
        whole = frozenset(range(R.size))
        nonmax = [I for I in ideals if I != whole and I not in (m1, m2)]
        G = zero_divisor_graph(ideal_semigroup(R, "add").table)
        below_both = all(I <= (m1 & m2) for I in nonmax)
        assert diameter(G) == (1 if below_both else 2)
        legs["diam1" if below_both else "diam2"] += 1
        sep = any(
            J1 <= m1 and not J1 <= m2 and J2 <= m2 and not J2 <= m1
            for J1 in nonmax
            for J2 in nonmax
        )
        assert girth(G) == (4 if sep else INF)
        legs["gir4" if sep else "girinf"] += 1
    assert all(count >= 1 for count in legs.values()), legs


def test_comaximal_counting_law():
    # clique and chromatic number of the addition graph equal the number of
    # maximal ideals (empty graphs below two maximals)
    from zdgraph.rings import ideal_semigroup, maximal_ideals

    for R in _comaximal_ring_corpus():
        G = zero_divisor_graph(ideal_semigroup(R, "add").table)
        nmax = len(maximal_ideals(R))
        expected = nmax if nmax >= 2 else 0
        assert clique_number(G) == expected
        assert chromatic_number(G) == expected


@settings(max_examples=100, deadline=None)
@given(st.sets(st.integers(min_value=0, max_value=30), min_size=1, max_size=6),
       st.sets(st.integers(min_value=0, max_value=30), min_size=1, max_size=6))
def test_symbolic_choice_colouring_proper(a, b):
    C = CofiniteT1Lattice()
    u, v = frozenset(a), frozenset(b)
    if u != v and not (u & v):
        assert C.choice_colour(u) != C.choice_colour(v)


@settings(max_examples=100, deadline=None)
@given(st.sets(st.integers(min_value=0, max_value=20), min_size=1, max_size=5),
       st.sets(st.integers(min_value=0, max_value=20), min_size=1, max_size=5))
def test_symbolic_meets_agree_with_windows(a, b):
    C = CofiniteT1Lattice()
    u, v = frozenset(a), frozenset(b)
    w = max(u | v) + 1
    assert C.meet(u, v) == C.restrict(u, w) & C.restrict(v, w)
