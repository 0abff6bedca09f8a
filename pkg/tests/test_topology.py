import math
import random

import pytest

from zdgraph.graphs import COUNTABLY_INFINITE, invariant_bundle, zero_divisor_graph
from zdgraph.semigroups import check_armendariz, check_homomorphism, is_nilpotent_free
from zdgraph.topology import (
    CofiniteT1Lattice,
    InvalidLattice,
    InvalidSpace,
    NotPearled,
    WHOLE,
    alpha_map,
    axiom_suite,
    char_check_irr_conn,
    closure,
    closure_lattice,
    from_open_sets,
    is_t1_lattice,
    lattice_is_connected,
    lattice_is_irreducible,
    lattice_semigroup,
    make_lattice,
    make_space,
    n0_space_window,
    powerset_lattice,
    prl,
    t1_invariants,
)

INF = math.inf


def sierpinski():
    return make_space(["a", "b"], [frozenset(), frozenset({1}), frozenset({0, 1})])


def three_point_pearled():
    return make_space(["a", "b", "c"], [frozenset(), frozenset({2}), frozenset({0, 1, 2})])


def discrete(n):
    import itertools

    pts = [chr(ord("a") + i) for i in range(n)]
    family = [
        frozenset(c)
        for k in range(n + 1)
        for c in itertools.combinations(range(n), k)
    ]
    return make_space(pts, family)


def test_validation_rejects_unclosed_family():
    with pytest.raises(InvalidSpace):
        make_space(["a", "b"], [frozenset(), frozenset({0}), frozenset({1})])


def test_from_open_sets():
    # Sierpinski given by opens: {}, {a}, X
    X = from_open_sets(["a", "b"], [frozenset(), frozenset({0}), frozenset({0, 1})])
    assert set(X.closed_sets) == set(sierpinski().closed_sets)


def test_axioms_three_point():
    ax = axiom_suite(three_point_pearled())
    assert ax.pearled and not ax.t0 and ax.noetherian


def test_axioms_sierpinski():
    ax = axiom_suite(sierpinski())
    assert ax.t_half and not ax.t1 and ax.t0 and ax.pearled


def test_axioms_discrete():
    ax = axiom_suite(discrete(3))
    assert ax.t0 and ax.t1 and ax.t_half and ax.pearled and ax.noetherian


def test_closure():
    X = sierpinski()
    assert closure(X, frozenset({0})) == frozenset({0, 1})
    assert closure(X, frozenset({1})) == frozenset({1})


def test_prl():
    assert prl(three_point_pearled()).points == ("c",)
    assert prl(sierpinski()).points == ("b",)
    assert prl(discrete(3)).points == ("a", "b", "c")


def test_prl_rejects_nonpearled():
    # closed sets {}, {a,b}, X on three points: {a,b} has no closed point
    X = make_space(
        ["a", "b", "c"],
        [frozenset(), frozenset({0, 1}), frozenset({0, 1, 2})],
    )
    with pytest.raises(NotPearled):
        prl(X)


def test_n0_window():
    rep = n0_space_window(5)
    assert rep.t0_on_window and not rep.pearled
    assert rep.proper_chain[0] == (0, 1)
    rep1 = n0_space_window(1)
    assert rep1.t0_on_window and not rep1.pearled
    from zdgraph.topology import n0_closure_of

    assert n0_closure_of(3) == "[3,inf)"


def test_closure_lattice_examples():
    t = closure_lattice(discrete(2))
    assert t.size == 4
    G = zero_divisor_graph(t)
    assert G.n == 2 and len(G.edges) == 1

    indiscrete = make_space(["a", "b"], [frozenset(), frozenset({0, 1})])
    assert zero_divisor_graph(closure_lattice(indiscrete)).n == 0

    G3 = zero_divisor_graph(closure_lattice(discrete(3)))
    b = invariant_bundle(G3)
    assert (G3.n, b.diameter, b.girth) == (6, 3, 3)

    assert is_nilpotent_free(t)


def test_alpha_map_properties():
    for X in (three_point_pearled(), sierpinski(), discrete(3)):
        a = alpha_map(X)
        assert check_armendariz(a).is_armendariz
        assert check_homomorphism(a).ok


def test_alpha_map_on_t1_space_is_identity():
    a = alpha_map(discrete(3))
    assert a.assignment == tuple(range(a.source.size))


def test_alpha_map_sierpinski_shape():
    a = alpha_map(sierpinski())
    assert a.source.size == 3 and a.target.size == 2


def test_lattice_validation():
    with pytest.raises(InvalidLattice):
        make_lattice(["a", "b"], [frozenset(), frozenset({0})])  # missing ground


def test_irreducible_and_connected():
    L = powerset_lattice(3)
    assert not lattice_is_irreducible(L)
    assert not lattice_is_connected(L)

    # {0, A, B, Y} with A | B = Y a disconnection
    L2 = make_lattice(
        ["a", "b"],
        [frozenset(), frozenset({0}), frozenset({1}), frozenset({0, 1})],
    )
    assert not lattice_is_connected(L2)

    chain = make_lattice(["a", "b"], [frozenset(), frozenset({0}), frozenset({0, 1})])
    assert lattice_is_irreducible(chain) and lattice_is_connected(chain)

    C = CofiniteT1Lattice()
    assert lattice_is_irreducible(C) and lattice_is_connected(C)


def test_char_check_powerset():
    for n in (1, 2, 3, 4):
        rep = char_check_irr_conn(powerset_lattice(n))
        assert rep.passed
    rep4 = char_check_irr_conn(powerset_lattice(4))
    assert not rep4.irreducible and not rep4.every_pair_has_2path
    assert not rep4.connected and not rep4.every_edge_in_3cycle


def test_char_check_requires_t1():
    L = make_lattice(["a", "b"], [frozenset(), frozenset({0, 1})])
    with pytest.raises(InvalidLattice):
        char_check_irr_conn(L)


def test_t1_invariants_table():
    assert t1_invariants(powerset_lattice(1)).as_tuple() == (0, INF, 0, 0)
    assert t1_invariants(powerset_lattice(2)).as_tuple() == (1, INF, 2, 2)
    assert t1_invariants(powerset_lattice(3)).as_tuple() == (3, 3, 3, 3)
    assert t1_invariants(powerset_lattice(4)).as_tuple() == (3, 3, 4, 4)


def test_t1_invariants_rejects_non_t1():
    L = make_lattice(["a", "b"], [frozenset(), frozenset({0, 1})])
    with pytest.raises(InvalidLattice):
        t1_invariants(L)


def test_symbolic_lattice():
    C = CofiniteT1Lattice()
    b = t1_invariants(C)
    assert b.as_tuple() == (2, 3, COUNTABLY_INFINITE, COUNTABLY_INFINITE)
    assert C.meet(WHOLE, frozenset({1})) == frozenset({1})
    assert C.join(frozenset({1}), WHOLE) is WHOLE
    a, bb, mid = C.distance2_witness()
    assert a & bb and not (a & mid) and not (bb & mid)
    cl = C.clique_witness(100)
    assert len(cl) == 100


def test_symbolic_window_agreement():
    C = CofiniteT1Lattice()
    rng = random.Random(5)
    for _ in range(100):
        u, v = C.random_member(rng), C.random_member(rng)
        w = max(u | v) + 1
        assert bool(u & v) == bool(C.restrict(u, w) & C.restrict(v, w))
    assert C.restrict(WHOLE, 4) == frozenset(range(4))
    window = C.window(3)
    assert is_t1_lattice(window) and len(window.members) == 8


def test_lattice_semigroup_zero():
    sg = lattice_semigroup(powerset_lattice(2))
    assert sg.elements[sg.zero] == "{}"
