import math

import pytest

from zdgraph.graphs import invariant_bundle
from zdgraph.rings import (
    FiniteRing,
    RingConstructionError,
    ag_conjecture_check,
    annihilating_ideal_graph,
    beck_gamma0,
    comaximal_ideal_graph,
    enumerate_ideals,
    gamma_graph,
    ideal_label,
    ideal_product,
    ideal_semigroup,
    ideal_sum,
    is_ideal_prime,
    is_reduced,
    jacobson_radical,
    make_gf,
    make_multivariate_quot,
    make_polyquot,
    make_product,
    make_zn,
    maximal_ideals,
    minimal_primes,
    multiplicative_semigroup,
    principal_ideal,
    ring_from_spec,
    spec_poset,
)
from zdgraph.semigroups import is_nilpotent_free, validate_semigroup

INF = math.inf


def test_make_zn():
    R = make_zn(6)
    assert R.size == 6 and R.labels[3] == "3"
    assert make_zn(1).size == 1  # zero ring


def test_make_product_reduced_three_primes():
    R = make_product([make_zn(2)] * 3)
    assert R.size == 8
    assert is_reduced(R)
    assert len(minimal_primes(R)) == 3


def test_make_multivariate_quot_order8_local():
    R = make_multivariate_quot(2, ["x", "y"], [(2, 0), (1, 1), (0, 2)])
    assert R.size == 8
    assert not is_reduced(R)
    assert len(maximal_ideals(R)) == 1


def test_multivariate_rejects_infinite_quotient():
    with pytest.raises(RingConstructionError):
        make_multivariate_quot(2, ["x", "y"], [(1, 1)])  # no pure powers


def test_polyquot_gf4():
    F4 = make_polyquot(2, [1, 1, 1])
    assert F4.size == 4
    assert is_reduced(F4)
    assert enumerate_ideals(F4) == [frozenset({F4.zero}), frozenset(range(4))]


def test_make_gf_prime_powers():
    for q in (2, 3, 4, 5, 7, 8, 9):
        F = make_gf(q)
        assert F.size == q
        assert len(enumerate_ideals(F)) == 2
    with pytest.raises(RingConstructionError):
        make_gf(6)


def test_bad_table_rejected():
    add = [[0, 1], [1, 0]]
    mul = [[0, 0], [0, 0]]  # no multiplicative identity
    with pytest.raises(RingConstructionError):
        FiniteRing(("0", "1"), add, mul, 0, 1)


def test_is_reduced():
    assert is_reduced(make_zn(6))
    assert not is_reduced(make_zn(4))
    assert is_reduced(make_product([make_zn(2), make_zn(2)]))


def test_multiplicative_semigroup_valid():
    for R in (make_zn(6), make_zn(4)):
        S = multiplicative_semigroup(R)
        assert validate_semigroup(S).ok
    assert is_nilpotent_free(multiplicative_semigroup(make_zn(6)))
    assert not is_nilpotent_free(multiplicative_semigroup(make_zn(4)))


def test_gamma_of_mvq_is_triangle():
    R = ring_from_spec("mvq:p=2;vars=x,y;rel=x2,xy,y2")
    G = gamma_graph(R)
    assert G.n == 3 and len(G.edges) == 3


def test_enumerate_ideals_counts():
    assert len(enumerate_ideals(make_zn(30))) == 8
    assert len(enumerate_ideals(make_product([make_zn(2), make_zn(2)]))) == 4


def test_ideal_arithmetic():
    R = make_zn(12)
    two = principal_ideal(R, 2)
    three = principal_ideal(R, 3)
    assert ideal_sum(R, two, three) == frozenset(range(12))  # gcd 1
    assert ideal_product(R, two, three) == principal_ideal(R, 6)


def test_ideal_labels():
    R = make_zn(30)
    assert ideal_label(R, principal_ideal(R, 10)) == "(10)"
    Rm = ring_from_spec("mvq:p=2;vars=x,y;rel=x2,xy,y2")
    m = maximal_ideals(Rm)[0]
    assert ideal_label(Rm, m).startswith("(") and "," in ideal_label(Rm, m)


def test_ideal_semigroup_absorbers():
    R = make_zn(6)
    mult = ideal_semigroup(R, "mult")
    add = ideal_semigroup(R, "add")
    assert mult.table.elements[mult.table.zero] == "(0)"
    assert add.table.elements[add.table.zero] == "(1)"
    assert validate_semigroup(mult.table).ok and validate_semigroup(add.table).ok


def test_ag_graph_of_two_field_product_is_single_edge():
    G = annihilating_ideal_graph(make_product([make_zn(2), make_zn(2)]))
    assert G.n == 2 and len(G.edges) == 1


def test_ag_graph_built_despite_nilpotent_ideals():
    # (2)*(2) = (0) in Z4: the ideal semigroup has a nilpotent, the graph
    # is still a single vertex with no self-edge
    G = annihilating_ideal_graph(make_zn(4))
    assert G.vertices == ("(2)",) and not G.edges


def test_comaximal_examples():
    assert comaximal_ideal_graph(make_zn(4)).n == 0  # local ring
    G6 = comaximal_ideal_graph(make_zn(6))
    assert set(G6.vertices) == {"(2)", "(3)"} and len(G6.edges) == 1
    assert invariant_bundle(G6).diameter == 1


def test_maximal_minimal_jacobson():
    R = make_zn(30)
    assert {ideal_label(R, M) for M in maximal_ideals(R)} == {"(2)", "(3)", "(5)"}
    jac = jacobson_radical(R)
    assert jac == frozenset({0})
    assert not is_ideal_prime(R, jac)

    R4 = make_zn(4)
    (m,) = maximal_ideals(R4)
    assert jacobson_radical(R4) == m
    assert is_ideal_prime(R4, m)

    assert len(minimal_primes(make_product([make_zn(2)] * 3))) == 3


def test_ag_conjecture_examples():
    rep = ag_conjecture_check(make_product([make_zn(2)] * 3))
    assert rep.applies and rep.passed and len(rep.witness) == 3

    rep2 = ag_conjecture_check(make_product([make_zn(2), make_zn(2)]))
    assert not rep2.applies and rep2.passed is None and rep2.girth == INF

    rep3 = ag_conjecture_check(make_product([make_zn(2), make_zn(3), make_zn(5)]))
    assert rep3.applies and rep3.passed


def test_spec_poset_shapes():
    P = spec_poset(make_zn(30))
    assert P.n == 3
    assert all(not P.leq[i][j] for i in range(3) for j in range(3) if i != j)
    assert spec_poset(make_zn(4)).n == 1
    assert spec_poset(ring_from_spec("mvq:p=2;vars=x,y;rel=x2,xy,y2")).n == 1


def test_beck_gamma0_from_ring():
    G = beck_gamma0(make_zn(5))
    assert G.n == 5 and len(G.edges) == 4


def test_ring_from_spec_round_trips():
    for spec in ("Zn:6", "gf:4", "prod:Zn:2,Zn:3", "polyquot:p=2;mod=1,1,1",
                 "mvq:p=2;vars=x,y;rel=x2,xy,y2"):
        R = ring_from_spec(spec)
        assert R.size >= 1
    with pytest.raises(RingConstructionError):
        ring_from_spec("nonsense:1")
    with pytest.raises(RingConstructionError):
        ring_from_spec("polyquot:p=4;mod=1,1,1")  # p not prime
