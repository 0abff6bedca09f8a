import json
import math

import pytest

from zdgraph.graphs import (
    SimpleGraph,
    SizeGuardExceeded,
    armendariz_invariant_suite,
    beck_graph,
    chromatic_number,
    clique_number,
    diameter,
    girth,
    graph_from_json,
    graph_to_json,
    invariant_bundle,
    is_connected,
    max_clique,
    shortest_cycle,
    to_dot,
    zero_divisor_graph,
)
from zdgraph.semigroups import SemigroupTable, eq_quotient

INF = math.inf


def graph(n, edges):
    return SimpleGraph.from_edges([str(i) for i in range(n)], edges)


def zn_mul(n):
    return SemigroupTable(
        tuple(str(i) for i in range(n)),
        0,
        tuple(tuple((a * b) % n for b in range(n)) for a in range(n)),
    )


TRIANGLE = graph(3, [(0, 1), (1, 2), (0, 2)])
PATH3 = graph(3, [(0, 1), (1, 2)])
SQUARE = graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
EMPTY = graph(0, [])


def test_no_self_loops_or_bad_edges():
    with pytest.raises(ValueError):
        SimpleGraph(("a",), frozenset({(0, 0)}))
    with pytest.raises(ValueError):
        SimpleGraph(("a",), frozenset({(0, 1)}))


def test_diameter():
    assert diameter(TRIANGLE) == 1
    assert diameter(PATH3) == 2
    assert diameter(EMPTY) == 0
    assert diameter(graph(1, [])) == 0
    assert diameter(graph(4, [(0, 1), (2, 3)])) == INF


def test_girth():
    assert girth(TRIANGLE) == 3
    assert girth(PATH3) == INF
    assert girth(SQUARE) == 4
    length, cycle = shortest_cycle(SQUARE)
    assert length == 4 and len(cycle) == 4


def test_connected():
    assert is_connected(PATH3)
    assert not is_connected(graph(4, [(0, 1), (2, 3)]))
    assert is_connected(graph(1, []))
    assert is_connected(EMPTY)


def test_clique_number():
    assert clique_number(TRIANGLE) == 3
    assert clique_number(EMPTY) == 0
    assert clique_number(graph(4, [])) == 1
    assert clique_number(SQUARE) == 2
    witness = max_clique(TRIANGLE)
    assert set(witness) == {0, 1, 2}


def test_chromatic_number():
    assert chromatic_number(TRIANGLE) == 3
    assert chromatic_number(EMPTY) == 0
    assert chromatic_number(graph(3, [])) == 1
    assert chromatic_number(SQUARE) == 2
    assert chromatic_number(graph(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])) == 5


def test_size_guards():
    big = graph(10, [])
    with pytest.raises(SizeGuardExceeded):
        clique_number(big, max_vertices=5)
    with pytest.raises(SizeGuardExceeded):
        chromatic_number(big, max_vertices=5)


def test_zero_divisor_graph_z6():
    G = zero_divisor_graph(zn_mul(6))
    assert G.vertices == ("2", "3", "4")
    assert G.edges == {(0, 1), (1, 2)}
    b = invariant_bundle(G)
    assert b.as_tuple() == (2, INF, 2, 2)


def test_zero_divisor_graph_of_field_is_empty():
    assert zero_divisor_graph(zn_mul(7)).n == 0


def test_beck_graph_star_for_domain():
    G = beck_graph(zn_mul(5))
    # 0 is adjacent to everything, nothing else touches
    assert G.n == 5
    assert G.edges == {(0, i) for i in range(1, 5)}
    assert clique_number(G) == 2 and chromatic_number(G) == 2


def test_beck_graph_z2():
    G = beck_graph(zn_mul(2))
    assert G.n == 2 and len(G.edges) == 1


def test_beck_relations_z6():
    S = zn_mul(6)
    g0 = beck_graph(S)
    g = zero_divisor_graph(S)
    assert clique_number(g0) == clique_number(g) + 1 == 3
    assert chromatic_number(g0) == chromatic_number(g) + 1 == 3


def test_invariant_bundle_rejects_chromatic_below_clique():
    from zdgraph.graphs import InvariantBundle

    with pytest.raises(AssertionError):
        InvariantBundle(1, 3, 3, 2)


def test_dot_export_canonical():
    G = zero_divisor_graph(zn_mul(6))
    text = to_dot(G)
    assert text == to_dot(zero_divisor_graph(zn_mul(6)))  # bit-stable
    assert '"2" -- "3";' in text and '"3" -- "4";' in text
    assert text.startswith("graph zd {")


def test_dot_export_empty_graph():
    assert to_dot(EMPTY) == "graph zd {\n}\n"


def test_json_round_trip():
    G = zero_divisor_graph(zn_mul(6))
    data = json.loads(graph_to_json(G))
    assert data["vertices"] == ["2", "3", "4"]
    assert data["edges"] == [[0, 1], [1, 2]]
    assert graph_from_json(graph_to_json(G)) == G


def test_suite_on_identity_passes_trivially():
    from zdgraph.semigroups import identity_map

    rep = armendariz_invariant_suite(identity_map(zn_mul(6)))
    assert rep.passed and rep.induced_map_bijective


def test_suite_z6_quotient_details():
    rep = armendariz_invariant_suite(eq_quotient(zn_mul(6)).projection)
    assert rep.passed
    assert not rep.induced_map_bijective
    assert rep.target_invariants.diameter == 1
    assert rep.source_invariants.diameter == 2
    by_name = {p.name: p for p in rep.parts}
    assert by_name["diameter-one-case"].applies
    assert not by_name["diameter-transfer"].applies


def test_suite_rejects_nilpotent_input():
    from zdgraph.semigroups import NotNilpotentFree, identity_map

    with pytest.raises(NotNilpotentFree):
        armendariz_invariant_suite(identity_map(zn_mul(4)))


def test_girth4_pattern_flags():
    # two size-two fibres over the single edge of the target: products
    # collapse within each block and vanish across blocks
    prod = [[0] * 5 for _ in range(5)]
    for i in (1, 2):
        for j in (1, 2):
            prod[i][j] = 1
    for i in (3, 4):
        for j in (3, 4):
            prod[i][j] = 3
    t = SemigroupTable(("0", "a1", "a2", "b1", "b2"), 0, tuple(tuple(r) for r in prod))
    from zdgraph.semigroups import SemigroupMap, validate_semigroup

    assert validate_semigroup(t).ok
    target = SemigroupTable(("0", "a", "b"), 0, ((0, 0, 0), (0, 1, 0), (0, 0, 2)))
    g = SemigroupMap(t, target, (0, 1, 1, 2, 2))
    rep = armendariz_invariant_suite(g)
    assert rep.passed
    assert rep.girth4_pattern_edge
    assert rep.source_invariants.girth == 4
