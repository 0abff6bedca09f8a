"""Exact zero-divisor graphs of commutative semigroups with zero.

Finite semigroups, rings, ideal semigroups, truncated polynomial content,
finite topologies, subset lattices and spectral posets, with exact graph
invariants and mechanical verification of the structure theorems tying
them together through invariant-preserving (Armendariz) maps.
"""

__version__ = "0.1.0"

from .graphs import (
    COUNTABLY_INFINITE,
    InvariantBundle,
    SimpleGraph,
    armendariz_invariant_suite,
    beck_graph,
    chromatic_number,
    clique_number,
    diameter,
    girth,
    invariant_bundle,
    is_connected,
    to_dot,
    zero_divisor_graph,
)
from .semigroups import (
    ArmendarizReport,
    EqQuotient,
    SemigroupMap,
    SemigroupTable,
    annihilator,
    check_armendariz,
    check_homomorphism,
    eq_quotient,
    induced_final_map,
    is_nilpotent_free,
    validate_semigroup,
    zero_divisors,
)

__all__ = [
    "__version__",
    "SemigroupTable",
    "SemigroupMap",
    "ArmendarizReport",
    "EqQuotient",
    "SimpleGraph",
    "InvariantBundle",
    "COUNTABLY_INFINITE",
    "validate_semigroup",
    "is_nilpotent_free",
    "annihilator",
    "zero_divisors",
    "eq_quotient",
    "check_armendariz",
    "check_homomorphism",
    "induced_final_map",
    "armendariz_invariant_suite",
    "zero_divisor_graph",
    "beck_graph",
    "diameter",
    "girth",
    "clique_number",
    "chromatic_number",
    "is_connected",
    "invariant_bundle",
    "to_dot",
]
