"""Finite semigroup structure theory.

Rees matrix semigroups, simplicity and complete simplicity, maximal
subgroups eSe, the Rees-Suschkewitsch decomposition with its explicit
isomorphism, and normal-form arithmetic in the bicyclic monoid.
"""
from .bicyclic import (BicyclicElement, IdempotentChain, b_idempotent_leq,
                       b_is_idempotent, bmul, no_primitive_witness)
from .core import (DEFAULT_MAX_ORDER, Element, FiniteSemigroup, Transformation,
                   closure_from_generators, idempotent_power, idempotents,
                   power, product, validate_table, verify_isomorphism)
from .errors import *  # noqa: F401,F403
from .rees import (DecompositionReport, NormalizedSandwich, ReesDecomposition,
                   ReesMatrixSemigroup, ReesTriple, decompose, normalize_sandwich,
                   rees_inverse_map, rees_map, rees_product, to_cayley,
                   verify_decomposition)
from .structure import (CertifiedGroup, MaximalSubgroup, certify_group,
                        idempotent_leq, is_completely_simple, is_simple,
                        maximal_subgroup, primitive_idempotents, principal_ideal)
from .zoo import make_standard, random_rees

__version__ = "0.1.0"
