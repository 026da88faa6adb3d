"""Recursive relations of moment matrices of finitely atomic planar measures.

Exact rational arithmetic throughout: relations come from the kernel of the
Vandermonde-like matrix of the atoms, are assembled into a Gröbner basis,
and the basis can be solved back to the atom set.
"""

from .linalg import RatMatrix, block_compose, kernel_basis, matmul, psd_check, rref, transpose
from .measure import AtomicMeasure, MultiIndex, moment, moment_matrix, monomial_basis, vandermonde
from .poly import (
    GRLEX,
    LEX,
    GroebnerBasis,
    Monomial,
    MonomialOrder,
    Polynomial,
    buchberger,
    compare,
    divide,
    ideal_membership,
    parse_polynomial,
    reduce_basis,
    s_polynomial,
)
from .relations import (
    ExtensionMatrix,
    RelationSet,
    check_recursively_generated,
    extend_moment_matrix,
    extension_matrix,
    groebner_of_relations,
    recursive_relations,
    verify_relation,
)
from .shift import WeightFamily, commutativity_check, moments_from_weights, weights_from_measure
from .variety import VarietyPoints, measure_from_points, positivity_screen, solve_variety

__version__ = "0.1.0"
