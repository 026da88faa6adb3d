"""Recursive relations of moment matrices of finitely atomic measures.

A recursive relation of ``M(mu)(k)`` is a polynomial of degree <= k whose
coefficient vector (in :func:`~recrel.measure.monomial_basis` order) lies in
the kernel of the moment matrix. For an atomic measure that kernel equals
the kernel of the Vandermonde-like matrix, so relations are computed from
the atoms alone and never depend on the densities.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RecRelError
from .linalg import RatMatrix, block_compose, kernel_basis, matmul, rref
from .measure import (
    AtomicMeasure,
    basis_size,
    grlex_ranks,
    moment_matrix,
    monomial_basis,
    vandermonde,
)
from .poly import (
    GRLEX,
    LEX,
    GroebnerBasis,
    Monomial,
    MonomialOrder,
    NotZeroDimensional,
    Polynomial,
    buchberger,
    reduce_basis,
    standard_monomials,
)


class DegreeTooHigh(RecRelError):
    pass


class RelationCheckDisagreement(RecRelError):
    """Matrix-product and atom-evaluation checks gave different answers."""


class MissingLeadingMonomial(RecRelError):
    def __init__(self, monomial: Monomial):
        self.monomial = monomial
        super().__init__(
            f"no relation of degree {monomial.degree} has leading monomial {monomial.to_str()}; "
            "the moment matrix is not flat at this degree"
        )


@dataclass(frozen=True)
class RelationSet:
    degree_bound: int
    relations: tuple[Polynomial, ...]
    source_measure: AtomicMeasure

    def __iter__(self):
        return iter(self.relations)

    def __len__(self) -> int:
        return len(self.relations)

    def as_set(self) -> frozenset:
        return frozenset(p.primitive(GRLEX) for p in self.relations)


@dataclass(frozen=True)
class ExtensionMatrix:
    C: RatMatrix
    k: int
    row_monomials: tuple[Monomial, ...]
    column_monomials: tuple[Monomial, ...]


def recursive_relations(mu: AtomicMeasure, k: int) -> RelationSet:
    basis = monomial_basis(k)
    vectors = kernel_basis(vandermonde(mu, k), grlex_ranks(basis))
    rels = tuple(Polynomial.from_vector(v, basis) for v in vectors)
    return RelationSet(k, rels, mu)


def _check(M: RatMatrix, basis, mu: AtomicMeasure, p: Polynomial) -> bool:
    by_matrix = not any(M.apply(p.to_vector(basis)))
    by_atoms = all(p.evaluate(x, y) == 0 for x, y in mu.atoms)
    if by_matrix != by_atoms:
        raise RelationCheckDisagreement(
            f"{p.to_str(GRLEX)}: moment matrix says {by_matrix}, atom evaluation says {by_atoms}"
        )
    return by_matrix


def verify_relation(mu: AtomicMeasure, k: int, p: Polynomial) -> bool:
    """Whether ``M(mu)(k) @ p_hat == 0``, cross-checked by evaluating at the atoms."""
    if p.degree > k:
        raise DegreeTooHigh(f"polynomial has degree {p.degree} > {k}")
    return _check(moment_matrix(mu, k), monomial_basis(k), mu, p)


def check_recursively_generated(mu: AtomicMeasure, k: int) -> bool:
    basis = monomial_basis(k)
    M = moment_matrix(mu, k)
    for p in recursive_relations(mu, k):
        for q in monomial_basis(k - p.degree):
            if not _check(M, basis, mu, p.mul_term(1, q)):
                return False
    return True


def minimal_relation_degree(n_atoms: int) -> int:
    """Smallest k with ``n_atoms <= (k+1)(k+2)/2``."""
    k = 0
    while basis_size(k) < n_atoms:
        k += 1
    return k


def groebner_of_relations(mu: AtomicMeasure, order: MonomialOrder = LEX) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal of all recursive relations of ``M(mu)``.

    Starts from the relations of degree ``k+1`` with ``k`` minimal such that
    the atoms fit in ``M(mu)(k)``. If the atoms lie on a low-degree curve
    these may generate a strictly smaller ideal, so the degree is raised
    until the quotient has exactly one standard monomial per atom.
    """
    n = len(mu)
    degree = minimal_relation_degree(n) + 1
    while True:
        rels = recursive_relations(mu, degree).relations
        G = reduce_basis(buchberger(rels, order))
        try:
            if len(standard_monomials(G)) == n:
                return G
        except NotZeroDimensional:
            pass
        if degree > n:
            # relations of degree <= n always generate the vanishing ideal of n points
            raise AssertionError(f"relations up to degree {degree} do not cut out {n} points")
        degree += 1


def _divisor_candidates(m: Monomial) -> list[tuple[Monomial, Monomial]]:
    """``(divisor, multiplier)`` pairs, lowering the larger exponent first."""
    via_x = (Monomial(m.ex - 1, m.ey), Monomial(1, 0)) if m.ex else None
    via_y = (Monomial(m.ex, m.ey - 1), Monomial(0, 1)) if m.ey else None
    first, second = (via_x, via_y) if m.ex >= m.ey else (via_y, via_x)
    return [c for c in (first, second) if c is not None]


def extension_matrix(rel: RelationSet) -> ExtensionMatrix:
    """Matrix expressing each top-degree column of ``M(mu)(k+1)`` through lower columns.

    ``rel`` holds the relations of degree ``k+1``. Each row is taken from a
    product ``multiplier * p`` of a degree-k relation ``p`` whose only
    degree-k monomial divides the target, falling back to solving the
    column relation directly.
    """
    top_degree = rel.degree_bound
    if top_degree < 1:
        raise ValueError("extension needs relations of degree at least 1")
    mu = rel.source_measure
    k = top_degree - 1
    lower = monomial_basis(k)
    full = monomial_basis(top_degree)
    top = full[len(lower):]

    R, pivots, _ = rref(vandermonde(mu, top_degree))
    for pc in pivots:
        if full[pc].degree == top_degree:
            raise MissingLeadingMonomial(full[pc])

    single_top: dict[Monomial, Polynomial] = {}
    for p in recursive_relations(mu, k):
        heads = [m for m in p.monomials() if m.degree == k]
        if len(heads) == 1 and heads[0] not in single_top:
            single_top[heads[0]] = p.scale(1 / p.coefficient(heads[0]))

    rows = []
    for m in top:
        row = None
        for f, mult in _divisor_candidates(m):
            if f in single_top:
                r = single_top[f].mul_term(1, mult)
                row = [-r.coefficient(b) for b in lower]
                break
        if row is None:
            j = full.index(m)
            row = [0] * len(lower)
            for i, pc in enumerate(pivots):
                row[pc] = R[i, j]
        rows.append(row)
    return ExtensionMatrix(RatMatrix(rows), k, tuple(top), tuple(lower))


def extend_moment_matrix(M_k: RatMatrix, ext: ExtensionMatrix) -> RatMatrix:
    """``[[M, M C^T], [C M, C M C^T]]``."""
    C = ext.C
    MCt = matmul(M_k, C.T)
    CM = matmul(C, M_k)
    return block_compose([[M_k, MCt], [CM, matmul(CM, C.T)]])
