"""Finitely atomic measures, their moments and moment / Vandermonde matrices."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import NamedTuple, Sequence

from .errors import ParseError, RecRelError
from .linalg import RatMatrix
from .poly import GRLEX, Monomial


class MeasureError(RecRelError):
    pass


class LengthMismatch(MeasureError):
    pass


class NonpositiveDensity(MeasureError):
    pass


class DuplicateAtom(MeasureError):
    pass


class NotProbability(MeasureError):
    pass


class MultiIndex(NamedTuple):
    k1: int
    k2: int

    def __add__(self, other):
        return MultiIndex(self.k1 + other[0], self.k2 + other[1])


E1 = MultiIndex(1, 0)
E2 = MultiIndex(0, 1)


@dataclass(frozen=True)
class AtomicMeasure:
    """``sum(density_i * delta(atom_i))``.

    Densities must be positive and, unless ``probability=False``, sum to 1.
    Pass ``normalize=True`` to divide by the total instead of rejecting.
    """

    atoms: tuple[tuple[Fraction, Fraction], ...]
    densities: tuple[Fraction, ...]
    probability: bool = True

    def __init__(self, atoms, densities, probability: bool = True, normalize: bool = False):
        atoms = tuple((Fraction(x), Fraction(y)) for x, y in atoms)
        densities = tuple(Fraction(d) for d in densities)
        if len(atoms) != len(densities):
            raise LengthMismatch(f"{len(atoms)} atoms but {len(densities)} densities")
        if not atoms:
            raise MeasureError("a measure needs at least one atom")
        for d in densities:
            if d <= 0:
                raise NonpositiveDensity(f"density {d} is not strictly positive")
        if len(set(atoms)) != len(atoms):
            seen = set()
            dup = next(a for a in atoms if a in seen or seen.add(a))
            raise DuplicateAtom(f"atom ({dup[0]}, {dup[1]}) appears more than once")
        total = sum(densities)
        if normalize:
            densities = tuple(d / total for d in densities)
        elif probability and total != 1:
            raise NotProbability(f"densities sum to {total}, not 1")
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "densities", densities)
        object.__setattr__(self, "probability", probability or normalize)

    @classmethod
    def dirac(cls, x, y) -> AtomicMeasure:
        return cls([(x, y)], [1])

    def __len__(self) -> int:
        return len(self.atoms)

    def atom_set(self) -> frozenset:
        return frozenset(self.atoms)

    def with_densities(self, densities, normalize: bool = False) -> AtomicMeasure:
        return AtomicMeasure(self.atoms, densities, probability=self.probability, normalize=normalize)

    def components(self) -> list[tuple[Fraction, AtomicMeasure]]:
        """``(density, delta(atom))`` pairs of the sum decomposition."""
        return [(d, AtomicMeasure.dirac(*a)) for a, d in zip(self.atoms, self.densities)]


def moment(mu: AtomicMeasure, k) -> Fraction:
    k1, k2 = k
    return sum((lam * x**k1 * y**k2 for (x, y), lam in zip(mu.atoms, mu.densities)), Fraction(0))


def monomial_basis(k: int) -> list[Monomial]:
    """Monomials of degree <= k: 1; x, y; x^2, xy, y^2; ..."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    return [Monomial(d - j, j) for d in range(k + 1) for j in range(d + 1)]


def basis_size(k: int) -> int:
    return (k + 1) * (k + 2) // 2


def grlex_ranks(basis: Sequence[Monomial]) -> list[tuple]:
    return [GRLEX.key(m) for m in basis]


def moment_matrix(mu: AtomicMeasure, k: int) -> RatMatrix:
    basis = monomial_basis(k)
    cache: dict[tuple[int, int], Fraction] = {}

    def gamma(i, j):
        if (i, j) not in cache:
            cache[i, j] = moment(mu, (i, j))
        return cache[i, j]

    return RatMatrix([[gamma(a.ex + b.ex, a.ey + b.ey) for b in basis] for a in basis])


def vandermonde(mu: AtomicMeasure, k: int) -> RatMatrix:
    basis = monomial_basis(k)
    return RatMatrix([[x**m.ex * y**m.ey for m in basis] for x, y in mu.atoms])


_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?")


def parse_rational(token: str, line=None, column=None) -> Fraction:
    if not _RATIONAL.fullmatch(token):
        raise ParseError(f"expected an integer or p/q, got {token!r}", line=line, column=column)
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {token!r}", line=line, column=column) from None


def parse_measure(text: str, normalize: bool = False) -> AtomicMeasure:
    """Parse lines of ``<lambda> <x> <y>``; ``#`` starts a comment line."""
    atoms, densities = [], []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]
        if len(fields) != 3:
            col = fields[3][1] if len(fields) > 3 else len(line) + 1
            raise ParseError(f"expected 3 fields '<lambda> <x> <y>', found {len(fields)}", line=lineno, column=col)
        lam, x, y = (parse_rational(tok, lineno, col) for tok, col in fields)
        densities.append(lam)
        atoms.append((x, y))
    if not atoms:
        raise ParseError("measure file contains no atoms")
    return AtomicMeasure(atoms, densities, normalize=normalize)


def load_measure(path, normalize: bool = False) -> AtomicMeasure:
    return parse_measure(Path(path).read_text(encoding="utf-8"), normalize=normalize)


def format_measure(mu: AtomicMeasure) -> str:
    return "\n".join(f"{lam} {x} {y}" for (x, y), lam in zip(mu.atoms, mu.densities)) + "\n"
