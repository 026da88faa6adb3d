"""Recover the finite variety of a lex Gröbner basis and rebuild measures on it."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import RecRelError
from .measure import AtomicMeasure, LengthMismatch, NonpositiveDensity
from .poly import LEX, GroebnerBasis, Monomial, Polynomial, buchberger, reduce_basis


class NoUnivariateMember(RecRelError):
    pass


class IrrationalRoots(RecRelError):
    def __init__(self, factor: Polynomial, variable: str = "y"):
        self.factor = factor
        self.variable = variable
        super().__init__(f"factor {factor.to_str(LEX)} has no rational roots")


@dataclass(frozen=True)
class VarietyPoints:
    points: tuple[tuple[Fraction, Fraction], ...]

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def as_set(self) -> frozenset:
        return frozenset(self.points)


# Dense univariate helpers: coefficient lists, lowest degree first.


def _trim(a: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b):
        c = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = c
        for i, bc in enumerate(b):
            a[i + shift] -= c * bc
        a = _trim(a)
    return _trim(q), a


def _monic(a: list[Fraction]) -> list[Fraction]:
    return [c / a[-1] for c in a]


def _gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _divmod(a, b)[1]
    return _monic(a) if a else a


def _derivative(a: list[Fraction]) -> list[Fraction]:
    return _trim([i * c for i, c in enumerate(a)][1:])


def _square_free(a: list[Fraction]) -> list[Fraction]:
    a = _trim(a)
    if len(a) <= 2:
        return _monic(a) if a else a
    return _monic(_divmod(a, _gcd(a, _derivative(a)))[0])


def _eval(a: Sequence[Fraction], t: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * t + c
    return acc


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _rational_roots(a: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Distinct rational roots (ascending) and the monic cofactor without them."""
    a = _square_free(a)
    roots = []
    if not a:
        raise ValueError("zero polynomial has every number as a root")
    while len(a) > 1 and a[0] == 0:
        roots.append(Fraction(0))
        a = a[1:]
    while len(a) > 1:
        denom = math.lcm(*(c.denominator for c in a))
        ints = [int(c * denom) for c in a]
        found = None
        for q in _divisors(ints[-1]):
            for p in _divisors(ints[0]):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if _eval(a, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        a = _divmod(a, [-found, Fraction(1)])[0]
    return sorted(roots), a


def _as_poly_in(coeffs: Sequence[Fraction], var: str) -> Polynomial:
    return Polynomial(
        (Monomial(e, 0) if var == "x" else Monomial(0, e), c) for e, c in enumerate(coeffs)
    )


def _roots_or_raise(coeffs: list[Fraction], var: str) -> list[Fraction]:
    roots, rest = _rational_roots(coeffs)
    if len(rest) > 1:
        raise IrrationalRoots(_as_poly_in(rest, var).primitive(LEX), var)
    return roots


def solve_variety(G: GroebnerBasis) -> VarietyPoints:
    """All common rational zeros of a zero-dimensional basis.

    A basis under another order is first converted to a reduced lex basis.
    Points are listed by y, then x, ascending.
    """
    if G.order is not LEX or not G.reduced:
        G = reduce_basis(buchberger(G.polys, LEX))
    univariate = [g for g in G.polys if g.degree_in("x") <= 0 and g]
    if not univariate:
        raise NoUnivariateMember("basis has no member in y alone; the ideal is not zero-dimensional")
    with_x = [g for g in G.polys if g.degree_in("x") > 0]

    elim = univariate[0]
    coeffs = [elim.coefficient(Monomial(0, e)) for e in range(elim.degree_in("y") + 1)]
    if len(_trim(coeffs)) == 1:
        return VarietyPoints(())
    y_roots = _roots_or_raise(coeffs, "y")

    points = []
    for b in y_roots:
        if any(g.evaluate(0, b) for g in univariate[1:]):
            continue
        common: list[Fraction] = []
        for g in with_x:
            sub = g.substitute_y(b)
            dense = [sub.get(e, Fraction(0)) for e in range(max(sub, default=-1) + 1)]
            common = _gcd(common, dense)
        if not common:
            raise NoUnivariateMember(f"after setting y = {b} no member constrains x; infinitely many points")
        if len(common) == 1:
            continue
        for a in _roots_or_raise(common, "x"):
            points.append((a, b))
    for g in G.polys:
        for x, y in points:
            assert g.evaluate(x, y) == 0
    return VarietyPoints(tuple(points))


def measure_from_points(
    points: VarietyPoints | Sequence, densities: Sequence, normalize: bool = False
) -> AtomicMeasure:
    pts = list(points)
    if len(pts) != len(densities):
        raise LengthMismatch(f"{len(pts)} points but {len(densities)} densities")
    for d in densities:
        if Fraction(d) <= 0:
            raise NonpositiveDensity(f"density {d} is not strictly positive")
    return AtomicMeasure(pts, densities, normalize=normalize)


def positivity_screen(points: VarietyPoints | Sequence) -> bool:
    """Every point lies in the closed positive quadrant."""
    return all(x >= 0 and y >= 0 for x, y in points)
