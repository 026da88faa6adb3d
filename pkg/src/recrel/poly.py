"""Sparse bivariate polynomials over the rationals and Buchberger's algorithm.

Polynomials are immutable maps from :class:`Monomial` to :class:`Fraction`.
Every routine that depends on a term order takes a :class:`MonomialOrder`
explicitly; nothing is cached on the polynomial itself.
"""

from __future__ import annotations

import enum
import math
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import ParseError, RecRelError


class ZeroPolynomial(RecRelError):
    """An operation that needs a leading term received the zero polynomial."""


class EmptyDivisorList(RecRelError):
    pass


class ZeroDivisor(RecRelError):
    pass


class EmptyInput(RecRelError):
    pass


class NotZeroDimensional(RecRelError):
    """The ideal has infinitely many standard monomials."""


class Monomial(NamedTuple):
    ex: int
    ey: int

    @property
    def degree(self) -> int:
        return self.ex + self.ey

    def divides(self, other: Monomial) -> bool:
        return self.ex <= other.ex and self.ey <= other.ey

    def times(self, other: Monomial) -> Monomial:
        return Monomial(self.ex + other.ex, self.ey + other.ey)

    def quotient(self, divisor: Monomial) -> Monomial:
        if not divisor.divides(self):
            raise ValueError(f"{divisor} does not divide {self}")
        return Monomial(self.ex - divisor.ex, self.ey - divisor.ey)

    def lcm(self, other: Monomial) -> Monomial:
        return Monomial(max(self.ex, other.ex), max(self.ey, other.ey))

    def coprime(self, other: Monomial) -> bool:
        return min(self.ex, other.ex) == 0 and min(self.ey, other.ey) == 0

    def to_str(self) -> str:
        parts = []
        for name, e in (("x", self.ex), ("y", self.ey)):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


ONE = Monomial(0, 0)


class MonomialOrder(enum.Enum):
    LEX_X_GT_Y = "lex"
    GRLEX_X_GT_Y = "grlex"

    def key(self, m: Monomial) -> tuple:
        """Sort key; larger key means larger monomial."""
        if self is MonomialOrder.LEX_X_GT_Y:
            return (m.ex, m.ey)
        return (m.ex + m.ey, m.ex, m.ey)

    @classmethod
    def parse(cls, name: str) -> MonomialOrder:
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown monomial order {name!r}; use 'lex' or 'grlex'") from None


LEX = MonomialOrder.LEX_X_GT_Y
GRLEX = MonomialOrder.GRLEX_X_GT_Y


def compare(a: Monomial, b: Monomial, order: MonomialOrder) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficients must be int or Fraction, got {type(c).__name__}")


class Polynomial:
    """Immutable sparse polynomial in x and y with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | Iterable[tuple] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for m, c in items:
                m = Monomial(*m)
                if m.ex < 0 or m.ey < 0:
                    raise ValueError(f"negative exponent in {m}")
                c = clean.get(m, Fraction(0)) + _as_fraction(c)
                if c:
                    clean[m] = c
                else:
                    clean.pop(m, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls({ONE: c})

    @classmethod
    def monomial(cls, m: Monomial, c=1) -> Polynomial:
        return cls({m: c})

    @classmethod
    def x(cls) -> Polynomial:
        return cls({Monomial(1, 0): 1})

    @classmethod
    def y(cls) -> Polynomial:
        return cls({Monomial(0, 1): 1})

    @classmethod
    def from_vector(cls, vector: Sequence, basis: Sequence[Monomial]) -> Polynomial:
        if len(vector) != len(basis):
            raise ValueError("coefficient vector and monomial basis differ in length")
        return cls(zip(basis, vector))

    def to_vector(self, basis: Sequence[Monomial]) -> list[Fraction]:
        index = {m: i for i, m in enumerate(basis)}
        vec = [Fraction(0)] * len(basis)
        for m, c in self._terms.items():
            if m not in index:
                raise ValueError(f"monomial {m.to_str()} is outside the basis")
            vec[index[m]] = c
        return vec

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(Monomial(*m), Fraction(0))

    def monomials(self) -> list[Monomial]:
        return list(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((m.degree for m in self._terms), default=-1)

    def degree_in(self, var: str) -> int:
        idx = 0 if var == "x" else 1
        return max((m[idx] for m in self._terms), default=-1)

    def sorted_terms(self, order: MonomialOrder) -> list[tuple[Monomial, Fraction]]:
        """Terms in decreasing ``order``."""
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no leading monomial")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder) -> Fraction:
        return self._terms[self.leading_monomial(order)]

    def leading_term(self, order: MonomialOrder) -> tuple[Fraction, Monomial]:
        m = self.leading_monomial(order)
        return self._terms[m], m

    # ring operations

    def __add__(self, other) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = Monomial(m1.ex + m2.ex, m1.ey + m2.ey)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(out)

    def __rmul__(self, other) -> Polynomial:
        return self.__mul__(other)

    def __pow__(self, n: int) -> Polynomial:
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Polynomial.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def scale(self, c) -> Polynomial:
        c = _as_fraction(c)
        if not c:
            return Polynomial()
        return Polynomial({m: c * v for m, v in self._terms.items()})

    def mul_term(self, c, m: Monomial) -> Polynomial:
        c = _as_fraction(c)
        if not c:
            return Polynomial()
        return Polynomial({Monomial(k.ex + m.ex, k.ey + m.ey): c * v for k, v in self._terms.items()})

    def evaluate(self, x, y) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        return sum((c * x**m.ex * y**m.ey for m, c in self._terms.items()), Fraction(0))

    def substitute_y(self, y) -> dict[int, Fraction]:
        """Univariate polynomial in x (exponent -> coefficient) after fixing y."""
        y = Fraction(y)
        out: dict[int, Fraction] = {}
        for m, c in self._terms.items():
            out[m.ex] = out.get(m.ex, 0) + c * y**m.ey
        return {e: c for e, c in out.items() if c}

    def monic(self, order: MonomialOrder) -> Polynomial:
        return self.scale(1 / self.leading_coefficient(order))

    def primitive(self, order: MonomialOrder) -> Polynomial:
        """Integer coefficients with gcd 1 and positive leading coefficient."""
        if not self._terms:
            return self
        denom = math.lcm(*(c.denominator for c in self._terms.values()))
        nums = [int(c * denom) for c in self._terms.values()]
        g = math.gcd(*nums)
        scale = Fraction(denom, g)
        if self.leading_coefficient(order) < 0:
            scale = -scale
        return self.scale(scale)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def to_str(self, order: MonomialOrder = LEX) -> str:
        """Canonical text form, terms in decreasing ``order``."""
        if not self._terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.sorted_terms(order)):
            mag = abs(c)
            if m == ONE:
                body = str(mag)
            elif mag == 1:
                body = m.to_str()
            else:
                body = f"{mag}*{m.to_str()}"
            if i == 0:
                out.append(f"-{body}" if c < 0 else body)
            else:
                out.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(out)

    def __str__(self) -> str:
        return self.to_str(LEX)

    def __repr__(self) -> str:
        return f"Polynomial({self.to_str(LEX)!r})"


def _coerce(other):
    if isinstance(other, Polynomial):
        return other
    if isinstance(other, (int, Fraction)):
        return Polynomial.constant(other)
    return NotImplemented


_TOKEN = re.compile(r"\s*(?:(\d+)|([xy])|(\^)|(\*)|(/)|([+-]))")


def parse_polynomial(text: str) -> Polynomial:
    """Parse e.g. ``"5*x^3 - 21*x^2 + 2*x*y + 14*x"``.

    Terms are products of integers, fractions ``p/q`` and powers of x and y,
    joined by ``+``/``-``. Errors report a 1-based column.
    """
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", column=col)
        kind = m.lastindex
        start = m.start(kind) + 1
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    end_col = len(text) + 1
    tokens.append((0, "", end_col))

    i = 0

    def peek():
        return tokens[i]

    def take():
        nonlocal i
        tok = tokens[i]
        i += 1
        return tok

    def expect_int(what):
        kind, val, col = take()
        if kind != 1:
            raise ParseError(f"expected {what}", column=col)
        return int(val)

    def factor():
        kind, val, col = peek()
        if kind == 1:
            take()
            num = int(val)
            if peek()[0] == 5:
                take()
                den_col = peek()[2]
                den = expect_int("denominator")
                if den == 0:
                    raise ParseError("zero denominator", column=den_col)
                return Polynomial.constant(Fraction(num, den))
            return Polynomial.constant(num)
        if kind == 2:
            take()
            exp = 1
            if peek()[0] == 3:
                take()
                exp = expect_int("exponent")
            m = Monomial(exp, 0) if val == "x" else Monomial(0, exp)
            return Polynomial.monomial(m)
        raise ParseError("expected a number or variable" if kind else "unexpected end of input", column=col)

    def term():
        result = factor()
        while peek()[0] == 4:
            take()
            result = result * factor()
        return result

    total = Polynomial()
    sign = 1
    if peek()[0] == 6:
        sign = -1 if take()[1] == "-" else 1
    total = total + term().scale(sign)
    while peek()[0] != 0:
        kind, val, col = take()
        if kind != 6:
            raise ParseError(f"expected '+' or '-', got {val!r}", column=col)
        sign = -1 if val == "-" else 1
        total = total + term().scale(sign)
    return total


# division, S-polynomials, Buchberger


def divide(f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder):
    """Multivariate division of ``f`` by the ordered tuple ``divisors``.

    Returns ``(quotients, remainder)`` with ``f == sum(q*g) + remainder``.
    The first divisor whose leading term divides the current leading term is used.
    """
    if not divisors:
        raise EmptyDivisorList("division needs at least one divisor")
    if any(g.is_zero() for g in divisors):
        raise ZeroDivisor("cannot divide by the zero polynomial")
    leads = [g.leading_term(order) for g in divisors]
    quotients: list[dict[Monomial, Fraction]] = [{} for _ in divisors]
    remainder: dict[Monomial, Fraction] = {}
    p = f
    while p:
        c, m = p.leading_term(order)
        for i, (gc, gm) in enumerate(leads):
            if gm.divides(m):
                qm = m.quotient(gm)
                qc = c / gc
                quotients[i][qm] = quotients[i].get(qm, 0) + qc
                p = p - divisors[i].mul_term(qc, qm)
                break
        else:
            remainder[m] = c
            p = p - Polynomial.monomial(m, c)
    return [Polynomial(q) for q in quotients], Polynomial(remainder)


def remainder(f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    return divide(f, divisors, order)[1]


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("S-polynomial of a zero polynomial is undefined")
    fc, fm = f.leading_term(order)
    gc, gm = g.leading_term(order)
    l = fm.lcm(gm)
    return f.mul_term(1 / fc, l.quotient(fm)) - g.mul_term(1 / gc, l.quotient(gm))


@dataclass(frozen=True)
class GroebnerBasis:
    polys: tuple[Polynomial, ...]
    order: MonomialOrder = LEX
    reduced: bool = False

    def __iter__(self):
        return iter(self.polys)

    def __len__(self) -> int:
        return len(self.polys)

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial(self.order) for g in self.polys]

    def to_lines(self, order: MonomialOrder | None = None) -> list[str]:
        return [g.to_str(order or self.order) for g in self.polys]


def buchberger(generators: Iterable[Polynomial], order: MonomialOrder = LEX) -> GroebnerBasis:
    """Gröbner basis containing ``generators`` (zero members dropped).

    Pairs are processed first-in first-out; pairs with coprime leading
    monomials are skipped. Non-zero remainders are appended in monic form.
    """
    basis = [g for g in generators if g]
    if not basis:
        raise EmptyInput("buchberger needs at least one nonzero generator")
    leads = [g.leading_monomial(order) for g in basis]
    pairs = deque((i, j) for j in range(len(basis)) for i in range(j))
    while pairs:
        i, j = pairs.popleft()
        if leads[i].coprime(leads[j]):
            continue
        r = remainder(s_polynomial(basis[i], basis[j], order), basis, order)
        if r:
            r = r.monic(order)
            basis.append(r)
            leads.append(r.leading_monomial(order))
            new = len(basis) - 1
            pairs.extend((k, new) for k in range(new))
    return GroebnerBasis(tuple(basis), order, reduced=False)


def reduce_basis(G: GroebnerBasis) -> GroebnerBasis:
    """The reduced Gröbner basis, sorted by increasing leading monomial."""
    order = G.order
    polys = [g.monic(order) for g in G.polys if g]
    if not polys:
        raise EmptyInput("cannot reduce an empty basis")
    # minimal basis: drop members whose leading monomial is a multiple of another's
    minimal: list[Polynomial] = []
    for i, g in enumerate(polys):
        lm = g.leading_monomial(order)
        redundant = False
        for j, h in enumerate(polys):
            if i == j:
                continue
            hm = h.leading_monomial(order)
            if hm.divides(lm) and (hm != lm or j < i):
                redundant = True
                break
        if not redundant:
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        c, lm = g.leading_term(order)
        tail = g - Polynomial.monomial(lm, c)
        if others:
            tail = remainder(tail, others, order)
        reduced.append(tail + Polynomial.monomial(lm, c))
    reduced.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return GroebnerBasis(tuple(reduced), order, reduced=True)


def ideal_membership(f: Polynomial, G: GroebnerBasis) -> bool:
    if f.is_zero():
        return True
    return remainder(f, G.polys, G.order).is_zero()


def is_groebner(G: GroebnerBasis) -> bool:
    """Every pairwise S-polynomial reduces to zero modulo ``G``."""
    polys = list(G.polys)
    for j in range(len(polys)):
        for i in range(j):
            if remainder(s_polynomial(polys[i], polys[j], G.order), polys, G.order):
                return False
    return True


def standard_monomials(G: GroebnerBasis) -> list[Monomial]:
    """Monomials divisible by no leading monomial of ``G``.

    Raises :class:`NotZeroDimensional` when that set is infinite.
    """
    leads = G.leading_monomials()
    pure_x = [m.ex for m in leads if m.ey == 0]
    pure_y = [m.ey for m in leads if m.ex == 0]
    if not pure_x or not pure_y:
        raise NotZeroDimensional("basis has no pure power of x or of y among its leading monomials")
    bx, by = min(pure_x), min(pure_y)
    return [
        Monomial(a, b)
        for b in range(by)
        for a in range(bx)
        if not any(lm.divides(Monomial(a, b)) for lm in leads)
    ]
