"""Dense exact-rational matrices: RREF, kernels, PSD test, block assembly."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .errors import ParseError, RecRelError


class DimensionMismatch(RecRelError):
    pass


class NotSymmetric(RecRelError):
    pass


class RatMatrix:
    """Immutable row-major matrix of Fractions."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence]):
        data = tuple(tuple(Fraction(v) for v in row) for row in rows)
        if not data or not data[0]:
            raise DimensionMismatch("a matrix needs at least one row and one column")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise DimensionMismatch("ragged rows")
        self._rows = data
        self.nrows = len(data)
        self.ncols = width

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> RatMatrix:
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, values: Sequence) -> RatMatrix:
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]

    def transpose(self) -> RatMatrix:
        return RatMatrix(list(zip(*self._rows)))

    @property
    def T(self) -> RatMatrix:
        return self.transpose()

    def __matmul__(self, other):
        if isinstance(other, RatMatrix):
            return matmul(self, other)
        return NotImplemented

    def apply(self, vector: Sequence) -> list[Fraction]:
        if len(vector) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(vector)} against {self.ncols} columns")
        v = [Fraction(x) for x in vector]
        return [sum((a * b for a, b in zip(r, v) if a and b), Fraction(0)) for r in self._rows]

    def __add__(self, other: RatMatrix) -> RatMatrix:
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return RatMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)])

    def scale(self, c) -> RatMatrix:
        c = Fraction(c)
        return RatMatrix([[c * a for a in r] for r in self._rows])

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and all(
            self._rows[i][j] == self._rows[j][i] for i in range(self.nrows) for j in range(i)
        )

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._rows)

    @property
    def rank(self) -> int:
        return rref(self)[2]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def to_text(self) -> str:
        return "\n".join(" ".join(str(v) for v in r) for r in self._rows)

    def __repr__(self) -> str:
        return f"RatMatrix({self.nrows}x{self.ncols})"


def parse_matrix(text: str) -> RatMatrix:
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        row = []
        col = 1
        for tok in line.split(" "):
            if tok:
                try:
                    row.append(Fraction(tok))
                except (ValueError, ZeroDivisionError):
                    raise ParseError(f"bad matrix entry {tok!r}", line=lineno, column=col) from None
            col += len(tok) + 1
        rows.append(row)
    if not rows:
        raise ParseError("empty matrix")
    try:
        return RatMatrix(rows)
    except DimensionMismatch as exc:
        raise ParseError(str(exc)) from None


def matmul(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    if a.ncols != b.nrows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    cols = b.transpose().rows
    return RatMatrix(
        [[sum((x * y for x, y in zip(r, c) if x and y), Fraction(0)) for c in cols] for r in a.rows]
    )


def transpose(m: RatMatrix) -> RatMatrix:
    return m.transpose()


def block_compose(blocks: Sequence[Sequence[RatMatrix]]) -> RatMatrix:
    """Stitch a 2x2 grid ``[[A, B], [C, D]]`` into one matrix."""
    if len(blocks) != 2 or any(len(r) != 2 for r in blocks):
        raise DimensionMismatch("block_compose expects a 2x2 grid")
    (a, b), (c, d) = blocks
    if a.nrows != b.nrows or c.nrows != d.nrows or a.ncols != c.ncols or b.ncols != d.ncols:
        raise DimensionMismatch(
            f"blocks {a.shape} {b.shape} / {c.shape} {d.shape} are not conformable"
        )
    top = [ra + rb for ra, rb in zip(a.rows, b.rows)]
    bottom = [rc + rd for rc, rd in zip(c.rows, d.rows)]
    return RatMatrix(top + bottom)


def rref(m: RatMatrix) -> tuple[RatMatrix, list[int], int]:
    """Reduced row echelon form, pivot columns and rank.

    Pivots are taken left to right on the first row with a nonzero entry.
    """
    a = m.tolist()
    nrows, ncols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        src = next((i for i in range(r, nrows) if a[i][c]), None)
        if src is None:
            continue
        a[r], a[src] = a[src], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [v - f * p for v, p in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return RatMatrix(a), pivots, len(pivots)


def primitive_vector(v: Sequence[Fraction], lead_index: int) -> list[Fraction]:
    """Scale to coprime integers with a positive entry at ``lead_index``."""
    denom = math.lcm(*(x.denominator for x in v))
    ints = [int(x * denom) for x in v]
    g = math.gcd(*ints)
    if g == 0:
        return [Fraction(0)] * len(v)
    sign = -1 if ints[lead_index] < 0 else 1
    return [Fraction(sign * x // g) for x in ints]


def kernel_basis(m: RatMatrix, column_rank: Sequence | None = None) -> list[list[Fraction]]:
    """Basis of the right null space of ``m``.

    ``column_rank[j]`` is a sort key ranking column ``j``; it defaults to the
    column index. Each vector is primitive-integer with a positive entry at
    its highest-ranked nonzero coordinate, and vectors are listed by the
    rank of their free column, ascending.
    """
    if column_rank is None:
        column_rank = list(range(m.ncols))
    if len(column_rank) != m.ncols:
        raise DimensionMismatch("column_rank length differs from column count")
    r, pivots, rank = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.ncols) if j not in pivot_set]
    vectors = []
    for j in free:
        v = [Fraction(0)] * m.ncols
        v[j] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -r[row, j]
        lead = max((i for i in range(m.ncols) if v[i]), key=lambda i: column_rank[i])
        vectors.append((column_rank[j], primitive_vector(v, lead)))
    vectors.sort(key=lambda t: t[0])
    return [v for _, v in vectors]


def same_row_space(a: Sequence[Sequence], b: Sequence[Sequence], ncols: int) -> bool:
    """True when two lists of vectors span the same subspace."""
    if not a and not b:
        return True
    if not a or not b:
        return all(not any(v) for v in (a or b))
    ra = rref(RatMatrix(a))
    rb = rref(RatMatrix(b))
    if ra[2] != rb[2]:
        return False
    if ra[2] == 0:
        return True
    return ra[0].rows[: ra[2]] == rb[0].rows[: rb[2]]


def psd_check(m: RatMatrix) -> bool:
    """Exact positive-semidefiniteness test by symmetric elimination."""
    if not m.is_symmetric():
        raise NotSymmetric(f"matrix of shape {m.shape} is not symmetric")
    a = m.tolist()
    active = list(range(m.nrows))
    while active:
        keep = []
        for i in active:
            d = a[i][i]
            if d < 0:
                return False
            if d == 0:
                if any(a[i][j] for j in active if j != i):
                    return False
                continue
            keep.append(i)
        active = keep
        if not active:
            return True
        p = active[0]
        piv = a[p][p]
        rest = active[1:]
        for i in rest:
            f = a[i][p] / piv
            if f:
                row_p = a[p]
                row_i = a[i]
                for j in rest:
                    row_i[j] -= f * row_p[j]
        active = rest
    return True
