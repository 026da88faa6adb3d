"""Weights of the 2-variable weighted shift attached to an atomic measure.

Weights are kept as squares so everything stays rational:
``alpha_sq[k] = gamma(k + e1) / gamma(k)`` and ``beta_sq[k] = gamma(k + e2) / gamma(k)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import RecRelError
from .measure import E1, E2, AtomicMeasure, MultiIndex, moment


class NonpositiveAtomCoordinate(RecRelError):
    pass


class OrderExceeded(RecRelError):
    pass


@dataclass(frozen=True)
class WeightFamily:
    """Squared weights on all indices with ``k1 + k2 <= order``."""

    order: int
    alpha_sq: dict = field(hash=False)
    beta_sq: dict = field(hash=False)

    def __post_init__(self):
        for name, table in (("alpha_sq", self.alpha_sq), ("beta_sq", self.beta_sq)):
            for k in _indices(self.order):
                if k not in table:
                    raise ValueError(f"{name} is missing index {tuple(k)}")
                if table[k] <= 0:
                    raise ValueError(f"{name}{tuple(k)} = {table[k]} is not strictly positive")

    @classmethod
    def constant(cls, order: int, value=1) -> WeightFamily:
        v = Fraction(value)
        return cls(order, {k: v for k in _indices(order)}, {k: v for k in _indices(order)})

    def with_beta_sq(self, k, value) -> WeightFamily:
        beta = dict(self.beta_sq)
        beta[MultiIndex(*k)] = Fraction(value)
        return WeightFamily(self.order, dict(self.alpha_sq), beta)


def _indices(order: int):
    return [MultiIndex(d - j, j) for d in range(order + 1) for j in range(d + 1)]


def weights_from_measure(mu: AtomicMeasure, N: int) -> WeightFamily:
    for x, y in mu.atoms:
        if x <= 0 or y <= 0:
            raise NonpositiveAtomCoordinate(f"atom ({x}, {y}) has a nonpositive coordinate")
    gammas = {k: moment(mu, k) for k in _indices(N + 1)}
    alpha = {k: gammas[k + E1] / gammas[k] for k in _indices(N)}
    beta = {k: gammas[k + E2] / gammas[k] for k in _indices(N)}
    return WeightFamily(N, alpha, beta)


def moments_from_weights(W: WeightFamily, k) -> Fraction:
    """Moment of order ``k``: product of alpha^2 along the x-axis, then beta^2 up column k1."""
    k1, k2 = k
    if k1 < 0 or k2 < 0:
        raise ValueError("multi-index must be nonnegative")
    if k1 + k2 > W.order + 1:
        raise OrderExceeded(f"order {k1 + k2} exceeds {W.order + 1} for weights of order {W.order}")
    g = Fraction(1)
    for i in range(k1):
        g *= W.alpha_sq[MultiIndex(i, 0)]
    for j in range(k2):
        g *= W.beta_sq[MultiIndex(k1, j)]
    return g


def commutativity_check(W: WeightFamily) -> bool:
    """``alpha_sq[k+e2] * beta_sq[k] == beta_sq[k+e1] * alpha_sq[k]`` wherever defined."""
    for k in _indices(W.order - 1):
        if W.alpha_sq[k + E2] * W.beta_sq[k] != W.beta_sq[k + E1] * W.alpha_sq[k]:
            return False
    return True


def approx_weight(square: Fraction) -> float:
    """Display-only square root; not exact."""
    return math.sqrt(square)
