"""Coefficients of the bivariate Puiseux expansion

    (1 + u y)^a exp(b y^{-1/2} (sqrt(1 + u y) - 1)) = sum_j sum_i g[i][j] u^i y^{j/2}.

Computed numerically by formal power series in ``w = y^{1/2}`` whose
coefficients are polynomials in ``u``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ParameterError
from ..specfun import gen_binom

MAX_J = 40


@dataclass(frozen=True)
class PuiseuxTable:
    a: float
    b: float
    max_j: int
    g: np.ndarray  # g[i, j]; read-only

    def __call__(self, i: int, j: int) -> float:
        if not 0 <= j <= self.max_j:
            raise ParameterError(f"j={j} outside the computed table (max_j={self.max_j})")
        if not 0 <= i <= j:
            return 0.0
        return float(self.g[i, j])

    def evaluate(self, u: float, y: float) -> float:
        """Truncated double sum at ``(u, y)``."""
        w = np.sqrt(y) ** np.arange(self.max_j + 1)
        return float(u ** np.arange(self.max_j + 1) @ self.g @ w)


def _poly_mul(p, q, size):
    return np.convolve(p, q)[:size]


def puiseux_g(a: float, b: float, max_j: int) -> PuiseuxTable:
    if not 0 <= max_j <= MAX_J:
        raise ParameterError(f"max_j must lie in [0, {MAX_J}]")
    size = max_j + 1
    # exponent E(w) = b sum_{k>=1} binom(1/2, k) u^k w^{2k-1}; rows: power of w
    expo = np.zeros((size, size))
    for k in range(1, size):
        if 2 * k - 1 <= max_j:
            expo[2 * k - 1, k] = b * gen_binom(0.5, k)
    # F = exp(E) via j F_j = sum_m m E_m F_{j-m}
    f = np.zeros((size, size))
    f[0, 0] = 1.0
    for j in range(1, size):
        acc = np.zeros(size)
        for m in range(1, j + 1):
            acc += m * _poly_mul(expo[m], f[j - m], size)
        f[j] = acc / j
    binom = np.zeros((size, size))
    for i in range(max_j // 2 + 1):
        binom[2 * i, i] = gen_binom(a, i)
    prod = np.zeros((size, size))
    for j in range(size):
        for m in range(j + 1):
            prod[j] += _poly_mul(binom[m], f[j - m], size)
    g = np.ascontiguousarray(prod.T)
    # below the diagonal band every entry is structurally zero
    for j in range(size):
        g[: (j + 1) // 2, j] = 0.0
    g.setflags(write=False)
    return PuiseuxTable(float(a), float(b), int(max_j), g)
