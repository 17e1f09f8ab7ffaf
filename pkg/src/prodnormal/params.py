"""Distribution parameters and the derived quantities every formula uses."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError


@dataclass(frozen=True)
class DistParams:
    """Law of ``S_n``, the sum of ``n`` independent copies of ``X * Y`` with
    ``(X, Y)`` bivariate normal."""

    mu_x: float
    mu_y: float
    sigma_x: float = 1.0
    sigma_y: float = 1.0
    rho: float = 0.0
    n: int = 1

    def __post_init__(self):
        if not (self.sigma_x > 0 and self.sigma_y > 0):
            raise ParameterError("standard deviations must be positive")
        if not -1.0 < self.rho < 1.0:
            raise ParameterError("rho must lie in (-1, 1)")
        if int(self.n) != self.n or self.n < 1:
            raise ParameterError("n must be a positive integer")
        object.__setattr__(self, "n", int(self.n))
        for name in ("mu_x", "mu_y", "sigma_x", "sigma_y", "rho"):
            object.__setattr__(self, name, float(getattr(self, name)))

    def reflected(self) -> "DistParams":
        """Parameters of ``-S_n``: flip the sign of ``mu_y`` and ``rho``."""
        return DistParams(self.mu_x, -self.mu_y, self.sigma_x, self.sigma_y,
                          -self.rho, self.n)

    @property
    def mean(self) -> float:
        return self.n * (self.mu_x * self.mu_y + self.rho * self.sigma_x * self.sigma_y)

    @property
    def std(self) -> float:
        sx, sy, mx, my, r = self.sigma_x, self.sigma_y, self.mu_x, self.mu_y, self.rho
        var = (mx * sy) ** 2 + (my * sx) ** 2 + 2 * r * mx * my * sx * sy + (sx * sy) ** 2 * (1 + r * r)
        return math.sqrt(self.n * var)


@dataclass(frozen=True)
class DerivedParams:
    r_x: float
    r_y: float
    s: float
    c_n: float
    rho: float
    n: int

    @property
    def sum_r(self) -> float:
        return self.r_x + self.r_y

    @property
    def diff_r(self) -> float:
        return self.r_x - self.r_y


def derive(params: DistParams) -> DerivedParams:
    r_x = params.mu_x / params.sigma_x
    r_y = params.mu_y / params.sigma_y
    rho, n = params.rho, params.n
    quad = r_x * r_x + r_y * r_y - 2.0 * rho * r_x * r_y
    c_n = math.exp(-n * quad / (2.0 * (1.0 - rho * rho)))
    return DerivedParams(r_x, r_y, params.sigma_x * params.sigma_y, c_n, rho, n)
