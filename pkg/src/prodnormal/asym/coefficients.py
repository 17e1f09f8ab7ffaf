"""Coefficients of the large-|x| expansions of the density and tail.

``c`` and ``gamma`` belong to the case ``r_x + r_y != 0`` (expansion in
``(s/x)^{1/2}``); ``d`` and ``delta`` to ``r_x + r_y = 0`` (expansion in
``s/x``).  All are functions of ``(r_x, r_y, rho, n)`` only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import ParameterError
from ..params import DerivedParams
from ..specfun import gen_binom, kummer_m, pochhammer
from .puiseux import puiseux_g

KINDS = ("c", "d", "gamma", "delta", "lemma1_U", "lemma1_V")

# Two readings of the Pochhammer factor in the r_x + r_y = 0 tail
# coefficients.  "legacy" keeps the first argument k - m, the form behind the
# published tables; "corrected" uses j - m, which is what term-by-term
# integration of t^{m-j} e^{-a t} gives.  Only the legacy form leaves an O(1/x)
# error at every truncation order.
VARIANTS = ("legacy", "corrected")


def check_variant(variant: str):
    if variant not in VARIANTS:
        raise ParameterError(f"variant must be one of {VARIANTS}")


@dataclass(frozen=True)
class CoefficientSet:
    kind: str
    order: int
    values: tuple[float, ...]
    params_snapshot: DerivedParams | None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ParameterError(f"unknown coefficient kind {self.kind!r}")
        if len(self.values) != self.order + 1:
            raise ParameterError("need order + 1 values")

    def __getitem__(self, k: int) -> float:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)


def _require_sum(dp: DerivedParams):
    if dp.r_x + dp.r_y == 0:
        raise ParameterError("c and gamma coefficients need r_x + r_y != 0")


def _check_order(order: int):
    if int(order) != order or order < 0:
        raise ParameterError("order must be a nonnegative integer")


def coeff_c(dp: DerivedParams, order: int) -> CoefficientSet:
    _require_sum(dp)
    _check_order(order)
    n, rho = dp.n, dp.rho
    ratio = (1.0 + rho) / (1.0 - rho)
    kappa = n / 8.0 * ratio * dp.diff_r ** 2
    absum = abs(dp.sum_r)
    b = absum * math.sqrt(n) / (1.0 + rho)
    vals = [1.0]
    for ell in range(1, order + 1):
        h = []
        for j in range(ell + 1):
            r = ell - j
            g = puiseux_g((n - 3) / 4.0 - r / 2.0, b, j)
            front = (pochhammer((3 - n) / 2.0, r) * pochhammer((n - 1) / 2.0, r)
                     / (math.factorial(r) * 2.0 ** r * n ** (r / 2.0))
                     * ((1.0 + rho) / absum) ** r)
            # the exp(-kappa) prefactor is folded into the scaled M
            inner = math.fsum(pochhammer(n / 2.0, i) * ((1.0 - rho * rho) / 2.0) ** i
                              * kummer_m(n / 2.0 + i, n / 2.0, kappa, method="finite", scaled=True)
                              * g(i, j)
                              for i in range((j + 1) // 2, j + 1))
            h.append(front * inner)
        vals.append(math.fsum(h))
    return CoefficientSet("c", order, tuple(vals), dp)


def coeff_d(dp: DerivedParams, order: int, rep: str = "rep2") -> CoefficientSet:
    """``d_k`` from the finite sum (``rep2``) or through Kummer's M (``rep1``)."""
    _check_order(order)
    if rep not in ("rep1", "rep2"):
        raise ParameterError("rep must be 'rep1' or 'rep2'")
    n, rho = dp.n, dp.rho
    ratio = (1.0 + rho) / (1.0 - rho)
    z = n / 2.0 * ratio * dp.r_x ** 2
    vals = [1.0]
    for k in range(1, order + 1):
        front = ((-1) ** k * pochhammer(1.0 - n / 2.0, k) * pochhammer(n / 2.0, k)
                 / math.factorial(k) * ((1.0 - rho * rho) / 2.0) ** k)
        if front == 0.0:
            vals.append(0.0)
            continue
        if rep == "rep1":
            tail = kummer_m(n / 2.0 + k, n / 2.0, z, method="series", scaled=True)
        else:
            tail = math.fsum((n / 2.0) ** j / pochhammer(n / 2.0, j) * math.comb(k, j)
                             * ratio ** j * dp.r_x ** (2 * j) for j in range(k + 1))
        vals.append(front * tail)
    return CoefficientSet("d", order, tuple(vals), dp)


def coeff_gamma(dp: DerivedParams, order: int) -> CoefficientSet:
    _require_sum(dp)
    _check_order(order)
    n, rho = dp.n, dp.rho
    c = coeff_c(dp, order).values
    half_b = abs(dp.sum_r) * math.sqrt(n) / 2.0
    vals = []
    for p in range(order + 1):
        terms = []
        for ell in range(p + 1):
            for j in range((p - ell) // 2 + 1):
                for k in range(p - ell - 2 * j + 1):
                    i = p - ell - 2 * j - k
                    terms.append((-1) ** (j + i) * c[ell]
                                 * gen_binom((n - 1) / 2.0 - ell, k)
                                 * gen_binom((n - 3) / 2.0 - ell - k - 2 * j, i)
                                 * pochhammer((ell + k) / 2.0 - (n - 3) / 4.0, j)
                                 * (1.0 + rho) ** j * half_b ** (k + i))
        vals.append(math.fsum(terms))
    return CoefficientSet("gamma", order, tuple(vals), dp)


def coeff_delta(dp: DerivedParams, order: int, variant: str = "legacy") -> CoefficientSet:
    _check_order(order)
    check_variant(variant)
    n, rho = dp.n, dp.rho
    d = coeff_d(dp, order).values
    start = (lambda k, j: k) if variant == "legacy" else (lambda k, j: j)
    vals = [math.fsum((-1) ** (k - j) * d[j] * pochhammer(start(k, j) + 1 - n / 2.0, k - j)
                      * (1.0 + rho) ** (k - j) for j in range(k + 1))
            for k in range(order + 1)]
    return CoefficientSet("delta", order, tuple(vals), dp)


@dataclass(frozen=True)
class ExplicitCoefficients:
    c1: float | None
    c2: float | None
    d1: float
    d2: float
    gamma1: float | None
    gamma2: float | None
    delta1: float
    delta2: float


def explicit_low_order(dp: DerivedParams) -> ExplicitCoefficients:
    """Closed forms of the first two coefficients of each family."""
    n, rho = dp.n, dp.rho
    q = (1.0 + rho) / (1.0 - rho)
    om = 1.0 - rho * rho
    rx2 = dp.r_x ** 2
    d1 = n * (n - 2) * om / 8.0 * (1.0 + q * rx2)
    d_brace = 1.0 + 2.0 * q * rx2 + n / (n + 2.0) * q * q * rx2 * rx2
    d2 = (n + 2) * n * (n - 2) * (n - 4) * om ** 2 / 128.0 * d_brace
    delta1 = (n - 4) * (1.0 + rho) / 2.0 + d1
    delta2 = ((n - 6) * (n - 8) * (1.0 + rho) ** 2 / 4.0
              + n * (n - 2) * (n - 6) * (1.0 + rho) * om / 16.0 * (1.0 + q * rx2)
              + d2)
    c1 = c2 = g1 = g2 = None
    if dp.sum_r != 0:
        dd = dp.diff_r ** 2
        sm = dp.sum_r
        sa = abs(sm)
        c1 = (n ** 1.5 / 8.0 * sa * (1.0 - rho) * (1.0 + q * dd / 4.0)
              - (n - 1) * (n - 3) / (8.0 * math.sqrt(n)) * (1.0 + rho) / sa)
        c2 = (n * n * (n + 2) * om ** 2 * sm * sm / (1.0 + rho) ** 2 / 128.0
              * (1.0 + q * dd / 2.0 + n / (16.0 * (n + 2)) * q * q * dd * dd)
              + n * (n - 3) * om / 16.0 * (1.0 + q * dd / 4.0)
              - n * (n - 1) * (n - 3) * om / 64.0 * (1.0 + q * dd / 4.0)
              + (n + 1) * (n - 1) * (n - 3) * (n - 5) / (128.0 * n) * ((1.0 + rho) / sm) ** 2)
        g1 = c1 + math.sqrt(n) * sa / 2.0
        g2 = c2 + c1 * math.sqrt(n) * sa / 2.0 + (n - 3) * (1.0 + rho) / 4.0 + n * sm * sm / 4.0
    return ExplicitCoefficients(c1, c2, d1, d2, g1, g2, delta1, delta2)
