"""Truncated large-|x| expansions of the density and tail, and the quantile
approximations derived from the leading tail term.

Only the upper side is implemented directly.  The lower side is the upper
side of ``-S_n``, whose parameters are ``(mu_x, -mu_y, -rho)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from ..errors import DomainError, ParameterError
from ..params import DerivedParams, DistParams, derive
from .coefficients import coeff_c, coeff_d, coeff_delta, coeff_gamma
from .lemmas import AsymptoticInversionProblem, GOrder, invert_terms

DEFAULT_ORDER = 2
MAX_ORDER = 10


class TailSide(enum.Enum):
    UPPER = "upper"
    LOWER = "lower"


def _orient(params: DistParams, x: float, side: TailSide) -> tuple[DistParams, float]:
    side = TailSide(side)
    if side is TailSide.UPPER:
        if not x > 0:
            raise DomainError("upper-tail expansions are only valid for x > 0")
        return params, x
    if not x < 0:
        raise DomainError("lower-tail expansions are only valid for x < 0")
    return params.reflected(), -x


def _check_order(order: int):
    if int(order) != order or not 0 <= order <= MAX_ORDER:
        raise ParameterError(f"order must be an integer in [0, {MAX_ORDER}]")


def _log_front_c(dp: DerivedParams) -> float:
    """Log of the x-free factor shared by the c/gamma expansions (s = 1)."""
    n, rho = dp.n, dp.rho
    quad = dp.r_x ** 2 + dp.r_y ** 2 - 2.0 * rho * dp.r_x * dp.r_y
    return (-n * quad / (2.0 * (1.0 - rho * rho)) - math.log(2.0 * math.sqrt(2.0 * math.pi))
            + (n - 1) / 2.0 * math.log((1.0 + rho) / (abs(dp.sum_r) * math.sqrt(n)))
            + n / 8.0 * (1.0 + rho) / (1.0 - rho) * dp.diff_r ** 2)


def _exp_part(dp: DerivedParams, x: float) -> float:
    s, rho = dp.s, dp.rho
    if dp.sum_r != 0:
        return abs(dp.sum_r) / (1.0 + rho) * math.sqrt(dp.n * x / s) - x / (s * (1.0 + rho))
    return -dp.n * dp.r_x ** 2 / 2.0 - x / (s * (1.0 + rho))


def _series(values, t: float) -> float:
    return math.fsum(v * t ** k for k, v in enumerate(values))


def pdf_asym(params: DistParams, x: float, side: TailSide = TailSide.UPPER,
             order: int = DEFAULT_ORDER) -> float:
    """Density expansion truncated after the term of index ``order``."""
    _check_order(order)
    p, x = _orient(params, float(x), side)
    dp = derive(p)
    n, s = dp.n, dp.s
    if dp.sum_r != 0:
        c = coeff_c(dp, order).values
        log_v = (_log_front_c(dp) - (n + 1) / 4.0 * math.log(s)
                 + (n - 3) / 4.0 * math.log(x) + _exp_part(dp, x))
        return math.exp(log_v) * _series(c, math.sqrt(s / x))
    d = coeff_d(dp, order).values
    log_v = ((n / 2.0 - 1.0) * math.log(x) - n / 2.0 * math.log(2.0 * s)
             - math.lgamma(n / 2.0) + _exp_part(dp, x))
    return math.exp(log_v) * _series(d, s / x)


def tail_asym(params: DistParams, x: float, side: TailSide = TailSide.UPPER,
              order: int = DEFAULT_ORDER, variant: str = "legacy") -> float:
    """Expansion of ``P(S_n > x)`` (upper) or ``P(S_n <= x)`` (lower).

    ``variant`` only matters when ``r_x + r_y = 0``; see :mod:`.coefficients`.
    """
    _check_order(order)
    p, x = _orient(params, float(x), side)
    dp = derive(p)
    n, s, rho = dp.n, dp.s, dp.rho
    if dp.sum_r != 0:
        g = coeff_gamma(dp, order).values
        log_v = (math.log(1.0 + rho) + _log_front_c(dp)
                 + (n - 3) / 4.0 * math.log(x / s) + _exp_part(dp, x))
        return math.exp(log_v) * _series(g, math.sqrt(s / x))
    dl = coeff_delta(dp, order, variant).values
    log_v = (math.log(1.0 + rho) - n / 2.0 * math.log(2.0) - math.lgamma(n / 2.0)
             + (n / 2.0 - 1.0) * math.log(x / s) + _exp_part(dp, x))
    return math.exp(log_v) * _series(dl, s / x)


def inversion_problem(params: DistParams, q: float) -> AsymptoticInversionProblem:
    """Leading upper-tail term written as ``A x^m exp(-a x + b sqrt x) = q``."""
    dp = derive(params)
    n, s, rho = dp.n, dp.s, dp.rho
    a = 1.0 / (s * (1.0 + rho))
    if dp.sum_r != 0:
        b = abs(dp.sum_r) * math.sqrt(n) / ((1.0 + rho) * math.sqrt(s))
        m = (n - 3) / 4.0
        log_a = math.log(1.0 + rho) + _log_front_c(dp) - m * math.log(s)
        return AsymptoticInversionProblem(a, b, m, math.exp(log_a), q, GOrder.HALF)
    m = n / 2.0 - 1.0
    log_a = (math.log(1.0 + rho) - n / 2.0 * math.log(2.0) - m * math.log(s)
             - math.lgamma(n / 2.0) - n * dp.r_x ** 2 / 2.0)
    return AsymptoticInversionProblem(a, 0.0, m, math.exp(log_a), q, GOrder.ONE)


@dataclass(frozen=True)
class QuantileApproximation:
    value: float
    valid: bool
    side: TailSide

    def __float__(self) -> float:
        return self.value


def quantile_asym(params: DistParams, p: float, variant: str = "legacy") -> QuantileApproximation:
    """Closed-form quantile approximation.

    ``p >= 1/2`` uses the upper-tail formula with ``q = 1 - p``; ``p < 1/2``
    the lower one, by reflection.  ``valid`` is false when ``ln(1/q) <= 1`` or
    when the result lies on the wrong side of the origin for its tail.
    ``variant`` selects the constant term, see :mod:`.lemmas`.
    """
    p = float(p)
    if not 0.0 < p < 1.0:
        raise DomainError("probability must lie in (0, 1)")
    if p >= 0.5:
        sign, prm, q, side = 1.0, params, 1.0 - p, TailSide.UPPER
    else:
        sign, prm, q, side = -1.0, params.reflected(), p, TailSide.LOWER
    prob = inversion_problem(prm, q)
    ell = -math.log(q)
    x = invert_terms(prob.a, prob.b, prob.m, prob.A, ell, variant)
    return QuantileApproximation(sign * x, ell > 1.0 and x > 0, side)
