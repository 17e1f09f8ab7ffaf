"""Integration and inversion lemmas for functions of the form
``x^m exp(-a x + b sqrt(x))``."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..errors import DomainError, ParameterError, RegimeError
from ..quadrature import gauss_kronrod
from ..specfun import gen_binom, pochhammer, upper_inc_gamma
from .coefficients import CoefficientSet, check_variant


def lemma1_coeffs(u: Sequence[float], a: float, b: float, m: float, order: int,
                  variant: str = "legacy") -> CoefficientSet:
    """Coefficients of the tail integral of ``x^m e^{-ax+b sqrt x} sum_l u_l x^{-l/2}``.

    For ``b != 0`` returns ``U_p`` (expansion in ``x^{-p/2}``); for ``b == 0``
    the input is read as ``v_j`` multiplying ``x^{-j}`` and ``V_k`` is returned.
    Missing input coefficients count as zero.  ``variant`` selects the
    Pochhammer factor of ``V_k``, see :mod:`.coefficients`.
    """
    if not a > 0:
        raise ParameterError("a must be positive")
    check_variant(variant)
    u = list(u) + [0.0] * (order + 1 - len(u))
    if b == 0:
        legacy = variant == "legacy"
        vals = [math.fsum(u[j] * pochhammer((k if legacy else j) - m, k - j) / (-a) ** (k - j)
                          for j in range(k + 1))
                for k in range(order + 1)]
        return CoefficientSet("lemma1_V", order, tuple(vals), None)
    half = b / (2.0 * a)
    vals = []
    for p in range(order + 1):
        terms = []
        for ell in range(p + 1):
            for j in range((p - ell) // 2 + 1):
                for k in range(p - ell - 2 * j + 1):
                    i = p - ell - 2 * j - k
                    terms.append((-1) ** (j + i) * u[ell]
                                 * gen_binom(2 * m + 1 - ell, k)
                                 * gen_binom(2 * m - ell - k - 2 * j, i)
                                 * pochhammer((ell + k) / 2.0 - m, j) / a ** j
                                 * half ** (k + i))
        vals.append(math.fsum(terms))
    return CoefficientSet("lemma1_U", order, tuple(vals), None)


def lemma1_kernel(a: float, b: float, q: float, x: float, method: str = "quadrature",
                  terms: int = 60) -> float:
    """``I(x) = int_x^inf t^q exp(-a t + b sqrt t) dt``.

    ``method="quadrature"`` integrates directly; ``"gamma_series"`` sums the
    binomial series of incomplete gamma functions obtained by completing the
    square, which converges when ``sqrt(x) > b/a``.
    """
    if not (a > 0 and x > 0):
        raise DomainError("need a > 0 and x > 0")
    if method == "gamma_series":
        c = b / (2.0 * a)
        root = math.sqrt(x) - c
        if not root > c:
            raise DomainError("incomplete gamma series needs sqrt(x) > b/a")
        y0 = a * root * root
        ratio = b / (2.0 * math.sqrt(a))
        total = math.fsum(gen_binom(2 * q + 1, k) * ratio ** k
                          * upper_inc_gamma(q - k / 2.0 + 1.0, y0) for k in range(terms))
        return math.exp(b * b / (4.0 * a)) / a ** (q + 1) * total
    if method != "quadrature":
        raise ParameterError(f"unknown method {method!r}")

    def log_g(t):
        return q * math.log(t) - a * t + b * math.sqrt(t)

    ref = log_g(x)

    def f(t):
        return np.exp(q * np.log(t) - a * t + b * np.sqrt(t) - ref)

    # integrand decays at least like exp(-a t / 2) past its peak
    peak = max(x, (b / (2 * a)) ** 2 + abs(q) / a)
    end = peak + 2.0 * (60.0 + abs(q) * math.log(2 + peak)) / a
    val, _ = gauss_kronrod(f, x, end, rtol=1e-13)
    return val * math.exp(ref)


class GOrder(enum.Enum):
    HALF = "half"
    ONE = "one"


@dataclass(frozen=True)
class AsymptoticInversionProblem:
    """Equation ``A x^m exp(-a x + b sqrt x) (1 + g(x)) = z`` for small z,
    with ``g = O(x^{-1/2})`` (``HALF``) or ``O(x^{-1})`` (``ONE``)."""

    a: float
    b: float
    m: float
    A: float
    z: float
    g_order: GOrder = GOrder.HALF

    def __post_init__(self):
        if not (self.a > 0 and self.A > 0 and self.z > 0):
            raise ParameterError("a, A and z must be positive")

    @property
    def w(self) -> float:
        return self.A / self.z


# Constant term of the inversion.  Expanding the root of the quadratic in
# sqrt(x) gives b^2/(2a^2); "legacy" keeps b^2/(4a^2), the form behind the
# published reference tables, and stalls at an O(1) error as z -> 0.
_CONSTANT_FACTOR = {"legacy": 4.0, "corrected": 2.0}


def invert_terms(a: float, b: float, m: float, A: float, log_inv_z: float,
                 variant: str = "corrected") -> float:
    """Six-term approximation without the regime check."""
    check_variant(variant)
    ell = log_inv_z
    lnl = math.log(ell)
    return (ell / a + b / a ** 1.5 * math.sqrt(ell) + m / a * lnl
            + b * b / (_CONSTANT_FACTOR[variant] * a * a)
            + (math.log(A) - m * math.log(a)) / a
            + b * m / (2.0 * a ** 1.5) * lnl / math.sqrt(ell))


def asym_invert(problem: AsymptoticInversionProblem, variant: str = "corrected") -> float:
    """Approximate solution of the inversion problem as ``z -> 0``."""
    ell = -math.log(problem.z)
    if not ell > 1.0:
        raise RegimeError("inversion needs ln(1/z) > 1")
    return invert_terms(problem.a, problem.b, problem.m, problem.A, ell, variant)
