r"""Special functions: modified Bessel functions :math:`I_\nu, K_\nu`, Kummer's
:math:`M`, Tricomi's :math:`U`, the upper incomplete gamma function and the
small combinatorial helpers they are built from.

Everything is real-argument, double precision.  The Bessel functions and
:math:`U` accept numpy arrays for ``x`` and broadcast; orders/parameters are
scalars except where noted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError, ParameterError
from .quadrature import find_support, line_integral


@dataclass(frozen=True)
class SpecFunConfig:
    """Truncation policy for the series and asymptotic expansions.

    ``asym_switch`` is the argument above which large-argument expansions are
    used (scaled by ``max(1, nu**2)`` for the Bessel functions).
    """

    series_tol: float = 1e-16
    max_terms: int = 1000
    asym_switch: float = 30.0

    def __post_init__(self):
        if not self.series_tol > 0:
            raise ParameterError("series_tol must be positive")
        if self.max_terms < 50:
            raise ParameterError("max_terms must be at least 50")
        if not self.asym_switch > 0:
            raise ParameterError("asym_switch must be positive")


DEFAULT = SpecFunConfig()


def _is_nonpos_int(v: float) -> bool:
    return v <= 0 and float(v).is_integer()


def pochhammer(v: float, j: int) -> float:
    """Rising factorial ``v (v+1) ... (v+j-1)``; ``(v)_0 = 1``."""
    out = 1.0
    for i in range(j):
        out *= v + i
    return out


def gen_binom(r: float, k: int) -> float:
    """Generalised binomial coefficient ``r (r-1) ... (r-k+1) / k!``."""
    out = 1.0
    for i in range(k):
        out *= (r - i) / (i + 1)
    return out


def rgamma(z: float) -> float:
    """``1/Gamma(z)``, taken as 0 at the poles."""
    if _is_nonpos_int(z):
        return 0.0
    return 1.0 / math.gamma(z)


def a_k_coeff(nu: float, k: int) -> float:
    """Coefficient of the large-argument Bessel expansions."""
    if k == 0:
        return 1.0
    return (-1) ** k * pochhammer(0.5 - nu, k) * pochhammer(0.5 + nu, k) / (
        math.factorial(k) * 2.0 ** k)


def _check_method(method, allowed):
    if method not in allowed:
        raise ParameterError(f"method must be one of {allowed}, got {method!r}")


def _scalar_out(x, out):
    return float(out) if np.ndim(x) == 0 else out


# ---------------------------------------------------------------------------
# modified Bessel function of the first kind

def _bessel_i_series(nu, x, cfg, scaled):
    """Power series for ``I_nu``; ``x`` is a 1-D array of nonnegative values."""
    x2 = 0.25 * x * x
    term = np.ones_like(x)
    total = np.ones_like(x)
    for k in range(cfg.max_terms):
        term = term * x2 / ((k + 1) * (k + 1 + nu))
        total = total + term
        if k > 2 and np.all(np.abs(term) <= cfg.series_tol * np.abs(total)):
            break
    else:
        raise ConvergenceError(f"I_{nu} series did not converge in {cfg.max_terms} terms")
    g = math.gamma(nu + 1.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        logpre = nu * np.log(0.5 * x) - math.log(abs(g))
    if scaled:
        logpre = logpre - x
    pre = math.copysign(1.0, g) * np.exp(logpre)
    if nu == 0:
        pre = np.exp(-x) if scaled else np.ones_like(x)
    return pre * total


def _asym_sum(nu, x, cfg, sign):
    """Sum of ``a_k(nu) (sign/x)^k``, stopped at tolerance or at the smallest
    term once the (divergent) expansion turns around."""
    total = np.ones_like(x)
    term = np.ones_like(x)
    prev = np.full_like(x, np.inf)
    for k in range(1, cfg.max_terms):
        ratio = -(k - 0.5 - nu) * (k - 0.5 + nu) / (2.0 * k)
        term = term * (sign * ratio) / x
        if np.all(term == 0.0):
            break
        growing = np.abs(term) > prev
        term = np.where(growing, 0.0, term)
        total = total + term
        prev = np.where(growing, 0.0, np.abs(term))
        if np.all(np.abs(term) <= cfg.series_tol * np.abs(total)):
            break
    return total


def _bessel_i_asym(nu, x, cfg, scaled):
    total = _asym_sum(nu, x, cfg, -1.0)
    pre = 1.0 / np.sqrt(2.0 * np.pi * x)
    return pre * total if scaled else pre * np.exp(x) * total


def bessel_i(nu: float, x, cfg: SpecFunConfig = DEFAULT, scaled: bool = False,
             method: str = "auto"):
    r"""Modified Bessel function of the first kind :math:`I_\nu(x)`, ``x >= 0``.

    Parameters
    ----------
    nu : float
        Real order.
    x : float or array_like
        Nonnegative argument(s).
    scaled : bool
        Return :math:`e^{-x} I_\nu(x)` instead, which stays finite for large x.
    method : {"auto", "series", "asymptotic"}
        ``auto`` uses the power series below ``cfg.asym_switch * max(1, nu**2)``
        and the large-argument expansion above it.
    """
    _check_method(method, ("auto", "series", "asymptotic"))
    xa = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(xa < 0):
        raise DomainError("bessel_i requires x >= 0")
    if float(nu).is_integer() and nu < 0:
        nu = -nu  # I_{-m} = I_m
    out = np.empty_like(xa)
    switch = cfg.asym_switch * max(1.0, nu * nu)
    if method == "auto":
        big = xa > switch
    else:
        big = np.full(xa.shape, method == "asymptotic")
    if np.any(big):
        out[big] = _bessel_i_asym(nu, xa[big], cfg, scaled)
    if np.any(~big):
        out[~big] = _bessel_i_series(nu, xa[~big], cfg, scaled)
    return _scalar_out(x, out.reshape(np.shape(x)) if np.ndim(x) else out[0])


# ---------------------------------------------------------------------------
# modified Bessel function of the second kind

def _bessel_k_integral(nu, x, cfg, scaled):
    """``K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt`` by the trapezoid
    rule; the integrand is even in t, so the half-line rule is spectrally
    accurate."""
    def g(xv, t):
        out = -xv * np.cosh(t) + nu * t + np.log1p(np.exp(-2.0 * nu * t)) - math.log(2.0)
        return out + xv if scaled else out

    xc = x[:, None]

    def logf(t):
        return g(xc, t[None, :])

    # peak at sinh(t) = nu / x; walk right until the integrand has died off
    peak = g(x, np.arcsinh(nu / x))
    hi = float(np.max(np.arcsinh(nu / x))) + 1.0
    while np.any(g(x, hi) > peak - 50.0):
        hi += 1.0
    return line_integral(logf, 0.0, hi, rtol=max(cfg.series_tol, 1e-15), h0=0.25)


def _bessel_k_asym(nu, x, cfg, scaled):
    total = _asym_sum(nu, x, cfg, 1.0)
    pre = np.sqrt(np.pi / (2.0 * x))
    return pre * total if scaled else pre * np.exp(-x) * total


def bessel_k(nu: float, x, cfg: SpecFunConfig = DEFAULT, scaled: bool = False,
             method: str = "auto"):
    r"""Modified Bessel function of the second kind :math:`K_\nu(x)`, ``x > 0``.

    Only ``|nu|`` is used, so :math:`K_{-\nu} = K_\nu` holds bit for bit.
    ``scaled`` returns :math:`e^{x} K_\nu(x)`.  ``method`` is ``"auto"``,
    ``"integral"`` (trapezoid rule on the cosh representation) or
    ``"asymptotic"``.
    """
    _check_method(method, ("auto", "integral", "asymptotic"))
    xa = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(xa <= 0):
        raise DomainError("bessel_k requires x > 0")
    nu = abs(float(nu))
    out = np.empty_like(xa)
    switch = cfg.asym_switch * max(1.0, nu * nu)
    if method == "auto":
        big = xa > switch
    else:
        big = np.full(xa.shape, method == "asymptotic")
    if np.any(big):
        out[big] = _bessel_k_asym(nu, xa[big], cfg, scaled)
    if np.any(~big):
        out[~big] = _bessel_k_integral(nu, xa[~big], cfg, scaled)
    return _scalar_out(x, out.reshape(np.shape(x)) if np.ndim(x) else out[0])


# ---------------------------------------------------------------------------
# confluent hypergeometric functions

def _kummer_series(a, b, x, cfg):
    term = 1.0
    total = 1.0
    small = 0
    for j in range(cfg.max_terms):
        term *= (a + j) * x / ((b + j) * (j + 1))
        total += term
        if abs(term) <= cfg.series_tol * abs(total):
            small += 1
            if small == 3:
                return total
        else:
            small = 0
        if term == 0.0:
            return total
    raise ConvergenceError(f"M({a}, {b}, {x}) series did not converge")


def kummer_m(a: float, b: float, x: float, cfg: SpecFunConfig = DEFAULT,
             method: str = "auto", scaled: bool = False) -> float:
    r"""Kummer's function :math:`M(a, b, x) = {}_1F_1(a; b; x)`.

    When ``a - b`` is a nonnegative integer ``m`` the finite form
    :math:`e^x \sum_{j\le m} \binom{m}{j} x^j/(b)_j` is used (``method="auto"``
    or ``"finite"``); ``method="series"`` forces the hypergeometric series.
    ``scaled=True`` returns :math:`e^{-x} M(a, b, x)`.
    """
    _check_method(method, ("auto", "finite", "series"))
    m = a - b
    reducible = m >= 0 and float(m).is_integer()
    if method == "finite" and not reducible:
        raise ParameterError("finite form needs a - b to be a nonnegative integer")
    if reducible and method != "series":
        m = int(m)
        if _is_nonpos_int(b) and m > 0:
            raise ParameterError("b must not be a nonpositive integer")
        total = 0.0
        for j in range(m + 1):
            total += math.comb(m, j) * x ** j / pochhammer(b, j)
        return total if scaled else math.exp(x) * total
    if _is_nonpos_int(b):
        raise ParameterError("M(a, b, x) undefined for nonpositive integer b")
    val = _kummer_series(a, b, x, cfg)
    return val * math.exp(-x) if scaled else val


def _tricomi_u_asym(a, b, x, cfg, optimal=False):
    """Large-x expansion; returns None when it does not reach tolerance
    before the terms start to grow, or with ``optimal`` the sum truncated
    before the smallest term."""
    c = a - b + 1.0
    term = 1.0
    total = 1.0
    for s in range(cfg.max_terms):
        nxt = -term * (a + s) * (c + s) / ((s + 1) * x)
        if nxt == 0.0:
            return total * x ** (-a)
        if abs(nxt) > abs(term):
            return total * x ** (-a) if optimal else None
        term = nxt
        total += term
        if abs(term) <= cfg.series_tol * abs(total):
            return total * x ** (-a)
    return None


def tricomi_u_euler(a, b, x: float, cfg: SpecFunConfig = DEFAULT,
                    log: bool = False) -> np.ndarray:
    r"""Euler integral :math:`\frac{1}{\Gamma(a)}\int_0^\infty e^{-xt}t^{a-1}
    (1+t)^{b-a-1}dt` for arrays of ``a > 0`` and ``b`` sharing one ``x``.

    Evaluated with ``t = e^u`` and the trapezoid rule on a common node set,
    so a whole table of parameter pairs costs about as much as one.  With
    ``log=True`` returns ``log U`` instead.
    """
    a = np.atleast_1d(np.asarray(a, dtype=float))
    b = np.atleast_1d(np.asarray(b, dtype=float))
    a, b = np.broadcast_arrays(a, b)
    if np.any(a <= 0):
        raise ParameterError("Euler integral for U needs a > 0")
    lga = np.array([math.lgamma(v) for v in a.ravel()]).reshape(a.shape)
    ac, ec, gc = a.ravel()[:, None], (b - a - 1.0).ravel()[:, None], lga.ravel()[:, None]

    def logf(u):
        u = u[None, :]
        return -x * np.exp(u) + ac * u + ec * np.logaddexp(0.0, u) - gc

    amin = float(a.min())
    upk = math.log(max(float(a.max()), float(np.abs(b).max()) + 1.0) / x)
    lo = min(math.log(amin / x), 0.0) - 120.0 / amin - 5.0
    hi = upk + 6.0
    lo, hi = find_support(logf, lo, hi)
    vals = line_integral(logf, lo, hi, rtol=max(cfg.series_tol, 1e-14), h0=0.25, log=log)
    return vals.reshape(a.shape)


def tricomi_u(a: float, b: float, x: float, cfg: SpecFunConfig = DEFAULT,
              method: str = "auto") -> float:
    r"""Tricomi's confluent hypergeometric function :math:`U(a, b, x)`, ``x > 0``.

    With ``a <= 0`` the Kummer transformation
    :math:`U(a,b,x) = x^{1-b}U(a-b+1, 2-b, x)` is applied first; the positive
    first parameter then admits the Euler integral.  Above ``cfg.asym_switch``
    the large-x expansion is used when it converges to tolerance;
    ``method="asymptotic"`` forces it, truncated before its smallest term.
    """
    _check_method(method, ("auto", "integral", "asymptotic"))
    if not x > 0:
        raise DomainError("tricomi_u requires x > 0")
    pre = 1.0
    if a <= 0:
        a, b, pre = a - b + 1.0, 2.0 - b, x ** (1.0 - b)
        if a <= 0:
            raise ParameterError("transformed first parameter must be positive")
    if method in ("auto", "asymptotic") and (x > cfg.asym_switch or method == "asymptotic"):
        val = _tricomi_u_asym(a, b, x, cfg, optimal=method == "asymptotic")
        if val is not None:
            return pre * val
    return pre * float(tricomi_u_euler(a, b, x, cfg)[0])


# ---------------------------------------------------------------------------
# incomplete gamma

def _gamma_cf(r, x, cfg):
    """Legendre continued fraction for Gamma(r, x), modified Lentz."""
    tiny = 1e-300
    bq = x + 1.0 - r
    c = 1.0 / tiny
    d = 1.0 / bq if bq != 0 else 1.0 / tiny
    h = d
    for i in range(1, cfg.max_terms):
        an = -i * (i - r)
        bq += 2.0
        d = an * d + bq
        d = tiny if d == 0 else d
        c = bq + an / c
        c = tiny if c == 0 else c
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) <= 1e-16:
            return math.exp(-x + r * math.log(x)) * h
    raise ConvergenceError(f"continued fraction for Gamma({r}, {x}) did not converge")


def _lower_gamma_series(r, x, cfg):
    term = 1.0 / r
    total = term
    for i in range(1, cfg.max_terms):
        term *= x / (r + i)
        total += term
        if abs(term) <= cfg.series_tol * abs(total):
            return math.exp(-x + r * math.log(x)) * total
    raise ConvergenceError("lower incomplete gamma series did not converge")


def upper_inc_gamma(r: float, x: float, cfg: SpecFunConfig = DEFAULT) -> float:
    r"""Upper incomplete gamma :math:`\Gamma(r, x)=\int_x^\infty t^{r-1}e^{-t}dt`
    for real ``r`` and ``x > 0``."""
    if not x > 0:
        raise DomainError("upper_inc_gamma requires x > 0")
    if x > 1.0 + max(r, 0.0):
        return _gamma_cf(r, x, cfg)
    if r > 0:
        return math.gamma(r) - _lower_gamma_series(r, x, cfg)
    # r <= 0, small x: step down from r + m > 0 with
    # Gamma(s, x) = (Gamma(s + 1, x) - x^s e^{-x}) / s
    m = int(math.floor(-r)) + 1
    s = r + m
    if float(r).is_integer():
        # Gamma(0, x) = E_1(x); shift through a nonzero neighbour is not possible
        val = _e1(x, cfg)
        s = 0.0
        m = -int(r)
        for _ in range(m):
            s -= 1.0
            val = (val - x ** s * math.exp(-x)) / s
        return val
    val = upper_inc_gamma(s, x, cfg)
    for _ in range(m):
        s -= 1.0
        val = (val - x ** s * math.exp(-x)) / s
    return val


def _e1(x, cfg):
    """Exponential integral E_1 for 0 < x <= 1 by its power series."""
    total = -0.5772156649015329 - math.log(x)
    term = 1.0
    for k in range(1, cfg.max_terms):
        term *= -x / k
        inc = -term / k
        total += inc
        if abs(inc) <= cfg.series_tol * abs(total):
            return total
    raise ConvergenceError("E1 series did not converge")
