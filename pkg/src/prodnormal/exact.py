"""Exact density of S_n and numerical tail, CDF and quantile.

Three independent density representations are provided:

* ``pdf_series``: the double series in Tricomi U functions, with its
  single-series and Bessel-K special cases;
* ``pdf_cui``: the n = 1 double series in Bessel K functions;
* ``pdf_integral``: one-dimensional integrals of Bessel I functions.

Negative arguments are always handled by reflection, ``f(x; mu_y, rho) =
f(-x; -mu_y, -rho)``, so every formula is only ever evaluated for x > 0.
Tail and CDF integrate the density; quantiles come from a safeguarded Newton
iteration on the tail in which each step only integrates the short segment
between iterates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import specfun
from .errors import (BracketError, ConvergenceError, DomainError, ParameterError,
                     SeriesTruncationError, SingularPointError)
from .params import DerivedParams, DistParams, derive
from .quadrature import DEFAULT_DROP, find_support, gauss_kronrod, line_integral

# one-sided evaluation point replacing x = 0 when n >= 2
ORIGIN_EPS = 1e-12


@dataclass(frozen=True)
class EvalConfig:
    series_k_max: int = 50
    quad_rel_tol: float = 1e-10
    quad_abs_tol: float = 1e-300
    tail_cut: float = DEFAULT_DROP
    special: specfun.SpecFunConfig = field(default_factory=lambda: specfun.DEFAULT)

    def __post_init__(self):
        if int(self.series_k_max) != self.series_k_max or self.series_k_max < 1:
            raise ParameterError("series_k_max must be a positive integer")
        for name in ("quad_rel_tol", "quad_abs_tol", "tail_cut"):
            if not getattr(self, name) > 0:
                raise ParameterError(f"{name} must be positive")


DEFAULT_EVAL = EvalConfig()


def log_c_n(dp: DerivedParams) -> float:
    quad = dp.r_x ** 2 + dp.r_y ** 2 - 2.0 * dp.rho * dp.r_x * dp.r_y
    return -dp.n * quad / (2.0 * (1.0 - dp.rho ** 2))


def index_shift(j: int, k: int, x: float) -> int:
    """The index ``a_{j,k}(x)``: ``k - j`` for x >= 0 and ``j`` for x < 0."""
    return k - j if x >= 0 else j


@dataclass(frozen=True)
class ExactPdfWorkspace:
    """Sign and integral prefactors at one point.

    ``prefactor_d*`` is ``None`` where that representation does not apply.
    Prefactors refer to the reflected parameters when x < 0.
    """

    sgn_x: int
    prefactor_d1: float | None
    prefactor_d2: float | None
    prefactor_d3: float | None

    def index_shift(self, j: int, k: int) -> int:
        return k - j if self.sgn_x >= 0 else j


def _log_prefactors(dp: DerivedParams, x):
    """Logs of D1, D2, D3 at x > 0 (``None`` where not applicable)."""
    n, rho, s = dp.n, dp.rho, dp.s
    x = np.asarray(x, dtype=float)
    common = -x / (s * (1.0 + rho))
    d1 = d2 = d3 = None
    if abs(dp.r_x) != abs(dp.r_y):
        d1 = (log_c_n(dp) - math.log(s * (1.0 - rho * rho))
              + (1.0 - n / 2.0) * (math.log(n / 4.0) + math.log(abs(dp.r_x ** 2 - dp.r_y ** 2)))
              + (n / 2.0) * np.log(x / s) + common)
    if dp.r_x != 0.0:
        head = ((2.0 - n) / 4.0 * math.log(n) + (1.0 - n / 2.0) * math.log(abs(dp.r_x))
                - math.log(s) - math.lgamma(n / 2.0) + (3.0 * n - 2.0) / 4.0 * np.log(x / s) + common)
        r2 = n * dp.r_x ** 2
        if dp.r_x == dp.r_y:
            d2 = head - n / 2.0 * math.log(1.0 - rho) - math.log(1.0 + rho) - r2 / (1.0 + rho)
        if dp.r_x == -dp.r_y:
            d3 = head - n / 2.0 * math.log(1.0 + rho) - math.log(1.0 - rho) - r2 / (1.0 - rho)
    return d1, d2, d3


def workspace(params: DistParams, x: float) -> ExactPdfWorkspace:
    sgn = int(np.sign(x))
    if x == 0:
        return ExactPdfWorkspace(0, None, None, None)
    dp = derive(params if x > 0 else params.reflected())
    logs = _log_prefactors(dp, abs(x))
    d1, d2, d3 = (None if v is None else float(np.exp(v)) for v in logs)
    return ExactPdfWorkspace(sgn, d1, d2, d3)


def _origin(params: DistParams, x: float) -> float:
    if x == 0:
        if params.n == 1:
            raise SingularPointError("the density is singular at x = 0 when n = 1")
        return ORIGIN_EPS
    return x


# ---------------------------------------------------------------------------
# series in U


def _closed_form(dp: DerivedParams, x, cfg: EvalConfig):
    """Zero-mean density through K_{(n-1)/2}; x > 0, vectorised."""
    n, rho, s = dp.n, dp.rho, dp.s
    x = np.asarray(x, dtype=float)
    w = x / (s * (1.0 - rho * rho))
    nu = (n - 1) / 2.0
    kv = specfun.bessel_k(nu, w, cfg.special, scaled=True)
    logv = (nu * np.log(x / 2.0) - (n + 1) / 2.0 * math.log(s)
            - 0.5 * math.log(math.pi * (1.0 - rho * rho)) - math.lgamma(n / 2.0)
            + rho * x / (s * (1.0 - rho * rho)) - w + np.log(kv))
    return np.exp(logv)


def _series_positive(dp: DerivedParams, x: float, cfg: EvalConfig) -> float:
    n, rho, s = dp.n, dp.rho, dp.s
    z = 2.0 * x / (s * (1.0 - rho * rho))
    q = (1.0 + rho) / (1.0 - rho)
    big_a = (dp.r_x - dp.r_y) ** 2
    big_b = (dp.r_x + dp.r_y) ** 2
    log_pre = ((n / 2.0 - 1.0) * math.log(1.0 - rho * rho) + log_c_n(dp)
               - (n - 1) * math.log(2.0) - math.log(s) - x / (s * (1.0 + rho)))
    # only j = 0 survives when A = 0, only j = k when B = 0
    if big_a == 0.0:
        def js(k):
            return [0]
    elif big_b == 0.0:
        def js(k):
            return [k]
    else:
        def js(k):
            return range(k + 1)
    la = math.log(q * big_a) if big_a > 0 else 0.0
    lb = math.log(big_b / q) if big_b > 0 else 0.0

    tol = cfg.quad_rel_tol
    total = None  # log of running sum
    small = 0
    chunk = 8
    k0 = 0
    while k0 <= cfg.series_k_max:
        ks = range(k0, min(k0 + chunk, cfg.series_k_max + 1))
        pairs = [(j, k) for k in ks for j in js(k)]
        log_u = specfun.tricomi_u_euler([n / 2.0 + j for j, _ in pairs],
                                        [n + k for _, k in pairs], z, cfg.special, log=True)
        by_k: dict[int, list[float]] = {}
        for (j, k), lu in zip(pairs, log_u):
            # (n/8)^k binom(k, j) / k! = (n/8)^k / (j! (k-j)!)
            lt = (k * math.log(n / 8.0) - math.lgamma(n / 2.0 + k - j)
                  - math.lgamma(j + 1) - math.lgamma(k - j + 1)
                  + j * la + (k - j) * lb + (n + k - 1) * math.log(z) + lu)
            by_k.setdefault(k, []).append(lt)
        for k in ks:
            lk = float(np.logaddexp.reduce(by_k[k]))
            total = lk if total is None else float(np.logaddexp(total, lk))
            if k > 0 and lk <= total + math.log(tol):
                small += 1
                if small >= 3:
                    return math.exp(log_pre + total)
            else:
                small = 0
        k0 += chunk
    raise SeriesTruncationError(
        f"U series not converged after {cfg.series_k_max} outer terms at x={x}")


def pdf_series(params: DistParams, x: float, cfg: EvalConfig = DEFAULT_EVAL) -> float:
    """Density from the U-function series, truncated adaptively in k."""
    x = _origin(params, float(x))
    if x < 0:
        return pdf_series(params.reflected(), -x, cfg)
    dp = derive(params)
    if dp.r_x == 0.0 and dp.r_y == 0.0:
        return float(_closed_form(dp, x, cfg))
    return _series_positive(dp, x, cfg)


# ---------------------------------------------------------------------------
# n = 1 series in K


def pdf_cui(params: DistParams, x: float, cfg: EvalConfig = DEFAULT_EVAL) -> float:
    """n = 1 density from the double series in ``K_{j-k}``."""
    if params.n != 1:
        raise ParameterError("pdf_cui is the n = 1 density")
    x = _origin(params, float(x))
    dp = derive(params)
    rho, s = dp.rho, dp.s
    om = 1.0 - rho * rho
    ax = abs(x)
    w = ax / (s * om)
    alpha = math.copysign(1.0, x) * (dp.r_x - rho * dp.r_y)
    beta = dp.r_y - rho * dp.r_x
    kmax = cfg.series_k_max
    kv = [float(specfun.bessel_k(m, w, cfg.special, scaled=True)) for m in range(kmax + 1)]
    total = 0.0
    small = 0
    log_scale = math.log(ax / (s * om * om))
    for k in range(kmax + 1):
        inner = math.fsum(math.comb(2 * k, j) * alpha ** j * beta ** (2 * k - j) * kv[abs(j - k)]
                          for j in range(2 * k + 1))
        term = inner * math.exp(k * log_scale - math.lgamma(2 * k + 1))
        total += term
        if k > 0 and abs(term) <= cfg.quad_rel_tol * abs(total):
            small += 1
            if small >= 3:
                break
        else:
            small = 0
    else:
        raise SeriesTruncationError(f"K series not converged after {kmax} terms at x={x}")
    log_front = log_c_n(dp) + rho * x / (s * om) - w - math.log(math.pi * s * math.sqrt(om))
    return total * math.exp(log_front)


# ---------------------------------------------------------------------------
# integral representations


def _integral_positive(dp: DerivedParams, x, cfg: EvalConfig) -> np.ndarray:
    """Bessel-I integral representation at an array of x > 0."""
    n, rho, s = dp.n, dp.rho, dp.s
    x = np.atleast_1d(np.asarray(x, dtype=float))
    nu = n / 2.0 - 1.0
    d1, d2, d3 = _log_prefactors(dp, x)
    sc = np.sqrt(n * x / s)[:, None]
    rate = (2.0 * x / (s * (1.0 - rho * rho)))[:, None]
    diff, summ = abs(dp.r_x - dp.r_y), abs(dp.r_x + dp.r_y)
    if d1 is not None:
        kind, logd = "watson", d1
        c1, c2 = diff / (1.0 - rho), summ / (1.0 + rho)
    elif d2 is not None:
        kind, logd = "equal", d2
        c1, c2 = 0.0, summ / (1.0 + rho)
    elif d3 is not None:
        kind, logd = "opposite", d3
        c1, c2 = diff / (1.0 - rho), 0.0
    else:
        raise DomainError("no integral representation when both means vanish")
    sp = cfg.special

    def log_i(y):
        with np.errstate(divide="ignore"):
            return np.log(specfun.bessel_i(nu, y, sp, scaled=True)) + y

    def logf(u):
        t = np.exp(u)[None, :]
        l1p = np.logaddexp(0.0, u)[None, :]
        uu = u[None, :]
        if kind == "watson":
            alg = nu / 2.0 * (uu + l1p)
        elif kind == "equal":
            alg = nu / 2.0 * (2.0 * uu + l1p)
        else:
            alg = nu / 2.0 * (uu + 2.0 * l1p)
        val = alg - rate * t + uu + logd[:, None]
        if c1:
            val = val + log_i(c1 * sc * np.sqrt(t))
        if c2:
            val = val + log_i(c2 * sc * np.sqrt(1.0 + t))
        return val

    beta = (c1 + c2) * sc[:, 0]
    alpha = rate[:, 0]
    t_hi = 4.0 * np.maximum(4.0 * (beta / alpha) ** 2, (cfg.tail_cut + 20.0) / alpha)
    hi = float(np.log(t_hi).max())
    lo = float(min(np.log(t_hi).min(), 0.0)) - 2.0 * (cfg.tail_cut + 10.0) / n - 5.0
    lo, hi = find_support(logf, lo, hi, step=0.5, drop=cfg.tail_cut)
    rtol = min(cfg.quad_rel_tol, 1e-12)
    return line_integral(logf, lo, hi, rtol=rtol, h0=0.25)


def pdf_integral(params: DistParams, x: float, cfg: EvalConfig = DEFAULT_EVAL) -> float:
    """Density from the Bessel-I integral representations."""
    x = _origin(params, float(x))
    if x < 0:
        return pdf_integral(params.reflected(), -x, cfg)
    return float(_integral_positive(derive(params), x, cfg)[0])


def pdf(params: DistParams, x: float, cfg: EvalConfig = DEFAULT_EVAL) -> float:
    """Density of S_n; series first, integral representation as fallback."""
    try:
        return pdf_series(params, x, cfg)
    except (SeriesTruncationError, ConvergenceError):
        return pdf_integral(params, x, cfg)


def _positive_values(params: DistParams, x: np.ndarray, cfg: EvalConfig) -> np.ndarray:
    dp = derive(params)
    if dp.r_x == 0.0 and dp.r_y == 0.0:
        return _closed_form(dp, x, cfg)
    return _integral_positive(dp, x, cfg)


def pdf_values(params: DistParams, x, cfg: EvalConfig = DEFAULT_EVAL) -> np.ndarray:
    """Vectorised density used by the quadrature routines.

    Uses the closed form for zero means and the integral representation
    otherwise.  At x = 0 returns ``inf`` for n = 1 and the value at
    ``ORIGIN_EPS`` for n >= 2.
    """
    x = np.asarray(x, dtype=float)
    flat = x.ravel()
    out = np.empty_like(flat)
    zero = flat == 0.0
    if np.any(zero):
        out[zero] = np.inf if params.n == 1 else _positive_values(params, np.array([ORIGIN_EPS]), cfg)[0]
    pos = flat > 0
    if np.any(pos):
        out[pos] = _positive_values(params, flat[pos], cfg)
    neg = flat < 0
    if np.any(neg):
        out[neg] = _positive_values(params.reflected(), -flat[neg], cfg)
    return out.reshape(x.shape)


# ---------------------------------------------------------------------------
# tail, cdf, quantile


def _right_cut(params: DistParams, a: float, cfg: EvalConfig) -> float:
    """Point beyond ``a >= 0`` where the density has dropped ``tail_cut``
    e-folds below its value at ``a``."""
    scale = params.sigma_x * params.sigma_y * (1.0 + params.rho)
    ref_x = max(a, 1e-3 * scale)
    ref = pdf_values(params, np.array([ref_x]), cfg)[0]
    step = 8.0 * scale + ref_x
    for _ in range(60):
        t = ref_x + step
        val = pdf_values(params, np.array([t]), cfg)[0]
        if val <= math.exp(-cfg.tail_cut) * ref or val <= cfg.quad_abs_tol:
            return t
        step *= 2.0
    raise ConvergenceError("could not locate the end of the density's tail")


def _gk(params: DistParams, a: float, b: float, cfg: EvalConfig) -> float:
    val, _ = gauss_kronrod(lambda t: pdf_values(params, t, cfg), a, b,
                           rtol=cfg.quad_rel_tol, atol=cfg.quad_abs_tol)
    return val


def _integrate(params: DistParams, a: float, b: float, cfg: EvalConfig) -> float:
    """Integral of the density over ``[a, b]``, split at the origin."""
    if a == b:
        return 0.0
    if a > b:
        return -_integrate(params, b, a, cfg)
    if a < 0 < b:
        return _integrate(params, a, 0.0, cfg) + _integrate(params, 0.0, b, cfg)
    if b <= 0:
        return _integrate(params.reflected(), -b, -a, cfg)
    return _gk(params, a, b, cfg)


def _upper(params: DistParams, a: float, cfg: EvalConfig) -> float:
    """Integral of the density over ``[a, inf)`` for ``a >= 0``."""
    return _gk(params, a, _right_cut(params, a, cfg), cfg)


@lru_cache(maxsize=256)
def _right_mass(params: DistParams, cfg: EvalConfig) -> float:
    return _upper(params, 0.0, cfg)


def tail(params: DistParams, x: float, cfg: EvalConfig = DEFAULT_EVAL) -> float:
    """P(S_n > x)."""
    x = float(x)
    if x >= 0:
        return _upper(params, x, cfg)
    ref = params.reflected()
    end = min(-x, _right_cut(ref, 0.0, cfg))
    return _right_mass(params, cfg) + _gk(ref, 0.0, end, cfg)


def cdf(params: DistParams, x: float, cfg: EvalConfig = DEFAULT_EVAL) -> float:
    """P(S_n <= x), integrated from the left independently of ``tail``."""
    return tail(params.reflected(), -float(x), cfg)


def total_mass(params: DistParams, cfg: EvalConfig = DEFAULT_EVAL) -> float:
    return _right_mass(params, cfg) + _right_mass(params.reflected(), cfg)


class _TailSolver:
    """Solves ``tail(x) = q`` for several q, reusing every tail value found."""

    def __init__(self, params: DistParams, cfg: EvalConfig):
        self.params, self.cfg = params, cfg
        self.known = {0.0: _right_mass(params, cfg)}

    def _tail_from(self, x: float) -> float:
        anchor = min(self.known, key=lambda k: abs(k - x))
        val = self.known[anchor] - _integrate(self.params, anchor, x, self.cfg)
        self.known[x] = val
        return val

    def solve(self, q: float) -> float:
        step = self.params.std
        x0 = min(self.known, key=lambda k: abs(self.known[k] - q))
        t0 = self.known[x0]
        direction = 1.0 if t0 > q else -1.0
        lo = hi = x0
        for _ in range(200):
            x1 = x0 + direction * step
            t1 = self._tail_from(x1)
            if (t1 - q) * direction <= 0:
                lo, hi = (x0, x1) if direction > 0 else (x1, x0)
                break
            x0, step = x1, 2.0 * step
        else:
            raise BracketError(f"could not bracket tail probability {q}")
        x = hi if abs(self.known[hi] - q) < abs(self.known[lo] - q) else lo
        tol = min(1e-11, 1e-9 * q)
        for _ in range(100):
            t = self.known[x]
            if abs(t - q) <= tol:
                return float(x)
            dens = pdf_values(self.params, np.array([x]), self.cfg)[0]
            cand = x + (t - q) / dens if dens > 0 and np.isfinite(dens) else None
            if cand is None or not lo < cand < hi:
                cand = 0.5 * (lo + hi)
            tc = self._tail_from(cand)
            if tc > q:
                lo = cand
            else:
                hi = cand
            x = cand
            if hi - lo <= 4e-16 * max(abs(lo), abs(hi)):
                return float(x)
        raise ConvergenceError(f"quantile iteration did not converge for tail {q}")


def quantiles_numeric(params: DistParams, ps, cfg: EvalConfig = DEFAULT_EVAL) -> list[float]:
    """Numeric quantiles for several probabilities sharing the tail work."""
    ps = [float(p) for p in ps]
    for p in ps:
        if not 0.0 < p < 1.0:
            raise DomainError("probability must lie in (0, 1)")
    upper = _TailSolver(params, cfg)
    lower = None
    out = []
    for p in ps:
        if p >= 0.5:
            out.append(upper.solve(1.0 - p))
        else:
            lower = lower or _TailSolver(params.reflected(), cfg)
            out.append(-lower.solve(p))
    return out


def quantile_numeric(params: DistParams, p: float, cfg: EvalConfig = DEFAULT_EVAL) -> float:
    """x with ``cdf(x) = p``."""
    return quantiles_numeric(params, [p], cfg)[0]
