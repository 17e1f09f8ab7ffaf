"""Reproducible Monte Carlo sampling of S_n.

Samples are produced in fixed-size blocks.  Block ``b`` of substream ``i``
under master seed ``s`` is drawn from a Philox generator keyed by
``SeedSequence(s, spawn_key=(i, b))``, so any sample is addressable without
generating its predecessors and results do not depend on how blocks are
distributed over workers.  Normals come from the inverse CDF, so each
realisation of S_n consumes exactly 2n variates:

    S_n = sum_i sigma_x (U_i + r_x) * sigma_y (rho U_i + sqrt(1 - rho^2) V_i + r_y).
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.special import ndtri

from .errors import DomainError, ParameterError
from .exact import pdf_values
from .params import DistParams

BLOCK = 1 << 16
_MAX_SEED = (1 << 64) - 1


@dataclass(frozen=True)
class RandomStream:
    master_seed: int
    substream_index: int = 0

    def __post_init__(self):
        if not 0 <= self.master_seed <= _MAX_SEED:
            raise ParameterError("master_seed must be a 64-bit unsigned integer")
        if self.substream_index < 0:
            raise ParameterError("substream_index must be nonnegative")

    def _generator(self, block: int) -> np.random.Generator:
        seq = np.random.SeedSequence(self.master_seed, spawn_key=(self.substream_index, block))
        return np.random.Generator(np.random.Philox(seq))

    def normals(self, block: int, shape: tuple[int, ...]) -> np.ndarray:
        """Standard normals of one block, by inverse CDF of 53-bit uniforms."""
        bits = self._generator(block).integers(0, 1 << 64, size=shape, dtype=np.uint64,
                                               endpoint=False)
        u = ((bits >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0 ** -53
        return ndtri(u)


@dataclass(frozen=True)
class EmpiricalResult:
    estimate: float
    n_samples: int
    std_error: float


def _block_samples(params: DistParams, stream: RandomStream, block: int, size: int) -> np.ndarray:
    n = params.n
    z = stream.normals(block, (BLOCK, 2 * n))[:size]
    u, v = z[:, :n], z[:, n:]
    rho = params.rho
    x = params.sigma_x * u + params.mu_x
    y = params.sigma_y * (rho * u + math.sqrt(1.0 - rho * rho) * v) + params.mu_y
    return (x * y).sum(axis=1)


def _blocks(n_samples: int):
    full, rest = divmod(n_samples, BLOCK)
    sizes = [BLOCK] * full + ([rest] if rest else [])
    return list(enumerate(sizes))


def _map_blocks(fn, n_samples: int, workers: int):
    jobs = _blocks(n_samples)
    if workers <= 1:
        return [fn(b, size) for b, size in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda job: fn(*job), jobs))


def sample_sn(params: DistParams, stream: RandomStream, size: int | None = None):
    """The first ``size`` realisations of the stream (one float if ``None``)."""
    count = 1 if size is None else int(size)
    if count < 1:
        raise ParameterError("size must be positive")
    out = np.concatenate([_block_samples(params, stream, b, s) for b, s in _blocks(count)])
    return float(out[0]) if size is None else out


def _check_n(n_samples: int):
    if int(n_samples) != n_samples or n_samples < 1000:
        raise ParameterError("n_samples must be an integer >= 1000")


def empirical_tail(params: DistParams, x: float, n_samples: int, stream: RandomStream,
                   workers: int = 1) -> EmpiricalResult:
    """Fraction of realisations strictly above ``x``."""
    _check_n(n_samples)
    counts = _map_blocks(lambda b, s: int(np.count_nonzero(_block_samples(params, stream, b, s) > x)),
                         n_samples, workers)
    est = sum(counts) / n_samples
    return EmpiricalResult(est, n_samples, math.sqrt(est * (1.0 - est) / n_samples))


def empirical_quantile(params: DistParams, p: float, n_samples: int, stream: RandomStream,
                       workers: int = 1) -> EmpiricalResult:
    """The k-th largest realisation with ``k = floor(N (1 - p)) + 1``."""
    _check_n(n_samples)
    if not 0.0 < p < 1.0:
        raise DomainError("probability must lie in (0, 1)")
    k = math.floor(n_samples * (1.0 - p)) + 1

    def top(b, s):
        vals = _block_samples(params, stream, b, s)
        return vals if vals.size <= k else np.partition(vals, vals.size - k)[-k:]

    pool = np.concatenate(_map_blocks(top, n_samples, workers))
    est = float(np.partition(pool, pool.size - k)[pool.size - k])
    dens = float(pdf_values(params, np.array([est]))[0])
    se = math.sqrt(p * (1.0 - p) / n_samples) / dens if dens > 0 else math.inf
    return EmpiricalResult(est, n_samples, se)
