import math

import numpy as np
import pytest

from prodnormal import exact, mc
from prodnormal.errors import DomainError, ParameterError
from prodnormal.params import DistParams

PARAMS = DistParams(1.0, -1.0, 1.0, 1.0, -0.5, 1)


def test_stream_is_deterministic():
    a = mc.sample_sn(PARAMS, mc.RandomStream(42, 3), 5000)
    b = mc.sample_sn(PARAMS, mc.RandomStream(42, 3), 5000)
    assert np.array_equal(a, b)
    c = mc.sample_sn(PARAMS, mc.RandomStream(42, 4), 5000)
    assert not np.array_equal(a, c)


def test_blocks_are_addressable():
    stream = mc.RandomStream(7, 0)
    long = mc.sample_sn(PARAMS, stream, mc.BLOCK + 100)
    assert np.array_equal(long[:100], mc.sample_sn(PARAMS, stream, 100))
    second = stream.normals(1, (mc.BLOCK, 2))[:100]
    x = second[:, 0] + 1.0
    y = -0.5 * second[:, 0] + math.sqrt(0.75) * second[:, 1] - 1.0
    assert np.allclose(long[mc.BLOCK:], x * y, rtol=0, atol=1e-15)


def test_scalar_sample():
    v = mc.sample_sn(PARAMS, mc.RandomStream(1))
    assert isinstance(v, float)


def test_moments():
    params = DistParams(1.0, 1.0, 1.5, 0.7, 0.5, 3)
    s = mc.sample_sn(params, mc.RandomStream(2024, 0), 400_000)
    se = params.std / math.sqrt(s.size)
    assert abs(s.mean() - params.mean) < 5 * se
    assert s.std() == pytest.approx(params.std, rel=0.01)


def test_normals_are_standard():
    z = mc.RandomStream(99).normals(0, (mc.BLOCK, 4)).ravel()
    assert abs(z.mean()) < 5 / math.sqrt(z.size)
    assert z.var() == pytest.approx(1.0, abs=0.01)


def test_tail_matches_exact():
    params = DistParams(1.0, 1.0, 1.0, 1.0, 0.5, 3)
    x = 12.0
    res = mc.empirical_tail(params, x, 200_000, mc.RandomStream(5, 1))
    assert abs(res.estimate - exact.tail(params, x)) < 4 * res.std_error


def test_worker_count_does_not_change_results():
    stream = mc.RandomStream(11, 2)
    n = 3 * mc.BLOCK + 17
    a = mc.empirical_quantile(PARAMS, 0.99, n, stream, workers=1)
    b = mc.empirical_quantile(PARAMS, 0.99, n, stream, workers=3)
    assert a == b
    assert mc.empirical_tail(PARAMS, 0.5, n, stream, workers=1) == mc.empirical_tail(PARAMS, 0.5, n, stream, workers=2)


def test_quantile_order_statistic_rule():
    stream = mc.RandomStream(13, 0)
    n, p = 2 * mc.BLOCK + 5, 0.95
    s = np.sort(mc.sample_sn(PARAMS, stream, n))
    k = math.floor(n * (1 - p)) + 1
    res = mc.empirical_quantile(PARAMS, p, n, stream)
    assert res.estimate == s[n - k]
    assert res.std_error > 0


def test_quantile_near_exact():
    res = mc.empirical_quantile(PARAMS, 0.95, 10 ** 6, mc.RandomStream(20240917))
    assert abs(res.estimate - exact.quantile_numeric(PARAMS, 0.95)) < 4 * res.std_error


def test_validation():
    with pytest.raises(ParameterError):
        mc.RandomStream(-1)
    with pytest.raises(ParameterError):
        mc.RandomStream(1, -2)
    with pytest.raises(ParameterError):
        mc.empirical_tail(PARAMS, 0.0, 999, mc.RandomStream(1))
    with pytest.raises(DomainError):
        mc.empirical_quantile(PARAMS, 1.0, 1000, mc.RandomStream(1))
    with pytest.raises(ParameterError):
        mc.sample_sn(PARAMS, mc.RandomStream(1), 0)
