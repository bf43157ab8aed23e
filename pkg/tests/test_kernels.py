"""Backend equivalence for the banded periodic correlation kernel."""
import numpy as np
import pytest

from zerofilter import _kernels


def _reference_apply(series, taps, m_lo):
    """Direct O(R N K) sum: out[i] = sum_r sum_m taps[r,m] * series[r, i-(m+m_lo)]."""
    rows, n = series.shape
    k = taps.shape[1]
    out = np.zeros(n)
    for r in range(rows):
        for j in range(k):
            out += taps[r, j] * np.roll(series[r], j + m_lo)
    return out


@pytest.mark.parametrize("backend", ["fallback", "ext"])
@pytest.mark.parametrize("rows,n,k,m_lo", [
    (1, 32, 1, 0), (1, 32, 5, -2), (3, 64, 9, -4), (2, 128, 16, -8),
    (4, 64, 7, 3), (2, 64, 6, -9),
])
def test_matches_direct_sum(backend, rows, n, k, m_lo):
    if backend == "ext" and _kernels._ext is None:
        pytest.skip("compiled backend not built")
    rng = np.random.default_rng(100 * rows + n + k)
    series = rng.standard_normal((rows, n))
    taps = rng.standard_normal((rows, k))
    out = _kernels.apply_plan(series, taps, m_lo, backend=backend)
    ref = _reference_apply(series, taps, m_lo)
    assert np.max(np.abs(out - ref)) < 1e-12


def test_backends_agree():
    if _kernels._ext is None:
        pytest.skip("compiled backend not built")
    rng = np.random.default_rng(8)
    series = rng.standard_normal((6, 256))
    taps = rng.standard_normal((6, 33))
    a = _kernels.apply_plan(series, taps, -16, backend="ext")
    b = _kernels.apply_plan(series, taps, -16, backend="fallback")
    assert np.max(np.abs(a - b)) < 1e-13


def test_delta_tap_is_shift():
    series = np.arange(16.0).reshape(1, 16)
    taps = np.array([[1.0]])
    # m_lo = 2: out[i] = series[i - 2]
    out = _kernels.apply_plan(series, taps, 2, backend="fallback")
    assert np.array_equal(out, np.roll(series[0], 2))


def test_unknown_backend():
    with pytest.raises(ValueError):
        _kernels.apply_plan(np.zeros((1, 8)), np.zeros((1, 1)), 0,
                            backend="nope")
