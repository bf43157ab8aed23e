"""Backend selection for the periodized-kernel circular correlation.

The hot kernel is: out[i] = sum_r sum_m taps[r, m] * series[r, (i - m - m_lo) mod N],
one correlation per quadrature offset row r.  Two implementations exist:

- ``_convolve``: compiled Cython loop (preferred),
- ``fallback``: scipy.ndimage.correlate1d with an equivalent index mapping.

Set ``ZEROFILTER_NO_EXT=1`` to force the fallback (used by tests and the
benchmark to compare both paths).
"""
import os

from . import fallback

if os.environ.get("ZEROFILTER_NO_EXT", "0") == "1":
    _ext = None
else:
    try:
        from . import _convolve as _ext
    except ImportError:
        _ext = None

BACKEND = "ext" if _ext is not None else "fallback"


def apply_plan(series, taps, m_lo, backend=None):
    """Accumulate all per-offset circular correlations into one output row.

    Args:
        series: (R, N) float64, row r holding the integrand samples for
            quadrature offset r.
        taps: (R, K) float64 quadrature weights times kernel values.
        m_lo: panel index of taps[:, 0] (typically -K/2).
        backend: force "ext" or "fallback"; default picks the module default.

    Returns:
        (N,) float64 result of the quadrature convolution.
    """
    name = BACKEND if backend is None else backend
    if name == "ext":
        if _ext is None:
            raise RuntimeError("compiled extension not available")
        return _ext.apply_plan(series, taps, m_lo)
    if name != "fallback":
        raise ValueError(f"unknown backend {name!r}")
    return fallback.apply_plan(series, taps, m_lo)
