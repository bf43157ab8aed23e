"""Pure scipy/numpy implementation of the correlation kernel.

scipy.ndimage.correlate1d computes
    out0[i] = sum_j W[j] * F[(i + j - K//2) mod N]     (mode="wrap", origin 0).
We need
    out[i] = sum_m T[m] * F[(i - m - m_lo) mod N],
which with W = T reversed equals out0 rolled by m_lo + K - 1 - K//2.
Rolling instead of passing an origin keeps arbitrary m_lo legal; scipy
restricts origin to roughly half the filter width.
"""
import numpy as np
from scipy.ndimage import correlate1d


def apply_plan(series, taps, m_lo):
    series = np.asarray(series, dtype=np.float64)
    taps = np.asarray(taps, dtype=np.float64)
    n_rows, n = series.shape
    k = taps.shape[1]
    out = np.zeros(n, dtype=np.float64)
    for r in range(n_rows):
        out += correlate1d(series[r], taps[r, ::-1], mode="wrap")
    shift = m_lo + k - 1 - k // 2
    if shift % n != 0:
        out = np.roll(out, shift)
    return out
