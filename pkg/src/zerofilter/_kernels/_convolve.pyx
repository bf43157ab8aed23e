# Compiled circular-correlation kernel for the quadrature convolution.
#
# out[i] = sum_r sum_m taps[r, m] * series[r, (i - m - m_lo) mod N]
#
# Each row is unrolled onto a padded copy of the series so the inner loop
# is a contiguous dot product (no modulo in the hot path).
import numpy as np

cimport numpy as cnp

cnp.import_array()


def apply_plan(cnp.ndarray[cnp.float64_t, ndim=2] series,
               cnp.ndarray[cnp.float64_t, ndim=2] taps,
               long m_lo):
    cdef Py_ssize_t n_rows = series.shape[0]
    cdef Py_ssize_t n = series.shape[1]
    cdef Py_ssize_t k = taps.shape[1]
    cdef long m_hi = m_lo + k - 1
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.zeros(n, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] padded = np.empty(n + k - 1, dtype=np.float64)
    cdef Py_ssize_t r, i, j, t
    cdef long idx
    cdef double acc
    cdef double[:, :] s_view = series
    cdef double[:, :] t_view = taps
    cdef double[:] out_view = out
    cdef double[:] pad_view = padded

    for r in range(n_rows):
        # padded[t] = series[r, (t - m_hi) mod N] so that
        # series[r, (i - m_lo - m) mod N] = padded[i + (k - 1 - m)]
        for t in range(n + k - 1):
            idx = (t - m_hi) % n
            if idx < 0:
                idx = idx + n
            pad_view[t] = s_view[r, idx]
        for i in range(n):
            acc = 0.0
            for j in range(k):
                # j = k - 1 - m: reversed taps against a contiguous window
                acc = acc + t_view[r, k - 1 - j] * pad_view[i + j]
            out_view[i] = out_view[i] + acc
    return out
