# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled batch distance kernels. _pykernels defines the reference semantics."""

import numpy as np

from libc.stdint cimport int32_t, int64_t, uint64_t

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    static inline unsigned long long pvl_popcount64(unsigned long long x)
    { return (unsigned long long)__builtin_popcountll(x); }
    #else
    static inline unsigned long long pvl_popcount64(unsigned long long x)
    {
        x = x - ((x >> 1) & 0x5555555555555555ULL);
        x = (x & 0x3333333333333333ULL) + ((x >> 2) & 0x3333333333333333ULL);
        x = (x + (x >> 4)) & 0x0f0f0f0f0f0f0f0fULL;
        return (x * 0x0101010101010101ULL) >> 56;
    }
    #endif
    """
    uint64_t pvl_popcount64(uint64_t x) nogil


def popcount_u64(words):
    arr = np.ascontiguousarray(words, dtype=np.uint64)
    flat = arr.reshape(-1)
    out = np.empty(flat.shape[0], dtype=np.uint64)
    cdef const uint64_t[::1] src = flat
    cdef uint64_t[::1] dst = out
    cdef Py_ssize_t i, m = src.shape[0]
    with nogil:
        for i in range(m):
            dst[i] = pvl_popcount64(src[i])
    return out.reshape(arr.shape)


def hamming_counts(points, q):
    cdef const uint64_t[:, ::1] p = points
    cdef const uint64_t[::1] qq = q
    cdef Py_ssize_t n = p.shape[0], w = p.shape[1], i, j
    cdef uint64_t acc
    out = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] dst = out
    with nogil:
        for i in range(n):
            acc = 0
            for j in range(w):
                acc += pvl_popcount64(p[i, j] ^ qq[j])
            dst[i] = <int64_t> acc
    return out


def hamming_cross_counts(points, pivots):
    cdef const uint64_t[:, ::1] p = points
    cdef const uint64_t[:, ::1] v = pivots
    cdef Py_ssize_t n = p.shape[0], k = v.shape[0], w = p.shape[1], i, j, t
    cdef uint64_t acc
    out = np.empty((n, k), dtype=np.int64)
    cdef int64_t[:, ::1] dst = out
    with nogil:
        for i in range(n):
            for j in range(k):
                acc = 0
                for t in range(w):
                    acc += pvl_popcount64(p[i, t] ^ v[j, t])
                dst[i, j] = <int64_t> acc
    return out


def rho_k_batch(table, qdists):
    cdef const double[:, ::1] tab = table
    cdef const double[::1] qd = qdists
    cdef Py_ssize_t n = tab.shape[0], k = tab.shape[1], i, j
    cdef double best, diff
    out = np.zeros(n, dtype=np.float64)
    cdef double[::1] dst = out
    if k == 0:
        return out
    with nogil:
        for i in range(n):
            best = 0.0
            for j in range(k):
                diff = tab[i, j] - qd[j]
                if diff < 0.0:
                    diff = -diff
                if diff > best:
                    best = diff
            dst[i] = best
    return out


def rho_k_batch_i32(table, qdists):
    cdef const int32_t[:, ::1] tab = table
    cdef const int32_t[::1] qd = qdists
    cdef Py_ssize_t n = tab.shape[0], k = tab.shape[1], i, j
    cdef int32_t best, diff
    out = np.zeros(n, dtype=np.int32)
    cdef int32_t[::1] dst = out
    if k == 0:
        return out
    with nogil:
        for i in range(n):
            best = 0
            for j in range(k):
                diff = tab[i, j] - qd[j]
                if diff < 0:
                    diff = -diff
                if diff > best:
                    best = diff
            dst[i] = best
    return out


def sqeuclidean_batch(points, q):
    cdef const double[:, ::1] p = points
    cdef const double[::1] qq = q
    cdef Py_ssize_t n = p.shape[0], d = p.shape[1], i, j
    cdef double acc, diff
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] dst = out
    with nogil:
        for i in range(n):
            acc = 0.0
            for j in range(d):
                diff = p[i, j] - qq[j]
                acc += diff * diff
            dst[i] = acc
    return out
