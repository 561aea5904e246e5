"""NumPy implementations of the batch distance kernels.

This is the fallback backend used when the compiled extension is not
available, and the reference the compiled kernels are tested against.
All functions are pure and accept read-only arrays.
"""

import numpy as np

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


def popcount_swar(words):
    """Per-word bit counts via the SWAR reduction (no hardware popcount)."""
    x = words.astype(np.uint64, copy=True)
    x -= (x >> np.uint64(1)) & _M1
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return (x * _H01) >> np.uint64(56)


if hasattr(np, "bitwise_count"):
    def popcount_u64(words):
        return np.bitwise_count(words).astype(np.uint64)
else:  # numpy < 2.0
    popcount_u64 = popcount_swar


def hamming_counts(points, q):
    """Differing-bit counts between each packed row of `points` and `q`.

    points: (n, w) uint64, q: (w,) uint64 -> (n,) int64
    """
    return popcount_u64(points ^ q[np.newaxis, :]).sum(axis=1, dtype=np.int64)


def hamming_cross_counts(points, pivots):
    """Differing-bit counts between packed rows and packed pivots.

    points: (n, w) uint64, pivots: (k, w) uint64 -> (n, k) int64
    """
    x = points[:, np.newaxis, :] ^ pivots[np.newaxis, :, :]
    return popcount_u64(x).sum(axis=2, dtype=np.int64)


def rho_k_batch(table, qdists):
    """Row-wise max |table - qdists|: the pivot lower bound for every point.

    table: (n, k) float64, qdists: (k,) float64 -> (n,) float64
    """
    n, k = table.shape
    if k == 0:
        return np.zeros(n)
    return np.max(np.abs(table - qdists[np.newaxis, :]), axis=1)


def rho_k_batch_i32(table, qdists):
    """Integer-count variant of rho_k_batch, exact for Hamming tables.

    table: (n, k) int32, qdists: (k,) int32 -> (n,) int32
    """
    n, k = table.shape
    if k == 0:
        return np.zeros(n, dtype=np.int32)
    return np.max(np.abs(table - qdists[np.newaxis, :]), axis=1)


def sqeuclidean_batch(points, q):
    """Squared Euclidean distance from each row of `points` to `q`."""
    diff = points - q[np.newaxis, :]
    return np.einsum("ij,ij->i", diff, diff)
