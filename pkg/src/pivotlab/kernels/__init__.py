"""Batch distance kernels with a compiled fast path.

The Cython extension is used when it has been built; a NumPy fallback with
identical semantics is selected at import when the extension is missing or
when PIVOTLAB_PURE_PYTHON is set in the environment.
"""

import os

from . import _pykernels

_impl = None
if not os.environ.get("PIVOTLAB_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = None
if _impl is None:
    _impl = _pykernels

BACKEND = "numpy" if _impl is _pykernels else "cython"

popcount_u64 = _impl.popcount_u64
hamming_counts = _impl.hamming_counts
hamming_cross_counts = _impl.hamming_cross_counts
rho_k_batch = _impl.rho_k_batch
rho_k_batch_i32 = _impl.rho_k_batch_i32
sqeuclidean_batch = _impl.sqeuclidean_batch


def backend_name():
    """Which kernel backend got selected at import ("cython" or "numpy")."""
    return BACKEND
