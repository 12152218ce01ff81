"""Backend selection for the search kernels.

The compiled extension is used when it imports; setting
``BARRIERPATH_PURE_PYTHON=1`` forces the pure-Python kernels.  Calls whose
integers could overflow int64 are routed to the Python kernels regardless.
"""
import os

from . import _pykernels

try:
    if os.environ.get("BARRIERPATH_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"

# headroom so costs and state ids stay below 2**63
INT64_SAFE = 1 << 60
DENSE_STATE_LIMIT = 1 << 24


def get_backend(name=None):
    if name is None:
        name = BACKEND
    if name == "python":
        return _pykernels
    if name == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not available")
        return _ckernels
    raise ValueError("unknown backend %r" % name)


def residual_search(n, ptr, to, w, eid, s, t, W, backend=None):
    impl = get_backend(backend)
    if impl is not _pykernels:
        big = n * (W + 1) > DENSE_STATE_LIMIT or W * n >= INT64_SAFE
        if big and backend is None:
            impl = _pykernels
    return impl.residual_search(n, ptr, to, w, eid, s, t, W)


def domain_search(n, ptr, to, eid, row, levels, kmin, s, t, backend=None):
    impl = get_backend(backend)
    if impl is not _pykernels and backend is None:
        top = int(levels[-1]) if len(levels) else 0
        if n * len(levels) > DENSE_STATE_LIMIT or top * n * 2 >= INT64_SAFE:
            impl = _pykernels
    return impl.domain_search(n, ptr, to, eid, row, levels, kmin, s, t)
