"""Backend selection for the search kernels.

The compiled extension is used when it imports; setting the environment
variable ``MONOPART_PURE_PYTHON=1`` forces the pure-Python twin. Both expose
``embed_search`` and ``regularity_scan`` with identical results.
"""

import os

from monopart import _pykernels

try:
    if os.environ.get("MONOPART_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from monopart import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"

# compiled arithmetic is int64; wider rationals go to the Python kernel
_C_RATIONAL_LIMIT = 1 << 24


def available_backends():
    return ["cython", "python"] if _ckernels is not None else ["python"]


def get_backend(name=None):
    """Module implementing the kernels: ``"cython"``, ``"python"`` or the default."""
    name = name or BACKEND
    if name == "python":
        return _pykernels
    if name == "cython" and _ckernels is not None:
        return _ckernels
    raise ValueError(f"backend {name!r} is not available")


def embed_search(order, nbrs, domains, adj, rank, node_budget=-1, backend=None):
    impl = get_backend(backend)
    if impl is _ckernels and len(adj) >= 1 << 21:
        impl = _pykernels
    return impl.embed_search(order, nbrs, domains, adj, rank, node_budget)


def regularity_scan(cols, a, b, eps_num, eps_den, backend=None):
    impl = get_backend(backend)
    if impl is _ckernels and (a > 30 or b > 62 or eps_den >= _C_RATIONAL_LIMIT or eps_num >= _C_RATIONAL_LIMIT):
        impl = _pykernels
    return impl.regularity_scan(cols, a, b, eps_num, eps_den)
