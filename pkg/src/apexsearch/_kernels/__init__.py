"""Hot-loop kernels with a compiled core and a pure-Python fallback.

The compiled extension is optional: when the install built it, it is picked
up here; otherwise the pure implementation (identical semantics) is used.
``BACKEND`` records which one is active.
"""

from apexsearch._kernels import pure

try:
    from apexsearch._kernels import _native as _impl

    BACKEND = "native"
except ImportError:
    _impl = pure
    BACKEND = "pure"

solve_dense = _impl.solve_dense
bm25_accumulate = _impl.bm25_accumulate


def implementations():
    """All available kernel implementations, keyed by backend name."""
    impls = {"pure": pure}
    if BACKEND == "native":
        impls["native"] = _impl
    return impls
