"""Backend selection for the hot loops.

The compiled extension is used when it imports; ``BIFORM_PURE_PYTHON=1``
forces the pure-Python reference implementation.
"""

import os

from . import _pykernels

_compiled = None
if not os.environ.get("BIFORM_PURE_PYTHON"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        _compiled = None

_impl = _compiled if _compiled is not None else _pykernels
BACKEND = _impl.BACKEND

# small lattice helpers are only needed at Python level
kernel_basis = _pykernels.kernel_basis
gauss_reduce = _pykernels.gauss_reduce


def _guarded(name):
    """Compiled function that defers to the Python one outside its safe range."""
    fast, slow = getattr(_impl, name), getattr(_pykernels, name)
    if fast is slow:
        return slow

    def call(*args, **kwargs):
        try:
            return fast(*args, **kwargs)
        except OverflowError:
            return slow(*args, **kwargs)

    call.__name__ = name
    call.__doc__ = slow.__doc__
    return call


fiber_count = _guarded("fiber_count")
fiber_region_sum = _guarded("fiber_region_sum")
brute_count = _guarded("brute_count")
conic_count = _guarded("conic_count")
param_inner = _guarded("param_inner")
linear_box_count = _guarded("linear_box_count")
quadratic_box_count = _guarded("quadratic_box_count")
mixed_box_count = _guarded("mixed_box_count")
conic_search = _guarded("conic_search")


def available() -> dict:
    """Name -> module for every backend that can be imported here."""
    out = {"python": _pykernels}
    try:
        from . import _kernels
        out["compiled"] = _kernels
    except ImportError:
        pass
    return out
