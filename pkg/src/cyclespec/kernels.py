"""Kernel selection: compiled extension if available, pure Python otherwise.

Set CYCLESPEC_PURE=1 to force the pure-Python kernels (used by the
benchmark and by tests that compare the two implementations).
"""

import os

if os.environ.get("CYCLESPEC_PURE"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

IMPLEMENTATION = _impl.IMPLEMENTATION
CANONICAL_MAX_N = _impl.CANONICAL_MAX_N

canonical_key = _impl.canonical_key
cycle_search = _impl.cycle_search
power_method = _impl.power_method
