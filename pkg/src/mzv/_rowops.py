"""Row-kernel dispatch: compiled extension if available, else pure Python.

Set ``MZV_PURE_KERNEL=1`` to force the pure-Python kernel (used by the
benchmark to compare the two implementations).
"""

import os

if os.environ.get("MZV_PURE_KERNEL") == "1":
    from ._rowops_py import BACKEND, combine_primitive
else:
    try:
        from ._rowops_cy import BACKEND, combine_primitive
    except ImportError:
        from ._rowops_py import BACKEND, combine_primitive

__all__ = ["BACKEND", "combine_primitive"]
