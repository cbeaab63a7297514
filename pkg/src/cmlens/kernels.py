"""Kernel dispatch: compiled extension when available, pure Python otherwise.

Set ``CMLENS_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

PLAN_COUNT_INT64_LIMIT = 3000

_compiled = None
if os.environ.get("CMLENS_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

_impl = _compiled if _compiled is not None else _kernels_py
BACKEND = "cython" if _compiled is not None else "python"


def backends():
    """Map of backend name to kernel module, for tests and benchmarks."""
    out = {"python": _kernels_py}
    if _compiled is not None:
        out["cython"] = _compiled
    return out


def add_item(row, value, exact=False):
    return _impl.add_item(row, value, exact)


def empty_row(m, exact=False):
    return _impl.empty_row(m, exact)


def t_sweep(entries, m, exact=False):
    return _impl.t_sweep(entries, m, exact)


def plan_counts(m):
    if m > PLAN_COUNT_INT64_LIMIT:
        return _kernels_py.plan_counts(m)
    return _impl.plan_counts(m)


def row_check(row, target, cap):
    return _impl.row_check(row, target, cap)
