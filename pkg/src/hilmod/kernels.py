"""Kernel dispatch: compiled extension when importable, pure Python otherwise.

Set ``HILMOD_PURE_PYTHON=1`` to force the fallback. :func:`use` switches at
runtime, which the benchmark and the kernel-equivalence tests rely on.
"""

import os

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

IMPLEMENTATIONS = {"python": _kernels_py}
if _compiled is not None:
    IMPLEMENTATIONS["cython"] = _compiled

ADD, SUB, MUL = 0, 1, 2

BACKEND = "python"
refine = _kernels_py.refine
merge_siblings = _kernels_py.merge_siblings
fwht = _kernels_py.fwht
combine = _kernels_py.combine


def use(name):
    """Route all kernel calls through implementation ``name``."""
    global BACKEND, refine, merge_siblings, fwht, combine
    try:
        impl = IMPLEMENTATIONS[name]
    except KeyError:
        raise ValueError(f"kernel implementation {name!r} unavailable; have {sorted(IMPLEMENTATIONS)}") from None
    BACKEND = name
    refine = impl.refine
    merge_siblings = impl.merge_siblings
    fwht = impl.fwht
    combine = impl.combine


if _compiled is not None and not os.environ.get("HILMOD_PURE_PYTHON"):
    use("cython")
