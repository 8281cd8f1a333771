"""Kernel selection: the Cython build when importable, else pure Python.

Set ``SURDPATH_PURE=1`` to force the Python loops.  The compiled loops work
in 64-bit integers and raise OverflowError outside their range; those calls
are transparently retried on the unbounded Python path.
"""

import os

from . import _kernels_py

_compiled = None
if not os.environ.get("SURDPATH_PURE"):
    try:
        from . import _kernels_c as _compiled
    except ImportError:
        pass

BACKEND = "cython" if _compiled is not None else "python"


def lpp_walk(N, c, d, max_steps):
    if _compiled is not None:
        try:
            return _compiled.lpp_walk(N, c, d, max_steps)
        except OverflowError:
            pass
    return _kernels_py.lpp_walk(N, c, d, max_steps)


def cf_walk(N, s, eps, c, d, max_terms):
    if _compiled is not None:
        try:
            return _compiled.cf_walk(N, s, eps, c, d, max_terms)
        except OverflowError:
            pass
    return _kernels_py.cf_walk(N, s, eps, c, d, max_terms)
