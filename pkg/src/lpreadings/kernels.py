"""Backend selection for the bitmask kernels.

The compiled module is used when it imports and the vocabulary fits in a
64-bit mask; otherwise calls fall through to the pure-Python module. Set
``LPREADINGS_PURE_PYTHON=1`` to force the fallback process-wide.
"""

import os

from . import _pykernels

try:
    if os.environ.get("LPREADINGS_PURE_PYTHON"):
        raise ImportError("pure-Python kernels requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = _ckernels.BACKEND if _ckernels is not None else _pykernels.BACKEND
_C_MAX_ATOMS = 63


def backend_for(n_atoms: int):
    if _ckernels is not None and n_atoms <= _C_MAX_ATOMS:
        return _ckernels
    return _pykernels


def enumerate_models(code, n, limit=-1):
    return backend_for(n).enumerate_models(code, n, limit)


def eval3(code, val, known, n):
    return backend_for(n).eval3(code, val, known)


def tp(heads, pos, neg, interp, n):
    return backend_for(n).tp(heads, pos, neg, interp)


def least_model(heads, pos, neg, blocked, n):
    return backend_for(n).least_model(heads, pos, neg, blocked)


def stable_candidates(heads, pos, neg, naf_mask, n):
    return backend_for(n).stable_candidates(heads, pos, neg, naf_mask)


def partial_stable(heads, pos, neg, n):
    return backend_for(n).partial_stable(heads, pos, neg, n)
