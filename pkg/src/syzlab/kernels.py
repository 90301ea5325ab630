"""Backend selection for the elimination kernels.

The compiled extension is preferred when present; setting the
environment variable ``SYZLAB_FORCE_FALLBACK`` (any nonempty value)
forces the numpy implementation, which the benchmark uses to compare
the two.  Both backends implement the same pivoting policy, so results
are identical either way.
"""

from __future__ import annotations

import os

import numpy as np

if os.environ.get("SYZLAB_FORCE_FALLBACK"):
    from . import _core_py as _impl
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _core_py as _impl

BACKEND = _impl.BACKEND_NAME


def _as_work_array(a: np.ndarray) -> np.ndarray:
    w = np.array(a, dtype=np.int64, order="C", copy=True)
    if w.ndim != 2:
        raise ValueError("kernel input must be a 2-d array")
    return w


def rank_mod_p(a: np.ndarray, p: int) -> int:
    """Rank over GF(p) of an int64 matrix of canonical residues."""
    w = _as_work_array(a)
    if 0 in w.shape:
        return 0
    return int(_impl.rank_mod_p(w, p))


def rref_mod_p(a: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """(rref, pivot columns) over GF(p); the input is left untouched."""
    w = _as_work_array(a)
    if 0 in w.shape:
        return w[:0], np.zeros(0, dtype=np.int64)
    pivots = np.full(min(w.shape), -1, dtype=np.int64)
    r = int(_impl.rref_mod_p(w, p, pivots))
    return w[:r], pivots[:r]
