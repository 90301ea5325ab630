"""Pure-Python (numpy) fallback for the elimination kernels.

Same contract and same pivoting policy as the compiled ``_core``
module: first nonzero row per column, columns left to right, so the two
backends agree entry-for-entry on every echelon form.  Row updates are
vectorised; with p < 2**31 all intermediates fit in int64.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"


def rank_mod_p(a: np.ndarray, p: int) -> int:
    """Rank of ``a`` over GF(p); destroys ``a`` (pass a copy)."""
    m, n = a.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv], c:] = a[[piv, r], c:]
        inv = pow(int(a[r, c]), -1, p)
        below = np.flatnonzero(a[r + 1 :, c])
        if below.size:
            rows = r + 1 + below
            f = (a[rows, c] * inv) % p
            a[np.ix_(rows, range(c, n))] = (
                a[np.ix_(rows, range(c, n))] - f[:, None] * a[r, c:]
            ) % p
        r += 1
    return r


def rref_mod_p(a: np.ndarray, p: int, pivots: np.ndarray) -> int:
    """Reduced row echelon form in place; fills ``pivots``, returns rank."""
    m, n = a.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv], c:] = a[[piv, r], c:]
        inv = pow(int(a[r, c]), -1, p)
        if inv != 1:
            a[r, c:] = (a[r, c:] * inv) % p
        below = np.flatnonzero(a[r + 1 :, c])
        if below.size:
            rows = r + 1 + below
            f = a[rows, c].copy()
            a[np.ix_(rows, range(c, n))] = (
                a[np.ix_(rows, range(c, n))] - f[:, None] * a[r, c:]
            ) % p
        pivots[r] = c
        r += 1
    for k in range(r - 1, -1, -1):
        c = int(pivots[k])
        above = np.flatnonzero(a[:k, c])
        if above.size:
            f = a[above, c].copy()
            a[np.ix_(above, range(c, n))] = (
                a[np.ix_(above, range(c, n))] - f[:, None] * a[k, c:]
            ) % p
    return r
