# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Gaussian-elimination kernels over GF(p).

Row reduction of Koszul differentials is the only hot loop in the
package, so just these two routines are compiled.  Residues stay in
[0, p) with p < 2**31, keeping every intermediate inside a signed
64-bit word.  Pivoting is "first nonzero row, columns left to right",
identical to the pure-Python fallback, so both backends produce the
same echelon forms bit for bit.
"""

from libc.stdint cimport int64_t

BACKEND_NAME = "compiled"


cdef int64_t _inv_mod(int64_t a, int64_t p) nogil:
    # extended Euclid; a is nonzero mod p, p prime
    cdef int64_t old_r = a, r = p
    cdef int64_t old_s = 1, s = 0
    cdef int64_t q, tmp
    while r != 0:
        q = old_r / r
        tmp = old_r - q * r; old_r = r; r = tmp
        tmp = old_s - q * s; old_s = s; s = tmp
    old_s %= p
    if old_s < 0:
        old_s += p
    return old_s


def rank_mod_p(int64_t[:, ::1] a, int64_t p):
    """Rank of ``a`` over GF(p); destroys ``a`` (pass a copy).

    Entries must already be canonical residues in [0, p).
    """
    cdef Py_ssize_t m = a.shape[0], n = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef int64_t f, inv, t
    with nogil:
        for c in range(n):
            if r == m:
                break
            piv = -1
            for i in range(r, m):
                if a[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(c, n):
                    t = a[r, j]; a[r, j] = a[piv, j]; a[piv, j] = t
            inv = _inv_mod(a[r, c], p)
            for i in range(r + 1, m):
                f = a[i, c]
                if f != 0:
                    f = (f * inv) % p
                    a[i, c] = 0
                    for j in range(c + 1, n):
                        t = (a[i, j] - f * a[r, j]) % p
                        if t < 0:
                            t += p
                        a[i, j] = t
            r += 1
    return r


def rref_mod_p(int64_t[:, ::1] a, int64_t p, int64_t[::1] pivots):
    """Reduced row echelon form of ``a`` in place.

    ``pivots`` must have room for min(m, n) entries; the pivot column of
    row i is written to pivots[i].  Returns the rank.
    """
    cdef Py_ssize_t m = a.shape[0], n = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv, k
    cdef int64_t f, inv, t
    with nogil:
        for c in range(n):
            if r == m:
                break
            piv = -1
            for i in range(r, m):
                if a[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(c, n):
                    t = a[r, j]; a[r, j] = a[piv, j]; a[piv, j] = t
            inv = _inv_mod(a[r, c], p)
            if inv != 1:
                for j in range(c, n):
                    a[r, j] = (a[r, j] * inv) % p
            for i in range(r + 1, m):
                f = a[i, c]
                if f != 0:
                    a[i, c] = 0
                    for j in range(c + 1, n):
                        t = (a[i, j] - f * a[r, j]) % p
                        if t < 0:
                            t += p
                        a[i, j] = t
            pivots[r] = c
            r += 1
        # back-substitution: clear entries above each pivot
        for k in range(r - 1, -1, -1):
            c = pivots[k]
            for i in range(k):
                f = a[i, c]
                if f != 0:
                    a[i, c] = 0
                    for j in range(c + 1, n):
                        t = (a[i, j] - f * a[k, j]) % p
                        if t < 0:
                            t += p
                        a[i, j] = t
    return r
