"""Koszul differentials and linear-strand cohomology from a multiplication
table.

Basis conventions, fixed once and validated by the delta2 . delta1 = 0
assertion on every table:

* wedge basis elements are strictly increasing 1-based tuples ordered
  colexicographically, with rank {i_1 < ... < i_p} = sum_j C(i_j - 1, j);
* tensor-product bases are "wedge-major": column (I, a) sits at
  rank(I) * inner_dim + a;
* the deletion sign of i_j from I is (-1)**(j-1).

``kp1(table, p)`` is the dimension of the degree-(p, 1) Koszul
cohomology of the section ring: the kernel of the outer differential
modulo the image of the (injective) comultiplication.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import BadIndex, IndexOutOfRange
from .linalg import ExactMatrix
from .series import big_binom


def subset_rank(indices) -> int:
    """Colexicographic rank of a strictly increasing 1-based tuple."""
    prev = 0
    r = 0
    for j, i in enumerate(indices, start=1):
        if i <= prev or i < 1:
            raise BadIndex(f"indices must be strictly increasing, got {tuple(indices)}")
        prev = i
        r += big_binom(i - 1, j)
    return r


def subset_unrank(r: int, p: int) -> tuple[int, ...]:
    """Inverse of :func:`subset_rank` for p-element subsets."""
    if r < 0 or p < 0:
        raise BadIndex("rank and size must be nonnegative")
    out = []
    rem = r
    for j in range(p, 0, -1):
        m = j
        while big_binom(m, j) <= rem:
            m += 1
        out.append(m)
        rem -= big_binom(m - 1, j)
    if rem:
        raise BadIndex(f"rank {r} out of range for subsets of size {p}")
    return tuple(reversed(out))


def colex_subsets(n: int, p: int):
    """All p-subsets of {1..n} in colexicographic order."""
    subs = list(combinations(range(1, n + 1), p))
    subs.sort(key=lambda t: t[::-1])
    return subs


@dataclass(frozen=True)
class ExteriorIndex:
    """A wedge-basis element with its colex rank."""

    indices: tuple[int, ...]
    rank: int

    @classmethod
    def from_indices(cls, indices) -> "ExteriorIndex":
        t = tuple(indices)
        return cls(t, subset_rank(t))

    @classmethod
    def from_rank(cls, r: int, p: int) -> "ExteriorIndex":
        return cls(subset_unrank(r, p), r)


class MulTable:
    """Multiplication data of a very ample degree-1 piece of a section ring.

    ``h0L`` is dim V (the degree-1 sections), ``h0L2`` dim of the
    degree-2 sections, and ``mu[i, j]`` the coordinate vector of the
    product of basis sections i and j.  The table must be symmetric and
    surjective onto degree 2; both are checked by :meth:`validate`.
    """

    __slots__ = ("h0L", "h0L2", "p", "mu")

    def __init__(self, mu, p: int, validate: bool = True):
        mu = np.asarray(mu, dtype=np.int64) % p
        if mu.ndim != 3 or mu.shape[0] != mu.shape[1]:
            raise ValueError("mu must have shape (h0L, h0L, h0L2)")
        self.h0L = int(mu.shape[0])
        self.h0L2 = int(mu.shape[2])
        self.p = int(p)
        self.mu = mu
        self.mu.flags.writeable = False
        if validate:
            self.validate()

    def validate(self) -> None:
        if not np.array_equal(self.mu, self.mu.transpose(1, 0, 2)):
            raise ValueError("multiplication table is not symmetric")
        if self.flattened().rank() != self.h0L2:
            raise ValueError("multiplication table is not surjective in degree 2")

    def flattened(self) -> ExactMatrix:
        """The h0L**2 x h0L2 flattening of mu (pairs as rows)."""
        flat = self.mu.reshape(self.h0L * self.h0L, self.h0L2)
        return ExactMatrix.dense(flat, self.p)


def delta1_matrix(n: int, p: int, modulus: int) -> ExactMatrix:
    """Comultiplication wedge^{p+1} V -> wedge^p V (x) V.

    e_I maps to sum_j (-1)**(j-1) e_{I minus i_j} (x) e_{i_j}; columns are
    indexed by colex rank of I, rows by wedge-major (rank, tensor) pairs.
    The matrix has full column rank C(n, p+1).
    """
    if p + 1 > n:
        raise IndexOutOfRange(f"wedge degree {p + 1} exceeds dimension {n}")
    rows_idx, cols_idx, vals = [], [], []
    for col, subset in enumerate(colex_subsets(n, p + 1)):
        for j, elem in enumerate(subset):
            rest = subset[:j] + subset[j + 1 :]
            row = subset_rank(rest) * n + (elem - 1)
            rows_idx.append(row)
            cols_idx.append(col)
            vals.append(1 if j % 2 == 0 else modulus - 1)
    shape = (big_binom(n, p) * n, big_binom(n, p + 1))
    return ExactMatrix.from_triplets(rows_idx, cols_idx, vals, shape, modulus)


def delta2_matrix(table: MulTable, p: int) -> ExactMatrix:
    """Outer Koszul differential wedge^p V (x) V -> wedge^{p-1} V (x) W2.

    e_I (x) a maps to sum_j (-1)**(j-1) e_{I minus i_j} (x) mu(e_{i_j}, a).
    """
    n = table.h0L
    if not 1 <= p <= n - 1:
        raise IndexOutOfRange(f"outer differential needs 1 <= p <= {n - 1}, got {p}")
    w2 = table.h0L2
    q = table.p
    rows_idx, cols_idx, vals = [], [], []
    for col_I, subset in enumerate(colex_subsets(n, p)):
        deletions = []
        for j, elem in enumerate(subset):
            rest = subset[:j] + subset[j + 1 :]
            deletions.append((elem - 1, subset_rank(rest), 1 if j % 2 == 0 else -1))
        for a in range(n):
            col = col_I * n + a
            for elem_idx, rest_rank, sign in deletions:
                vec = table.mu[elem_idx, a]
                nz = np.flatnonzero(vec)
                for w in nz:
                    rows_idx.append(rest_rank * w2 + int(w))
                    cols_idx.append(col)
                    vals.append(sign * int(vec[w]))
    shape = (big_binom(n, p - 1) * w2, big_binom(n, p) * n)
    return ExactMatrix.from_triplets(rows_idx, cols_idx, vals, shape, q)


def assert_complex(table: MulTable, p: int) -> None:
    """Check delta2 . delta1 = 0 at wedge degree p (raises on failure)."""
    d1 = delta1_matrix(table.h0L, p, table.p)
    d2 = delta2_matrix(table, p)
    if not (d2 @ d1).is_zero():
        raise AssertionError(f"delta2 . delta1 != 0 at p={p}")


def kp1(table: MulTable, p: int) -> int:
    """dim of the linear-strand Koszul cohomology K_{p,1} of the table.

    Computed as nullity(delta2) - rank(delta1); the comultiplication is
    verified to have full column rank rather than assumed.
    """
    n = table.h0L
    if not 1 <= p <= n - 2:
        raise IndexOutOfRange(f"kp1 needs 1 <= p <= {n - 2}, got {p}")
    d1 = delta1_matrix(n, p, table.p)
    d1_rank = d1.rank()
    expected = big_binom(n, p + 1)
    if d1_rank != expected:
        raise AssertionError(f"comultiplication rank {d1_rank} != C({n},{p + 1})")
    d2 = delta2_matrix(table, p)
    nullity = d2.cols - d2.rank()
    dim = nullity - expected
    if dim < 0:
        raise AssertionError("negative strand dimension: inconsistent table")
    return dim


def extra_syzygies(table: MulTable, j: int) -> int:
    """Dimension of the degree-j extra-syzygy space of the embedded model.

    For a linearly normal S in P^(h0L-1) this is h^0 of wedge^j Q
    twisted by I_S(1), computed through the linear strand as
    K_{h0L-j, 1}; j must lie in [2, h0L-1].
    """
    n = table.h0L
    if not 2 <= j <= n - 1:
        raise IndexOutOfRange(f"extra_syzygies needs 2 <= j <= {n - 1}, got {j}")
    return kp1(table, n - j)


@dataclass
class StrandEntry:
    p: int
    dim: int
    nullity: int
    delta1_rank: int
    delta2_rank: int
    delta2_shape: tuple[int, int]
    ms: float

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "dim": self.dim,
            "nullity": self.nullity,
            "delta1_rank": self.delta1_rank,
            "delta2_rank": self.delta2_rank,
            "delta2_rows": self.delta2_shape[0],
            "delta2_cols": self.delta2_shape[1],
            "ms": round(self.ms, 3),
        }


@dataclass
class StrandResult:
    """The full linear strand K_{p,1} for p = 1 .. h0L-2."""

    h0L: int
    h0L2: int
    entries: list[StrandEntry] = field(default_factory=list)

    @property
    def dims(self) -> list[int]:
        return [e.dim for e in self.entries]

    def nullity_at(self, p: int) -> int:
        for e in self.entries:
            if e.p == p:
                return e.nullity
        raise IndexOutOfRange(f"no strand entry at p={p}")

    def dim_at(self, p: int) -> int:
        for e in self.entries:
            if e.p == p:
                return e.dim
        raise IndexOutOfRange(f"no strand entry at p={p}")

    def vanishing_propagates(self) -> bool:
        """Once an entry is zero, all later entries must be zero."""
        seen_zero = False
        for e in self.entries:
            if seen_zero and e.dim != 0:
                return False
            if e.dim == 0:
                seen_zero = True
        return True

    def to_dict(self) -> dict:
        return {
            "h0L": self.h0L,
            "h0L2": self.h0L2,
            "dims": self.dims,
            "entries": [e.to_dict() for e in self.entries],
        }


def linear_strand(table: MulTable, check_complex: bool = True) -> StrandResult:
    """Compute K_{p,1} for every p, validating the complex on the way."""
    n = table.h0L
    result = StrandResult(n, table.h0L2)
    for p in range(1, n - 1):
        start = time.perf_counter()
        d1 = delta1_matrix(n, p, table.p)
        d1_rank = d1.rank()
        expected = big_binom(n, p + 1)
        if d1_rank != expected:
            raise AssertionError(f"comultiplication rank {d1_rank} != C({n},{p + 1})")
        d2 = delta2_matrix(table, p)
        if check_complex and not (d2 @ d1).is_zero():
            raise AssertionError(f"delta2 . delta1 != 0 at p={p}")
        d2_rank = d2.rank()
        nullity = d2.cols - d2_rank
        dim = nullity - expected
        if dim < 0:
            raise AssertionError("negative strand dimension: inconsistent table")
        elapsed = (time.perf_counter() - start) * 1000.0
        result.entries.append(
            StrandEntry(p, dim, nullity, d1_rank, d2_rank, d2.shape, elapsed)
        )
    return result


def eagon_northcott_strand(k: int, length: int) -> list[int]:
    """Linear strand of a variety of minimal degree k: p * C(k, p+1).

    This is the classical resolution of the 2x2 minors of a generic
    2xk matrix, used as an independent oracle for scroll computations.
    """
    return [p * big_binom(k, p + 1) for p in range(1, length + 1)]
