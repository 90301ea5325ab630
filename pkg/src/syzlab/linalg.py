"""Exact rank / kernel / rref over GF(p), and the DVR valuation check.

Matrices are immutable after construction and store canonical residues
as int64.  Small or very sparse matrices may be held as triplets; the
rank routine runs a Markowitz-style sparse elimination that hands the
remaining block to the dense kernel once fill-in passes a density
threshold, which is where Koszul differentials invariably end up.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from . import kernels
from .errors import NotASubspace, SingularMatrix
from .fieldmath import GFPoly, inv_mod

# Elimination switches from triplet form to the dense kernel when the
# active submatrix exceeds this fill ratio, or when the cheapest pivot
# would touch more than MARKOWITZ_CAP entries.
DENSE_DENSITY = 0.25
MARKOWITZ_CAP = 4096


class ExactMatrix:
    """Dense or sparse-triplet matrix over GF(p)."""

    __slots__ = ("rows", "cols", "p", "_dense", "_coo")

    def __init__(self, rows, cols, p, dense=None, coo=None):
        self.rows = int(rows)
        self.cols = int(cols)
        self.p = int(p)
        self._dense = dense
        self._coo = coo
        if dense is not None:
            dense.flags.writeable = False

    # -- constructors ---------------------------------------------------
    @classmethod
    def dense(cls, array, p: int) -> "ExactMatrix":
        a = np.asarray(array, dtype=np.int64) % p
        a = np.ascontiguousarray(a)
        if a.ndim != 2:
            raise ValueError("need a 2-d array")
        return cls(a.shape[0], a.shape[1], p, dense=a)

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> "ExactMatrix":
        return cls.dense(np.zeros((rows, cols), dtype=np.int64), p)

    @classmethod
    def identity(cls, n: int, p: int) -> "ExactMatrix":
        return cls.dense(np.eye(n, dtype=np.int64), p)

    @classmethod
    def from_triplets(cls, rows_idx, cols_idx, values, shape, p: int) -> "ExactMatrix":
        """Build from (row, col, value) triplets; duplicates are summed."""
        vals = np.asarray(values, dtype=np.int64) % p
        coo = sp.coo_matrix(
            (vals, (np.asarray(rows_idx), np.asarray(cols_idx))),
            shape=shape,
            dtype=np.int64,
        )
        coo.sum_duplicates()
        coo.data %= p
        coo.eliminate_zeros()
        m = cls(shape[0], shape[1], p, coo=coo)
        if m.density > DENSE_DENSITY:
            return cls.dense(coo.toarray(), p)
        return m

    # -- structure --------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_sparse(self) -> bool:
        return self._dense is None

    @property
    def nnz(self) -> int:
        if self.is_sparse:
            return int(self._coo.nnz)
        return int(np.count_nonzero(self._dense))

    @property
    def density(self) -> float:
        cells = self.rows * self.cols
        return self.nnz / cells if cells else 0.0

    def to_dense(self) -> np.ndarray:
        if self.is_sparse:
            return self._coo.toarray().astype(np.int64)
        return self._dense.copy()

    def to_coo(self) -> sp.coo_matrix:
        if self.is_sparse:
            return self._coo.copy()
        return sp.coo_matrix(self._dense)

    def transpose(self) -> "ExactMatrix":
        if self.is_sparse:
            t = self._coo.transpose().tocoo()
            return ExactMatrix(self.cols, self.rows, self.p, coo=t)
        return ExactMatrix.dense(self._dense.T, self.p)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.p != other.p:
            raise ValueError("mixed moduli")
        # int64 is safe: summing min(cols, 2**31) products below 2**62
        # would overflow only past ~2**32 terms, far beyond any size here.
        prod = (self.to_coo().tocsr() @ other.to_coo().tocsc()).tocoo()
        prod.data %= self.p
        prod.eliminate_zeros()
        return ExactMatrix(self.rows, other.cols, self.p, coo=prod)

    def is_zero(self) -> bool:
        return self.nnz == 0

    def __eq__(self, other):
        if isinstance(other, ExactMatrix):
            return (
                self.p == other.p
                and self.shape == other.shape
                and np.array_equal(self.to_dense(), other.to_dense())
            )
        return NotImplemented

    def __repr__(self):
        kind = "sparse" if self.is_sparse else "dense"
        return f"ExactMatrix({self.rows}x{self.cols} mod {self.p}, {kind}, nnz={self.nnz})"

    # -- rank / kernel ----------------------------------------------------
    def rank(self, method: str = "auto") -> int:
        """Rank over GF(p); dense and sparse paths agree exactly."""
        if method not in ("auto", "dense", "sparse"):
            raise ValueError(f"unknown method {method!r}")
        if method == "dense" or (method == "auto" and not self.is_sparse):
            return kernels.rank_mod_p(self.to_dense(), self.p)
        if method == "sparse" or self.is_sparse:
            return _rank_sparse(self.to_coo(), self.p)
        return kernels.rank_mod_p(self.to_dense(), self.p)

    def rref(self) -> tuple[np.ndarray, np.ndarray]:
        """(nonzero rref rows, pivot columns)."""
        return kernels.rref_mod_p(self.to_dense(), self.p)

    def kernel_basis(self) -> list[np.ndarray]:
        """Basis of the right null space {v : M v = 0}."""
        r, pivots = self.rref()
        pivset = set(int(c) for c in pivots)
        free = [c for c in range(self.cols) if c not in pivset]
        basis = []
        for f in free:
            v = np.zeros(self.cols, dtype=np.int64)
            v[f] = 1
            v[pivots] = (-r[:, f]) % self.p
            basis.append(v)
        return basis

    # -- export ------------------------------------------------------------
    def write_matrixmarket(self, target) -> None:
        """Coordinate MatrixMarket export, 1-based, canonical residues."""
        coo = self.to_coo()
        order = np.lexsort((coo.col, coo.row))
        lines = [
            "%%MatrixMarket matrix coordinate integer general",
            f"{self.rows} {self.cols} {coo.nnz}",
        ]
        for k in order:
            lines.append(f"{coo.row[k] + 1} {coo.col[k] + 1} {coo.data[k] % self.p}")
        text = "\n".join(lines) + "\n"
        if isinstance(target, (str, bytes)) or hasattr(target, "__fspath__"):
            with open(target, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            target.write(text)


def rank(m: ExactMatrix) -> int:
    return m.rank()


def kernel_basis(m: ExactMatrix) -> list[np.ndarray]:
    return m.kernel_basis()


def solve_homogeneous(constraints: ExactMatrix) -> list[np.ndarray]:
    """Basis of the solution space of ``constraints . v = 0``."""
    return constraints.kernel_basis()


def _rank_sparse(coo: sp.coo_matrix, p: int) -> int:
    """Triplet elimination with min-degree (Markowitz-style) pivoting.

    Processes pivots while the active block stays sparse, then densifies
    and finishes in the dense kernel.  Pivot ties break on the smallest
    (column, row) pair, so the result is deterministic.
    """
    rows: dict[int, dict[int, int]] = {}
    for r_, c_, v_ in zip(coo.row, coo.col, coo.data):
        rows.setdefault(int(r_), {})[int(c_)] = int(v_) % p
    col_rows: dict[int, set[int]] = {}
    for ri, row in rows.items():
        for c_ in row:
            col_rows.setdefault(c_, set()).add(ri)

    rank_count = 0
    while col_rows:
        active_rows = len(rows)
        active_cols = len(col_rows)
        nnz = sum(len(r_) for r_ in rows.values())
        if nnz > DENSE_DENSITY * active_rows * active_cols:
            break
        # cheapest column by count, then cheapest row inside it
        c = min(col_rows, key=lambda cc: (len(col_rows[cc]), cc))
        candidates = col_rows[c]
        r_id = min(candidates, key=lambda rr: (len(rows[rr]), rr))
        if (len(rows[r_id]) - 1) * (len(candidates) - 1) > MARKOWITZ_CAP:
            break
        pivot_row = rows.pop(r_id)
        inv = inv_mod(pivot_row[c], p)
        for cc in pivot_row:
            col_rows[cc].discard(r_id)
            if not col_rows[cc]:
                del col_rows[cc]
        targets = list(col_rows.get(c, ()))
        for rr in targets:
            row = rows[rr]
            f = row.pop(c) * inv % p
            col_rows[c].discard(rr)
            for cc, v_ in pivot_row.items():
                if cc == c:
                    continue
                nv = (row.get(cc, 0) - f * v_) % p
                if nv:
                    if cc not in row:
                        col_rows.setdefault(cc, set()).add(rr)
                    row[cc] = nv
                elif cc in row:
                    del row[cc]
                    col_rows[cc].discard(rr)
                    if not col_rows[cc]:
                        del col_rows[cc]
            if not row:
                del rows[rr]
        if c in col_rows and not col_rows[c]:
            del col_rows[c]
        rank_count += 1

    if rows:
        # densify the remaining block and finish in the dense kernel
        live_rows = sorted(rows)
        live_cols = sorted({c for row in rows.values() for c in row})
        col_pos = {c: i for i, c in enumerate(live_cols)}
        block = np.zeros((len(live_rows), len(live_cols)), dtype=np.int64)
        for i, rr in enumerate(live_rows):
            for cc, v_ in rows[rr].items():
                block[i, col_pos[cc]] = v_
        rank_count += kernels.rank_mod_p(block, p)
    return rank_count


# -- quotient spaces -------------------------------------------------------


@dataclass(frozen=True)
class QuotientProjection:
    """Coordinates on a pivot-complement of a subspace inside an ambient
    row space.

    ``sub_rref`` is the rref basis of the subspace, ``comp_rref`` an rref
    basis of the chosen complement (ambient vectors reduced modulo the
    subspace).  ``coords`` maps any ambient vector to its class in the
    quotient.
    """

    p: int
    sub_rref: np.ndarray
    sub_pivots: np.ndarray
    comp_rref: np.ndarray
    comp_pivots: np.ndarray

    @property
    def quotient_dim(self) -> int:
        return self.comp_rref.shape[0]

    def _reduce(self, v: np.ndarray, rref: np.ndarray, pivots: np.ndarray) -> np.ndarray:
        w = v.copy()
        for i in range(rref.shape[0]):
            c = int(pivots[i])
            if w[c]:
                w = (w - w[c] * rref[i]) % self.p
        return w

    def coords(self, v) -> np.ndarray:
        """Quotient coordinates of ``v``; NotASubspace if v is outside."""
        w = np.asarray(v, dtype=np.int64) % self.p
        w = self._reduce(w, self.sub_rref, self.sub_pivots)
        out = w[self.comp_pivots].copy()
        w = self._reduce(w, self.comp_rref, self.comp_pivots)
        if np.any(w):
            raise NotASubspace("vector outside the ambient space")
        return out


def quotient_dims(
    ambient_basis, subspace_basis, p: int
) -> tuple[int, QuotientProjection]:
    """Dimension of ambient/subspace plus a projection onto a complement.

    ``ambient_basis`` and ``subspace_basis`` are row stacks of vectors;
    the subspace must be contained in the ambient row space.
    """
    amb = np.atleast_2d(np.asarray(ambient_basis, dtype=np.int64)) % p
    if len(subspace_basis):
        sub = np.atleast_2d(np.asarray(subspace_basis, dtype=np.int64)) % p
    else:
        sub = np.zeros((0, amb.shape[1]), dtype=np.int64)

    sub_rref, sub_pivots = kernels.rref_mod_p(sub, p)
    amb_rank = kernels.rank_mod_p(amb.copy(), p)
    both = np.vstack([amb, sub])
    if kernels.rank_mod_p(both, p) != amb_rank:
        raise NotASubspace("subspace not contained in ambient span")

    proj = QuotientProjection(p, sub_rref, sub_pivots, np.zeros((0, amb.shape[1]), dtype=np.int64), np.zeros(0, dtype=np.int64))
    reduced = np.array([proj._reduce(row, sub_rref, sub_pivots) for row in amb], dtype=np.int64)
    comp_rref, comp_pivots = kernels.rref_mod_p(reduced, p)
    q = amb_rank - sub_rref.shape[0]
    if comp_rref.shape[0] != q:
        raise AssertionError("complement dimension mismatch")
    full = QuotientProjection(p, sub_rref, sub_pivots, comp_rref, comp_pivots)
    return q, full


# -- DVR degeneracy bound ---------------------------------------------------


class PolyMatrix:
    """Square matrix with entries in GF(p)[t], read as a matrix over the
    discrete valuation ring of power series in t."""

    __slots__ = ("n", "p", "entries", "degree_cap")

    def __init__(self, entries, degree_cap: int | None = None):
        n = len(entries)
        if any(len(row) != n for row in entries):
            raise ValueError("PolyMatrix must be square")
        if n == 0:
            raise ValueError("PolyMatrix must be nonempty")
        self.n = n
        self.p = entries[0][0].p
        self.entries = tuple(tuple(row) for row in entries)
        cap = max((e.degree for row in self.entries for e in row), default=0)
        self.degree_cap = cap if degree_cap is None else degree_cap
        if cap > self.degree_cap:
            raise ValueError("entry degree exceeds the declared cap")

    def at_zero(self, p_override: int | None = None) -> ExactMatrix:
        """Constant-term matrix M(0)."""
        p = self.p if p_override is None else p_override
        a = np.array(
            [[(e.coeffs[0] if e.coeffs else 0) for e in row] for row in self.entries],
            dtype=np.int64,
        )
        return ExactMatrix.dense(a, p)


class _RatFunc:
    """Fraction of GF(p)[t] polynomials, gcd-reduced, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: GFPoly, den: GFPoly | None = None):
        if den is None:
            den = GFPoly.one(num.p)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = GFPoly.one(num.p)
        elif den.degree == 0:
            c = inv_mod(den.coeffs[0], den.p)
            if c != 1:
                num = num * c
            den = GFPoly.one(num.p)
        else:
            # reduction only limits degree growth; defer it until the
            # operands are big enough for the gcd to pay for itself
            if num.degree + den.degree > 16:
                g = num.gcd(den)
                if g.degree > 0:
                    num, den = num // g, den // g
            lead_inv = inv_mod(den.leading(), den.p)
            if lead_inv != 1:
                num = num * lead_inv
                den = den * lead_inv
        self.num = num
        self.den = den

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def valuation(self) -> int:
        if self.is_zero():
            raise ValueError("valuation of zero")
        return self.num.valuation() - self.den.valuation()

    def __sub__(self, other: "_RatFunc") -> "_RatFunc":
        return _RatFunc(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __mul__(self, other: "_RatFunc") -> "_RatFunc":
        return _RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "_RatFunc") -> "_RatFunc":
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return _RatFunc(self.num * other.den, self.den * other.num)


def det_valuation(m: PolyMatrix) -> int:
    """t-adic valuation of det(M), via elimination over GF(p)(t).

    The determinant is the signed product of the pivots, so its valuation
    is accumulated pivot by pivot without ever expanding the polynomial.
    Raises SingularMatrix when det vanishes identically.
    """
    n = m.n
    work = [[_RatFunc(e) for e in row] for row in m.entries]
    val = 0
    for c in range(n):
        piv, piv_val = -1, None
        for i in range(c, n):
            if not work[i][c].is_zero():
                v = work[i][c].valuation()
                if piv_val is None or v < piv_val:
                    piv, piv_val = i, v
        if piv < 0:
            raise SingularMatrix("determinant is identically zero")
        if piv != c:
            work[c], work[piv] = work[piv], work[c]
        val += piv_val
        for i in range(c + 1, n):
            if work[i][c].is_zero():
                continue
            f = work[i][c] / work[c][c]
            for j in range(c + 1, n):
                if not work[c][j].is_zero():
                    work[i][j] = work[i][j] - f * work[c][j]
            work[i][c] = _RatFunc(GFPoly.zero(m.p))
    return val


def dvr_degeneracy_check(m: PolyMatrix) -> tuple[int, int, bool]:
    """(corank of M(0), valuation of det M, corank <= valuation).

    The flag is the content of the local multiplicity bound: a map that
    drops rank by r on the special fibre has determinant divisible by
    t**r.  It holds for every nonsingular ``m``.
    """
    detval = det_valuation(m)
    m0 = m.at_zero()
    corank0 = m.n - m0.rank()
    return corank0, detval, detval >= corank0


def poly_matrix_product(a, b, p: int) -> list[list[GFPoly]]:
    """Product of square GFPoly matrices (helper for building instances)."""
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = GFPoly.zero(p)
            for k_ in range(n):
                acc = acc + a[i][k_] * b[k_][j]
            row.append(acc)
        out.append(row)
    return out


def random_dvr_instance(n: int, exponents, rng, p: int) -> PolyMatrix:
    """U . diag(t**a_i) . V with random invertible constant U, V.

    By construction the instance has corank #{a_i > 0} at t = 0 and
    determinant valuation sum(a_i); it exercises the degeneracy bound
    with both sides known in advance.
    """
    if len(exponents) != n:
        raise ValueError("need one exponent per row")

    def random_invertible() -> np.ndarray:
        while True:
            u = np.array(
                [[rng.rand_mod(p) for _ in range(n)] for _ in range(n)],
                dtype=np.int64,
            )
            if kernels.rank_mod_p(u.copy(), p) == n:
                return u

    u = random_invertible()
    v = random_invertible()
    u_poly = [[GFPoly((int(u[i, j]),), p) for j in range(n)] for i in range(n)]
    v_poly = [[GFPoly((int(v[i, j]),), p) for j in range(n)] for i in range(n)]
    diag = [
        [
            GFPoly.monomial(exponents[i], 1, p) if i == j else GFPoly.zero(p)
            for j in range(n)
        ]
        for i in range(n)
    ]
    return PolyMatrix(poly_matrix_product(poly_matrix_product(u_poly, diag, p), v_poly, p))
