import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import rank_bruteforce
from syzlab.errors import NotASubspace, SingularMatrix
from syzlab.fieldmath import DEFAULT_PRIME, GFPoly
from syzlab.linalg import (
    ExactMatrix,
    PolyMatrix,
    dvr_degeneracy_check,
    quotient_dims,
    random_dvr_instance,
    solve_homogeneous,
)
from syzlab.rng import XorShift64Star

P = DEFAULT_PRIME


def random_matrix(rng, m, n, p=P, density=1.0):
    a = np.zeros((m, n), dtype=np.int64)
    for i in range(m):
        for j in range(n):
            if density >= 1.0 or rng.rand_mod(1000) < density * 1000:
                a[i, j] = rng.rand_mod(p)
    return a


class TestRank:
    def test_identity(self):
        assert ExactMatrix.identity(3, P).rank() == 3

    def test_zero(self):
        assert ExactMatrix.zeros(4, 7, P).rank() == 0

    def test_against_bruteforce(self):
        rng = XorShift64Star(99)
        for trial in range(40):
            m, n = 1 + rng.randrange(8), 1 + rng.randrange(8)
            a = random_matrix(rng, m, n, density=0.7)
            assert ExactMatrix.dense(a, P).rank() == rank_bruteforce(a.tolist(), P)

    def test_transpose_invariance_200_matrices(self):
        rng = XorShift64Star(7)
        for trial in range(200):
            m, n = 1 + rng.randrange(10), 1 + rng.randrange(10)
            a = random_matrix(rng, m, n, density=0.5)
            M = ExactMatrix.dense(a, P)
            assert M.rank() == M.transpose().rank()

    def test_sparse_and_dense_paths_agree(self):
        rng = XorShift64Star(13)
        for trial in range(30):
            m, n = 2 + rng.randrange(20), 2 + rng.randrange(20)
            a = random_matrix(rng, m, n, density=0.15)
            nz = np.nonzero(a)
            M = ExactMatrix.from_triplets(nz[0], nz[1], a[nz], (m, n), P)
            assert M.rank(method="sparse") == M.rank(method="dense")

    def test_large_prime_entries_stay_exact(self):
        # near-2**31 prime: elimination products brush the int64 ceiling
        p = 2147483629
        rng = XorShift64Star(3)
        a = np.array(
            [[p - 1 - rng.randrange(5) for _ in range(6)] for _ in range(6)],
            dtype=np.int64,
        )
        assert ExactMatrix.dense(a, p).rank() == rank_bruteforce(a.tolist(), p)


class TestKernel:
    def test_zero_map_full_kernel(self):
        assert len(ExactMatrix.zeros(3, 5, P).kernel_basis()) == 5

    def test_invertible_empty_kernel(self):
        rng = XorShift64Star(21)
        while True:
            a = random_matrix(rng, 5, 5)
            if ExactMatrix.dense(a, P).rank() == 5:
                break
        assert ExactMatrix.dense(a, P).kernel_basis() == []

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 10**6))
    def test_rank_nullity_and_membership(self, seed):
        rng = XorShift64Star(seed)
        m, n = 1 + rng.randrange(9), 1 + rng.randrange(9)
        a = random_matrix(rng, m, n, density=0.6)
        M = ExactMatrix.dense(a, P)
        basis = M.kernel_basis()
        assert M.rank() + len(basis) == n
        for v in basis:
            assert not np.any(a @ v % P)

    def test_no_constraints_gives_full_space(self):
        with_no_rows = ExactMatrix.zeros(0, 6, P)
        assert len(solve_homogeneous(with_no_rows)) == 6


class TestQuotient:
    def test_quotient_by_zero_subspace(self):
        amb = np.eye(4, dtype=np.int64)
        q, proj = quotient_dims(amb, [], P)
        assert q == 4
        v = np.array([1, 2, 3, 4])
        assert proj.coords(v).tolist() == [1, 2, 3, 4]

    def test_not_a_subspace(self):
        amb = np.array([[1, 0, 0], [0, 1, 0]], dtype=np.int64)
        bad = np.array([[0, 0, 1]], dtype=np.int64)
        with pytest.raises(NotASubspace):
            quotient_dims(amb, bad, P)

    def test_coords_linear_and_well_defined(self):
        rng = XorShift64Star(17)
        amb = random_matrix(rng, 6, 10)
        sub = np.array([amb[0], (amb[1] + 2 * amb[2]) % P], dtype=np.int64)
        q, proj = quotient_dims(amb, sub, P)
        assert q == ExactMatrix.dense(amb, P).rank() - 2
        v = amb[3]
        w = (v + 5 * sub[0] + 11 * sub[1]) % P
        assert proj.coords(v).tolist() == proj.coords(w).tolist()
        two_v = (2 * v) % P
        assert proj.coords(two_v).tolist() == ((2 * proj.coords(v)) % P).tolist()

    def test_foreign_vector_rejected(self):
        amb = np.array([[1, 0, 0, 0], [0, 1, 0, 0]], dtype=np.int64)
        q, proj = quotient_dims(amb, [], P)
        with pytest.raises(NotASubspace):
            proj.coords(np.array([0, 0, 1, 0]))


class TestDVR:
    def t(self, *coeffs):
        return GFPoly(coeffs, P)

    def test_diag_t_t_1(self):
        m = PolyMatrix(
            [
                [self.t(0, 1), self.t(), self.t()],
                [self.t(), self.t(0, 1), self.t()],
                [self.t(), self.t(), self.t(1)],
            ]
        )
        assert dvr_degeneracy_check(m) == (2, 2, True)

    def test_jordan_block(self):
        m = PolyMatrix([[self.t(0, 1), self.t(1)], [self.t(), self.t(0, 1)]])
        assert dvr_degeneracy_check(m) == (1, 2, True)

    def test_singular_matrix_rejected(self):
        m = PolyMatrix([[self.t(0, 1), self.t(0, 1)], [self.t(0, 1), self.t(0, 1)]])
        with pytest.raises(SingularMatrix):
            dvr_degeneracy_check(m)

    def test_size_one(self):
        m = PolyMatrix([[self.t(0, 0, 1)]])
        assert dvr_degeneracy_check(m) == (1, 2, True)

    def test_random_smith_instances(self):
        rng = XorShift64Star(31)
        for trial in range(100):
            n = 1 + rng.randrange(8)
            exps = [rng.randrange(4) for _ in range(n)]
            inst = random_dvr_instance(n, exps, rng, P)
            corank0, detval, ok = dvr_degeneracy_check(inst)
            assert ok
            assert corank0 == sum(1 for a in exps if a > 0)
            assert detval == sum(exps)


class TestMatrixMarket:
    def test_exact_format(self):
        a = np.array([[1, 0], [0, P - 1]], dtype=np.int64)
        buf = io.StringIO()
        ExactMatrix.dense(a, P).write_matrixmarket(buf)
        assert buf.getvalue() == (
            "%%MatrixMarket matrix coordinate integer general\n"
            f"2 2 2\n1 1 1\n2 2 {P - 1}\n"
        )

    def test_roundtrip_via_scipy(self):
        import scipy.io

        rng = XorShift64Star(55)
        a = random_matrix(rng, 5, 4, density=0.5)
        buf = io.StringIO()
        ExactMatrix.dense(a, P).write_matrixmarket(buf)
        buf.seek(0)
        back = scipy.io.mmread(buf).toarray().astype(np.int64)
        assert np.array_equal(back, a)


class TestMatmul:
    def test_product_matches_numpy(self):
        rng = XorShift64Star(77)
        a = random_matrix(rng, 4, 6)
        b = random_matrix(rng, 6, 3)
        prod = ExactMatrix.dense(a, P) @ ExactMatrix.dense(b, P)
        assert np.array_equal(prod.to_dense(), (a @ b) % P)
