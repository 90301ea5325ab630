import numpy as np
import pytest

from syzlab.errors import DegenerateInstance, InsufficientPoints, UnsupportedGenus
from syzlab.fieldmath import DEFAULT_PRIME
from syzlab.koszul import extra_syzygies, kp1, linear_strand
from syzlab.models import (
    BidegNodalCurve,
    NodalPlaneCurve,
    ScrollModel,
    ci_mul_table,
    fit_max_clifford_plane,
    fit_nodal_bideg,
    fit_nodal_bideg_general,
    fit_nodal_plane,
    gonal_parameters,
    make_ci_fixture,
    max_clifford_parameters,
    model_from_dict,
    model_selfcheck,
    scroll_mul_table,
)

P = DEFAULT_PRIME


class TestPlaneFit:
    def test_genus5_sextic(self):
        m = fit_nodal_plane(6, 5, seed=1)
        assert m.genus == 5
        assert m.adjoint_basis().shape[0] == 5

    def test_genus7_septic_dimensions(self):
        m = fit_nodal_plane(7, 8, seed=1)
        assert m.genus == 7
        assert m.solution_dim == 12  # 36 coefficients - 24 node conditions
        assert m.adjoint_basis().shape[0] == 7

    def test_genus9_octic(self):
        m = fit_nodal_plane(8, 12, seed=1)
        assert m.genus == 9
        assert m.adjoint_basis().shape[0] == 9

    def test_selfcheck_passes(self):
        report = fit_nodal_plane(6, 5, seed=2).selfcheck()
        assert report.all_ok, report.to_list()

    def test_too_many_nodes_rejected(self):
        with pytest.raises(ValueError):
            fit_nodal_plane(3, 10)

    def test_small_prime_rejected(self):
        with pytest.raises(ValueError):
            fit_nodal_plane(6, 5, prime=97)


class TestHandBuiltDegenerations:
    def test_cuspidal_node_fails_selfcheck(self):
        # y^2 z - x^3 has a cusp at the origin of the z=1 chart
        from syzlab.forms import PlaneBasis

        basis = PlaneBasis(3)
        coeffs = np.zeros(basis.size, dtype=np.int64)
        coeffs[basis.index[(0, 2, 1)]] = 1
        coeffs[basis.index[(3, 0, 0)]] = P - 1
        cusp = NodalPlaneCurve(P, 3, 1, [(0, 0)], coeffs, seed=0)
        report = model_selfcheck(cusp)
        names = {item.name: item.ok for item in report.items}
        assert names["form_double_at_nodes"]
        assert not names["nodes_nondegenerate"]

    def test_collinear_nodes_break_adjoint_count(self):
        # five nodes on one line: cubics through them are forced to
        # contain the line, so the adjoint count jumps from 5 to 6
        from syzlab.forms import PlaneBasis
        from syzlab.linalg import ExactMatrix, solve_homogeneous
        from syzlab.rng import XorShift64Star

        rng = XorShift64Star(4)
        nodes = [(i + 1, (3 * (i + 1)) % P) for i in range(5)]  # on y = 3x
        basis = PlaneBasis(6)
        shell = NodalPlaneCurve(P, 6, 5, nodes, np.zeros(basis.size), 0)
        cons = ExactMatrix.dense(shell.node_constraints(basis, double=True), P)
        vecs = solve_homogeneous(cons)
        coeffs = np.zeros(basis.size, dtype=np.int64)
        for v in vecs:
            coeffs = (coeffs + rng.rand_mod(P) * v) % P
        model = NodalPlaneCurve(P, 6, 5, nodes, coeffs, 0)
        with pytest.raises(DegenerateInstance):
            model.adjoint_basis()


class TestBidegFit:
    @pytest.mark.parametrize("k,genus", [(3, 5), (4, 7), (5, 9)])
    def test_gonal_models(self, k, genus):
        m = fit_nodal_bideg(k, seed=1)
        assert m.genus == genus
        assert m.adjoint_basis().shape[0] == genus

    def test_gonal_parameters(self):
        assert gonal_parameters(3) == (3, 4, 1)
        assert gonal_parameters(4) == (4, 5, 5)
        assert gonal_parameters(5) == (5, 6, 11)

    def test_selfcheck(self):
        report = fit_nodal_bideg(3, seed=3).selfcheck()
        assert report.all_ok, report.to_list()


class TestMulTables:
    def test_plane_g7_quotient_dims(self):
        m = fit_nodal_plane(7, 8, seed=1)
        ambient, sub = m._w2_spaces()
        assert ambient.shape[0] == 21  # 45 coefficients - 24 double conditions
        assert sub.shape[0] == 3  # curve times linear forms
        tab = m.mul_table_quotient()
        assert (tab.h0L, tab.h0L2) == (7, 18)

    def test_plane_g5_quotient_dims(self):
        m = fit_nodal_plane(6, 5, seed=1)
        ambient, sub = m._w2_spaces()
        assert ambient.shape[0] == 13 and sub.shape[0] == 1
        assert m.mul_table_quotient().h0L2 == 12

    def test_bideg_g7_quotient_dims(self):
        m = fit_nodal_bideg_general(4, 4, 2, seed=1)
        ambient, sub = m._w2_spaces()
        assert ambient.shape[0] == 19 and sub.shape[0] == 1
        assert m.mul_table_quotient().h0L2 == 18

    @pytest.mark.parametrize("genus,expected", [(4, (4, 9)), (5, (5, 12))])
    def test_ci_dims(self, genus, expected):
        tab = ci_mul_table(genus, seed=1)
        assert (tab.h0L, tab.h0L2) == expected

    def test_ci_k11(self):
        assert kp1(ci_mul_table(5, seed=4), 1) == 3
        assert kp1(ci_mul_table(4, seed=4), 1) == 1

    def test_ci_unsupported_genus(self):
        with pytest.raises(UnsupportedGenus):
            make_ci_fixture(6)

    @pytest.mark.parametrize("k,dims", [(3, (5, 12)), (4, (7, 22)), (5, (9, 35))])
    def test_scroll_dims(self, k, dims):
        tab = scroll_mul_table(k)
        assert (tab.h0L, tab.h0L2) == dims


class TestSamplePoints:
    def test_plane_points_on_curve_and_smooth(self):
        m = fit_nodal_plane(7, 8, seed=1)
        pts = m.sample_points(70)
        assert len(pts) == len(set(pts)) == 70
        for x0, y0 in pts:
            assert m.basis.eval_row(x0, y0, P) @ m.F % P == 0
            assert (x0, y0) not in set(m.nodes)

    def test_bideg_points_on_curve(self):
        m = fit_nodal_bideg(3, seed=1)
        pts = m.sample_points(50)
        assert len(pts) == 50
        for u0, s0 in pts:
            assert m.basis.eval_row(u0, s0, P) @ m.F % P == 0

    def test_too_many_points_rejected(self):
        m = fit_nodal_bideg(3, seed=1)
        with pytest.raises(InsufficientPoints):
            m.sample_points(P // 2 + 1)


class TestEvalRoute:
    def test_product_space_dimension_g7(self):
        m = fit_nodal_plane(7, 8, seed=1)
        tab = m.mul_table_eval()
        assert tab.h0L2 == 18

    def test_minimum_sample_size_enforced(self):
        m = fit_nodal_bideg(3, seed=1)
        with pytest.raises(InsufficientPoints):
            m.mul_table_eval(n=8 * 5 - 8)

    def test_route_agreement_g5_trigonal(self):
        m = fit_nodal_bideg(3, seed=2)
        assert linear_strand(m.mul_table_quotient()).dims == linear_strand(
            m.mul_table_eval()
        ).dims

    def test_route_agreement_g7_gonal(self):
        m = fit_nodal_bideg(4, seed=2)
        assert linear_strand(m.mul_table_quotient()).dims == linear_strand(
            m.mul_table_eval()
        ).dims


class TestStrandValues:
    def test_trigonal_strand(self):
        tab = fit_nodal_bideg(3, seed=1).mul_table_quotient()
        assert linear_strand(tab).dims == [3, 2, 0]

    def test_max_clifford_g7_strand(self):
        tab = fit_max_clifford_plane(4, seed=1).mul_table_quotient()
        assert linear_strand(tab).dims == [10, 16, 0, 0, 0]

    def test_second_ruling_pencil_inflates_syzygies(self):
        # bidegree (4,4) has two degree-4 ruling pencils; the canonical
        # model then sits on a sextic del Pezzo whose strand forces
        # K_{3,1} >= 9, far above the 3 of a generic 4-gonal curve
        m = fit_nodal_bideg_general(4, 4, 2, seed=1)
        assert extra_syzygies(m.mul_table_quotient(), 4) == 9

    def test_max_clifford_parameters(self):
        assert max_clifford_parameters(3) == (6, 5)
        assert max_clifford_parameters(4) == (7, 8)
        assert max_clifford_parameters(5) == (8, 12)


class TestSerialization:
    def test_plane_roundtrip(self):
        m = fit_nodal_plane(6, 5, seed=9)
        doc = m.to_dict()
        back = model_from_dict(doc)
        assert isinstance(back, NodalPlaneCurve)
        assert np.array_equal(back.F, m.F) and back.nodes == m.nodes
        assert linear_strand(back.mul_table_quotient()).dims == linear_strand(
            m.mul_table_quotient()
        ).dims

    def test_bideg_roundtrip(self):
        m = fit_nodal_bideg(3, seed=9)
        back = model_from_dict(m.to_dict())
        assert isinstance(back, BidegNodalCurve)
        assert (back.a, back.b) == (m.a, m.b)

    def test_scroll_and_ci_roundtrip(self):
        s = ScrollModel(4)
        assert model_from_dict(s.to_dict()).k == 4
        fx = make_ci_fixture(5, seed=1)
        back = model_from_dict(fx.to_dict())
        assert np.array_equal(back.quadrics, fx.quadrics)

    def test_fit_is_deterministic_in_seed(self):
        a = fit_nodal_plane(6, 5, seed=42)
        b = fit_nodal_plane(6, 5, seed=42)
        assert np.array_equal(a.F, b.F) and a.nodes == b.nodes
