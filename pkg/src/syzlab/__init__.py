"""syzlab: exact linear-strand syzygies of canonical curves and scrolls
over prime fields, plus a symbolic verifier for the class of the syzygy
jump divisor on the moduli of odd-genus curves."""

from .errors import (
    BadIndex,
    DegenerateInstance,
    IndexOutOfRange,
    InsufficientPoints,
    NonIntegerResult,
    NotASubspace,
    OrderOutOfRange,
    SingularMatrix,
    SyzlabError,
    TruncationTooSmall,
    UnsupportedGenus,
    ZeroInverse,
)
from .fieldmath import (
    DEFAULT_PRIME,
    GFPoly,
    PrimeFieldElement,
    field_inverse,
    is_prime,
    poly_roots_gfp,
)
from .kernels import BACKEND
from .koszul import (
    ExteriorIndex,
    MulTable,
    StrandResult,
    delta1_matrix,
    delta2_matrix,
    eagon_northcott_strand,
    extra_syzygies,
    kp1,
    linear_strand,
    subset_rank,
    subset_unrank,
)
from .linalg import (
    ExactMatrix,
    PolyMatrix,
    dvr_degeneracy_check,
    kernel_basis,
    quotient_dims,
    rank,
    solve_homogeneous,
)
from .models import (
    BidegNodalCurve,
    CIFixture,
    NodalPlaneCurve,
    ScrollModel,
    ci_mul_table,
    fit_max_clifford_plane,
    fit_nodal_bideg,
    fit_nodal_bideg_general,
    fit_nodal_plane,
    gonal_parameters,
    max_clifford_parameters,
    model_selfcheck,
    scroll_mul_table,
)
from .classverify import (
    ClassResult,
    KClassSeries,
    assemble_n_from_pushforwards,
    check_series_identities,
    harris_mumford_class,
    mumford_coeff,
    n_closed_form,
    n_from_binomials,
    n_from_bracket,
    rank_identity,
    verify_class,
    verify_class_range,
)
from .series import BigRational, SeriesQ, big_binom, series_coeff, series_expand

__version__ = "0.1.0"
