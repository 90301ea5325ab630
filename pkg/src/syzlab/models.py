"""Explicit curve and scroll models feeding the strand computations.

Every curve model produces a :class:`~syzlab.koszul.MulTable` whose
degree-1 sections are the canonical sections of a genus-g curve:

* nodal plane curves (degree d, delta ordinary nodes), with the
  canonical system cut out by the adjoint forms of degree d-3 through
  the nodes;
* nodal curves of bidegree (a, b) on P1 x P1, adjoints of bidegree
  (a-2, b-2) through the nodes;
* rational normal scrolls of a split bundle of rank k-1 and degree k
  on the line, via their evident bigraded monomial sections;
* complete-intersection fixtures in genus 4 and 5 (quadrics only - the
  degree-2 part of the coordinate ring needs nothing else).

"General position" of random draws is never certified a priori: every
construction re-derives its expected dimension counts and a failed
count raises DegenerateInstance, with seeded retries in the fit
functions.  Over a large prime field a random draw is generic with
overwhelming probability, and each failure mode is caught by one of
the dimension guards.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateInstance, InsufficientPoints, UnsupportedGenus
from .fieldmath import DEFAULT_PRIME, GFPoly, is_prime, poly_roots_gfp
from .forms import BidegBasis, PlaneBasis, quadratic_nondegenerate
from .koszul import MulTable
from .linalg import ExactMatrix, quotient_dims, solve_homogeneous
from .rng import XorShift64Star, derive_seed

FIT_ATTEMPTS = 20
POINTS_PER_GENUS = 10
MIN_PRIME = 1000

MODEL_SCHEMA = "syzlab-model/1"


def _require_prime(prime: int) -> None:
    if prime < MIN_PRIME or not is_prime(prime):
        raise ValueError(f"prime must be a prime >= {MIN_PRIME}, got {prime}")


# -- check reports -----------------------------------------------------------


@dataclass
class CheckItem:
    name: str
    ok: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


@dataclass
class CheckReport:
    items: list[CheckItem] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.items.append(CheckItem(name, bool(ok), detail))

    @property
    def all_ok(self) -> bool:
        return all(item.ok for item in self.items)

    def to_list(self) -> list[dict]:
        return [item.to_dict() for item in self.items]


# -- nodal plane curves ------------------------------------------------------


class NodalPlaneCurve:
    """Irreducible-by-genericity plane curve of degree d with delta nodes."""

    kind = "plane"

    def __init__(self, prime, d, delta, nodes, coeffs, seed=0, solution_dim=None):
        self.p = int(prime)
        self.d = int(d)
        self.delta = int(delta)
        self.nodes = [tuple(int(c) for c in node) for node in nodes]
        self.basis = PlaneBasis(self.d)
        self.F = np.asarray(coeffs, dtype=np.int64) % self.p
        self.seed = int(seed)
        self.solution_dim = solution_dim

    @property
    def genus(self) -> int:
        return (self.d - 1) * (self.d - 2) // 2 - self.delta

    # adjoint system: degree d-3 forms through the nodes
    @property
    def adjoint_degree(self) -> int:
        return self.d - 3

    def node_constraints(self, basis, double: bool) -> np.ndarray:
        rows = []
        for x0, y0 in self.nodes:
            if double:
                rows.append(basis.node_rows(x0, y0, self.p))
            else:
                rows.append(basis.eval_row(x0, y0, self.p)[None, :])
        return np.vstack(rows) if rows else np.zeros((0, basis.size), dtype=np.int64)

    def adjoint_basis(self) -> np.ndarray:
        basis = PlaneBasis(self.adjoint_degree)
        cons = ExactMatrix.dense(self.node_constraints(basis, double=False), self.p)
        vecs = solve_homogeneous(cons)
        if len(vecs) != self.genus:
            raise DegenerateInstance(
                f"adjoint dimension {len(vecs)} != genus {self.genus}"
            )
        return np.array(vecs, dtype=np.int64)

    def _w2_spaces(self):
        """(ambient basis, quotienting subspace) for degree-2 sections.

        Degree-2 canonical sections are forms of degree 2(d-3) doubly
        vanishing at the nodes, modulo multiples of the curve equation
        by forms of degree d-6.
        """
        big = PlaneBasis(2 * self.d - 6)
        cons = ExactMatrix.dense(self.node_constraints(big, double=True), self.p)
        ambient = solve_homogeneous(cons)
        sub = []
        if self.d >= 6:
            cof = PlaneBasis(self.d - 6)
            for j in range(cof.size):
                e = np.zeros(cof.size, dtype=np.int64)
                e[j] = 1
                sub.append(self.basis.multiply(self.F, cof, e, self.p))
        return np.array(ambient, dtype=np.int64), np.array(sub, dtype=np.int64)

    def mul_table_quotient(self) -> MulTable:
        return _nodal_mul_table_quotient(self)

    def sample_points(self, n: int, rng: XorShift64Star | None = None):
        return _sample_points_plane(self, n, rng)

    def mul_table_eval(self, n: int | None = None) -> MulTable:
        return _nodal_mul_table_eval(self, n)

    def selfcheck(self) -> CheckReport:
        return model_selfcheck(self)

    def to_dict(self) -> dict:
        return {
            "schema": MODEL_SCHEMA,
            "kind": self.kind,
            "prime": self.p,
            "seed": self.seed,
            "degree": self.d,
            "nodes": [list(node) for node in self.nodes],
            "coefficients": [int(c) for c in self.F],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "NodalPlaneCurve":
        return cls(
            doc["prime"],
            doc["degree"],
            len(doc["nodes"]),
            doc["nodes"],
            doc["coefficients"],
            seed=doc.get("seed", 0),
        )


class BidegNodalCurve:
    """Nodal curve of bidegree (a, b) on P1 x P1.

    The projection to the second factor has fibers of a points, so the
    curve carries a base-point-free pencil of degree a; the other
    projection has degree b.
    """

    kind = "bideg"

    def __init__(self, prime, a, b, nodes, coeffs, seed=0, solution_dim=None):
        self.p = int(prime)
        self.a = int(a)
        self.b = int(b)
        self.nodes = [tuple(int(c) for c in node) for node in nodes]
        self.basis = BidegBasis(self.a, self.b)
        self.F = np.asarray(coeffs, dtype=np.int64) % self.p
        self.seed = int(seed)
        self.solution_dim = solution_dim

    @property
    def delta(self) -> int:
        return len(self.nodes)

    @property
    def genus(self) -> int:
        return (self.a - 1) * (self.b - 1) - self.delta

    def node_constraints(self, basis, double: bool) -> np.ndarray:
        rows = []
        for u0, s0 in self.nodes:
            if double:
                rows.append(basis.node_rows(u0, s0, self.p))
            else:
                rows.append(basis.eval_row(u0, s0, self.p)[None, :])
        return np.vstack(rows) if rows else np.zeros((0, basis.size), dtype=np.int64)

    def adjoint_basis(self) -> np.ndarray:
        basis = BidegBasis(self.a - 2, self.b - 2)
        cons = ExactMatrix.dense(self.node_constraints(basis, double=False), self.p)
        vecs = solve_homogeneous(cons)
        if len(vecs) != self.genus:
            raise DegenerateInstance(
                f"adjoint dimension {len(vecs)} != genus {self.genus}"
            )
        return np.array(vecs, dtype=np.int64)

    def _w2_spaces(self):
        big = BidegBasis(2 * self.a - 4, 2 * self.b - 4)
        cons = ExactMatrix.dense(self.node_constraints(big, double=True), self.p)
        ambient = solve_homogeneous(cons)
        sub = []
        if self.a >= 4 and self.b >= 4:
            cof = BidegBasis(self.a - 4, self.b - 4)
            for j in range(cof.size):
                e = np.zeros(cof.size, dtype=np.int64)
                e[j] = 1
                sub.append(self.basis.multiply(self.F, cof, e, self.p))
        return np.array(ambient, dtype=np.int64), np.array(sub, dtype=np.int64)

    def mul_table_quotient(self) -> MulTable:
        return _nodal_mul_table_quotient(self)

    def sample_points(self, n: int, rng: XorShift64Star | None = None):
        return _sample_points_bideg(self, n, rng)

    def mul_table_eval(self, n: int | None = None) -> MulTable:
        return _nodal_mul_table_eval(self, n)

    def selfcheck(self) -> CheckReport:
        return model_selfcheck(self)

    def to_dict(self) -> dict:
        return {
            "schema": MODEL_SCHEMA,
            "kind": self.kind,
            "prime": self.p,
            "seed": self.seed,
            "bidegree": [self.a, self.b],
            "nodes": [list(node) for node in self.nodes],
            "coefficients": [int(c) for c in self.F],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "BidegNodalCurve":
        a, b = doc["bidegree"]
        return cls(
            doc["prime"],
            a,
            b,
            doc["nodes"],
            doc["coefficients"],
            seed=doc.get("seed", 0),
        )


# -- shared nodal-model machinery -------------------------------------------


def _adjoint_small_basis(model):
    if model.kind == "plane":
        return PlaneBasis(model.adjoint_degree)
    return BidegBasis(model.a - 2, model.b - 2)


def _adjoint_products(model, adj: np.ndarray):
    """Pairwise products of adjoint basis forms, as coefficient vectors."""
    small = _adjoint_small_basis(model)
    g = adj.shape[0]
    products = {}
    for i in range(g):
        for j in range(i, g):
            products[(i, j)] = small.multiply(adj[i], small, adj[j], model.p)
    return products


def _nodal_mul_table_quotient(model) -> MulTable:
    g = model.genus
    adj = model.adjoint_basis()
    ambient, sub = model._w2_spaces()
    q, proj = quotient_dims(ambient, sub, model.p)
    if q != 3 * g - 3:
        raise DegenerateInstance(f"h0(2K) quotient dim {q} != {3 * g - 3}")
    products = _adjoint_products(model, adj)
    mu = np.zeros((g, g, q), dtype=np.int64)
    for (i, j), vec in products.items():
        coords = proj.coords(vec)
        mu[i, j] = coords
        mu[j, i] = coords
    return MulTable(mu, model.p)


def _sample_points_plane(model, n, rng):
    p = model.p
    if n > p // 2:
        raise InsufficientPoints(f"cannot ask for {n} points over GF({p})")
    if rng is None:
        rng = XorShift64Star(derive_seed(model.seed, 0x90E7))
    node_set = set(model.nodes)
    dbasis = model.basis
    points, seen_x = [], set()
    attempts = 0
    while len(points) < n:
        attempts += 1
        if attempts > 8 * n + 100:
            raise InsufficientPoints(f"only found {len(points)} of {n} points")
        x0 = rng.rand_mod(p)
        if x0 in seen_x:
            continue
        seen_x.add(x0)
        fy = model.basis.univariate_in_y(model.F, x0, p)
        poly = GFPoly(fy, p)
        if poly.is_zero():
            continue
        for root in sorted(r.value for r in poly_roots_gfp(poly, rng)):
            pt = (x0, root)
            if pt in node_set or pt in set(points):
                continue
            fx_val = int(dbasis.eval_row_dx(x0, root, p) @ model.F % p)
            fy_val = int(dbasis.eval_row_dy(x0, root, p) @ model.F % p)
            if fx_val == 0 and fy_val == 0:
                continue  # singular point; never a valid sample
            points.append(pt)
            if len(points) == n:
                break
    return points


def _sample_points_bideg(model, n, rng):
    p = model.p
    if n > p // 2:
        raise InsufficientPoints(f"cannot ask for {n} points over GF({p})")
    if rng is None:
        rng = XorShift64Star(derive_seed(model.seed, 0x90E7))
    node_set = set(model.nodes)
    points, seen_u = [], set()
    attempts = 0
    while len(points) < n:
        attempts += 1
        if attempts > 8 * n + 100:
            raise InsufficientPoints(f"only found {len(points)} of {n} points")
        u0 = rng.rand_mod(p)
        if u0 in seen_u:
            continue
        seen_u.add(u0)
        fs = model.basis.univariate_in_s(model.F, u0, p)
        poly = GFPoly(fs, p)
        if poly.is_zero():
            continue
        for root in sorted(r.value for r in poly_roots_gfp(poly, rng)):
            pt = (u0, root)
            if pt in node_set or pt in set(points):
                continue
            du_val = int(model.basis.eval_row_du(u0, root, p) @ model.F % p)
            ds_val = int(model.basis.eval_row_ds(u0, root, p) @ model.F % p)
            if du_val == 0 and ds_val == 0:
                continue
            points.append(pt)
            if len(points) == n:
                break
    return points


def _nodal_mul_table_eval(model, n=None) -> MulTable:
    """Independent multiplication table from point evaluation.

    The degree-1 sections are evaluated at sampled smooth points; the
    degree-2 space is recovered as the row space of all pairwise
    products, which pins it exactly once the sample exceeds the degree
    of the square of the canonical system.
    """
    g = model.genus
    if n is None:
        n = POINTS_PER_GENUS * g
    if n < 2 * (4 * g - 4) + 1:
        raise InsufficientPoints(f"need at least {8 * g - 7} points, got {n}")
    p = model.p
    adj = model.adjoint_basis()
    pts = model.sample_points(n)
    small = _adjoint_small_basis(model)
    eval_rows = np.array(
        [small.eval_row(x0, y0, p) for x0, y0 in pts], dtype=np.int64
    )
    v_eval = (adj @ eval_rows.T) % p
    if ExactMatrix.dense(v_eval, p).rank() != g:
        raise DegenerateInstance("canonical sections not independent on sample")
    pairs = [(i, j) for i in range(g) for j in range(i, g)]
    prods = np.array([v_eval[i] * v_eval[j] % p for i, j in pairs], dtype=np.int64)
    rref, pivots = ExactMatrix.dense(prods, p).rref()
    if rref.shape[0] != 3 * g - 3:
        raise DegenerateInstance(
            f"product row space has dim {rref.shape[0]} != {3 * g - 3}"
        )
    mu = np.zeros((g, g, 3 * g - 3), dtype=np.int64)
    for (i, j), row in zip(pairs, prods):
        coords = row[pivots]
        if np.any((coords @ rref) % p != row % p):
            raise DegenerateInstance("product outside the recovered degree-2 space")
        mu[i, j] = coords
        mu[j, i] = coords
    return MulTable(mu, p)


# -- fitting -----------------------------------------------------------------


def _draw_distinct_pairs(rng, count, p):
    nodes = []
    seen = set()
    while len(nodes) < count:
        pt = (rng.rand_mod(p), rng.rand_mod(p))
        if pt not in seen:
            seen.add(pt)
            nodes.append(pt)
    return nodes


def _fit_nodal(make_model, prime, seed, what):
    """Shared retry loop: draw, solve for the form, run integrity checks."""
    last = "no attempts made"
    for attempt in range(FIT_ATTEMPTS):
        rng = XorShift64Star(derive_seed(seed, attempt))
        try:
            model = make_model(rng)
            _validate_nodal(model)
            return model
        except DegenerateInstance as exc:
            last = str(exc)
    raise DegenerateInstance(f"{what}: all {FIT_ATTEMPTS} attempts degenerate ({last})")


def _random_form_in_kernel(cons: ExactMatrix, rng, p) -> tuple[np.ndarray, int]:
    vecs = solve_homogeneous(cons)
    if not vecs:
        raise DegenerateInstance("no form satisfies the node constraints")
    coeffs = np.zeros(cons.cols, dtype=np.int64)
    for v in vecs:
        coeffs = (coeffs + rng.rand_mod(p) * v) % p
    if not np.any(coeffs):
        raise DegenerateInstance("drew the zero form")
    return coeffs, len(vecs)


def _validate_nodal(model) -> None:
    p = model.p
    basis = model.basis
    for pt in model.nodes:
        rows = basis.node_rows(pt[0], pt[1], p)
        if np.any(rows @ model.F % p):
            raise DegenerateInstance("form not double at a node")
        if not quadratic_nondegenerate(*basis.quadratic_part(model.F, *pt, p), p):
            raise DegenerateInstance("degenerate (cuspidal) node")
    model.adjoint_basis()  # raises on wrong dimension
    ambient, sub = model._w2_spaces()
    q, _ = quotient_dims(ambient, sub, p)
    if q != 3 * model.genus - 3:
        raise DegenerateInstance(f"h0(2K) dim {q} != {3 * model.genus - 3}")


def fit_nodal_plane(d: int, delta: int, prime: int = DEFAULT_PRIME, seed: int = 0) -> NodalPlaneCurve:
    """Random plane curve of degree d with delta nodes, fully checked."""
    _require_prime(prime)
    basis = PlaneBasis(d)
    if delta > basis.size - 1:
        raise ValueError(f"{delta} nodes cannot fit on degree-{d} curves")

    def make(rng):
        nodes = _draw_distinct_pairs(rng, delta, prime)
        shell = NodalPlaneCurve(prime, d, delta, nodes, np.zeros(basis.size), seed)
        cons = ExactMatrix.dense(shell.node_constraints(basis, double=True), prime)
        coeffs, dim = _random_form_in_kernel(cons, rng, prime)
        return NodalPlaneCurve(prime, d, delta, nodes, coeffs, seed, solution_dim=dim)

    return _fit_nodal(make, prime, seed, f"plane d={d} delta={delta}")


def fit_nodal_bideg_general(a: int, b: int, n_nodes: int, prime: int = DEFAULT_PRIME, seed: int = 0) -> BidegNodalCurve:
    """Random bidegree-(a, b) curve with the given number of nodes."""
    _require_prime(prime)
    if a < 3 or b < 3:
        raise ValueError("bidegrees below (3, 3) have no adjoint theory here")
    basis = BidegBasis(a, b)

    def make(rng):
        nodes = _draw_distinct_pairs(rng, n_nodes, prime)
        shell = BidegNodalCurve(prime, a, b, nodes, np.zeros(basis.size), seed)
        cons = ExactMatrix.dense(shell.node_constraints(basis, double=True), prime)
        coeffs, dim = _random_form_in_kernel(cons, rng, prime)
        return BidegNodalCurve(prime, a, b, nodes, coeffs, seed, solution_dim=dim)

    return _fit_nodal(make, prime, seed, f"bideg ({a},{b}) nodes={n_nodes}")


def gonal_parameters(k: int) -> tuple[int, int, int]:
    """(a, b, nodes) for a genus 2k-1 curve whose minimal pencil has
    degree exactly k.

    Bidegree (k, k+1) keeps the two ruling pencils at degrees k and
    k+1, so for general nodes the degree-k pencil is the unique minimal
    one.  A second factor of smaller degree would either create a
    second degree-k pencil (b = k) or a smaller pencil (b < k), and
    either extra structure enlarges the syzygy spaces beyond the
    k-gonal baseline.  The node count (k-1)k - (2k-1) brings the
    arithmetic genus (k-1)k of the smooth bidegree class down to 2k-1.
    """
    if k < 3:
        raise ValueError("gonal models start at k = 3")
    return (k, k + 1, (k - 1) * k - (2 * k - 1))


def fit_nodal_bideg(k: int, prime: int = DEFAULT_PRIME, seed: int = 0) -> BidegNodalCurve:
    """k-gonal genus 2k-1 model: bidegree (k, k+1) with general nodes."""
    a, b, n_nodes = gonal_parameters(k)
    return fit_nodal_bideg_general(a, b, n_nodes, prime, seed)


def max_clifford_parameters(k: int) -> tuple[int, int]:
    """(degree, nodes) of plane models expected to have maximal Clifford
    index in genus 2k-1: degree k+3 with (k^2-k+4)/2 general nodes has
    genus 2k-1 and gonality k+1 (projection from a node)."""
    if k < 3:
        raise ValueError("plane models start at k = 3")
    return (k + 3, (k * k - k + 4) // 2)


def fit_max_clifford_plane(k: int, prime: int = DEFAULT_PRIME, seed: int = 0) -> NodalPlaneCurve:
    d, delta = max_clifford_parameters(k)
    return fit_nodal_plane(d, delta, prime, seed)


# -- scrolls -----------------------------------------------------------------


class ScrollModel:
    """P(O(1)^(k-2) + O(2)) embedded by its complete degree-1 system.

    Sections of O(1) split as u*y_i, v*y_i per O(1) summand plus
    u^2 z, uvz, v^2 z from the O(2) summand; degree-2 sections are the
    evident monomials, so the multiplication table is 0/1 and no
    randomness is involved.
    """

    kind = "scroll"

    def __init__(self, k: int, prime: int = DEFAULT_PRIME):
        if k < 3:
            raise ValueError("scrolls start at k = 3")
        self.k = int(k)
        self.p = int(prime)
        # degree-1 sections: ('y', i, c) is u^c v^(1-c) y_i, ('z', c) is
        # u^c v^(2-c) z
        self.sections = [("y", i, c) for i in range(k - 2) for c in (1, 0)]
        self.sections += [("z", c) for c in (2, 1, 0)]
        self.w2_basis = (
            [("yy", i, j, c) for i in range(k - 2) for j in range(i, k - 2) for c in range(3)]
            + [("yz", i, c) for i in range(k - 2) for c in range(4)]
            + [("zz", c) for c in range(5)]
        )
        self.w2_index = {m: idx for idx, m in enumerate(self.w2_basis)}

    @property
    def h0L(self) -> int:
        return 2 * self.k - 1

    @property
    def h0L2(self) -> int:
        km2 = self.k - 2
        return 3 * km2 * (km2 + 1) // 2 + 4 * km2 + 5

    @staticmethod
    def _product(s1, s2):
        if s1[0] == "y" and s2[0] == "y":
            i, j = sorted((s1[1], s2[1]))
            return ("yy", i, j, s1[2] + s2[2])
        if s1[0] == "y" and s2[0] == "z":
            return ("yz", s1[1], s1[2] + s2[1])
        if s1[0] == "z" and s2[0] == "y":
            return ("yz", s2[1], s2[2] + s1[1])
        return ("zz", s1[1] + s2[1])

    def mul_table(self) -> MulTable:
        n, w2 = self.h0L, self.h0L2
        mu = np.zeros((n, n, w2), dtype=np.int64)
        for i, s1 in enumerate(self.sections):
            for j, s2 in enumerate(self.sections):
                mu[i, j, self.w2_index[self._product(s1, s2)]] = 1
        return MulTable(mu, self.p)

    def selfcheck(self) -> CheckReport:
        return model_selfcheck(self)

    def to_dict(self) -> dict:
        return {"schema": MODEL_SCHEMA, "kind": self.kind, "prime": self.p, "k": self.k}

    @classmethod
    def from_dict(cls, doc: dict) -> "ScrollModel":
        return cls(doc["k"], doc["prime"])


def scroll_mul_table(k: int, prime: int = DEFAULT_PRIME) -> MulTable:
    return ScrollModel(k, prime).mul_table()


# -- complete-intersection fixtures -----------------------------------------


class CIFixture:
    """Canonical curve cut out by quadrics: 3 in P4 (genus 5), 1 in P3
    (genus 4).  Only the degree-2 part of the ring is needed, so the
    fixture stores just the random quadrics."""

    kind = "ci"

    def __init__(self, genus: int, prime: int, seed: int, quadrics: np.ndarray):
        self.genus = int(genus)
        self.p = int(prime)
        self.seed = int(seed)
        self.quadrics = np.asarray(quadrics, dtype=np.int64) % prime

    @property
    def dim_v(self) -> int:
        return self.genus

    def mul_table(self) -> MulTable:
        g, p = self.genus, self.p
        pairs = [(i, j) for i in range(g) for j in range(i, g)]
        pair_index = {pr: idx for idx, pr in enumerate(pairs)}
        sym2 = len(pairs)
        ambient = np.eye(sym2, dtype=np.int64)
        q, proj = quotient_dims(ambient, self.quadrics, p)
        if q != 3 * g - 3:
            raise DegenerateInstance(f"quadric quotient dim {q} != {3 * g - 3}")
        mu = np.zeros((g, g, q), dtype=np.int64)
        for i in range(g):
            for j in range(i, g):
                e = np.zeros(sym2, dtype=np.int64)
                e[pair_index[(i, j)]] = 1
                coords = proj.coords(e)
                mu[i, j] = coords
                mu[j, i] = coords
        return MulTable(mu, p)

    def selfcheck(self) -> CheckReport:
        return model_selfcheck(self)

    def to_dict(self) -> dict:
        return {
            "schema": MODEL_SCHEMA,
            "kind": self.kind,
            "prime": self.p,
            "seed": self.seed,
            "genus": self.genus,
            "quadrics": [[int(c) for c in row] for row in self.quadrics],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "CIFixture":
        return cls(doc["genus"], doc["prime"], doc.get("seed", 0), doc["quadrics"])


def make_ci_fixture(genus: int, prime: int = DEFAULT_PRIME, seed: int = 0) -> CIFixture:
    if genus not in (4, 5):
        raise UnsupportedGenus(f"complete-intersection fixtures cover genus 4 and 5, not {genus}")
    _require_prime(prime)
    n_quadrics = 3 if genus == 5 else 1
    sym2 = genus * (genus + 1) // 2
    last = ""
    for attempt in range(FIT_ATTEMPTS):
        rng = XorShift64Star(derive_seed(seed, attempt))
        quadrics = np.array(
            [[rng.rand_mod(prime) for _ in range(sym2)] for _ in range(n_quadrics)],
            dtype=np.int64,
        )
        if ExactMatrix.dense(quadrics, prime).rank() == n_quadrics:
            return CIFixture(genus, prime, seed, quadrics)
        last = "dependent quadrics"
    raise DegenerateInstance(f"ci genus={genus}: {last}")


def ci_mul_table(genus: int, prime: int = DEFAULT_PRIME, seed: int = 0) -> MulTable:
    return make_ci_fixture(genus, prime, seed).mul_table()


# -- self checks -------------------------------------------------------------


def model_selfcheck(model) -> CheckReport:
    """Run every type invariant of the model; failures are data."""
    report = CheckReport()
    if isinstance(model, (NodalPlaneCurve, BidegNodalCurve)):
        p = model.p
        report.add(
            "nodes_distinct",
            len(set(model.nodes)) == len(model.nodes),
            f"{len(model.nodes)} nodes",
        )
        double_ok, nondeg_ok = True, True
        for pt in model.nodes:
            rows = model.basis.node_rows(pt[0], pt[1], p)
            if np.any(rows @ model.F % p):
                double_ok = False
            if not quadratic_nondegenerate(
                *model.basis.quadratic_part(model.F, *pt, p), p
            ):
                nondeg_ok = False
        report.add("form_double_at_nodes", double_ok)
        report.add("nodes_nondegenerate", nondeg_ok)
        try:
            adj = model.adjoint_basis()
            report.add("adjoint_dimension", True, f"dim {adj.shape[0]} == genus")
        except DegenerateInstance as exc:
            report.add("adjoint_dimension", False, str(exc))
            return report
        try:
            table = model.mul_table_quotient()
            report.add("h0_2K_dimension", True, f"dim {table.h0L2}")
        except DegenerateInstance as exc:
            report.add("h0_2K_dimension", False, str(exc))
            return report
    elif isinstance(model, ScrollModel):
        table = model.mul_table()
        report.add("section_count", table.h0L == 2 * model.k - 1)
        report.add("degree2_count", table.h0L2 == model.h0L2)
    elif isinstance(model, CIFixture):
        rank_q = ExactMatrix.dense(model.quadrics, model.p).rank()
        report.add("quadrics_independent", rank_q == model.quadrics.shape[0])
        try:
            table = model.mul_table()
            report.add("degree2_dimension", True, f"dim {table.h0L2}")
        except DegenerateInstance as exc:
            report.add("degree2_dimension", False, str(exc))
            return report
    else:
        raise TypeError(f"unknown model {type(model)!r}")

    report.add(
        "mu_symmetric",
        bool(np.array_equal(table.mu, table.mu.transpose(1, 0, 2))),
    )
    report.add("mu_surjective", table.flattened().rank() == table.h0L2)
    return report


MODEL_KINDS = {
    "plane": NodalPlaneCurve,
    "bideg": BidegNodalCurve,
    "scroll": ScrollModel,
    "ci": CIFixture,
}


def model_from_dict(doc: dict):
    kind = doc.get("kind")
    if kind not in MODEL_KINDS:
        raise ValueError(f"unknown model kind {kind!r}")
    return MODEL_KINDS[kind].from_dict(doc)
