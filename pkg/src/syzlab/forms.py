"""Monomial bookkeeping for plane and bidegree forms over GF(p).

A form is a coefficient vector over a fixed monomial basis.  Only what
the model builders need lives here: evaluation rows (for point and node
constraints), first partials, products of forms, and the quadratic part
of a form at a point of the affine chart (for the node test).

Charts: plane forms use z = 1 with affine coordinates (x, y); bidegree
forms on P1 x P1 use v = t = 1 with affine coordinates (u, s).
"""

from __future__ import annotations

import numpy as np

from .series import big_binom


def _pow_table(x0: int, d: int, p: int) -> list[int]:
    out = [1] * (d + 1)
    for i in range(1, d + 1):
        out[i] = out[i - 1] * x0 % p
    return out


class PlaneBasis:
    """Degree-d monomials x^a y^b z^(d-a-b), ordered by (a, b) lex."""

    __slots__ = ("d", "exponents", "index")

    def __init__(self, d: int):
        self.d = d
        self.exponents = [
            (a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1)
        ]
        self.index = {e: i for i, e in enumerate(self.exponents)}

    @property
    def size(self) -> int:
        return len(self.exponents)

    def eval_row(self, x0: int, y0: int, p: int) -> np.ndarray:
        """Monomial values at (x0, y0, 1)."""
        xs, ys = _pow_table(x0, self.d, p), _pow_table(y0, self.d, p)
        return np.array(
            [xs[a] * ys[b] % p for a, b, _ in self.exponents], dtype=np.int64
        )

    def eval_row_dx(self, x0: int, y0: int, p: int) -> np.ndarray:
        xs, ys = _pow_table(x0, self.d, p), _pow_table(y0, self.d, p)
        return np.array(
            [a * xs[a - 1] * ys[b] % p if a else 0 for a, b, _ in self.exponents],
            dtype=np.int64,
        )

    def eval_row_dy(self, x0: int, y0: int, p: int) -> np.ndarray:
        xs, ys = _pow_table(x0, self.d, p), _pow_table(y0, self.d, p)
        return np.array(
            [b * xs[a] * ys[b - 1] % p if b else 0 for a, b, _ in self.exponents],
            dtype=np.int64,
        )

    def node_rows(self, x0: int, y0: int, p: int) -> np.ndarray:
        """Constraints for a double point at (x0, y0, 1): F, F_x, F_y.

        Vanishing of the z-partial follows from Euler's relation since
        p does not divide d.
        """
        return np.stack(
            [
                self.eval_row(x0, y0, p),
                self.eval_row_dx(x0, y0, p),
                self.eval_row_dy(x0, y0, p),
            ]
        )

    def multiply(self, f: np.ndarray, other: "PlaneBasis", g: np.ndarray, p: int) -> np.ndarray:
        """Coefficients of f*g in PlaneBasis(self.d + other.d)."""
        target = PlaneBasis(self.d + other.d)
        out = np.zeros(target.size, dtype=np.int64)
        fi = np.flatnonzero(f)
        gi = np.flatnonzero(g)
        for i in fi:
            a1, b1, _ = self.exponents[i]
            ci = int(f[i])
            for j in gi:
                a2, b2, _ = other.exponents[j]
                k = target.index[(a1 + a2, b1 + b2, target.d - a1 - a2 - b1 - b2)]
                out[k] = (out[k] + ci * int(g[j])) % p
        return out

    def univariate_in_y(self, f: np.ndarray, x0: int, p: int) -> list[int]:
        """Coefficients of F(x0, y, 1) as a polynomial in y."""
        xs = _pow_table(x0, self.d, p)
        out = [0] * (self.d + 1)
        for i in np.flatnonzero(f):
            a, b, _ = self.exponents[i]
            out[b] = (out[b] + int(f[i]) * xs[a]) % p
        return out

    def quadratic_part(self, f: np.ndarray, x0: int, y0: int, p: int) -> tuple[int, int, int]:
        """(c_xx, c_xy, c_yy) of F(x+x0, y+y0, 1) - the leading form at a
        double point."""
        xs, ys = _pow_table(x0, self.d, p), _pow_table(y0, self.d, p)
        cxx = cxy = cyy = 0
        for i in np.flatnonzero(f):
            a, b, _ = self.exponents[i]
            c = int(f[i])
            if a >= 2:
                cxx = (cxx + c * big_binom(a, 2) * xs[a - 2] % p * ys[b]) % p
            if a >= 1 and b >= 1:
                cxy = (cxy + c * a * b % p * xs[a - 1] % p * ys[b - 1]) % p
            if b >= 2:
                cyy = (cyy + c * big_binom(b, 2) * ys[b - 2] % p * xs[a]) % p
        return cxx, cxy, cyy


class BidegBasis:
    """Bidegree-(d1, d2) monomials u^a v^(d1-a) s^b t^(d2-b), (a, b) lex."""

    __slots__ = ("d1", "d2", "exponents", "index")

    def __init__(self, d1: int, d2: int):
        self.d1 = d1
        self.d2 = d2
        self.exponents = [(a, b) for a in range(d1, -1, -1) for b in range(d2, -1, -1)]
        self.index = {e: i for i, e in enumerate(self.exponents)}

    @property
    def size(self) -> int:
        return len(self.exponents)

    def eval_row(self, u0: int, s0: int, p: int) -> np.ndarray:
        us, ss = _pow_table(u0, self.d1, p), _pow_table(s0, self.d2, p)
        return np.array(
            [us[a] * ss[b] % p for a, b in self.exponents], dtype=np.int64
        )

    def eval_row_du(self, u0: int, s0: int, p: int) -> np.ndarray:
        us, ss = _pow_table(u0, self.d1, p), _pow_table(s0, self.d2, p)
        return np.array(
            [a * us[a - 1] * ss[b] % p if a else 0 for a, b in self.exponents],
            dtype=np.int64,
        )

    def eval_row_ds(self, u0: int, s0: int, p: int) -> np.ndarray:
        us, ss = _pow_table(u0, self.d1, p), _pow_table(s0, self.d2, p)
        return np.array(
            [b * us[a] * ss[b - 1] % p if b else 0 for a, b in self.exponents],
            dtype=np.int64,
        )

    def node_rows(self, u0: int, s0: int, p: int) -> np.ndarray:
        """Constraints for a double point at (u0, 1, s0, 1)."""
        return np.stack(
            [
                self.eval_row(u0, s0, p),
                self.eval_row_du(u0, s0, p),
                self.eval_row_ds(u0, s0, p),
            ]
        )

    def multiply(self, f: np.ndarray, other: "BidegBasis", g: np.ndarray, p: int) -> np.ndarray:
        target = BidegBasis(self.d1 + other.d1, self.d2 + other.d2)
        out = np.zeros(target.size, dtype=np.int64)
        for i in np.flatnonzero(f):
            a1, b1 = self.exponents[i]
            ci = int(f[i])
            for j in np.flatnonzero(g):
                a2, b2 = other.exponents[j]
                k = target.index[(a1 + a2, b1 + b2)]
                out[k] = (out[k] + ci * int(g[j])) % p
        return out

    def univariate_in_s(self, f: np.ndarray, u0: int, p: int) -> list[int]:
        """Coefficients of F(u0, 1, s, 1) as a polynomial in s."""
        us = _pow_table(u0, self.d1, p)
        out = [0] * (self.d2 + 1)
        for i in np.flatnonzero(f):
            a, b = self.exponents[i]
            out[b] = (out[b] + int(f[i]) * us[a]) % p
        return out

    def quadratic_part(self, f: np.ndarray, u0: int, s0: int, p: int) -> tuple[int, int, int]:
        us, ss = _pow_table(u0, self.d1, p), _pow_table(s0, self.d2, p)
        cuu = cus = css = 0
        for i in np.flatnonzero(f):
            a, b = self.exponents[i]
            c = int(f[i])
            if a >= 2:
                cuu = (cuu + c * big_binom(a, 2) * us[a - 2] % p * ss[b]) % p
            if a >= 1 and b >= 1:
                cus = (cus + c * a * b % p * us[a - 1] % p * ss[b - 1]) % p
            if b >= 2:
                css = (css + c * big_binom(b, 2) * ss[b - 2] % p * us[a]) % p
        return cuu, cus, css


def quadratic_nondegenerate(cxx: int, cxy: int, cyy: int, p: int) -> bool:
    """True when c_xx X^2 + c_xy XY + c_yy Y^2 is a nondegenerate binary
    quadratic form over GF(p) (an honest node, not a cusp or worse)."""
    return (cxy * cxy - 4 * cxx * cyy) % p != 0
