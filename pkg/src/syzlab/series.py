"""Truncated power series over the rationals, plus exact binomials.

A :class:`SeriesQ` holds the coefficients of t^0 .. t^T exactly as
``fractions.Fraction`` values.  Arithmetic between series of different
truncation orders is exact through ``min(T1, T2)`` and truncates there.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import OrderOutOfRange

# Exact rationals; Fraction already enforces reduced form and positive
# denominator, which is all the arithmetic here needs.
BigRational = Fraction


def big_binom(n: int, r: int) -> int:
    """C(n, r) as an exact integer, 0 whenever r < 0 or r > n."""
    if r < 0 or r > n or n < 0:
        return 0
    return math.comb(n, r)


class SeriesQ:
    """Exact rational power series truncated at order T (inclusive).

    Coefficients are ``int`` or ``Fraction``; integer inputs stay plain
    ints internally (the numeric tower keeps mixed arithmetic exact),
    and :meth:`coeff` always hands back a Fraction.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order: int | None = None):
        cs = [c if isinstance(c, (int, Fraction)) else Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        if len(cs) < order + 1:
            cs += [0] * (order + 1 - len(cs))
        self.coeffs = tuple(cs[: order + 1])
        self.order = order

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, order: int) -> "SeriesQ":
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> "SeriesQ":
        return cls((1,), order)

    @classmethod
    def t_power(cls, e: int, order: int) -> "SeriesQ":
        return cls([0] * e + [1] if e <= order else (), order)

    @classmethod
    def one_plus_t_pow(cls, e: int, order: int) -> "SeriesQ":
        """(1+t)**e for any integer e, negative exponents included."""
        if e >= 0:
            return cls([big_binom(e, i) for i in range(order + 1)], order)
        # (1+t)^e = sum_i C(-e+i-1, i) (-t)^i for e < 0
        m = -e
        return cls(
            [(-1) ** i * big_binom(m + i - 1, i) for i in range(order + 1)],
            order,
        )

    # -- access ----------------------------------------------------------
    def coeff(self, k: int) -> Fraction:
        if k < 0 or k > self.order:
            raise OrderOutOfRange(f"coefficient t^{k} beyond order {self.order}")
        return Fraction(self.coeffs[k])

    def truncate(self, order: int) -> "SeriesQ":
        if order >= self.order:
            return self
        return SeriesQ(self.coeffs[: order + 1], order)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    # -- arithmetic -------------------------------------------------------
    def _common(self, other: "SeriesQ") -> int:
        return min(self.order, other.order)

    def __add__(self, other):
        if isinstance(other, SeriesQ):
            T = self._common(other)
            return SeriesQ(
                [self.coeffs[i] + other.coeffs[i] for i in range(T + 1)], T
            )
        return self + SeriesQ([other], self.order)

    __radd__ = __add__

    def __neg__(self):
        return SeriesQ([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        if isinstance(other, SeriesQ):
            return self + (-other)
        return self + (-other if isinstance(other, (int, Fraction)) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SeriesQ):
            T = self._common(other)
            out = [0] * (T + 1)
            for i, a in enumerate(self.coeffs[: T + 1]):
                if a:
                    for j in range(T + 1 - i):
                        b = other.coeffs[j]
                        if b:
                            out[i + j] += a * b
            return SeriesQ(out, T)
        c = other if isinstance(other, (int, Fraction)) else Fraction(other)
        return SeriesQ([a * c for a in self.coeffs], self.order)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "SeriesQ":
        if e < 0:
            return self.inverse() ** (-e)
        result = SeriesQ.one(self.order)
        base = self
        while e > 0:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "SeriesQ":
        """Multiplicative inverse; needs a nonzero constant term."""
        if self.coeffs[0] == 0:
            raise ZeroDivisionError("series with zero constant term")
        T = self.order
        inv0 = Fraction(1) / self.coeffs[0]
        out = [inv0] + [Fraction(0)] * T
        for k in range(1, T + 1):
            s = Fraction(0)
            for i in range(1, k + 1):
                s += self.coeffs[i] * out[k - i]
            out[k] = -inv0 * s
        return SeriesQ(out, T)

    def shift(self, e: int) -> "SeriesQ":
        """Multiply by t**e (coefficients beyond the order fall off)."""
        if e < 0:
            raise ValueError("negative shifts are not defined here")
        return SeriesQ([0] * e + list(self.coeffs), self.order)

    def __eq__(self, other):
        if isinstance(other, SeriesQ):
            T = self._common(other)
            return self.coeffs[: T + 1] == other.coeffs[: T + 1]
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.order))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*t^{i}" if i else str(c))
        body = " + ".join(terms) if terms else "0"
        return f"SeriesQ({body} + O(t^{self.order + 1}))"


def series_expand(num, one_plus_t_exp: int, order: int) -> SeriesQ:
    """Expand num / (1+t)**e exactly through ``order``.

    ``num`` is the coefficient sequence of a polynomial in t; a negative
    ``one_plus_t_exp`` multiplies by (1+t)**|e| instead of dividing.
    """
    return SeriesQ(num, order) * SeriesQ.one_plus_t_pow(-one_plus_t_exp, order)


def series_coeff(s: SeriesQ, k: int) -> Fraction:
    """Exact coefficient of t**k; OrderOutOfRange beyond the truncation."""
    return s.coeff(k)
