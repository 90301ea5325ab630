"""Exact verification of the divisor class of the syzygy jump locus.

For odd genus g = 2k-1 the locus of curves with extra degree-k
syzygies is the degeneracy divisor of a map between two pushforward
bundles of equal rank over the moduli space.  Its class is N*lambda,
where lambda is the Hodge class, and this module recomputes the
multiplier N exactly along four independent routes:

1. a first-principles pipeline in a rank/c1 model of the K-group of
   the moduli space (truncated t-series of (rank, c1) pairs),
2. coefficient extraction from the collapsed generating function
   t^2 (1+t)^(2k-4) (-t^2 + (2k-4) t - (2k-13)),
3. the alternating binomial sum that coefficient expands to,
4. the closed form 6 (k+1) (k-1) (2k-4)! / ((k-2)! k!).

It also checks that N is exactly (k-1) times the Harris-Mumford class
of the k-gonal divisor, 6 (k+1) (2k-4)! / ((k-2)! k!), the two series
collapses used on the way, and the equal-rank identity of the two
pushforward bundles.

Two sign conventions in circulating copies of these formulas are wrong
and provably so; the verifier recomputes both variants and reports
which fail (see ``check_series_identities``) instead of silently
picking one.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .errors import NonIntegerResult, TruncationTooSmall
from .series import SeriesQ, big_binom


def mumford_coeff(n: int) -> int:
    """c1 multiplier of the pushforward of the n-th relative canonical
    power: 6n^2 - 6n + 1 (symmetric under n -> 1-n)."""
    return 6 * n * n - 6 * n + 1


class KClassSeries:
    """Truncated t-series of (rank, c1) pairs.

    Models K-group elements: rank is multiplicative, c1 obeys the
    first-order product rule c1(A.B) = rank(A) c1(B) + rank(B) c1(A).
    All c1 values are rational multiples of a fixed degree-1 class.
    """

    __slots__ = ("rank", "c1")

    def __init__(self, rank: SeriesQ, c1: SeriesQ):
        T = min(rank.order, c1.order)
        self.rank = rank.truncate(T)
        self.c1 = c1.truncate(T)

    @classmethod
    def zero(cls, order: int) -> "KClassSeries":
        return cls(SeriesQ.zero(order), SeriesQ.zero(order))

    @classmethod
    def constant(cls, rank: int, c1, order: int) -> "KClassSeries":
        return cls(SeriesQ([rank], order), SeriesQ([c1], order))

    @property
    def order(self) -> int:
        return self.rank.order

    def __add__(self, other: "KClassSeries") -> "KClassSeries":
        return KClassSeries(self.rank + other.rank, self.c1 + other.c1)

    def __sub__(self, other: "KClassSeries") -> "KClassSeries":
        return KClassSeries(self.rank - other.rank, self.c1 - other.c1)

    def __neg__(self) -> "KClassSeries":
        return KClassSeries(-self.rank, -self.c1)

    def __mul__(self, other: "KClassSeries") -> "KClassSeries":
        return KClassSeries(
            self.rank * other.rank,
            self.rank * other.c1 + other.rank * self.c1,
        )

    def times_t_power(self, e: int) -> "KClassSeries":
        return KClassSeries(self.rank.shift(e), self.c1.shift(e))

    def scale(self, c: int) -> "KClassSeries":
        return KClassSeries(self.rank * c, self.c1 * c)

    def __eq__(self, other):
        if isinstance(other, KClassSeries):
            return self.rank == other.rank and self.c1 == other.c1
        return NotImplemented


def lambda_t_dual_hodge(g: int, order: int) -> KClassSeries:
    """lambda_t of the dual Hodge bundle: rank (1+t)^g, c1 -t(1+t)^(g-1)."""
    rank = SeriesQ.one_plus_t_pow(g, order)
    c1 = -SeriesQ.one_plus_t_pow(g - 1, order).shift(1)
    return KClassSeries(rank, c1)


def curve_pushforward(n: int, g: int, order: int) -> KClassSeries:
    """K-class of the pushforward of the n-th relative canonical power
    on the universal curve: rank (g-1)(2n-1), c1 = mumford_coeff(n).

    One formula covers every n: at n = 1 it is the Hodge bundle minus a
    trivial summand (rank g-1, c1 +1), at n = 0 the trivial bundle
    minus the dual Hodge bundle (rank 1-g, c1 +1), and for n < 0 minus
    the dual of a pushforward, all consistent with the quadratic rank
    and c1 polynomials.
    """
    return KClassSeries.constant((g - 1) * (2 * n - 1), mumford_coeff(n), order)


def plane_bundle_pushforward(j: int, g: int, order: int) -> KClassSeries:
    """Pushforward of the twist O(1-j) down the projective bundle of the
    Hodge bundle: the Hodge bundle at j = 0, the trivial class at j = 1,
    zero for 2 <= j <= g (higher twists never reach the truncation
    orders used here)."""
    if j == 0:
        return KClassSeries.constant(g, 1, order)
    if j == 1:
        return KClassSeries.constant(1, 0, order)
    if j > g:
        raise TruncationTooSmall(
            f"twist j={j} > g={g} would need fibre-dimension corrections"
        )
    return KClassSeries.zero(order)


def assemble_n_from_pushforwards(k: int, order: int | None = None) -> int:
    """First-principles N: minus the t^k coefficient of c1 of
    lambda_t(dual Hodge) . sum_j (-1)^j t^j (plane term - curve term)."""
    if k < 3:
        raise ValueError("k starts at 3")
    g = 2 * k - 1
    if order is None:
        order = k + 1
    if order < k:
        raise TruncationTooSmall(f"need order >= {k}, got {order}")
    if order > g:
        raise TruncationTooSmall(
            f"truncation above g={g} would need the dropped j>g twists"
        )
    total = KClassSeries.zero(order)
    for j in range(order + 1):
        term = plane_bundle_pushforward(j, g, order) - curve_pushforward(1 - j, g, order)
        total = total + term.times_t_power(j).scale((-1) ** j)
    x = lambda_t_dual_hodge(g, order) * total
    val = -x.c1.coeff(k)
    if val.denominator != 1:
        raise NonIntegerResult(f"pipeline N for k={k} is not an integer: {val}")
    return int(val)


def n_from_bracket(k: int) -> int:
    """N as the t^k coefficient of t^2 (1+t)^(2k-4) (-t^2+(2k-4)t-(2k-13))."""
    if k < 3:
        raise ValueError("k starts at 3")
    order = k + 1
    bracket = (
        SeriesQ.one_plus_t_pow(2 * k - 4, order)
        * SeriesQ([-(2 * k - 13), 2 * k - 4, -1], order)
    ).shift(2)
    val = bracket.coeff(k)
    if val.denominator != 1:
        raise NonIntegerResult(f"bracket N for k={k} is not an integer: {val}")
    return int(val)


def n_from_binomials(k: int) -> int:
    """N as the alternating binomial sum the bracket coefficient expands
    to: -C(2k-4,k-4) + (2k-4) C(2k-4,k-3) - (2k-13) C(2k-4,k-2)."""
    if k < 3:
        raise ValueError("k starts at 3")
    m = 2 * k - 4
    return (
        -big_binom(m, k - 4)
        + (2 * k - 4) * big_binom(m, k - 3)
        - (2 * k - 13) * big_binom(m, k - 2)
    )


def n_closed_form(k: int) -> int:
    """N = 6 (k+1) (k-1) (2k-4)! / ((k-2)! k!), checked exact."""
    if k < 3:
        raise ValueError("k starts at 3")
    num = 6 * (k + 1) * (k - 1) * math.factorial(2 * k - 4)
    den = math.factorial(k - 2) * math.factorial(k)
    if num % den:
        raise NonIntegerResult(f"closed form not divisible at k={k}")
    return num // den


def harris_mumford_class(k: int) -> int:
    """Multiplier of lambda in the class of the k-gonal divisor:
    6 (k+1) (2k-4)! / ((k-2)! k!)."""
    if k < 3:
        raise ValueError("k starts at 3")
    num = 6 * (k + 1) * math.factorial(2 * k - 4)
    den = math.factorial(k - 2) * math.factorial(k)
    if num % den:
        raise NonIntegerResult(f"gonal class not divisible at k={k}")
    return num // den


def check_series_identities(g: int, order: int) -> tuple[bool, bool, dict]:
    """The two series collapses behind the bracket form, through t^order.

    Identity 1:  (1+t)^g (1 - sum (-1)^i (1-6i+6i^2) t^i)
                   = t (1+t)^(g-3) (t^2 - 10t + 1)
    Identity 2:  t (1+t)^(g-1) (g - t - (g-1) sum (-1)^i (1-2i) t^i)
                   = t (1+t)^(g-3) (-t^3 + (g-2) t^2 + (2-g) t + 1),
    via the middle form t (1+t)^(g-3) ((1+t)^2 (g-t) - 3(g-1)(1+t) + 2(g-1)).

    The returned note records the two printed-variant traps: the
    (1+6i+6i^2) inner sign in identity 1 and the -2(g-1) constant in
    identity 2 both fail, which the caller can surface instead of
    guessing silently.
    """
    if order < 6:
        raise TruncationTooSmall("series identities need order >= 6")
    T = order
    one = SeriesQ.one(T)

    def alt_sum(coeff_fn):
        return SeriesQ([(-1) ** i * coeff_fn(i) for i in range(T + 1)], T)

    pow_g = SeriesQ.one_plus_t_pow(g, T)
    pow_gm1 = SeriesQ.one_plus_t_pow(g - 1, T)
    pow_gm3 = SeriesQ.one_plus_t_pow(g - 3, T)

    id1_lhs = pow_g * (one - alt_sum(lambda i: 1 - 6 * i + 6 * i * i))
    id1_rhs = (pow_gm3 * SeriesQ([1, -10, 1], T)).shift(1)
    id1_ok = id1_lhs == id1_rhs
    id1_printed = pow_g * (one - alt_sum(lambda i: 1 + 6 * i + 6 * i * i))

    inner2 = SeriesQ([g, -1], T) - (g - 1) * alt_sum(lambda i: 1 - 2 * i)
    id2_lhs = (pow_gm1 * inner2).shift(1)
    middle_plus = (
        pow_gm3
        * (
            SeriesQ.one_plus_t_pow(2, T) * SeriesQ([g, -1], T)
            - 3 * (g - 1) * SeriesQ([1, 1], T)
            + SeriesQ([2 * (g - 1)], T)
        )
    ).shift(1)
    middle_minus = (
        pow_gm3
        * (
            SeriesQ.one_plus_t_pow(2, T) * SeriesQ([g, -1], T)
            - 3 * (g - 1) * SeriesQ([1, 1], T)
            - SeriesQ([2 * (g - 1)], T)
        )
    ).shift(1)
    id2_rhs = (pow_gm3 * SeriesQ([1, 2 - g, g - 2, -1], T)).shift(1)
    id2_ok = id2_lhs == middle_plus == id2_rhs

    sign_note = {
        "id1_printed_plus_6i_matches": bool(id1_printed == id1_rhs),
        "id2_printed_minus_2g1_matches": bool(middle_minus == id2_rhs),
        "combined_bracket_checked": bool(
            (id1_lhs - id2_lhs)
            == (pow_gm3 * SeriesQ([0, 0, g - 12, 3 - g, 1], T))
        ),
    }
    return bool(id1_ok), bool(id2_ok), sign_note


def rank_identity(k: int) -> bool:
    """Equal-rank check for the two pushforward bundles at l = k.

    All four expressions must agree: C(2k-2,k)(4k-2), C(2k-1,k-1)(2k-2),
    C(g,l) g - C(g,l-1), and C(g-1,l)(2l+g-1) with g = 2k-1, l = k.
    """
    if k < 3:
        raise ValueError("k starts at 3")
    g, l = 2 * k - 1, k
    r1 = big_binom(2 * k - 2, k) * (4 * k - 2)
    r2 = big_binom(2 * k - 1, k - 1) * (2 * k - 2)
    r3 = big_binom(g, l) * g - big_binom(g, l - 1)
    r4 = big_binom(g - 1, l) * (2 * l + g - 1)
    return r1 == r2 == r3 == r4


@dataclass
class ClassResult:
    """All verdicts for one k."""

    k: int
    n_pipeline: int
    n_bracket: int
    n_binomial: int
    n_closed: int
    hm: int
    ratio_ok: bool
    id1_ok: bool
    id2_ok: bool
    rank_ok: bool
    sign_note: dict

    @property
    def n_consistent(self) -> bool:
        return self.n_pipeline == self.n_bracket == self.n_binomial == self.n_closed

    @property
    def all_ok(self) -> bool:
        return self.n_consistent and self.ratio_ok and self.id1_ok and self.id2_ok and self.rank_ok

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n_pipeline": self.n_pipeline,
            "n_bracket": self.n_bracket,
            "n_binomial": self.n_binomial,
            "n_closed": self.n_closed,
            "harris_mumford": self.hm,
            "ratio_is_k_minus_1": self.ratio_ok,
            "identity1_ok": self.id1_ok,
            "identity2_ok": self.id2_ok,
            "rank_identity_ok": self.rank_ok,
            "sign_note": self.sign_note,
            "all_ok": self.all_ok,
        }


def verify_class(k: int) -> ClassResult:
    """Run every check for a single k."""
    g = 2 * k - 1
    n1 = assemble_n_from_pushforwards(k)
    n2 = n_from_bracket(k)
    n3 = n_from_binomials(k)
    n4 = n_closed_form(k)
    hm = harris_mumford_class(k)
    id1, id2, note = check_series_identities(g, max(6, k + 1))
    return ClassResult(
        k=k,
        n_pipeline=n1,
        n_bracket=n2,
        n_binomial=n3,
        n_closed=n4,
        hm=hm,
        ratio_ok=(n4 == (k - 1) * hm),
        id1_ok=id1,
        id2_ok=id2,
        rank_ok=rank_identity(k),
        sign_note=note,
    )


def verify_class_range(kmax: int) -> tuple[list[ClassResult], float]:
    """verify_class for k = 3..kmax; returns results and elapsed seconds."""
    if kmax < 3:
        raise ValueError("kmax must be at least 3")
    start = time.perf_counter()
    results = [verify_class(k) for k in range(3, kmax + 1)]
    return results, time.perf_counter() - start
