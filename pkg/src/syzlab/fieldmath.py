"""Exact scalar arithmetic over prime fields GF(p).

Conventions used throughout the package:

* residues are stored canonically in ``[0, p)`` and every reduction is
  eager, so equal values have equal representations;
* moduli are odd primes below 2**31, which keeps all products inside
  64-bit intermediates in the compiled elimination kernel;
* polynomials hold plain ``int`` residues (trailing zeros trimmed) with
  the modulus on the container, the zero polynomial being the empty
  coefficient tuple.
"""

from __future__ import annotations

from .errors import ZeroInverse
from .rng import XorShift64Star

DEFAULT_PRIME = 31991

MAX_PRIME = (1 << 31) - 1

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for everything below 3.3e24."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def inv_mod(a: int, p: int) -> int:
    """Inverse of ``a`` modulo the prime ``p``."""
    a %= p
    if a == 0:
        raise ZeroInverse(f"0 has no inverse mod {p}")
    return pow(a, -1, p)


class PrimeFieldElement:
    """A canonical residue in GF(p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int = DEFAULT_PRIME):
        self.p = p
        self.value = value % p

    def _coerce(self, other) -> int:
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {other.p}")
            return other.value
        return int(other) % self.p

    def __add__(self, other):
        return PrimeFieldElement(self.value + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return PrimeFieldElement(self.value - self._coerce(other), self.p)

    def __rsub__(self, other):
        return PrimeFieldElement(self._coerce(other) - self.value, self.p)

    def __mul__(self, other):
        return PrimeFieldElement(self.value * self._coerce(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.p)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return PrimeFieldElement(pow(self.value, e, self.p), self.p)

    def inverse(self) -> "PrimeFieldElement":
        return PrimeFieldElement(inv_mod(self.value, self.p), self.p)

    def __truediv__(self, other):
        if not isinstance(other, PrimeFieldElement):
            other = PrimeFieldElement(other, self.p)
        return self * other.inverse()

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.value == other.value and self.p == other.p
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"GF({self.p})({self.value})"

    def is_zero(self) -> bool:
        return self.value == 0


def field_inverse(a: PrimeFieldElement) -> PrimeFieldElement:
    """Multiplicative inverse; raises ZeroInverse on a = 0."""
    return a.inverse()


class GFPoly:
    """Univariate polynomial over GF(p), dense coefficient tuple.

    ``coeffs[i]`` is the coefficient of X**i; the tuple carries no
    trailing zeros, so ``degree == len(coeffs) - 1`` and the zero
    polynomial is the empty tuple (degree -1).
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, coeffs, p: int = DEFAULT_PRIME):
        cs = [int(c) % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.p = p
        self.coeffs = tuple(cs)

    # -- constructors ---------------------------------------------------
    @classmethod
    def _raw(cls, coeffs: list, p: int) -> "GFPoly":
        # internal: coefficients already canonical residues
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        obj = object.__new__(cls)
        obj.p = p
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def zero(cls, p: int = DEFAULT_PRIME) -> "GFPoly":
        return cls((), p)

    @classmethod
    def one(cls, p: int = DEFAULT_PRIME) -> "GFPoly":
        return cls((1,), p)

    @classmethod
    def x(cls, p: int = DEFAULT_PRIME) -> "GFPoly":
        return cls((0, 1), p)

    @classmethod
    def monomial(cls, e: int, c: int = 1, p: int = DEFAULT_PRIME) -> "GFPoly":
        return cls([0] * e + [c], p)

    @classmethod
    def from_roots(cls, roots, p: int = DEFAULT_PRIME) -> "GFPoly":
        f = cls.one(p)
        for r in roots:
            f = f * cls((-int(r) % p, 1), p)
        return f

    # -- structure ------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def valuation(self) -> int | None:
        """Order of vanishing at 0; None for the zero polynomial."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def monic(self) -> "GFPoly":
        if self.is_zero():
            return self
        if self.coeffs[-1] == 1:
            return self
        inv = inv_mod(self.leading(), self.p)
        return GFPoly._raw([c * inv % self.p for c in self.coeffs], self.p)

    # -- arithmetic -----------------------------------------------------
    def _check(self, other: "GFPoly"):
        if self.p != other.p:
            raise ValueError(f"mixed moduli {self.p} and {other.p}")

    def __add__(self, other: "GFPoly") -> "GFPoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.p
        return GFPoly._raw(out, self.p)

    def __neg__(self) -> "GFPoly":
        p = self.p
        return GFPoly._raw([(p - c) % p for c in self.coeffs], p)

    def __sub__(self, other: "GFPoly") -> "GFPoly":
        return self + (-other)

    def __mul__(self, other) -> "GFPoly":
        if isinstance(other, int):
            return GFPoly._raw([c * other % self.p for c in self.coeffs], self.p)
        self._check(other)
        if self.is_zero() or other.is_zero():
            return GFPoly.zero(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = (out[i + j] + a * b) % self.p
        return GFPoly._raw(out, self.p)

    __rmul__ = __mul__

    def __divmod__(self, other: "GFPoly"):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return GFPoly.zero(p), self
        quo = [0] * (dq + 1)
        inv_lead = inv_mod(other.leading(), p)
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] * inv_lead % p
            if c:
                quo[k] = c
                for i, b in enumerate(other.coeffs):
                    rem[k + i] = (rem[k + i] - c * b) % p
        return GFPoly._raw(quo, p), GFPoly._raw(rem, p)

    def __floordiv__(self, other: "GFPoly") -> "GFPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "GFPoly") -> "GFPoly":
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, GFPoly):
            return self.p == other.p and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return f"GFPoly(0 mod {self.p})"
        terms = [
            f"{c}*x^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c
        ]
        return f"GFPoly({' + '.join(terms)} mod {self.p})"

    def __call__(self, x: int) -> int:
        # Horner evaluation.
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def gcd(self, other: "GFPoly") -> "GFPoly":
        self._check(other)
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def pow_mod(self, e: int, modulus: "GFPoly") -> "GFPoly":
        """self**e reduced modulo ``modulus`` by square-and-multiply."""
        result = GFPoly.one(self.p)
        base = self % modulus
        while e > 0:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result


def poly_roots_gfp(f: GFPoly, rng: XorShift64Star | None = None) -> set[PrimeFieldElement]:
    """All roots of ``f`` in GF(p), each listed once.

    The root locus is isolated as gcd(f, X^p - X), with X^p computed by
    repeated squaring modulo f, and then split into linear factors by
    seeded equal-degree splitting.
    """
    if f.is_zero():
        raise ValueError("root finding needs a nonzero polynomial")
    p = f.p
    if rng is None:
        rng = XorShift64Star(0x5EED1007)
    if f.degree == 0:
        return set()
    x = GFPoly.x(p)
    xp = x.pow_mod(p, f)
    g = f.gcd(xp - x)

    roots: list[int] = []

    def split(h: GFPoly):
        # h is monic, squarefree, a product of distinct linear factors
        if h.degree == 0:
            return
        if h.degree == 1:
            roots.append((-h.coeffs[0]) % p)
            return
        while True:
            a = rng.rand_mod(p)
            probe = GFPoly((a, 1), p).pow_mod((p - 1) // 2, h) - GFPoly.one(p)
            d = h.gcd(probe)
            if 0 < d.degree < h.degree:
                split(d)
                split(h // d)
                return

    split(g)
    return {PrimeFieldElement(r, p) for r in roots}
