"""Independent brute-force oracles used only by the tests.

Deliberately written with plain Python lists and no imports from the
package's linear algebra, so rank/kernel answers are checked against a
second implementation rather than against themselves.
"""

from __future__ import annotations


def rank_bruteforce(rows, p: int) -> int:
    """Gaussian elimination on lists of lists; returns the rank mod p."""
    a = [[int(x) % p for x in row] for row in rows]
    if not a:
        return 0
    m, n = len(a), len(a[0])
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if a[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(m):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        r += 1
        if r == m:
            break
    return r


def smith_exponent_data(exponents):
    """(corank at 0, determinant valuation) of diag(t^a) up to units."""
    corank = sum(1 for a in exponents if a > 0)
    valuation = sum(exponents)
    return corank, valuation
