"""Dense univariate polynomial helpers over the rationals.

A polynomial is a tuple of coefficients, constant term first, with no
trailing zeros (the zero polynomial is the empty tuple).  Coefficients
are ints or ``Fraction``; all arithmetic is exact.

This is deliberately minimal: just enough to build cyclotomic
polynomials, rewrite the palindromic ones in the ``x + 1/x`` basis, and
run Sturm-chain root counting for isolating intervals.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

Poly = tuple  # coefficients, low degree first


def trim(coeffs) -> Poly:
    """Drop trailing zero coefficients."""
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def degree(p: Poly) -> int:
    """Degree of p; the zero polynomial has degree -1."""
    return len(p) - 1


def add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def sub(a: Poly, b: Poly) -> Poly:
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return trim(out)


def neg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c == 0:
            continue
        for j, d in enumerate(b):
            out[i + j] += c * d
    return trim(out)


def scale(a: Poly, k) -> Poly:
    if k == 0:
        return ()
    return tuple(c * k for c in a)


def divmod_poly(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder; coefficients become Fractions if needed."""
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    lead = den[-1]
    rem = list(num)
    quo = [0] * max(0, len(num) - len(den) + 1)
    for shift in range(len(num) - len(den), -1, -1):
        top = rem[shift + len(den) - 1]
        if top == 0:
            continue
        q = top if lead == 1 else Fraction(top, 1) / lead
        quo[shift] = q
        for i, c in enumerate(den):
            rem[shift + i] -= q * c
    return trim(quo), trim(rem)


def evaluate(p: Poly, x):
    """Horner evaluation; exact when x is a Fraction or int."""
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Poly) -> Poly:
    return trim(tuple(i * p[i] for i in range(1, len(p))))


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> Poly:
    """The n-th cyclotomic polynomial, integer coefficients.

    Computed as (x^n - 1) divided by the cyclotomic polynomials of the
    proper divisors of n; the division is exact over the integers.
    """
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    if n == 1:
        return (-1, 1)
    num: Poly = tuple([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            quo, rem = divmod_poly(num, cyclotomic(d))
            assert not rem
            num = quo
    return tuple(int(c) for c in num)


def two_cos_minimal_poly(m: int) -> Poly:
    """Minimal polynomial of 2cos(pi/m) over Q, for m >= 2.

    The 2m-th cyclotomic polynomial is palindromic of even degree 2d;
    dividing by x^d and collecting the powers x^k + x^{-k} rewrites it
    as a monic degree-d polynomial in y = x + 1/x, whose root at
    y = zeta + 1/zeta (zeta a primitive 2m-th root of unity) is
    2cos(pi/m).
    """
    if m < 2:
        raise ValueError("need m >= 2")
    phi = cyclotomic(2 * m)
    two_d = degree(phi)
    assert two_d % 2 == 0
    d = two_d // 2
    assert all(phi[i] == phi[two_d - i] for i in range(two_d + 1)), "not palindromic"
    # p_k(y) = x^k + x^{-k} expressed in y, via p_{k+1} = y*p_k - p_{k-1}
    p: list[Poly] = [(2,), (0, 1)]
    for _ in range(2, d + 1):
        p.append(sub(mul((0, 1), p[-1]), p[-2]))
    psi: Poly = (phi[d],)
    for k in range(1, d + 1):
        psi = add(psi, scale(p[k], phi[d + k]))
    assert degree(psi) == d and psi[-1] == 1
    return tuple(int(c) for c in psi)


def _sign_variations(values) -> int:
    count = 0
    prev = 0
    for v in values:
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if prev != 0 and s != prev:
            count += 1
        prev = s
    return count


def sturm_chain(p: Poly) -> list[Poly]:
    chain = [p, derivative(p)]
    while chain[-1]:
        _, rem = divmod_poly(chain[-2], chain[-1])
        if not rem:
            break
        chain.append(neg(rem))
    return chain


def count_real_roots(chain: list[Poly], lo, hi) -> int:
    """Number of distinct real roots of chain[0] in the interval (lo, hi]."""
    at_lo = _sign_variations(evaluate(f, lo) for f in chain)
    at_hi = _sign_variations(evaluate(f, hi) for f in chain)
    return at_lo - at_hi
