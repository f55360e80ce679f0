"""Exact arithmetic in the real cyclotomic field Q(2cos(pi/M)).

Every scalar used by the geometry lives in the field Q(theta) with
theta = 2cos(pi/M), where M is the lcm of the finite edge labels of the
group (M = 1 when there are none, in which case the field is plain Q).
Elements are stored as coefficient vectors of polynomials in theta,
reduced modulo the minimal polynomial, so equality and zero-testing are
canonical and sign determination is decided exactly: a nonzero element
is evaluated with rational interval arithmetic on an isolating interval
for theta, bisecting until the sign is certain.  No floating point is
ever consulted for a decision.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import polynomials as pol
from .errors import CoxeterInputError

INFINITY = None  # marker accepted by two_cos_pi_over for m = infinity

# Rational bracket of pi, used only to seed isolating intervals.
_PI_LO = Fraction(314159265358979323846, 10**20)
_PI_HI = Fraction(314159265358979323847, 10**20)

_MAX_SIGN_BISECTIONS = 10_000


def _cos_bracket(t: Fraction, tail_bound: Fraction) -> tuple[Fraction, Fraction]:
    """Bracket cos(t) for 0 < t < sqrt(2) via the alternating Taylor series."""
    term = Fraction(1)
    total = Fraction(0)
    j = 0
    lo = hi = None
    t2 = t * t
    while True:
        total += term
        if j % 2 == 0:
            hi = total
        else:
            lo = total
        next_term = -term * t2 / ((2 * j + 1) * (2 * j + 2))
        if lo is not None and hi is not None and abs(next_term) < tail_bound:
            return lo, hi
        term = next_term
        j += 1


class FieldContext:
    """Arithmetic context for Q(theta), theta = 2cos(pi/M).

    Immutable after construction apart from a monotonically shrinking
    isolating interval cache, which only ever replaces the interval with
    a sub-interval (so concurrent readers always see a valid one).
    """

    __slots__ = (
        "M",
        "minpoly",
        "degree",
        "zero",
        "one",
        "two",
        "theta",
        "theta_float",
        "_interval",
        "_power_rows",
        "_caches",
    )

    def __init__(self, M: int, minpoly: tuple, interval: tuple[Fraction, Fraction]):
        self.M = M
        self.minpoly = minpoly
        self.degree = len(minpoly) - 1
        self._interval = interval
        self._power_rows = self._build_power_rows()
        self.zero = self.rational(0)
        self.one = self.rational(1)
        self.two = self.rational(2)
        theta_coeffs = [Fraction(0)] * self.degree
        if self.degree == 1:
            theta_coeffs[0] = Fraction(-minpoly[0], minpoly[1])
        else:
            theta_coeffs[1] = Fraction(1)
        self.theta = AlgReal(self, tuple(theta_coeffs))
        # Float shadow of theta, for sanity cross-checks and witness
        # output only; never consulted for an exact decision.
        self.theta_float = 2.0 * math.cos(math.pi / M) if self.degree > 1 else float(theta_coeffs[0])
        self._caches: dict = {}

    def _build_power_rows(self) -> list[tuple[Fraction, ...]]:
        """Coefficient rows of theta^k for k = degree .. 2*degree - 2."""
        d = self.degree
        rows: list[tuple[Fraction, ...]] = []
        # theta^d = -(c_0 + c_1 theta + ... + c_{d-1} theta^{d-1})
        current = tuple(Fraction(-c) for c in self.minpoly[:-1])
        for _ in range(max(0, d - 1)):
            rows.append(current)
            shifted = (Fraction(0),) + current[:-1]
            top = current[-1]
            current = tuple(
                shifted[i] + top * rows[0][i] for i in range(d)
            )
        return rows

    def rational(self, value) -> AlgReal:
        q = Fraction(value)
        coeffs = (q,) + (Fraction(0),) * (self.degree - 1)
        return AlgReal(self, coeffs)

    def from_coeffs(self, coeffs) -> AlgReal:
        """Build an element from polynomial coefficients in theta.

        Longer inputs are reduced modulo the minimal polynomial; shorter
        ones are zero-padded to canonical length.
        """
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > self.degree:
            _, rem = pol.divmod_poly(tuple(cs), self.minpoly)
            cs = list(rem)
        cs += [Fraction(0)] * (self.degree - len(cs))
        return AlgReal(self, tuple(cs))

    @property
    def isolating_interval(self) -> tuple[Fraction, Fraction]:
        return self._interval

    def _minpoly_sign_at(self, x: Fraction) -> int:
        v = pol.evaluate(self.minpoly, x)
        return (v > 0) - (v < 0)

    def _bisect(self, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
        mid = (lo + hi) / 2
        if self._minpoly_sign_at(mid) == self._minpoly_sign_at(lo):
            return mid, hi
        return lo, mid

    def __eq__(self, other):
        return isinstance(other, FieldContext) and other.M == self.M

    def __hash__(self):
        return hash(("FieldContext", self.M))

    def __repr__(self):
        return f"FieldContext(M={self.M}, degree={self.degree})"


class AlgReal:
    """An element of Q(theta) in canonical reduced form.

    ``coeffs`` always has length ``ctx.degree``; the element is zero iff
    every coefficient is zero.  Instances are immutable and hashable.
    """

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldContext, coeffs: tuple):
        self.ctx = ctx
        self.coeffs = coeffs

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, AlgReal):
            if other.ctx.M != self.ctx.M:
                raise CoxeterInputError("mixed field contexts in arithmetic")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgReal(self.ctx, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgReal(self.ctx, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgReal(self.ctx, tuple(b - a for a, b in zip(self.coeffs, o.coeffs)))

    def __neg__(self):
        return AlgReal(self.ctx, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        d = self.ctx.degree
        if d == 1:
            return AlgReal(self.ctx, (a[0] * b[0],))
        conv = [Fraction(0)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        out = conv[:d]
        rows = self.ctx._power_rows
        for k in range(d, 2 * d - 1):
            ck = conv[k]
            if ck:
                row = rows[k - d]
                for i in range(d):
                    if row[i]:
                        out[i] += ck * row[i]
        return AlgReal(self.ctx, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> AlgReal:
        if not any(self.coeffs):
            raise ZeroDivisionError("inverse of zero field element")
        # Extended Euclid: u*self + v*minpoly = 1 in Q[t].
        r0, r1 = self.ctx.minpoly, pol.trim(self.coeffs)
        u0: tuple = ()
        u1: tuple = (Fraction(1),)
        while pol.degree(r1) > 0:
            q, r = pol.divmod_poly(r0, r1)
            r0, r1 = r1, r
            u0, u1 = u1, pol.sub(u0, pol.mul(q, u1))
        lead = r1[0]
        inv_coeffs = pol.scale(u1, Fraction(1, 1) / lead)
        return self.ctx.from_coeffs(inv_coeffs)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    # -- comparisons ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, AlgReal):
            return self.ctx.M == other.ctx.M and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == self.ctx.rational(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.M, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def sign(self) -> int:
        """Exact sign in {-1, 0, +1}."""
        cs = self.coeffs
        if not any(cs):
            return 0
        if not any(cs[1:]):
            return 1 if cs[0] > 0 else -1
        ctx = self.ctx
        lo, hi = ctx._interval
        for _ in range(_MAX_SIGN_BISECTIONS):
            vlo, vhi = _interval_eval(cs, lo, hi)
            if vlo > 0:
                ctx._interval = (lo, hi)
                return 1
            if vhi < 0:
                ctx._interval = (lo, hi)
                return -1
            lo, hi = ctx._bisect(lo, hi)
        raise RuntimeError("sign determination did not converge")  # pragma: no cover

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is None:
            raise TypeError("cannot compare AlgReal with this type")
        return (self - o).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    # -- conversions ------------------------------------------------------

    def __float__(self):
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * self.ctx.theta_float + c
        return acc

    def as_rational(self) -> Fraction:
        if any(self.coeffs[1:]):
            raise ValueError("element is irrational")
        return self.coeffs[0]

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*t" if c != 1 else "t")
            else:
                terms.append(f"{c}*t^{i}" if c != 1 else f"t^{i}")
        return " + ".join(terms) if terms else "0"


def _interval_eval(coeffs, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Exact interval Horner evaluation of a polynomial on [lo, hi]."""
    alo = ahi = Fraction(coeffs[-1])
    for c in reversed(coeffs[:-1]):
        p1, p2, p3, p4 = alo * lo, alo * hi, ahi * lo, ahi * hi
        alo = min(p1, p2, p3, p4) + c
        ahi = max(p1, p2, p3, p4) + c
    return alo, ahi


def _isolating_interval(minpoly: tuple, m: int) -> tuple[Fraction, Fraction]:
    """Rational interval around 2cos(pi/m) containing no other root of minpoly."""
    chain = pol.sturm_chain(tuple(Fraction(c) for c in minpoly))
    tail = Fraction(1, 2**40)
    for _ in range(8):
        clo, chi = _cos_bracket(_PI_HI / m, tail)
        dlo, dhi = _cos_bracket(_PI_LO / m, tail)
        lo, hi = 2 * clo, 2 * dhi
        if pol.count_real_roots(chain, lo, hi) == 1:
            return _widen_to_simple(chain, lo, hi)
        tail /= 2**20
    raise RuntimeError("failed to isolate 2cos(pi/m)")  # pragma: no cover


def _widen_to_simple(chain, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Round the interval outward to small dyadic endpoints when possible.

    Keeps later bisections cheap; the widened interval is kept only if
    it still contains exactly one root.
    """
    grid = 64
    wlo = Fraction(math.floor(lo * grid), grid)
    whi = Fraction(math.ceil(hi * grid), grid)
    if pol.count_real_roots(chain, wlo, whi) == 1:
        return wlo, whi
    return lo, hi


def make_field_context(M: int) -> FieldContext:
    """Field context for Q(2cos(pi/M)); M = 1 yields plain Q.

    For M = 1 no algebraic generator is needed (every edge label is 2 or
    infinity) and the context degenerates to the rationals with a
    placeholder minimal polynomial t - 2.
    """
    if not isinstance(M, int) or M < 1:
        raise CoxeterInputError(f"field parameter must be a positive integer, got {M!r}")
    if M == 1:
        return FieldContext(1, (-2, 1), (Fraction(1), Fraction(3)))
    minpoly = pol.two_cos_minimal_poly(M)
    if len(minpoly) == 2:  # rational theta (M = 2 or 3)
        theta = Fraction(-minpoly[0], minpoly[1])
        return FieldContext(M, minpoly, (theta - 1, theta + 1))
    return FieldContext(M, minpoly, _isolating_interval(minpoly, M))


def two_cos_pi_over(ctx: FieldContext, m) -> AlgReal:
    """Exact 2cos(pi/m) inside ctx; m is an integer >= 2 or INFINITY.

    2cos(pi/m) equals the Chebyshev-style polynomial p_k(theta) with
    k = M/m, where p_k tracks x^k + x^{-k} through x + 1/x = theta; a
    finite m >= 3 is only expressible when it divides M.
    """
    if m is INFINITY:
        return ctx.two
    if not isinstance(m, int) or m < 2:
        raise CoxeterInputError(f"edge label must be an integer >= 2 or infinity, got {m!r}")
    if m == 2:
        return ctx.zero
    if ctx.M % m != 0:
        raise CoxeterInputError(f"2cos(pi/{m}) is not expressible: {m} does not divide M={ctx.M}")
    k = ctx.M // m
    prev, cur = ctx.two, ctx.theta
    if k == 0:
        raise CoxeterInputError("internal: zero power index")
    for _ in range(k - 1):
        prev, cur = cur, ctx.theta * cur - prev
    return cur


def arith(a: AlgReal, b, kind: str) -> AlgReal:
    """Field arithmetic dispatcher: kind in {'add', 'sub', 'mul', 'neg'}."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "neg":
        return -a
    raise CoxeterInputError(f"unknown arithmetic kind {kind!r}")


def sign(a: AlgReal) -> int:
    """Exact sign of a: -1, 0, or 1."""
    return a.sign()
