import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxverify.algebraic import INFINITY, arith, make_field_context, sign, two_cos_pi_over
from coxverify.errors import CoxeterInputError
from helpers import euler_phi

CTX4 = make_field_context(4)
CTX12 = make_field_context(12)


def test_rejects_nonpositive_m():
    with pytest.raises(CoxeterInputError):
        make_field_context(0)
    with pytest.raises(CoxeterInputError):
        make_field_context(-3)


def test_m1_is_plain_rationals():
    ctx = make_field_context(1)
    assert ctx.degree == 1
    assert ctx.minpoly == (-2, 1)
    assert two_cos_pi_over(ctx, 2) == 0
    assert two_cos_pi_over(ctx, INFINITY) == 2
    with pytest.raises(CoxeterInputError):
        two_cos_pi_over(ctx, 3)


@pytest.mark.parametrize("m,expected_minpoly,approx", [
    (4, (-2, 0, 1), math.sqrt(2)),
    (6, (-3, 0, 1), math.sqrt(3)),
    (5, (-1, -1, 1), 2 * math.cos(math.pi / 5)),
    (15, (1, -4, -4, 1, 1), 2 * math.cos(math.pi / 15)),
])
def test_field_context_examples(m, expected_minpoly, approx):
    ctx = make_field_context(m)
    assert ctx.minpoly == expected_minpoly
    assert ctx.degree == (1 if m == 1 else euler_phi(2 * m) // 2)
    lo, hi = ctx.isolating_interval
    assert lo < Fraction(approx).limit_denominator(10**9) < hi
    assert abs(float(ctx.theta) - approx) < 1e-12


def test_theta_satisfies_minpoly_exactly():
    for m in (3, 4, 5, 6, 12, 15):
        ctx = make_field_context(m)
        acc = ctx.zero
        for c in reversed(ctx.minpoly):
            acc = acc * ctx.theta + c
        assert not acc


def test_theta_squared_reduces():
    t = CTX4.theta
    assert t * t == 2
    assert (t * t - 2).sign() == 0


def test_two_cos_values():
    ctx6 = make_field_context(6)
    assert two_cos_pi_over(ctx6, 2) == 0
    assert two_cos_pi_over(ctx6, 3) == 1
    assert two_cos_pi_over(ctx6, INFINITY) == 2
    assert two_cos_pi_over(ctx6, 6) == ctx6.theta
    with pytest.raises(CoxeterInputError):
        two_cos_pi_over(ctx6, 5)
    ctx12 = CTX12
    for m in (2, 3, 4, 6, 12):
        value = two_cos_pi_over(ctx12, m)
        assert abs(float(value) - 2 * math.cos(math.pi / m)) < 1e-12
        assert value.sign() == (0 if m == 2 else 1)


def test_sign_examples():
    assert sign(CTX4.zero) == 0
    assert sign(CTX4.theta - 1) == 1          # sqrt(2) > 1
    ctx6 = make_field_context(6)
    assert sign(1 - ctx6.theta) == -1         # sqrt(3) > 1
    assert sign(ctx6.rational(Fraction(-3, 7))) == -1


def test_sign_of_tiny_differences():
    # sqrt(2) against nearby rationals: decided exactly, not by float luck
    t = CTX4.theta
    assert (t - Fraction(141421356237309504, 10**17)).sign() == 1
    assert (t - Fraction(141421356237309505, 10**17)).sign() == -1


def test_arith_dispatcher():
    a = CTX4.theta + 1
    b = CTX4.theta - 1
    assert arith(a, b, "add") == a + b
    assert arith(a, b, "sub") == a - b
    assert arith(a, b, "mul") == a * b
    assert arith(a, None, "neg") == -a
    with pytest.raises(CoxeterInputError):
        arith(a, b, "pow")


def test_mixed_context_rejected():
    with pytest.raises(CoxeterInputError):
        CTX4.theta + CTX12.theta


def test_division_and_inverse():
    x = CTX12.theta - 1
    assert x * x.inverse() == 1
    assert (x / x) == 1
    with pytest.raises(ZeroDivisionError):
        CTX12.zero.inverse()


small_rationals = st.fractions(min_value=-9, max_value=9, max_denominator=8)


def algreals(ctx):
    return st.lists(small_rationals, min_size=ctx.degree, max_size=ctx.degree).map(
        lambda coeffs: ctx.from_coeffs(coeffs)
    )


@settings(max_examples=60, deadline=None)
@given(a=algreals(CTX12), b=algreals(CTX12), c=algreals(CTX12))
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert -(-a) == a
    assert a + 0 == a
    assert a * 1 == a


@settings(max_examples=60, deadline=None)
@given(a=algreals(CTX12), b=algreals(CTX12))
def test_float_consistency(a, b):
    exact = float(a * b + a - b)
    approx = float(a) * float(b) + float(a) - float(b)
    assert abs(exact - approx) <= 1e-9 * max(1.0, abs(exact))


@settings(max_examples=60, deadline=None)
@given(a=algreals(CTX4))
def test_sign_matches_float_when_clear(a):
    approx = float(a)
    if abs(approx) > 1e-6:
        assert a.sign() == (1 if approx > 0 else -1)


def test_repr_is_readable():
    assert repr(CTX4.zero) == "0"
    assert "t" in repr(CTX4.theta)
