"""Truncated power series arithmetic: worked examples, errors, ring laws."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from riordan import (
    CompositionError,
    DivisionByZeroSeries,
    OrderError,
    ReversionError,
    SqrtError,
    TruncSeries,
    ValuationError,
)

from conftest import longdiv

N = 16


def poly(coeffs, order=N):
    return TruncSeries.polynomial(coeffs, order)


def ints(s, count=None):
    coeffs = s.coeffs if count is None else s.coeffs[:count]
    assert all(c.denominator == 1 for c in coeffs)
    return [int(c) for c in coeffs]


FIB_DEN = [1, -1, -1]


# ---- addition ----

def test_add_cancellation():
    assert poly([1, 1]) + poly([1, -1]) == poly([2])


def test_add_identity():
    fib = 1 / poly(FIB_DEN)
    assert fib + TruncSeries.zero(N) == fib


def test_add_shifted_fib_gives_modified_lucas():
    # (1 + z^2) * F(z) expanded two ways
    fib = 1 / poly(FIB_DEN)
    lhs = fib + poly([0, 0, 1]) * fib
    assert lhs.coeffs[:6] == tuple(longdiv([1, 0, 1], FIB_DEN, 6))
    assert ints(lhs, 6) == [1, 1, 3, 4, 7, 11]


def test_add_truncates_to_min_order():
    a = TruncSeries.polynomial([1, 2, 3], 8)
    b = TruncSeries.polynomial([1], 5)
    assert (a + b).order == 5
    assert (b - a).order == 5


# ---- multiplication ----

def test_mul_difference_of_squares():
    assert poly([1, 1]) * poly([1, -1]) == poly([1, 0, -1])


def test_mul_fib_by_denominator_is_one():
    fib = 1 / poly(FIB_DEN)
    assert fib * poly(FIB_DEN) == TruncSeries.one(N)


def test_mul_fib_squared_is_convolved_fib():
    fib = 1 / poly(FIB_DEN)
    assert ints(fib * fib, 6) == [1, 2, 5, 10, 20, 38]


# ---- division ----

def test_div_fibonacci():
    assert ints(1 / poly(FIB_DEN), 7) == [1, 1, 2, 3, 5, 8, 13]


def test_div_modified_lucas():
    assert ints(poly([1, 0, 1]) / poly(FIB_DEN), 7) == [1, 1, 3, 4, 7, 11, 18]


def test_div_valuation_cancellation():
    q = poly([0, 0, 1]) / poly([0, 1])
    assert q == TruncSeries.z(N - 1)
    assert q.order == N - 1


def test_div_by_zero_series():
    with pytest.raises(DivisionByZeroSeries):
        poly([1]) / TruncSeries.zero(N)


def test_div_valuation_error():
    with pytest.raises(ValuationError):
        poly([0, 1]) / poly([0, 0, 1])


def test_div_zero_numerator_by_z():
    assert (TruncSeries.zero(N) / poly([0, 1])).is_zero


# ---- composition ----

def test_compose_identity_substitution():
    fib = 1 / poly(FIB_DEN)
    assert fib.compose(TruncSeries.z(N)) == fib


def test_compose_mobius_pair_is_z():
    one = TruncSeries.one(N)
    f = TruncSeries.z(N) / (one - TruncSeries.z(N))
    g = TruncSeries.z(N) / (one + TruncSeries.z(N))
    assert f.compose(g) == TruncSeries.z(N)


def test_compose_pascal_row_sums():
    # h(f) alone is (1-z)/(1-2z); scaling by g = 1/(1-z) gives the Pascal
    # row-sum series 1/(1-2z)
    one = TruncSeries.one(N)
    z = TruncSeries.z(N)
    g = 1 / (one - z)
    composed = g.compose(z / (one - z))
    assert composed == (one - z) / (one - 2 * z)
    assert ints(g * composed) == [2 ** k for k in range(N)]


def test_compose_rejects_nonzero_constant():
    with pytest.raises(CompositionError):
        poly([1]).compose(poly([1, 1]))


# ---- reversion ----

def test_reverse_z():
    assert TruncSeries.z(N).reverse() == TruncSeries.z(N)


def test_reverse_mobius():
    one = TruncSeries.one(N)
    z = TruncSeries.z(N)
    assert (z / (one - z)).reverse() == z / (one + z)


def test_reverse_lucas_numerator_matches_closed_form():
    # closed form: (-(1+z) + sqrt(5z^2+10z+1)) / (2(2+z))
    g = poly([0, 1, 2]) / poly(FIB_DEN)
    gbar = g.reverse()
    closed = (-poly([1, 1]) + poly([1, 10, 5]).sqrt()) / poly([4, 2])
    assert gbar == closed
    assert g.compose(gbar) == TruncSeries.z(N)
    assert gbar.compose(g) == TruncSeries.z(N)


@pytest.mark.parametrize("bad", [[1, 1], [0, 0, 1], [0]])
def test_reverse_preconditions(bad):
    with pytest.raises(ReversionError):
        poly(bad).reverse()


# ---- square root ----

def test_sqrt_one():
    assert TruncSeries.one(N).sqrt() == TruncSeries.one(N)


def test_sqrt_perfect_square_polynomial():
    assert poly([1, -2, 1]).sqrt() == poly([1, -1])


def test_sqrt_in_fibonacci_f_closed_form():
    root = poly([1, -6, -1, 10, 5]).sqrt()
    f = (poly(FIB_DEN) - root) / poly([2, -2, -2])
    assert ints(f, 7) == [0, 1, 3, 9, 32, 126, 538]


def test_sqrt_rejects_non_square():
    with pytest.raises(SqrtError):
        poly([2]).sqrt()


def test_sqrt_rejects_zero_constant():
    with pytest.raises(SqrtError):
        poly([0, 1]).sqrt()


# ---- derivative ----

def test_derivative_of_z():
    assert TruncSeries.z(3).derivative() == TruncSeries.polynomial([1], 2)


def test_derivative_example_values():
    d = TruncSeries.polynomial([0, 1, 3, 9, 32], 5).derivative()
    assert ints(d) == [1, 6, 27, 128]


def test_derivative_of_constant_is_zero():
    assert TruncSeries.polynomial([7], 4).derivative().is_zero


def test_derivative_drops_order_by_one():
    assert poly([1, 2, 3]).derivative().order == N - 1
    assert TruncSeries([5]).derivative() == TruncSeries([0])


# ---- misc structure ----

def test_getitem_beyond_order():
    with pytest.raises(OrderError):
        poly([1], 4)[4]


def test_truncate_bounds():
    with pytest.raises(OrderError):
        poly([1], 4).truncate(5)


def test_alternate():
    assert poly([1, 2, 3, 4]).alternate() == poly([1, -2, 3, -4])


def test_pow_zero_is_one():
    assert poly([3, 1]) ** 0 == TruncSeries.one(N)


# ---- properties ----

small_fracs = st.fractions(min_value=-3, max_value=3, max_denominator=3)


def series_st(min_order=1, max_order=16):
    return st.lists(small_fracs, min_size=min_order, max_size=max_order).map(TruncSeries)


def zero_const_st(max_order=12):
    return st.lists(small_fracs, min_size=1, max_size=max_order - 1).map(
        lambda tail: TruncSeries([Fraction(0), *tail])
    )


@given(series_st(), series_st())
def test_add_mul_commute(a, b):
    assert a + b == b + a
    assert a * b == b * a


@given(series_st(), series_st(), series_st())
def test_associativity_and_distributivity(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(series_st(min_order=2), series_st(min_order=2))
def test_div_mul_round_trip(a, b):
    bv = b.valuation()
    av = a.valuation()
    if bv is None or (av is not None and av < bv):
        return
    n = min(a.order, b.order) - bv
    if n < 1:
        return
    q = a / b
    assert q * b == a.truncate(n) * TruncSeries.one(b.order)


@given(series_st(), zero_const_st(), zero_const_st())
def test_compose_associativity(a, b, c):
    assert a.compose(b).compose(c) == a.compose(b.compose(c))


@settings(max_examples=100)
@given(zero_const_st(max_order=14))
def test_reverse_round_trips(f):
    if f.order < 2 or f.coeffs[1] == 0:
        return
    fbar = f.reverse()
    z = TruncSeries.z(f.order)
    assert f.compose(fbar) == z
    assert fbar.compose(f) == z


@given(series_st(min_order=2))
def test_sqrt_squares_back(t):
    if t.coeffs[0] == 0:
        return
    s = t * t
    r = s.sqrt()
    assert r * r == s
    assert r.coeffs[0] > 0


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=12),
       st.lists(st.integers(-5, 5), min_size=1, max_size=12))
def test_integer_coefficients_closed_under_ring_ops(a, b):
    sa, sb = TruncSeries(a), TruncSeries(b)
    for result in (sa + sb, sa - sb, sa * sb):
        assert all(c.denominator == 1 for c in result.coeffs)
