from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from youngwalls import series_engine as se
from youngwalls import wall_tables as wt


def series(values, order=None):
    return se.TSeries.make(values, order)


def test_make_pads_and_truncates():
    s = series([1, 2], order=4)
    assert s.order == 4
    assert s.coeffs == (1, 2, 0, 0, 0)
    assert series([1, 2, 3, 4], order=1).coeffs == (1, 2)


def test_catalan_series():
    assert [int(c) for c in se.catalan_series(6).coeffs] == [1, 1, 2, 5, 14, 42, 132]


def test_catalan_functional_equation():
    c = se.catalan_series(30)
    assert se.TSeries.one(30) + (c * c).shift_up(1) == c


def test_x2_series_solves_kernel_root():
    x2 = se.x2_series(25)
    assert [int(c) for c in x2.coeffs[:4]] == [0, 1, 1, 2]
    t = se.TSeries.one(25).shift_up(1)
    assert x2 * x2 - x2 + t == se.TSeries.zero(25)


def test_neg_pow_series_examples():
    assert [int(c) for c in se.neg_pow_series(1, 3).coeffs] == [1, 4, 16, 64]
    assert [int(c) for c in se.neg_pow_series(Fraction(3, 2), 3).coeffs] == [1, 6, 30, 140]
    half = se.neg_pow_series(Fraction(1, 2), 20)
    assert half * half == se.neg_pow_series(1, 20)


def test_divide_t_requires_divisibility():
    s = series([0, 0, 3, 4], order=3)
    assert s.divide_t(2).coeffs == (3, 4, 0, 0)
    with pytest.raises(ValueError):
        series([1, 2]).divide_t()


def test_shift_up_keeps_order():
    s = series([1, 2, 3])
    assert s.shift_up(1).coeffs == (0, 1, 2)
    assert s.shift_up(5).coeffs == (0, 0, 0)


def test_t_derivative():
    s = series([5, 1, 7])
    assert s.t_derivative().coeffs == (0, 1, 14)


def test_compose_needs_zero_constant_term():
    outer = series([1, 1], order=6)  # 1 + t
    inner = se.x2_series(6)
    assert outer.compose(inner) == se.TSeries.one(6) + inner
    with pytest.raises(ValueError):
        outer.compose(series([1, 1], order=6))


small_series = st.lists(
    st.integers(min_value=-9, max_value=9), min_size=1, max_size=6
).map(lambda v: series(v, order=5))


@settings(max_examples=60)
@given(small_series, small_series, small_series)
def test_ring_laws(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f


@settings(max_examples=40)
@given(small_series, st.integers(min_value=0, max_value=4))
def test_shift_then_divide_roundtrip(f, j):
    assert f.shift_up(j).divide_t(j).coeffs[: f.order + 1 - j] == f.coeffs[: f.order + 1 - j]


def test_dk_from_table():
    assert [int(c) for c in se.dk_from_table(1, 4).coeffs] == [0, 1, 7, 38, 187]
    assert [int(c) for c in se.dk_from_table(0, 4).coeffs] == [1, 1, 2, 5, 14]


def test_dk_closed_reduces_at_k1():
    lhs = se.dk_closed(1, 10)
    rhs = (
        se.neg_pow_series(Fraction(3, 2), 10) - se.neg_pow_series(1, 10)
    ).scale(Fraction(1, 2))
    assert lhs == rhs


def test_dk_closed_rejects_zero():
    with pytest.raises(ValueError):
        se.dk_closed(0, 5)


def test_dk_kernel_examples():
    assert [int(c) for c in se.dk_kernel(2, 5).coeffs] == [0, 0, 7, 106, 1010, 7740]
    with pytest.raises(ValueError):
        se.dk_kernel(0, 5)


def test_three_routes_agree():
    for k in range(1, 9):
        table, closed, kernel = se.dk_threeway(k, 20)
        assert table == closed == kernel, k


def test_fk_next_entrywise_rule():
    b0 = se.bk_from_table(0, 4, 4)
    f1 = se.fk_next(b0, 1)
    for j in range(5):
        for n in range(5):
            assert f1.entry(j, n) == n * b0.entry(j, n)


def test_bk_solve_reproduces_table_rectangle():
    for k in range(4):
        _, _, b = se.kernel_chain(k, 16)
        assert b.truncate(8, 8) == se.bk_from_table(k, 8, 8), k


def test_b0_entries_are_wall_free_counts():
    _, _, b0 = se.kernel_chain(0, 16)
    assert b0.entry(1, 1) == 2
    for j in range(9):
        for m in range(9):
            assert b0.entry(j, m) == wt.b3_hook(m + j, m)


def test_kernel_residual_vanishes():
    for k in range(6):
        f, d, b = se.kernel_chain(k, 24)
        res = se.kernel_residual(b, f, d)
        assert all(res.entry(j, n) == 0 for j in range(13) for n in range(13)), k


def test_bk_solve_checks_divisibility():
    bad_f = se.XTSeries.make([[0, 0], [1, 1]], 2, 1)  # forces a nonzero constant term
    d = se.catalan_series(1)
    with pytest.raises(ValueError):
        se.bk_solve(bad_f, d)


def test_to_text_format():
    assert series([1, Fraction(1, 2), -3]).to_text() == "1 1/2 -3"


def test_xtseries_slicing_and_shifts():
    b1 = se.bk_from_table(1, 3, 5)
    assert [int(c) for c in b1.slice_x(0).coeffs] == [0, 1, 7, 38, 187, 874]
    assert b1.mul_x().entry(1, 2) == b1.entry(0, 2)
    assert b1.mul_t().entry(0, 2) == b1.entry(0, 1)
