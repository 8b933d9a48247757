from fractions import Fraction

import pytest

from youngwalls import closed_forms as cf
from youngwalls import wall_tables as wt
from youngwalls.exact_arith import double_factorial, factorial


def test_gamma_first_values():
    assert [cf.gamma(k) for k in range(4)] == [
        Fraction(1),
        Fraction(-1),
        Fraction(1, 6),
        Fraction(17, 48),
    ]
    with pytest.raises(ValueError):
        cf.gamma(-1)


def test_gamma_defining_sum_vanishes():
    for k in range(1, 41):
        acc = sum(
            cf.gamma(k - i) * Fraction(double_factorial(3 * k + i - 3), factorial(i))
            for i in range(k + 1)
        )
        assert acc == 0, k


def test_delta_values():
    assert [cf.delta(j) for j in range(4)] == [
        Fraction(1),
        Fraction(-1),
        Fraction(1, 3),
        Fraction(17, 8),
    ]


def test_a_closed_matches_recurrence():
    for n in range(26):
        for k in range(n + 1):
            assert cf.a_closed(n, k) == wt.a_rec(n, k)
    with pytest.raises(ValueError):
        cf.a_closed(3, 4)


def test_b_closed_matches_recurrence():
    for n in range(26):
        for k in range(n + 1):
            assert cf.b_closed(n, k) == wt.b(n, k)


def test_a_diag():
    assert [cf.a_diag(n) for n in range(7)] == [1, 1, 7, 106, 2575, 87595, 3864040]


# fixed-k double-factorial expressions, low columns


def _a_fixed_k(n: int, k: int) -> Fraction:
    df = double_factorial
    if k == 0:
        return Fraction(df(2 * n - 1))
    if k == 1:
        return Fraction(df(2 * n + 1) - df(2 * n))
    if k == 2:
        return (n + Fraction(5, 3)) * df(2 * n + 1) - df(2 * n + 2)
    if k == 3:
        return Fraction(n + 3, 3) * df(2 * n + 3) - (n + Fraction(79, 48)) * df(2 * n + 2)
    if k == 4:
        return (Fraction(n * n, 6) + Fraction(7 * n, 6) + Fraction(319, 189)) * df(
            2 * n + 3
        ) - Fraction((16 * n + 31) * (n + 2), 24) * df(2 * n + 2)
    if k == 5:
        return Fraction(63 * n * n + 609 * n + 1006, 1890) * (2 * n + 5) * df(
            2 * n + 3
        ) - (Fraction(n * n, 6) + Fraction(13 * n, 16) + Fraction(9107, 9216)) * df(2 * n + 4)
    raise ValueError(k)


def _b_fixed_k(n: int, k: int) -> Fraction:
    fac = factorial
    if k == 0:
        return Fraction(fac(2 * n), fac(n) * fac(n + 1))
    if k == 1:
        return Fraction(fac(2 * n + 1), 2 * fac(n) ** 2) - 2 ** (2 * n - 1)
    if k == 2:
        return Fraction(n, 4) * (n + Fraction(5, 3)) * Fraction(
            fac(2 * n + 1), fac(n) ** 2
        ) - n * (n + 1) * 2 ** (2 * n - 1)
    if k == 3:
        return Fraction(n + 3, 3 * 2**4) * Fraction(
            fac(2 * n + 3), fac(n - 2) * fac(n + 1)
        ) - (n - 1) * n * (n + 1) * (n + Fraction(79, 48)) * 2 ** (2 * n - 2)
    if k == 4:
        return (Fraction(n * n, 6) + Fraction(7 * n, 6) + Fraction(319, 189)) * Fraction(
            fac(2 * n + 3), 2**5 * fac(n - 3) * fac(n + 1)
        ) - Fraction(16 * n + 31, 3) * (n - 2) * (n - 1) * n * (n + 1) * (n + 2) * 2 ** (
            2 * n - 6
        )
    if k == 5:
        poly = (
            Fraction(n**3, 15)
            + Fraction(73 * n * n, 90)
            + Fraction(5057 * n, 1890)
            + Fraction(503, 189)
        )
        first = poly * Fraction(fac(2 * n + 4), 2**7 * fac(n - 4) * fac(n + 2))
        second = (
            (Fraction(n * n, 6) + Fraction(13 * n, 16) + Fraction(9107, 9216))
            * (n - 3) * (n - 2) * (n - 1) * n * (n + 1) * (n + 2)
            * 2 ** (2 * n - 3)
        )
        return first - second
    raise ValueError(k)


def test_fixed_k_expressions_for_a():
    for k in range(6):
        for n in range(max(k, 2), 13):
            assert _a_fixed_k(n, k) == wt.a_rec(n, k), (n, k)


def test_fixed_k_expressions_for_b():
    for k in range(6):
        for n in range(max(k, 2), 13):
            assert _b_fixed_k(n, k) == wt.b(n, k), (n, k)


def test_omega_init_values_and_vanishing():
    assert cf.omega_init(0, 0) == 1
    assert cf.omega_init(1, 0) == 1
    assert cf.omega_init(1, 1) == 1
    assert cf.omega_init(2, 1) == 7
    assert cf.omega_init(3, 0) == 5
    for k in range(1, 9):
        assert cf.omega_init(k - 1, k) == 0
    with pytest.raises(ValueError):
        cf.omega_init(1, 3)
    with pytest.raises(ValueError):
        cf.omega_init(-1, 0)


def test_alpha_fixtures_and_domain():
    assert cf.alpha(1, 1, 1) == -1
    assert cf.alpha(2, 1, 1) == -1
    assert cf.alpha(2, 1, 2) == 1
    with pytest.raises(ValueError):
        cf.alpha(1, 0, 1)
    with pytest.raises(ValueError):
        cf.alpha(1, 1, 3)  # s - q - 2p + 2 < 0


def test_lemma28_sum_vanishes():
    for n in range(1, 9):
        for k in range(1, 6):
            for s in range(1, n + 1):
                assert cf.lemma28_rhs(n, k, s, wt.omega) == 0, (n, k, s)
    with pytest.raises(ValueError):
        cf.lemma28_rhs(3, 2, 4, wt.omega)


def test_lemma28_single_step_expansion():
    # s = 1 unfolds to omega(n-1,k,k) - omega(n-1,k,k-1) - omega(n-2,k,k)
    for n in range(2, 8):
        for k in range(1, 5):
            expanded = (
                wt.omega(n - 1, k, k)
                - wt.omega(n - 1, k, k - 1)
                - wt.omega(n - 2, k, k)
            )
            assert cf.lemma28_rhs(n, k, 1, wt.omega) == expanded


def test_lemma29_identity():
    for n in range(1, 9):
        for k in range(1, 7):
            for i in range(k + 1):
                assert cf.lemma29_check(n, k, i), (n, k, i)
    with pytest.raises(ValueError):
        cf.lemma29_check(1, 0, 0)
