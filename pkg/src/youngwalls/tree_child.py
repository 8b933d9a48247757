"""Counts of tree-child networks with n leaves and k reticulations, tied to
the wall-tableau tables by tc(n, k) = n!/(n-k)! * a(n-1, k).

Six exact routes are kept deliberately independent so they can be compared,
plus a float asymptotic evaluated in log space (the counts overflow doubles
long before the interesting range ends).
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import closed_forms, wall_tables
from .exact_arith import Nat, binomial, double_factorial, factorial


def _check_domain(n: int, k: int) -> None:
    if n < 1 or not 0 <= k <= n - 1:
        raise ValueError(f"need n >= 1 and 0 <= k <= n-1, got ({n}, {k})")


def tc(n: int, k: int) -> Nat:
    """tc(n, k) = n!/(n-k)! * a(n-1, k), the normative route."""
    _check_domain(n, k)
    return factorial(n) // factorial(n - k) * wall_tables.a_rec(n - 1, k)


def tc_via_b(n: int, k: int) -> Nat:
    """tc(n, k) = n! b(n-1, k) / 2^(n-k-1); the power of two must divide."""
    _check_domain(n, k)
    count, rem = divmod(factorial(n) * wall_tables.b(n - 1, k), 2 ** (n - k - 1))
    assert rem == 0, (n, k)
    return count


def tc_rec(n: int, k: int) -> Nat:
    """tc by its own two-term recurrence

        (n-k) tc(n, k) = (n+1-k)(n-k) tc(n, k-1) + n (2n+k-3) tc(n-1, k)

    seeded only by tc(1, 0) = 1, with tc(i, -1) = tc(i, i) = 0.  Division by
    n - k is checked exact.  Self-contained: never consults the other routes.
    """
    _check_domain(n, k)
    return _tc_rec_memo(n, k)


def _tc_rec_memo(n: int, k: int) -> Nat:
    if k < 0 or k >= n:
        return 0
    if n == 1:
        return 1
    got = _TC_REC.get((n, k))
    if got is None:
        rhs = (n + 1 - k) * (n - k) * _tc_rec_memo(n, k - 1) + n * (2 * n + k - 3) * _tc_rec_memo(
            n - 1, k
        )
        got, rem = divmod(rhs, n - k)
        assert rem == 0, (n, k)
        _TC_REC[(n, k)] = got
    return got


_TC_REC: dict[tuple[int, int], int] = {}


def tc_sum(n: int, k: int) -> Nat:
    """tc by the full-history recurrence

        (n-k)! tc(n, k) = sum_{i=0}^{k} n (2n+i-3) (n-1-i)! tc(n-1, i),

    also self-contained and seeded by tc(1, 0) = 1."""
    _check_domain(n, k)
    return _tc_sum_memo(n, k)


def _tc_sum_memo(n: int, k: int) -> Nat:
    if k < 0 or k >= n:
        return 0
    if n == 1:
        return 1
    got = _TC_SUM.get((n, k))
    if got is None:
        rhs = 0
        for i in range(k + 1):
            rhs += n * (2 * n + i - 3) * factorial(n - 1 - i) * _tc_sum_memo(n - 1, i)
        got, rem = divmod(rhs, factorial(n - k))
        assert rem == 0, (n, k)
        _TC_SUM[(n, k)] = got
    return got


_TC_SUM: dict[tuple[int, int], int] = {}


def tc_chain(k: int, m: int) -> Nat:
    """tc(k+m+1, k) for k >= 1 by climbing one reticulation level:

        sum_{l=0}^{m} (l+2) [prod_{i=l+1}^{m} (1 + k/(i+1)) (2i+3k-1)] tc(k+l+1, k-1)

    where the lower-level values come from the normative route.  The
    rational product is asserted integral at the end.
    """
    if k < 1 or m < 0:
        raise ValueError(f"need k >= 1 and m >= 0, got ({k}, {m})")
    total = Fraction(0)
    prod = Fraction(1)
    # walk l downward so the product over i = l+1..m grows one factor at a time
    for ell in range(m, -1, -1):
        total += (ell + 2) * prod * tc(k + ell + 1, k - 1)
        factor = (1 + Fraction(k, ell + 1)) * (2 * ell + 3 * k - 1)
        prod *= factor
    assert total.denominator == 1, (k, m, total)
    return int(total)


def tc_closed(n: int, k: int) -> Nat:
    """tc by the delta-weighted double-factorial formula

        tc(n, k) = C(n, k) sum_{i=0}^{k} C(k, i) (2n+2k-i-3)!! delta_i

    with delta_0 = 1 and
        delta_i = -sum_{j=1}^{i} C(i, j) (3i+j-3)!!/(3i-3)!! delta_{i-j}.
    """
    _check_domain(n, k)
    acc = Fraction(0)
    for i in range(k + 1):
        acc += binomial(k, i) * double_factorial(2 * n + 2 * k - i - 3) * closed_forms.delta(i)
    acc *= binomial(n, k)
    assert acc.denominator == 1, (n, k, acc)
    return int(acc)


def tc_asym_log(n: int, k: int) -> float:
    """Natural log of the asymptotic estimate

        C(n, k) * sqrt(2)/e^n * (2n)^(n+k-1) * P(k, 1/sqrt(2n))

    where P is the four-term correction polynomial.  Log space keeps n in
    the hundreds representable."""
    _check_domain(n, k)
    x = 2.0 * n
    s = math.sqrt(math.pi / 2.0)
    corr = math.fsum(
        [
            1.0,
            -s * k / math.sqrt(x),
            (14.0 * k * k - 26.0 * k + 11.0) / (12.0 * x),
            -s * k * (31.0 * k * k - 93.0 * k + 70.0) / (48.0 * x**1.5),
            (2900.0 * k**4 - 14376.0 * k**3 + 25264.0 * k**2 - 19332.0 * k + 5565.0)
            / (6048.0 * x**2),
        ]
    )
    return (
        math.log(binomial(n, k))
        + 0.5 * math.log(2.0)
        - n
        + (n + k - 1) * math.log(x)
        + math.log(corr)
    )


def tc_asym(n: int, k: int) -> float:
    """Float asymptotic estimate of tc(n, k); inf when it exceeds doubles."""
    try:
        return math.exp(tc_asym_log(n, k))
    except OverflowError:
        return math.inf


def tc_asym_rel_error(n: int, k: int) -> float:
    """|estimate/exact - 1| computed entirely in log space."""
    exact = tc(n, k)
    log_exact = math.log(exact)
    return abs(math.expm1(tc_asym_log(n, k) - log_exact))
