"""Integer and rational primitives shared by every counting module.

All counts are arbitrary-precision ints and all coefficient arithmetic is
exact rational; floats never appear here.
"""

from __future__ import annotations

import math
from fractions import Fraction

Nat = int
ExactRational = Fraction


def factorial(n: int) -> Nat:
    """n! for n >= 0."""
    if n < 0:
        raise ValueError(f"factorial undefined for {n}")
    return math.factorial(n)


def double_factorial(m: int) -> Nat:
    """m!! = m (m-2) (m-4) ..., with 0!! = (-1)!! = 1.

    Arguments below -1 are rejected on purpose: identities that would need
    them must restrict their ranges instead of leaning on a silent extension.
    """
    if m < -1:
        raise ValueError(f"double factorial undefined for {m}")
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def binomial(n: int, k: int) -> Nat:
    """Binomial coefficient, zero outside 0 <= k <= n.

    The zero extension is load bearing: the alternating transforms between
    the b and u tables rely on out-of-range terms vanishing.
    """
    if n < 0:
        raise ValueError(f"binomial needs nonnegative n, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def rat(num: int, den: int = 1) -> ExactRational:
    """Exact fraction num/den in lowest terms, sign carried by the numerator."""
    if den == 0:
        raise ValueError("zero denominator")
    return Fraction(num, den)
