"""Memoized recurrence tables for the wall-tableau counting sequences.

Four sequences live here:

* ``a(n, k)`` counts fillings of the three-row shape (n, n, k) whose bottom
  row carries walls between every pair of adjacent cells,
* ``b3(n, m, k)`` counts fillings of the deformed shape (n, m, m) where
  m - k top-row cells are removed and the surviving adjacent top cells are
  separated by walls,
* ``b(n, k) = b3(n, n, k)`` is its diagonal,
* ``omega(n, m, k)`` is a rational-valued companion table whose value at
  (n, m, k) equals b3(n + m, m, k); integrality is asserted, not assumed.

Tables are filled iteratively (no deep recursion) and memoized in dense
lists below an index threshold with a dict fallback above it, so pulling a
single far-out value does not allocate a gigantic array.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from . import closed_forms
from .exact_arith import Nat, binomial, double_factorial, factorial


class _Memo:
    """Nested dense lists for small indices, dict fallback above the limit."""

    def __init__(self, dense_limit: int = 512) -> None:
        self._limit = dense_limit
        self._dense: list = []
        self._sparse: dict[tuple[int, ...], object] = {}

    def get(self, key: tuple[int, ...]):
        if all(0 <= i < self._limit for i in key):
            node = self._dense
            for i in key:
                if i >= len(node):
                    return None
                node = node[i]
            return node
        return self._sparse.get(key)

    def set(self, key: tuple[int, ...], value) -> None:
        if all(0 <= i < self._limit for i in key):
            node = self._dense
            for i in key[:-1]:
                while i >= len(node):
                    node.append([])
                node = node[i]
            last = key[-1]
            while last >= len(node):
                node.append(None)
            node[last] = value
        else:
            self._sparse[key] = value


class CountTable2:
    """Triangular table of a(n, k), filled by the one-step recurrence

        a(n, k) = a(n, k-1) + (2n + k - 1) a(n-1, k),   a(n, 0) = (2n-1)!!

    with a(n, k) = 0 outside 0 <= k <= n.  Entries are immutable once
    computed; repeated queries return the identical object.
    """

    def __init__(self) -> None:
        self._memo = _Memo()

    def value(self, n: int, k: int) -> Nat:
        if k < 0 or n < 0 or k > n:
            return 0
        got = self._memo.get((n, k))
        if got is None:
            self._fill(n, k)
            got = self._memo.get((n, k))
        return got

    def _fill(self, n: int, k: int) -> None:
        for i in range(n + 1):
            for j in range(min(i, k) + 1):
                if self._memo.get((i, j)) is not None:
                    continue
                if j == 0:
                    v = double_factorial(2 * i - 1)
                else:
                    left = self._memo.get((i, j - 1))
                    below = self._memo.get((i - 1, j)) if j <= i - 1 else 0
                    v = left + (2 * i + j - 1) * below
                self._memo.set((i, j), v)

    def cells(self, nmax: int, kmax: int | None = None) -> Iterator[tuple[int, int, Nat]]:
        """Row-major (n ascending, then k ascending) iteration over the
        triangle n <= nmax, k <= min(n, kmax)."""
        for n in range(nmax + 1):
            for k in range(min(n, nmax if kmax is None else kmax) + 1):
                yield n, k, self.value(n, k)


class CountTable3:
    """Simplex table of b3(n, m, k) for 0 <= k <= m <= n, filled by

        b3(n, m, k) = (m-k+1) b3(n, m, k-1) + b3(n, m-1, k) + b3(n-1, m, k)

    for n >= 1 with the single seed b3(0, 0, 0) = 1 and zero outside the
    simplex.
    """

    def __init__(self) -> None:
        self._memo = _Memo()

    def value(self, n: int, m: int, k: int) -> Nat:
        if k < 0 or m < 0 or n < 0 or k > m or m > n:
            return 0
        got = self._memo.get((n, m, k))
        if got is None:
            self._fill(n)
            got = self._memo.get((n, m, k))
        return got

    def _fill(self, n: int) -> None:
        get = self._memo.get
        for i in range(n + 1):
            for mm in range(i + 1):
                for kk in range(mm + 1):
                    if get((i, mm, kk)) is not None:
                        continue
                    if i == 0:
                        v = 1
                    else:
                        drop_k = get((i, mm, kk - 1)) if kk >= 1 else 0
                        drop_m = get((i, mm - 1, kk)) if kk <= mm - 1 else 0
                        drop_n = get((i - 1, mm, kk)) if mm <= i - 1 else 0
                        v = (mm - kk + 1) * drop_k + drop_m + drop_n
                    self._memo.set((i, mm, kk), v)

    def cells(self, nmax: int) -> Iterator[tuple[int, int, int, Nat]]:
        """Row-major (n, then m, then k) iteration over the filled simplex."""
        for n in range(nmax + 1):
            for m in range(n + 1):
                for k in range(m + 1):
                    yield n, m, k, self.value(n, m, k)


class OmegaTable:
    """Rational companion table omega(n, m, k) with the downward recurrence

        omega(n, m, k) = omega(n-1, m+1, k)
                         - (m-k+2) omega(n-1, m+1, k-1)
                         - omega(n-2, m+1, k)

    for n >= 1, seed row omega(0, m, k) given in closed form, and
    omega(-1, m, k) = 0.  Values above the k = m + 1 layer vanish.  Reads
    assert integrality and hand back ints.
    """

    def __init__(self) -> None:
        self._memo: dict[tuple[int, int, int], Fraction] = {}

    def value(self, n: int, m: int, k: int) -> Nat:
        if n < -1:
            raise ValueError(f"omega needs n >= -1, got {n}")
        if m < 0:
            raise ValueError(f"omega needs m >= 0, got {m}")
        v = self._exact(n, m, k)
        assert v.denominator == 1, (n, m, k, v)
        return int(v)

    def _exact(self, n: int, m: int, k: int) -> Fraction:
        if k < 0 or n == -1 or k > m + 1:
            return Fraction(0)
        if n == 0:
            return closed_forms.omega_init(m, k)
        got = self._memo.get((n, m, k))
        if got is not None:
            return got
        # Depth of this recursion is bounded by n, which stays small; the
        # indices drift toward the closed seed row as n decreases.
        v = (
            self._exact(n - 1, m + 1, k)
            - (m - k + 2) * self._exact(n - 1, m + 1, k - 1)
            - self._exact(n - 2, m + 1, k)
        )
        self._memo[(n, m, k)] = v
        return v


_A = CountTable2()
_B3 = CountTable3()
_OMEGA = OmegaTable()


def a_rec(n: int, k: int) -> Nat:
    """a(n, k) from the memoized one-step recurrence; 0 outside 0 <= k <= n."""
    return _A.value(n, k)


def a_alt(n: int, k: int) -> Nat:
    """a(n, k) from the independent column-to-column expansion

        a(n, k) = a(n, k-1)
                  + sum_{i=k}^{n-1} (prod_{j=i}^{n-1} (2j + k + 1)) a(i, k-1),

    which rebuilds each column from the previous one without touching the
    one-step recurrence.  Kept deliberately separate from a_rec as a
    cross-check route.
    """
    if k < 0 or n < 0 or k > n:
        return 0
    got = _A_ALT_MEMO.get((n, k))
    if got is not None:
        return got
    if k == 0:
        v = double_factorial(2 * n - 1)
    else:
        v = a_alt(n, k - 1)
        prod = 1
        for i in range(n - 1, k - 1, -1):
            prod *= 2 * i + k + 1
            v += prod * a_alt(i, k - 1)
    _A_ALT_MEMO[(n, k)] = v
    return v


_A_ALT_MEMO: dict[tuple[int, int], int] = {}


def b3(n: int, m: int, k: int) -> Nat:
    """b3(n, m, k) from the memoized three-index recurrence; 0 outside the
    simplex 0 <= k <= m <= n."""
    return _B3.value(n, m, k)


def b(n: int, k: int) -> Nat:
    """Two-index b(n, k) = b3(n, n, k); 0 outside 0 <= k <= n."""
    return _B3.value(n, n, k)


def b3_hook(n: int, m: int) -> Nat:
    """Wall-free base layer b3(n, m, 0) in closed form,

        (n + m)! (n - m + 1) / (m! (n + 1)!)

    (the two-row ballot number).  Rejects m > n."""
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got ({n}, {m})")
    v = Fraction(factorial(n + m) * (n - m + 1), factorial(m) * factorial(n + 1))
    assert v.denominator == 1
    return int(v)


def b_cor_rec(n: int, k: int) -> Nat:
    """b(n, k) from the rational two-term recurrence

        b(n, k) = (n-k+2)/2 * b(n, k-1) + 2 (2n+k-1)/(n-k+1) * b(n-1, k)

    with Catalan base b(n, 0).  Exercises exact rational arithmetic; the
    result is asserted integral.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got ({n}, {k})")
    v = _b_cor_exact(n, k)
    assert v.denominator == 1, (n, k, v)
    return int(v)


def _b_cor_exact(n: int, k: int) -> Fraction:
    if k < 0 or n < 0 or k > n:
        return Fraction(0)
    if k == 0:
        return Fraction(binomial(2 * n, n), n + 1)
    got = _B_COR_MEMO.get((n, k))
    if got is None:
        got = Fraction(n - k + 2, 2) * _b_cor_exact(n, k - 1) + Fraction(
            2 * (2 * n + k - 1), n - k + 1
        ) * _b_cor_exact(n - 1, k)
        _B_COR_MEMO[(n, k)] = got
    return got


_B_COR_MEMO: dict[tuple[int, int], Fraction] = {}


def omega(n: int, m: int, k: int) -> Nat:
    """omega(n, m, k) as an integer; equals b3(n + m, m, k)."""
    return _OMEGA.value(n, m, k)
