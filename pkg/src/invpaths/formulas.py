"""Closed-form counts of 102-avoiding inversion sequences refined by rank.

Everything here is exact integer arithmetic: intermediate prefactors such
as (t+1)/j are carried as :class:`fractions.Fraction` and the final value
is asserted to be integral, never rounded.

``count_pair_rank`` counts sequences of length n with rank t avoiding 102
together with a second length-3 pattern tau.  The supported tau, with the
closed form used:

=====  ==============================================================
tau    count of rank-t avoiders of {102, tau}, 0 <= t <= n-2
=====  ==============================================================
101    (t+1)/n * sum_i C(n,i) * C(n-t+i-2, 2i-1)
001    2^(n-t-2)
011    F(2n-2t-2)
012    (t+1) * F(2n-2t-3)
021    (t+1) * (2^(n-t-2) - (n-t-1) + sum_m C(2m+t, m)/(m+t+1))
120    C(2n-t-2, n-t-1) - C(2n-2t-3, n-t-1)
201    sum_m a(n,t,m) + sum_m b(n,t,m)   (split by max value, see below)
210    c(n-t-1, t+1) + (t+1)*sum_i C(2i+t+3, i) + sum_i (c(i,t+6)-c(i,5))
110    C(2n-t-2, n-t-1) - sum_{i>=2} C(2n-t-2i, n-t-i)
=====  ==============================================================

Here F is the Fibonacci sequence with F_0 = 0, F_1 = 1 and
c(j, k) = k/(2j+k) * C(2j+k, j) is the ballot number [x^j] C(x)^k.
The rank-(n-1) row is the single all-zero sequence and is served by
``count_102_rank``; pair formulas refuse it.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DomainError

SUPPORTED_PAIR_PATTERNS = (
    "101",
    "001",
    "011",
    "012",
    "021",
    "120",
    "201",
    "210",
    "110",
)


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero outside 0 <= b <= a (extended convention)."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def fib(k: int) -> int:
    """Fibonacci number with F_0 = 0 and F_1 = 1.

    >>> [fib(k) for k in range(7)]
    [0, 1, 1, 2, 3, 5, 8]
    """
    if k < 0:
        raise DomainError("fib is defined for k >= 0")
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def ballot(j: int, k: int) -> int:
    """Ballot number k/(2j+k) * C(2j+k, j), the coefficient [x^j] C(x)^k."""
    if j < 0 or k < 0:
        raise DomainError("ballot needs j, k >= 0")
    if k == 0:
        return 1 if j == 0 else 0
    num = k * binom(2 * j + k, j)
    assert num % (2 * j + k) == 0
    return num // (2 * j + k)


def _exact_int(x: Fraction, context: str) -> int:
    if x.denominator != 1:
        raise AssertionError(f"{context}: non-integral value {x}")
    return x.numerator


def count_102_rank(n: int, t: int) -> int:
    """Number of 102-avoiding inversion sequences of length n with rank t.

    Evaluates sum_{j=t+1}^{n} (-1)^(n-j) * (t+1)/j * C(3j-t-2, j-t-1)
    * C(j, n-j); each summand's division by j is exact.
    """
    if n < 1 or not 0 <= t <= n - 1:
        raise DomainError(f"count_102_rank needs n >= 1, 0 <= t <= n-1, got {(n, t)}")
    total = 0
    for j in range(t + 1, n + 1):
        num = (t + 1) * binom(3 * j - t - 2, j - t - 1)
        assert num % j == 0
        term = (num // j) * binom(j, n - j)
        total += term if (n - j) % 2 == 0 else -term
    assert total >= 0
    return total


def _pair_101(n: int, t: int) -> Fraction:
    s = sum(
        binom(n, i) * binom(n - t + i - 2, 2 * i - 1) for i in range(1, n - t)
    )
    return Fraction((t + 1) * s, n)


def _pair_001(n: int, t: int) -> Fraction:
    return Fraction(2 ** (n - t - 2))


def _pair_011(n: int, t: int) -> Fraction:
    return Fraction(fib(2 * n - 2 * t - 2))


def _pair_012(n: int, t: int) -> Fraction:
    return Fraction((t + 1) * fib(2 * n - 2 * t - 3))


def _pair_021(n: int, t: int) -> Fraction:
    inner = Fraction(2 ** (n - t - 2) - (n - t - 1))
    for m in range(1, n - t):
        inner += Fraction(binom(2 * m + t, m), m + t + 1)
    return (t + 1) * inner


def _pair_120(n: int, t: int) -> Fraction:
    return Fraction(binom(2 * n - t - 2, n - t - 1) - binom(2 * n - 2 * t - 3, n - t - 1))


def _a_201(n: int, t: int, m: int) -> Fraction:
    return Fraction(t + 1, m + t + 1) * binom(2 * m + t, m) * binom(n - t - 2, m - 1)


def _b_201(n: int, t: int, m: int) -> Fraction:
    total = Fraction((t + 1) * (2 ** (n - m - t - 2) - 1))
    for j in range(1, m):
        for s in range(t + 1):
            for k in range(n - m - t - 2):
                total += (
                    (2 ** (k + 1) - 1)
                    * Fraction(m + s - j + 1, m + s + 1)
                    * binom(m + j + s, j)
                    * binom(n + j - m - t - k - 4, j - 1)
                )
    return total


def _pair_201(n: int, t: int) -> Fraction:
    total = Fraction(0)
    for m in range(1, n - t):
        total += _a_201(n, t, m)
    for m in range(1, n - t - 2):
        total += _b_201(n, t, m)
    return total


def _pair_210(n: int, t: int) -> Fraction:
    total = Fraction(ballot(n - t - 1, t + 1))
    total += (t + 1) * sum(binom(2 * i + t + 3, i) for i in range(n - t - 2))
    total += sum(ballot(i, t + 6) - ballot(i, 5) for i in range(n - t - 3))
    return total


def _pair_110(n: int, t: int) -> Fraction:
    total = binom(2 * n - t - 2, n - t - 1)
    total -= sum(binom(2 * n - t - 2 * i, n - t - i) for i in range(2, n - t + 1))
    return Fraction(total)


_PAIR_DISPATCH = {
    "101": _pair_101,
    "001": _pair_001,
    "011": _pair_011,
    "012": _pair_012,
    "021": _pair_021,
    "120": _pair_120,
    "201": _pair_201,
    "210": _pair_210,
    "110": _pair_110,
}


def pair_formula_value(tau: str, n: int, t: int) -> int:
    """Raw formula evaluation without the uniform 0 <= t <= n-2 restriction.

    The 210 and 110 formulas are also meaningful on the extreme row
    t = n-1; this entry point exists so that row can be probed against the
    enumeration oracle.  Prefer :func:`count_pair_rank` everywhere else.
    """
    tau = str(tau)
    if tau not in _PAIR_DISPATCH:
        raise DomainError(f"unsupported second pattern {tau!r}")
    t_max = n - 1 if tau in ("210", "110") else n - 2
    if n < 2 or not 0 <= t <= t_max:
        raise DomainError(f"pair formula {tau} needs n >= 2, 0 <= t <= {t_max}, got {(n, t)}")
    value = _exact_int(_PAIR_DISPATCH[tau](n, t), f"pair formula {tau} at {(n, t)}")
    assert value >= 0
    return value


def count_pair_rank(tau: str, n: int, t: int) -> int:
    """Number of inversion sequences of length n, rank t, avoiding 102 and tau.

    >>> count_pair_rank("011", 3, 0)
    3
    >>> count_pair_rank("012", 3, 0)
    2
    """
    if str(tau) not in _PAIR_DISPATCH:
        raise DomainError(f"unsupported second pattern {tau!r}")
    if n < 2 or not 0 <= t <= n - 2:
        raise DomainError(f"count_pair_rank needs n >= 2, 0 <= t <= n-2, got {(n, t)}")
    return pair_formula_value(tau, n, t)


def count_201_by_max(n: int, t: int, m: int, contains_101: bool) -> int:
    """Rank-t avoiders of {102, 201} of length n with maximum entry m.

    With ``contains_101=False`` the sequences must also avoid 101 and
    1 <= m <= n-t-1; with ``contains_101=True`` they must contain 101 and
    1 <= m <= n-t-3.
    """
    if n < 1 or not 0 <= t <= n - 2:
        raise DomainError(f"count_201_by_max needs 0 <= t <= n-2, got {(n, t)}")
    if contains_101:
        if not 1 <= m <= n - t - 3:
            raise DomainError(f"m = {m} outside 1..n-t-3 = {n - t - 3}")
        value = _b_201(n, t, m)
    else:
        if not 1 <= m <= n - t - 1:
            raise DomainError(f"m = {m} outside 1..n-t-1 = {n - t - 1}")
        value = _a_201(n, t, m)
    return _exact_int(value, f"count_201_by_max at {(n, t, m, contains_101)}")


def count_A_subset(n: int, t: int) -> int:
    """Size of the rank-t subclass of {102,120}-avoiders of length n whose
    entry at position max(e)+t, one before the first descent, stays below
    the maximum: C(2n-t-3, n-1)."""
    if n < 2 or not 0 <= t <= n - 2:
        raise DomainError(f"count_A_subset needs n >= 2, 0 <= t <= n-2, got {(n, t)}")
    return binom(2 * n - t - 3, n - 1)
