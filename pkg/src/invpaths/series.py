"""Exact truncated power series and the generating-function identity catalog.

``TruncatedSeries`` holds coefficients c_0..c_N as exact rationals; all
arithmetic is coefficientwise-exact and binary operations truncate to the
smaller operand order.  ``BivariateSeries`` is a vector of univariate
series indexed by the power of a second variable u, which is all the
two-variable algebra the identity catalog needs (extraction of [u^t]).

The catalog (:class:`IdentityId`, :func:`verify_identity`) checks, with
zero tolerance, the algebraic identities tying the counting series
together, and cross-checks low coefficients against the exhaustive
enumerations of the path modules:

* A and D, the series of 102-avoiders / UVD paths, as fixed points of the
  cubic equations A = 1 + (x - x^2) A^3 and D = (x - x^2)(1 + D)^3;
* D_0, the series of UVD paths with vox 0, via E(y) = y/(1 - E)^2 with
  D_0 = E(x - x^2), its coefficient formula from Lagrange inversion, and
  the power rule D_t = D_0^{t+1};
* the Catalan series C with C = 1/(1 - xC) and C/(1 - xC^2) = (1-4x)^{-1/2};
* A_0, B~_0, G, H: the series of restricted labeled-F-path classes, their
  closed forms, and coefficient formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

from .errors import BadComposition, NonInvertibleConstantTerm
from .formulas import binom, count_102_rank

Number = Union[int, Fraction]


class TruncatedSeries:
    """A power series truncated at a fixed order, with exact coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Number], order: Optional[int] = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            cs = cs[: order + 1] + [Fraction(0)] * (order + 1 - len(cs))
        if not cs:
            raise ValueError("a truncated series needs at least the constant term")
        self.coeffs = tuple(cs)

    # -- construction helpers

    @classmethod
    def constant(cls, value: Number, order: int) -> "TruncatedSeries":
        return cls([value], order)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls.constant(0, order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.constant(1, order)

    @classmethod
    def x(cls, order: int) -> "TruncatedSeries":
        return cls([0, 1], order)

    # -- basics

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)})"

    def first_difference(self, other: "TruncatedSeries") -> Optional[int]:
        """Smallest power where the two series disagree, else None."""
        for n in range(min(self.order, other.order) + 1):
            if self.coeffs[n] != other.coeffs[n]:
                return n
        return None

    # -- arithmetic (binary operations align to the smaller order)

    def _coerce(self, other: Union["TruncatedSeries", Number]) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.constant(other, self.order)

    def __add__(self, other: Union["TruncatedSeries", Number]) -> "TruncatedSeries":
        o = self._coerce(other)
        n = min(self.order, o.order)
        return TruncatedSeries([self.coeffs[i] + o.coeffs[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs])

    def __sub__(self, other: Union["TruncatedSeries", Number]) -> "TruncatedSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Number) -> "TruncatedSeries":
        return self._coerce(other) - self

    def __mul__(self, other: Union["TruncatedSeries", Number]) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([c * Fraction(other) for c in self.coeffs])
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        if self.coeffs[0] == 0:
            raise NonInvertibleConstantTerm("cannot invert a series with c_0 = 0")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        out[0] = 1 / self.coeffs[0]
        for i in range(1, n + 1):
            acc = Fraction(0)
            for j in range(1, i + 1):
                if j <= self.order and self.coeffs[j]:
                    acc += self.coeffs[j] * out[i - j]
            out[i] = -acc / self.coeffs[0]
        return TruncatedSeries(out)

    def __truediv__(self, other: Union["TruncatedSeries", Number]) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return self * (Fraction(1) / Fraction(other))
        return self * other.inverse()

    def __rtruediv__(self, other: Number) -> "TruncatedSeries":
        return self.inverse() * Fraction(other)

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = TruncatedSeries.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by x^k."""
        return TruncatedSeries([Fraction(0)] * k + list(self.coeffs), self.order)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """Substitute a series with zero constant term into this one."""
        if inner.coeffs[0] != 0:
            raise BadComposition("inner series must have zero constant term")
        n = min(self.order, inner.order)
        result = TruncatedSeries.constant(self.coeffs[n], n)
        for i in range(n - 1, -1, -1):  # Horner scheme
            result = result * inner.truncate(n) + self.coeffs[i]
        return result


def x_minus_x2(order: int) -> TruncatedSeries:
    return TruncatedSeries([0, 1, -1], order)


def compose_x_minus_x2(series: TruncatedSeries) -> TruncatedSeries:
    return series.compose(x_minus_x2(series.order))


def catalan_series(order: int) -> TruncatedSeries:
    """C(x) with [x^n] C = binom(2n, n)/(n+1)."""
    return TruncatedSeries([math.comb(2 * n, n) // (n + 1) for n in range(order + 1)])


def sqrt1m4x(order: int, inverse: bool = False) -> TruncatedSeries:
    """(1-4x)^(1/2), or (1-4x)^(-1/2) with ``inverse=True``, exactly."""
    alpha = Fraction(-1, 2) if inverse else Fraction(1, 2)
    coeffs = []
    c = Fraction(1)
    for n in range(order + 1):
        coeffs.append(c)
        c = c * (alpha - n) / (n + 1) * (-4)
    return TruncatedSeries(coeffs)


def fixed_point(
    step: Callable[[TruncatedSeries], TruncatedSeries],
    start: TruncatedSeries,
    max_iterations: Optional[int] = None,
) -> TruncatedSeries:
    """Iterate a series map until all coefficients stabilise.

    The contraction maps used here fix one further coefficient per round,
    so order+1 iterations always suffice.
    """
    order = start.order
    limit = max_iterations if max_iterations is not None else order + 2
    current = start
    for _ in range(limit):
        nxt = step(current).truncate(order)
        if nxt == current:
            return current
        current = nxt
    raise ArithmeticError("fixed-point iteration did not stabilise")


class BivariateSeries:
    """A series in u with TruncatedSeries coefficients, up to u-order T."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[TruncatedSeries]):
        if not rows:
            raise ValueError("need at least the u^0 row")
        order = min(r.order for r in rows)
        self.rows = tuple(r.truncate(order) for r in rows)

    @classmethod
    def from_univariate(cls, series: TruncatedSeries, u_order: int) -> "BivariateSeries":
        zero = TruncatedSeries.zero(series.order)
        return cls([series] + [zero] * u_order)

    @classmethod
    def u_geometric(cls, factor: TruncatedSeries, u_order: int) -> "BivariateSeries":
        """sum_t u^t factor^t, the expansion of 1/(1 - u*factor)."""
        rows = [TruncatedSeries.one(factor.order)]
        for _ in range(u_order):
            rows.append(rows[-1] * factor)
        return cls(rows)

    @classmethod
    def u_geometric_squared(cls, factor: TruncatedSeries, u_order: int) -> "BivariateSeries":
        """sum_t (t+1) u^t factor^t, the expansion of 1/(1 - u*factor)^2."""
        rows = [TruncatedSeries.one(factor.order)]
        power = TruncatedSeries.one(factor.order)
        for t in range(1, u_order + 1):
            power = power * factor
            rows.append((t + 1) * power)
        return cls(rows)

    def pad_u(self, u_order: int) -> "BivariateSeries":
        if u_order < self.u_order:
            return BivariateSeries(self.rows[: u_order + 1])
        zero = TruncatedSeries.zero(self.x_order)
        return BivariateSeries(list(self.rows) + [zero] * (u_order - self.u_order))

    @property
    def u_order(self) -> int:
        return len(self.rows) - 1

    @property
    def x_order(self) -> int:
        return self.rows[0].order

    def u_coeff(self, t: int) -> TruncatedSeries:
        return self.rows[t]

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        n = min(self.u_order, other.u_order)
        return BivariateSeries([self.rows[t] + other.rows[t] for t in range(n + 1)])

    def __mul__(self, other: "BivariateSeries") -> "BivariateSeries":
        n = min(self.u_order, other.u_order)
        rows = []
        for t in range(n + 1):
            acc = TruncatedSeries.zero(min(self.x_order, other.x_order))
            for i in range(t + 1):
                acc = acc + self.rows[i] * other.rows[t - i]
            rows.append(acc)
        return BivariateSeries(rows)

    def scale(self, series: TruncatedSeries) -> "BivariateSeries":
        return BivariateSeries([r * series for r in self.rows])


# --------------------------------------------------------------------------
# identity catalog


class IdentityId(Enum):
    A_CUBIC = "A_CUBIC"
    D_CUBIC = "D_CUBIC"
    LAGRANGE_E = "LAGRANGE_E"
    D_T_POWER = "D_T_POWER"
    CATALAN_FIX = "CATALAN_FIX"
    CATALAN_SQRT = "CATALAN_SQRT"
    A0_CLOSED = "A0_CLOSED"
    B0_CLOSED = "B0_CLOSED"
    G_COEFF = "G_COEFF"
    H0_CLOSED = "H0_CLOSED"
    H_COEFF = "H_COEFF"
    SUM_D_EXPANSION = "SUM_D_EXPANSION"


@dataclass(frozen=True)
class IdentityReport:
    identity: IdentityId
    order: int
    u_order: int
    holds: bool
    first_mismatch: Optional[tuple[str, str, str]] = None  # (power, lhs, rhs)


# enumeration guards for the oracle cross-checks folded into the catalog
ORACLE_UVD_MAX = 7
ORACLE_IS_MAX = 8
ORACLE_LF_MAX = 6


def a_series(order: int) -> TruncatedSeries:
    """Fixed point of A = 1 + (x - x^2) A^3; counts 102-avoiders by length."""
    y = x_minus_x2(order)
    return fixed_point(lambda s: y * s**3 + 1, TruncatedSeries.one(order))


def d_series(order: int) -> TruncatedSeries:
    """Fixed point of D = (x - x^2)(1 + D)^3; counts UVD paths by semilength."""
    y = x_minus_x2(order)
    return fixed_point(lambda s: y * (s + 1) ** 3, TruncatedSeries.zero(order))


def e_series(order: int) -> TruncatedSeries:
    """Fixed point of E = y / (1 - E)^2, in the variable y."""
    y = TruncatedSeries.x(order)
    return fixed_point(lambda s: y * (1 - s).inverse() ** 2, TruncatedSeries.zero(order))


def d0_series(order: int) -> TruncatedSeries:
    """Series of vox-0 UVD paths, built as E(x - x^2)."""
    return compose_x_minus_x2(e_series(order))


def a0_series(order: int) -> TruncatedSeries:
    """Solution of S = 1 + x C^2 S + x^3 C^4 / (1 - x) (last-step split)."""
    c = catalan_series(order)
    one_minus_x_inv = TruncatedSeries([1, -1], order).inverse()
    rhs_tail = TruncatedSeries.x(order) ** 3 * c**4 * one_minus_x_inv
    return (rhs_tail + 1) * (1 - TruncatedSeries.x(order) * c**2).inverse()


def b0_series(order: int) -> TruncatedSeries:
    """Tail-position class sum: sum_s (sum_{k>=2} sum_a (C(s+k-a-1,k-1)-1) x^k) x^s C^{s+1}."""
    c = catalan_series(order)
    x = TruncatedSeries.x(order)
    total = TruncatedSeries.zero(order)
    c_pow = c * c * c  # C^{s+1} for s = 2
    for s in range(2, order + 1):
        label_poly = [0, 0]
        for k in range(2, order - s + 1):
            label_poly.append(
                sum(binom(s + k - a - 1, k - 1) - 1 for a in range(1, s))
            )
        total = total + TruncatedSeries(label_poly, order) * x**s * c_pow
        c_pow = c_pow * c
    return total


def h0_series(order: int) -> TruncatedSeries:
    """Solution of S = 1 + x C^2 S + x^3 C^4 / (1 - x) for the 110 class."""
    return a0_series(order)


def g_u_coeff_closed(t: int, order: int) -> TruncatedSeries:
    """[u^t] of the closed form for the 210-class generating function."""
    c = catalan_series(order)
    x = TruncatedSeries.x(order)
    inv_1mx = (1 - x).inverse()
    invsqrt = sqrt1m4x(order, inverse=True)
    return (
        (t + 1) * x ** (t + 2) * c ** (t + 3) * inv_1mx * invsqrt
        + x**t * c ** (t + 1)
        + x ** (t + 3) * c ** (t + 6) * inv_1mx
        - x ** (t + 3) * c**5 * inv_1mx
    )


def g_bivariate(order: int, u_order: int) -> BivariateSeries:
    """G(u,x) assembled from the step decompositions of the 210 subclasses:
    (A_0 - u x C^2)/(1 - u x C)^2 plus B~_0/((1 - u x C)(1 - u x))."""
    c = catalan_series(order)
    x = TruncatedSeries.x(order)
    xc = x * c
    numerator = BivariateSeries([a0_series(order), -(x * c**2)]).pad_u(u_order)
    a_part = numerator * BivariateSeries.u_geometric_squared(xc, u_order)
    b_part = (
        BivariateSeries.from_univariate(b0_series(order), u_order)
        * BivariateSeries.u_geometric(xc, u_order)
        * BivariateSeries.u_geometric(x, u_order)
    )
    return a_part + b_part


def h_bivariate(order: int, u_order: int) -> BivariateSeries:
    """H(u,x) = H_0 / (1 - u x C)."""
    c = catalan_series(order)
    xc = TruncatedSeries.x(order) * c
    return BivariateSeries.from_univariate(h0_series(order), u_order) * (
        BivariateSeries.u_geometric(xc, u_order)
    )


def _mismatch(power: str, lhs, rhs) -> tuple[str, str, str]:
    return (power, str(lhs), str(rhs))


def _series_check(
    name: str, lhs: TruncatedSeries, rhs: TruncatedSeries
) -> Optional[tuple[str, str, str]]:
    n = lhs.first_difference(rhs)
    if n is None:
        return None
    return _mismatch(f"{name}, x^{n}", lhs.coeff(n), rhs.coeff(n))


def _check_a_cubic(order: int, u_order: int):
    from .inversions import enumerate_is

    a = a_series(order)
    bad = _series_check("A - 1 - (x-x^2)A^3", a, x_minus_x2(order) * a**3 + 1)
    if bad:
        return bad
    for n in range(1, min(order, ORACLE_IS_MAX) + 1):
        oracle = len(enumerate_is(n, ["102"]))
        if a.coeff(n) != oracle:
            return _mismatch(f"x^{n} vs enumeration", a.coeff(n), oracle)
    for n in range(1, order + 1):
        total = sum(count_102_rank(n, t) for t in range(n))
        if a.coeff(n) != total:
            return _mismatch(f"x^{n} vs rank row sum", a.coeff(n), total)
    return None


def _check_d_cubic(order: int, u_order: int):
    from .paths import enumerate_uvd

    d = d_series(order)
    bad = _series_check("D - (x-x^2)(1+D)^3", d, x_minus_x2(order) * (d + 1) ** 3)
    if bad:
        return bad
    for n in range(1, min(order, ORACLE_UVD_MAX) + 1):
        oracle = len(enumerate_uvd(n))
        if d.coeff(n) != oracle:
            return _mismatch(f"x^{n} vs enumeration", d.coeff(n), oracle)
    return None


def _check_lagrange_e(order: int, u_order: int):
    e = e_series(order)
    for t in range(u_order + 1):
        e_pow = e ** (t + 1)
        for n in range(1, order + 1):
            expected = Fraction((t + 1) * binom(3 * n - t - 2, n - t - 1), n)
            if e_pow.coeff(n) != expected:
                return _mismatch(f"t={t}, y^{n}", e_pow.coeff(n), expected)
    return None


def _check_d_t_power(order: int, u_order: int):
    from .paths import enumerate_uvd, vox_word

    d0 = d0_series(order)
    bad = _series_check("D0/(1-D0) - D", d0 * (1 - d0).inverse(), d_series(order))
    if bad:
        return bad
    d0_powers = [d0]
    for _ in range(u_order):
        d0_powers.append(d0_powers[-1] * d0)
    for n in range(1, min(order, ORACLE_UVD_MAX) + 1):
        by_vox: dict[int, int] = {}
        for path in enumerate_uvd(n):
            v = vox_word(path.word)
            by_vox[v] = by_vox.get(v, 0) + 1
        for t in range(min(u_order, n - 1) + 1):
            coeff = d0_powers[t].coeff(n)
            oracle = by_vox.get(t, 0)
            if coeff != oracle:
                return _mismatch(f"t={t}, x^{n} vs vox classes", coeff, oracle)
    return None


def _check_catalan_fix(order: int, u_order: int):
    c = catalan_series(order)
    x = TruncatedSeries.x(order)
    bad = _series_check("C - 1 - xC^2", c, x * c**2 + 1)
    if bad:
        return bad
    return _series_check("C(1-xC) - 1", c * (1 - x * c), TruncatedSeries.one(order))


def _check_catalan_sqrt(order: int, u_order: int):
    c = catalan_series(order)
    x = TruncatedSeries.x(order)
    bad = _series_check(
        "C/(1-xC^2) - (1-4x)^(-1/2)",
        c * (1 - x * c**2).inverse(),
        sqrt1m4x(order, inverse=True),
    )
    if bad:
        return bad
    return _series_check("1-C + xC^2", 1 - c, -(x * c**2))


def _check_a0_closed(order: int, u_order: int):
    c = catalan_series(order)
    x = TruncatedSeries.x(order)
    closed = c + x**2 * c**3 * (1 - x).inverse() * sqrt1m4x(order, inverse=True)
    return _series_check("A0 recursive vs closed", a0_series(order), closed)


def _check_b0_closed(order: int, u_order: int):
    c = catalan_series(order)
    x = TruncatedSeries.x(order)
    closed = x**4 * c**7 * (1 - x).inverse()
    return _series_check("B~0 double sum vs closed", b0_series(order), closed)


def _check_g_coeff(order: int, u_order: int):
    from .fpaths import enumerate_lf, in_class_210

    g = g_bivariate(order, u_order)
    closed = [g_u_coeff_closed(t, order) for t in range(u_order + 1)]
    for t in range(u_order + 1):
        bad = _series_check(f"[u^{t}]G constructed vs closed", g.u_coeff(t), closed[t])
        if bad:
            return bad
    for n in range(min(order, ORACLE_LF_MAX) + 1):
        by_height: dict[int, int] = {}
        for q in enumerate_lf(n):
            if in_class_210(q):
                by_height[q.height] = by_height.get(q.height, 0) + 1
        for t in range(min(u_order, n) + 1):
            coeff = closed[t].coeff(n)
            oracle = by_height.get(t, 0)
            if coeff != oracle:
                return _mismatch(f"t={t}, x^{n} vs 210-class oracle", coeff, oracle)
    return None


def _check_h0_closed(order: int, u_order: int):
    c = catalan_series(order)
    x = TruncatedSeries.x(order)
    closed = (1 - 2 * x) * (1 - x).inverse() * sqrt1m4x(order, inverse=True)
    return _series_check("H0 recursive vs closed", h0_series(order), closed)


def _check_h_coeff(order: int, u_order: int):
    from .fpaths import enumerate_lf, in_class_110

    h = h_bivariate(order, u_order)
    for t in range(u_order + 1):
        h_t = h.u_coeff(t)
        for n in range(t, order + 1):
            # coefficient formula for sequences of length n+1 and rank t
            ln = n + 1
            expected = binom(2 * ln - t - 2, ln - t - 1) - sum(
                binom(2 * ln - t - 2 * i, ln - t - i) for i in range(2, ln - t + 1)
            )
            if h_t.coeff(n) != expected:
                return _mismatch(f"t={t}, x^{n} vs binomial formula", h_t.coeff(n), expected)
    for n in range(min(order, ORACLE_LF_MAX) + 1):
        by_height: dict[int, int] = {}
        for q in enumerate_lf(n):
            if in_class_110(q):
                by_height[q.height] = by_height.get(q.height, 0) + 1
        for t in range(min(u_order, n) + 1):
            coeff = h.u_coeff(t).coeff(n)
            oracle = by_height.get(t, 0)
            if coeff != oracle:
                return _mismatch(f"t={t}, x^{n} vs 110-class oracle", coeff, oracle)
    return None


def _check_sum_d_expansion(order: int, u_order: int):
    d0 = d0_series(order)
    y = x_minus_x2(order)
    y_pows = [TruncatedSeries.one(order)]
    for _ in range(order):
        y_pows.append(y_pows[-1] * y)
    for t in range(u_order + 1):
        rhs = TruncatedSeries.zero(order)
        for n in range(t + 1, order + 1):
            num = (t + 1) * binom(3 * n - t - 2, n - t - 1)
            assert num % n == 0
            rhs = rhs + (num // n) * y_pows[n]
        bad = _series_check(f"t={t}: D0^{t + 1} vs Lagrange sum", d0 ** (t + 1), rhs)
        if bad:
            return bad
    return None


_CHECKERS = {
    IdentityId.A_CUBIC: _check_a_cubic,
    IdentityId.D_CUBIC: _check_d_cubic,
    IdentityId.LAGRANGE_E: _check_lagrange_e,
    IdentityId.D_T_POWER: _check_d_t_power,
    IdentityId.CATALAN_FIX: _check_catalan_fix,
    IdentityId.CATALAN_SQRT: _check_catalan_sqrt,
    IdentityId.A0_CLOSED: _check_a0_closed,
    IdentityId.B0_CLOSED: _check_b0_closed,
    IdentityId.G_COEFF: _check_g_coeff,
    IdentityId.H0_CLOSED: _check_h0_closed,
    IdentityId.H_COEFF: _check_h_coeff,
    IdentityId.SUM_D_EXPANSION: _check_sum_d_expansion,
}


def verify_identity(
    identity: Union[IdentityId, str], order: int = 24, u_order: int = 6
) -> IdentityReport:
    """Check one cataloged identity with exact coefficients.

    ``order`` bounds the x-power (default 24, capped at 32) and ``u_order``
    the u-power for the bivariate families (default 6, capped at 8).
    """
    ident = IdentityId(identity) if not isinstance(identity, IdentityId) else identity
    if not 0 <= order <= 32:
        raise ValueError("order must lie in 0..32")
    if not 0 <= u_order <= 8:
        raise ValueError("u_order must lie in 0..8")
    mismatch = _CHECKERS[ident](order, u_order)
    return IdentityReport(
        identity=ident,
        order=order,
        u_order=u_order,
        holds=mismatch is None,
        first_mismatch=mismatch,
    )


def verify_all_identities(order: int = 24, u_order: int = 6) -> list[IdentityReport]:
    return [verify_identity(ident, order, u_order) for ident in IdentityId]
