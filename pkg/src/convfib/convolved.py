"""Convolved Fibonacci numbers p_n(x) and their coefficient triangle.

The numbers are defined by the generating function

    (1 - t - t**2) ** (-x)  =  sum_n p_n(x) t**n / n!

For integer arguments r this module computes p_n(r) three independent
ways: by extracting series coefficients (the workhorse), by literally
evaluating the nested Fibonacci convolution sums, and by iterating the
falling-factorial recurrence p_n(r+1) = sum_l (n)_l p_{n-l}(r) F_l.

Repeated t-differentiation of the generating function produces a triangle
of nonnegative integers a_i(N) with a_0(N) = 1, a zero diagonal at
i = (N+1)/2 for odd N, and row step

    a_i(N+1) = 2(N - 2i + 2) a_{i-1}(N) + a_i(N).

The same numbers have a closed form as i-fold nested sums

    a_i(N) = 2**i * sum_{k_i=1}^{N-2i+1} sum_{k_{i-1}=1}^{k_i+1} ...
             sum_{k_1=1}^{k_2+1} (k_i * ... * k_1)

and give p_N(x) = sum_i a_i(N) <x>_{N-i} in the rising-factorial basis.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from convfib.fibonacci import fib
from convfib.poly import Poly
from convfib.series import Series


class TruncationTooShort(ValueError):
    """A series was requested at an order too small to reach the target."""


class IndexOutOfTriangle(IndexError):
    """Asked for a_i(N) with i outside 0 <= i <= floor((N+1)/2)."""


def base_series(order: int) -> Series:
    """1 - t - t^2 as a rational series of the given order."""
    return Series.from_polynomial((1, -1, -1), order)


def _exact_int(value: Fraction) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {value}")
    return value.numerator


# -- integer-argument values ------------------------------------------------

def conv_fib_row(r: int, n_max: int) -> list[int]:
    """[p_0(r), ..., p_{n_max}(r)] from a single series power.

    For r <= 0 the power (1 - t - t^2)**(-r) is a finite polynomial and
    the high coefficients are zero.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    power = base_series(n_max) ** (-r)
    out = []
    f = 1
    for n, c in enumerate(power.coefficients):
        if n:
            f *= n
        out.append(_exact_int(c * f))
    return out


_rows: dict[int, list[int]] = {}
_rows_lock = threading.Lock()


def conv_fib(n: int, r: int) -> int:
    """p_n(r) = n! * [t^n] (1 - t - t^2)**(-r) for any signed integer r.

    Expansions are cached per argument and extended geometrically, so
    sweeping n upward costs amortized one series power.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    row = _rows.get(r)
    if row is None or len(row) <= n:
        with _rows_lock:
            row = _rows.get(r)
            if row is None or len(row) <= n:
                have = len(row) if row else 0
                row = conv_fib_row(r, max(2 * n, 2 * have, 16))
                _rows[r] = row
    return row[n]


def conv_fib_by_nested_sum(n: int, r: int) -> int:
    """p_n(r) for r >= 1 by the literal (r-1)-fold Fibonacci sum.

    Evaluates n! * sum_{l_1} ... sum_{l_{r-1}} F_{l_1} ... F_{l_{r-1}}
    F_{n - l_1 - ... - l_{r-1}} exactly as written, term by term; the cost
    grows like n**(r-1).
    """
    if r < 1:
        raise ValueError("the nested-sum form needs r >= 1")

    def fold(m: int, depth: int) -> int:
        if depth == 0:
            return fib(m)
        return sum(fib(l) * fold(m - l, depth - 1) for l in range(m + 1))

    return factorial(n) * fold(n, r - 1)


def conv_fib_row_by_recurrence(r: int, n_max: int) -> list[int]:
    """[p_0(r), ..., p_{n_max}(r)] for r >= 1 by iterating the step
    p_n(j+1) = sum_l (n)_l p_{n-l}(j) F_l up from the row p_n(1) = n! F_n.
    """
    if r < 1:
        raise ValueError("the recurrence form needs r >= 1")
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    row = [factorial(n) * fib(n) for n in range(n_max + 1)]
    for _ in range(r - 1):
        nxt = []
        for n in range(n_max + 1):
            acc = 0
            falling = 1
            for l in range(n + 1):
                if l:
                    falling *= n - l + 1
                acc += falling * row[n - l] * fib(l)
            nxt.append(acc)
        row = nxt
    return row


# -- factorial powers --------------------------------------------------------

def factorial_powers(n: int, l: int) -> tuple[int, int]:
    """((n)_l, <n>_l): the falling product n(n-1)...(n-l+1) and the rising
    product n(n+1)...(n+l-1); both are 1 when l = 0.
    """
    if l < 0:
        raise ValueError("l must be >= 0")
    falling = 1
    rising = 1
    for j in range(l):
        falling *= n - j
        rising *= n + j
    return falling, rising


def rising_factorial_poly(k: int) -> Poly:
    """<x>_k = x(x+1)...(x+k-1) as a polynomial; <x>_0 = 1."""
    if k < 0:
        raise ValueError("k must be >= 0")
    out = Poly.one()
    for j in range(k):
        out = out * Poly((j, 1))
    return out


# -- the coefficient triangle -------------------------------------------------

def _chain_sum(depth: int, upper: int, memo: dict[tuple[int, int], int]) -> int:
    """The nested sum over chains k_depth <= upper, k_{j} <= k_{j+1} + 1 of
    the product of all k_j.  Empty ranges contribute 0; depth 0 is 1.
    Repeated subsums are shared through ``memo``.
    """
    if depth == 0:
        return 1
    key = (depth, upper)
    cached = memo.get(key)
    if cached is None:
        cached = sum(k * _chain_sum(depth - 1, k + 1, memo) for k in range(1, upper + 1))
        memo[key] = cached
    return cached


def triangle_closed(n: int, i: int) -> int:
    """a_i(N) from the closed nested-sum form, independent of the recurrence."""
    if n < 0:
        raise ValueError("row index must be >= 0")
    if not 0 <= i <= (n + 1) // 2:
        raise IndexOutOfTriangle(f"a_{i}({n}) lies outside the triangle")
    if i == 0:
        return 1
    return 2**i * _chain_sum(i, n - 2 * i + 1, {})


@dataclass(frozen=True)
class CoeffTriangle:
    """Rows of a_i(N) for 0 <= N <= n_max, 0 <= i <= floor((N+1)/2)."""

    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_recurrence(cls, n_max: int) -> CoeffTriangle:
        """Seed a_0(0) = 1 and apply the row step; entries above each row's
        stored width count as zero, which reproduces the odd-row zero
        diagonal without special-casing.
        """
        if n_max < 0:
            raise ValueError("n_max must be >= 0")
        rows: list[tuple[int, ...]] = [(1,)]
        for n in range(n_max):
            prev = rows[n]
            width = (n + 2) // 2 + 1  # row n+1 holds i = 0 .. floor((n+2)/2)
            row = [1]
            for i in range(1, width):
                above = prev[i] if i < len(prev) else 0
                row.append(2 * (n - 2 * i + 2) * prev[i - 1] + above)
            rows.append(tuple(row))
        return cls(tuple(rows))

    @classmethod
    def from_closed_form(cls, n_max: int) -> CoeffTriangle:
        """Every entry from the nested-sum closed form, sharing subsums."""
        if n_max < 0:
            raise ValueError("n_max must be >= 0")
        memo: dict[tuple[int, int], int] = {}
        rows = []
        for n in range(n_max + 1):
            width = (n + 1) // 2 + 1
            row = [1]
            for i in range(1, width):
                row.append(2**i * _chain_sum(i, n - 2 * i + 1, memo))
            rows.append(tuple(row))
        return cls(tuple(rows))

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def row(self, n: int) -> tuple[int, ...]:
        if not 0 <= n <= self.n_max:
            raise IndexError(f"row {n} not computed (have 0..{self.n_max})")
        return self.rows[n]

    def entry(self, n: int, i: int) -> int:
        row = self.row(n)
        if not 0 <= i < len(row):
            raise IndexOutOfTriangle(f"a_{i}({n}) lies outside the triangle")
        return row[i]

    def with_entry(self, n: int, i: int, value: int) -> CoeffTriangle:
        """A copy with one entry replaced (for sensitivity experiments)."""
        self.entry(n, i)  # bounds check
        rows = list(self.rows)
        row = list(rows[n])
        row[i] = value
        rows[n] = tuple(row)
        return CoeffTriangle(tuple(rows))


def triangle_recurrence(n_max: int) -> CoeffTriangle:
    """The triangle for all rows N <= n_max by the row recurrence."""
    return CoeffTriangle.from_recurrence(n_max)


# -- polynomial forms ----------------------------------------------------------

@dataclass(frozen=True)
class RisingFactorialPoly:
    """p_N(x) carried in both bases.

    ``rising[i]`` multiplies <x>_{N-i}; ``monomial`` is the expanded
    polynomial.  The two views agree at every rational point.
    """

    n: int
    rising: tuple[int, ...]
    monomial: Poly

    def evaluate(self, point: int | Fraction) -> Fraction:
        return self.monomial.evaluate(point)

    def evaluate_rising(self, point: int | Fraction) -> Fraction:
        """Evaluate from the rising-factorial view (no expansion)."""
        value = Fraction(point)
        acc = Fraction(0)
        for i, a in enumerate(self.rising):
            term = Fraction(a)
            for j in range(self.n - i):
                term *= value + j
            acc += term
        return acc

    def to_json_dict(self) -> dict[str, object]:
        return {
            "N": self.n,
            "rising": [str(a) for a in self.rising],
            "monomial": [str(c) for c in self.monomial.coefficients],
        }


def conv_fib_poly(n: int, triangle: CoeffTriangle | None = None) -> RisingFactorialPoly:
    """p_N(x) = sum_i a_i(N) <x>_{N-i}, expanded to the monomial basis."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if triangle is None:
        triangle = CoeffTriangle.from_recurrence(n)
    rising = triangle.row(n)
    monomial = Poly.zero()
    for i, a in enumerate(rising):
        if a:
            monomial = monomial + a * rising_factorial_poly(n - i)
    return RisingFactorialPoly(n, rising, monomial)


def conv_fib_poly_oracle(n: int, order: int) -> Poly:
    """p_N(x) built symbolically, with no triangle involved.

    Expands exp(x * (-log(1 - t - t^2))) in the series ring over Q[x] and
    reads off n! times the t^n coefficient.  Requires order >= n.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if order < n:
        raise TruncationTooShort(f"need order >= {n}, got {order}")
    neg_log = -(base_series(order).log())
    exponent = neg_log.lift() * Poly.x()
    expanded = exponent.exp()
    return expanded.coefficient(n) * factorial(n)
