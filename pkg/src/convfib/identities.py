"""Machine verification of the convolved-Fibonacci identities.

Every verifier compares two independently computed sides over an explicit
parameter grid, with exact equality and zero tolerance.  Right-hand sides
that the statements give as nested sums are evaluated by literal recursive
loops mirroring the summation structure, never by a shortcut, so each
check really pits two different algorithms against each other.  Grids are
scanned in lexicographic parameter order and the first failing cell is
reported as the counterexample.
"""

from __future__ import annotations

from math import comb, factorial
from typing import Iterable, Optional

from convfib.convolved import (
    CoeffTriangle,
    TruncationTooShort,
    base_series,
    conv_fib,
    conv_fib_by_nested_sum,
    conv_fib_poly,
    conv_fib_poly_oracle,
    factorial_powers,
    rising_factorial_poly,
)
from convfib.fibonacci import fib, fib_genfun_check
from convfib.poly import Poly
from convfib.report import VerificationReport, failing, passing
from convfib.series import Series


def verify_prop1(n_max: int = 50, x_values: Iterable[int] = range(-3, 9)) -> VerificationReport:
    """p_n(x) = sum_l C(n,l) p_l(1) p_{n-l}(x-1) over the (n, x) grid."""
    xs = sorted(x_values)
    grid = {"n_max": n_max, "x_values": xs}
    cells = 0
    for n in range(n_max + 1):
        for x in xs:
            cells += 1
            lhs = conv_fib(n, x)
            rhs = sum(comb(n, l) * conv_fib(l, 1) * conv_fib(n - l, x - 1) for l in range(n + 1))
            if lhs != rhs:
                return failing("prop1", grid, cells, {"n": n, "x": x}, lhs, rhs)
    return passing("prop1", grid, cells)


def _cor2_nested(n: int, levels: int) -> int:
    """The literal nested binomial sum with ``levels`` bound indices."""
    if levels == 0:
        return conv_fib(n, 1)
    return sum(
        comb(n, l) * conv_fib(l, 1) * _cor2_nested(n - l, levels - 1) for l in range(n + 1)
    )


def verify_cor2(n_max: int = 20, r_max: int = 4) -> VerificationReport:
    """p_n(r) equals the (r-1)-fold nested binomial sum over p(1) values."""
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    grid = {"n_max": n_max, "r_max": r_max}
    cells = 0
    for n in range(n_max + 1):
        for r in range(1, r_max + 1):
            cells += 1
            lhs = conv_fib(n, r)
            rhs = _cor2_nested(n, r - 1)
            if lhs != rhs:
                return failing("cor2", grid, cells, {"n": n, "r": r}, lhs, rhs)
    return passing("cor2", grid, cells)


def verify_thm3(
    n_max: int = 40, r_max: int = 6, x_values: Iterable[int] = range(-2, 9)
) -> VerificationReport:
    """p_n(x) = sum_l C(n,l) p_l(r) p_{n-l}(x-r), in both stated orderings."""
    xs = sorted(x_values)
    grid = {"n_max": n_max, "r_max": r_max, "x_values": xs}
    cells = 0
    for n in range(n_max + 1):
        for r in range(1, r_max + 1):
            for x in xs:
                cells += 1
                lhs = conv_fib(n, x)
                rhs_a = sum(
                    comb(n, l) * conv_fib(l, r) * conv_fib(n - l, x - r) for l in range(n + 1)
                )
                rhs_b = sum(
                    comb(n, l) * conv_fib(n - l, r) * conv_fib(l, x - r) for l in range(n + 1)
                )
                if lhs != rhs_a or lhs != rhs_b:
                    rhs = rhs_a if lhs != rhs_a else rhs_b
                    return failing("thm3", grid, cells, {"n": n, "r": r, "x": x}, lhs, rhs)
    return passing("thm3", grid, cells)


def verify_cor4(n_max: int = 60, r_max: int = 6) -> VerificationReport:
    """p_n(r+1) = sum_l (n)_l p_{n-l}(r) F_l."""
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    grid = {"n_max": n_max, "r_max": r_max}
    cells = 0
    for n in range(n_max + 1):
        for r in range(1, r_max + 1):
            cells += 1
            lhs = conv_fib(n, r + 1)
            rhs = sum(
                factorial_powers(n, l)[0] * conv_fib(n - l, r) * fib(l) for l in range(n + 1)
            )
            if lhs != rhs:
                return failing("cor4", grid, cells, {"n": n, "r": r}, lhs, rhs)
    return passing("cor4", grid, cells)


def verify_thm5(n_max: int = 25, r_max: int = 4) -> VerificationReport:
    """p_n(r+1)/n! equals the r-fold nested Fibonacci convolution sum."""
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    grid = {"n_max": n_max, "r_max": r_max}
    cells = 0
    for n in range(n_max + 1):
        for r in range(1, r_max + 1):
            cells += 1
            lhs = conv_fib(n, r + 1)
            rhs = conv_fib_by_nested_sum(n, r + 1)
            if lhs != rhs:
                return failing("thm5", grid, cells, {"n": n, "r": r}, lhs, rhs)
    return passing("thm5", grid, cells)


def verify_thm6(
    n_max: int = 10, order: int = 30, triangle: Optional[CoeffTriangle] = None
) -> VerificationReport:
    """The derivative family, checked as a polynomial identity in x.

    Over the series ring with Q[x] coefficients, the N-th t-derivative of
    F = exp(-x log(1 - t - t^2)) must equal

        sum_i a_i(N) <x>_{N-i} (1+2t)^{N-2i} (1-t-t^2)^{-(N-i)} * F

    exactly through order - N, for every N <= n_max.
    """
    if order < n_max:
        raise TruncationTooShort(f"need order >= {n_max}, got {order}")
    if triangle is None:
        triangle = CoeffTriangle.from_recurrence(n_max)
    grid = {"n_max": n_max, "order": order}

    base = base_series(order)
    gen = (-(base.log()).lift() * Poly.x()).exp()
    two_t = Series.from_polynomial((1, 2), order)
    inv_base_pows = [Series.one(order)]
    base_inv = base.inverse()
    for _ in range(n_max):
        inv_base_pows.append(inv_base_pows[-1] * base_inv)

    cells = 0
    lhs = gen
    for n in range(n_max + 1):
        if n:
            lhs = lhs.derivative()
        cells += 1
        bracket = Series.zero(order).lift()
        for i in range((n + 1) // 2 + 1):
            scalar = triangle.entry(n, i) * rising_factorial_poly(n - i)
            rational = (two_t ** (n - 2 * i)) * inv_base_pows[n - i]
            bracket = bracket + rational * scalar
        m = order - n
        rhs = bracket.truncate(m) * gen.truncate(m)
        if lhs != rhs:
            for k in range(m + 1):
                if lhs.coefficient(k) != rhs.coefficient(k):
                    params = {"N": n, "t_power": k}
                    return failing("thm6", grid, cells, params, lhs.coefficient(k), rhs.coefficient(k))
    return passing("thm6", grid, cells)


def verify_thm7(
    k_max: int = 20,
    n_max: int = 8,
    x_values: Iterable[int] = range(1, 6),
    triangle: Optional[CoeffTriangle] = None,
) -> VerificationReport:
    """p_{k+N}(x) against the double sum over the triangle row N."""
    if triangle is None:
        triangle = CoeffTriangle.from_recurrence(n_max)
    xs = sorted(x_values)
    grid = {"k_max": k_max, "n_max": n_max, "x_values": xs}
    cells = 0
    for k in range(k_max + 1):
        for n in range(n_max + 1):
            for x in xs:
                cells += 1
                lhs = conv_fib(k + n, x)
                rhs = 0
                for i in range((n + 1) // 2 + 1):
                    a = triangle.entry(n, i)
                    rising = factorial_powers(x, n - i)[1]
                    for l in range(k + 1):
                        falling = factorial_powers(n - 2 * i, l)[0]
                        rhs += (
                            comb(k, l) * falling * 2**l * a * rising * conv_fib(k - l, x + n - i)
                        )
                if lhs != rhs:
                    return failing("thm7", grid, cells, {"k": k, "N": n, "x": x}, lhs, rhs)
    return passing("thm7", grid, cells)


def verify_cor8(
    n_max: int = 40,
    x_values: Iterable[int] = range(-5, 11),
    triangle: Optional[CoeffTriangle] = None,
) -> VerificationReport:
    """p_N(x) = sum_i a_i(N) <x>_{N-i}, as polynomials and at sample points.

    For each N the monomial expansion of the rising-factorial form must
    coincide with the triangle-free symbolic construction, and its value
    at every x in the grid must equal p_N(x).
    """
    if triangle is None:
        triangle = CoeffTriangle.from_recurrence(n_max)
    xs = sorted(x_values)
    grid = {"n_max": n_max, "x_values": xs}
    cells = 0
    for n in range(n_max + 1):
        poly = conv_fib_poly(n, triangle)
        cells += 1
        oracle = conv_fib_poly_oracle(n, n)
        if poly.monomial != oracle:
            params = {"N": n, "check": "polynomial"}
            return failing("cor8", grid, cells, params, poly.monomial, oracle)
        for x in xs:
            cells += 1
            lhs = poly.evaluate(x)
            rhs = conv_fib(n, x)
            if lhs != rhs:
                return failing("cor8", grid, cells, {"N": n, "x": x}, lhs, rhs)
    return passing("cor8", grid, cells)


def verify_cor9(n_max: int = 50, triangle: Optional[CoeffTriangle] = None) -> VerificationReport:
    """N!(F_N - 1) = sum_{i>=1} a_i(N) (N-i)!, plus the i = 0 completion.

    The completion re-adds the leading N! term: p_N(1) must equal
    sum_{i>=0} a_i(N) (N-i)!.  Triangle entries come from the closed
    nested-sum form unless an explicit triangle is supplied.
    """
    if triangle is None:
        triangle = CoeffTriangle.from_closed_form(n_max)
    grid = {"n_max": n_max}
    cells = 0
    for n in range(n_max + 1):
        row = triangle.row(n)
        cells += 1
        lhs = factorial(n) * (fib(n) - 1)
        rhs = sum(a * factorial(n - i) for i, a in enumerate(row) if i >= 1)
        if lhs != rhs:
            params = {"N": n, "check": "fib-minus-one"}
            return failing("cor9", grid, cells, params, lhs, rhs)
        cells += 1
        lhs = conv_fib(n, 1)
        rhs = sum(a * factorial(n - i) for i, a in enumerate(row))
        if lhs != rhs:
            params = {"N": n, "check": "value-at-one"}
            return failing("cor9", grid, cells, params, lhs, rhs)
    return passing("cor9", grid, cells)


# -- uniform runner -----------------------------------------------------------

IDENTITY_NAMES = (
    "genfun",
    "prop1",
    "cor2",
    "thm3",
    "cor4",
    "thm5",
    "thm6",
    "thm7",
    "cor8",
    "cor9",
)

# Identities whose main bound is the triangle row / derivative order N.
_BIG_N_IDENTITIES = frozenset({"thm6", "thm7", "cor8", "cor9"})

_DEFAULTS: dict[str, dict[str, int]] = {
    "genfun": {"order": 200},
    "prop1": {"n_max": 50, "x_min": -3, "x_max": 8},
    "cor2": {"n_max": 20, "r_max": 4},
    "thm3": {"n_max": 40, "r_max": 6, "x_min": -2, "x_max": 8},
    "cor4": {"n_max": 60, "r_max": 6},
    "thm5": {"n_max": 25, "r_max": 4},
    "thm6": {"n_max": 10, "order": 30},
    "thm7": {"k_max": 20, "n_max": 8, "x_min": 1, "x_max": 5},
    "cor8": {"n_max": 40, "x_min": -5, "x_max": 10},
    "cor9": {"n_max": 50},
}


def run_identity(
    name: str,
    *,
    n_max: Optional[int] = None,
    big_n_max: Optional[int] = None,
    k_max: Optional[int] = None,
    r_max: Optional[int] = None,
    order: Optional[int] = None,
    x_min: Optional[int] = None,
    x_max: Optional[int] = None,
) -> VerificationReport:
    """Run one named verifier on its default grid with optional overrides.

    ``big_n_max`` overrides the row/derivative bound of the identities
    indexed by N; ``n_max`` overrides the series-index bound of the rest.
    Overrides that an identity does not use are ignored.
    """
    if name not in _DEFAULTS:
        raise KeyError(f"unknown identity {name!r} (choose from {', '.join(IDENTITY_NAMES)})")
    params = dict(_DEFAULTS[name])
    main_bound = big_n_max if name in _BIG_N_IDENTITIES else n_max
    overrides = {
        "n_max": main_bound,
        "k_max": k_max,
        "r_max": r_max,
        "order": order,
        "x_min": x_min,
        "x_max": x_max,
    }
    for key, value in overrides.items():
        if value is not None and key in params:
            params[key] = value
    if "x_min" in params:
        x_values = range(params.pop("x_min"), params.pop("x_max") + 1)
        params["x_values"] = x_values
    if name == "genfun":
        return fib_genfun_check(params["order"])
    runner = {
        "prop1": verify_prop1,
        "cor2": verify_cor2,
        "thm3": verify_thm3,
        "cor4": verify_cor4,
        "thm5": verify_thm5,
        "thm6": verify_thm6,
        "thm7": verify_thm7,
        "cor8": verify_cor8,
        "cor9": verify_cor9,
    }[name]
    return runner(**params)
