"""Truncated formal power series in t over an exact coefficient ring.

A series stores exactly ``order + 1`` coefficients: it is known exactly
through t**order and unknown beyond.  Coefficients are either Fraction
(series over Q) or :class:`~convfib.poly.Poly` (series over Q[x]); mixed
constructions are lifted to the polynomial ring.  Every binary operation
returns a series whose order is the minimum of the operand orders.
Equality demands the same order and identical coefficients; compare
through a common prefix by truncating first.

The transcendental operations work through the logarithmic derivative:
``log`` integrates a'/a and ``exp`` solves E' = a'E term by term.  Both
stay inside the coefficient ring because only scalar divisions by the
integration index occur.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from convfib.poly import Poly

Coeff = Union[Fraction, Poly]
CoeffLike = Union[int, Fraction, Poly]


class NonInvertibleConstantTerm(ValueError):
    """Constant term has no inverse in the coefficient ring."""


class BadConstantTerm(ValueError):
    """Constant term violates the precondition of log (must be 1) or exp (must be 0)."""


def _coerce(values: Iterable[CoeffLike]) -> tuple[Coeff, ...]:
    out: list[Coeff] = []
    poly = False
    for v in values:
        if isinstance(v, Poly):
            poly = True
            out.append(v)
        elif isinstance(v, int):
            out.append(Fraction(v))
        elif isinstance(v, Fraction):
            out.append(v)
        else:
            raise TypeError(f"unsupported coefficient type {type(v).__name__}")
    if poly:
        return tuple(c if isinstance(c, Poly) else Poly.constant(c) for c in out)
    return tuple(out)


class Series:
    """Immutable truncated power series in t.

    >>> geom = Series.from_polynomial([1, -1], 4).inverse()
    >>> [str(c) for c in geom.coefficients]
    ['1', '1', '1', '1', '1']
    """

    __slots__ = ("_coeffs", "_poly")

    def __init__(self, coefficients: Iterable[CoeffLike]):
        coeffs = _coerce(coefficients)
        if not coeffs:
            raise ValueError("a series needs at least the t^0 coefficient")
        object.__setattr__(self, "_coeffs", coeffs)
        object.__setattr__(self, "_poly", isinstance(coeffs[0], Poly))

    # -- constructors -------------------------------------------------

    @classmethod
    def from_polynomial(cls, coefficients: Sequence[CoeffLike], order: int) -> Series:
        """Series of the given order whose low coefficients are as listed.

        Pads with zeros; coefficients beyond the order are dropped (the
        series simply does not know them).
        """
        if order < 0:
            raise ValueError("order must be >= 0")
        coeffs = list(coefficients[: order + 1])
        coeffs.extend([0] * (order + 1 - len(coeffs)))
        return cls(coeffs)

    @classmethod
    def zero(cls, order: int) -> Series:
        return cls.from_polynomial((), order)

    @classmethod
    def one(cls, order: int) -> Series:
        return cls.from_polynomial((1,), order)

    # -- ring bookkeeping ----------------------------------------------

    @property
    def order(self) -> int:
        """Highest power of t through which the series is exact."""
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> tuple[Coeff, ...]:
        return self._coeffs

    def coefficient(self, k: int) -> Coeff:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient {k} outside stored order {self.order}")
        return self._coeffs[k]

    __getitem__ = coefficient

    def _zero_coeff(self) -> Coeff:
        return Poly.zero() if self._poly else Fraction(0)

    def _one_coeff(self) -> Coeff:
        return Poly.one() if self._poly else Fraction(1)

    def is_poly_ring(self) -> bool:
        return self._poly

    def lift(self) -> Series:
        """The same series with coefficients in Q[x]."""
        if self._poly:
            return self
        return Series([Poly.constant(c) for c in self._coeffs])

    def truncate(self, order: int) -> Series:
        """Forget everything beyond t**order."""
        if order < 0:
            raise ValueError("order must be >= 0")
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} series to {order}")
        return Series(self._coeffs[: order + 1])

    def _invert_coeff(self, c: Coeff) -> Coeff:
        if isinstance(c, Poly):
            if not c.is_constant() or c.is_zero():
                raise NonInvertibleConstantTerm(f"constant term {c} is not an invertible scalar")
            return Poly.constant(1 / c.constant_value())
        if c == 0:
            raise NonInvertibleConstantTerm("constant term is zero")
        return 1 / c

    @staticmethod
    def _common(a: Series, b: Series) -> tuple[Series, Series]:
        if a._poly != b._poly:
            a, b = a.lift(), b.lift()
        return a, b

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: Series) -> Series:
        if not isinstance(other, Series):
            return NotImplemented
        a, b = Series._common(self, other)
        order = min(a.order, b.order)
        return Series([a._coeffs[k] + b._coeffs[k] for k in range(order + 1)])

    def __sub__(self, other: Series) -> Series:
        if not isinstance(other, Series):
            return NotImplemented
        a, b = Series._common(self, other)
        order = min(a.order, b.order)
        return Series([a._coeffs[k] - b._coeffs[k] for k in range(order + 1)])

    def __neg__(self) -> Series:
        return Series([-c for c in self._coeffs])

    def _scaled(self, scalar: CoeffLike) -> Series:
        if isinstance(scalar, Poly) and not self._poly:
            return self.lift()._scaled(scalar)
        return Series([c * scalar for c in self._coeffs])

    def __mul__(self, other: Series | CoeffLike) -> Series:
        if isinstance(other, (int, Fraction, Poly)):
            return self._scaled(other)
        if not isinstance(other, Series):
            return NotImplemented
        a, b = Series._common(self, other)
        order = min(a.order, b.order)
        za = sum(1 for c in a._coeffs[: order + 1] if c)
        zb = sum(1 for c in b._coeffs[: order + 1] if c)
        if zb < za:
            a, b = b, a
        # Cauchy product; iterate only over the sparser factor's support.
        support = [(k, c) for k, c in enumerate(a._coeffs[: order + 1]) if c]
        zero = a._zero_coeff()
        out = []
        for n in range(order + 1):
            acc = zero
            for k, c in support:
                if k > n:
                    break
                acc = acc + c * b._coeffs[n - k]
            out.append(acc)
        return Series(out)

    def __rmul__(self, other: CoeffLike) -> Series:
        if isinstance(other, (int, Fraction, Poly)):
            return self._scaled(other)
        return NotImplemented

    def inverse(self) -> Series:
        """Multiplicative inverse: self * self.inverse() == 1 through the order.

        Raises :class:`NonInvertibleConstantTerm` when the constant term is
        zero or, over Q[x], not a nonzero constant polynomial.
        """
        c0_inv = self._invert_coeff(self._coeffs[0])
        support = [(k, c) for k, c in enumerate(self._coeffs) if k and c]
        out: list[Coeff] = [c0_inv]
        zero = self._zero_coeff()
        for n in range(1, self.order + 1):
            acc = zero
            for k, c in support:
                if k > n:
                    break
                acc = acc + c * out[n - k]
            out.append(-(c0_inv * acc))
        return Series(out)

    def __pow__(self, exponent: int) -> Series:
        """Integer power by repeated squaring; negative powers invert first."""
        if not isinstance(exponent, int):
            raise TypeError("series powers must have integer exponents")
        if exponent < 0:
            base = self.inverse()
            exponent = -exponent
        else:
            base = self
        result = Series.from_polynomial((self._one_coeff(),), self.order)
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def derivative(self) -> Series:
        """Termwise d/dt; the order drops by one.

        The derivative of an order-0 series is not known through any power
        of t, so order >= 1 is required.
        """
        if self.order == 0:
            raise ValueError("derivative of an order-0 series is undetermined")
        return Series([self._coeffs[k] * k for k in range(1, self.order + 1)])

    def log(self) -> Series:
        """Series logarithm via termwise integration of a'/a.

        Requires constant term exactly 1 (:class:`BadConstantTerm` otherwise).
        """
        if self._coeffs[0] != self._one_coeff():
            raise BadConstantTerm(f"log needs constant term 1, got {self._coeffs[0]}")
        zero = self._zero_coeff()
        if self.order == 0:
            return Series([zero])
        ratio = self.derivative() * self.inverse()
        out: list[Coeff] = [zero]
        for n, c in enumerate(ratio._coeffs, start=1):
            out.append(c / n)
        return Series(out)

    def exp(self) -> Series:
        """Series exponential: solves E' = a'E with E(0) = 1.

        Requires constant term exactly 0 (:class:`BadConstantTerm` otherwise).
        """
        if self._coeffs[0] != self._zero_coeff():
            raise BadConstantTerm(f"exp needs constant term 0, got {self._coeffs[0]}")
        support = [(k, c * k) for k, c in enumerate(self._coeffs) if k and c]
        zero = self._zero_coeff()
        out: list[Coeff] = [self._one_coeff()]
        for n in range(1, self.order + 1):
            # n * e_n = sum_{k=1..n} k a_k e_{n-k}
            acc = zero
            for k, ka in support:
                if k > n:
                    break
                acc = acc + ka * out[n - k]
            out.append(acc / n)
        return Series(out)

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        a, b = Series._common(self, other)
        return a._coeffs == b._coeffs

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self._coeffs[:8])
        if self.order >= 8:
            shown += ", ..."
        return f"Series([{shown}], order={self.order})"
