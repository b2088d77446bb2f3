"""Truncated power series in one variable t over a duck-typed exact ring.

Coefficients may be Fraction, RationalFunction2 or Cyclotomic; the ring is
inferred from a supplied `one` element.  All operations truncate at a fixed
order K, so equality of two series means coefficientwise equality through t^K.
"""

from __future__ import annotations

from fractions import Fraction


class SingularExpansionError(ArithmeticError):
    """Raised when dividing by a series with non-invertible constant term."""


class TruncatedSeries:
    __slots__ = ("coeffs", "order", "one")

    def __init__(self, coeffs, order: int, one=Fraction(1)):
        coeffs = list(coeffs)
        if len(coeffs) < order + 1:
            coeffs += [one * 0] * (order + 1 - len(coeffs))
        self.coeffs = coeffs[: order + 1]
        self.order = order
        self.one = one

    @staticmethod
    def from_polynomial(coeffs, order: int, one=Fraction(1)):
        return TruncatedSeries(coeffs, order, one)

    def _check(self, other: "TruncatedSeries"):
        if self.order != other.order:
            raise ValueError("series truncation orders differ")

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries([x + y for x, y in zip(self.coeffs, other.coeffs)], self.order, self.one)

    def __sub__(self, other):
        self._check(other)
        return TruncatedSeries([x - y for x, y in zip(self.coeffs, other.coeffs)], self.order, self.one)

    def __neg__(self):
        return TruncatedSeries([-x for x in self.coeffs], self.order, self.one)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([x * other for x in self.coeffs], self.order, self.one)
        self._check(other)
        zero = self.one * 0
        out = [zero] * (self.order + 1)
        for i, x in enumerate(self.coeffs):
            if x == zero:
                continue
            for j in range(self.order + 1 - i):
                y = other.coeffs[j]
                if y != zero:
                    out[i + j] = out[i + j] + x * y
        return TruncatedSeries(out, self.order, self.one)

    __rmul__ = __mul__

    def __truediv__(self, other: "TruncatedSeries"):
        self._check(other)
        zero = self.one * 0
        c0 = other.coeffs[0]
        if c0 == zero:
            raise SingularExpansionError("constant term of divisor is zero")
        inv0 = self.one / c0
        out = []
        for k in range(self.order + 1):
            acc = self.coeffs[k]
            for j in range(1, k + 1):
                acc = acc - other.coeffs[j] * out[k - j]
            out.append(acc * inv0)
        return TruncatedSeries(out, self.order, self.one)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(x == y for x, y in zip(self.coeffs, other.coeffs))

    def __repr__(self):
        return "Series[" + ", ".join(repr(c) for c in self.coeffs) + "]"


def expand_rational_series(numerator, denominator, order: int, one=Fraction(1)) -> TruncatedSeries:
    """Formal expansion of numerator/denominator in t, exactly, through t^order.

    Both arguments are coefficient lists in t over the base ring.  The constant
    term of the denominator must be invertible (nonzero in a field).
    """
    num = TruncatedSeries(list(numerator), order, one)
    den = TruncatedSeries(list(denominator), order, one)
    return num / den
