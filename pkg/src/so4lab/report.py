"""Exact serialization helpers: every number is rendered as an exact string
(rationals as "num/den" or "p^e*u/v", cyclotomics as coefficient lists); no
floats appear anywhere in reports.
"""

from __future__ import annotations

from fractions import Fraction

from .exact.cyclotomic import Cyclotomic
from .exact.ratfunc import RationalFunction2
from .padic import PadicNumber, fraction_valuation


def fraction_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def prime_power_str(x: Fraction, p: int) -> str:
    """Render a rational as p^e*u/v with u/v a p-unit (e.g. '3^-7')."""
    x = Fraction(x)
    if x == 0:
        return "0"
    v = fraction_valuation(x, p)
    unit = x / Fraction(p) ** v
    if unit == 1:
        return f"{p}^{v}" if v else "1"
    return f"{p}^{v}*{fraction_str(unit)}" if v else fraction_str(unit)


def scalar_to_json(x):
    if isinstance(x, (int, Fraction)):
        return fraction_str(Fraction(x))
    if isinstance(x, Cyclotomic):
        return x.to_json()
    if isinstance(x, RationalFunction2):
        return repr(x)
    if isinstance(x, PadicNumber):
        return x.to_json()
    if hasattr(x, "to_json"):
        return x.to_json()
    raise TypeError(f"no exact serialization for {type(x).__name__}")


def scalar_from_json(v, ring: str, p: int | None = None):
    if ring == "Q":
        return Fraction(v)
    if ring == "Qp":
        if v.get("valuation") is None:
            return PadicNumber.zero(v["p"], abs_prec=v.get("precision"))
        return PadicNumber(v["p"], v["valuation"], v["unit"], v["precision"])
    raise ValueError(f"cannot parse scalars of ring {ring!r}")
