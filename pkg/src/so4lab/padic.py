"""Truncated p-adic arithmetic over Q_p, square classes, Hilbert symbols with an
independent brute-force oracle, additive characters valued in cyclotomic fields,
and exact Haar-measure sums over unions of cosets (vol(Z_p) = 1).

Exact rationals embed in Q_p with exactly known valuation, so most internal
consumers pass `Fraction`s; `PadicNumber` carries capped relative precision for
genuinely truncated data and compares equal iff the values agree to the minimum
shared absolute precision.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import inf

from .exact.cyclotomic import Cyclotomic

DEFAULT_PRECISION = 20


class InvalidPrimeError(ValueError):
    pass


class PrecisionError(ArithmeticError):
    pass


class RefinementError(ArithmeticError):
    """Integrand not locally constant at the declared coset level."""


def _check_prime(p: int):
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise InvalidPrimeError(f"{p} is not prime")


def fraction_valuation(x, p: int):
    """Exact p-adic valuation of a rational; inf for 0."""
    x = Fraction(x)
    if x == 0:
        return inf
    v = 0
    n, d = x.numerator, x.denominator
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v


def fraction_unit_mod(x, p: int, k: int) -> int:
    """Unit part of a nonzero rational mod p^k (x = p^v * unit)."""
    x = Fraction(x)
    v = fraction_valuation(x, p)
    n, d = x.numerator, x.denominator
    n //= p ** max(v, 0) if v > 0 else 1
    if v < 0:
        d //= p ** (-v)
    m = p**k
    return (n * pow(d, -1, m)) % m


class PadicNumber:
    """p-adic number p^v * unit with the unit known mod p^prec."""

    __slots__ = ("p", "_val", "unit", "prec", "_zero_prec")

    def __init__(self, p: int, val, unit: int, prec: int, _zero_prec=None):
        _check_prime(p)
        self.p = p
        if val is None:  # zero (exact if _zero_prec is None)
            self._val, self.unit, self.prec = None, 0, 0
            self._zero_prec = _zero_prec
            return
        if prec < 1:
            raise PrecisionError("no significant digits left")
        m = p**prec
        unit %= m
        if unit % p == 0:
            raise ValueError("unit part must be coprime to p")
        self._val, self.unit, self.prec, self._zero_prec = val, unit, prec, None

    # ---- constructors ----------------------------------------------------

    @staticmethod
    def from_rational(x, p: int, prec: int = DEFAULT_PRECISION) -> "PadicNumber":
        _check_prime(p)
        x = Fraction(x)
        if x == 0:
            return PadicNumber(p, None, 0, 0)
        v = fraction_valuation(x, p)
        return PadicNumber(p, v, fraction_unit_mod(x, p, prec), prec)

    @staticmethod
    def zero(p: int, abs_prec=None) -> "PadicNumber":
        return PadicNumber(p, None, 0, 0, _zero_prec=abs_prec)

    # ---- structure ---------------------------------------------------------

    @property
    def valuation(self):
        return inf if self._val is None else self._val

    @property
    def abs_prec(self):
        if self._val is None:
            return inf if self._zero_prec is None else self._zero_prec
        return self._val + self.prec

    def is_zero(self) -> bool:
        return self._val is None

    def is_exact_zero(self) -> bool:
        return self._val is None and self._zero_prec is None

    def as_fraction(self) -> Fraction:
        """The canonical rational representative p^v * (unit mod p^prec)."""
        if self._val is None:
            return Fraction(0)
        return Fraction(self.p) ** self._val * self.unit

    # ---- arithmetic ----------------------------------------------------------

    def _coerce(self, x):
        if isinstance(x, PadicNumber):
            if x.p != self.p:
                raise ValueError("mixed primes")
            return x
        return PadicNumber.from_rational(x, self.p)

    def __add__(self, other):
        other = self._coerce(other)
        if self.is_zero():
            return other if self.is_exact_zero() else _truncate_abs(other, self._zero_prec)
        if other.is_zero():
            return self if other.is_exact_zero() else _truncate_abs(self, other._zero_prec)
        p = self.p
        r = min(self.abs_prec, other.abs_prec)
        v = min(self._val, other._val)
        k = r - v
        if k <= 0:
            return PadicNumber.zero(p, abs_prec=r)
        m = p**k
        s = (self.unit * p ** (self._val - v) + other.unit * p ** (other._val - v)) % m
        if s == 0:
            return PadicNumber.zero(p, abs_prec=r)
        w = 0
        while s % p == 0:
            s //= p
            w += 1
        return PadicNumber(p, v + w, s, k - w)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero():
            return self
        return PadicNumber(self.p, self._val, (-self.unit) % self.p**self.prec, self.prec)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            zp = None
            if not (self.is_exact_zero() and other.is_exact_zero()):
                # conservative: O(p^a)*x has absolute precision a + v(x) at best
                zp_candidates = []
                for z, o in ((self, other), (other, self)):
                    if z.is_zero() and not z.is_exact_zero():
                        ov = o.valuation if not o.is_zero() else 0
                        zp_candidates.append(z._zero_prec + min(ov, 0) if ov != inf else None)
                zp_candidates = [c for c in zp_candidates if c is not None]
                zp = min(zp_candidates) if zp_candidates else None
            return PadicNumber.zero(self.p, abs_prec=zp)
        n = min(self.prec, other.prec)
        return PadicNumber(self.p, self._val + other._val, (self.unit * other.unit) % self.p**n, n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("p-adic division by zero")
        if self.is_zero():
            return self
        n = min(self.prec, other.prec)
        m = self.p**n
        return PadicNumber(self.p, self._val - other._val, (self.unit * pow(other.unit, -1, m)) % m, n)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, e: int):
        if e == 0:
            return PadicNumber.from_rational(1, self.p, self.prec if not self.is_zero() else DEFAULT_PRECISION)
        if e < 0:
            return (PadicNumber.from_rational(1, self.p) / self) ** (-e)
        acc = self
        for _ in range(e - 1):
            acc = acc * self
        return acc

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PadicNumber.from_rational(other, self.p)
        if not isinstance(other, PadicNumber):
            return NotImplemented
        if other.p != self.p:
            return False
        r = min(self.abs_prec, other.abs_prec)
        if r == inf:
            return self.is_zero() and other.is_zero() or (
                not self.is_zero() and not other.is_zero()
                and self._val == other._val and self.unit == other.unit and self.prec == other.prec
            )
        sv, ov = self.valuation, other.valuation
        if sv >= r and ov >= r:
            return True
        if sv != ov or sv >= r:
            return False
        k = r - sv
        return self.unit % self.p**k == other.unit % self.p**k

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.is_zero():
            tail = "" if self._zero_prec is None else f" + O({self.p}^{self._zero_prec})"
            return "0" + tail
        return f"{self.p}^{self._val}*{self.unit} + O({self.p}^{self.abs_prec})"

    def to_json(self) -> dict:
        if self.is_zero():
            return {"p": self.p, "valuation": None, "unit": 0, "precision": self._zero_prec}
        return {"p": self.p, "valuation": self._val, "unit": self.unit, "precision": self.prec}


def _truncate_abs(x: PadicNumber, r) -> PadicNumber:
    if x.is_zero() or x.abs_prec <= r:
        return x
    if x.valuation >= r:
        return PadicNumber.zero(x.p, abs_prec=r)
    return PadicNumber(x.p, x._val, x.unit, r - x._val)


def padic_normalize(x, p: int, prec: int = DEFAULT_PRECISION) -> PadicNumber:
    """Canonical (valuation, unit mod p^prec) form of a rational/integer input."""
    if prec < 1:
        raise PrecisionError("precision must be >= 1")
    return PadicNumber.from_rational(x, p, prec)


# ---------------------------------------------------------------------------
# square classes and Hilbert symbols
# ---------------------------------------------------------------------------


def smallest_nonresidue(p: int) -> int:
    """Smallest positive quadratic non-residue mod an odd prime p."""
    for u in range(2, p):
        if pow(u, (p - 1) // 2, p) == p - 1:
            return u
    raise InvalidPrimeError(f"no non-residue found for {p}")


def square_class_reps(p: int) -> list[int]:
    """A complete set of representatives of Q_p^x / (Q_p^x)^2."""
    _check_prime(p)
    if p == 2:
        return [1, 3, 5, 7, 2, 6, 10, 14]
    u = smallest_nonresidue(p)
    return [1, u, p, u * p]


def _val_unit(x, p: int, k: int) -> tuple[int, int]:
    """(valuation, unit mod p^k) for PadicNumber/Fraction/int input."""
    if isinstance(x, PadicNumber):
        if x.p != p:
            raise ValueError("prime mismatch")
        if x.is_zero():
            raise ZeroDivisionError("square class of zero")
        if x.prec < k:
            raise PrecisionError(f"need unit mod {p}^{k}, have precision {x.prec}")
        return x._val, x.unit % p**k
    x = Fraction(x)
    if x == 0:
        raise ZeroDivisionError("square class of zero")
    v = fraction_valuation(x, p)
    return v, fraction_unit_mod(x, p, k)


def square_class(x, p: int) -> int:
    """Canonical representative (from square_class_reps) of x's square class."""
    if p == 2:
        v, u = _val_unit(x, 2, 3)
        return (2 if v % 2 else 1) * (u % 8)
    v, u = _val_unit(x, p, 1)
    nonres = pow(u, (p - 1) // 2, p) == p - 1
    cls = smallest_nonresidue(p) if nonres else 1
    return cls * (p if v % 2 else 1)


def is_square(x, p: int) -> bool:
    return square_class(x, p) == 1


def hilbert_symbol(a, b, p: int | None = None) -> int:
    """Local Hilbert symbol (a, b)_{Q_p} in {+1, -1}, by the classical formulas."""
    if p is None:
        if isinstance(a, PadicNumber):
            p = a.p
        elif isinstance(b, PadicNumber):
            p = b.p
        else:
            raise ValueError("prime required for rational inputs")
    _check_prime(p)
    if p == 2:
        va, ua = _val_unit(a, 2, 3)
        vb, ub = _val_unit(b, 2, 3)
        eps_a, eps_b = ((ua - 1) // 2) % 2, ((ub - 1) // 2) % 2
        om_a, om_b = ((ua * ua - 1) // 8) % 2, ((ub * ub - 1) // 8) % 2
        e = eps_a * eps_b + va * om_b + vb * om_a
        return -1 if e % 2 else 1
    va, ua = _val_unit(a, p, 1)
    vb, ub = _val_unit(b, p, 1)
    leg_a = 1 if pow(ua, (p - 1) // 2, p) == 1 else -1
    leg_b = 1 if pow(ub, (p - 1) // 2, p) == 1 else -1
    sign = -1 if (va * vb * ((p - 1) // 2)) % 2 else 1
    return sign * leg_a ** (vb % 2) * leg_b ** (va % 2)


def hilbert_oracle(a, b, p: int, depth: int = 3) -> int:
    """Brute-force Hilbert symbol: +1 iff a x^2 + b y^2 = z^2 has a primitive
    solution mod p^D, with D raised to the standard Hensel bound 2 v(2ab) + 1.

    Exhaustive residue search (numpy-counted, exact integers); independent of
    the closed-form symbol.
    """
    if depth < 3:
        raise ValueError("depth must be >= 3")
    import numpy as np

    aa, bb = Fraction(a), Fraction(b)
    if aa == 0 or bb == 0:
        raise ZeroDivisionError("symbol of zero")
    # clear denominators and even powers of p (x -> x/p substitutions)
    ints = []
    for x in (aa, bb):
        x = x.numerator * x.denominator  # same square class
        v = 0
        while x % (p * p) == 0:
            x //= p * p
        ints.append(x)
    a0, b0 = ints
    va = 1 if a0 % p == 0 else 0
    vb = 1 if b0 % p == 0 else 0
    need = 2 * (va + vb + (1 if p == 2 else 0)) + 1
    D = max(depth, need)
    m = p**D
    Y = np.arange(m, dtype=np.int64)
    y2 = (Y * Y) % m
    sq = np.zeros(m, dtype=bool)
    squnit = np.zeros(m, dtype=bool)
    sq[y2] = True
    squnit[y2[(Y % p) != 0]] = True
    yunit = (Y % p) != 0
    by2 = ((b0 % m) * y2) % m
    ax2_all = ((a0 % m) * y2) % m
    for x in range(m // 2 + 1):
        vals = (ax2_all[x] + by2) % m
        if x % p != 0:
            if sq[vals].any():
                return 1
        else:
            if (sq[vals] & yunit).any():
                return 1
            if (squnit[vals] & ~yunit).any():
                return 1
    return -1


def chi_quadratic(a, p: int) -> int:
    """The quadratic character chi(a) = (a, -1)_{Q_p}."""
    return hilbert_symbol(a, Fraction(-1), p)


# ---------------------------------------------------------------------------
# additive characters
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AdditiveCharacter:
    """psi(x) = standard unramified character evaluated at scale * p^conductor * x.

    conductor 0 and scale 1 is the standard unramified psi: trivial on Z_p,
    with psi(1/p^k) a primitive p^k-th root of unity.
    """

    p: int
    conductor: int = 0
    scale: Fraction = Fraction(1)

    def __post_init__(self):
        _check_prime(self.p)
        if Fraction(self.scale) == 0:
            raise ValueError("scale must be nonzero")

    def inverse(self) -> "AdditiveCharacter":
        return AdditiveCharacter(self.p, self.conductor, -Fraction(self.scale))

    def twist(self, a) -> "AdditiveCharacter":
        """The character x -> psi(a x)."""
        return AdditiveCharacter(self.p, self.conductor, Fraction(a) * Fraction(self.scale))

    def eval(self, x) -> Cyclotomic:
        p = self.p
        shift = Fraction(self.scale) * Fraction(p) ** self.conductor
        if isinstance(x, PadicNumber):
            if x.p != p:
                raise ValueError("prime mismatch")
            if x.is_zero():
                if x.abs_prec + fraction_valuation(shift, p) < 0:
                    raise PrecisionError("zero not resolved to the character's level")
                return Cyclotomic.one()
            y = None
            v = x.valuation + fraction_valuation(shift, p)
            k = max(0, -v)
            if x.prec < k:
                raise PrecisionError("insufficient precision for character value")
            arg = Fraction(x.as_fraction()) * shift
        else:
            arg = Fraction(x) * shift
            k = max(0, -fraction_valuation(arg, p)) if arg else 0
        if k == 0:
            return Cyclotomic.one()
        n = p**k
        m = fraction_unit_mod(arg, p, k)  # arg = m / p^k mod Z_p
        return Cyclotomic.root_of_unity(n, m)

    __call__ = eval


# ---------------------------------------------------------------------------
# coset regions and exact integration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CosetRegion:
    """Finite disjoint union of cosets base + p^level * Z_p (bases rational)."""

    p: int
    cosets: tuple[tuple[Fraction, int], ...]

    @staticmethod
    def ball(p: int, base, level: int) -> "CosetRegion":
        return CosetRegion(p, ((Fraction(base), level),))

    @staticmethod
    def union(*regions: "CosetRegion") -> "CosetRegion":
        p = regions[0].p
        cosets = tuple(c for r in regions for c in r.cosets)
        reg = CosetRegion(p, cosets)
        reg._check_disjoint()
        return reg

    def __post_init__(self):
        _check_prime(self.p)
        self._check_disjoint()

    def _check_disjoint(self):
        cs = self.cosets
        for i in range(len(cs)):
            for j in range(i + 1, len(cs)):
                (x, k), (y, l) = cs[i], cs[j]
                if fraction_valuation(x - y, self.p) >= min(k, l):
                    raise ValueError("cosets are not disjoint")

    def refine(self, level: int) -> "CosetRegion":
        """Split every coset into cosets at the (deeper) common level."""
        out = []
        for x, k in self.cosets:
            if level < k:
                raise ValueError("refinement level must be >= coset level")
            step = Fraction(self.p) ** k
            for j in range(self.p ** (level - k)):
                out.append((x + j * step, level))
        return CosetRegion(self.p, tuple(out))

    def volume(self) -> Fraction:
        return sum((Fraction(self.p) ** (-k) for _, k in self.cosets), Fraction(0))

    def contains(self, x) -> bool:
        x = Fraction(x)
        return any(fraction_valuation(x - b, self.p) >= k for b, k in self.cosets)


def coset_sum(region: CosetRegion, integrand, *, rng: random.Random | None = None, checks: int = 2):
    """Exact integral of a locally constant integrand over the region.

    The integrand must be constant on each stored coset (caller-declared level);
    this is spot-checked at `checks` pseudo-random points per coset.  The value
    is sum over cosets of p^{-level} * integrand(base).
    """
    rng = rng or random.Random(0)
    p = region.p
    total = None
    for base, k in region.cosets:
        v0 = integrand(base)
        for _ in range(checks):
            off = rng.randrange(1, p**3)
            v1 = integrand(base + Fraction(p) ** k * off)
            if not (v1 == v0):
                raise RefinementError(f"integrand not constant on {base} + p^{k} Z_p")
        term = v0 * Fraction(p) ** (-k)
        total = term if total is None else total + term
    if total is None:
        raise ValueError("empty region")
    return total
