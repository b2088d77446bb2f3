"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored sparsely in the tensor basis: for n = prod p^k the field
is the linearly disjoint compositum of the Q(zeta_{p^k}), and a basis is given
by products of per-prime-power basis monomials zeta_{p^k}^j, 0 <= j < phi(p^k).
A term is keyed by the tuple of per-component exponents.  Reduction uses only
the prime-power relation

    zeta^{(p-1)p^{k-1}} = -(1 + zeta^{p^{k-1}} + ... + zeta^{(p-2)p^{k-1}}),

so no cyclotomic polynomial needs to be expanded, and elements of huge p-power
order (Gauss-sum intermediates) stay cheap as long as they are sparse.

Coordinates in this basis are unique, so equality is dict equality, and an
element automatically descends to the minimal cyclotomic field containing it.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 by trial division, as (p, exponent) pairs."""
    if n < 1:
        raise ValueError("order must be >= 1")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


@lru_cache(maxsize=None)
def _components(n: int) -> tuple[tuple[int, int, int], ...]:
    # (p, q = p^k, phi(q)) per prime factor of n, sorted by p
    return tuple((p, p**k, p**k - p ** (k - 1)) for p, k in factorize(n))


@lru_cache(maxsize=None)
def _crt_mults(n: int) -> tuple[int, ...]:
    # c_i with zeta_n^e = prod_i zeta_{q_i}^{e * c_i mod q_i}
    comps = _components(n)
    return tuple(pow(n // q, -1, q) for _, q, _ in comps)


def _reduce_component(p: int, q: int, phi: int, j: int) -> list[tuple[int, int]]:
    """Rewrite zeta_q^j (0 <= j < q) in the power basis; list of (exponent, sign)."""
    if j < phi:
        return [(j, 1)]
    r = j - phi  # 0 <= r < q/p
    step = q // p
    return [(r + i * step, -1) for i in range(p - 1)]


class Cyclotomic:
    """An element of Q(zeta_n), immutable, with exact Fraction coordinates."""

    __slots__ = ("order", "terms")

    def __init__(self, order: int, terms: dict[tuple[int, ...], Fraction], *, reduced: bool = False):
        self.order = order
        if reduced:
            self.terms = {k: v for k, v in terms.items() if v != 0}
        else:
            self.terms = _reduce_terms(order, terms)
        d = _descend(self.order, self.terms)
        if d is not None:
            self.order, self.terms = d

    # ---- constructors -------------------------------------------------

    @staticmethod
    def from_rational(x) -> "Cyclotomic":
        x = Fraction(x)
        return Cyclotomic(1, {(): x} if x else {}, reduced=True)

    @staticmethod
    def zero() -> "Cyclotomic":
        return Cyclotomic.from_rational(0)

    @staticmethod
    def one() -> "Cyclotomic":
        return Cyclotomic.from_rational(1)

    @staticmethod
    def root_of_unity(n: int, e: int = 1, coeff=1) -> "Cyclotomic":
        """coeff * zeta_n^e."""
        return Cyclotomic.from_root_sum(n, {e: Fraction(coeff)})

    @staticmethod
    def from_root_sum(n: int, exps: dict[int, Fraction]) -> "Cyclotomic":
        """sum of coeff * zeta_n^e over an {exponent: coeff} mapping, in one pass."""
        comps = _components(n)
        mults = _crt_mults(n)
        raw: dict[tuple[int, ...], Fraction] = {}
        for e, c in exps.items():
            e %= n
            key = tuple((e * m) % q for (p, q, phi), m in zip(comps, mults))
            raw[key] = raw.get(key, Fraction(0)) + Fraction(c)
        return Cyclotomic(n, raw)

    # ---- coercion helpers ---------------------------------------------

    @staticmethod
    def _coerce(x) -> "Cyclotomic":
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic.from_rational(x)
        return NotImplemented  # type: ignore[return-value]

    def _terms_at(self, n: int) -> dict[tuple[int, ...], Fraction]:
        """Term dict re-keyed for ambient order n (requires order | n)."""
        if n == self.order:
            return self.terms
        if n % self.order:
            raise ValueError(f"{self.order} does not divide {n}")
        big = _components(n)
        small = {p: q for p, q, _ in _components(self.order)}
        primes_small = [p for p, _, _ in _components(self.order)]
        out: dict[tuple[int, ...], Fraction] = {}
        for key, c in self.terms.items():
            bykey = dict(zip(primes_small, key))
            newkey = tuple(bykey[p] * (q // small[p]) if p in small else 0 for p, q, _ in big)
            out[newkey] = out.get(newkey, Fraction(0)) + c
        return out

    def embed(self, n: int) -> "Cyclotomic":
        """Image under Q(zeta_order) -> Q(zeta_n); canonical form may descend back."""
        return Cyclotomic(n, self._terms_at(n), reduced=True)

    # ---- ring operations -----------------------------------------------

    def __add__(self, other):
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = _lcm(self.order, other.order)
        out = dict(self._terms_at(n))
        for k, v in other._terms_at(n).items():
            out[k] = out.get(k, Fraction(0)) + v
        return Cyclotomic(n, out, reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, {k: -v for k, v in self.terms.items()}, reduced=True)

    def __sub__(self, other):
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Cyclotomic._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return Cyclotomic(self.order, {k: v * q for k, v in self.terms.items()}, reduced=True)
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = _lcm(self.order, other.order)
        comps = _components(n)
        raw: dict[tuple[int, ...], Fraction] = {}
        for k1, v1 in self._terms_at(n).items():
            for k2, v2 in other._terms_at(n).items():
                key = tuple((x + y) % q for (x, y, (_, q, _)) in zip(k1, k2, comps))
                raw[key] = raw.get(key, Fraction(0)) + v1 * v2
        return Cyclotomic(n, raw)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if q == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / q)
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Cyclotomic._coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        acc = Cyclotomic.one()
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __eq__(self, other):
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __hash__(self):
        return hash((self.order, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # ---- field structure -------------------------------------------------

    def galois(self, t: int) -> "Cyclotomic":
        """Apply the automorphism zeta_n -> zeta_n^t; requires gcd(t, n) = 1."""
        n = self.order
        if n == 1:
            return self
        if _gcd(t % n, n) != 1:
            raise ValueError("galois exponent must be a unit mod the order")
        comps = _components(n)
        raw: dict[tuple[int, ...], Fraction] = {}
        for key, c in self.terms.items():
            nk = tuple((j * t) % q for j, (_, q, _) in zip(key, comps))
            raw[nk] = raw.get(nk, Fraction(0)) + c
        return Cyclotomic(n, raw)

    def conj(self) -> "Cyclotomic":
        """Complex conjugation zeta -> zeta^{-1}."""
        return self.galois(self.order - 1) if self.order > 1 else self

    def abs2(self) -> Fraction:
        """self * conj(self), which must be rational (raises otherwise)."""
        m = self * self.conj()
        return m.rational_value()

    def is_rational(self) -> bool:
        return self.order == 1

    def rational_value(self) -> Fraction:
        if self.order != 1:
            raise ValueError("not a rational number")
        return self.terms.get((), Fraction(0))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def inverse(self) -> "Cyclotomic":
        if not self.terms:
            raise ZeroDivisionError("inverse of zero")
        if self.order == 1:
            return Cyclotomic.from_rational(1 / self.rational_value())
        if self.is_monomial():
            ((key, c),) = self.terms.items()
            comps = _components(self.order)
            nk = tuple((-j) % q for j, (_, q, _) in zip(key, comps))
            return Cyclotomic(self.order, {nk: 1 / c})
        m = self * self.conj()
        if m.is_rational():
            r = m.rational_value()
            if r != 0:
                return self.conj() * (1 / r)
        # generic fall-back: product of the other Galois conjugates over the norm
        n = self.order
        prod = Cyclotomic.one()
        for t in range(2, n):
            if _gcd(t, n) == 1:
                prod = prod * self.galois(t)
        norm = (self * prod).rational_value()
        if norm == 0:
            raise ZeroDivisionError("inverse of zero")
        return prod * (1 / norm)

    # ---- views ------------------------------------------------------------

    def as_root_sum(self) -> list[tuple[int, Fraction]]:
        """Element as sum of c * zeta_order^e with basis exponents e."""
        n = self.order
        comps = _components(n)
        out = []
        for key, c in sorted(self.terms.items()):
            e = sum(j * (n // q) for j, (_, q, _) in zip(key, comps)) % n if n > 1 else 0
            out.append((e, c))
        return sorted(out)

    def power_coeffs(self) -> list[Fraction]:
        """Dense coordinates in the power basis 1, z, ..., z^{phi(n)-1} mod Phi_n."""
        n = self.order
        phi = 1
        for _, _, f in _components(n):
            phi *= f
        if n == 1:
            return [self.terms.get((), Fraction(0))]
        poly = [Fraction(0)] * n
        for e, c in self.as_root_sum():
            poly[e] += c
        rel = cyclotomic_polynomial(n)  # monic, degree phi
        # long division: eliminate exponents >= phi using z^phi = -(lower part)
        for e in range(n - 1, phi - 1, -1):
            c = poly[e]
            if c == 0:
                continue
            poly[e] = Fraction(0)
            for i in range(phi):
                poly[e - phi + i] -= c * rel[i]
        return poly[:phi]

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.as_root_sum():
            if e == 0:
                bits.append(str(c))
            elif c == 1:
                bits.append(f"z{self.order}^{e}")
            else:
                bits.append(f"{c}*z{self.order}^{e}")
        return " + ".join(bits)

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.power_coeffs()]}


def _reduce_terms(order: int, raw: dict[tuple[int, ...], Fraction]) -> dict[tuple[int, ...], Fraction]:
    comps = _components(order)
    out: dict[tuple[int, ...], Fraction] = {}
    for key, c in raw.items():
        if c == 0:
            continue
        parts = [_reduce_component(p, q, phi, j % q) for (p, q, phi), j in zip(comps, key)]
        stack = [((), 1)]
        for part in parts:
            stack = [(pref + (j,), s * s2) for pref, s in stack for j, s2 in part]
        for k2, s in stack:
            out[k2] = out.get(k2, Fraction(0)) + c * s
    return {k: v for k, v in out.items() if v != 0}


def _descend(order: int, terms: dict[tuple[int, ...], Fraction]):
    """Drop to a smaller cyclotomic order if all coordinates allow it."""
    if order == 1:
        return None
    comps = _components(order)
    new_order = order
    keep: list[tuple[int, int]] = []  # (index, divide-by) per retained component
    for i, (p, q, phi) in enumerate(comps):
        div = 1
        while q // div > 1 and all(k[i] % (div * p) == 0 for k in terms):
            div *= p
        if q // div == 1:
            if all(k[i] == 0 for k in terms):
                new_order //= q
                continue
            div //= p
        keep.append((i, div))
        new_order //= div
    if new_order == order:
        return None
    if new_order == 1:
        return 1, ({(): terms[next(iter(terms))]} if terms else {})
    newterms = {tuple(k[i] // d for i, d in keep): v for k, v in terms.items()}
    return new_order, newterms


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[Fraction, ...]:
    """Coefficients (ascending, monic) of Phi_n via x^n - 1 = prod_{d|n} Phi_d."""
    if n == 1:
        return (Fraction(-1), Fraction(1))
    num = [Fraction(0)] * (n + 1)
    num[0], num[n] = Fraction(-1), Fraction(1)
    for d in range(1, n):
        if n % d == 0:
            num = _upoly_exact_div(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _upoly_exact_div(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    num = list(num)
    out = [Fraction(0)] * (len(num) - len(den) + 1)
    for e in range(len(num) - 1, len(den) - 2, -1):
        c = num[e] / den[-1]
        out[e - len(den) + 1] = c
        if c:
            for i, d in enumerate(den):
                num[e - len(den) + 1 + i] -= c * d
    if any(num):
        raise ArithmeticError("division not exact")
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _lcm(a: int, b: int) -> int:
    return a * b // _gcd(a, b)


def zeta(n: int, e: int = 1) -> Cyclotomic:
    """Convenience: the root of unity zeta_n^e."""
    return Cyclotomic.root_of_unity(n, e)


def gauss_sum_sqrt(p: int) -> Cyclotomic:
    """sqrt(p) as an exact element of Q(zeta_{4p}), p an odd prime.

    Uses the quadratic Gauss sum g = sum_t (t|p) zeta_p^t with g^2 = (-1)^((p-1)/2) p;
    the result is verified by squaring.
    """
    if p == 2 or p % 2 == 0:
        raise ValueError("p must be an odd prime")
    g = Cyclotomic.zero()
    for t in range(1, p):
        ls = pow(t, (p - 1) // 2, p)
        g = g + Cyclotomic.root_of_unity(p, t, 1 if ls == 1 else -1)
    if p % 4 == 1:
        root = g
    else:
        root = g * Cyclotomic.root_of_unity(4, 3)  # g = i*sqrt(p), divide by i
    if root * root != Cyclotomic.from_rational(p):
        raise AssertionError("gauss sum square check failed")
    return root
