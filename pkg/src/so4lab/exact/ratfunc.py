"""Exact rational functions in two symbols a, b with Laurent exponents.

A value is stored as  a^sa * b^sb * num / den  where num and den are honest
polynomials (non-negative exponents, Fraction coefficients), neither divisible
by a or b, gcd(num, den) = 1, and den is monic in the graded-lex leading term.
That representative is unique, so equality is structural; cross-multiplication
equality is also exposed for use as an independent check.

GCDs are primitive-PRS in Q[a][b]; nothing beyond bivariate gcd is provided.
"""

from __future__ import annotations

from fractions import Fraction

# guard against runaway exponents in Laurent arithmetic
LAURENT_WINDOW = 200

Term = tuple[int, int]


class MalformedInputError(ValueError):
    pass


# ---------------------------------------------------------------------------
# plain bivariate polynomials as {(ea, eb): Fraction} dicts, exponents >= 0
# ---------------------------------------------------------------------------


def _pzero() -> dict[Term, Fraction]:
    return {}


def _pconst(c) -> dict[Term, Fraction]:
    c = Fraction(c)
    return {(0, 0): c} if c else {}


def _padd(p, q):
    out = dict(p)
    for k, v in q.items():
        s = out.get(k, Fraction(0)) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _pneg(p):
    return {k: -v for k, v in p.items()}


def _pmul(p, q):
    out: dict[Term, Fraction] = {}
    for (i1, j1), v1 in p.items():
        for (i2, j2), v2 in q.items():
            k = (i1 + i2, j1 + j2)
            s = out.get(k, Fraction(0)) + v1 * v2
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def _pscale(p, c: Fraction):
    return {k: v * c for k, v in p.items()} if c else {}


def _deg_b(p) -> int:
    return max((j for _, j in p), default=-1)


def _b_coeff(p, j) -> list[Fraction]:
    """Coefficient of b^j as a univariate polynomial in a (ascending list)."""
    d = max((i for i, jj in p if jj == j), default=-1)
    out = [Fraction(0)] * (d + 1)
    for (i, jj), v in p.items():
        if jj == j:
            out[i] = v
    return out


def _from_b_coeffs(coeffs: list[list[Fraction]]):
    out = {}
    for j, cj in enumerate(coeffs):
        for i, v in enumerate(cj):
            if v:
                out[(i, j)] = v
    return out


# univariate helpers over Q (ascending coefficient lists)


def _utrim(u):
    while u and u[-1] == 0:
        u.pop()
    return u


def _umul(u, v):
    if not u or not v:
        return []
    out = [Fraction(0)] * (len(u) + len(v) - 1)
    for i, x in enumerate(u):
        if x:
            for j, y in enumerate(v):
                out[i + j] += x * y
    return _utrim(out)


def _udivmod(u, v):
    u = list(u)
    if not v:
        raise ZeroDivisionError
    q = [Fraction(0)] * max(len(u) - len(v) + 1, 0)
    for e in range(len(u) - 1, len(v) - 2, -1):
        c = u[e] / v[-1]
        if c:
            q[e - len(v) + 1] = c
            for i, d in enumerate(v):
                u[e - len(v) + 1 + i] -= c * d
    return q, _utrim(u)


def _ugcd(u, v):
    u, v = _utrim(list(u)), _utrim(list(v))
    while v:
        u, v = v, _udivmod(u, v)[1]
    if u:
        lc = u[-1]
        u = [x / lc for x in u]
    return u


def _content_a(p) -> list[Fraction]:
    """gcd over Q[a] of the b-coefficients (monic), content of p in Q[a][b]."""
    g: list[Fraction] = []
    for j in range(_deg_b(p) + 1):
        cj = _utrim(_b_coeff(p, j))
        if cj:
            g = _ugcd(g, cj) if g else [x / cj[-1] for x in cj]
        if g == [Fraction(1)]:
            break
    return g or []


def _pdiv_content(p, g: list[Fraction]):
    """Divide every b-coefficient by g in Q[a] (must be exact)."""
    if g == [Fraction(1)]:
        return dict(p)
    coeffs = []
    for j in range(_deg_b(p) + 1):
        cj = _utrim(_b_coeff(p, j))
        if cj:
            q, r = _udivmod(cj, g)
            if r:
                raise ArithmeticError("content division not exact")
            coeffs.append(q)
        else:
            coeffs.append([])
    return _from_b_coeffs(coeffs)


def _pprimitive(p):
    g = _content_a(p)
    return (_pdiv_content(p, g), g) if g else (dict(p), [])


def _prem_b(p, q):
    """Pseudo-remainder of p by q in the variable b over Q[a]."""
    dp, dq = _deg_b(p), _deg_b(q)
    if dq < 0:
        raise ZeroDivisionError
    lc_q = _from_b_coeffs([_b_coeff(q, dq)])  # poly in a only
    r = dict(p)
    while (dr := _deg_b(r)) >= dq and r:
        lc_r = {(i, 0): v for (i, j), v in r.items() if j == dr}
        shift = {(0, dr - dq): Fraction(1)}
        r = _padd(_pmul(r, lc_q), _pneg(_pmul(_pmul(lc_r, shift), q)))
    return r


def poly_gcd2(p, q):
    """gcd in Q[a,b] via primitive PRS; result primitive with monic content 1."""
    if not p:
        return _pprimitive(q)[0] if q else {}
    if not q:
        return _pprimitive(p)[0]
    p1, cp = _pprimitive(p)
    q1, cq = _pprimitive(q)
    cg = _ugcd(cp, cq)
    if _deg_b(p1) < _deg_b(q1):
        p1, q1 = q1, p1
    while q1:
        r = _prem_b(p1, q1)
        p1, q1 = q1, (_pprimitive(r)[0] if r else {})
    g = _pmul(p1, _from_b_coeffs([cg])) if cg else p1
    # normalize: monic leading coefficient in graded lex
    lead = max(g, key=lambda k: (k[0] + k[1], k))
    lc = g[lead]
    return {k: v / lc for k, v in g.items()}


def _pdivexact(p, g):
    """Exact division p / g in Q[a,b] (in variable b, contents handled)."""
    if g == {(0, 0): Fraction(1)}:
        return dict(p)
    out = {}
    r = dict(p)
    dg = _deg_b(g)
    lcg = _b_coeff(g, dg)
    while r:
        dr = _deg_b(r)
        if dr < dg:
            raise ArithmeticError("division not exact")
        lcr = _b_coeff(r, dr)
        qc, rem = _udivmod(lcr, lcg)
        if rem:
            raise ArithmeticError("division not exact")
        qterm = {(i, dr - dg): v for i, v in enumerate(qc) if v}
        out = _padd(out, qterm)
        r = _padd(r, _pneg(_pmul(qterm, g)))
    return out


# ---------------------------------------------------------------------------
# Laurent rational functions
# ---------------------------------------------------------------------------


class RationalFunction2:
    """Element of Q(a, b), reduced; supports Laurent monomials a^i b^j, i,j in Z."""

    __slots__ = ("sa", "sb", "num", "den")

    def __init__(self, sa: int, sb: int, num: dict[Term, Fraction], den: dict[Term, Fraction], *, reduced: bool = False):
        if not den:
            raise MalformedInputError("zero denominator")
        if abs(sa) > LAURENT_WINDOW or abs(sb) > LAURENT_WINDOW:
            raise MalformedInputError("Laurent exponent outside configured window")
        if reduced:
            self.sa, self.sb, self.num, self.den = sa, sb, num, den
            return
        if not num:
            self.sa = self.sb = 0
            self.num, self.den = {}, {(0, 0): Fraction(1)}
            return
        # pull out monomial content
        ma = min(i for i, _ in num)
        mb = min(j for _, j in num)
        da = min(i for i, _ in den)
        db = min(j for _, j in den)
        num = {(i - ma, j - mb): v for (i, j), v in num.items()}
        den = {(i - da, j - db): v for (i, j), v in den.items()}
        sa += ma - da
        sb += mb - db
        g = poly_gcd2(num, den)
        if g != {(0, 0): Fraction(1)}:
            num = _pdivexact(num, g)
            den = _pdivexact(den, g)
        lead = max(den, key=lambda k: (k[0] + k[1], k))
        lc = den[lead]
        if lc != 1:
            num = _pscale(num, 1 / lc)
            den = _pscale(den, 1 / lc)
        if abs(sa) > LAURENT_WINDOW or abs(sb) > LAURENT_WINDOW:
            raise MalformedInputError("Laurent exponent outside configured window")
        self.sa, self.sb, self.num, self.den = sa, sb, num, den

    # ---- constructors ---------------------------------------------------

    @staticmethod
    def constant(c) -> "RationalFunction2":
        return RationalFunction2(0, 0, _pconst(c), _pconst(1))

    @staticmethod
    def monomial(ea: int, eb: int, coeff=1) -> "RationalFunction2":
        return RationalFunction2(ea, eb, _pconst(coeff), _pconst(1), reduced=True) if Fraction(coeff) else RationalFunction2.constant(0)

    @staticmethod
    def gen(name: str) -> "RationalFunction2":
        if name == "a":
            return RationalFunction2.monomial(1, 0)
        if name == "b":
            return RationalFunction2.monomial(0, 1)
        raise ValueError("symbols are 'a' and 'b'")

    @staticmethod
    def _coerce(x):
        if isinstance(x, RationalFunction2):
            return x
        if isinstance(x, (int, Fraction)):
            return RationalFunction2.constant(x)
        return NotImplemented

    # ---- arithmetic -------------------------------------------------------

    def _as_quotient(self):
        """(num, den) with the monomial prefactor folded in, exponents >= 0."""
        sa, sb = self.sa, self.sb
        num, den = self.num, self.den
        if sa >= 0:
            num = _pmul(num, {(sa, 0): Fraction(1)}) if sa else num
        else:
            den = _pmul(den, {(-sa, 0): Fraction(1)})
        if sb >= 0:
            num = _pmul(num, {(0, sb): Fraction(1)}) if sb else num
        else:
            den = _pmul(den, {(0, -sb): Fraction(1)})
        return num, den

    def __add__(self, other):
        other = RationalFunction2._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n1, d1 = self._as_quotient()
        n2, d2 = other._as_quotient()
        return RationalFunction2(0, 0, _padd(_pmul(n1, d2), _pmul(n2, d1)), _pmul(d1, d2))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction2(self.sa, self.sb, _pneg(self.num), self.den, reduced=True)

    def __sub__(self, other):
        other = RationalFunction2._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return RationalFunction2._coerce(other) - self

    def __mul__(self, other):
        other = RationalFunction2._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction2(self.sa + other.sa, self.sb + other.sb,
                                 _pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RationalFunction2._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction2(self.sa - other.sa, self.sb - other.sb,
                                 _pmul(self.num, other.den), _pmul(self.den, other.num))

    def __rtruediv__(self, other):
        return RationalFunction2._coerce(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return (RationalFunction2.constant(1) / self) ** (-e)
        acc = RationalFunction2.constant(1)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __eq__(self, other):
        other = RationalFunction2._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.sa, self.sb, self.num, self.den) == (other.sa, other.sb, other.num, other.den)

    def __hash__(self):
        return hash((self.sa, self.sb, frozenset(self.num.items()), frozenset(self.den.items())))

    def __bool__(self):
        return bool(self.num)

    def cross_eq(self, other) -> bool:
        """Equality by cross-multiplication, independent of gcd reduction."""
        other = RationalFunction2._coerce(other)
        n1, d1 = self._as_quotient()
        n2, d2 = other._as_quotient()
        return _padd(_pmul(n1, d2), _pneg(_pmul(n2, d1))) == {}

    # ---- queries ----------------------------------------------------------

    def is_constant(self) -> bool:
        return self.sa == 0 and self.sb == 0 and set(self.num) <= {(0, 0)} and set(self.den) == {(0, 0)}

    def constant_value(self) -> Fraction:
        if not self.num:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num[(0, 0)] / self.den[(0, 0)]

    def is_laurent_polynomial(self) -> bool:
        return set(self.den) == {(0, 0)}

    def substitute(self, a, b) -> Fraction:
        a, b = Fraction(a), Fraction(b)
        if (a == 0 and self.sa < 0) or (b == 0 and self.sb < 0):
            raise ZeroDivisionError("pole of the Laurent prefactor")

        def ev(p):
            return sum((v * a**i * b**j for (i, j), v in p.items()), Fraction(0))

        dv = ev(self.den)
        if dv == 0:
            raise ZeroDivisionError("denominator vanishes at the point")
        return a**self.sa * b**self.sb * ev(self.num) / dv

    def __repr__(self):
        if not self.num:
            return "0"

        def fmt_mono(i, j, v):
            bits = []
            if v == -1 and (i or j):
                bits.append("-")
            elif v != 1 or (not i and not j):
                bits.append(str(v) + ("*" if (i or j) else ""))
            if i:
                bits.append("a" if i == 1 else f"a^{i}")
            if i and j:
                bits.append("*")
            if j:
                bits.append("b" if j == 1 else f"b^{j}")
            return "".join(bits)

        def fmt(p, shift=(0, 0)):
            terms = sorted(p.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), kv[0]))
            return " + ".join(fmt_mono(i + shift[0], j + shift[1], v) for (i, j), v in terms).replace("+ -", "- ")

        if self.is_laurent_polynomial():
            return fmt(self.num, (self.sa, self.sb))
        pre = ""
        if self.sa or self.sb:
            pre = fmt_mono(self.sa, self.sb, Fraction(1)) + "*"
        return f"{pre}({fmt(self.num)})/({fmt(self.den)})"


RF = RationalFunction2
A = RationalFunction2.gen("a")
B = RationalFunction2.gen("b")


def normalize_rational_function(f: RationalFunction2) -> RationalFunction2:
    """Re-normalize into the unique reduced representative (idempotent)."""
    if not isinstance(f, RationalFunction2):
        raise MalformedInputError("expected a rational function")
    return RationalFunction2(f.sa, f.sb, f.num, f.den)
