"""Matrix realizations of SO4 and GSO4 over exact rings.

SO4 is realized by g^t J g = J, det g = 1, with J the antidiagonal identity;
GSO4 by g^t J g = lambda(g) J, det g = lambda(g)^2.  Constructors cover torus
elements t(a1,a2) = diag(a1,a2,1/a2,1/a1), the one-parameter root subgroups,
Weyl representatives, the Siegel Levi m(h) = diag(h, h*), the outer involution
c (swap of the middle coordinates), and the two GL2 embeddings into GSO4.

Also here: Bruhat cell detection from corner-rank patterns, the constructive
Bruhat factorization g = b * w * u with u in U_w^-, the GL2 x GL2 splitting of
GSO4, and the congruence-subgroup data for Howe vectors of level m over Q_p
(K_m, d_m, H_m and the characters tau_m, psi_m, psi_U).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .exact.linalg import ExactMatrix
from .exact.ratfunc import RationalFunction2
from .padic import AdditiveCharacter, fraction_valuation


class MembershipError(ValueError):
    pass


class DomainError(ValueError):
    pass


def _coerce_ring(values):
    """Promote a list of scalars to a common ring (RationalFunction2 or Fraction)."""
    if any(isinstance(v, RationalFunction2) for v in values):
        return [RationalFunction2._coerce(v) for v in values]
    return [Fraction(v) for v in values]


def _j4(one):
    z = one * 0
    return ExactMatrix([[z, z, z, one], [z, z, one, z], [z, one, z, z], [one, z, z, z]])


class WeylWord(enum.Enum):
    E = "1"
    SA = "s_alpha"
    SB = "s_beta"
    SASB = "s_alpha*s_beta"

    def matrix(self) -> "GroupElement":
        if self is WeylWord.E:
            return GroupElement(ExactMatrix.identity(4, Fraction(1)))
        if self is WeylWord.SA:
            rows = [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]
        elif self is WeylWord.SB:
            rows = [[0, 0, 1, 0], [0, 0, 0, -1], [-1, 0, 0, 0], [0, 1, 0, 0]]
        else:
            sa = WeylWord.SA.matrix().matrix
            sb = WeylWord.SB.matrix().matrix
            return GroupElement(sa * sb)
        return GroupElement(ExactMatrix([[Fraction(x) for x in r] for r in rows]))

    def positions(self) -> set[tuple[int, int]]:
        m = self.matrix().matrix
        return {(i, j) for i in range(4) for j in range(4) if m.data[i][j] != 0}


class GroupElement:
    """A 4x4 matrix over an exact ring together with its similitude data."""

    __slots__ = ("matrix", "_lam")

    def __init__(self, matrix: ExactMatrix):
        if (matrix.rows, matrix.cols) != (4, 4):
            raise ValueError("expected a 4x4 matrix")
        self.matrix = matrix
        self._lam = False  # not yet computed

    # ---- similitude structure ---------------------------------------------

    def similitude(self):
        """lambda with g^t J g = lambda J, or None if g is not in GO4."""
        if self._lam is not False:
            return self._lam
        g = self.matrix
        one = g.data[0][0] ** 0 if not isinstance(g.data[0][0], int) else Fraction(1)
        J = _j4(one)
        M = g.transpose() * J * g
        lam = M.data[0][3]
        self._lam = lam if (lam != 0 and M == J * lam) else None
        return self._lam

    def is_so4(self) -> bool:
        lam = self.similitude()
        return lam is not None and lam == 1 and self.matrix.det() == 1

    def is_gso4(self) -> bool:
        lam = self.similitude()
        return lam is not None and self.matrix.det() == lam * lam

    def require_so4(self) -> "GroupElement":
        if not self.is_so4():
            raise MembershipError("matrix is not in SO4")
        return self

    def require_gso4(self) -> "GroupElement":
        if not self.is_gso4():
            raise MembershipError("matrix is not in GSO4")
        return self

    # ---- group operations ----------------------------------------------------

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.matrix * other.matrix)

    def inverse(self) -> "GroupElement":
        lam = self.similitude()
        if lam is None:
            return GroupElement(self.matrix.inverse())
        one = Fraction(1) if isinstance(lam, int) else lam**0
        J = _j4(one)
        inv = (J * self.matrix.transpose() * J).map(lambda x: x / lam)
        return GroupElement(inv)

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.matrix == other.matrix

    def __getitem__(self, ij):
        return self.matrix[ij]

    def __repr__(self):
        return f"GroupElement({self.matrix!r})"

    def to_json(self) -> dict:
        from .report import scalar_to_json  # local import to avoid a cycle

        x = self.matrix.data[0][0]
        if isinstance(x, RationalFunction2):
            ring = "RF2"
        elif isinstance(x, Fraction) or isinstance(x, int):
            ring = "Q"
        else:
            ring = "Qp"
        return {"ring": ring, "entries": [[scalar_to_json(v) for v in row] for row in self.matrix.data]}


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def torus(a1, a2) -> GroupElement:
    a1, a2 = _coerce_ring([a1, a2])
    one = a1**0
    z = one * 0
    m = ExactMatrix(
        [
            [a1, z, z, z],
            [z, a2, z, z],
            [z, z, one / a2, z],
            [z, z, z, one / a1],
        ]
    )
    return GroupElement(m)


def x_alpha(x) -> GroupElement:
    (x,) = _coerce_ring([x])
    one = x**0
    z = one * 0
    return GroupElement(ExactMatrix([[one, x, z, z], [z, one, z, z], [z, z, one, -x], [z, z, z, one]]))


def x_beta(y) -> GroupElement:
    (y,) = _coerce_ring([y])
    one = y**0
    z = one * 0
    return GroupElement(ExactMatrix([[one, z, y, z], [z, one, z, -y], [z, z, one, z], [z, z, z, one]]))


def x_malpha(x) -> GroupElement:
    """Lower root subgroup opposite to x_alpha."""
    (x,) = _coerce_ring([x])
    one = x**0
    z = one * 0
    return GroupElement(ExactMatrix([[one, z, z, z], [x, one, z, z], [z, z, one, z], [z, z, -x, one]]))


def x_mbeta(y) -> GroupElement:
    (y,) = _coerce_ring([y])
    one = y**0
    z = one * 0
    return GroupElement(ExactMatrix([[one, z, z, z], [z, one, z, z], [y, z, one, z], [z, -y, z, one]]))


def u_upper(x, y) -> GroupElement:
    """u(x, y) = x_alpha(x) x_beta(y); the two factors commute."""
    return x_alpha(x) * x_beta(y)


def u_lower(x, y) -> GroupElement:
    return x_malpha(x) * x_mbeta(y)


def weyl(word: WeylWord) -> GroupElement:
    return word.matrix()


def c_swap() -> GroupElement:
    one = Fraction(1)
    z = Fraction(0)
    return GroupElement(ExactMatrix([[one, z, z, z], [z, z, one, z], [z, one, z, z], [z, z, z, one]]))


def _inv2(h: ExactMatrix) -> ExactMatrix:
    a, b = h.data[0]
    c, d = h.data[1]
    det = a * d - b * c
    if det == 0:
        raise MembershipError("2x2 block not invertible")
    return ExactMatrix([[d / det, -b / det], [-c / det, a / det]])


def m_levi(h: ExactMatrix) -> GroupElement:
    """m(h) = diag(h, h*) with h* = J2 (h^t)^{-1} J2; lies in SO4 for h in GL2."""
    hi = _inv2(h).transpose()
    hstar = ExactMatrix([[hi.data[1][1], hi.data[1][0]], [hi.data[0][1], hi.data[0][0]]])
    z = h.data[0][0] * 0
    a, b = h.data[0]
    c, d = h.data[1]
    e, f = hstar.data[0]
    g2, k = hstar.data[1]
    return GroupElement(ExactMatrix([[a, b, z, z], [c, d, z, z], [z, z, e, f], [z, z, g2, k]]))


def iota_alpha(h: ExactMatrix) -> GroupElement:
    a, b = h.data[0]
    c, d = h.data[1]
    z = a * 0
    return GroupElement(ExactMatrix([[a, b, z, z], [c, d, z, z], [z, z, a, -b], [z, z, -c, d]]))


def iota_beta(h: ExactMatrix) -> GroupElement:
    a, b = h.data[0]
    c, d = h.data[1]
    z = a * 0
    return GroupElement(ExactMatrix([[a, z, b, z], [z, a, z, -b], [c, z, d, z], [z, -c, z, d]]))


def mat2(a, b, c, d) -> ExactMatrix:
    return ExactMatrix([_coerce_ring([a, b]), _coerce_ring([c, d])])


def build_element(kind: str, *args) -> GroupElement:
    """Uniform constructor used by the CLI: torus/u/ubar/weyl/c/m/x_beta/iota_a/iota_b."""
    table = {
        "torus": lambda: torus(*args),
        "u": lambda: u_upper(*args),
        "ubar": lambda: u_lower(*args),
        "weyl": lambda: weyl(WeylWord(args[0]) if not isinstance(args[0], WeylWord) else args[0]),
        "c": lambda: c_swap(),
        "m": lambda: m_levi(*args),
        "x_beta": lambda: x_beta(*args),
        "iota_alpha": lambda: iota_alpha(*args),
        "iota_beta": lambda: iota_beta(*args),
    }
    if kind not in table:
        raise ValueError(f"unknown element kind {kind!r}")
    return table[kind]()


# ---------------------------------------------------------------------------
# Bruhat cells
# ---------------------------------------------------------------------------


def _corner_rank_table(m: ExactMatrix) -> tuple[tuple[int, ...], ...]:
    """R(k, l) = rank of the lower-left k x l corner, k, l = 1..4."""
    out = []
    for k in range(1, 5):
        row = []
        for l in range(1, 5):
            sub = m.submatrix(range(4 - k, 4), range(l))
            row.append(sub.rank())
        out.append(tuple(row))
    return tuple(out)


def _monomial_rank_table(word: WeylWord) -> tuple[tuple[int, ...], ...]:
    pos = word.positions()
    out = []
    for k in range(1, 5):
        row = []
        for l in range(1, 5):
            row.append(sum(1 for (i, j) in pos if i >= 4 - k and j < l))
        out.append(tuple(row))
    return tuple(out)


_WORD_TABLES = None


def bruhat_cell(g: GroupElement) -> WeylWord:
    """The unique w with g in B w B, from the corner-rank pattern."""
    global _WORD_TABLES
    if g.matrix.det() == 0:
        raise MembershipError("matrix not invertible")
    if _WORD_TABLES is None:
        _WORD_TABLES = {w: _monomial_rank_table(w) for w in WeylWord}
    table = _corner_rank_table(g.matrix)
    for w, t in _WORD_TABLES.items():
        if t == table:
            return w
    raise MembershipError("rank pattern matches no Weyl word (not in SO4?)")


def bruhat_factor(g: GroupElement) -> tuple[GroupElement, WeylWord, GroupElement]:
    """g = b * w * u with b upper triangular and u in U_w^-; exact and unique."""
    w = bruhat_cell(g)
    m = g.matrix
    one = m.data[0][0] ** 0 if not isinstance(m.data[0][0], int) else Fraction(1)
    if w is WeylWord.E:
        u = GroupElement(ExactMatrix.identity(4, one))
    elif w is WeylWord.SA:
        u = x_alpha(-m.data[3][3] / m.data[3][2])
    elif w is WeylWord.SB:
        u = x_beta(-m.data[3][3] / m.data[3][1])
    else:
        u = u_upper(m.data[3][1] / m.data[3][0], m.data[3][2] / m.data[3][0])
    b = g * u.inverse() * weyl(w).inverse()
    for i in range(4):
        for j in range(i):
            if b.matrix.data[i][j] != 0:
                raise MembershipError("Bruhat factorization failed (residual lower part)")
    return b, w, u


def is_torus_element(g: GroupElement) -> bool:
    m = g.matrix
    if any(m.data[i][j] != 0 for i in range(4) for j in range(4) if i != j):
        return False
    a1, a2 = m.data[0][0], m.data[1][1]
    return m.data[2][2] == a1**0 / a2 and m.data[3][3] == a1**0 / a1


def a_w_contains(t: GroupElement, w: WeylWord) -> bool:
    """Membership in A_w = {t in T : gamma(t) = 1 for simple gamma with w gamma > 0}."""
    if not is_torus_element(t):
        raise DomainError("expected a torus element")
    a1, a2 = t.matrix.data[0][0], t.matrix.data[1][1]
    alpha_one = a1 / a2 == 1
    beta_one = a1 * a2 == 1
    if w is WeylWord.E:
        return alpha_one and beta_one
    if w is WeylWord.SA:
        return beta_one  # s_alpha keeps beta positive, flips alpha
    if w is WeylWord.SB:
        return alpha_one
    return True


def outer_conj(g: GroupElement) -> GroupElement:
    """Conjugation by the outer involution c (c = c^{-1})."""
    c = c_swap()
    return c * g * c


# ---------------------------------------------------------------------------
# GSO4 = (GL2 x GL2)/Delta splitting
# ---------------------------------------------------------------------------

# F^4 <-> Mat_2 dictionary: (x1,x2,x3,x4) <-> [[x1,x2],[-x3,x4]], under which
# iota_alpha(h) acts by X -> X h^t and iota_beta(h) by X -> (DhD) X, D=diag(1,-1).


def _vec_to_mat(col) -> ExactMatrix:
    x1, x2, x3, x4 = col
    return ExactMatrix([[x1, x2], [-x3, x4]])


def gso4_split(G: GroupElement) -> tuple[ExactMatrix, ExactMatrix]:
    """(h1, h2) with iota_alpha(h1) iota_beta(h2) = G, h1 scaled so its first
    nonzero entry is 1; defined up to the diagonal (z, 1/z) kernel."""
    G.require_gso4()
    m = G.matrix
    Y = {}
    Y[(0, 0)] = _vec_to_mat(m.col(0))
    Y[(0, 1)] = _vec_to_mat(m.col(1))
    Y[(1, 0)] = _vec_to_mat([-v for v in m.col(2)])
    Y[(1, 1)] = _vec_to_mat(m.col(3))
    # G(E_ij) = Lcol_i (x) Rrow_j for the hidden L, R
    y11 = Y[(0, 0)]
    i0 = j0 = None
    for i in range(2):
        for j in range(2):
            if y11.data[i][j] != 0:
                i0, j0 = i, j
                break
        if i0 is not None:
            break
    l1 = [y11.data[0][j0], y11.data[1][j0]]
    r1 = [y11.data[i0][j] / l1[i0] for j in range(2)]
    r2 = [Y[(0, 1)].data[i0][j] / l1[i0] for j in range(2)]
    pivot = 0 if r1[0] != 0 else 1
    l2 = [Y[(1, 0)].data[i][pivot] / r1[pivot] for i in range(2)]
    L = ExactMatrix([[l1[0], l2[0]], [l1[1], l2[1]]])
    R = ExactMatrix([r1, r2])
    h1 = R.transpose()
    h2 = ExactMatrix([[L.data[0][0], -L.data[0][1]], [-L.data[1][0], L.data[1][1]]])
    got = iota_alpha(h1) * iota_beta(h2)
    if got != G:
        raise MembershipError("GSO4 splitting did not reconstruct the element")
    # normalize h1's first nonzero entry to 1
    t = None
    for i in range(2):
        for j in range(2):
            if h1.data[i][j] != 0:
                t = h1.data[i][j]
                break
        if t is not None:
            break
    h1n = h1.map(lambda v: v / t)
    h2n = h2.map(lambda v: v * t)
    return h1n, h2n


# ---------------------------------------------------------------------------
# Howe subgroup data over Q_p (exact rational entries)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HoweLevel:
    """Level-m congruence data: K_m, d_m = t(p^{-2m}, 1), H_m = d_m K_m d_m^{-1},
    U_m = U cap H_m = {u(x,y) : v(x), v(y) >= -m}."""

    p: int
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise DomainError("level m must be >= 1")

    @property
    def psi(self) -> AdditiveCharacter:
        return AdditiveCharacter(self.p)

    def d(self) -> GroupElement:
        return torus(Fraction(self.p) ** (-2 * self.m), Fraction(1))

    def in_K(self, g: GroupElement) -> bool:
        if not g.is_so4():
            return False
        for i in range(4):
            for j in range(4):
                d = g.matrix.data[i][j] - (1 if i == j else 0)
                if fraction_valuation(d, self.p) < self.m:
                    return False
        return True

    def in_H(self, h: GroupElement) -> bool:
        d = self.d()
        return self.in_K(d.inverse() * h * d)

    def in_U_m(self, g: GroupElement) -> bool:
        xy = _u_parameters(g)
        if xy is None:
            return False
        x, y = xy
        return fraction_valuation(x, self.p) >= -self.m and fraction_valuation(y, self.p) >= -self.m

    def tau(self, k: GroupElement):
        """tau_m(k) = psi(p^{-2m} (k_{12} - 2 k_{13})) for k in K_m."""
        if not self.in_K(k):
            raise DomainError("element not in K_m")
        arg = Fraction(self.p) ** (-2 * self.m) * (k.matrix.data[0][1] - 2 * k.matrix.data[0][2])
        return self.psi.eval(arg)

    def psi_m(self, h: GroupElement):
        d = self.d()
        return self.tau(d.inverse() * h * d)

    def psi_U(self, u: GroupElement):
        xy = _u_parameters(u)
        if xy is None:
            raise DomainError("element not in U")
        x, y = xy
        return self.psi.eval(x - 2 * y)


def psi_U_value(u: GroupElement, psi: AdditiveCharacter):
    """The generic character psi_U(u(x, y)) = psi(x - 2y) on the upper unipotent."""
    xy = _u_parameters(u)
    if xy is None:
        raise DomainError("element not in U")
    x, y = xy
    return psi.eval(x - 2 * y)


def _u_parameters(g: GroupElement):
    """(x, y) if g = u(x, y), else None."""
    m = g.matrix
    x, y = m.data[0][1], m.data[0][2]
    return (x, y) if g == u_upper(x, y) else None


def howe_characters(level: HoweLevel, element: GroupElement, which: str):
    """Dispatch for the three level-m characters: 'tau_m', 'psi_m', 'psi_U'."""
    if which == "tau_m":
        return level.tau(element)
    if which == "psi_m":
        return level.psi_m(element)
    if which == "psi_U":
        return level.psi_U(element)
    raise ValueError("which must be one of 'tau_m', 'psi_m', 'psi_U'")
