"""The exterior square of the standard 4-dimensional representation.

Lambda^2(C^4) carries the fixed ordered basis e1^e2, e1^e3, e1^e4, e2^e3,
e2^e4, e3^e4.  The split bilinear form Q(e_i, e_j) = [i + j = 5] induces
Q~(v1^v2, w1^w2) = Q(v1,w1) Q(v2,w2) - Q(v1,w2) Q(v2,w1) on it, and together
with the volume identification e1^e2^e3^e4 -> 1 defines the star operator

    omega ^ rho(theta) = Q~(omega, theta) * vol,

a linear involution commuting with the SO4 action.  Its +-/- eigenspaces are
the two 3-dimensional irreducible summands; the plus space is spanned by
B = (e1^e3, e1^e4 + e3^e2, e2^e4), in which order the torus diag(a,b,1/b,1/a)
acts by diag(a/b, 1, b/a).

The presentation-dependent membership test (wedge an index sum against its
coordinate-flipped mirror with a 1/m normalization and read off +-1) is kept
separate in `self_dual_sign`; it agrees with eigenspace membership.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exact.linalg import ExactMatrix, solve_linear_exact
from .so4 import GroupElement, MembershipError, outer_conj

PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))

# B-basis coordinates in the fixed PAIRS order
PLUS_BASIS = (
    (Fraction(0), Fraction(1), Fraction(0), Fraction(0), Fraction(0), Fraction(0)),  # e1^e3
    (Fraction(0), Fraction(0), Fraction(1), Fraction(-1), Fraction(0), Fraction(0)),  # e1^e4 + e3^e2
    (Fraction(0), Fraction(0), Fraction(0), Fraction(0), Fraction(1), Fraction(0)),  # e2^e4
)


def lambda2_matrix(g: GroupElement) -> ExactMatrix:
    """The induced map on Lambda^2: (i,j) x (k,l) entry is the 2x2 minor."""
    m = g.matrix
    rows = []
    for i, j in PAIRS:
        rows.append([m.data[i][k] * m.data[j][l] - m.data[i][l] * m.data[j][k] for k, l in PAIRS])
    return ExactMatrix(rows)


def _perm_sign(seq) -> int:
    sign = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def _volume_pairing() -> ExactMatrix:
    """E with omega_r ^ omega_s = E[r][s] * e1^e2^e3^e4."""
    rows = []
    for i, j in PAIRS:
        row = []
        for k, l in PAIRS:
            if len({i, j, k, l}) < 4:
                row.append(Fraction(0))
            else:
                row.append(Fraction(_perm_sign((i, j, k, l))))
        rows.append(row)
    return ExactMatrix(rows)


def _q(i: int, j: int) -> Fraction:
    return Fraction(1) if i + j == 3 else Fraction(0)


def _induced_gram() -> ExactMatrix:
    rows = []
    for i, j in PAIRS:
        rows.append([_q(i, k) * _q(j, l) - _q(i, l) * _q(j, k) for k, l in PAIRS])
    return ExactMatrix(rows)


def star_rho() -> ExactMatrix:
    """The star operator rho = E^{-1} G; satisfies rho^2 = id."""
    return _volume_pairing().inverse() * _induced_gram()


@dataclass(frozen=True)
class SplitBasis:
    plus: tuple[tuple, ...]
    minus: tuple[tuple, ...]


class InvalidOperatorError(ValueError):
    pass


def split_eigenspaces(rho: ExactMatrix) -> SplitBasis:
    """Exact kernels of rho -+ id (the +1 and -1 eigenspaces)."""
    if rho * rho != ExactMatrix.identity(6, Fraction(1)):
        raise InvalidOperatorError("operator does not square to the identity")
    eye = ExactMatrix.identity(6, Fraction(1))
    plus = solve_linear_exact(rho - eye, "kernel")
    minus = solve_linear_exact(rho + eye, "kernel")
    return SplitBasis(tuple(tuple(v) for v in plus), tuple(tuple(v) for v in minus))


def span_equals(vs1, vs2) -> bool:
    """Do two vector lists span the same subspace (exact)?"""
    if not vs1 and not vs2:
        return True
    if bool(vs1) != bool(vs2):
        return False
    m1 = ExactMatrix(list(vs1))
    m2 = ExactMatrix(list(vs2))
    both = ExactMatrix(list(vs1) + list(vs2))
    r1, r2, rb = m1.rank(), m2.rank(), both.rank()
    return r1 == r2 == rb


def in_span(v, vs) -> bool:
    if all(x == 0 for x in v):
        return True
    if not vs:
        return False
    m = ExactMatrix(list(vs))
    return ExactMatrix(list(vs) + [list(v)]).rank() == m.rank()


def _restrict(op: ExactMatrix, basis) -> ExactMatrix:
    """Matrix of op on span(basis) in that basis; raises if not invariant."""
    cols_in = ExactMatrix([list(b) for b in basis]).transpose()  # 6 x d
    image = op * cols_in
    d = len(basis)
    out_cols = []
    for j in range(d):
        col = [image.data[i][j] for i in range(6)]
        sol = cols_in.solve(col)
        if sol is None:
            raise MembershipError("subspace is not invariant under the operator")
        out_cols.append(sol)
    return ExactMatrix(out_cols).transpose()


def wedge_plus_matrix(g: GroupElement) -> ExactMatrix:
    """Action on the plus space in the ordered basis B; g must lie in SO4."""
    g.require_so4()
    return _restrict(lambda2_matrix(g), PLUS_BASIS)


def minus_basis() -> tuple[tuple, ...]:
    return split_eigenspaces(star_rho()).minus


def wedge_minus_matrix(g: GroupElement) -> ExactMatrix:
    g.require_so4()
    return _restrict(lambda2_matrix(g), minus_basis())


def self_dual_sign(pure_wedges: list[tuple[int, int]]):
    """Sign j in {+1, -1} (or None) of E ^ phi2(E) = j * vol for a formal sum
    of pure wedges given by 1-based index pairs; phi2 flips (i,j) -> (5-i, 5-j)
    with the 1/m normalization, m the number of summands."""
    m = len(pure_wedges)
    if m == 0:
        return None
    total = Fraction(0)
    for i, j in pure_wedges:
        for k, l in pure_wedges:
            flipped = (5 - k, 5 - l)
            idx = (i - 1, j - 1, flipped[0] - 1, flipped[1] - 1)
            if len(set(idx)) == 4:
                total += Fraction(_perm_sign(idx), m)
    if total == 1:
        return 1
    if total == -1:
        return -1
    return None


def wedge_vector(pure_wedges: list[tuple[int, int]]):
    """Coordinates of a formal sum of 1-based pure wedges in the PAIRS basis."""
    v = [Fraction(0)] * 6
    for i, j in pure_wedges:
        a, b = i - 1, j - 1
        sign = 1
        if a > b:
            a, b, sign = b, a, -1
        if a == b:
            continue
        v[PAIRS.index((a, b))] += sign
    return v


def find_intertwiner(rep_a, rep_b, generators) -> ExactMatrix | None:
    """Invertible T with T rep_a(g) = rep_b(g) T for all generators, or None.

    rep_a/rep_b map a GroupElement to a 3x3 ExactMatrix.  The solution space is
    computed exactly; an invertible element is searched among basis vectors,
    pairwise sums, and a few deterministic combinations.
    """
    rows = []
    for g in generators:
        a = rep_a(g)
        b = rep_b(g)
        # (T a - b T)[i][j] = sum_k T[i][k] a[k][j] - b[i][k] T[k][j]
        for i in range(3):
            for j in range(3):
                row = [Fraction(0)] * 9
                for k in range(3):
                    row[3 * i + k] += a.data[k][j]
                    row[3 * k + j] -= b.data[i][k]
                rows.append(row)
    kernel = solve_linear_exact(ExactMatrix(rows), "kernel")
    if not kernel:
        return None

    def as_matrix(vec):
        return ExactMatrix([vec[0:3], vec[3:6], vec[6:9]])

    candidates = [list(v) for v in kernel]
    for v, w in itertools.combinations(kernel, 2):
        candidates.append([x + y for x, y in zip(v, w)])
    for mult in range(2, 5):
        if len(kernel) >= 2:
            candidates.append([x + mult * y for x, y in zip(kernel[0], kernel[1])])
    for cand in candidates:
        t = as_matrix(cand)
        if t.det() != 0:
            return t
    return None


def rep_plus(g: GroupElement) -> ExactMatrix:
    return wedge_plus_matrix(g)


def rep_minus(g: GroupElement) -> ExactMatrix:
    return wedge_minus_matrix(g)


def rep_minus_outer(g: GroupElement) -> ExactMatrix:
    """The minus action precomposed with conjugation by the outer involution."""
    return wedge_minus_matrix(outer_conj(g))
