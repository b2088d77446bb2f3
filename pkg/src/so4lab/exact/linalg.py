"""Dense exact linear algebra over any field-like scalar type.

Entries only need +, -, *, / and == (Fraction, RationalFunction2, Cyclotomic
all qualify).  Elimination is fraction-free in spirit but simply divides, since
every supported scalar type is a field.
"""

from __future__ import annotations

from fractions import Fraction


def _is_zero(x) -> bool:
    return x == 0 or not x


class ExactMatrix:
    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        data = [list(r) for r in data]
        if not data or not data[0]:
            raise ValueError("matrix must be nonempty")
        w = len(data[0])
        if any(len(r) != w for r in data):
            raise ValueError("ragged rows")
        self.rows = len(data)
        self.cols = w
        self.data = data

    @staticmethod
    def identity(n: int, one=Fraction(1)):
        z = one * 0
        return ExactMatrix([[one if i == j else z for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(r: int, c: int, zero=Fraction(0)):
        return ExactMatrix([[zero for _ in range(c)] for _ in range(r)])

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i):
        return list(self.data[i])

    def col(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return ExactMatrix([[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)])

    def __sub__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return ExactMatrix([[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)])

    def __neg__(self):
        return ExactMatrix([[-x for x in r] for r in self.data])

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            ot = list(zip(*other.data))
            return ExactMatrix([[_dot(r, c) for c in ot] for r in self.data])
        return ExactMatrix([[x * other for x in r] for r in self.data])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and all(
            x == y for r1, r2 in zip(self.data, other.data) for x, y in zip(r1, r2)
        )

    def transpose(self):
        return ExactMatrix([list(c) for c in zip(*self.data)])

    def map(self, f):
        return ExactMatrix([[f(x) for x in r] for r in self.data])

    def submatrix(self, rows, cols):
        return ExactMatrix([[self.data[i][j] for j in cols] for i in rows])

    # ---- elimination -----------------------------------------------------

    def rref(self):
        """(reduced row echelon form, pivot column list)."""
        m = [list(r) for r in self.data]
        pivots = []
        pr = 0
        for pc in range(self.cols):
            pivot = None
            for r in range(pr, self.rows):
                if not _is_zero(m[r][pc]):
                    pivot = r
                    break
            if pivot is None:
                continue
            m[pr], m[pivot] = m[pivot], m[pr]
            pv = m[pr][pc]
            m[pr] = [x / pv for x in m[pr]]
            for r in range(self.rows):
                if r != pr and not _is_zero(m[r][pc]):
                    f = m[r][pc]
                    m[r] = [x - f * y for x, y in zip(m[r], m[pr])]
            pivots.append(pc)
            pr += 1
            if pr == self.rows:
                break
        return ExactMatrix(m), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self):
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        m = [list(r) for r in self.data]
        n = self.rows
        det = None
        sign = 1
        for c in range(n):
            pivot = None
            for r in range(c, n):
                if not _is_zero(m[r][c]):
                    pivot = r
                    break
            if pivot is None:
                return m[0][0] * 0
            if pivot != c:
                m[c], m[pivot] = m[pivot], m[c]
                sign = -sign
            pv = m[c][c]
            det = pv if det is None else det * pv
            for r in range(c + 1, n):
                if not _is_zero(m[r][c]):
                    f = m[r][c] / pv
                    m[r] = [x - f * y for x, y in zip(m[r], m[c])]
        return det if sign == 1 else -det

    def inverse(self):
        if self.rows != self.cols:
            raise ValueError("inverse of non-square matrix")
        n = self.rows
        one = _ring_one(self.data)
        aug = ExactMatrix([row + ExactMatrix.identity(n, one).data[i] for i, row in enumerate(self.data)])
        red, piv = aug.rref()
        if piv != list(range(n)):
            raise ZeroDivisionError("matrix not invertible")
        return ExactMatrix([red.data[i][n:] for i in range(n)])

    def kernel_basis(self) -> list[list]:
        """Basis of the right kernel, from the reduced echelon form."""
        red, piv = self.rref()
        one = _ring_one(self.data)
        zero = one * 0
        free = [c for c in range(self.cols) if c not in piv]
        basis = []
        for fc in free:
            v = [zero] * self.cols
            v[fc] = one
            for r, pc in enumerate(piv):
                v[pc] = -red.data[r][fc]
            basis.append(v)
        return basis

    def solve(self, b: list):
        """One solution of A x = b, or None if inconsistent."""
        if len(b) != self.rows:
            raise ValueError("dimension mismatch")
        one = _ring_one(self.data)
        zero = one * 0
        aug = ExactMatrix([row + [bv] for row, bv in zip(self.data, b)])
        red, piv = aug.rref()
        if self.cols in piv:
            return None
        x = [zero] * self.cols
        for r, pc in enumerate(piv):
            x[pc] = red.data[r][self.cols]
        return x

    def __repr__(self):
        return "ExactMatrix(" + "; ".join(", ".join(repr(x) for x in r) for r in self.data) + ")"


def _dot(r, c):
    acc = None
    for x, y in zip(r, c):
        acc = x * y if acc is None else acc + x * y
    return acc


def _ring_one(data):
    # x ** 0 yields the multiplicative identity for every supported scalar type
    x = data[0][0]
    if isinstance(x, int):
        return Fraction(1)
    return x**0


def solve_linear_exact(matrix: ExactMatrix, mode: str = "kernel", rhs: list | None = None):
    """Exact kernel basis or a particular solution of A x = b.

    mode="kernel": returns the list of kernel basis vectors (possibly empty).
    mode="solve":  returns one solution of A x = rhs, or None if inconsistent.
    """
    if mode == "kernel":
        return matrix.kernel_basis()
    if mode == "solve":
        if rhs is None:
            raise ValueError("solve mode needs rhs")
        return matrix.solve(rhs)
    raise ValueError("mode must be 'kernel' or 'solve'")
