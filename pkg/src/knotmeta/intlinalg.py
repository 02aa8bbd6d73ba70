"""Exact integer matrix algebra: determinants, Smith normal form with
unimodular transforms, and the torsion solver for W*theta = 0 over Q/Z.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

# A rotation vector is a tuple of exact rationals in [0,1), each entry
# standing for an eigenvalue argument theta/2pi.
RotationVector = tuple


class IntLinAlgError(ValueError):
    pass


class IntMat:
    """Immutable integer matrix, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise IntLinAlgError("matrix must be nonempty")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise IntLinAlgError("ragged rows in matrix")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, *args):
        raise AttributeError("IntMat is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntMat":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, IntMat):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def transpose(self) -> "IntMat":
        return IntMat(list(zip(*self.entries)))

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise IntLinAlgError("shape mismatch in addition")
        return IntMat(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise IntLinAlgError("shape mismatch in subtraction")
        return IntMat(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise IntLinAlgError("shape mismatch in product")
        bt = list(zip(*other.entries))
        return IntMat(
            [[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self.entries]
        )

    def is_square(self) -> bool:
        return self.rows == self.cols

    def tolists(self):
        return [list(r) for r in self.entries]

    def __repr__(self):
        return f"IntMat({self.tolists()})"


def det(M: IntMat) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if not M.is_square():
        raise IntLinAlgError("determinant of a non-square matrix")
    n = M.rows
    a = M.tolists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SnfResult:
    """U @ W @ Vt = D with U, Vt unimodular and D = diag(d_1,...,d_n),
    d_i >= 0 and d_i | d_{i+1}."""

    U: IntMat
    D: IntMat
    Vt: IntMat

    @property
    def diag(self) -> tuple:
        return tuple(self.D[i, i] for i in range(self.D.rows))


def smith_normal_form(W: IntMat) -> SnfResult:
    if not W.is_square():
        raise IntLinAlgError("Smith normal form of a non-square matrix")
    n = W.rows
    a = W.tolists()
    u = IntMat.identity(n).tolists()
    v = IntMat.identity(n).tolists()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in range(n):
            a[r][i], a[r][j] = a[r][j], a[r][i]
            v[r][i], v[r][j] = v[r][j], v[r][i]

    def add_row(dst, src, mult):
        for j in range(n):
            a[dst][j] += mult * a[src][j]
            u[dst][j] += mult * u[src][j]

    def add_col(dst, src, mult):
        for r in range(n):
            a[r][dst] += mult * a[r][src]
            v[r][dst] += mult * v[r][src]

    def negate_row(i):
        for j in range(n):
            a[i][j] = -a[i][j]
            u[i][j] = -u[i][j]

    for t in range(n):
        while True:
            # minimum-absolute-value nonzero pivot in the trailing block
            pivot = None
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    x = abs(a[i][j])
                    if x and (best is None or x < best):
                        best, pivot = x, (i, j)
            if pivot is None:
                break
            pi, pj = pivot
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)

            progressed = True
            while progressed:
                progressed = False
                for i in range(t + 1, n):
                    if a[i][t]:
                        q = a[i][t] // a[t][t]
                        add_row(i, t, -q)
                        if a[i][t]:
                            # remainder smaller than pivot: promote it
                            swap_rows(t, i)
                            progressed = True
                for j in range(t + 1, n):
                    if a[t][j]:
                        q = a[t][j] // a[t][t]
                        add_col(j, t, -q)
                        if a[t][j]:
                            swap_cols(t, j)
                            progressed = True

            # pivot must divide the whole trailing block
            culprit = None
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    if a[i][j] % a[t][t]:
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            add_row(t, culprit, 1)

        if a[t][t] < 0:
            negate_row(t)

    return SnfResult(IntMat(u), IntMat(a), IntMat(v))


def torsion_solutions(W: IntMat) -> list:
    """All theta in (Q/Z)^n with W @ theta = 0 mod 1, in lexicographic order.

    Diagonalize U W Vt = D; with psi = Vt^{-1} theta the system is
    D psi = 0 mod 1, so psi_i runs over k_i/d_i and theta = Vt psi mod 1.
    There are exactly |det W| solutions.
    """
    if not W.is_square():
        raise IntLinAlgError("torsion solver needs a square matrix")
    snf = smith_normal_form(W)
    diag = snf.diag
    if any(d == 0 for d in diag):
        raise IntLinAlgError("singular matrix: det W = 0")
    vt = snf.Vt.entries
    n = W.rows
    sols = []
    for ks in itertools.product(*[range(d) for d in diag]):
        psi = [Fraction(k, d) for k, d in zip(ks, diag)]
        theta = tuple(
            sum((vt[i][j] * psi[j] for j in range(n)), Fraction(0)) % 1
            for i in range(n)
        )
        sols.append(theta)
    sols.sort()
    return sols
