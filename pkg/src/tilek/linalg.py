"""Exact dense integer linear algebra.

Everything here works on Python ints, so intermediate coefficient growth
never overflows. Matrices are stored as lists of row lists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .groups import FgAbelianGroup

INFINITE = math.inf


class IntMatrix:
    """A dense rows x cols matrix of arbitrary-precision integers."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence[int]], cols: Optional[int] = None):
        self.data = [[int(x) for x in row] for row in data]
        self.rows = len(self.data)
        if cols is None:
            if not self.data:
                raise ValueError("cols is required for a matrix with no rows")
            cols = len(self.data[0])
        self.cols = cols
        for row in self.data:
            if len(row) != cols:
                raise ValueError("ragged matrix")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def diagonal(cls, diag: Sequence[int], rows: int, cols: int) -> IntMatrix:
        m = cls.zeros(rows, cols)
        for i, d in enumerate(diag):
            m.data[i][i] = d
        return m

    @classmethod
    def from_array(cls, arr) -> IntMatrix:
        """Build from a 2-d numpy array (any integer or object dtype)."""
        rows, cols = arr.shape
        return cls([[int(x) for x in row] for row in arr.tolist()], cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __repr__(self):
        return f"IntMatrix({self.data!r}, cols={self.cols})"

    def tolist(self) -> list[list[int]]:
        return [row[:] for row in self.data]

    def transpose(self) -> IntMatrix:
        return IntMatrix([[row[j] for row in self.data] for j in range(self.cols)], self.rows)

    @property
    def T(self) -> IntMatrix:
        return self.transpose()

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for row in self.data:
            acc = [0] * other.cols
            for k, x in enumerate(row):
                if x:
                    for j, y in enumerate(other.data[k]):
                        if y:
                            acc[j] += x * y
            out.append(acc)
        return IntMatrix(out, other.cols)

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)],
                         self.cols)

    def permute_columns(self, perm: Sequence[int]) -> IntMatrix:
        return IntMatrix([[row[p] for p in perm] for row in self.data], self.cols)

    def apply(self, v: Sequence[int]) -> list[int]:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return [sum(a * b for a, b in zip(row, v) if a) for row in self.data]

    def determinant(self) -> int:
        """Bareiss fraction-free elimination; exact for square matrices."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        a = self.tolist()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1


def block_right(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Horizontal concatenation ``(a, b)``."""
    if a.rows != b.rows:
        raise ValueError(f"row mismatch: {a.rows} vs {b.rows}")
    return IntMatrix([ra + rb for ra, rb in zip(a.data, b.data)], a.cols + b.cols)


@dataclass(frozen=True)
class SNFResult:
    """``left @ m @ right == diag(diagonal)`` with unimodular transforms.

    ``diagonal`` has ``min(rows, cols)`` entries: the nonzero invariant
    factors (positive, each dividing the next) followed by zeros.
    """

    diagonal: tuple[int, ...]
    rank: int
    left: Optional[IntMatrix] = None
    right: Optional[IntMatrix] = None

    @property
    def nonzero(self) -> tuple[int, ...]:
        return self.diagonal[: self.rank]


def _row_axpy(dst: list[int], src: list[int], q: int, nz: Sequence[int]) -> None:
    # dst -= q * src over the nonzero support of src
    for c in nz:
        dst[c] -= q * src[c]


def _support(row: list[int], start: int = 0) -> list[int]:
    return [c for c in range(start, len(row)) if row[c]]


def _min_entry(a: list[list[int]], k: int, nr: int, nc: int):
    best = None
    best_abs = 0
    for i in range(k, nr):
        row = a[i]
        for j in range(k, nc):
            x = row[j]
            if x and (best is None or abs(x) < best_abs):
                best, best_abs = (i, j), abs(x)
                if best_abs == 1:
                    return best
    return best


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def snf(m: IntMatrix, keep_transforms: bool = False, *, keep_left: bool = False) -> SNFResult:
    """Smith normal form of ``m``.

    Pivots on the entry of least absolute value in the remaining submatrix
    (first in row-major order on ties). With ``keep_transforms`` both
    unimodular transforms are returned; ``keep_left`` retains only the row
    transform, which is all :func:`element_order_in_cokernel` needs.
    """
    nr, nc = m.rows, m.cols
    a = m.tolist()
    track_left = keep_transforms or keep_left
    track_right = keep_transforms
    left = IntMatrix.identity(nr).data if track_left else None
    # rows of right_t are the columns of the right transform
    right_t = IntMatrix.identity(nc).data if track_right else None

    def swap_rows(i, j):
        if i != j:
            a[i], a[j] = a[j], a[i]
            if left is not None:
                left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        if i != j:
            for row in a:
                row[i], row[j] = row[j], row[i]
            if right_t is not None:
                right_t[i], right_t[j] = right_t[j], right_t[i]

    k = 0
    while k < min(nr, nc):
        piv = _min_entry(a, k, nr, nc)
        if piv is None:
            break
        swap_rows(k, piv[0])
        swap_cols(k, piv[1])
        while True:
            p = a[k][k]
            rowk = a[k]
            nz = _support(rowk, k)
            lnz = _support(left[k]) if left is not None else ()
            best = None
            for i in range(k + 1, nr):
                x = a[i][k]
                if x:
                    q = x // p
                    _row_axpy(a[i], rowk, q, nz)
                    if left is not None:
                        _row_axpy(left[i], left[k], q, lnz)
                    r = a[i][k]
                    if r and (best is None or abs(r) < abs(a[best][k])):
                        best = i
            if best is not None:
                swap_rows(k, best)
                continue
            # column k is clear below the pivot, so column ops only touch row k
            best = None
            for j in range(k + 1, nc):
                x = rowk[j]
                if x:
                    q = x // p
                    rowk[j] = x - q * p
                    if right_t is not None:
                        rnz = _support(right_t[k])
                        _row_axpy(right_t[j], right_t[k], q, rnz)
                    if rowk[j] and (best is None or abs(rowk[j]) < abs(rowk[best])):
                        best = j
            if best is not None:
                swap_cols(k, best)
                continue
            break
        if a[k][k] < 0:
            a[k] = [-x for x in a[k]]
            if left is not None:
                left[k] = [-x for x in left[k]]
        k += 1

    rank = k
    d = [a[i][i] for i in range(rank)]
    # enforce the divisibility chain: diag(x, y) ~ diag(gcd, lcm)
    for i in range(rank):
        for j in range(i + 1, rank):
            x, y = d[i], d[j]
            if y % x == 0:
                continue
            g, s, t = _xgcd(x, y)
            xg, yg = x // g, y // g
            d[i], d[j] = g, x * yg
            if left is not None:
                li, lj = left[i], left[j]
                left[i] = [s * u + t * v for u, v in zip(li, lj)]
                left[j] = [-yg * u + xg * v for u, v in zip(li, lj)]
            if right_t is not None:
                ri, rj = right_t[i], right_t[j]
                right_t[i] = [u + v for u, v in zip(ri, rj)]
                right_t[j] = [-t * yg * u + s * xg * v for u, v in zip(ri, rj)]

    diagonal = tuple(d) + (0,) * (min(nr, nc) - rank)
    return SNFResult(
        diagonal=diagonal,
        rank=rank,
        left=IntMatrix(left, nr) if left is not None else None,
        right=IntMatrix(right_t, nc).transpose() if right_t is not None else None,
    )


def rank(m: IntMatrix) -> int:
    return snf(m).rank


def cokernel(m: IntMatrix) -> FgAbelianGroup:
    """``Z^rows / (column span of m)``."""
    return cokernel_from_snf(snf(m), m.rows)


def cokernel_from_snf(res: SNFResult, rows: int) -> FgAbelianGroup:
    return FgAbelianGroup(rows - res.rank, tuple(d for d in res.nonzero if d > 1))


def element_order_in_cokernel(m: IntMatrix, v: Sequence[int]):
    """Order of the class of ``v`` in ``coker(m)``; ``INFINITE`` if it has none."""
    if len(v) != m.rows:
        raise ValueError(f"vector length {len(v)} != {m.rows} rows")
    return order_from_snf(snf(m, keep_left=True), v)


def order_from_snf(res: SNFResult, v: Sequence[int]):
    """Order of ``v`` given an SNF computed with the left transform kept."""
    if res.left is None:
        raise ValueError("SNF was computed without its left transform")
    w = res.left.apply(v)
    order = 1
    for i, c in enumerate(w):
        if i >= res.rank:
            if c:
                return INFINITE
            continue
        d = res.diagonal[i]
        order = math.lcm(order, d // math.gcd(d, c))
    return order


def hnf(m: IntMatrix) -> IntMatrix:
    """Column-style Hermite normal form: a basis of the column lattice of ``m``.

    Returns an ``rows x r`` matrix whose columns are in echelon form, with a
    positive pivot in each column and entries to the left of every pivot
    reduced into ``[0, pivot)``. Independent of :func:`snf`.
    """
    gens = [list(col) for col in zip(*m.data)] if m.rows else []
    basis: list[list[int]] = []
    row = 0
    while gens and row < m.rows:
        live = [g for g in gens if g[row]]
        rest = [g for g in gens if not g[row]]
        if not live:
            row += 1
            continue
        while len(live) > 1:
            live.sort(key=lambda g: abs(g[row]))
            p = live[0]
            nxt = [p]
            for g in live[1:]:
                q = g[row] // p[row]
                g = [x - q * y for x, y in zip(g, p)]
                (nxt if g[row] else rest).append(g)
            live = nxt
        p = live[0]
        if p[row] < 0:
            p = [-x for x in p]
        for b in basis:
            q = b[row] // p[row]
            if q:
                b[:] = [x - q * y for x, y in zip(b, p)]
        basis.append(p)
        gens = [g for g in rest if any(g)]
        row += 1
    return IntMatrix([list(r) for r in zip(*basis)] if basis else [[] for _ in range(m.rows)],
                     len(basis))


def in_lattice(basis: IntMatrix, v: Sequence[int]) -> bool:
    """Whether ``v`` lies in the column lattice of an :func:`hnf` basis."""
    w = list(v)
    for c in range(basis.cols):
        col = [basis.data[i][c] for i in range(basis.rows)]
        piv = next(i for i, x in enumerate(col) if x)
        if w[piv] % col[piv]:
            return False
        q = w[piv] // col[piv]
        if q:
            w = [x - q * y for x, y in zip(w, col)]
    return not any(w)
