"""Exact integer matrix algebra on Python ints.

Matrices are plain lists of row lists.  Nothing here uses floats, so entry
growth during elimination can never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import NotSquareAfterDrop

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def matmul(a: Matrix, b: Matrix, inner: int | None = None) -> Matrix:
    if inner is None:
        inner = len(b)
    cols = len(b[0]) if b else 0
    return [
        [sum(row[k] * b[k][j] for k in range(inner)) for j in range(cols)]
        for row in a
    ]


def matvec(a: Matrix, x: list[int]) -> list[int]:
    return [sum(r * v for r, v in zip(row, x)) for row in a]


@dataclass(frozen=True)
class SnfResult:
    """``u @ m @ v == s`` with ``u``, ``v`` unimodular and ``s`` diagonal."""

    s: Matrix
    u: Matrix
    v: Matrix
    rank: int

    @property
    def diagonal(self) -> list[int]:
        return [self.s[i][i] for i in range(min(len(self.s), len(self.s[0]) if self.s else 0))]


def smith_normal_form(m: Matrix, cols: int | None = None) -> SnfResult:
    """Smith normal form by smallest-pivot elimination.

    ``cols`` is only needed for matrices with zero rows.
    """
    rows = len(m)
    ncols = len(m[0]) if rows else (cols or 0)
    a = [list(map(int, r)) for r in m]
    u = identity(rows)
    v = identity(ncols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):  # row dst += k * row src
        if k:
            ra, rs = a[dst], a[src]
            for j in range(ncols):
                ra[j] += k * rs[j]
            ua, us = u[dst], u[src]
            for j in range(rows):
                ua[j] += k * us[j]

    def add_col(dst, src, k):  # col dst += k * col src
        if k:
            for r in a:
                r[dst] += k * r[src]
            for r in v:
                r[dst] += k * r[src]

    t = 0
    while t < min(rows, ncols):
        # smallest nonzero magnitude in the trailing block
        best = None
        for i in range(t, rows):
            for j in range(t, ncols):
                x = a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, ncols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    if a[t][j]:
                        dirty = True
            if dirty:
                # a smaller remainder exists in row/col t: bring it to the pivot
                best = None
                for i in range(t, rows):
                    if a[i][t] and (best is None or abs(a[i][t]) < best[0]):
                        best = (abs(a[i][t]), i, None)
                for j in range(t, ncols):
                    if a[t][j] and (best is None or abs(a[t][j]) < best[0]):
                        best = (abs(a[t][j]), None, j)
                _, i, j = best
                if i is not None:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            # divisibility: every trailing entry must be a multiple of the pivot
            bad = None
            for i in range(t + 1, rows):
                for j in range(t + 1, ncols):
                    if a[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return SnfResult(a, u, v, t)


def integer_kernel_basis(m: Matrix, cols: int | None = None) -> list[list[int]]:
    """Lattice basis of ``{x : m x = 0}``: the trailing columns of ``v``."""
    ncols = len(m[0]) if m else (cols or 0)
    res = smith_normal_form(m, ncols)
    return [[res.v[i][j] for i in range(ncols)] for j in range(res.rank, ncols)]


def bareiss_det(m: Matrix) -> int:
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign = 1
    prev = 1
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
    return sign * a[n - 1][n - 1]


def minor_determinant(m: Matrix, drop_row: int, drop_col: int) -> int:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if rows - 1 != cols - 1 or rows < 1:
        raise NotSquareAfterDrop(f"{rows}x{cols} matrix minus one row and column is not square")
    sub = [
        [x for j, x in enumerate(r) if j != drop_col]
        for i, r in enumerate(m)
        if i != drop_row
    ]
    return abs(bareiss_det(sub))


def content(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g
