"""Enumeration kernels over coefficient boxes of the coloring lattice.

Each kernel has a numba ``@njit`` version and a vectorised numpy version.
Set ``ZCOLOR_DISABLE_NUMBA=1`` (or run without numba installed) to force
the numpy path.  Both paths visit coefficient vectors in the same
lexicographic order, so they return identical witnesses.
"""

from __future__ import annotations

import itertools
import os

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None

USE_NUMBA = njit is not None and os.environ.get("ZCOLOR_DISABLE_NUMBA", "") not in ("1", "true", "yes")

_INT64_SAFE = 2**60
_CHUNK = 4096


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


def _fits_int64(basis, bound) -> bool:
    if not basis:
        return True
    big = max(abs(x) for row in basis for x in row)
    return big * bound * len(basis) < _INT64_SAFE


# numba path ----------------------------------------------------------------

if njit is not None:

    @njit(cache=True)
    def _distinct_capped(vec, cap):
        s = np.sort(vec)
        count = 1
        for i in range(1, s.shape[0]):
            if s[i] != s[i - 1]:
                count += 1
                if count > cap:
                    return count
        return count

    @njit(cache=True)
    def _scan_nb(basis, bound, lo, hi, limit):
        # coefficient vectors whose image size lies in [lo, hi]
        k, n = basis.shape
        coeffs = np.full(k, -bound, dtype=np.int64)
        hits = np.empty((limit, k), dtype=np.int64)
        found = 0
        vec = np.empty(n, dtype=np.int64)
        while True:
            for j in range(n):
                acc = 0
                for i in range(k):
                    acc += coeffs[i] * basis[i, j]
                vec[j] = acc
            size = _distinct_capped(vec, hi)
            if lo <= size <= hi:
                hits[found, :] = coeffs
                found += 1
                if found == limit:
                    break
            # odometer, last coefficient fastest
            pos = k - 1
            while pos >= 0 and coeffs[pos] == bound:
                coeffs[pos] = -bound
                pos -= 1
            if pos < 0:
                break
            coeffs[pos] += 1
        return hits[:found]

    @njit(cache=True)
    def _fox_count_nb(mat, n):
        rows, cols = mat.shape
        x = np.zeros(cols, dtype=np.int64)
        total = 0
        while True:
            ok = True
            for r in range(rows):
                acc = 0
                for c in range(cols):
                    acc += mat[r, c] * x[c]
                if acc % n != 0:
                    ok = False
                    break
            if ok:
                total += 1
            pos = cols - 1
            while pos >= 0 and x[pos] == n - 1:
                x[pos] = 0
                pos -= 1
            if pos < 0:
                break
            x[pos] += 1
        return total


# numpy path ----------------------------------------------------------------


def _combo_chunks(k, bound):
    it = itertools.product(range(-bound, bound + 1), repeat=k)
    while True:
        block = list(itertools.islice(it, _CHUNK))
        if not block:
            return
        yield np.array(block, dtype=np.int64)


def _scan_np(basis, bound, lo, hi, limit, dtype):
    b = np.array(basis, dtype=dtype)
    k = b.shape[0]
    out = []
    for block in _combo_chunks(k, bound):
        vals = block.astype(dtype) @ b
        s = np.sort(vals, axis=1)
        sizes = 1 + (s[:, 1:] != s[:, :-1]).sum(axis=1)
        for idx in np.nonzero((sizes >= lo) & (sizes <= hi))[0]:
            out.append(tuple(int(c) for c in block[idx]))
            if len(out) == limit:
                return out
    return out


def _fox_count_np(mat, n):
    rows, cols = mat.shape
    total = 0
    it = itertools.product(range(n), repeat=cols)
    while True:
        block = list(itertools.islice(it, 65536))
        if not block:
            return total
        x = np.array(block, dtype=np.int64)
        res = (x @ mat.T) % n
        total += int((res == 0).all(axis=1).sum())


# public entry points -------------------------------------------------------


def _scan(basis, bound, lo, hi, limit):
    if not basis:
        return []
    if not _fits_int64(basis, bound):
        return _scan_np(basis, bound, lo, hi, limit, object)
    if USE_NUMBA:
        hits = _scan_nb(np.array(basis, dtype=np.int64), bound, lo, hi, limit)
        return [tuple(int(c) for c in row) for row in hits]
    return _scan_np(basis, bound, lo, hi, limit, np.int64)


def first_small_image(basis, bound: int, max_colors: int):
    """First coefficient vector giving a non-constant image of size <= max_colors."""
    hits = _scan(basis, bound, 2, max_colors, 1)
    return hits[0] if hits else None


def image_size_hits(basis, bound: int, size: int, limit: int):
    return _scan(basis, bound, size, size, limit)


def fox_count(matrix, n: int) -> int:
    """Number of vectors x in (Z/n)^cols with matrix @ x = 0 mod n, by brute force."""
    mat = np.array(matrix, dtype=np.int64)
    if mat.ndim != 2 or mat.shape[1] == 0:
        return 1
    if mat.shape[0] == 0:
        return n ** mat.shape[1]
    if USE_NUMBA:
        return int(_fox_count_nb(mat, n))
    return _fox_count_np(mat, n)
