from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zcolor.errors import NotSquareAfterDrop
from zcolor.intlinalg import (
    bareiss_det,
    content,
    identity,
    integer_kernel_basis,
    matmul,
    matvec,
    minor_determinant,
    smith_normal_form,
)


def matrices(max_side=6, bound=9):
    return st.integers(1, max_side).flatmap(
        lambda r: st.integers(1, max_side).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(-bound, bound), min_size=c, max_size=c), min_size=r, max_size=r
            )
        )
    )


def fraction_det(m):
    # plain Gaussian elimination over the rationals
    a = [[Fraction(x) for x in r] for r in m]
    n, det = len(a), Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return int(det)


@settings(max_examples=300, deadline=None)
@given(matrices())
def test_snf_identity(m):
    res = smith_normal_form(m)
    assert matmul(matmul(res.u, m), res.v) == res.s
    diag = res.diagonal
    assert all(x > 0 for x in diag[: res.rank])
    assert all(x == 0 for x in diag[res.rank:])
    assert all(b % a == 0 for a, b in zip(diag[: res.rank], diag[1: res.rank]))
    for i, row in enumerate(res.s):
        assert all(x == 0 for j, x in enumerate(row) if j != i)


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_snf_unimodular(m):
    res = smith_normal_form(m)
    assert abs(bareiss_det(res.u)) == 1
    assert abs(bareiss_det(res.v)) == 1


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_kernel_basis(m):
    cols = len(m[0])
    basis = integer_kernel_basis(m)
    assert len(basis) == cols - smith_normal_form(m).rank
    for vec in basis:
        assert matvec(m, vec) == [0] * len(m)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_fractions(m):
    assert bareiss_det(m) == fraction_det(m)


def test_known_snf():
    res = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert res.diagonal == [2, 6, 12]


def test_zero_rows():
    res = smith_normal_form([], 3)
    assert res.rank == 0
    assert len(integer_kernel_basis([], 3)) == 3


def test_identity_and_content():
    assert matmul(identity(3), [[1, 2], [3, 4], [5, 6]]) == [[1, 2], [3, 4], [5, 6]]
    assert content([4, -6, 10]) == 2
    assert content([0, 0]) == 0


def test_minor():
    m = [[1, -1, 0], [0, 1, -1], [-1, 0, 1]]
    assert minor_determinant(m, 0, 0) == 1
    with pytest.raises(NotSquareAfterDrop):
        minor_determinant([[1, 2, 3]], 0, 0)
