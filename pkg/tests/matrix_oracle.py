"""Brute-force 2x2 symbolic-matrix model of the antidiagonal family.

This is the independent oracle the exponent-pair implementation is audited
against: matrices carry entries that are either zero (None) or a generator
power a^e with e mod k, and products follow the ordinary 2x2 matrix rule.
Nothing here shares code with pgr.groups.
"""

from __future__ import annotations

from functools import reduce

Entry = int | None  # generator exponent, or None for a zero entry
Matrix = tuple[tuple[Entry, Entry], tuple[Entry, Entry]]


def antidiag_matrix(key: tuple[int, int]) -> Matrix:
    m, n = key
    return ((None, m), (n, None))


def _entry_mul(x: Entry, y: Entry, k: int) -> Entry:
    if x is None or y is None:
        return None
    return (x + y) % k


def _entry_add(x: Entry, y: Entry) -> Entry:
    # group-element entries cannot be added; in this family at most one
    # summand of each matrix-product entry is ever nonzero
    if x is not None and y is not None:
        raise AssertionError("entry collision: the model left the monomial family")
    return x if x is not None else y


def mat_mul(a: Matrix, b: Matrix, k: int) -> Matrix:
    return tuple(
        tuple(
            _entry_add(
                _entry_mul(a[i][0], b[0][j], k),
                _entry_mul(a[i][1], b[1][j], k),
            )
            for j in (0, 1)
        )
        for i in (0, 1)
    )


def mat_mul_many(k: int, mats) -> Matrix:
    return reduce(lambda a, b: mat_mul(a, b, k), mats)


def is_antidiagonal(mat: Matrix) -> bool:
    return (
        mat[0][0] is None
        and mat[1][1] is None
        and mat[0][1] is not None
        and mat[1][0] is not None
    )


def as_key(mat: Matrix) -> tuple[int, int]:
    assert is_antidiagonal(mat), f"not an antidiagonal matrix: {mat!r}"
    return (mat[0][1], mat[1][0])


def product_key(k: int, *keys: tuple[int, int]) -> tuple[int, int]:
    """Group product of antidiagonal elements, done entirely in the matrix
    model; raises if the product leaves the antidiagonal carrier."""
    return as_key(mat_mul_many(k, (antidiag_matrix(key) for key in keys)))


def binary_product_matrix(k: int, x: tuple[int, int], y: tuple[int, int]) -> Matrix:
    return mat_mul(antidiag_matrix(x), antidiag_matrix(y), k)
