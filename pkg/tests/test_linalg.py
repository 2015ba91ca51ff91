"""
精确线性代数
"""

from fractions import Fraction

import pytest

from src.algebra.field import Scalar
from src.algebra.linalg import (
    Mat,
    SpanBuilder,
    annihilator,
    det,
    intersect_spans,
    kernel,
    pfaffian,
    rank,
    solve,
)
from src.core.exceptions import DimensionMismatchError, NotSkewSymmetricError

F = Fraction


def _random_matrix(rng, n, m):
    return [[F(int(rng.integers(-4, 5)), int(rng.integers(1, 4))) for _ in range(m)] for _ in range(n)]


def test_rank_and_kernel(rng):
    rows = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    assert rank(rows) == 2
    basis = kernel(rows)
    assert len(basis) == 1
    assert all(x == 0 for x in Mat(rows).apply(basis[0]))

    m = _random_matrix(rng, 4, 6)
    for vec in kernel(m, 6):
        assert not any(Mat(m).apply(vec))
    assert rank(m, 6) + len(kernel(m, 6)) == 6


def test_solve():
    assert solve([[1, 1], [1, -1]], [3, 1]) == [2, 1]
    assert solve([[1, 1], [2, 2]], [1, 3]) is None
    with pytest.raises(DimensionMismatchError):
        solve([[1, 1]], [1, 2])


def test_bareiss_det_matches_product_of_pivots(rng):
    a = _random_matrix(rng, 4, 4)
    b = _random_matrix(rng, 4, 4)
    assert det((Mat(a) @ Mat(b)).to_rows()) == det(a) * det(b)
    assert det([[0, 1], [1, 0]]) == -1
    assert det([[1, 2], [2, 4]]) == 0


def test_det_over_extension_field():
    i = Scalar.i()
    assert det([[i, 0], [0, i]]) == -1


def test_inverse(rng):
    a = Mat(_random_matrix(rng, 3, 3))
    if a.det():
        assert a @ a.inverse() == Mat.identity(3)


def test_pfaffian_four_by_four():
    x12, x13, x14, x23, x24, x34 = map(F, (1, 2, 3, 4, 5, 6))
    rows = [
        [0, x12, x13, x14],
        [-x12, 0, x23, x24],
        [-x13, -x23, 0, x34],
        [-x14, -x24, -x34, 0],
    ]
    assert pfaffian(rows) == x12 * x34 - x13 * x24 + x14 * x23
    assert pfaffian(rows) ** 2 == det(rows)
    assert pfaffian(rows, [0, 2]) == x13
    assert pfaffian(rows, []) == 1


def test_pfaffian_rejects_bad_input():
    with pytest.raises(NotSkewSymmetricError):
        pfaffian([[0, 1], [1, 0]])
    with pytest.raises(DimensionMismatchError):
        pfaffian([[0, 1, 0], [-1, 0, 0], [0, 0, 0]], [0, 1, 2])


def test_span_builder():
    span = SpanBuilder(3)
    assert span.add([1, 0, 1])
    assert span.add([0, 1, 1])
    assert not span.add([1, 1, 2])
    assert span.dim == 2
    assert span.contains([2, -1, 1])
    assert not span.contains([0, 0, 1])
    with pytest.raises(DimensionMismatchError):
        span.add([1, 0])


def test_intersect_and_annihilator():
    u = [[1, 0, 0], [0, 1, 0]]
    v = [[0, 1, 0], [0, 0, 1]]
    meet = intersect_spans(u, v, 3)
    assert len(meet) == 1 and meet[0][1] != 0 and meet[0][0] == 0 and meet[0][2] == 0
    ann = annihilator(u, 3)
    assert len(ann) == 1 and ann[0][2] != 0
    assert len(annihilator([], 3)) == 3
