from fractions import Fraction

import pytest

from src.linalg.matrix import (
    Matrix,
    column_basis,
    column_span_rank,
    det,
    format_scalar,
    hstack,
    inverse,
    is_invertible,
    kernel_basis,
    kron,
    kron_all,
    rank,
    rank_nullity,
    solve,
    span_basis,
    sparse_kernel_basis,
    to_scalar,
)
from src.utils.exceptions import InconsistentSystemError, ShapeMismatchError, SingularOperatorError


def test_scalar_parsing_and_format():
    assert to_scalar("7/2") == Fraction(7, 2)
    assert to_scalar(3) == Fraction(3)
    assert format_scalar(Fraction(0)) == "0/1"
    assert format_scalar(Fraction(-6, 4)) == "-3/2"


def test_shape_is_checked():
    with pytest.raises(ShapeMismatchError):
        Matrix(2, 2, (Fraction(1),))
    with pytest.raises(ShapeMismatchError):
        Matrix.from_rows([[1, 2], [3]])


def test_arithmetic():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    b = Matrix.from_rows([[0, 1], [1, 0]])
    assert (a @ b).to_rows() == [[2, 1], [4, 3]]
    assert (a + b).to_rows() == [[1, 3], [4, 4]]
    assert (a - a).is_zero()
    assert a.transpose()[0, 1] == 3
    assert a.scale(Fraction(1, 2))[1, 1] == 2
    assert a.apply([1, 1]) == (3, 7)
    assert b.power(2) == Matrix.identity(2)


def test_rank_and_kernel():
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6]])
    assert rank(m) == 1
    basis = kernel_basis(m)
    assert len(basis) == 2
    for v in basis:
        assert m.apply(v) == (0, 0)
    assert rank(Matrix.zeros(3, 3)) == 0
    assert len(kernel_basis(Matrix.identity(3))) == 0


def test_rank_nullity_on_rational_matrix():
    m = Matrix.from_rows([["1/2", "1/3", 1], ["1/4", "1/6", "1/2"], [1, 0, "-1/5"]])
    assert rank(m) + len(kernel_basis(m)) == 3
    assert rank_nullity(m) == (2, 1)


def test_solve_exact():
    m = Matrix.from_rows([[1, 1], [1, -1]])
    assert solve(m, [3, 1]) == (2, 1)
    x = Matrix.from_rows([[2, 0], [0, 3]]).solve([1, 1])
    assert x == (Fraction(1, 2), Fraction(1, 3))


def test_solve_inconsistent():
    m = Matrix.from_rows([[1, 1], [2, 2]])
    with pytest.raises(InconsistentSystemError):
        solve(m, [1, 3])


def test_inverse_and_det():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    assert det(a) == -2
    assert inverse(a).to_rows() == [[-2, 1], [Fraction(3, 2), Fraction(-1, 2)]]
    assert a @ a.inverse() == Matrix.identity(2)
    assert Matrix.from_rows([["1/2", 0], [0, "2/3"]]).det() == Fraction(1, 3)
    singular = Matrix.from_rows([[1, 2], [2, 4]])
    assert not is_invertible(singular)
    with pytest.raises(SingularOperatorError):
        inverse(singular)


def test_charpoly():
    assert Matrix.from_rows([[2, 0], [0, 3]]).charpoly() == [1, -5, 6]
    assert Matrix.from_rows([[0, 1], [-1, 0]]).charpoly() == [1, 0, 1]


def test_kron_index_convention():
    swap = Matrix.from_rows([[0, 1], [1, 0]])
    k = kron(Matrix.identity(2), swap)
    # (e_i ⊗ e_j) has index i*2 + j
    assert k[0, 1] == 1 and k[2, 3] == 1 and k[0, 2] == 0
    assert kron_all([swap, swap, swap]).shape == (8, 8)


def test_kron_examples():
    i2 = Matrix.identity(2)
    assert kron(i2, i2) == Matrix.identity(4)
    assert kron(Matrix.from_rows([[2]]), i2) == i2.scale(2)


def _random_matrix(rng, n: int) -> Matrix:
    return Matrix.from_rows([[int(x) for x in row] for row in rng.integers(-3, 4, size=(n, n))])


@pytest.mark.parametrize("n", [2, 3])
def test_kron_mixed_product(rng, n):
    for _ in range(5):
        a, b, c, d = (_random_matrix(rng, n) for _ in range(4))
        assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)


def test_column_span_helpers():
    a = Matrix.from_rows([[1, 0], [0, 0]])
    b = Matrix.from_rows([[2, 0], [0, 1]])
    assert column_span_rank([a, b]) == 2
    assert column_span_rank([]) == 0
    assert hstack([a, b]).shape == (2, 4)
    assert len(column_basis(Matrix.from_rows([[1, 2, 0], [0, 0, 1]]))) == 2
    assert len(span_basis([(1, 1), (2, 2), (0, 1)])) == 2


def test_sparse_kernel_large_system():
    # x_i - x_{i+1} = 0 for a chain of 200 unknowns
    rows = [{i: Fraction(1), i + 1: Fraction(-1)} for i in range(199)]
    basis = sparse_kernel_basis(rows, 200)
    assert len(basis) == 1
    assert set(basis[0]) == {1}


def test_random_rank_nullity(rng):
    for _ in range(20):
        r, c = rng.integers(1, 6, size=2)
        entries = rng.integers(-2, 3, size=(r, c))
        m = Matrix.from_rows([[int(x) for x in row] for row in entries])
        assert rank(m) + len(kernel_basis(m)) == c
