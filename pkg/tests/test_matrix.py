import random
from fractions import Fraction

import pytest

from conftest import F7, WORKED_ROWS, rand_matrix
from pseudocentro import oracle
from pseudocentro.errors import DimensionError, ParseError, SingularMatrixError
from pseudocentro.fields import QQ, GaussianField
from pseudocentro.matrix import (
    Matrix,
    block_matrix,
    conjugate_by,
    det_exact,
    format_matrix,
    identity,
    mat_inverse,
    parse_matrix,
    submatrix_by_columns,
    zeros,
)

WORKED = Matrix(WORKED_ROWS)


def test_determinant_examples():
    assert det_exact(identity(4)) == 1
    assert det_exact(WORKED) == 10
    with pytest.raises(DimensionError):
        det_exact(Matrix([[1, 2, 3]]))


@pytest.mark.parametrize("method", ["bareiss", "gauss"])
def test_methods_agree_with_cofactor(method):
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(1, 6)
        rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        assert Matrix(rows).det(method) == oracle.det_cofactor(rows)


def test_rational_and_fp_against_cofactor():
    rng = random.Random(12)
    for field in (QQ, F7):
        for _ in range(40):
            A = rand_matrix(rng.randint(1, 5), field, rng)
            assert A.det() == oracle.det_cofactor(A.tolist())


def test_det_multiplicative():
    rng = random.Random(13)
    for field in (QQ, F7):
        for _ in range(30):
            n = rng.randint(1, 5)
            A, B = rand_matrix(n, field, rng), rand_matrix(n, field, rng)
            assert (A @ B).det() == A.det() * B.det()


def test_gaussian_det():
    K = GaussianField(QQ)
    A = parse_matrix("2 2\n1+i 2\ni 1-i\n")
    assert A.field == K
    assert A.det() == K.parse("2-2i")


def test_inverse():
    K2 = Matrix([[0, 0, 1], [0, -1, 0], [1, 0, 0]])
    assert mat_inverse(K2) == K2
    assert mat_inverse(identity(3)) == identity(3)
    with pytest.raises(SingularMatrixError):
        mat_inverse(Matrix([[1, 2], [0, 0]]))
    with pytest.raises(DimensionError):
        mat_inverse(Matrix([[1, 2]]))
    rng = random.Random(14)
    for field in (QQ, F7):
        A = rand_matrix(4, field, rng)
        if A.det():
            assert A @ A.inverse() == identity(4, field)


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        identity(2) @ identity(3)
    with pytest.raises(DimensionError):
        identity(2) + identity(3)


def test_blocks():
    assert WORKED.block((1, 3), (1, 3)) == Matrix([[0, 0, 0], [0, 0, 0], [0, 1, 1]])
    assert WORKED.block((1, 3), (4, 6)) == Matrix([[1, 1, -1], [0, 1, 1], [0, 1, 0]])
    assert WORKED.block((1, 6), (1, 6)) == WORKED
    with pytest.raises(DimensionError):
        WORKED.block((1, 7), (1, 3))


def test_submatrix_by_columns():
    assert submatrix_by_columns(WORKED, [1, 2, 3], 3) == WORKED.block((1, 3), (1, 3))
    assert submatrix_by_columns(WORKED, [4, 5, 6], 3) == WORKED.block((1, 3), (4, 6))
    assert submatrix_by_columns(identity(4), [1, 2], 2) == identity(2)
    with pytest.raises(DimensionError):
        submatrix_by_columns(WORKED, [1, 2], 3)


def test_conjugate_by():
    V = Matrix([[1, 1], [0, 1]])
    A = Matrix([[2, 0], [0, 3]])
    C = conjugate_by(A, V)
    assert V @ C == A @ V
    with pytest.raises(SingularMatrixError):
        conjugate_by(A, Matrix([[1, 1], [1, 1]]))


def test_block_matrix_and_transpose():
    M = block_matrix([[identity(2), zeros(2)], [zeros(2), -identity(2)]])
    assert M.det() == 1
    assert M.T == M
    assert Matrix([[1, 2], [3, 4]]).T == Matrix([[1, 3], [2, 4]])


def test_immutable():
    with pytest.raises(AttributeError):
        WORKED.rows = 3


def test_parse_roundtrip():
    text = "# comment\n2 2 Fp:7\n1 2\n3 -1\n"
    A = parse_matrix(text)
    assert A.field == F7 and A[1, 1] == F7(6)
    assert parse_matrix(format_matrix(A)) == A
    B = Matrix([[Fraction(1, 2), 0], [0, -3]])
    assert format_matrix(B) == "2 2 Q\n1/2 0\n0 -3\n"


@pytest.mark.parametrize("text, line, col", [("2 2\n1 2\n3 x\n", 3, 3), ("2 2\n1 2 3\n4 5\n", 2, None),
                                             ("2 2\n1 2\n", None, None), ("x 2\n", 1, None)])
def test_parse_errors(text, line, col):
    with pytest.raises(ParseError) as e:
        parse_matrix(text)
    if line is not None:
        assert e.value.line == line
    if col is not None:
        assert e.value.column == col


def test_parse_errors_mention_position():
    with pytest.raises(ParseError, match="line 3, column 3"):
        parse_matrix("2 2\n1 2\n3 x\n")
