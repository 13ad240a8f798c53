import random
from itertools import product

import pytest

from conftest import WORKED_ROWS
from pseudocentro.altcentro import (
    alternating_centro_from_top,
    alternating_exchange_matrix,
    build_alternating_exchange,
    class_sums,
    det_via_complementary,
    enumerate_complementary,
    is_alternating_centrosymmetric,
    is_alternating_skew_centrosymmetric,
)
from pseudocentro.errors import GuardError, StructureError
from pseudocentro.fields import Gaussian, GaussianField
from pseudocentro.matrix import Matrix, identity, submatrix_by_columns
from pseudocentro.structure import classify_commutation, extract_bc

WORKED = Matrix(WORKED_ROWS)


def test_exchange_shape():
    assert alternating_exchange_matrix(2) == Matrix([[0, 1], [-1, 0]])
    K = alternating_exchange_matrix(6)
    assert [K[i, 5 - i] for i in range(6)] == [1, -1, 1, -1, 1, -1]
    assert K @ K == -identity(6)
    with pytest.raises(StructureError, match="involution"):
        build_alternating_exchange(5)


def test_predicates():
    assert is_alternating_centrosymmetric(WORKED)
    assert is_alternating_centrosymmetric(identity(4))
    top = Matrix([list(range(1, 7)), list(range(7, 13)), list(range(13, 19))])
    A = alternating_centro_from_top(top)
    assert is_alternating_centrosymmetric(A)
    assert A.block((1, 3), (1, 6)) == top
    S = alternating_centro_from_top(top, skew=True)
    assert is_alternating_skew_centrosymmetric(S) and not is_alternating_centrosymmetric(S)


def test_predicate_matches_commutation():
    rng = random.Random(31)
    for _ in range(20):
        n = rng.choice((2, 4, 6))
        A = Matrix([[rng.randint(-1, 1) for _ in range(n)] for _ in range(n)])
        K = build_alternating_exchange(n)
        kind = str(classify_commutation(A, K))
        assert is_alternating_centrosymmetric(A) == (kind in ("pseudo-centrosymmetric", "both"))
        assert is_alternating_skew_centrosymmetric(A) == (kind in ("pseudo-skew-centrosymmetric", "both"))


def test_enumerate_small():
    subs = enumerate_complementary(1)
    assert [(s.members, s.cls) for s in subs] == [((2,), "S"), ((1,), "T")]
    subs = enumerate_complementary(2)
    assert [s.members for s in subs] == [(3, 4), (1, 3), (2, 4), (1, 2)]
    assert [s.cls for s in subs] == ["S", "T", "T", "S'"]


@pytest.mark.parametrize("k", range(1, 7))
def test_enumerate_complementary_definition(k):
    subs = enumerate_complementary(k)
    assert len(subs) == 2 ** k == len({s.members for s in subs})
    for s in subs:
        assert s.is_complementary()
        assert s.size == sum(1 for m in s.members if m <= k)
        assert s.cls == ("S", "T", "S'", "T'")[s.size % 4]


def test_identity_order_two():
    # column 1 alone has l = k, coefficient 1, so the minor 1 lands in x
    res = det_via_complementary(identity(2))
    assert (res.x, res.y, res.det) == (1, 0, 1)


def test_worked_example():
    res = det_via_complementary(WORKED)
    assert res.det == 10 and (res.x, res.y) == (-3, 1)
    sums = class_sums(WORKED)
    assert set(sums) == {"S", "T", "S'", "T'"}
    total = sum(submatrix_by_columns(WORKED, s.members, 3).det() for s in enumerate_complementary(3))
    assert sum(sums.values()) == total


def multilinear_half_det(A):
    """det(B + iC) by expanding each column of the top k rows into its B or iC part."""
    k = A.rows // 2
    B, C = extract_bc(A, build_alternating_exchange(2 * k).simple_form())
    K = GaussianField(A.field)
    i = Gaussian(A.field.zero, A.field.one)
    total = K.zero
    for choice in product((0, 1), repeat=k):
        cols = [[B[r, j] if choice[j] == 0 else C[r, j] for r in range(k)] for j in range(k)]
        M = Matrix([[cols[j][r] for j in range(k)] for r in range(k)])
        total = total + i ** sum(choice) * M.det()
    return total


def test_sign_against_multilinear_expansion():
    rng = random.Random(32)
    for t in range(80):
        k = 1 + t % 4
        top = Matrix([[rng.randint(-3, 3) for _ in range(2 * k)] for _ in range(k)])
        A = alternating_centro_from_top(top)
        res = det_via_complementary(A)
        assert Gaussian(res.x, res.y) == multilinear_half_det(A)
        assert res.det == A.det()


def test_skew_variant():
    rng = random.Random(33)
    for t in range(40):
        k = 1 + t % 4
        top = Matrix([[rng.randint(-3, 3) for _ in range(2 * k)] for _ in range(k)])
        A = alternating_centro_from_top(top, skew=True)
        res = det_via_complementary(A, skew=True)
        assert res.det == A.det() == (-1) ** k * (res.x ** 2 + res.y ** 2)


def test_rejects_non_alternating():
    with pytest.raises(StructureError):
        det_via_complementary(Matrix([[1, 2], [3, 4]]))
    with pytest.raises(StructureError):
        det_via_complementary(identity(3))


def test_guard(monkeypatch):
    with pytest.raises(GuardError):
        det_via_complementary(identity(6), guard=2)
    monkeypatch.setenv("CENTRO_GUARD_K", "1")
    with pytest.raises(GuardError):
        det_via_complementary(identity(4))
    monkeypatch.setenv("CENTRO_GUARD_K", "2")
    assert det_via_complementary(identity(4)).det == 1
