import random

import pytest

from conftest import F7, WORKED_ROWS, general_instance, simple_form_instance
from pseudocentro import oracle
from pseudocentro.altcentro import (
    alternating_exchange_matrix,
    build_alternating_exchange,
    exchange_matrix,
    is_alternating_centrosymmetric,
)
from pseudocentro.errors import DimensionError, FieldError, StructureError
from pseudocentro.fields import QQ, PrimeField
from pseudocentro.matrix import Matrix, identity, zeros
from pseudocentro.structure import (
    AntiInvolution,
    CommutationKind,
    build_basis,
    canonical_anti_involution,
    classify_commutation,
    det_via_half,
    extract_bc,
    find_alt_centro_ordering,
    integral_certificate,
    is_anti_involutory,
    is_involutory,
    no_alt_centro_ordering,
    reassemble,
    sos_certificate_general,
)

WORKED = Matrix(WORKED_ROWS)
K6 = build_alternating_exchange(6)


def test_involution_predicates():
    for n in (1, 4, 5):
        assert is_involutory(exchange_matrix(n))
    assert is_anti_involutory(alternating_exchange_matrix(6))
    assert is_involutory(alternating_exchange_matrix(5))
    assert not is_anti_involutory(alternating_exchange_matrix(5))
    with pytest.raises(DimensionError):
        is_involutory(Matrix([[1, 2]]))


def test_anti_involution_rejects():
    with pytest.raises(StructureError):
        AntiInvolution(identity(2))
    with pytest.raises(StructureError):
        AntiInvolution(alternating_exchange_matrix(3))


def test_classify():
    assert classify_commutation(identity(6), K6) is CommutationKind.CENTRO
    assert classify_commutation(K6.K, K6) is CommutationKind.CENTRO
    assert classify_commutation(WORKED, K6) is CommutationKind.CENTRO
    assert classify_commutation(zeros(6), K6) is CommutationKind.BOTH
    assert classify_commutation(Matrix([[1, 2], [3, 4]]), build_alternating_exchange(2)) is CommutationKind.NEITHER
    with pytest.raises(DimensionError):
        classify_commutation(identity(4), K6)


def test_extract_bc():
    K = K6.simple_form()
    B, C = extract_bc(WORKED, K)
    assert B == Matrix([[0, 0, 0], [0, 0, 0], [0, 1, 1]])
    assert C == Matrix([[-1, -1, 1], [1, -1, 0], [0, -1, 0]])
    assert reassemble(B, C, K) == WORKED
    B, C = extract_bc(identity(6), K)
    assert B == identity(3) and C.is_zero()


def test_extract_bc_names_failed_relation():
    rows = [list(r) for r in WORKED_ROWS]
    rows[5][5] = 7
    with pytest.raises(StructureError, match="A4"):
        extract_bc(Matrix(rows), K6.simple_form())
    rows = [list(r) for r in WORKED_ROWS]
    rows[4][0] = 7
    with pytest.raises(StructureError, match="A3"):
        extract_bc(Matrix(rows), K6.simple_form())


def test_det_via_half_examples():
    det, cert = det_via_half(identity(3), zeros(3), CommutationKind.CENTRO, 3)
    assert det == 1 and (cert.x, cert.y, cert.sign) == (1, 0, 1)
    B, C = extract_bc(WORKED, K6.simple_form())
    det, cert = det_via_half(B, C)
    assert det == 10 and (cert.x, cert.y, cert.sign) == (-3, 1, 1)
    det, cert = det_via_half(zeros(1), identity(1), CommutationKind.SKEW, 1)
    assert det == -1 and (cert.x, cert.y) == (0, 1)
    A = reassemble(zeros(1), identity(1), build_alternating_exchange(2).simple_form(), skew=True)
    assert A.det() == -1


def test_det_via_half_needs_field_without_i():
    F5 = PrimeField(5)
    with pytest.raises(FieldError):
        det_via_half(identity(2, F5), zeros(2, field=F5))


def test_simple_form_round_trip():
    rng = random.Random(21)
    for field in (QQ, F7):
        for skew in (False, True):
            A, K, B, C = simple_form_instance(3, field, rng, skew=skew)
            assert extract_bc(A, K, skew=skew) == (B, C)


def test_build_basis():
    K2 = AntiInvolution(Matrix([[0, 1], [-1, 0]]))
    assert build_basis(K2) == Matrix([[1, 0], [0, -1]])
    Kc = canonical_anti_involution(3)
    for K in (K6, canonical_anti_involution(2), AntiInvolution(alternating_exchange_matrix(4, F7))):
        V = build_basis(K)
        Kp = canonical_anti_involution(K.k, K.field).K
        assert V.det() and K.K @ V == V @ Kp
    assert build_basis(Kc) == identity(6)


def test_sos_general_examples():
    cert = sos_certificate_general(identity(6), K6)
    assert (cert.x, cert.y, cert.sign) == (1, 0, 1)
    cert = sos_certificate_general(K6.K, K6)
    assert cert.x ** 2 + cert.y ** 2 == K6.K.det()
    with pytest.raises(StructureError):
        sos_certificate_general(Matrix([[1, 2], [3, 4]]), build_alternating_exchange(2))


def test_sos_general_random():
    rng = random.Random(22)
    for t in range(30):
        field = (QQ, F7)[t % 2]
        A, K = general_instance(1 + t % 3, field, rng)
        cert = sos_certificate_general(A, K)
        assert cert.x * cert.x + cert.y * cert.y == A.det()


def test_sos_general_rejects_square_minus_one():
    F5 = PrimeField(5)
    K = Matrix([[0, 1], [-1, 0]], F5)
    with pytest.raises(FieldError):
        sos_certificate_general(identity(2, F5), K)


def test_integral_certificate():
    ts = integral_certificate(WORKED, K6)
    assert (ts.x, ts.y) == (3, 1)
    ts = integral_certificate(identity(4), build_alternating_exchange(4))
    assert (ts.x, ts.y) == (1, 0)
    ts = integral_certificate(identity(4).scale(2), build_alternating_exchange(4))
    assert (ts.x, ts.y, ts.n) == (4, 0, 16)
    with pytest.raises(StructureError):
        integral_certificate(Matrix([[1, 2], [3, 4]]), build_alternating_exchange(2))


def test_integral_certificate_rational_basis():
    # a rational K whose change of basis gives non-integral x, y
    V = Matrix([[2, 1], [1, 1]])
    K = V @ canonical_anti_involution(1).K @ V.inverse()
    A = V @ Matrix([[3, -1], [1, 3]]) @ V.inverse()
    ts = integral_certificate(A, K)
    assert ts.x ** 2 + ts.y ** 2 == abs(A.det()) == 10


def test_ordering_examples():
    assert no_alt_centro_ordering(WORKED) is False
    assert no_alt_centro_ordering(zeros(4)) is False
    d = [[1, 0], [0, -1]]
    assert no_alt_centro_ordering(Matrix(d)) is (not oracle.alt_centro_ordering_exhaustive(d))


def test_ordering_found_is_valid():
    rng = random.Random(23)
    rows = [list(r) for r in WORKED_ROWS]
    rp, cp = list(range(6)), list(range(6))
    rng.shuffle(rp)
    rng.shuffle(cp)
    scrambled = Matrix([[rows[i][j] for j in cp] for i in rp])
    assert no_alt_centro_ordering(scrambled) is False
    r, c = find_alt_centro_ordering(scrambled)
    assert is_alternating_centrosymmetric(scrambled.select(r, c))


def test_ordering_agrees_with_exhaustive():
    rng = random.Random(24)
    for _ in range(60):
        n = rng.choice((2, 3, 4))
        rows = [[rng.choice((-1, 0, 1)) for _ in range(n)] for _ in range(n)]
        assert no_alt_centro_ordering(Matrix(rows)) is (not oracle.alt_centro_ordering_exhaustive(rows))
