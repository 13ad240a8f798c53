"""Anti-involutions and matrices that commute (or anticommute) with them.

For ``K`` with ``K @ K == -I`` a matrix ``A`` is pseudo-centrosymmetric when
``K A = A K`` and pseudo-skew-centrosymmetric when ``K A = -A K``.  When ``K``
has the simple block form ``[[0, K2], [-K2^-1, 0]]`` such an ``A`` is

    [[B,            C K2        ],
     [-+K2^-1 C,  +-K2^-1 B K2  ]]

and ``det A = (+-1) det(B + iC) det(B - iC)``, a norm from ``F[i]``.  Any
anti-involution is brought to that form by a change of basis
``{v_1..v_k, K v_1..K v_k}`` (:func:`build_basis`), which gives a
sum-of-two-squares certificate for every even-order commuting ``A``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DimensionError, FieldError, GuardError, StructureError
from .fields import QQ, Gaussian, GaussianField
from .matrix import Matrix, block_matrix, conjugate_by, identity, zeros
from .twosquares import TwoSquares, decompose_two_squares

__all__ = [
    "AntiInvolution",
    "SimpleFormK",
    "CommutationKind",
    "SosCertificate",
    "is_involutory",
    "is_anti_involutory",
    "classify_commutation",
    "extract_bc",
    "reassemble",
    "det_via_half",
    "build_basis",
    "canonical_anti_involution",
    "sos_certificate_general",
    "integral_certificate",
    "find_alt_centro_ordering",
    "no_alt_centro_ordering",
]


def _require_square(K: Matrix):
    if not K.is_square:
        raise DimensionError(f"expected a square matrix, got {K.rows}x{K.cols}")


def is_involutory(K: Matrix) -> bool:
    _require_square(K)
    return K @ K == identity(K.rows, K.field)


def is_anti_involutory(K: Matrix) -> bool:
    _require_square(K)
    return K @ K == -identity(K.rows, K.field)


class AntiInvolution:
    """A matrix ``K`` of even order ``2k`` with ``K @ K == -I``."""

    def __init__(self, K: Matrix):
        _require_square(K)
        if K.rows % 2:
            raise StructureError(f"anti-involutions have even order, got {K.rows}")
        if not is_anti_involutory(K):
            raise StructureError("K @ K != -I")
        self.K = K

    @property
    def order(self) -> int:
        return self.K.rows

    @property
    def k(self) -> int:
        return self.K.rows // 2

    @property
    def field(self):
        return self.K.field

    def simple_form(self) -> SimpleFormK | None:
        """The ``K2`` block if ``K`` has zero diagonal blocks, else None."""
        k = self.k
        if k == 0:
            return None
        top_left = self.K.block((1, k), (1, k))
        bottom_right = self.K.block((k + 1, 2 * k), (k + 1, 2 * k))
        if top_left.is_zero() and bottom_right.is_zero():
            return SimpleFormK(self.K.block((1, k), (k + 1, 2 * k)))
        return None

    def __eq__(self, other):
        return isinstance(other, AntiInvolution) and self.K == other.K

    def __hash__(self):
        return hash(self.K)

    def __repr__(self):
        return f"AntiInvolution(order={self.order}, field={self.field!r})"


class SimpleFormK:
    """``K = [[0, K2], [-K2^-1, 0]]`` described by its invertible block ``K2``."""

    def __init__(self, K2: Matrix):
        _require_square(K2)
        self.K2 = K2
        self.K2_inv = K2.inverse()

    @property
    def k(self) -> int:
        return self.K2.rows

    @property
    def field(self):
        return self.K2.field

    def assemble(self) -> AntiInvolution:
        z = zeros(self.k, field=self.field)
        return AntiInvolution(block_matrix([[z, self.K2], [-self.K2_inv, z]]))


class CommutationKind(enum.Enum):
    CENTRO = "pseudo-centrosymmetric"
    SKEW = "pseudo-skew-centrosymmetric"
    BOTH = "both"
    NEITHER = "neither"

    def __str__(self):
        return self.value


def _as_matrix(K) -> Matrix:
    return K.K if isinstance(K, AntiInvolution) else K


def classify_commutation(A: Matrix, K) -> CommutationKind:
    K = _as_matrix(K)
    _require_square(A)
    if A.shape != K.shape:
        raise DimensionError(f"A is {A.rows}x{A.cols} but K is {K.rows}x{K.cols}")
    KA, AK = K @ A, A @ K
    commutes = KA == AK
    anticommutes = KA == -AK
    if commutes and anticommutes:
        return CommutationKind.BOTH
    if commutes:
        return CommutationKind.CENTRO
    if anticommutes:
        return CommutationKind.SKEW
    return CommutationKind.NEITHER


@dataclass(frozen=True)
class SosCertificate:
    """``determinant == sign * (x**2 + y**2)`` over the base field."""

    x: object
    y: object
    sign: int
    determinant: object

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.sign * (self.x * self.x + self.y * self.y) != self.determinant:
            raise ValueError("certificate does not match the determinant")

    def __str__(self):
        sign = "" if self.sign == 1 else "-"
        return f"{self.determinant} = {sign}(({self.x})^2 + ({self.y})^2)"


def extract_bc(A: Matrix, K: SimpleFormK, skew: bool = False) -> tuple[Matrix, Matrix]:
    """Split ``A`` into the blocks ``B = A1`` and ``C = A2 K2^-1``.

    Checks the two block relations that (anti)commutation with the simple
    form ``K`` imposes and raises :class:`StructureError` naming the one
    that fails.
    """
    k = K.k
    if A.shape != (2 * k, 2 * k):
        raise DimensionError(f"A must be {2 * k}x{2 * k}, got {A.rows}x{A.cols}")
    A1 = A.block((1, k), (1, k))
    A2 = A.block((1, k), (k + 1, 2 * k))
    A3 = A.block((k + 1, 2 * k), (1, k))
    A4 = A.block((k + 1, 2 * k), (k + 1, 2 * k))
    B = A1
    C = A2 @ K.K2_inv
    lower_left = K.K2_inv @ C
    lower_right = K.K2_inv @ B @ K.K2
    if skew:
        if A3 != lower_left:
            raise StructureError("not pseudo-skew-centrosymmetric w.r.t. this K: A3 != K2^-1 A2 K2^-1")
        if A4 != -lower_right:
            raise StructureError("not pseudo-skew-centrosymmetric w.r.t. this K: A4 != -K2^-1 A1 K2")
    else:
        if A3 != -lower_left:
            raise StructureError("not pseudo-centrosymmetric w.r.t. this K: A3 != -K2^-1 A2 K2^-1")
        if A4 != lower_right:
            raise StructureError("not pseudo-centrosymmetric w.r.t. this K: A4 != K2^-1 A1 K2")
    return B, C


def reassemble(B: Matrix, C: Matrix, K: SimpleFormK, skew: bool = False) -> Matrix:
    """Inverse of :func:`extract_bc`."""
    lower_left = K.K2_inv @ C
    lower_right = K.K2_inv @ B @ K.K2
    if skew:
        return block_matrix([[B, C @ K.K2], [lower_left, -lower_right]])
    return block_matrix([[B, C @ K.K2], [-lower_left, lower_right]])


def _gaussian_combination(B: Matrix, C: Matrix) -> Matrix:
    """``B + iC`` as a matrix over ``F[i]``."""
    if B.shape != C.shape:
        raise DimensionError("B and C must have the same shape")
    base = B.field
    if base.minus_one_is_square():
        raise FieldError(f"-1 is a square in {base.name}; F[i] is not a field")
    field = GaussianField(base)
    return Matrix._raw(
        tuple(tuple(Gaussian(b, c) for b, c in zip(rb, rc)) for rb, rc in zip(B, C)),
        field,
    )


def det_via_half(B: Matrix, C: Matrix, kind: CommutationKind = CommutationKind.CENTRO,
                 k: int | None = None):
    """Determinant of the ``2k x 2k`` matrix built from ``B`` and ``C``, from one ``k x k`` determinant.

    Returns ``(det, certificate)`` where ``certificate.x + i*certificate.y``
    is ``det(B + iC)``.
    """
    if k is None:
        k = B.rows
    if B.shape != (k, k):
        raise DimensionError(f"B must be {k}x{k}")
    if kind is CommutationKind.NEITHER:
        raise StructureError("matrix neither commutes nor anticommutes with K")
    z = _gaussian_combination(B, C).det()
    sign = (-1) ** k if kind is CommutationKind.SKEW else 1
    det = sign * z.norm()
    return det, SosCertificate(z.re, z.im, sign, det)


def canonical_anti_involution(k: int, field=QQ) -> AntiInvolution:
    """``K' = [[0, -I], [I, 0]]``."""
    I, Z = identity(k, field), zeros(k, field=field)
    return AntiInvolution(block_matrix([[Z, -I], [I, Z]]))


def build_basis(K: AntiInvolution) -> Matrix:
    """Columns ``v_1..v_k, K v_1..K v_k`` forming a basis, so that ``K V = V K'``.

    Each ``v`` is the first standard basis vector outside the span collected
    so far.  Since that span is ``K``-invariant and ``c**2 + 1`` never
    vanishes, ``K v`` is then independent too; the rank is checked anyway.
    """
    if not isinstance(K, AntiInvolution):
        K = AntiInvolution(K)
    field = K.field
    if field.minus_one_is_square():
        raise FieldError(f"-1 is a square in {field.name}")
    n, k = K.order, K.k
    chosen: list[tuple] = []
    images: list[tuple] = []
    rank = 0
    for idx in range(n):
        if len(chosen) == k:
            break
        e = tuple(field.one if j == idx else field.zero for j in range(n))
        trial = Matrix._raw(tuple(chosen + images + [e]), field)
        if trial.rank() == rank:
            continue
        Ke = K.K.column(idx)
        trial = Matrix._raw(tuple(chosen + images + [e, Ke]), field)
        if trial.rank() != rank + 2:
            raise StructureError("basis extension failed; is -1 a square in the field?")
        chosen.append(e)
        images.append(Ke)
        rank += 2
    V = Matrix._raw(tuple(chosen + images), field).transpose()
    return V


def sos_certificate_general(A: Matrix, K, kind: CommutationKind | None = None) -> SosCertificate:
    """Sum-of-two-squares certificate for ``det A`` when ``A`` (anti)commutes with ``K``."""
    if not isinstance(K, AntiInvolution):
        K = AntiInvolution(K)
    actual = classify_commutation(A, K)
    if kind is None:
        kind = actual
    elif actual is not CommutationKind.BOTH and actual is not kind:
        raise StructureError(f"A is {actual}, not {kind}")
    if kind is CommutationKind.NEITHER:
        raise StructureError("A neither commutes nor anticommutes with K")
    if K.field.minus_one_is_square():
        raise FieldError(f"-1 is a square in {K.field.name}")
    skew = kind is CommutationKind.SKEW
    V = build_basis(K)
    A_prime = conjugate_by(A, V)
    simple = SimpleFormK(-identity(K.k, K.field))
    B, C = extract_bc(A_prime, simple, skew=skew)
    _, cert = det_via_half(B, C, CommutationKind.SKEW if skew else CommutationKind.CENTRO, K.k)
    return cert


def integral_certificate(A: Matrix, K, kind: CommutationKind | None = None) -> TwoSquares:
    """``|det A| = x**2 + y**2`` in integers, for integer ``A`` and rational ``K``.

    The rational certificate is used directly when its entries are integers;
    otherwise ``|det A|`` is decomposed, which always succeeds because an
    integer that is a sum of two rational squares is one of two integer
    squares.
    """
    if not A.is_integral():
        raise StructureError("A must have integer entries")
    if _as_matrix(K).field != QQ:
        raise FieldError("K must be rational")
    cert = sos_certificate_general(A, K, kind)
    x, y = cert.x, cert.y
    if x.denominator == 1 and y.denominator == 1:
        return TwoSquares.canonical(x.numerator, y.numerator)
    det = cert.determinant
    return decompose_two_squares(abs(det.numerator))


# -- reordering search ---------------------------------------------------------

def _abs_profile(values) -> tuple:
    return tuple(sorted(abs(int(v)) for v in values))


def find_alt_centro_ordering(A: Matrix, skew: bool = False, max_order: int = 8):
    """Row and column permutations making ``A`` alternating (skew-)centrosymmetric.

    Searches ``P[i, j] = A[rows[i], cols[j]]`` satisfying
    ``P[i, j] = s * (-1)**(i+j) * P[n-1-i, n-1-j]`` with ``s = -1`` for the
    skew variant.  Positions are filled in mirror pairs, rows then columns,
    and every entry constraint that becomes decidable is checked at once.
    Returns ``(rows, cols)`` (0-based) or None.
    """
    _require_square(A)
    n = A.rows
    if n > max_order:
        raise GuardError(f"order {n} exceeds the search guard {max_order}; raise max_order")
    if any(v not in (-1, 0, 1) for r in A for v in r):
        raise StructureError("entries must be -1, 0 or 1")
    a = [[int(v) for v in r] for r in A]
    s = -1 if skew else 1
    row_prof = [_abs_profile(r) for r in a]
    col_prof = [_abs_profile(c) for c in zip(*a)]
    half = (n + 1) // 2
    rows = [None] * n
    cols = [None] * n
    used_r = [False] * n
    used_c = [False] * n

    def ok(i, j):
        return a[rows[i]][cols[j]] == s * (-1) ** (i + j) * a[rows[n - 1 - i]][cols[n - 1 - j]]

    def check(p):
        # constraints touching mirror pair p, against pairs 0..p
        q = n - 1 - p
        for t in range(p + 1):
            for i in {p, q}:
                for j in {t, n - 1 - t}:
                    if not ok(i, j):
                        return False
            for i in {t, n - 1 - t}:
                for j in {p, q}:
                    if not ok(i, j):
                        return False
        return True

    def pairs(used, prof, p):
        q = n - 1 - p
        for x in range(n):
            if used[x]:
                continue
            if p == q:
                yield x, x
                continue
            for y in range(n):
                if y != x and not used[y] and prof[x] == prof[y]:
                    yield x, y

    def place_rows(p):
        if p == half:
            return True
        q = n - 1 - p
        for x, y in pairs(used_r, row_prof, p):
            rows[p], rows[q] = x, y
            used_r[x] = used_r[y] = True
            if place_cols(p):
                return True
            used_r[x] = used_r[y] = False
        rows[p] = rows[q] = None
        return False

    def place_cols(p):
        q = n - 1 - p
        for x, y in pairs(used_c, col_prof, p):
            cols[p], cols[q] = x, y
            used_c[x] = used_c[y] = True
            if check(p) and place_rows(p + 1):
                return True
            used_c[x] = used_c[y] = False
        cols[p] = cols[q] = None
        return False

    if n == 0 or place_rows(0):
        return list(rows), list(cols)
    return None


def no_alt_centro_ordering(A: Matrix, max_order: int = 8) -> bool:
    """True iff no independent row/column reordering makes ``A`` alternating
    centrosymmetric or alternating skew-centrosymmetric."""
    return (
        find_alt_centro_ordering(A, skew=False, max_order=max_order) is None
        and find_alt_centro_ordering(A, skew=True, max_order=max_order) is None
    )
