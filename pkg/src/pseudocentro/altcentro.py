"""Alternating (skew-)centrosymmetric matrices.

The alternating exchange matrix of order ``n`` has ``+1, -1, +1, ...`` down
its cross-diagonal, starting in the upper-right corner.  In even order it is
an anti-involution, and the matrices commuting with it are exactly those
with ``a[i,j] = (-1)**(i+j) * a[n+1-i, n+1-j]``.

For these the half-size determinant ``det(B + iC)`` expands over the
``2**k`` complementary column subsets of ``[2k]``, one ``k x k`` minor of the
top ``k`` rows each, and ``det A = x**2 + y**2`` with ``x + iy = det(B + iC)``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .errors import GuardError, StructureError
from .fields import QQ, Gaussian
from .matrix import Matrix, submatrix_by_columns
from .structure import AntiInvolution

__all__ = [
    "exchange_matrix",
    "alternating_exchange_matrix",
    "build_alternating_exchange",
    "is_alternating_centrosymmetric",
    "is_alternating_skew_centrosymmetric",
    "ComplementarySubset",
    "enumerate_complementary",
    "ComplementaryDet",
    "det_via_complementary",
    "class_sums",
    "alternating_centro_from_top",
    "DEFAULT_GUARD_K",
]

DEFAULT_GUARD_K = 16


def exchange_matrix(n: int, field=QQ) -> Matrix:
    one, zero = field.one, field.zero
    return Matrix._raw(
        tuple(tuple(one if j == n - 1 - i else zero for j in range(n)) for i in range(n)),
        field,
    )


def alternating_exchange_matrix(n: int, field=QQ) -> Matrix:
    """Any order; entry ``(i, n+1-i)`` is ``(-1)**(i+1)`` (1-based)."""
    one, zero = field.one, field.zero
    return Matrix._raw(
        tuple(
            tuple((one if i % 2 == 0 else -one) if j == n - 1 - i else zero for j in range(n))
            for i in range(n)
        ),
        field,
    )


def build_alternating_exchange(order: int, field=QQ) -> AntiInvolution:
    if order <= 0 or order % 2:
        raise StructureError(
            f"alternating exchange matrix of order {order} is not anti-involutory "
            "(odd orders give an involution)"
        )
    return AntiInvolution(alternating_exchange_matrix(order, field))


def _mirror_check(A: Matrix, sign: int) -> bool:
    if not A.is_square:
        return False
    n = A.rows
    for i in range(n):
        for j in range(n):
            # parity of i+j is the same 0- or 1-based
            s = sign if (i + j) % 2 == 0 else -sign
            if A[i, j] != s * A[n - 1 - i, n - 1 - j]:
                return False
    return True


def is_alternating_centrosymmetric(A: Matrix) -> bool:
    return _mirror_check(A, 1)


def is_alternating_skew_centrosymmetric(A: Matrix) -> bool:
    return _mirror_check(A, -1)


def alternating_centro_from_top(top: Matrix, skew: bool = False) -> Matrix:
    """Complete the top ``k`` rows of a ``2k x 2k`` matrix by the mirror rule."""
    k, n = top.rows, top.cols
    if n != 2 * k:
        raise StructureError(f"top block must be k x 2k, got {top.rows}x{top.cols}")
    sign = -1 if skew else 1
    rows = [list(top.row(i)) for i in range(k)]
    for i in range(k, n):
        src = n - 1 - i
        rows.append([
            (sign if (i + j) % 2 == 0 else -sign) * top[src, n - 1 - j] for j in range(n)
        ])
    return Matrix._raw(tuple(tuple(r) for r in rows), top.field)


@dataclass(frozen=True)
class ComplementarySubset:
    """``members = I ∪ I'`` where ``I ⊆ [k]`` and ``I' = {2k+1-j : j ∈ [k] minus I}``."""

    members: tuple[int, ...]
    generator: tuple[int, ...]
    k: int

    @property
    def size(self) -> int:
        """``l = |I|``, the number of members in ``1..k``."""
        return len(self.generator)

    @property
    def cls(self) -> str:
        return ("S", "T", "S'", "T'")[self.size % 4]

    def is_complementary(self) -> bool:
        m = set(self.members)
        return len(m) == self.k and all((i in m) != (2 * self.k + 1 - i in m) for i in range(1, 2 * self.k + 1))


def enumerate_complementary(k: int) -> list[ComplementarySubset]:
    """All ``2**k`` complementary subsets, ordered by ``|I|`` then lexicographically."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    out = []
    for l in range(k + 1):
        for gen in combinations(range(1, k + 1), l):
            rest = [2 * k + 1 - j for j in range(1, k + 1) if j not in gen]
            out.append(ComplementarySubset(tuple(sorted(gen + tuple(rest))), gen, k))
    return out


class ComplementaryDet(NamedTuple):
    x: object
    y: object
    det: object


def _guard() -> int:
    env = os.environ.get("CENTRO_GUARD_K")
    return int(env) if env else DEFAULT_GUARD_K


def _check_input(A: Matrix, skew: bool, guard: int | None) -> int:
    if not A.is_square or A.rows % 2:
        raise StructureError("need a square matrix of even order")
    check = is_alternating_skew_centrosymmetric if skew else is_alternating_centrosymmetric
    if not check(A):
        kind = "skew-centrosymmetric" if skew else "centrosymmetric"
        raise StructureError(f"matrix is not alternating {kind}")
    k = A.rows // 2
    limit = _guard() if guard is None else guard
    if k > limit:
        raise GuardError(f"k = {k} exceeds the complementary-subset guard {limit}")
    return k


def _minors(A: Matrix, k: int):
    for sub in enumerate_complementary(k):
        yield sub, submatrix_by_columns(A, sub.members, k).det()


def det_via_complementary(A: Matrix, skew: bool = False, guard: int | None = None) -> ComplementaryDet:
    """``(x, y, det A)`` from the complementary-subset expansion.

    Choosing ``l`` columns from the left half contributes
    ``(i * (-1)**(k+1))**(k-l) * det M(subset)`` to ``x + iy = det(B + iC)``.
    For skew input ``(-1)**k det A = x**2 + y**2``.
    """
    k = _check_input(A, skew, guard)
    field = A.field
    unit = Gaussian(field.zero, field.one if k % 2 else -field.one)
    powers = [Gaussian(field.one, field.zero)]
    for _ in range(k):
        powers.append(powers[-1] * unit)
    z = Gaussian(field.zero, field.zero)
    for sub, minor in _minors(A, k):
        if minor:
            z = z + powers[k - sub.size] * minor
    norm = z.norm()
    det = (-1) ** k * norm if skew else norm
    return ComplementaryDet(z.re, z.im, det)


def class_sums(A: Matrix, skew: bool = False, guard: int | None = None) -> dict[str, object]:
    """Sums of ``det M(subset)`` over each class ``S, T, S', T'``."""
    k = _check_input(A, skew, guard)
    sums = {c: A.field.zero for c in ("S", "T", "S'", "T'")}
    for sub, minor in _minors(A, k):
        sums[sub.cls] = sums[sub.cls] + minor
    return sums
