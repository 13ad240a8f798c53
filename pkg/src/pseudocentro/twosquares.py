"""Writing integers as ``x**2 + y**2``.

An integer ``n >= 0`` is a sum of two squares exactly when every prime
``p = 4k+3`` divides it to an even power.  Representations are built from
Gaussian-integer factors: each prime ``p = 4k+1`` splits as ``p = a**2 + b**2``
(found from a square root of -1 mod p by Euclidean descent), ``2 = 1 + 1``,
and norms multiply.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import isqrt

from sympy import factorint

from .errors import NotSumOfTwoSquaresError

__all__ = [
    "TwoSquares",
    "factorize",
    "two_squares_obstruction",
    "is_sum_of_two_squares",
    "prime_two_squares",
    "decompose_two_squares",
    "all_two_squares",
]


@dataclass(frozen=True, order=True)
class TwoSquares:
    """``n = x**2 + y**2`` with ``x >= y >= 0``."""

    x: int
    y: int
    n: int

    def __post_init__(self):
        if not (self.x >= self.y >= 0):
            raise ValueError(f"non-canonical pair ({self.x}, {self.y})")
        if self.x * self.x + self.y * self.y != self.n:
            raise ValueError(f"{self.x}^2 + {self.y}^2 != {self.n}")

    @classmethod
    def canonical(cls, x: int, y: int) -> TwoSquares:
        x, y = sorted((abs(int(x)), abs(int(y))), reverse=True)
        return cls(x, y, x * x + y * y)

    def __str__(self):
        return f"{self.n} = {self.x}^2 + {self.y}^2"


def factorize(n: int) -> dict[int, int]:
    if n < 1:
        raise ValueError(f"can only factor positive integers, got {n}")
    return factorint(n)


def two_squares_obstruction(n: int) -> tuple[int, int] | None:
    """The smallest prime ``4k+3`` with odd exponent in ``n``, or None."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return None
    for p, e in sorted(factorize(n).items()):
        if p % 4 == 3 and e % 2:
            return p, e
    return None


def is_sum_of_two_squares(n: int) -> bool:
    return two_squares_obstruction(n) is None


def _sqrt_minus_one(p: int) -> int:
    # c^((p-1)/4) squares to c^((p-1)/2) = -1 for any non-residue c
    for c in range(2, p):
        if pow(c, (p - 1) // 2, p) == p - 1:
            return pow(c, (p - 1) // 4, p)
    raise ValueError(f"{p} is not a prime 1 mod 4")


def prime_two_squares(p: int) -> tuple[int, int]:
    """``(a, b)`` with ``a > b > 0`` and ``a**2 + b**2 = p`` for a prime ``p = 4k+1``."""
    if p == 2:
        return 1, 1
    if p % 4 != 1:
        raise ValueError(f"{p} is not 1 mod 4")
    a, b = p, _sqrt_minus_one(p)
    while b * b > p:
        a, b = b, a % b
    c = isqrt(p - b * b)
    if b * b + c * c != p:
        raise ValueError(f"{p} is not prime")
    return max(b, c), min(b, c)


def _gauss_mul(z, w):
    return z[0] * w[0] - z[1] * w[1], z[0] * w[1] + z[1] * w[0]


def _gauss_pow(z, e):
    out = (1, 0)
    for _ in range(e):
        out = _gauss_mul(out, z)
    return out


def all_two_squares(n: int) -> list[TwoSquares]:
    """Every canonical representation of ``n``, largest ``x`` first."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return [TwoSquares(0, 0, 0)]
    obstruction = two_squares_obstruction(n)
    if obstruction is not None:
        raise NotSumOfTwoSquaresError(n, *obstruction)

    scale = 1
    base = (1, 0)
    choices = []
    for p, e in factorize(n).items():
        if p == 2:
            base = _gauss_mul(base, _gauss_pow((1, 1), e))
        elif p % 4 == 3:
            scale *= p ** (e // 2)
        else:
            a, b = prime_two_squares(p)
            # pi^j * conj(pi)^(e-j) for j = 0..e gives every factor of norm p^e
            choices.append([
                _gauss_mul(_gauss_pow((a, b), j), _gauss_pow((a, -b), e - j))
                for j in range(e + 1)
            ])

    reps = set()
    for combo in product(*choices):
        z = base
        for w in combo:
            z = _gauss_mul(z, w)
        reps.add(TwoSquares.canonical(z[0] * scale, z[1] * scale))
    return sorted(reps, reverse=True)


def decompose_two_squares(n: int) -> TwoSquares:
    """Canonical representation with the largest ``x``.

    Raises :class:`NotSumOfTwoSquaresError`, naming the offending prime, when
    ``n`` has a prime ``4k+3`` to an odd power.
    """
    return all_two_squares(n)[0]
