"""Brute-force ground truth for the fast paths.

Nothing here imports the elimination, labeling or two-squares code it is
used to check.
"""

from __future__ import annotations

from itertools import permutations
from math import isqrt

from .errors import GuardError

__all__ = [
    "enumerate_matchings",
    "det_cofactor",
    "two_squares_exhaustive",
    "alt_centro_ordering_exhaustive",
]


def enumerate_matchings(vertices, edges, guard: int = 40) -> int:
    """Number of perfect matchings of a graph given as vertex and edge lists.

    Always branches on the smallest unmatched vertex.
    """
    vertices = sorted(vertices)
    if len(vertices) > guard:
        raise GuardError(f"{len(vertices)} vertices exceeds the oracle guard {guard}")
    adj = {v: set() for v in vertices}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    if len(vertices) % 2:
        return 0

    def count(unmatched: frozenset) -> int:
        if not unmatched:
            return 1
        v = min(unmatched)
        rest = unmatched - {v}
        return sum(count(rest - {w}) for w in adj[v] if w in rest)

    return count(frozenset(vertices))


def det_cofactor(rows, guard: int = 8):
    """Laplace expansion along the first row."""
    rows = [list(r) for r in rows]
    n = len(rows)
    if n > guard:
        raise GuardError(f"order {n} exceeds the cofactor guard {guard}")
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, a in enumerate(rows[0]):
        if a == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = a * det_cofactor(minor, guard)
        total = total + term if j % 2 == 0 else total - term
    return total


def two_squares_exhaustive(n: int, guard: int = 10**6):
    """Largest-``x`` pair with ``x**2 + y**2 = n``, ``x >= y >= 0``, or None."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > guard:
        raise GuardError(f"{n} exceeds the exhaustive-search guard {guard}")
    x = isqrt(n)
    while 2 * x * x >= n:
        r = n - x * x
        y = isqrt(r)
        if y * y == r:
            return x, y
        x -= 1
    return None


def alt_centro_ordering_exhaustive(rows) -> bool:
    """Whether some pair of row and column permutations makes the matrix
    alternating centrosymmetric or alternating skew-centrosymmetric.

    Tries all ``(n!)**2`` pairs.
    """
    a = [list(r) for r in rows]
    n = len(a)
    if n > 5:
        raise GuardError("exhaustive ordering check is limited to order 5")
    for rp in permutations(range(n)):
        for cp in permutations(range(n)):
            p = [[a[rp[i]][cp[j]] for j in range(n)] for i in range(n)]
            for sign in (1, -1):
                if all(
                    p[i][j] == sign * (-1) ** (i + j) * p[n - 1 - i][n - 1 - j]
                    for i in range(n)
                    for j in range(n)
                ):
                    return True
    return False
