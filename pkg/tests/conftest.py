import random
from itertools import product
from fractions import Fraction

import pytest

from pseudocentro.errors import StructureError
from pseudocentro.fields import QQ, PrimeField
from pseudocentro.lattice import LatticeGraph
from pseudocentro.matrix import Matrix, block_matrix, identity, zeros
from pseudocentro.regions import generalized_pillow, is_rotationally_symmetric
from pseudocentro.structure import SimpleFormK, reassemble

F7 = PrimeField(7)
F11 = PrimeField(11)

WORKED_ROWS = [
    [0, 0, 0, 1, 1, -1],
    [0, 0, 0, 0, 1, 1],
    [0, 1, 1, 0, 1, 0],
    [0, 1, 0, 1, -1, 0],
    [1, -1, 0, 0, 0, 0],
    [1, 1, -1, 0, 0, 0],
]

# lattice graph whose symmetric labeling gives WORKED_ROWS
WORKED_VERTICES = [
    (-3, 1), (-3, 3), (-1, -3), (-1, -1), (-1, 1), (-1, 3),
    (1, -3), (1, -1), (1, 1), (1, 3), (3, -3), (3, -1),
]


def worked_graph():
    return LatticeGraph.induced(WORKED_VERTICES)


def rand_scalar(field, rng):
    if field == QQ:
        return Fraction(rng.randint(-4, 4), rng.choice((1, 1, 1, 2, 3)))
    return field(rng.randrange(field.characteristic))


def rand_matrix(rows, field, rng, cols=None):
    cols = rows if cols is None else cols
    return Matrix([[rand_scalar(field, rng) for _ in range(cols)] for _ in range(rows)], field)


def rand_invertible(n, field, rng):
    while True:
        M = rand_matrix(n, field, rng)
        if M.det():
            return M


def simple_form_instance(k, field, rng, skew=False):
    """(A, K, B, C) with A built from random blocks against a random simple-form K."""
    K = SimpleFormK(rand_invertible(k, field, rng))
    B = rand_matrix(k, field, rng)
    C = rand_matrix(k, field, rng)
    return reassemble(B, C, K, skew=skew), K, B, C


def general_instance(k, field, rng, skew=False):
    """(A, K) with K = V K' V^-1 and A = V A' V^-1, A' in the canonical commuting form."""
    I, Z = identity(k, field), zeros(k, field=field)
    Kc = block_matrix([[Z, -I], [I, Z]])
    Ac = reassemble(rand_matrix(k, field, rng), rand_matrix(k, field, rng), SimpleFormK(-I), skew=skew)
    V = rand_invertible(2 * k, field, rng)
    Vi = V.inverse()
    return V @ Ac @ Vi, V @ Kc @ Vi


def random_symmetric_graph(rng, size=14, drop=0.2):
    """A random connected lattice graph closed under rotation by 180 degrees.

    Grows from the four cells around the origin by adding a random boundary
    vertex together with its rotation, then drops mirror pairs of edges.
    """
    while True:
        verts = {(1, 1), (-1, 1), (1, -1), (-1, -1)}
        while len(verts) < size:
            a, b = rng.choice(sorted(verts))
            w = rng.choice([(a + 2, b), (a - 2, b), (a, b + 2), (a, b - 2)])
            verts |= {w, (-w[0], -w[1])}
        G = LatticeGraph.induced(verts)
        kept, decided = set(), set()
        for u, v in sorted(G.edges):
            if (u, v) in decided:
                continue
            pair = {(u, v), tuple(sorted(((-u[0], -u[1]), (-v[0], -v[1]))))}
            decided |= pair
            if rng.random() >= drop:
                kept |= pair
        H = LatticeGraph.from_edges(verts, kept)
        if H.is_connected() and len(H.whites) == len(H.blacks):
            return H


def small_symmetric_pillows(max_cells=16):
    """Every rotationally symmetric generalized pillow with at most ``max_cells`` cells.

    Covers the default band and all two-row bands ``y = +-1`` that are
    symmetric about the origin, with up to two steps on each staircase.
    """
    bands = [None] + [
        [(1, x0, x1), (-1, -x1, -x0)]
        for x0 in range(-9, 10, 2)
        for x1 in range(x0, 10, 2)
        if x1 - x0 + 2 <= max_cells
    ]
    seen = {}
    for m in range(3):
        for left in product((1, 3, 5), repeat=m):
            for right in product((1, 3, 5), repeat=m):
                for band in bands:
                    try:
                        R = generalized_pillow(list(left), band=band, right=list(right))
                    except StructureError:
                        continue
                    if len(R) <= max_cells and is_rotationally_symmetric(R):
                        seen.setdefault(R.cells, R)
    return [seen[c] for c in sorted(seen, key=sorted)]


@pytest.fixture
def rng():
    return random.Random(20240607)
