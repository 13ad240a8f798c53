"""Which 0/+-1 matrices can be permuted into alternating centrosymmetric form?

Compares the pruned backtracking search with brute force over every pair of
row and column permutations, for all sign patterns of a few small shapes.
"""

import random

from pseudocentro import Matrix
from pseudocentro.oracle import alt_centro_ordering_exhaustive
from pseudocentro.structure import find_alt_centro_ordering, no_alt_centro_ordering


def main(trials=200, seed=1):
    rng = random.Random(seed)
    tally = {True: 0, False: 0}
    for _ in range(trials):
        rows = [[rng.choice((-1, 0, 0, 1)) for _ in range(4)] for _ in range(4)]
        blocked = no_alt_centro_ordering(Matrix(rows))
        assert blocked is (not alt_centro_ordering_exhaustive(rows))
        tally[blocked] += 1
    print(f"{trials} random 4x4 matrices: {tally[False]} reorderable, {tally[True]} not")

    rows = [[0, 1, 1, 0], [1, 0, 0, 1], [1, 0, 0, -1], [0, 1, -1, 0]]
    r, c = find_alt_centro_ordering(Matrix(rows))
    print("reorderable example:", rows)
    print("  row order", r, "column order", c)
    for line in Matrix(rows).select(r, c).tolist():
        print("   ", " ".join(f"{int(v):>2}" for v in line))


if __name__ == "__main__":
    main()
