"""Tiling counts of Aztec diamonds and pillows with their two-squares certificates.

Each row is computed from the half-size determinant; small ones are checked
against brute-force enumeration.

    python3 demos/aztec_table.py [max_order]
"""

import sys

from pseudocentro import aztec_diamond, aztec_pillow, count_tilings, tiling_certificate
from pseudocentro.oracle import enumerate_matchings
from pseudocentro.regions import dual_graph

BRUTE_FORCE_LIMIT = 24


def row(name, n, region):
    count = count_tilings(region)
    ts = tiling_certificate(region)
    check = ""
    if len(region) <= BRUTE_FORCE_LIMIT:
        G = dual_graph(region)
        check = "ok" if enumerate_matchings(G.vertices, G.edges) == count else "MISMATCH"
    print(f"{name:<14}{n:>3}{len(region):>7}{count:>12}   {ts.x}^2 + {ts.y}^2{check:>8}")


def main(max_order=5):
    print(f"{'region':<14}{'n':>3}{'cells':>7}{'tilings':>12}   certificate")
    for n in range(1, max_order + 1):
        row("Aztec diamond", n, aztec_diamond(n))
    for n in range(1, max_order):
        row("Aztec pillow", n, aztec_pillow(n))


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 5)
