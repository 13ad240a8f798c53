"""Regions of unit squares: Aztec diamonds, Aztec pillows and generalized pillows.

A cell is named by its centre in doubled coordinates, an odd pair
``(a, b)``; the square it covers is ``[(a-1)/2, (a+1)/2] x [(b-1)/2, (b+1)/2]``.
The dual graph of a region is then a :class:`~pseudocentro.lattice.LatticeGraph`
on exactly those points.

Pillow convention
-----------------
A generalized pillow is a *central band* of full rows plus staircases above
and below it.  Going up from the top band row, each new row is one unit
high and starts ``left[t]`` cells further right and ends ``right[t]`` cells
further left (the NW and NE step lengths).  Going down from the bottom band
row the SW and SE steps default to the NE and NW ones, which makes the
region symmetric under rotation whenever the band is.

The Aztec pillow of order ``n`` uses NW steps of length 3 and NE steps of
length 1 above a band of two rows ``y = +-1`` spanning ``4n - 2`` cells, so
its rows have ``2, 6, ..., 4n-2, 4n-2, ..., 6, 2`` cells.  Order 3::

          ##        y = 5
       ######       y = 3
    ##########      y = 1
    ##########      y = -1
     ######         y = -3
      ##            y = -5
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParseError, StructureError
from .lattice import (
    LatticeGraph,
    check_two_even_symmetric,
    count_matchings,
    matching_certificate,
)
from .twosquares import TwoSquares

__all__ = [
    "Region",
    "aztec_diamond",
    "aztec_pillow",
    "generalized_pillow",
    "default_band",
    "is_rotationally_symmetric",
    "dual_graph",
    "count_tilings",
    "tiling_certificate",
    "parse_region",
    "format_region",
]


@dataclass(frozen=True)
class Region:
    cells: frozenset

    def __post_init__(self):
        if not self.cells:
            raise StructureError("a region needs at least one cell")
        for a, b in self.cells:
            if a % 2 == 0 or b % 2 == 0:
                raise StructureError(f"cell centre {(a, b)} must have odd coordinates")
        if not LatticeGraph.induced(self.cells).is_connected():
            raise StructureError("region is not edge-connected")

    @classmethod
    def from_rows(cls, rows: Iterable[tuple[int, int, int]]) -> Region:
        """Cells from ``(y, xmin, xmax)`` rows in doubled coordinates."""
        cells = set()
        for y, x0, x1 in rows:
            if x0 > x1 or (x1 - x0) % 2:
                raise StructureError(f"bad row extent {x0}..{x1}")
            cells.update((x, y) for x in range(x0, x1 + 1, 2))
        return cls(frozenset(cells))

    def __len__(self):
        return len(self.cells)

    def rows(self) -> dict[int, list[tuple[int, int]]]:
        """Maximal horizontal runs per row, top row first."""
        by_row = defaultdict(list)
        for a, b in self.cells:
            by_row[b].append(a)
        out = {}
        for y in sorted(by_row, reverse=True):
            xs = sorted(by_row[y])
            runs = []
            start = prev = xs[0]
            for x in xs[1:]:
                if x != prev + 2:
                    runs.append((start, prev))
                    start = x
                prev = x
            runs.append((start, prev))
            out[y] = runs
        return out

    def rotated(self) -> Region:
        return Region(frozenset((-a, -b) for a, b in self.cells))


def aztec_diamond(n: int) -> Region:
    """The ``2n(n+1)`` unit squares inside ``|x| + |y| <= n + 1``."""
    if n < 1:
        raise StructureError(f"Aztec diamond order must be positive, got {n}")
    r = 2 * n
    return Region(frozenset(
        (a, b)
        for a in range(-r + 1, r, 2)
        for b in range(-r + 1, r, 2)
        if abs(a) + abs(b) <= r
    ))


def _check_steps(steps: Sequence[int], name: str) -> list[int]:
    steps = [int(s) for s in steps]
    for s in steps:
        if s < 1 or s % 2 == 0:
            raise StructureError(
                f"{name} step length {s} is invalid: steps off the central band must have odd length"
            )
    return steps


def default_band(left: Sequence[int], right: Sequence[int]) -> list[tuple[int, int, int]]:
    """Two identical rows ``y = +-1`` wide enough that the top row has 2 cells."""
    width = 2 + sum(left) + sum(right)
    return [(1, -(width - 1), width - 1), (-1, -(width - 1), width - 1)]


def generalized_pillow(
    left: Sequence[int],
    band: Sequence[tuple[int, int, int]] | None = None,
    right: Sequence[int] | None = None,
    lower_left: Sequence[int] | None = None,
    lower_right: Sequence[int] | None = None,
) -> Region:
    """Stack staircase rows above and below a central band.

    ``left`` and ``right`` are the NW and NE step lengths, listed outward
    from the band; ``right`` defaults to all ones.  ``lower_left`` (SW) and
    ``lower_right`` (SE) default to ``right`` and ``left``.  ``band`` is a
    list of ``(y, xmin, xmax)`` rows on consecutive odd ``y``; the default
    is :func:`default_band`.  Every step length must be odd.
    """
    left = _check_steps(left, "NW")
    right = _check_steps([1] * len(left) if right is None else right, "NE")
    if len(right) != len(left):
        raise StructureError("NW and NE step lists must have the same length")
    lower_left = _check_steps(right if lower_left is None else lower_left, "SW")
    lower_right = _check_steps(left if lower_right is None else lower_right, "SE")
    if len(lower_left) != len(lower_right):
        raise StructureError("SW and SE step lists must have the same length")
    band = sorted(default_band(left, right) if band is None else band, reverse=True)
    ys = [y for y, _, _ in band]
    if any(y % 2 == 0 for y in ys) or any(a - b != 2 for a, b in zip(ys, ys[1:])):
        raise StructureError("band rows must sit on consecutive odd y")

    rows = list(band)
    y, x0, x1 = band[0]
    for dl, dr in zip(left, right):
        y, x0, x1 = y + 2, x0 + 2 * dl, x1 - 2 * dr
        if x0 > x1:
            raise StructureError(f"upper staircase runs out of cells at y = {y}")
        rows.append((y, x0, x1))
    y, x0, x1 = band[-1]
    for dl, dr in zip(lower_left, lower_right):
        y, x0, x1 = y - 2, x0 + 2 * dl, x1 - 2 * dr
        if x0 > x1:
            raise StructureError(f"lower staircase runs out of cells at y = {y}")
        rows.append((y, x0, x1))
    return Region.from_rows(rows)


def aztec_pillow(n: int) -> Region:
    """Order-``n`` Aztec pillow: ``4n**2`` cells, rows of ``2, 6, ..., 4n-2`` cells."""
    if n < 1:
        raise StructureError(f"Aztec pillow order must be positive, got {n}")
    return generalized_pillow([3] * (n - 1), right=[1] * (n - 1))


def is_rotationally_symmetric(R: Region) -> bool:
    return all((-a, -b) in R.cells for a, b in R.cells)


def dual_graph(R: Region) -> LatticeGraph:
    return LatticeGraph.induced(R.cells)


def count_tilings(R: Region) -> int:
    """Number of domino tilings; 0 when the two colour classes differ in size."""
    G = dual_graph(R)
    if len(G.whites) != len(G.blacks):
        return 0
    return count_matchings(G)


def tiling_certificate(R: Region) -> TwoSquares:
    """``tilings = x**2 + y**2`` for a rotationally symmetric region."""
    if not is_rotationally_symmetric(R):
        raise StructureError("region is not symmetric under 180 degree rotation")
    G = dual_graph(R)
    if not check_two_even_symmetric(G):
        raise StructureError("dual graph is not 2-even symmetric")
    if len(G.whites) != len(G.blacks):
        return TwoSquares(0, 0, 0)
    return matching_certificate(G)


# -- text format --------------------------------------------------------------

def parse_region(text: str) -> Region:
    """Lines ``row <y>: <xmin>..<xmax>[, <xmin>..<xmax>]*`` in doubled coordinates."""
    rows = []
    seen = set()
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, body = line.partition(":")
        parts = head.split()
        if not sep or len(parts) != 2 or parts[0] != "row":
            raise ParseError(f"expected `row <y>: <xmin>..<xmax>`, got {line!r}", no)
        try:
            y = int(parts[1])
        except ValueError:
            raise ParseError(f"bad row coordinate {parts[1]!r}", no) from None
        if y in seen:
            raise ParseError(f"row {y} listed twice", no)
        seen.add(y)
        for extent in body.split(","):
            lo, dots, hi = extent.strip().partition("..")
            try:
                x0, x1 = int(lo), int(hi)
            except ValueError:
                raise ParseError(f"bad extent {extent.strip()!r}", no) from None
            if not dots or y % 2 == 0 or x0 % 2 == 0 or x1 % 2 == 0 or x0 > x1:
                raise ParseError(f"extent {extent.strip()!r} on row {y} needs odd coordinates, xmin <= xmax", no)
            rows.append((y, x0, x1))
    if not rows:
        raise ParseError("region file has no rows")
    try:
        return Region.from_rows(rows)
    except StructureError as e:
        raise ParseError(str(e)) from None


def format_region(R: Region) -> str:
    lines = [
        f"row {y}: " + ", ".join(f"{x0}..{x1}" for x0, x1 in runs)
        for y, runs in R.rows().items()
    ]
    return "\n".join(lines) + "\n"
