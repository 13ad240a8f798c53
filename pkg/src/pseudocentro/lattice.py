"""Bipartite graphs on the square lattice and their Kasteleyn-Percus matrices.

Vertices sit at odd coordinates ``(a, b) = (2k+1, 2l+1)`` so the 180 degree
rotation ``R2: (a, b) -> (-a, -b)`` is centred in a lattice square.  A vertex
is white when ``k + l`` is even.  Edges join vertices two apart in exactly
one coordinate.

Edge signs: a horizontal edge whose left endpoint is black gets ``-1``,
every other edge ``+1``; each unit square then carries sign product ``-1``
and ``|det|`` of the signed white-by-black matrix counts perfect matchings.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Iterable

from .altcentro import (
    build_alternating_exchange,
    is_alternating_centrosymmetric,
)
from .errors import GraphError, ParseError
from .matrix import Matrix
from .structure import extract_bc, CommutationKind, det_via_half
from .twosquares import TwoSquares

__all__ = [
    "WHITE",
    "BLACK",
    "vertex_color",
    "rotate",
    "LatticeGraph",
    "VertexLabeling",
    "edge_sign",
    "check_two_even_symmetric",
    "symmetric_labeling",
    "scan_labeling",
    "build_kasteleyn",
    "count_matchings",
    "matching_certificate",
    "face_signs",
    "parse_graph",
    "format_graph",
]

WHITE = "white"
BLACK = "black"


class TheoremViolation(AssertionError):
    """The symmetric labeling failed to produce an alternating centrosymmetric matrix."""


def _check_vertex(v) -> tuple[int, int]:
    a, b = v
    if not (isinstance(a, int) and isinstance(b, int)) or a % 2 == 0 or b % 2 == 0:
        raise GraphError(f"lattice vertices need odd integer coordinates, got {v!r}")
    return a, b


def vertex_color(v) -> str:
    a, b = _check_vertex(v)
    return WHITE if ((a - 1) // 2 + (b - 1) // 2) % 2 == 0 else BLACK


def rotate(v) -> tuple[int, int]:
    return -v[0], -v[1]


def _is_lattice_edge(u, v) -> bool:
    du, dv = abs(u[0] - v[0]), abs(u[1] - v[1])
    return (du, dv) in ((2, 0), (0, 2))


def _edge_key(u, v) -> tuple:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class LatticeGraph:
    vertices: frozenset
    edges: frozenset

    def __post_init__(self):
        for v in self.vertices:
            _check_vertex(v)
        for u, v in self.edges:
            if u not in self.vertices or v not in self.vertices:
                raise GraphError(f"edge {u}-{v} uses an undeclared vertex")
            if not _is_lattice_edge(u, v):
                raise GraphError(f"{u}-{v} is not a unit lattice edge")

    @classmethod
    def from_edges(cls, vertices: Iterable, edges: Iterable) -> LatticeGraph:
        verts = frozenset(tuple(v) for v in vertices)
        return cls(verts, frozenset(_edge_key(tuple(u), tuple(v)) for u, v in edges))

    @classmethod
    def induced(cls, vertices: Iterable) -> LatticeGraph:
        """All lattice edges among ``vertices``."""
        verts = frozenset(tuple(v) for v in vertices)
        edges = set()
        for a, b in verts:
            for w in ((a + 2, b), (a, b + 2)):
                if w in verts:
                    edges.add(_edge_key((a, b), w))
        return cls(verts, frozenset(edges))

    def neighbors(self) -> dict:
        adj = defaultdict(set)
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    @property
    def whites(self) -> list:
        return sorted(v for v in self.vertices if vertex_color(v) == WHITE)

    @property
    def blacks(self) -> list:
        return sorted(v for v in self.vertices if vertex_color(v) == BLACK)

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        adj = self.neighbors()
        start = min(self.vertices)
        seen = {start}
        queue = deque([start])
        while queue:
            for w in adj[queue.popleft()]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(self.vertices)

    def rotated(self) -> LatticeGraph:
        return LatticeGraph(
            frozenset(rotate(v) for v in self.vertices),
            frozenset(_edge_key(rotate(u), rotate(v)) for u, v in self.edges),
        )


def edge_sign(u, v) -> int:
    """``-1`` for a horizontal edge whose left endpoint is black, else ``+1``."""
    u, v = _check_vertex(u), _check_vertex(v)
    if not _is_lattice_edge(u, v):
        raise GraphError(f"{u}-{v} is not a unit lattice edge")
    if u[1] != v[1]:
        return 1
    left = min(u, v)
    return -1 if vertex_color(left) == BLACK else 1


def check_two_even_symmetric(G: LatticeGraph) -> bool:
    """``R2`` maps ``G`` onto itself and every vertex keeps its colour.

    For a connected bipartite graph, ``v`` and ``R2(v)`` share a colour
    exactly when every path between them has even length.
    """
    if not G.is_connected():
        raise GraphError("graph is not connected")
    if G.rotated() != G:
        return False
    return all(vertex_color(v) == vertex_color(rotate(v)) for v in G.vertices)


@dataclass(frozen=True)
class VertexLabeling:
    """Labels ``1..2m`` for each colour class."""

    white: dict
    black: dict

    def label(self, v) -> int:
        return self.white[v] if v in self.white else self.black[v]

    def check_counterparts(self) -> bool:
        for labels in (self.white, self.black):
            top = len(labels) + 1
            if any(labels.get(rotate(v)) != top - lab for v, lab in labels.items()):
                return False
        return True

    def check_line_parity(self, axis: str = "columns") -> bool:
        """Every lattice column (or row) carries labels of a single parity,
        alternating from one line to the next."""
        idx = 0 if axis == "columns" else 1
        lines = defaultdict(set)
        for labels in (self.white, self.black):
            for v, lab in labels.items():
                lines[v[idx]].add(lab % 2)
        if any(len(p) != 1 for p in lines.values()):
            return False
        return all(
            lines[c].isdisjoint(lines[c + 2]) for c in lines if c + 2 in lines
        )


def scan_labeling(G: LatticeGraph) -> VertexLabeling:
    """Label each colour class ``1, 2, ...`` in reading order (top row first)."""
    order = lambda v: (-v[1], v[0])  # noqa: E731
    return VertexLabeling(
        {v: i for i, v in enumerate(sorted(G.whites, key=order), start=1)},
        {v: i for i, v in enumerate(sorted(G.blacks, key=order), start=1)},
    )


def _sweep_labeling(G: LatticeGraph, idx: int, scan_key) -> VertexLabeling:
    """Counterpart labeling on the half where coordinate ``idx`` is positive,
    then a parity sweep over the lattice lines ``coord[idx] = const`` of that
    half, outermost line first."""
    labelings = []
    for verts in (G.whites, G.blacks):
        lead = sorted((v for v in verts if v[idx] > 0), key=scan_key)
        m = len(lead)
        labels = {}
        for i, v in enumerate(lead, start=1):
            labels[v] = i
            labels[rotate(v)] = 2 * m + 1 - i
        labelings.append(labels)

    lines = sorted({v[idx] for v in G.vertices if v[idx] > 0}, reverse=True)
    for line in lines:
        # lines in the other half are fixed through the counterparts
        target = 1 if ((lines[0] - line) // 2) % 2 == 0 else 0
        for labels in labelings:
            for v in [v for v in labels if v[idx] == line]:
                if labels[v] % 2 != target:
                    w = rotate(v)
                    labels[v], labels[w] = labels[w], labels[v]
    return VertexLabeling(labelings[0], labelings[1])


def symmetric_labeling(G: LatticeGraph, axis: str = "columns") -> VertexLabeling:
    """Labeling under which the Kasteleyn-Percus matrix is alternating centrosymmetric.

    Each colour class of one half-plane is numbered ``1..m`` and every
    rotated counterpart gets ``2m+1-i``.  The lattice lines of that half are
    then swept from the outside in; a label whose parity differs from its
    line's target (odd on the outermost line, alternating inward) trades
    places with its counterpart's label.  Afterwards each line holds labels
    of one parity.

    With the signs of :func:`edge_sign` the lines must be columns: vertical
    edges keep their sign under ``R2`` and now join equal-parity labels,
    horizontal edges flip sign and join opposite parities.  The default
    works on the right half (``x > 0``), numbered bottom to top then right
    to left, sweeping columns from the rightmost one.

    ``axis="rows"`` works on the upper half instead (top row first, left to
    right, rows swept top-down).  Under the same signs this gives an
    alternating *skew*-centrosymmetric matrix.
    """
    if axis not in ("columns", "rows"):
        raise ValueError("axis must be 'columns' or 'rows'")
    if not check_two_even_symmetric(G):
        raise GraphError("graph is not 2-even symmetric")
    if axis == "rows":
        return _sweep_labeling(G, 1, lambda v: (-v[1], v[0]))
    return _sweep_labeling(G, 0, lambda v: (v[1], -v[0]))


def build_kasteleyn(G: LatticeGraph, labeling: VertexLabeling | None = None) -> Matrix:
    """Row ``i`` is the white vertex labelled ``i``, column ``j`` the black vertex labelled ``j``."""
    whites, blacks = G.whites, G.blacks
    if len(whites) != len(blacks):
        raise GraphError(
            f"{len(whites)} white vs {len(blacks)} black vertices: no perfect matching possible"
        )
    if labeling is None:
        labeling = scan_labeling(G)
    n = len(whites)
    a = [[0] * n for _ in range(n)]
    for u, v in G.edges:
        w, b = (u, v) if vertex_color(u) == WHITE else (v, u)
        a[labeling.white[w] - 1][labeling.black[b] - 1] = edge_sign(u, v)
    return Matrix(a)


def face_signs(G: LatticeGraph, labeling: VertexLabeling | None = None) -> dict:
    """Sign product around every unit square whose four edges are in ``G``,
    read off the Kasteleyn-Percus matrix."""
    labeling = labeling or scan_labeling(G)
    A = build_kasteleyn(G, labeling)
    edges = G.edges
    out = {}
    for a, b in G.vertices:
        corners = [(a, b), (a + 2, b), (a + 2, b + 2), (a, b + 2)]
        sides = [_edge_key(corners[i], corners[(i + 1) % 4]) for i in range(4)]
        if all(s in edges for s in sides):
            prod = 1
            for u, v in sides:
                w, bl = (u, v) if vertex_color(u) == WHITE else (v, u)
                prod *= int(A[labeling.white[w] - 1, labeling.black[bl] - 1])
            out[(a + 1, b + 1)] = prod
    return out


def count_matchings(G: LatticeGraph) -> int:
    """Number of perfect matchings, as ``|det|`` of the Kasteleyn-Percus matrix."""
    return abs(int(build_kasteleyn(G).det()))


def matching_certificate(G: LatticeGraph) -> TwoSquares:
    """``count = x**2 + y**2`` with ``x + iy = det(B + iC)`` from the symmetric labeling."""
    labeling = symmetric_labeling(G)
    A = build_kasteleyn(G, labeling)
    if not is_alternating_centrosymmetric(A):
        raise TheoremViolation("symmetric labeling did not give an alternating centrosymmetric matrix")
    k = A.rows // 2
    if k == 0:
        return TwoSquares(1, 0, 1)
    simple = build_alternating_exchange(2 * k).simple_form()
    B, C = extract_bc(A, simple)
    _, cert = det_via_half(B, C, CommutationKind.CENTRO, k)
    return TwoSquares.canonical(cert.x.numerator, cert.y.numerator)


# -- text format --------------------------------------------------------------

def parse_graph(text: str) -> LatticeGraph:
    """``v <a> <b>`` and ``e <a1> <b1> <a2> <b2>`` lines; ``#`` starts a comment."""
    vertices, edges = set(), []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kind, *rest = line.split()
        try:
            nums = [int(x) for x in rest]
        except ValueError:
            raise ParseError(f"non-integer coordinate in {line!r}", no) from None
        if kind == "v" and len(nums) == 2:
            v = tuple(nums)
            if v[0] % 2 == 0 or v[1] % 2 == 0:
                raise ParseError(f"vertex {v} needs odd coordinates", no)
            vertices.add(v)
        elif kind == "e" and len(nums) == 4:
            u, v = tuple(nums[:2]), tuple(nums[2:])
            if not _is_lattice_edge(u, v) or any(c % 2 == 0 for c in nums):
                raise ParseError(f"{u}-{v} is not a unit lattice edge", no)
            edges.append((u, v, no))
        else:
            raise ParseError(f"expected `v a b` or `e a1 b1 a2 b2`, got {line!r}", no)
    for u, v, no in edges:
        for w in (u, v):
            if w not in vertices:
                raise ParseError(f"edge endpoint {w} is not a declared vertex", no)
    return LatticeGraph.from_edges(vertices, [(u, v) for u, v, _ in edges])


def format_graph(G: LatticeGraph) -> str:
    order = lambda v: (-v[1], v[0])  # noqa: E731
    lines = [f"v {a} {b}" for a, b in sorted(G.vertices, key=order)]
    lines += [f"e {u[0]} {u[1]} {v[0]} {v[1]}" for u, v in sorted(G.edges)]
    return "\n".join(lines) + "\n"
