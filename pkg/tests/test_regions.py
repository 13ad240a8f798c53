import pytest

from conftest import small_symmetric_pillows
from pseudocentro import oracle
from pseudocentro.errors import ParseError, StructureError
from pseudocentro.regions import (
    Region,
    aztec_diamond,
    aztec_pillow,
    count_tilings,
    dual_graph,
    format_region,
    generalized_pillow,
    is_rotationally_symmetric,
    parse_region,
    tiling_certificate,
)


@pytest.mark.parametrize("n, cells", [(1, 4), (2, 12), (3, 24), (4, 40)])
def test_aztec_diamond_cells(n, cells):
    assert len(aztec_diamond(n)) == cells == 2 * n * (n + 1)


def test_aztec_diamond_invalid():
    with pytest.raises(StructureError):
        aztec_diamond(0)


@pytest.mark.parametrize("n, tilings, xy", [(1, 2, (1, 1)), (2, 8, (2, 2)), (3, 64, (8, 0)), (4, 1024, (32, 0))])
def test_aztec_diamond_counts(n, tilings, xy):
    R = aztec_diamond(n)
    assert count_tilings(R) == tilings
    ts = tiling_certificate(R)
    assert (ts.x, ts.y) == xy


@pytest.mark.parametrize("n, cells, tilings, xy", [(1, 4, 2, (1, 1)), (2, 16, 20, (4, 2)), (3, 36, 1024, (32, 0))])
def test_aztec_pillow(n, cells, tilings, xy):
    R = aztec_pillow(n)
    assert len(R) == cells and is_rotationally_symmetric(R)
    assert count_tilings(R) == tilings
    ts = tiling_certificate(R)
    assert (ts.x, ts.y) == xy


def test_aztec_pillow_against_oracle():
    G = dual_graph(aztec_pillow(2))
    assert oracle.enumerate_matchings(G.vertices, G.edges) == 20


def test_pillow_shape():
    assert format_region(aztec_pillow(2)) == "row 3: 1..3\nrow 1: -5..5\nrow -1: -5..5\nrow -3: -3..-1\n"


def test_unit_steps_give_diamond():
    for n in (1, 2, 3, 4):
        assert generalized_pillow([1] * (n - 1)) == aztec_diamond(n)


def test_even_step_rejected():
    with pytest.raises(StructureError, match="odd"):
        generalized_pillow([2])


def test_symmetry():
    for n in range(1, 5):
        assert is_rotationally_symmetric(aztec_diamond(n))
    assert not is_rotationally_symmetric(Region(frozenset({(1, 1)})))
    lopsided = generalized_pillow([3], right=[1], lower_left=[1], lower_right=[1])
    assert not is_rotationally_symmetric(lopsided)
    with pytest.raises(StructureError):
        tiling_certificate(lopsided)


def test_domino():
    R = Region(frozenset({(1, 1), (3, 1)}))
    G = dual_graph(R)
    assert len(G.edges) == 1 and count_tilings(R) == 1


def test_unbalanced_region_has_no_tilings():
    R = Region(frozenset({(1, 1), (3, 1), (5, 1)}))
    assert count_tilings(R) == 0


def test_region_validation():
    with pytest.raises(StructureError):
        Region(frozenset({(1, 1), (5, 1)}))
    with pytest.raises(StructureError):
        Region(frozenset({(2, 1)}))


def test_small_pillows_match_oracle():
    for R in small_symmetric_pillows(12):
        G = dual_graph(R)
        assert count_tilings(R) == oracle.enumerate_matchings(G.vertices, G.edges)


def test_region_text_roundtrip():
    for R in (aztec_diamond(3), aztec_pillow(3), Region.from_rows([(1, -3, -1), (1, 3, 5), (-1, -3, 5)])):
        assert parse_region(format_region(R)) == R
    R = parse_region("row 1: -1..1, 5..5\nrow -1: -1..5\n")
    assert len(R) == 7


@pytest.mark.parametrize("text", ["row 2: 1..3\n", "row 1: 1..4\n", "row 1 1..3\n", "row 1: 3..1\n",
                                  "row 1: 1..1\nrow 1: 3..3\n", "", "row 1: 1..1\nrow 5: 1..1\n"])
def test_region_parse_errors(text):
    with pytest.raises(ParseError):
        parse_region(text)
