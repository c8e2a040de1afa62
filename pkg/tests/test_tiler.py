import collections

import pytest

from benzels.hexgrid import HexCell, HexKind, HexRegion, benzel
from benzels.tiler import (
    ALL_HEX, MOUNTAINLESS, VALLEYLESS, ExactCover, count_tilings,
    enumerate_tilings, first_tiling, parse_kinds, stat_census, tiling_stats,
    valley_positions,
)
from benzels.transfer import SquareKind, SquareRegion, transfer_region
from benzels.young import f_region, lambda_n, young_region
from benzels.verify import valid_params


def test_parse_kinds():
    assert parse_kinds("fb, LS,rb") == (HexKind.LEFT_STONE, HexKind.RISING_BONE, HexKind.FALLING_BONE)
    assert parse_kinds([SquareKind.MOUNTAIN_STONE]) == (HexKind.RIGHT_STONE,)
    with pytest.raises(ValueError):
        parse_kinds("XX")
    with pytest.raises(ValueError):
        parse_kinds("")


def test_small_benzels():
    assert count_tilings(benzel(2, 2)) == 1
    assert count_tilings(benzel(3, 3), "LS,RB,FB") == 2
    assert count_tilings(benzel(3, 3), MOUNTAINLESS) == 2


def test_region_of_four_cells_has_no_tiling():
    region = HexRegion(list(benzel(2, 2)) + [HexCell.at(4, 0)])
    assert len(region) == 4
    assert count_tilings(region) == 0
    assert list(enumerate_tilings(region)) == []


def test_empty_region():
    assert count_tilings(HexRegion()) == 1
    assert count_tilings(SquareRegion()) == 1


def test_known_counts():
    assert count_tilings(transfer_region(benzel(7, 8)), MOUNTAINLESS) == 8
    assert count_tilings(young_region(lambda_n(3)), MOUNTAINLESS) == 48
    assert count_tilings(f_region(4), MOUNTAINLESS) == 1


def test_memo_and_backtrack_agree():
    for a, b in valid_params(11):
        region = benzel(a, b)
        for kinds in (ALL_HEX, MOUNTAINLESS, VALLEYLESS, "RS,VB"):
            assert count_tilings(region, kinds, "memo") == count_tilings(region, kinds, "backtrack")
    with pytest.raises(ValueError):
        count_tilings(benzel(3, 3), method="guess")


def test_enumeration_matches_count_and_tiles_exactly():
    for a, b in [(3, 3), (4, 4), (4, 5), (5, 5)]:
        region = benzel(a, b)
        tilings = list(enumerate_tilings(region))
        assert len(tilings) == len(set(tilings)) == count_tilings(region)
        for t in tilings:
            cells = [c for p in t for c in p.cells]
            assert len(cells) == len(set(cells)) and set(cells) == set(region)
    assert len(list(enumerate_tilings(benzel(6, 6), limit=3))) == 3


def test_census_matches_enumeration():
    region = benzel(6, 6)
    weight = {HexKind.RIGHT_STONE: 1, HexKind.LEFT_STONE: -1}
    census = stat_census(region, ALL_HEX, lambda k: weight.get(k, 0))
    direct = collections.Counter(tiling_stats(t).stone_difference for t in enumerate_tilings(region))
    assert census == direct


def test_mountainless_tilings_of_b78_use_two_valley_stones():
    for t in enumerate_tilings(transfer_region(benzel(7, 8)), MOUNTAINLESS):
        stats = tiling_stats(t)
        assert stats.left_stones == 2 and stats.right_stones == 0
        assert all(isinstance(p.kind, SquareKind) for p in t)


def test_first_tiling():
    assert first_tiling(benzel(3, 3), "RS") is None
    t = first_tiling(benzel(4, 3))
    assert t is not None and {p.kind for p in t} == {HexKind.RIGHT_STONE}


def test_valley_positions():
    for m in range(1, 4):
        assert len(valley_positions(m)) == 2 * m
    with pytest.raises(ValueError):
        valley_positions(0)


def test_exact_cover_directly():
    cells = range(4)
    pieces = [{0, 1}, {2, 3}, {1, 2}, {0}, {3}]
    problem = ExactCover(cells, pieces)
    sols = sorted(sorted(s) for s in problem.solutions())
    assert sols == [[0, 1], [2, 3, 4]]
    assert problem.count() == 2 == problem.count_plain(prune=False, unit=1)


def test_type_error_on_foreign_region():
    with pytest.raises(TypeError):
        count_tilings(frozenset({1, 2, 3}))
