import pytest

from catbij import (
    CeilingExceeded,
    DyckPath,
    NonBinaryCharacter,
    PrefixViolation,
    UnbalancedCounts,
    ValleySet,
    area,
    bounce,
    enumerate_dyck,
    from_valleys,
    parse_path,
    path_stats,
    reflect,
    valley_complement,
    valleys,
)
from conftest import CATALAN, FIGURE_PAIRS

RUNNING = parse_path("01 001 011 01 01")


def area_oracle(D):
    """Grid oracle: count cells fully above the diagonal and below the path,
    column by column (independent of the north-step formula used by area)."""
    heights, norths = [], 0
    for s in D.steps:
        if s == 0:
            norths += 1
        else:
            heights.append(norths)
    return sum(max(0, h - (x + 1)) for x, h in enumerate(heights))


def reverse_complement(D):
    return DyckPath(tuple(1 - s for s in reversed(D.steps)))


class TestParsing:
    def test_blanks_are_grouping_only(self):
        assert RUNNING.n == 6
        assert str(RUNNING) == "010010110101"
        assert parse_path("000111") == DyckPath((0, 0, 0, 1, 1, 1))

    def test_east_before_north(self):
        with pytest.raises(PrefixViolation):
            parse_path("10")

    def test_prefix_dips_midway(self):
        with pytest.raises(PrefixViolation):
            parse_path("0110")

    def test_unbalanced(self):
        with pytest.raises(UnbalancedCounts):
            parse_path("0100")
        with pytest.raises(UnbalancedCounts):
            parse_path("")

    def test_non_binary(self):
        with pytest.raises(NonBinaryCharacter):
            parse_path("0x01")
        with pytest.raises(NonBinaryCharacter):
            DyckPath((0, 2))


class TestStats:
    def test_running_example(self):
        s = path_stats(RUNNING)
        assert s.des == {2, 5, 8, 10}
        assert s.maj == 25
        assert (s.maj0, s.maj1) == (13, 12)

    def test_single_peak_has_no_descents(self):
        s = path_stats(parse_path("000111"))
        assert s.des == set() and s.maj == s.maj0 == s.maj1 == 0

    def test_split_partitions_maj(self):
        for n in range(1, 9):
            for D in enumerate_dyck(n):
                s = path_stats(D)
                assert s.maj0 + s.maj1 == s.maj


class TestValleys:
    def test_running_example(self):
        v = valleys(RUNNING)
        assert v.xs == (1, 2, 4, 5)
        assert v.ys == (1, 3, 4, 5)

    def test_single_peak_has_none(self):
        v = valleys(parse_path("00001111"))
        assert v.xs == () and v.ys == ()

    def test_diagonal_valley(self):
        v = valleys(parse_path("0101"))
        assert (v.xs, v.ys) == ((1,), (1,))

    def test_from_valleys_goldens(self):
        assert str(from_valleys(ValleySet(6, (1, 2, 4, 5), (1, 3, 4, 5)))) == "010010110101"
        assert str(from_valleys(ValleySet(4, (), ()))) == "00001111"
        assert str(from_valleys(ValleySet(4, (3,), (3,)))) == "00011101"

    def test_round_trips(self):
        for n in range(1, 9):
            for D in enumerate_dyck(n):
                assert from_valleys(valleys(D)) == D

    def test_invalid_valley_sets(self):
        with pytest.raises(ValueError, match="elementwise"):
            ValleySet(4, (2,), (1,))
        with pytest.raises(ValueError, match="strictly increase"):
            ValleySet(4, (1, 1), (2, 3))
        with pytest.raises(ValueError, match=r"\|xs\| != \|ys\|"):
            ValleySet(4, (1,), (1, 2))
        with pytest.raises(ValueError, match="1..3"):
            ValleySet(4, (4,), (4,))

    def test_position_sum_is_maj(self):
        for n in range(1, 9):
            for D in enumerate_dyck(n):
                v = valleys(D)
                assert path_stats(D).maj == sum(v.xs) + sum(v.ys)

    def test_json_round_trip(self):
        v = valleys(RUNNING)
        assert ValleySet.from_json(v.to_json()) == v


class TestAreaBounce:
    def test_extremes(self):
        for n in range(1, 7):
            steep = DyckPath((0,) * n + (1,) * n)
            saw = DyckPath((0, 1) * n)
            assert area(steep) == n * (n - 1) // 2
            assert bounce(steep) == 0
            assert area(saw) == 0
            assert bounce(saw) == n * (n - 1) // 2

    def test_running_example_area(self):
        assert area(RUNNING) == area_oracle(RUNNING) == 2

    def test_area_matches_grid_oracle(self):
        for n in range(1, 7):
            for D in enumerate_dyck(n):
                assert area(D) == area_oracle(D)


class TestInvolutions:
    def test_complement_swaps_special_pair(self):
        a, b = parse_path("01010011"), parse_path("00011101")
        assert valley_complement(a) == b
        assert valley_complement(b) == a

    def test_complement_extremes(self):
        n = 5
        steep = DyckPath((0,) * n + (1,) * n)
        assert valley_complement(steep) == DyckPath((0, 1) * n)
        assert valley_complement(DyckPath((0, 1) * n)) == steep

    def test_complement_is_involution(self):
        for D in enumerate_dyck(6):
            assert valley_complement(valley_complement(D)) == D

    def test_reflect_fixes_single_peak(self):
        steep = DyckPath((0,) * 5 + (1,) * 5)
        assert reflect(steep) == steep

    def test_reflect_is_involution_and_matches_reverse_complement(self):
        for D in enumerate_dyck(6):
            assert reflect(reflect(D)) == D
            assert reflect(D) == reverse_complement(D)

    def test_reflect_commutes_with_complement(self):
        for D in enumerate_dyck(6):
            assert reflect(valley_complement(D)) == valley_complement(reflect(D))


class TestEnumeration:
    def test_n4_is_figure_right_column(self):
        got = [str(D) for D in enumerate_dyck(4)]
        assert got == sorted(path for _, path in FIGURE_PAIRS)

    def test_n1(self):
        assert [str(D) for D in enumerate_dyck(1)] == ["01"]

    def test_counts(self):
        for n in range(1, 9):
            assert sum(1 for _ in enumerate_dyck(n)) == CATALAN[n]

    def test_n10_count(self):
        assert sum(1 for _ in enumerate_dyck(10)) == 16796

    def test_lex_order_no_duplicates(self):
        words = [str(D) for D in enumerate_dyck(5)]
        assert words == sorted(set(words))

    def test_ceiling(self):
        with pytest.raises(CeilingExceeded):
            enumerate_dyck(13)
        assert next(enumerate_dyck(13, max_n=13)).n == 13
