from itertools import product

import pytest

from sesqui.families import base_family, distinct_rows, stacks
from sesqui.windows import (
    BoundExceeded,
    enumerate_windows,
    nondeadend,
    shear_orientation,
    shear_resolution_metadata,
    trapezoid_core,
    trapezoid_union,
)
from sesqui.words import Shear, Window, dual, hjoin_sets


class TestStraightEnumeration:
    def test_single_cells(self):
        assert len(enumerate_windows(1, 1)) == 6

    def test_unit_pair_relation(self):
        rel = {}
        for w in enumerate_windows(2, 1):
            rel.setdefault(w.top[0], set()).add(w.bottom[0])
        assert rel == {
            0: {0, 1, 3, 4},
            2: {0, 1, 3, 4},
            4: {0, 1, 3, 4},
            1: {1, 2, 4, 5},
            3: {1, 2, 4, 5},
            5: {1, 2, 4, 5},
        }

    def test_2x2_has_all_36_rows(self):
        fam = enumerate_windows(2, 2)
        assert len(distinct_rows(fam)) == 36
        assert len(fam) == 144

    def test_bound_guard(self):
        with pytest.raises(BoundExceeded):
            enumerate_windows(2, 12)


class TestShears:
    def test_orientation_resolution(self):
        meta = shear_resolution_metadata()
        assert meta["shear_orientation"] == shear_orientation()
        assert meta["rows_2x2_by_orientation"][meta["shear_orientation"]] == 24

    def test_up_family_counts(self):
        fam = enumerate_windows(2, 2, Shear.UP)
        assert len(fam) == 96
        assert len(distinct_rows(fam)) == 24

    def test_down_family_counts(self):
        fam = enumerate_windows(2, 2, Shear.DOWN)
        assert len(fam) == 216
        assert len(distinct_rows(fam)) == 36

    @pytest.mark.parametrize("shear", list(Shear))
    def test_composition_law(self, shear):
        b = base_family(shear)
        assert enumerate_windows(2, 3, shear) == hjoin_sets(b, b)

    def test_composition_law_width_four(self):
        b = base_family(Shear.STRAIGHT)
        assert enumerate_windows(2, 4) == hjoin_sets(hjoin_sets(b, b), b)

    @pytest.mark.parametrize("shear", list(Shear))
    def test_families_self_dual(self, shear):
        fam = base_family(shear)
        assert frozenset(dual(w) for w in fam) == fam


class TestTrapezoidOracle:
    def test_zero_top(self):
        core = trapezoid_core((0,) * 7, 4, 1)
        assert core == Window(((0,),) * 4)

    def test_spec_top_100(self):
        # top row 0000100: value 36, times 3/2 is 54 = 130 in base 6
        core = trapezoid_core((0, 0, 1, 0, 0, 0, 0), 2, 5)
        assert core.row_strings() == ("00010", "00013")

    def test_fast_sweep_matches_row_reference(self):
        n, m = 2, 2
        slow = frozenset(
            trapezoid_core(t, n, m) for t in product(range(6), repeat=m + 2 * (n - 1))
        )
        assert trapezoid_union(n, m) == slow

    @pytest.mark.parametrize("n,m", [(2, 2), (2, 3), (3, 2)])
    def test_oracle_equals_transfer(self, n, m):
        assert trapezoid_union(n, m) == enumerate_windows(n, m)

    @pytest.mark.slow
    def test_oracle_equals_transfer_4x3(self):
        # the widest oracle sweep: 6^9 top rows, about a minute
        assert trapezoid_union(4, 3) == enumerate_windows(4, 3)

    def test_width_guard(self):
        with pytest.raises(ValueError):
            trapezoid_core((0, 0, 0), 3, 2)


class TestDeadEnds:
    def test_windows_have_none(self):
        fam = enumerate_windows(3, 2)
        assert nondeadend(fam, "horizontal") == fam
        assert nondeadend(fam, "vertical") == fam

    def test_empty_input(self):
        assert nondeadend(frozenset(), "horizontal") == frozenset()

    def test_prunes_an_isolated_member(self):
        keep = Window.from_strings("00/00")
        lone = Window.from_strings("25/14")  # no partner shares its rows
        got = nondeadend({keep, lone}, "vertical")
        assert keep in got and lone not in got


class TestStackAsymmetry:
    def test_windows_strictly_inside_stacks(self):
        st = stacks(base_family(Shear.STRAIGHT), 3)
        win = enumerate_windows(3, 2)
        assert win < st
        assert (len(win), len(st)) == (504, 576)


class TestPairSet:
    def test_valid_horizontal(self):
        from sesqui.windows import PairSet

        ps = PairSet("horizontal", base_family(Shear.UP))
        first = ps.sorted_members()[0]
        assert first.height == 2
        assert len(ps.sorted_members()) == 96

    def test_rejects_mixed_shapes(self):
        from sesqui.windows import PairSet
        from sesqui.words import Window

        with pytest.raises(ValueError):
            PairSet(
                "horizontal",
                frozenset({Window.from_strings("00/00"), Window.from_strings("000/000")}),
            )

    def test_rejects_wrong_axis_shape(self):
        from sesqui.windows import PairSet

        with pytest.raises(ValueError):
            PairSet("vertical", enumerate_windows(2, 3))
