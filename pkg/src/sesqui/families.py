"""Production-pair families: base 2 x 2 sets, join powers, digit-set filters.

The width-n horizontal family of a shear variant is the (n-1)-fold overlap
power of its 2 x 2 base; this equals direct window enumeration (checked in
the test suite at small widths, where both sides are computable).  The
"0235" variant constrains the rightmost column of each pair to the unit
pairs over {0,2,3,5}; similarly "023" and "012" for the other digit sets.
"""

from __future__ import annotations

from functools import lru_cache

from .windows import enumerate_windows
from .words import Shear, Window, hjoin_sets, hpower

#: digit sets named the way the pair variants are
ALPHABET_0235 = frozenset({0, 2, 3, 5})
ALPHABET_023 = frozenset({0, 2, 3})
ALPHABET_012 = frozenset({0, 1, 2})


@lru_cache(maxsize=None)
def unit_pairs(shear: Shear = Shear.STRAIGHT) -> frozenset[Window]:
    """All legal 2 x 1 windows (the single-column pair relation)."""
    return enumerate_windows(2, 1, shear)


def restricted_unit_pairs(alphabet: frozenset[int], shear: Shear = Shear.STRAIGHT) -> frozenset[Window]:
    """Unit pairs whose column stays inside the given digit set."""
    return frozenset(
        w for w in unit_pairs(shear) if all(d in alphabet for d in w.right_column)
    )


def unit_pairs_0235(shear: Shear = Shear.STRAIGHT) -> frozenset[Window]:
    return restricted_unit_pairs(ALPHABET_0235, shear)


def unit_pairs_023(shear: Shear = Shear.STRAIGHT) -> frozenset[Window]:
    return restricted_unit_pairs(ALPHABET_023, shear)


def unit_pairs_012(shear: Shear = Shear.STRAIGHT) -> frozenset[Window]:
    return restricted_unit_pairs(ALPHABET_012, shear)


@lru_cache(maxsize=None)
def base_family(shear: Shear = Shear.STRAIGHT) -> frozenset[Window]:
    """The 2 x 2 window family of a shear variant."""
    return enumerate_windows(2, 2, shear)


@lru_cache(maxsize=None)
def pair_family(n: int, shear: Shear = Shear.STRAIGHT, last_0235: bool = False) -> frozenset[Window]:
    """Width-n horizontal production pairs, optionally 0235-constrained.

    n = 1 yields the unit pairs.  The 0235 constraint composes the unit
    pairs over {0,2,3,5} onto the right end, which is the same as keeping
    the members whose rightmost column avoids the digits 1 and 4.
    """
    if n < 1:
        raise ValueError("pair width must be at least 1")
    fam = unit_pairs(shear) if n == 1 else hpower(base_family(shear), n - 1)
    if last_0235:
        if n == 1:
            return unit_pairs_0235(shear)
        fam = hjoin_sets(fam, unit_pairs_0235(shear))
    return fam


def distinct_rows(family: frozenset[Window]) -> frozenset[tuple[int, ...]]:
    """All rows occurring in the family's members."""
    return frozenset(r for w in family for r in w.rows)


def family_relation(family: frozenset[Window]) -> dict[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """The family as a successor relation: row -> sorted tuple of next rows."""
    succ: dict[tuple[int, ...], set[tuple[int, ...]]] = {}
    for w in family:
        succ.setdefault(w.top, set()).add(w.bottom)
    return {t: tuple(sorted(s)) for t, s in sorted(succ.items())}


def stacks(family: frozenset[Window], height: int) -> frozenset[Window]:
    """The (height-1)-fold vertical power: all stacks of the given height."""
    from .words import vpower

    if height < 2:
        raise ValueError("stacks need height at least 2")
    return vpower(family, height - 1)
