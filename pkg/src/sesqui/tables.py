"""Cartesian-table factorizations of production-pair sets.

An H-table is a block (set of top rows) x (set of bottom rows) whose full
cartesian product lies inside a pair set; a pair set is "represented with
unique bottom components" when the bottom rows are partitioned across the
tables (dually for tops).  That representation is canonical: group each
bottom row by the exact set of tops it pairs with, then merge bottoms with
equal fibers.  V-tables do the same for the columns of vertical pairs.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .families import distinct_rows, pair_family
from .words import Shear, Window, row_string

RowT = tuple[int, ...]


@dataclass(frozen=True, order=True)
class HTable:
    """Cartesian block of a horizontal pair set: tops x bottoms."""

    tops: tuple[RowT, ...]
    bottoms: tuple[RowT, ...]

    @property
    def width(self) -> int:
        return len(self.tops[0])

    def pairs(self) -> frozenset[tuple[RowT, RowT]]:
        return frozenset((t, b) for t in self.tops for b in self.bottoms)

    def text(self) -> str:
        """Boxed layout: top rows, a rule, bottom rows."""
        top_lines = [row_string(r) for r in self.tops]
        bot_lines = [row_string(r) for r in self.bottoms]
        rule = "-" * max(len(s) for s in top_lines + bot_lines)
        return "\n".join(top_lines + [rule] + bot_lines)


@dataclass(frozen=True, order=True)
class VTable:
    """Cartesian block of a vertical pair set: lefts x rights (columns)."""

    lefts: tuple[RowT, ...]
    rights: tuple[RowT, ...]

    @property
    def height(self) -> int:
        return len(self.lefts[0])

    def pairs(self) -> frozenset[tuple[RowT, RowT]]:
        return frozenset((l, r) for l in self.lefts for r in self.rights)

    def text(self) -> str:
        """Boxed layout: left columns, a bar, right columns (printed as rows)."""
        left = " ".join("".join(str(d) for d in c) for c in self.lefts)
        right = " ".join("".join(str(d) for d in c) for c in self.rights)
        return f"{left} | {right}"


class NotFactorable(ValueError):
    """The requested unique-component representation does not exist."""


def factor_h(pairs: Iterable[Window], unique: str = "bottom") -> tuple[HTable, ...]:
    """Unique-component H-table representation of a horizontal pair set.

    unique="bottom": every bottom row appears in exactly one table (tables
    are the fibers of bottoms grouped by their exact top set); "top" dually.
    The union of the tables' products always equals the input exactly.
    """
    if unique not in ("top", "bottom"):
        raise ValueError(f"unique must be 'top' or 'bottom', got {unique!r}")
    fibers: dict[RowT, set[RowT]] = {}
    for w in pairs:
        if w.height != 2:
            raise ValueError("factor_h needs two-row windows")
        key, val = (w.top, w.bottom) if unique == "top" else (w.bottom, w.top)
        fibers.setdefault(key, set()).add(val)
    groups: dict[frozenset[RowT], set[RowT]] = {}
    for key, fib in fibers.items():
        groups.setdefault(frozenset(fib), set()).add(key)
    tables = []
    for fib, keys in groups.items():
        tops, bottoms = (keys, fib) if unique == "top" else (fib, keys)
        tables.append(HTable(tuple(sorted(tops)), tuple(sorted(bottoms))))
    return tuple(sorted(tables))


def factor_v(pairs: Iterable[Window], require_unique_both: bool = True) -> tuple[VTable, ...]:
    """Unique-component V-table representation of a vertical pair set.

    Groups left columns by their exact right-column fiber.  When
    require_unique_both is set, the same grouping must simultaneously be
    unique on the right side, otherwise NotFactorable is raised.
    """
    fibers: dict[RowT, set[RowT]] = {}
    for w in pairs:
        if w.width != 2:
            raise ValueError("factor_v needs two-column windows")
        left, right = w.left_column, w.right_column
        fibers.setdefault(left, set()).add(right)
    groups: dict[frozenset[RowT], set[RowT]] = {}
    for left, fib in fibers.items():
        groups.setdefault(frozenset(fib), set()).add(left)
    tables = tuple(
        sorted(
            VTable(tuple(sorted(lefts)), tuple(sorted(rights)))
            for rights, lefts in groups.items()
        )
    )
    if require_unique_both:
        seen: set[RowT] = set()
        for t in tables:
            for r in t.rights:
                if r in seen:
                    raise NotFactorable(
                        "right column appears in two tables; no simultaneous "
                        "unique-left/unique-right representation"
                    )
                seen.add(r)
    return tables


def tables_pairs(tables: Iterable[HTable]) -> frozenset[tuple[RowT, RowT]]:
    out: set[tuple[RowT, RowT]] = set()
    for t in tables:
        out |= t.pairs()
    return frozenset(out)


def split_h14(tables: Iterable[HTable]) -> tuple[HTable, ...]:
    """Split every six-top table in two so each part has a uniform class.

    Three-top tables pass through.  A six-top table splits by the rightmost
    digit of its top rows: into the two equal-digit groups when the tops
    carry two distinct right digits, or into the even/odd digit classes
    when all six appear.  Anything else is an error.
    """
    out: list[HTable] = []
    for t in tables:
        if len(t.tops) == 3:
            out.append(t)
            continue
        if len(t.tops) != 6:
            raise NotFactorable(f"table with {len(t.tops)} top rows is not splittable")
        last = Counter(r[0] for r in t.tops)
        if len(last) == 2 and set(last.values()) == {3}:
            groups = sorted(last)
            halves = [
                tuple(sorted(r for r in t.tops if r[0] == g)) for g in groups
            ]
        elif len(last) == 6:
            halves = [
                tuple(sorted(r for r in t.tops if r[0] % 2 == p)) for p in (0, 1)
            ]
        else:
            raise NotFactorable(f"six-top table has right-digit profile {dict(last)}")
        out.extend(HTable(h, t.bottoms) for h in halves)
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# family structure verification
# ---------------------------------------------------------------------------


@dataclass
class TableFamilyReport:
    """Checked structure of one pair family's table representation."""

    shear: Shear
    width: int
    with_0235: bool
    pair_count: int = 0
    row_count: int = 0
    table_count: int = 0
    top_size_histogram: dict[int, int] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "shear": self.shear.value,
            "width": self.width,
            "with_0235": self.with_0235,
            "pair_count": self.pair_count,
            "row_count": self.row_count,
            "table_count": self.table_count,
            "top_size_histogram": dict(sorted(self.top_size_histogram.items())),
            "violations": list(self.violations),
        }


def _rows_differ_only_leftmost(rows: tuple[RowT, ...]) -> bool:
    return all(r1[:-1] == r2[:-1] for r1 in rows for r2 in rows)


def _rows_differ_everywhere(rows: tuple[RowT, ...]) -> bool:
    return all(
        all(a != b for a, b in zip(r1, r2))
        for i, r1 in enumerate(rows)
        for r2 in rows[i + 1 :]
    )


def _column_class_implications(table: HTable, report: TableFamilyReport) -> None:
    """Digit-class constraints linking each top column to its bottom column.

    Top digits in {0,2,4} force the bottom column into {0,3} or {1,4}; top
    digits in {1,3,5} force {2,5} or {1,4}.
    """
    for j in range(table.width):
        top_digits = {r[j] for r in table.tops}
        bot_digits = {r[j] for r in table.bottoms}
        if top_digits <= {0, 2, 4}:
            allowed = ({0, 3}, {1, 4})
        elif top_digits <= {1, 3, 5}:
            allowed = ({2, 5}, {1, 4})
        else:
            report.violations.append(
                f"table {table.text()!r}: top column {j} mixes parities {sorted(top_digits)}"
            )
            continue
        if not any(bot_digits <= a for a in allowed):
            report.violations.append(
                f"table {table.text()!r}: column {j} tops {sorted(top_digits)} "
                f"bottoms {sorted(bot_digits)} break the class rule"
            )


def _paired_equal_tops(tables: tuple[HTable, ...], report: TableFamilyReport) -> None:
    by_tops = Counter(t.tops for t in tables)
    bad = {tops: c for tops, c in by_tops.items() if c != 2}
    if bad:
        report.violations.append(
            f"{len(bad)} top components do not occur in exactly two tables"
        )


def verify_family_structure(n: int, shear: Shear, with_0235: bool = False) -> TableFamilyReport:
    """Build a width-n family, factor it, and check every structural clause.

    Checks depend on the family kind:

    * straight, plain: 3*6^(n-1) unique-bottom tables (two thirds with 3
      tops, one third with 6), two-row bottoms, 6^n distinct rows; after
      splitting the six-top tables every table has paired equal tops,
      three tops differing only in the leftmost column, two-row bottoms
      differing only in the leftmost column, and the column-class rule.
    * up shear, plain: 3*4^(n-1) unique-bottom tables, 6*4^(n-1) rows;
      after the split, tops differ in every column, top columns carry a
      full parity class, plus pairing / class clauses.
    * up shear, 0235: 2*4^(n-1) tables with unique two-row tops and
      bottoms, 4^n rows, tops differing everywhere, bottoms only in the
      leftmost column with leftmost pair in {0,3}, {2,5} or {1,4}.
    * straight, 0235: tables have unique components with three tops and
      two bottoms each, both differing only in the leftmost column, and
      4*6^(n-1) distinct rows.
    * down shear: a unique-top representation exists (its profile is
      asymmetric; counts are reported, not constrained).
    """
    fam = pair_family(n, shear, last_0235=with_0235)
    report = TableFamilyReport(shear=shear, width=n, with_0235=with_0235)
    report.pair_count = len(fam)
    report.row_count = len(distinct_rows(fam))

    unique = "top" if shear is Shear.DOWN else "bottom"
    tables = factor_h(fam, unique=unique)
    report.table_count = len(tables)
    report.top_size_histogram = dict(Counter(len(t.tops) for t in tables))

    if tables_pairs(tables) != frozenset((w.top, w.bottom) for w in fam):
        report.violations.append("tables do not reproduce the pair set exactly")

    def expect(cond: bool, msg: str) -> None:
        if not cond:
            report.violations.append(msg)

    if shear is Shear.DOWN:
        # unique-top representation exists by construction; record only
        return report

    if not with_0235:
        base = 6 if shear is Shear.STRAIGHT else 4
        expect(
            report.table_count == 3 * base ** (n - 1),
            f"table count {report.table_count} != 3*{base}^{n-1}",
        )
        expect(
            report.top_size_histogram.get(3, 0) == 2 * base ** (n - 1)
            and report.top_size_histogram.get(6, 0) == base ** (n - 1)
            and set(report.top_size_histogram) <= {3, 6},
            f"top-size histogram {report.top_size_histogram} is not 3s and 6s "
            f"in ratio 2:1",
        )
        expected_rows = 6**n if shear is Shear.STRAIGHT else 6 * 4 ** (n - 1)
        expect(report.row_count == expected_rows, f"row count {report.row_count} != {expected_rows}")
        expect(
            all(len(t.bottoms) == 2 for t in tables),
            "some bottom component does not have exactly two rows",
        )
        split = split_h14(tables)
        expect(len(split) == 4 * base ** (n - 1), f"split table count {len(split)} != 4*{base}^{n-1}")
        _paired_equal_tops(split, report)
        for t in split:
            expect(len(t.tops) == 3, f"split table has {len(t.tops)} tops")
            expect(
                _rows_differ_only_leftmost(t.bottoms),
                f"table {t.text()!r}: bottoms differ beyond the leftmost column",
            )
            if shear is Shear.STRAIGHT:
                expect(
                    _rows_differ_only_leftmost(t.tops),
                    f"table {t.text()!r}: tops differ beyond the leftmost column",
                )
            else:
                expect(
                    _rows_differ_everywhere(t.tops),
                    f"table {t.text()!r}: tops coincide in some column",
                )
                for j in range(t.width):
                    col = {r[j] for r in t.tops}
                    expect(
                        col in ({0, 2, 4}, {1, 3, 5}),
                        f"table {t.text()!r}: top column {j} is {sorted(col)}, "
                        f"not a full parity class",
                    )
            _column_class_implications(t, report)
        return report

    # 0235 families
    if shear is Shear.UP:
        expect(report.table_count == 2 * 4 ** (n - 1), f"table count {report.table_count} != 2*4^{n-1}")
        expect(report.row_count == 4**n, f"row count {report.row_count} != 4^{n}")
        top_unique = factor_h(fam, unique="top")
        expect(
            set(top_unique) == set(tables),
            "unique-top and unique-bottom factorizations differ",
        )
        for t in tables:
            expect(len(t.tops) == 2 and len(t.bottoms) == 2, f"table {t.text()!r} is not 2x2")
            expect(
                _rows_differ_everywhere(t.tops),
                f"table {t.text()!r}: tops coincide in some column",
            )
            expect(
                _rows_differ_only_leftmost(t.bottoms),
                f"table {t.text()!r}: bottoms differ beyond the leftmost column",
            )
            lead = {r[-1] for r in t.bottoms}
            expect(
                lead in ({0, 3}, {2, 5}, {1, 4}),
                f"table {t.text()!r}: bottom leftmost digits {sorted(lead)}",
            )
            for j in range(t.width):
                tops_j = {r[j] for r in t.tops}
                bots_j = {r[j] for r in t.bottoms}
                if tops_j <= {1, 3, 5}:
                    expect(
                        bots_j <= {1, 2, 4, 5},
                        f"table {t.text()!r} column {j}: odd tops, bottoms {sorted(bots_j)}",
                    )
                else:
                    expect(
                        bots_j <= {0, 1, 3, 4},
                        f"table {t.text()!r} column {j}: even tops, bottoms {sorted(bots_j)}",
                    )
        return report

    # straight 0235
    expect(report.row_count == 4 * 6 ** (n - 1), f"row count {report.row_count} != 4*6^{n-1}")
    top_unique = factor_h(fam, unique="top")
    expect(
        set(top_unique) == set(tables),
        "unique-top and unique-bottom factorizations differ",
    )
    for t in tables:
        expect(len(t.tops) == 3 and len(t.bottoms) == 2, f"table {t.text()!r} is not 3x2")
        expect(
            _rows_differ_only_leftmost(t.tops) and _rows_differ_only_leftmost(t.bottoms),
            f"table {t.text()!r}: rows differ beyond the leftmost column",
        )
        for j in range(t.width):
            tops_j = {r[j] for r in t.tops}
            bots_j = {r[j] for r in t.bottoms}
            if tops_j <= {1, 3, 5}:
                expect(
                    bots_j <= {1, 2, 4, 5},
                    f"table {t.text()!r} column {j}: odd tops, bottoms {sorted(bots_j)}",
                )
            elif tops_j <= {0, 2, 4}:
                expect(
                    bots_j <= {0, 1, 3, 4},
                    f"table {t.text()!r} column {j}: even tops, bottoms {sorted(bots_j)}",
                )
            else:
                report.violations.append(
                    f"table {t.text()!r} column {j}: tops mix parities"
                )
    return report
