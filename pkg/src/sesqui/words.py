"""Finite base-6 words: rows with a radix offset, rectangular windows, shears.

Conventions
-----------
* Digits are plain ints in 0..5.
* A :class:`Row` stores digits least-significant first; digit k of a row
  sits at absolute position ``offset + k`` (negative positions are
  fractional).
* A :class:`Window` is an n x m rectangle of digits.  ``rows[i][j]`` is the
  digit in row i (counted from the top) and column j (counted from the
  RIGHT, so column 0 is the least significant).  Display strings reverse
  each row into the usual most-significant-first order.
* Shears tag which coordinate grid a window was cut from: the straight
  grid, or the two diagonal grids obtained by shearing the row index into
  the column index (up) or out of it (down).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable

Digit = int

DIGITS: tuple[int, ...] = (0, 1, 2, 3, 4, 5)


def check_digit(x: int) -> int:
    if not 0 <= x <= 5:
        raise ValueError(f"digit out of range 0..5: {x!r}")
    return x


class Shear(str, Enum):
    STRAIGHT = "straight"
    UP = "up"
    DOWN = "down"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


# ---------------------------------------------------------------------------
# one-dimensional rows
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Row:
    """A finite base-6 word with digit k at position offset + k."""

    digits: tuple[int, ...]
    offset: int = 0

    def __post_init__(self) -> None:
        for d in self.digits:
            check_digit(d)

    @classmethod
    def from_string(cls, text: str) -> "Row":
        """Parse "4.3" style strings; digits left of the point get positions >= 0."""
        if "." in text:
            whole, frac = text.split(".", 1)
        else:
            whole, frac = text, ""
        digits = tuple(int(c) for c in reversed(whole + frac))
        return cls(digits, offset=-len(frac))

    @property
    def width(self) -> int:
        return len(self.digits)

    def digit_at(self, position: int) -> int:
        """Digit at an absolute position, zero outside the support."""
        k = position - self.offset
        if 0 <= k < len(self.digits):
            return self.digits[k]
        return 0

    def value(self) -> Fraction:
        total = sum(d * 6**k for k, d in enumerate(self.digits))
        return Fraction(total) * Fraction(6) ** self.offset

    def trimmed(self) -> "Row":
        """Drop leading and trailing zero digits (normalising the offset)."""
        digits = list(self.digits)
        offset = self.offset
        while digits and digits[-1] == 0:
            digits.pop()
        while digits and digits[0] == 0:
            digits.pop(0)
            offset += 1
        return Row(tuple(digits), offset)

    def __str__(self) -> str:
        if not self.digits:
            return "0"
        msb_first = "".join(str(d) for d in reversed(self.digits))
        if self.offset >= 0:
            return msb_first + "0" * self.offset
        if -self.offset >= len(self.digits):
            pad = "0" * (-self.offset - len(self.digits))
            return "0." + pad + msb_first
        point = len(self.digits) + self.offset
        return msb_first[:point] + "." + msb_first[point:]


def mul_row_3_2(row: Row) -> Row:
    """Exact base-6 digits of 3/2 times the row (zeros assumed outside it).

    Division by 2 terminates in base 6, so the result gains at most one
    fractional digit; multiplication by 3 gains at most one leading digit.
    """
    value = sum(d * 6**k for k, d in enumerate(row.digits))
    tripled = 3 * value
    if tripled % 2 == 0:
        scaled, offset = tripled // 2, row.offset
    else:
        scaled, offset = (tripled * 6) // 2, row.offset - 1
    digits = []
    width = len(row.digits) + (row.offset - offset) + 1
    for _ in range(width):
        scaled, d = divmod(scaled, 6)
        digits.append(d)
    if digits and digits[-1] == 0:
        digits.pop()
    return Row(tuple(digits), offset)


# ---------------------------------------------------------------------------
# two-dimensional windows
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Window:
    """A fully filled n x m digit rectangle with a shear tag.

    ``rows[i][j]``: row i from the top, column j from the right.
    """

    rows: tuple[tuple[int, ...], ...]
    shear: Shear = Shear.STRAIGHT

    def __post_init__(self) -> None:
        if not self.rows:
            raise ValueError("window must have at least one row")
        width = len(self.rows[0])
        if width == 0 or any(len(r) != width for r in self.rows):
            raise ValueError("window rows must be nonempty and equal width")
        for r in self.rows:
            for d in r:
                check_digit(d)

    @classmethod
    def from_strings(cls, text: str, shear: Shear = Shear.STRAIGHT) -> "Window":
        """Parse "12/45" into a window; rows are written most-significant first."""
        rows = tuple(
            tuple(int(c) for c in reversed(part)) for part in text.split("/")
        )
        return cls(rows, shear)

    @property
    def height(self) -> int:
        return len(self.rows)

    @property
    def width(self) -> int:
        return len(self.rows[0])

    def column(self, j: int) -> tuple[int, ...]:
        """Column j (from the right), read top to bottom."""
        return tuple(r[j] for r in self.rows)

    @property
    def right_column(self) -> tuple[int, ...]:
        return self.column(0)

    @property
    def left_column(self) -> tuple[int, ...]:
        return self.column(self.width - 1)

    @property
    def top(self) -> tuple[int, ...]:
        return self.rows[0]

    @property
    def bottom(self) -> tuple[int, ...]:
        return self.rows[-1]

    def row_strings(self) -> tuple[str, ...]:
        return tuple("".join(str(d) for d in reversed(r)) for r in self.rows)

    def __str__(self) -> str:
        return "/".join(self.row_strings())

    def transpose(self) -> "Window":
        """Matrix transpose of the displayed array.

        Row i of the result is the i-th displayed column (leftmost first)
        read top to bottom, so left/right columns become top/bottom rows.
        """
        n, m = self.height, self.width
        rows = tuple(
            tuple(self.rows[n - 1 - j][m - 1 - i] for j in range(n))
            for i in range(m)
        )
        return Window(rows, self.shear)


def row_string(row: tuple[int, ...]) -> str:
    """Display a bare row tuple (least-significant-first) as digits."""
    return "".join(str(d) for d in reversed(row))


# ---------------------------------------------------------------------------
# duality x -> 5 - x
# ---------------------------------------------------------------------------


def dual_digit(x: int) -> int:
    return 5 - check_digit(x)


def dual(obj):
    """Apply the digit relabelling x -> 5 - x; an involution on every kind."""
    if isinstance(obj, int):
        return dual_digit(obj)
    if isinstance(obj, Row):
        return Row(tuple(5 - d for d in obj.digits), obj.offset)
    if isinstance(obj, Window):
        return Window(tuple(tuple(5 - d for d in r) for r in obj.rows), obj.shear)
    if isinstance(obj, tuple):
        return tuple(5 - d for d in obj)
    if isinstance(obj, (set, frozenset)):
        return type(obj)(dual(w) for w in obj)
    raise TypeError(f"cannot dualise {type(obj).__name__}")


# ---------------------------------------------------------------------------
# overlap concatenation
# ---------------------------------------------------------------------------


def hjoin(u: Window, v: Window) -> Window | None:
    """Horizontal overlap join: u to the left of v, sharing one column.

    Defined when u and v have equal heights and shear tags and u's
    rightmost column equals v's leftmost column; the shared column is
    written once, so widths add minus one.
    """
    if u.height != v.height or u.shear != v.shear:
        return None
    if u.right_column != v.left_column:
        return None
    rows = tuple(vr + ur[1:] for ur, vr in zip(u.rows, v.rows))
    return Window(rows, u.shear)


def vjoin(u: Window, v: Window) -> Window | None:
    """Vertical overlap join: v stacked above u, sharing one row.

    Defined when widths and shear tags agree and u's top row equals v's
    bottom row; heights add minus one.
    """
    if u.width != v.width or u.shear != v.shear:
        return None
    if u.top != v.bottom:
        return None
    return Window(v.rows + u.rows[1:], u.shear)


def hjoin_sets(left: Iterable[Window], right: Iterable[Window]) -> frozenset[Window]:
    """Set lift {u o v : u in left, v in right, defined}, indexed for speed."""
    by_left_col: dict[tuple[tuple[int, ...], Shear], list[Window]] = {}
    for v in right:
        by_left_col.setdefault((v.left_column, v.shear), []).append(v)
    out = set()
    for u in left:
        for v in by_left_col.get((u.right_column, u.shear), ()):
            w = hjoin(u, v)
            if w is not None:
                out.add(w)
    return frozenset(out)


def vjoin_sets(lower: Iterable[Window], upper: Iterable[Window]) -> frozenset[Window]:
    """Set lift {u • v : u in lower, v in upper, defined} (v goes on top)."""
    by_bottom: dict[tuple[tuple[int, ...], Shear], list[Window]] = {}
    for v in upper:
        by_bottom.setdefault((v.bottom, v.shear), []).append(v)
    out = set()
    for u in lower:
        for v in by_bottom.get((u.top, u.shear), ()):
            w = vjoin(u, v)
            if w is not None:
                out.add(w)
    return frozenset(out)


def hpower(family: Iterable[Window], k: int) -> frozenset[Window]:
    """k-fold horizontal join power; k = 1 returns the family itself."""
    if k < 1:
        raise ValueError("horizontal power needs k >= 1")
    fam = frozenset(family)
    acc = fam
    for _ in range(k - 1):
        acc = hjoin_sets(acc, fam)
    return acc


def vpower(family: Iterable[Window], k: int) -> frozenset[Window]:
    """k-fold vertical join power; k = 1 returns the family itself."""
    if k < 1:
        raise ValueError("vertical power needs k >= 1")
    fam = frozenset(family)
    acc = fam
    for _ in range(k - 1):
        acc = vjoin_sets(acc, fam)
    return acc


def sort_windows(windows: Iterable[Window]) -> tuple[Window, ...]:
    """Canonical deterministic order: by shape, then row-major digits."""
    return tuple(
        sorted(windows, key=lambda w: (w.height, w.width, w.shear.value, w.rows))
    )
