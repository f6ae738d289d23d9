"""Exhaustive enumeration of legal windows via a layered carry transducer.

An n-row strip of a legal 2-D word is governed, column by column, by the
vector of carry pairs of its n-1 adjacent row relations.  The transfer
graph has those vectors as states and digit columns as edge labels; a
window occurs in some bi-infinite legal word exactly when its column word
labels a path inside the recurrent core of that graph (the maximal
subgraph where every state keeps a predecessor and a successor).

Sheared windows are enumerated by cutting straight windows from a bounding
rectangle of the matching diagonal grid and projecting away the free
cells.  Two orientations of the shearing matrices are a priori plausible;
:func:`shear_orientation` picks the one whose 2 x 2 family has the row
count the diagonal table theory demands, and records the choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .carry import ALL_CARRY_STATES, CarryState, carry_step
from .words import Row, Shear, Window, mul_row_3_2, sort_windows

#: refuse transfer enumerations whose raw path count exceeds this
MAX_PATHS = 6_000_000


class BoundExceeded(ValueError):
    """An enumeration request would exceed the configured search budget."""


TransferState = tuple[CarryState, ...]
Column = tuple[int, ...]


# ---------------------------------------------------------------------------
# transfer graph
# ---------------------------------------------------------------------------


def _transfer_successors(n: int, state: TransferState) -> list[tuple[Column, TransferState]]:
    """All (column, next state) moves from a carry vector of an n-row strip."""
    moves: list[tuple[Column, TransferState]] = []
    stack: list[tuple[tuple[int, ...], tuple[CarryState, ...]]] = [((d,), ()) for d in range(6)]
    while stack:
        digits, outs = stack.pop()
        level = len(digits) - 1
        if level == n - 1:
            moves.append((digits, outs))
            continue
        for d in range(6):
            nxt = carry_step(state[level], digits[-1], d)
            if nxt is not None:
                stack.append((digits + (d,), outs + (nxt,)))
    return moves


@lru_cache(maxsize=None)
def transfer_core(n: int) -> dict[TransferState, tuple[tuple[Column, TransferState], ...]]:
    """Recurrent part of the n-row transfer graph (iterated degree pruning)."""
    if n < 2:
        raise ValueError("transfer graphs need at least two rows")
    states: list[TransferState] = [()]
    for _ in range(n - 1):
        states = [s + (c,) for s in states for c in ALL_CARRY_STATES]
    edges = {s: _transfer_successors(n, s) for s in states}
    alive = set(states)
    while True:
        kept = {
            s: tuple((col, t) for col, t in edges[s] if t in alive)
            for s in alive
        }
        has_out = {s for s, es in kept.items() if es}
        has_in = {t for s in has_out for _, t in kept[s]}
        nxt = has_out & has_in
        if nxt == alive:
            return {s: kept[s] for s in sorted(alive)}
        alive = nxt
        if not alive:
            return {}


# ---------------------------------------------------------------------------
# straight windows
# ---------------------------------------------------------------------------


def _enumerate_straight(n: int, m: int) -> frozenset[Window]:
    if n == 1:
        # single rows are unconstrained: every digit string occurs
        if 6**m > MAX_PATHS:
            raise BoundExceeded(f"1x{m} request exceeds budget")
        from itertools import product

        return frozenset(Window((r,), Shear.STRAIGHT) for r in product(range(6), repeat=m))
    core = transfer_core(n)
    if len(core) * 6**m > MAX_PATHS:
        raise BoundExceeded(
            f"{n}x{m} transfer enumeration needs {len(core) * 6 ** m} paths "
            f"(budget {MAX_PATHS})"
        )
    out: set[Window] = set()
    for start in core:
        # iterative DFS over column words of length m inside the core
        stack: list[tuple[TransferState, tuple[Column, ...]]] = [(start, ())]
        while stack:
            state, cols = stack.pop()
            if len(cols) == m:
                rows = tuple(tuple(col[i] for col in cols) for i in range(n))
                out.add(Window(rows, Shear.STRAIGHT))
                continue
            for col, nxt in core[state]:
                stack.append((nxt, cols + (col,)))
    return frozenset(out)


# ---------------------------------------------------------------------------
# shears
# ---------------------------------------------------------------------------

_ROW_SHIFT = "row-shift"
_DIAGONAL = "diagonal"


def _project_sheared(n: int, m: int, shear: Shear, orientation: str) -> frozenset[Window]:
    """Cut sheared n x m windows out of straight bounding rectangles.

    row-shift orientation: window(i, j) = grid(i, i + j) for the up shear
    (each row slides one column per step down); bounding box n x (m+n-1).
    diagonal orientation: window(i, j) = grid(i + j, j) (each window row is
    a diagonal of the grid); bounding box (n+m-1) x m.  The down shear
    mirrors the row index.
    """
    up = shear is Shear.UP
    out: set[Window] = set()
    if orientation == _ROW_SHIFT:
        box = _enumerate_straight(n, m + n - 1)
        for w in box:
            rows = tuple(
                tuple(
                    w.rows[i][i + j] if up else w.rows[i][(n - 1 - i) + j]
                    for j in range(m)
                )
                for i in range(n)
            )
            out.add(Window(rows, shear))
    elif orientation == _DIAGONAL:
        box = _enumerate_straight(n + m - 1, m)
        for w in box:
            rows = tuple(
                tuple(
                    w.rows[i + j][j] if up else w.rows[(i - j) + (m - 1)][j]
                    for j in range(m)
                )
                for i in range(n)
            )
            out.add(Window(rows, shear))
    else:  # pragma: no cover - internal
        raise ValueError(orientation)
    return frozenset(out)


@lru_cache(maxsize=None)
def shear_orientation() -> str:
    """Resolve which shear orientation realises the diagonal pair families.

    The 2 x 2 diagonal family must contain exactly 24 distinct rows (the
    straight family has 36).  The row-shift orientation is tried first and
    kept only if it hits that count; otherwise the diagonal orientation is
    adopted.  The outcome of both probes is kept for run metadata.
    """

    def distinct_rows(fam: frozenset[Window]) -> int:
        return len({r for w in fam for r in w.rows})

    for orientation in (_ROW_SHIFT, _DIAGONAL):
        fam = _project_sheared(2, 2, Shear.UP, orientation)
        if distinct_rows(fam) == 24:
            return orientation
    raise AssertionError("neither shear orientation yields a 24-row 2x2 family")


def shear_resolution_metadata() -> dict[str, object]:
    """Both orientation probes plus the adopted choice, for run manifests."""
    probes = {}
    for orientation in (_ROW_SHIFT, _DIAGONAL):
        fam = _project_sheared(2, 2, Shear.UP, orientation)
        probes[orientation] = len({r for w in fam for r in w.rows})
    return {
        "shear_orientation": shear_orientation(),
        "rows_2x2_by_orientation": probes,
        "expected_rows_2x2": 24,
    }


@lru_cache(maxsize=None)
def enumerate_windows(n: int, m: int, shear: Shear = Shear.STRAIGHT) -> frozenset[Window]:
    """The exact set of legal n x m windows of the chosen family."""
    if n < 1 or m < 1:
        raise ValueError("window dimensions must be positive")
    if shear is Shear.STRAIGHT:
        return _enumerate_straight(n, m)
    return _project_sheared(n, m, shear, shear_orientation())


# ---------------------------------------------------------------------------
# trapezoid oracle
# ---------------------------------------------------------------------------


def trapezoid_rows(top: tuple[int, ...], n: int) -> list[Row]:
    """Rows 0..n-1 of the zero-padded orbit starting at the given top row."""
    rows = [Row(top, 0)]
    for _ in range(n - 1):
        rows.append(mul_row_3_2(rows[-1]))
    return rows


def trapezoid_core(top: tuple[int, ...], n: int, m: int) -> Window:
    """Central n x m core of the trapezoid under a width m + 2(n-1) top row.

    Each multiplication step trims one digit from each side of the
    certainty range, so after n-1 steps exactly the middle m columns of
    every row are boundary-independent.  Used only as an independent
    oracle against the transfer enumeration.
    """
    need = m + 2 * (n - 1)
    if len(top) != need:
        raise ValueError(f"top row must have width {need}, got {len(top)}")
    rows = trapezoid_rows(top, n)
    cells = tuple(
        tuple(row.digit_at(n - 1 + j) for j in range(m)) for row in rows
    )
    return Window(cells, Shear.STRAIGHT)


def trapezoid_union(n: int, m: int) -> frozenset[Window]:
    """Union of trapezoid cores over all possible top rows (brute force).

    Multiplying by 3/2 and rescaling by one base-6 digit is multiplying by
    9, so row i of the zero-padded orbit is the integer v*9^i read one
    digit position higher per step; the core digits come straight out of
    integer arithmetic.  (The Row-based `trapezoid_core` is the readable
    reference; the two agree, which the test suite pins.)
    """
    width = m + 2 * (n - 1)
    if 6**width > MAX_PATHS * 4:
        raise BoundExceeded(f"trapezoid sweep over 6^{width} tops exceeds budget")
    nine = [9**i for i in range(n)]
    shift = [6 ** (n - 1 + i) for i in range(n)]
    out: set[Window] = set()
    for v0 in range(6**width):
        rows = []
        for i in range(n):
            q = (v0 * nine[i]) // shift[i]
            row = []
            for _ in range(m):
                q, d = divmod(q, 6)
                row.append(d)
            rows.append(tuple(row))
        out.add(Window(tuple(rows), Shear.STRAIGHT))
    return frozenset(out)


# ---------------------------------------------------------------------------
# pair sets and dead-end pruning
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PairSet:
    """A finite set of same-shape production pairs (2 x n or n x 2)."""

    axis: str  # "horizontal" | "vertical"
    members: frozenset[Window]

    def __post_init__(self) -> None:
        if self.axis not in ("horizontal", "vertical"):
            raise ValueError(f"bad axis {self.axis!r}")
        shapes = {(w.height, w.width, w.shear) for w in self.members}
        if len(shapes) > 1:
            raise ValueError("pair set members must share shape and shear")
        if self.members:
            h, w, _ = next(iter(shapes))
            if self.axis == "horizontal" and h != 2:
                raise ValueError("horizontal pairs must have exactly two rows")
            if self.axis == "vertical" and w != 2:
                raise ValueError("vertical pairs must have exactly two columns")

    def sorted_members(self) -> tuple[Window, ...]:
        return sort_windows(self.members)


def nondeadend(members: Iterable[Window], direction: str) -> frozenset[Window]:
    """Members extendable into a bi-infinite overlap chain within the set.

    Builds the overlap digraph (u -> v when the join of u then v is
    defined) and iteratively deletes vertices missing a predecessor or a
    successor; the survivors are exactly the non-dead-end members.
    """
    if direction not in ("horizontal", "vertical"):
        raise ValueError(f"bad direction {direction!r}")
    alive = set(members)
    while True:
        if direction == "horizontal":
            key_out = {w: w.right_column for w in alive}
            key_in = {w: w.left_column for w in alive}
        else:
            key_out = {w: w.bottom for w in alive}
            key_in = {w: w.top for w in alive}
        in_keys = {key_in[w] for w in alive}
        out_keys = {key_out[w] for w in alive}
        # u -> v needs key_out[u] == key_in[v]; u survives when both sides exist
        nxt = {
            w
            for w in alive
            if key_out[w] in in_keys and key_in[w] in out_keys
        }
        if nxt == alive:
            return frozenset(alive)
        alive = nxt
        if not alive:
            return frozenset()
