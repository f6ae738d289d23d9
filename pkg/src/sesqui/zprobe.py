"""Bounded emptiness probes for Z-number-style column constraints.

A real number whose 3/2-orbit of fractional parts stays below 1/2 would,
written in base 6, give a 2-D legal word whose first fractional column
uses only the digits 0, 1, 2.  Finite windows let us test whether such
column constraints admit any bi-infinite vertical chain at a given width:
if iterated dead-end pruning empties the constrained pair set, no such
chain exists, which is a finite certificate of emptiness at that width.
Everything here is exact; orbit sampling uses `fractions.Fraction`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .families import pair_family, unit_pairs_012
from .tables import HTable, factor_h
from .windows import nondeadend
from .words import Shear, Window, hjoin_sets

__all__ = [
    "unit_pairs_012",
    "fraction_core",
    "first_fraction_digit",
    "SixthShiftReport",
    "verify_sixth_shift",
    "deep_survivor",
    "ProbeResult",
    "emptiness_probe",
    "reverify_probe",
]


def fraction_core() -> frozenset[Window]:
    """Vertically extendable 2 x 2 pairs whose right column uses digits 0..2.

    The pair set composed with the 0..2 unit pairs loses most members to
    dead-end pruning; the surviving core is small and factors into four
    H-tables (a frozen regression shape in the test suite).
    """
    from .families import base_family

    joined = hjoin_sets(base_family(Shear.STRAIGHT), unit_pairs_012())
    return nondeadend(joined, "vertical")


def fraction_core_tables() -> tuple[HTable, ...]:
    return factor_h(fraction_core(), unique="bottom")


# ---------------------------------------------------------------------------
# digit / interval bridge
# ---------------------------------------------------------------------------


def first_fraction_digit(x: Fraction) -> int:
    """First base-6 fractional digit of x in [0, 1)."""
    if not 0 <= x < 1:
        raise ValueError(f"need 0 <= x < 1, got {x}")
    return int(6 * x)


# ---------------------------------------------------------------------------
# exact orbit sampling: the /6 interval shift
# ---------------------------------------------------------------------------


@dataclass
class SixthShiftReport:
    """Outcome of the exact implication sweep.

    For every sample xi whose 3/2-orbit of fractional parts stays in
    [0, 1/2) up to the horizon, the orbit of xi/6 must stay inside
    [0, 1/6) u [1/3, 2/3).  Samples failing the hypothesis are vacuous.
    """

    horizon: int
    checked: int = 0
    vacuous: int = 0
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


HALF = Fraction(1, 2)
SIXTH = Fraction(1, 6)
THIRD = Fraction(1, 3)
TWO_THIRDS = Fraction(2, 3)


def _orbit_in_half(xi: Fraction, horizon: int) -> bool:
    x = xi
    for _ in range(horizon + 1):
        if not 0 <= x - int(x) < HALF:
            return False
        x = x * 3 / 2
    return True


def verify_sixth_shift(samples: list[Fraction], horizon: int = 40) -> SixthShiftReport:
    report = SixthShiftReport(horizon=horizon)
    for xi in samples:
        if not _orbit_in_half(xi, horizon):
            report.vacuous += 1
            continue
        report.checked += 1
        zeta = xi / 6
        x = zeta
        for i in range(horizon + 1):
            frac = x - int(x)
            if not (0 <= frac < SIXTH or THIRD <= frac < TWO_THIRDS):
                report.counterexamples.append(
                    {"xi": str(xi), "step": i, "fractional_part": str(frac)}
                )
                break
            x = x * 3 / 2
    return report


def deep_survivor(horizon: int) -> Fraction:
    """Some rational whose 3/2-orbit fractional parts stay in [0,1/2).

    Depth-first refinement of exact intervals: each multiplication by 3/2
    splits the current value interval at the half-integer grid; any branch
    that keeps a nonempty sub-interval survives.  The midpoint of a
    surviving depth-`horizon` interval is returned.
    """

    def dfs(lo: Fraction, hi: Fraction, depth: int) -> tuple[Fraction, Fraction] | None:
        if depth == 0:
            return (lo, hi)
        lo2, hi2 = lo * 3 / 2, hi * 3 / 2
        t = int(lo2)
        while Fraction(t) < hi2:
            a = max(lo2, Fraction(t))
            b = min(hi2, Fraction(t) + HALF)
            if a < b:
                got = dfs(a, b, depth - 1)
                if got is not None:
                    return got
            t += 1
        return None

    got = dfs(Fraction(0), HALF, horizon)
    if got is None:
        raise AssertionError(f"no orbit survives {horizon} steps")
    lo, hi = got
    mid = (lo + hi) / 2
    # rewind the surviving value back to the starting point
    return mid / Fraction(3, 2) ** horizon


def sample_rationals(count: int, seed: int, max_den: int = 10_000) -> list[Fraction]:
    """Seeded reproducible rational samples in [0, 1), plus 0 and a survivor."""
    rng = random.Random(seed)
    out = [Fraction(0)]
    while len(out) < count:
        den = rng.randrange(2, max_den)
        num = rng.randrange(0, den)
        out.append(Fraction(num, den))
    return out


# ---------------------------------------------------------------------------
# emptiness probes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ColumnConstraint:
    column: int
    alphabet: frozenset[int]

    def __post_init__(self) -> None:
        if not self.alphabet:
            raise ValueError("constraint alphabet must be nonempty")
        if not self.alphabet <= set(range(6)):
            raise ValueError("constraint alphabet must be base-6 digits")


@dataclass
class ProbeResult:
    """Verdict of one bounded emptiness probe, with a re-checkable certificate."""

    verdict: str  # "empty" | "no-obstruction"
    width: int
    depth: int
    base: str
    constraints: tuple[ColumnConstraint, ...]
    initial_count: int
    prune_trace: tuple[int, ...]  # members remaining after each pruning round
    witness: tuple[tuple[int, ...], ...] | None  # stack rows, top to bottom

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "width": self.width,
            "depth": self.depth,
            "base": self.base,
            "constraints": [
                {"column": c.column, "alphabet": sorted(c.alphabet)}
                for c in self.constraints
            ],
            "initial_count": self.initial_count,
            "prune_trace": list(self.prune_trace),
            "witness": None
            if self.witness is None
            else ["".join(str(d) for d in reversed(r)) for r in self.witness],
        }


def _constrained_pairs(
    width: int, constraints: tuple[ColumnConstraint, ...], base: str
) -> frozenset[Window]:
    if base not in ("full", "0235"):
        raise ValueError(f"bad base {base!r}")
    fam = pair_family(width, Shear.STRAIGHT, last_0235=(base == "0235"))
    keep = []
    for w in fam:
        ok = True
        for c in constraints:
            if not (w.top[c.column] in c.alphabet and w.bottom[c.column] in c.alphabet):
                ok = False
                break
        if ok:
            keep.append(w)
    return frozenset(keep)


def _prune_with_trace(members: frozenset[Window]) -> tuple[frozenset[Window], list[int]]:
    alive = set(members)
    trace: list[int] = []
    while True:
        tops = {w.top for w in alive}
        bottoms = {w.bottom for w in alive}
        nxt = {w for w in alive if w.bottom in tops and w.top in bottoms}
        if nxt == alive:
            return frozenset(alive), trace
        alive = nxt
        trace.append(len(alive))
        if not alive:
            return frozenset(), trace


def emptiness_probe(
    width: int,
    constraints: list[ColumnConstraint] | None = None,
    depth: int = 8,
    base: str = "full",
) -> ProbeResult:
    """Prune the constrained vertical-stacking relation to its recurrent core.

    An empty core certifies that no bi-infinite legal 2-D word satisfies
    the column constraints at this window width (a width-relative
    sufficient condition, nothing more).  Otherwise a stack of `depth`
    rows inside the core is emitted as a witness.
    """
    if width < 1:
        raise ValueError("probe width must be positive")
    if depth < 2:
        raise ValueError("witness depth must be at least 2")
    cons = tuple(constraints or ())
    for c in cons:
        if not 0 <= c.column < width:
            raise ValueError(f"constraint column {c.column} outside width {width}")
    members = _constrained_pairs(width, cons, base)
    core, trace = _prune_with_trace(members)
    if not core:
        return ProbeResult(
            verdict="empty",
            width=width,
            depth=len(trace),
            base=base,
            constraints=cons,
            initial_count=len(members),
            prune_trace=tuple(trace),
            witness=None,
        )
    succ: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for w in core:
        succ.setdefault(w.top, []).append(w.bottom)
    for k in succ:
        succ[k] = sorted(succ[k])
    row = min(succ)
    witness = [row]
    for _ in range(depth - 1):
        row = succ[row][0]
        witness.append(row)
    return ProbeResult(
        verdict="no-obstruction",
        width=width,
        depth=depth,
        base=base,
        constraints=cons,
        initial_count=len(members),
        prune_trace=tuple(trace),
        witness=tuple(witness),
    )


def reverify_probe(result: ProbeResult) -> bool:
    """Re-check a probe certificate from scratch.

    Empty verdicts: re-running the prune from the same constrained set
    must reproduce the empty core with the same trace.  Witnesses: every
    adjacent row pair must be a legal constrained pair (checked against
    the carry relation via fresh enumeration).
    """
    members = _constrained_pairs(result.width, result.constraints, result.base)
    if len(members) != result.initial_count:
        return False
    if result.verdict == "empty":
        core, trace = _prune_with_trace(members)
        return not core and tuple(trace) == result.prune_trace
    if result.witness is None or len(result.witness) != result.depth:
        return False
    fam = _constrained_pairs(result.width, result.constraints, result.base)
    pair_set = {(w.top, w.bottom) for w in fam}
    return all(
        (a, b) in pair_set for a, b in zip(result.witness, result.witness[1:])
    )
