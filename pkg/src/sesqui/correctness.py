"""The column-correctness operator and its minimal automata.

A 3 x 2 window of the straight family pairs a right column (x1, x2, x3)
with a left column (a, b, c); the middle-left digit b turns out to be a
function of the right column alone.  Sliding that function along a word
gives the operator L; words on which L is everywhere defined are called
correct.  Correct words over {0,2,3,5} are exactly the columns the 0235
machinery stacks, so their minimal automata anchor the graph results.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable

from .families import base_family, stacks, pair_family
from .windows import enumerate_windows, nondeadend
from .words import Shear

WordT = tuple[int, ...]


@lru_cache(maxsize=None)
def _triple_witnesses() -> dict[WordT, frozenset[int]]:
    """right column (top-down) -> set of middle-left digits seen in 3 x 2 windows."""
    table: dict[WordT, set[int]] = {}
    for w in enumerate_windows(3, 2):
        triple = w.right_column
        table.setdefault(triple, set()).add(w.left_column[1])
    return {t: frozenset(s) for t, s in table.items()}


def left_digit_witnesses(x1: int, x2: int, x3: int) -> frozenset[int]:
    """All middle-left digits compatible with the right column (x1,x2,x3)."""
    return _triple_witnesses().get((x1, x2, x3), frozenset())


def left_digit(x1: int, x2: int, x3: int) -> int | None:
    """The operator on one window: the unique witness, or None if undefined.

    Uniqueness over all 216 triples is a checked fact, not an assumption.
    """
    w = left_digit_witnesses(x1, x2, x3)
    if len(w) > 1:
        raise AssertionError(f"triple {(x1, x2, x3)} has witnesses {sorted(w)}")
    return next(iter(w)) if w else None


def left_word(word: Iterable[int]) -> WordT | None:
    """Sliding image of a word of length >= 3; None if any window is undefined."""
    w = tuple(word)
    if len(w) < 3:
        raise ValueError("the sliding operator needs length >= 3")
    out = []
    for i in range(len(w) - 2):
        d = left_digit(w[i], w[i + 1], w[i + 2])
        if d is None:
            return None
        out.append(d)
    return tuple(out)


@lru_cache(maxsize=None)
def _short_correct() -> frozenset[WordT]:
    """Correct words of length <= 2: factors of the defined triples."""
    short: set[WordT] = {()}
    for (x1, x2, x3), ws in _triple_witnesses().items():
        if ws:
            short.update({(x1,), (x2,), (x3,), (x1, x2), (x2, x3)})
    return frozenset(short)


def is_correct(word: Iterable[int]) -> bool:
    w = tuple(word)
    if len(w) <= 2:
        return w in _short_correct()
    return left_word(w) is not None


def correct_words(length: int, alphabet: frozenset[int] | None = None) -> frozenset[WordT]:
    """All correct words of exactly the given length (brute force)."""
    digits = sorted(alphabet) if alphabet is not None else list(range(6))
    return frozenset(
        w for w in product(digits, repeat=length) if is_correct(w)
    )


# ---------------------------------------------------------------------------
# minimal automata, all states initial and final
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CorrectnessDfa:
    """Deterministic partial automaton; every state initial and final.

    Accepts a word when it labels some path; every state lies on a cycle.
    """

    states: tuple[int, ...]
    delta: dict[tuple[int, int], int]
    alphabet: tuple[int, ...]
    reading: str  # "top_down" | "bottom_up"

    def letters(self, s: int) -> tuple[int, ...]:
        return tuple(sorted(x for (t, x) in self.delta if t == s))

    def accepts(self, word: Iterable[int]) -> bool:
        w = tuple(word)
        if not w:
            return True
        for s in self.states:
            cur: int | None = s
            for x in w:
                cur = self.delta.get((cur, x))
                if cur is None:
                    break
            else:
                return True
        return False


def build_correct_dfa(alphabet: frozenset[int], reading: str = "top_down") -> CorrectnessDfa:
    """Minimal all-states-initial DFA for the correct words over an alphabet.

    reading="bottom_up" builds the machine for the reversed words (columns
    consumed from the bottom row upward).  Construction: de Bruijn states
    on the correct 2-words, edges from the defined 3-windows, prune
    non-recurrent states, then merge language-equivalent states.  Verified
    against brute force in the test suite.
    """
    if reading not in ("top_down", "bottom_up"):
        raise ValueError(f"bad reading {reading!r}")
    digits = sorted(alphabet)
    triples = [
        t
        for t in product(digits, repeat=3)
        if is_correct(t)
    ]
    if reading == "bottom_up":
        triples = [tuple(reversed(t)) for t in triples]
    # de Bruijn presentation on 2-word states
    delta: dict[tuple[WordT, int], WordT] = {}
    for (a, b, c) in triples:
        delta[((a, b), c)] = (b, c)
    states = {s for s, _ in delta} | set(delta.values())
    # prune to the recurrent part (every state keeps in- and out-edges)
    while True:
        has_out = {s for s in states if any((s, x) in delta for x in digits)}
        has_in = {t for (s, x), t in delta.items() if s in has_out}
        nxt = has_out & has_in
        if nxt == states:
            break
        states = nxt
        delta = {
            (s, x): t for (s, x), t in delta.items() if s in states and t in states
        }
    # merge language-equivalent states (deterministic, all final: bisimulation)
    block: dict[WordT, int] = {s: 0 for s in states}
    while True:
        sigs = {
            s: (
                block[s],
                tuple(
                    sorted(
                        (x, block[delta[(s, x)]])
                        for x in digits
                        if (s, x) in delta
                    )
                ),
            )
            for s in states
        }
        palette = {sig: i for i, sig in enumerate(sorted(set(sigs.values())))}
        new = {s: palette[sigs[s]] for s in states}
        if new == block:
            break
        block = new
    class_delta = {
        (block[s], x): block[t] for (s, x), t in delta.items()
    }
    return CorrectnessDfa(
        states=tuple(sorted(set(block.values()))),
        delta=class_delta,
        alphabet=tuple(digits),
        reading=reading,
    )


# ---------------------------------------------------------------------------
# column laws: stacked pairs vs correct words
# ---------------------------------------------------------------------------


@dataclass
class ColumnLawReport:
    """Exhaustive small-size checks tying stack columns to correct words."""

    height_range: tuple[int, ...]
    depth: int
    violations: list[str]
    containment_reading: str | None
    stack_column_counterexamples: dict[int, int]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_column_laws(n: int = 2, depth: int = 6) -> ColumnLawReport:
    """Checks, exhaustively at small sizes:

    1. right columns of straight k x 2 windows are correct (k <= depth);
    2. left columns of straight pair stacks are among the right columns;
    3. the horizontally extendable stacks of height k are exactly the
       straight k x 2 windows (k <= max(4, n));
    4. every correct {0,2,3,5} word of length <= depth occurs as a leftmost
       column of some stack of the up-shear width-(n+1) family, under a
       reading direction that is resolved computationally and reported.

    The stronger stack form of clause 1 ("right columns of arbitrary pair
    *stacks* are correct") is false: the stack 10/44/11 is a chain of
    legal pairs whose right column (0,4,1) is not a legal window column.
    The per-height counterexample counts are reported, not treated as
    violations.
    """
    violations: list[str] = []
    B = base_family(Shear.STRAIGHT)
    heights = tuple(range(2, depth + 1))

    stack_bad: dict[int, int] = {}
    for h in heights:
        st = stacks(B, h)
        rights = {w.right_column for w in st}
        lefts = {w.left_column for w in st}
        stack_bad[h] = sum(1 for c in rights if not is_correct(c))
        window_rights = {w.right_column for w in enumerate_windows(h, 2)}
        bad = [c for c in sorted(window_rights) if not is_correct(c)]
        if bad:
            violations.append(
                f"height {h}: {len(bad)} incorrect window right columns, e.g. {bad[0]}"
            )
        if not lefts <= rights:
            extra = sorted(lefts - rights)[:3]
            violations.append(f"height {h}: left columns not among right columns, e.g. {extra}")

    for k in range(2, max(4, n) + 1):
        st = stacks(B, k)
        pruned = nondeadend(st, "horizontal")
        direct = enumerate_windows(k, 2)
        if pruned != direct:
            violations.append(
                f"height {k}: extendable stacks ({len(pruned)}) differ from "
                f"windows ({len(direct)})"
            )

    # correct 0235 words as leftmost columns of up-shear stacks
    fam = pair_family(n + 1, Shear.UP)
    reading: str | None = None
    for candidate in ("top_down", "bottom_up"):
        all_ok = True
        for length in range(2, depth + 1):
            want = correct_words(length, frozenset({0, 2, 3, 5}))
            if candidate == "bottom_up":
                want = frozenset(tuple(reversed(w)) for w in want)
            have = {w.left_column for w in stacks(fam, length)}
            if not want <= have:
                all_ok = False
                break
        if all_ok:
            reading = candidate
            break
    if reading is None:
        violations.append(
            "correct {0,2,3,5} words are not all leftmost stack columns under "
            "either reading direction"
        )
    return ColumnLawReport(
        height_range=heights,
        depth=depth,
        violations=violations,
        containment_reading=reading,
        stack_column_counterexamples=stack_bad,
    )
