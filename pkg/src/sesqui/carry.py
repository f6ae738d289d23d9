"""Two-track carry transducer for the columnwise relation 2*(next row) = 3*(row).

Multiplying a base-6 digit stream by 3 produces carries in {0,1,2};
multiplying by 2 produces carries in {0,1}.  A pair of rows (a above b)
satisfies b = (3/2)*a exactly when both multiplications emit the same
digit in every column, so the joint state is the pair (r, s) of the two
carries.  Carries propagate from the least significant column (index 0)
toward more significant ones.
"""

from __future__ import annotations

from functools import lru_cache

CarryState = tuple[int, int]

#: every a priori possible carry pair (r, s): r is the x3 carry, s the x2 carry
ALL_CARRY_STATES: tuple[CarryState, ...] = tuple(
    (r, s) for r in range(3) for s in range(2)
)


def carry_step(state: CarryState, a: int, b: int) -> CarryState | None:
    """Advance the carry pair across one column with digit a above digit b.

    Returns the outgoing carry pair, or None when no carry-out makes the
    column consistent (3*a + r and 2*b + s emit different digits).
    """
    r, s = state
    t3 = 3 * a + r
    t2 = 2 * b + s
    if t3 % 6 != t2 % 6:
        return None
    return (t3 // 6, t2 // 6)


@lru_cache(maxsize=None)
def carry_edges() -> dict[CarryState, dict[tuple[int, int], CarryState]]:
    """Full transition table: state -> {(a, b) -> next state}."""
    table: dict[CarryState, dict[tuple[int, int], CarryState]] = {}
    for state in ALL_CARRY_STATES:
        out: dict[tuple[int, int], CarryState] = {}
        for a in range(6):
            for b in range(6):
                nxt = carry_step(state, a, b)
                if nxt is not None:
                    out[(a, b)] = nxt
        table[state] = out
    return table


@lru_cache(maxsize=None)
def recurrent_carry_states() -> frozenset[CarryState]:
    """Carry pairs lying on a cycle of the transition graph.

    A digit column of a legal bi-infinite row pair must be crossable by a
    carry run that extends forever in both directions, so only states with
    both a predecessor and a successor inside the surviving set count.
    Computed by iterated pruning; nothing is assumed about the outcome.
    """
    alive = set(ALL_CARRY_STATES)
    edges = carry_edges()
    while True:
        has_out = {s for s in alive if any(t in alive for t in edges[s].values())}
        has_in = {
            t
            for s in alive
            for t in edges[s].values()
            if t in alive and s in has_out
        }
        nxt = has_out & has_in
        if nxt == alive:
            return frozenset(alive)
        alive = nxt
        if not alive:
            return frozenset()


def legal_digit_pairs(require_recurrent: bool = True) -> frozenset[tuple[int, int]]:
    """All (a, b) digit pairs crossable by some recurrent-to-recurrent step."""
    core = recurrent_carry_states() if require_recurrent else frozenset(ALL_CARRY_STATES)
    edges = carry_edges()
    pairs = {
        ab
        for s in core
        for ab, t in edges[s].items()
        if t in core
    }
    return frozenset(pairs)
