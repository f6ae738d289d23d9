"""Automata over the 0235-pair rows: folding, determinization, kernel.

The production graph turns into a partial automaton by letting each edge
consume the leading (leftmost) digit of its target row; the two successors
of any row differ exactly there, so every state has exactly two defined
letters and the transition map is deterministic.  All states are initial
and all are final, and the empty word is not part of any state language.

Reading convention: a path spells the leading digits of successive rows
going downward, i.e. a stack's leftmost column read top to bottom (minus
the starting row's own digit).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Hashable, Iterable

from .graphs import Digraph, FoldMap, fold, production_graph

State = Hashable


@dataclass(frozen=True)
class PartialAutomaton:
    """Deterministic partial automaton; all states initial and final."""

    states: tuple[State, ...]
    delta: dict[tuple[State, int], State]

    def letters(self, s: State) -> tuple[int, ...]:
        return tuple(sorted(x for (t, x) in self.delta if t == s))

    def successor_map(self) -> dict[State, dict[int, State]]:
        out: dict[State, dict[int, State]] = {s: {} for s in self.states}
        for (s, x), t in self.delta.items():
            out[s][x] = t
        return out

    def read(self, s: State, word: Iterable[int]) -> State | None:
        for x in word:
            nxt = self.delta.get((s, x))
            if nxt is None:
                return None
            s = nxt
        return s

    def accepts(self, word: tuple[int, ...]) -> bool:
        """Nonempty word readable from some state."""
        if not word:
            return False
        return any(self.read(s, word) is not None for s in self.states)

    def words_up_to(self, max_len: int) -> frozenset[tuple[int, ...]]:
        """All nonempty readable words of length <= max_len (brute force)."""
        succ = self.successor_map()
        out: set[tuple[int, ...]] = set()
        frontier: dict[tuple[int, ...], set[State]] = {(): set(self.states)}
        for _ in range(max_len):
            nxt: dict[tuple[int, ...], set[State]] = {}
            for word, ends in frontier.items():
                for s in ends:
                    for x, t in succ[s].items():
                        nxt.setdefault(word + (x,), set()).add(t)
            out.update(nxt)
            frontier = nxt
        return frozenset(out)


class ConstructionError(ValueError):
    pass


@lru_cache(maxsize=None)
def build_automaton(n: int) -> PartialAutomaton:
    """Automaton on the width-n production graph; letters = leading digits.

    Fails if two out-edges of one state would consume the same letter
    (that would falsify determinism of the construction).
    """
    g = production_graph(n)
    succ = g.successors()
    delta: dict[tuple[State, int], State] = {}
    for s in g.vertices:
        for t in succ[s]:
            letter = t[-1]  # leading digit of the successor row
            if (s, letter) in delta:
                raise ConstructionError(
                    f"state {s} has two out-edges labelled {letter}"
                )
            delta[(s, letter)] = t
    aut = PartialAutomaton(tuple(g.vertices), delta)
    for s in aut.states:
        if len(aut.letters(s)) != 2:
            raise ConstructionError(f"state {s} defines {len(aut.letters(s))} letters")
    return aut


def fold_automaton(aut: PartialAutomaton) -> tuple[PartialAutomaton, FoldMap]:
    """Quotient by the fold pairing of the underlying graph.

    Fold partners have identical transition functions (same letters to the
    same target states), so the quotient transitions are well defined.
    """
    g = Digraph.from_edges(
        frozenset((s, t) for (s, _), t in aut.delta.items()),
        vertices=aut.states,
    )
    fm = fold(g)
    succ = aut.successor_map()
    for a, b in fm.pairs:
        if succ[a] != succ[b]:
            raise ConstructionError(f"fold partners {a}, {b} disagree on delta")
    delta = {
        (fm.classes[s], x): fm.classes[t] for (s, x), t in aut.delta.items()
    }
    states = tuple(sorted({fm.classes[s] for s in aut.states}))
    return PartialAutomaton(states, delta), fm


def language_partition(aut: PartialAutomaton) -> tuple[frozenset[State], ...]:
    """Partition of states by equality of accepted languages.

    All states are final and transitions deterministic, so language
    equality is exactly bisimilarity: refine by defined-letter sets, then
    by the classes the letters lead to, until stable.
    """
    succ = aut.successor_map()
    block: dict[State, int] = {s: 0 for s in aut.states}
    while True:
        sigs = {
            s: (block[s], tuple(sorted((x, block[t]) for x, t in succ[s].items())))
            for s in aut.states
        }
        palette = {sig: i for i, sig in enumerate(sorted(set(sigs.values())))}
        new = {s: palette[sigs[s]] for s in aut.states}
        if new == block:
            break
        block = new
    groups: dict[int, set[State]] = {}
    for s, b in block.items():
        groups.setdefault(b, set()).add(s)
    return tuple(sorted(frozenset(g) for g in groups.values()))


# ---------------------------------------------------------------------------
# determinization and minimization
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Dfa:
    """Minimal initial partial DFA; the implicit reject sink is not a state."""

    n_states: int
    initial: int
    delta: dict[tuple[int, int], int]
    accepting: frozenset[int]

    def read(self, word: Iterable[int]) -> int | None:
        s = self.initial
        for x in word:
            nxt = self.delta.get((s, x))
            if nxt is None:
                return None
            s = nxt
        return s

    def accepts(self, word: Iterable[int]) -> bool:
        s = self.read(word)
        return s is not None and s in self.accepting

    def words_up_to(self, max_len: int) -> frozenset[tuple[int, ...]]:
        out: set[tuple[int, ...]] = set()
        frontier = {((), self.initial)}
        for _ in range(max_len):
            nxt = set()
            for word, s in frontier:
                for x in range(6):
                    t = self.delta.get((s, x))
                    if t is not None:
                        w2 = word + (x,)
                        nxt.add((w2, t))
                        if t in self.accepting:
                            out.add(w2)
            frontier = nxt
        return frozenset(out)


def determinize_minimize(aut: PartialAutomaton) -> Dfa:
    """Minimal initial DFA for the union of all state languages.

    Subset construction starts from the full state set (every state is
    initial); nonempty subsets accept.  A fresh initial node keeps the
    empty word out of the language.  Moore refinement then minimizes over
    the partial transition structure, with the reject sink left implicit.
    """
    succ = aut.successor_map()
    full = frozenset(aut.states)

    subsets: dict[frozenset, int] = {}
    trans: dict[tuple[int, int], int] = {}

    def subset_id(ss: frozenset) -> int:
        if ss not in subsets:
            subsets[ss] = len(subsets)
        return subsets[ss]

    stack = [full]
    subset_id(full)
    seen = {full}
    while stack:
        ss = stack.pop()
        images: dict[int, set] = {}
        for s in ss:
            for x, t in succ[s].items():
                images.setdefault(x, set()).add(t)
        for x, img in images.items():
            f = frozenset(img)
            trans[(subset_id(ss), x)] = subset_id(f)
            if f not in seen:
                seen.add(f)
                stack.append(f)

    # fresh initial node: same moves as the full set, but non-accepting
    init = len(subsets)
    n = init + 1
    delta: dict[tuple[int, int], int] = dict(trans)
    for x in range(6):
        t = trans.get((subsets[full], x))
        if t is not None:
            delta[(init, x)] = t
    accepting = frozenset(range(init))  # every subset state accepts

    # Moore minimization on the partial DFA (sink implicit, class -1)
    block = {s: (1 if s in accepting else 0) for s in range(n)}
    while True:
        sigs = {}
        for s in range(n):
            row = tuple(block.get(delta.get((s, x)), -1) for x in range(6))
            sigs[s] = (block[s], row)
        palette = {sig: i for i, sig in enumerate(sorted(set(sigs.values())))}
        new = {s: palette[sigs[s]] for s in range(n)}
        if new == block:
            break
        block = new

    # rebuild on classes, dropping unreachable ones
    class_of = block
    init_c = class_of[init]
    delta_c: dict[tuple[int, int], int] = {}
    for (s, x), t in delta.items():
        delta_c[(class_of[s], x)] = class_of[t]
    acc_c = frozenset(class_of[s] for s in accepting)
    reachable = {init_c}
    frontier = [init_c]
    while frontier:
        s = frontier.pop()
        for x in range(6):
            t = delta_c.get((s, x))
            if t is not None and t not in reachable:
                reachable.add(t)
                frontier.append(t)
    order = {c: i for i, c in enumerate(sorted(reachable))}
    return Dfa(
        n_states=len(order),
        initial=order[init_c],
        delta={
            (order[s], x): order[t]
            for (s, x), t in delta_c.items()
            if s in reachable and t in reachable
        },
        accepting=frozenset(order[c] for c in acc_c if c in reachable),
    )


# ---------------------------------------------------------------------------
# kernel, absorption depths
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KernelReport:
    """Cycle states of a DFA plus how fast paths get absorbed into them."""

    kernel: frozenset[int]
    absorb_all: int  # least L: every defined path of length >= L ends inside
    absorb_zero: int  # least t >= 1: reading 0^t from the start lands inside
    kernel_absorbing: bool


class KernelError(ValueError):
    pass


def kernel_report(dfa: Dfa, max_rounds: int = 10_000) -> KernelReport:
    """Kernel = states on cycles; depths computed by exact layer iteration.

    The layer sets (states reachable by words of exactly length L) are
    eventually periodic; absorb_all is the first L from which every layer
    stays inside the kernel.  A persistent non-kernel layer would make the
    depth undefined and raises KernelError with the repeating layer.
    """
    # states on cycles: Tarjan-free approach, iteratively strip sources/sinks
    succ: dict[int, set[int]] = {s: set() for s in range(dfa.n_states)}
    for (s, _), t in dfa.delta.items():
        succ[s].add(t)
    alive = set(range(dfa.n_states))
    while True:
        has_out = {s for s in alive if succ[s] & alive}
        has_in = {t for s in has_out for t in succ[s] if t in alive}
        nxt = has_out & has_in
        if nxt == alive:
            break
        alive = nxt
    # alive = states on bi-infinite paths; kernel wants states on cycles
    kernel = set()
    for s in alive:
        # s is on a cycle iff s is reachable from its own successors
        seen = {t for t in succ[s] if t in alive}
        frontier = set(seen)
        while frontier and s not in seen:
            frontier = {
                u for t in frontier for u in succ[t] if u in alive and u not in seen
            }
            seen |= frontier
        if s in seen:
            kernel.add(s)
    kernel_absorbing = all(
        t in kernel for (s, _), t in dfa.delta.items() if s in kernel
    )

    # absorb_all by layer iteration with cycle detection
    layer = frozenset([dfa.initial])
    seen_layers: dict[frozenset, int] = {layer: 0}
    layers = [layer]
    depth = None
    for step in range(1, max_rounds):
        layer = frozenset(
            dfa.delta[(s, x)]
            for s in layer
            for x in range(6)
            if (s, x) in dfa.delta
        )
        if layer in seen_layers:
            start_cycle = seen_layers[layer]
            cyc = layers[start_cycle:]
            if all(l <= kernel for l in cyc):
                candidates = [
                    i for i, l in enumerate(layers) if all(m <= kernel for m in layers[i:])
                ]
                depth = candidates[0] if candidates else start_cycle
            else:
                raise KernelError(
                    f"layers cycle outside the kernel from length {start_cycle}"
                )
            break
        seen_layers[layer] = step
        layers.append(layer)
    if depth is None:
        raise KernelError("layer iteration did not close")

    s = dfa.initial
    absorb_zero = None
    for t in range(1, max_rounds):
        s = dfa.delta.get((s, 0))
        if s is None:
            raise KernelError("zero word dies before reaching the kernel")
        if s in kernel:
            absorb_zero = t
            break
    if absorb_zero is None:
        raise KernelError("zero word never reaches the kernel")
    return KernelReport(
        kernel=frozenset(kernel),
        absorb_all=depth,
        absorb_zero=absorb_zero,
        kernel_absorbing=kernel_absorbing,
    )


def kernel_automaton(dfa: Dfa, kernel: frozenset[int]) -> PartialAutomaton:
    """Subautomaton induced on the kernel states."""
    delta = {
        (s, x): t
        for (s, x), t in dfa.delta.items()
        if s in kernel and t in kernel
    }
    return PartialAutomaton(tuple(sorted(kernel)), delta)


def automata_isomorphic(a: PartialAutomaton, b: PartialAutomaton) -> bool:
    """Transition-labeled isomorphism of deterministic partial automata."""
    from .graphs import Digraph, find_isomorphism

    if len(a.states) != len(b.states) or len(a.delta) != len(b.delta):
        return False

    def to_graph(aut: PartialAutomaton):
        edges = {}
        for (s, x), t in aut.delta.items():
            edges.setdefault((s, t), set()).add(x)
        labels = {e: tuple(sorted(xs)) for e, xs in edges.items()}
        g = Digraph.from_edges(frozenset(labels), vertices=aut.states)
        return g, labels

    g1, l1 = to_graph(a)
    g2, l2 = to_graph(b)
    return find_isomorphism(g1, g2, l1, l2) is not None
