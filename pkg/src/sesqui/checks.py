"""Registry of verification checks over every module.

Each check is a named, parameterized, self-contained verification of one
computed law (a count, a structural predicate, an isomorphism, ...).  The
`verify` CLI subcommand runs a scope of these and reports one line per
check; scopes group the checks by the layer of the theory they belong to
(s2 word basics, s3 tables and the correctness operator, s4 restricted
families, s5 graphs, s6 automata, s7 probes).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .words import Shear

SCOPES = ("s2", "s3", "s4", "s5", "s6", "s7")

SCOPE_TOPICS = {
    "s2": "windows",
    "s3": "tables",
    "s4": "restricted-families",
    "s5": "graphs",
    "s6": "automata",
    "s7": "probes",
}


@dataclass
class CheckResult:
    check_id: str
    scope: str
    description: str
    ok: bool
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "scope": self.scope,
            "description": self.description,
            "ok": self.ok,
            "details": self.details,
        }


@dataclass(frozen=True)
class Check:
    check_id: str
    scope: str
    description: str
    fn: Callable[[], tuple[bool, dict]]


_REGISTRY: list[Check] = []


def _register(check_id: str, scope: str, description: str):
    def wrap(fn):
        _REGISTRY.append(Check(check_id, scope, description, fn))
        return fn

    return wrap


def registry() -> tuple[Check, ...]:
    return tuple(_REGISTRY)


def run_checks(scope: str = "all", threads: int = 1) -> list[CheckResult]:
    """Run a scope of checks; report order always follows the registry.

    `threads` > 1 evaluates independent checks concurrently (results are
    identical regardless of the worker count).
    """
    if scope != "all" and scope not in SCOPES and scope not in SCOPE_TOPICS.values():
        raise ValueError(f"unknown scope {scope!r}")
    wanted = [
        c for c in _REGISTRY if scope in ("all", c.scope, SCOPE_TOPICS[c.scope])
    ]

    def run_one(c: Check) -> CheckResult:
        try:
            ok, details = c.fn()
        except Exception as exc:  # a crashed check is a failed check
            ok, details = False, {"error": f"{type(exc).__name__}: {exc}"}
        return CheckResult(c.check_id, c.scope, c.description, ok, details)

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(run_one, wanted))
    return [run_one(c) for c in wanted]


# ---------------------------------------------------------------------------
# s2: carry arithmetic, windows, joins, dead ends
# ---------------------------------------------------------------------------


@_register("carry-recurrent", "s2", "all six carry pairs lie on cycles")
def _check_carry():
    from .carry import ALL_CARRY_STATES, recurrent_carry_states

    rec = recurrent_carry_states()
    return rec == frozenset(ALL_CARRY_STATES), {"recurrent": sorted(rec)}


@_register("unit-pair-table", "s2", "single-column pairs form the three expected blocks")
def _check_unit_pairs():
    from .families import unit_pairs
    from .tables import factor_h

    tables = factor_h(unit_pairs(), unique="bottom")
    shape = sorted((tuple(r[0] for r in t.tops), tuple(r[0] for r in t.bottoms)) for t in tables)
    want = [
        ((0, 1, 2, 3, 4, 5), (1, 4)),
        ((0, 2, 4), (0, 3)),
        ((1, 3, 5), (2, 5)),
    ]
    return shape == want, {"tables": shape}


@_register("window-counts", "s2", "small straight window counts: 6 / 24 / 144 with 36 rows")
def _check_window_counts():
    from .families import distinct_rows
    from .windows import enumerate_windows

    c11 = len(enumerate_windows(1, 1))
    c21 = len(enumerate_windows(2, 1))
    b = enumerate_windows(2, 2)
    ok = c11 == 6 and c21 == 24 and len(b) == 144 and len(distinct_rows(b)) == 36
    return ok, {"1x1": c11, "2x1": c21, "2x2": len(b), "rows_2x2": len(distinct_rows(b))}


@_register("oracle-equivalence", "s2", "transfer windows equal the trapezoid-orbit union")
def _check_oracle():
    from .windows import enumerate_windows, trapezoid_union

    sizes = [(2, 2), (2, 3), (3, 2)]
    diffs = {}
    for n, m in sizes:
        diffs[f"{n}x{m}"] = trapezoid_union(n, m) == enumerate_windows(n, m)
    return all(diffs.values()), diffs


@_register("composition-law", "s2", "width-3 windows decompose as joins of 2x2 windows")
def _check_composition():
    from .families import base_family
    from .windows import enumerate_windows
    from .words import hjoin_sets

    out = {}
    for sh in Shear:
        b = base_family(sh)
        out[sh.value] = enumerate_windows(2, 3, sh) == hjoin_sets(b, b)
    return all(out.values()), out


@_register("duality-families", "s2", "every 2x2 family is invariant under x -> 5-x")
def _check_duality():
    from .families import base_family
    from .words import dual

    out = {}
    for sh in Shear:
        fam = base_family(sh)
        out[sh.value] = frozenset(dual(w) for w in fam) == fam
    return all(out.values()), out


@_register("dead-end-free", "s2", "window families have no horizontal or vertical dead ends")
def _check_dead_ends():
    from .windows import enumerate_windows, nondeadend

    out = {}
    for n, m in ((2, 2), (3, 2), (2, 3)):
        fam = enumerate_windows(n, m)
        out[f"{n}x{m}"] = (
            nondeadend(fam, "horizontal") == fam and nondeadend(fam, "vertical") == fam
        )
    return all(out.values()), out


@_register("stack-asymmetry", "s2", "3x2 windows are a proper subset of pair stacks")
def _check_asymmetry():
    from .families import base_family, stacks
    from .windows import enumerate_windows

    st = stacks(base_family(Shear.STRAIGHT), 3)
    win = enumerate_windows(3, 2)
    ok = win < st
    return ok, {"stacks": len(st), "windows": len(win)}


@_register("shear-orientation", "s2", "the adopted shear orientation satisfies the 24-row law")
def _check_orientation():
    from .windows import shear_resolution_metadata

    meta = shear_resolution_metadata()
    chosen = meta["shear_orientation"]
    ok = meta["rows_2x2_by_orientation"][chosen] == 24
    return ok, meta


@_register("row-language-symmetry", "s2", "top and bottom rows coincide for join powers")
def _check_row_symmetry():
    from .families import pair_family

    out = {}
    for sh in (Shear.STRAIGHT, Shear.UP):
        for n in (2, 3, 4):
            fam = pair_family(n, sh)
            tops = {w.top for w in fam}
            bots = {w.bottom for w in fam}
            out[f"{sh.value}-n{n}"] = tops == bots
    return all(out.values()), out


# ---------------------------------------------------------------------------
# s3: table factorizations and the correctness operator
# ---------------------------------------------------------------------------


@_register("family-structure-plain", "s3", "plain family table laws hold for widths 2..4")
def _check_family_plain():
    from .tables import verify_family_structure

    out = {}
    for sh in (Shear.STRAIGHT, Shear.UP):
        for n in (2, 3, 4):
            rep = verify_family_structure(n, sh)
            out[f"{sh.value}-n{n}"] = rep.ok or rep.violations[:2]
    return all(v is True for v in out.values()), out


@_register("split-counts", "s3", "splitting six-top tables: 18 -> 24 straight, 12 -> 16 up")
def _check_split():
    from .families import pair_family
    from .tables import factor_h, split_h14

    t_s = factor_h(pair_family(2, Shear.STRAIGHT), unique="bottom")
    t_u = factor_h(pair_family(2, Shear.UP), unique="bottom")
    counts = {
        "straight": (len(t_s), len(split_h14(t_s))),
        "up": (len(t_u), len(split_h14(t_u))),
    }
    ok = counts["straight"] == (18, 24) and counts["up"] == (12, 16)
    return ok, counts


@_register("down-family-tables", "s3", "the descending family factors with unique tops")
def _check_down_tables():
    from collections import Counter

    from .families import pair_family
    from .tables import factor_h, tables_pairs

    fam = pair_family(2, Shear.DOWN)
    tabs = factor_h(fam, unique="top")
    hist = dict(Counter((len(t.tops), len(t.bottoms)) for t in tabs))
    exact = tables_pairs(tabs) == frozenset((w.top, w.bottom) for w in fam)
    ok = exact and len(tabs) == 12 and hist == {(3, 4): 6, (3, 8): 6}
    return ok, {"tables": len(tabs), "shape_histogram": {str(k): v for k, v in hist.items()}, "exact": exact}


@_register("operator-function", "s3", "the left-digit operator is single-valued on all 216 windows")
def _check_L_function():
    from itertools import product

    from .correctness import left_digit_witnesses

    sizes = [len(left_digit_witnesses(*t)) for t in product(range(6), repeat=3)]
    return max(sizes) <= 1, {"defined": sum(1 for s in sizes if s), "max_witnesses": max(sizes)}


@_register("operator-closure", "s3", "images of correct words stay correct (lengths 3..6)")
def _check_closure():
    from itertools import product

    from .correctness import left_word

    for length in range(3, 7):
        for w in product(range(6), repeat=length):
            img = left_word(w)
            if img is not None and len(img) >= 3 and left_word(img) is None:
                return False, {"counterexample": w}
    return True, {"lengths": [3, 4, 5, 6]}


@_register("middle-digit-uniqueness", "s3", "shared columns pin the middle digit of the other column")
def _check_middle_digit():
    from .windows import enumerate_windows

    by_right: dict[tuple, set[int]] = {}
    for w in enumerate_windows(3, 2):
        by_right.setdefault(w.right_column, set()).add(w.left_column[1])
    c1 = all(len(v) == 1 for v in by_right.values())

    by_bottom: dict[tuple, set[int]] = {}
    by_top: dict[tuple, set[int]] = {}
    for w in enumerate_windows(2, 3):
        by_bottom.setdefault(w.bottom, set()).add(w.top[1])
        by_top.setdefault(w.top, set()).add(w.bottom[1])
    c2 = all(len(v) == 1 for v in by_bottom.values())
    c3 = all(len(v) == 1 for v in by_top.values())
    return c1 and c2 and c3, {"right_pins_mid_left": c1, "bottom_pins_mid_top": c2, "top_pins_mid_bottom": c3}


@_register("correct-dfa", "s3", "minimal correctness automata match brute force (lengths <= 8)")
def _check_correct_dfa():
    from itertools import product

    from .correctness import build_correct_dfa, is_correct

    out = {}
    for alpha in (frozenset({0, 2, 3, 5}), frozenset(range(6))):
        digits = sorted(alpha)
        for reading in ("top_down", "bottom_up"):
            dfa = build_correct_dfa(alpha, reading)
            ok = True
            for length in range(0, 9 if len(alpha) == 4 else 7):
                for w in product(digits, repeat=length):
                    want = is_correct(w if reading == "top_down" else tuple(reversed(w)))
                    if dfa.accepts(w) != want:
                        ok = False
                        break
                if not ok:
                    break
            key = f"{''.join(map(str, digits))}-{reading}"
            out[key] = ok and all(len(dfa.letters(s)) > 0 for s in dfa.states)
    return all(out.values()), out


@_register("correct-dfa-outletters", "s3", "bottom-up 0235 automaton emits {0,2} or {3,5} per state")
def _check_outletters():
    from .correctness import build_correct_dfa

    dfa = build_correct_dfa(frozenset({0, 2, 3, 5}), "bottom_up")
    sets = sorted({dfa.letters(s) for s in dfa.states})
    return all(s in ((0, 2), (3, 5)) for s in sets), {"out_letter_sets": sets}


@_register("column-laws", "s3", "window columns are correct; stack columns nest; extendable stacks are windows")
def _check_column_laws():
    from .correctness import verify_column_laws

    rep = verify_column_laws(2, 6)
    return rep.ok and rep.containment_reading is not None, {
        "violations": rep.violations,
        "containment_reading": rep.containment_reading,
        "stack_column_counterexamples": rep.stack_column_counterexamples,
    }


# ---------------------------------------------------------------------------
# s4: 0235-restricted families
# ---------------------------------------------------------------------------


@_register("family-structure-0235", "s4", "0235 family table laws hold for widths 2..4")
def _check_family_0235():
    from .tables import verify_family_structure

    out = {}
    for sh in (Shear.STRAIGHT, Shear.UP):
        for n in (2, 3, 4):
            rep = verify_family_structure(n, sh, with_0235=True)
            out[f"{sh.value}-n{n}"] = rep.ok or rep.violations[:2]
    return all(v is True for v in out.values()), out


@_register("straight-0235-profile", "s4", "straight 0235 tables: three tops, two bottoms, (4/3)*6^(n-1) many")
def _check_straight_0235_profile():
    from .families import pair_family
    from .tables import factor_h

    out = {}
    for n in (2, 3, 4):
        tabs = factor_h(pair_family(n, Shear.STRAIGHT, last_0235=True), unique="bottom")
        out[f"n{n}"] = (
            len(tabs) == 8 * 6 ** (n - 2)
            and all(len(t.tops) == 3 and len(t.bottoms) == 2 for t in tabs)
        )
    return all(out.values()), out


@_register("leading-determinism", "s4", "equal tops force equal bottoms except the leftmost digit")
def _check_cor10():
    from .families import pair_family

    out = {}
    for sh in (Shear.STRAIGHT, Shear.UP):
        for n in (2, 3, 4):
            fam = pair_family(n, sh, last_0235=True)
            fib: dict[tuple, set[tuple]] = {}
            for w in fam:
                fib.setdefault(w.top, set()).add(w.bottom[:-1])
            out[f"{sh.value}-n{n}"] = all(len(v) == 1 for v in fib.values())
    return all(out.values()), out


@_register("triangle-bijection", "s4", "triangles: 0235 vertical sides biject with diagonal sides")
def _check_triangles():
    from .windows import enumerate_windows

    out = {}
    for k in (0, 1, 2):
        h, w = 2 * k + 1, k + 1
        tris = set()
        for win in enumerate_windows(h, w):
            cells = tuple(tuple(win.rows[i][j] for i in range(j, h - j)) for j in range(w))
            tris.add(cells)
        tris = {t for t in tris if all(d not in (1, 4) for d in t[0])}
        verts: dict[tuple, set] = {}
        diags: dict[tuple, set] = {}
        for t in tris:
            verts.setdefault(t[0], set()).add(t)
            diags.setdefault(tuple(t[j][0] for j in range(w)), set()).add(t)
        out[f"height{h}"] = (
            all(len(s) == 1 for s in verts.values())
            and all(len(s) == 1 for s in diags.values())
            and len(verts) == len(diags) == 4 ** (k + 1)
        )
    return all(out.values()), out


@_register("square-shadow", "s4", "square stacks: top row determines the right column, columns exhaust the chains")
def _check_squares():
    from .graphs import production_graph
    from .families import unit_pairs_0235

    rel: dict[int, set[int]] = {}
    for w in unit_pairs_0235():
        rel.setdefault(w.top[0], set()).add(w.bottom[0])
    out = {}
    for width in (2, 3, 4):
        g = production_graph(width)
        succ = g.successors()
        sts = [(v,) for v in g.vertices]
        for _ in range(width - 1):
            sts = [s + (t,) for s in sts for t in succ[s[-1]]]
        tops: dict[tuple, set] = {}
        rcols = set()
        for s in sts:
            rcol = tuple(r[0] for r in s)
            rcols.add(rcol)
            tops.setdefault(s[0], set()).add(rcol)
        chains = [(d,) for d in (0, 2, 3, 5)]
        for _ in range(width - 1):
            chains = [c + (e,) for c in chains for e in rel[c[-1]]]
        out[f"w{width}"] = all(len(v) == 1 for v in tops.values()) and rcols == set(chains)
    return all(out.values()), out


# ---------------------------------------------------------------------------
# s5: graphs
# ---------------------------------------------------------------------------


@_register("variant-selection", "s5", "the up-shear 0235 family carries the graph laws")
def _check_variant():
    from .graphs import variant_selection

    meta = variant_selection()
    return meta["selected"] == "up", meta


@_register("graph-regular", "s5", "production graphs are 2-in/2-out (widths 1..4)")
def _check_regular():
    from .graphs import production_graph

    out = {}
    for n in (1, 2, 3, 4):
        g = production_graph(n)
        out[f"n{n}"] = g.is_regular(2) and len(g.vertices) == 4**n
    return all(out.values()), out


@_register("fold-sizes", "s5", "folding halves vertices and edges; the width-2 quotient has 8 vertices")
def _check_fold_sizes():
    from .graphs import fold, production_graph

    out = {}
    for n in (2, 3, 4):
        g = production_graph(n)
        f = fold(g)
        out[f"n{n}"] = (
            len(f.quotient.vertices) == len(g.vertices) // 2
            and len(f.quotient.edges) == len(g.edges) // 2
        )
    g2 = fold(production_graph(2))
    out["quotient_n2_vertices"] = len(g2.quotient.vertices)
    return all(v is True for k, v in out.items() if k.startswith("n")) and out[
        "quotient_n2_vertices"
    ] == 8, out


@_register("double-fold", "s5", "two folds undo one width increment (widths 3..4)")
def _check_double_fold():
    from .graphs import find_isomorphism, fold, production_graph

    out = {}
    for n in (2, 3, 4):
        g = production_graph(n)
        q = fold(fold(g).quotient).quotient
        out[f"n{n}"] = find_isomorphism(q, production_graph(n - 1)) is not None
    return all(out.values()), out


@_register("debruijn-iso", "s5", "production graphs match the de Bruijn graphs (widths 1..4)")
def _check_gamma_iso():
    from .graphs import debruijn_graph, find_isomorphism, production_graph

    out = {}
    for n in (1, 2, 3, 4):
        out[f"n{n}"] = find_isomorphism(production_graph(n), debruijn_graph(n)) is not None
    return all(out.values()), out


@_register("reverse-iso", "s5", "production graphs match their edge reversals (widths 1..4)")
def _check_reverse_iso():
    from .graphs import find_isomorphism, production_graph

    out = {}
    for n in (1, 2, 3, 4):
        g = production_graph(n)
        out[f"n{n}"] = find_isomorphism(g, g.reverse()) is not None
    return all(out.values()), out


@_register("dual-automorphism", "s5", "digit complement is a graph automorphism; a broken graph fails")
def _check_dual_auto():
    from .graphs import Digraph, dual_respects_edges, production_graph

    out = {}
    for n in (2, 3, 4):
        out[f"n{n}"] = dual_respects_edges(production_graph(n))
    g = production_graph(2)
    removed = next(iter(sorted(g.edges)))
    broken = Digraph(g.vertices, g.edges - {removed})
    out["negative_control"] = not dual_respects_edges(broken)
    return all(out.values()), out


# ---------------------------------------------------------------------------
# s6: automata
# ---------------------------------------------------------------------------


@_register("automaton-two-letters", "s6", "every state defines exactly two letters (widths 1..4)")
def _check_two_letters():
    from .automata import build_automaton

    out = {}
    for n in (1, 2, 3, 4):
        a = build_automaton(n)
        out[f"n{n}"] = all(len(a.letters(s)) == 2 for s in a.states)
    return all(out.values()), out


@_register("folded-languages-distinct", "s6", "folded automata have pairwise distinct state languages")
def _check_folded_distinct():
    from .automata import build_automaton, fold_automaton, language_partition

    out = {}
    for n in (1, 2, 3, 4):
        folded, _ = fold_automaton(build_automaton(n))
        part = language_partition(folded)
        out[f"n{n}"] = all(len(c) == 1 for c in part)
    return all(out.values()), out


@_register("unfolded-language-classes", "s6", "state-language classes of the unfolded automata are the fold pairs")
def _check_partition_pairs():
    from .automata import build_automaton, fold_automaton, language_partition

    out = {}
    for n in (1, 2, 3):
        a = build_automaton(n)
        _, fm = fold_automaton(a)
        part = {frozenset(c) for c in language_partition(a)}
        out[f"n{n}"] = part == {frozenset(p) for p in fm.pairs}
    return all(out.values()), out


@_register("dfa-language", "s6", "minimal DFA language equals the brute-force union (lengths <= 8)")
def _check_dfa_language():
    from .automata import build_automaton, determinize_minimize

    out = {}
    for n in (1, 2, 3):
        a = build_automaton(n)
        d = determinize_minimize(a)
        out[f"n{n}"] = d.words_up_to(8) == a.words_up_to(8)
    return all(out.values()), out


@_register("kernel-structure", "s6", "DFA kernels are absorbing and match the folded automata")
def _check_kernel():
    from .automata import (
        automata_isomorphic,
        build_automaton,
        determinize_minimize,
        fold_automaton,
        kernel_automaton,
        kernel_report,
    )

    out = {}
    for n in (1, 2, 3):
        a = build_automaton(n)
        d = determinize_minimize(a)
        kr = kernel_report(d)
        k = kernel_automaton(d, kr.kernel)
        folded, _ = fold_automaton(a)
        out[f"n{n}"] = {
            "kernel_size": len(kr.kernel),
            "absorbing": kr.kernel_absorbing,
            "isomorphic_to_folded": automata_isomorphic(k, folded),
            "isomorphic_to_unfolded": automata_isomorphic(k, a),
        }
    ok = all(
        v["absorbing"] and v["isomorphic_to_folded"] and not v["isomorphic_to_unfolded"]
        for v in out.values()
    )
    return ok, out


@_register("absorption-depths", "s6", "frozen absorption depth table for widths 1..4")
def _check_depths():
    from .automata import build_automaton, determinize_minimize, kernel_report

    want = {1: (1, 1), 2: (5, 3), 3: (11, 6), 4: (17, 10)}
    got = {}
    for n in want:
        kr = kernel_report(determinize_minimize(build_automaton(n)))
        got[n] = (kr.absorb_all, kr.absorb_zero)
    ok = got == want and all(t <= e for e, t in got.values())
    return ok, {str(n): v for n, v in got.items()}


@_register("kernel-column-determinism", "s6", "kernel-bound left columns pin stacks (widths/heights <= 3)")
def _check_kernel_columns():
    from .automata import build_automaton, determinize_minimize, kernel_report
    from .graphs import production_graph

    out = {}
    for n in (2, 3):
        d = determinize_minimize(build_automaton(n))
        kr = kernel_report(d)
        g = production_graph(n)
        succ = g.successors()
        for m in (2, 3):
            sts = [(v,) for v in g.vertices]
            for _ in range(m - 1):
                sts = [s + (t,) for s in sts for t in succ[s[-1]]]
            by_left: dict[tuple, set] = {}
            for s in sts:
                by_left.setdefault(tuple(r[-1] for r in s), set()).add(s)
            bad = 0
            nonvac = 0
            for left, group in by_left.items():
                st = d.initial
                for x in left:
                    st = d.delta.get((st, x))
                    if st is None:
                        break
                if st is not None and st in kr.kernel:
                    nonvac += 1
                    if len(group) > 1:
                        bad += 1
            out[f"n{n}-m{m}"] = {"kernel_columns": nonvac, "collisions": bad}
    ok = all(v["collisions"] == 0 for v in out.values())
    return ok, out


@_register("zero-column-propagation", "s6", "an all-zero left column at the zero-absorption depth forces the zero stack")
def _check_cor16():
    from .automata import build_automaton, determinize_minimize, kernel_report
    from .graphs import production_graph

    out = {}
    for n in (2, 3):
        theta = kernel_report(determinize_minimize(build_automaton(n))).absorb_zero
        g = production_graph(n)
        succ = g.successors()
        sts = [(v,) for v in g.vertices]
        for _ in range(theta):
            sts = [s + (t,) for s in sts for t in succ[s[-1]]]
        zero_left = [s for s in sts if all(r[-1] == 0 for r in s)]
        all_zero = [s for s in zero_left if all(d == 0 for r in s for d in r)]
        out[f"n{n}"] = {
            "stack_height": theta + 1,
            "zero_left_stacks": len(zero_left),
            "all_zero": len(all_zero),
        }
    ok = all(v["zero_left_stacks"] == v["all_zero"] == 1 for v in out.values())
    return ok, out


# ---------------------------------------------------------------------------
# s7: probes
# ---------------------------------------------------------------------------


@_register("fraction-core", "s7", "the 0..2-column core has the frozen four-table shape")
def _check_fraction_core():
    from .zprobe import fraction_core, fraction_core_tables

    core = fraction_core()
    tabs = [
        (
            tuple("".join(map(str, reversed(r))) for r in t.tops),
            tuple("".join(map(str, reversed(r))) for r in t.bottoms),
        )
        for t in fraction_core_tables()
    ]
    want = [
        (("00", "20"), ("00",)),
        (("00", "20", "01", "21"), ("01",)),
        (("01", "21"), ("32",)),
        (("32",), ("20", "21")),
    ]
    ok = len(core) == 10 and sorted(tabs) == sorted(want)
    return ok, {"members": len(core), "tables": sorted(tabs)}


@_register("digit-interval", "s7", "first-fraction-digit endpoints at the sixths are exact")
def _check_digit_interval():
    from fractions import Fraction

    from .zprobe import first_fraction_digit

    ok = all(first_fraction_digit(Fraction(k, 6)) == k for k in range(6))
    half = sorted(
        {first_fraction_digit(Fraction(i, 12)) for i in range(6)}
    )
    union = sorted(
        {
            first_fraction_digit(x)
            for x in [Fraction(0), Fraction(1, 7), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3) - Fraction(1, 100)]
            if 0 <= x < Fraction(2, 3)
        }
    )
    return ok and half == [0, 1, 2], {"sixths_ok": ok, "below_half_digits": half, "probe_digits": union}


@_register("sixth-shift", "s7", "the /6 interval implication holds on a seeded sweep")
def _check_sixth_shift():
    from .zprobe import deep_survivor, sample_rationals, verify_sixth_shift

    samples = sample_rationals(200, seed=20260806) + [deep_survivor(40)]
    rep = verify_sixth_shift(samples, horizon=40)
    return rep.ok and rep.checked >= 2, {
        "checked": rep.checked,
        "vacuous": rep.vacuous,
        "counterexamples": rep.counterexamples,
    }


@_register("probe-certificates", "s7", "probe verdicts re-verify from their certificates")
def _check_probes():
    from .zprobe import ColumnConstraint, emptiness_probe, reverify_probe

    p1 = emptiness_probe(2, [], depth=6)
    p2 = emptiness_probe(1, [ColumnConstraint(0, frozenset({2}))], base="0235")
    p3 = emptiness_probe(2, [ColumnConstraint(0, frozenset({0, 1, 2}))], depth=6)
    ok = (
        p1.verdict == "no-obstruction"
        and p1.witness is not None
        and all(all(d == 0 for d in r) for r in p1.witness)
        and p2.verdict == "empty"
        and p3.verdict == "no-obstruction"
        and all(reverify_probe(p) for p in (p1, p2, p3))
    )
    return ok, {
        "unconstrained": p1.verdict,
        "forbidden-zero-core": p2.verdict,
        "fractional-012": p3.verdict,
    }
