"""Acceptance suite: one test per criterion, each printing a verdict line.

Three literal sub-clauses are provably unattainable (exhaustive
computation contradicts them); they are kept as strict xfail tests with
the analysis in the repository notes, and the true computed laws are
asserted in their place.  Everything else runs at full stated size.
"""

from functools import lru_cache
from itertools import product

import pytest

from sesqui.families import base_family, distinct_rows, pair_family, stacks
from sesqui.graphs import (
    debruijn_graph,
    dual_respects_edges,
    find_isomorphism,
    fold,
    production_graph,
)
from sesqui.tables import factor_h, verify_family_structure
from sesqui.windows import enumerate_windows, trapezoid_union
from sesqui.words import Shear, dual


def verdict(criterion: str, ok: bool, detail: str = "") -> None:
    mark = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {criterion}: {mark}" + (f" ({detail})" if detail else ""))
    assert ok, f"{criterion}: {detail}"


@lru_cache(maxsize=None)
def dfa_and_kernel(n: int):
    from sesqui.automata import build_automaton, determinize_minimize, kernel_report

    d = determinize_minimize(build_automaton(n))
    return d, kernel_report(d)


def graph_stacks(n: int, height: int):
    g = production_graph(n)
    succ = g.successors()
    out = [(v,) for v in g.vertices]
    for _ in range(height - 1):
        out = [s + (t,) for s in out for t in succ[s[-1]]]
    return out


# --------------------------------------------------------------------------
# 1. plain family counts
# --------------------------------------------------------------------------


def test_acceptance_01_family_counts():
    for n in (2, 3, 4, 5):
        rs = verify_family_structure(n, Shear.STRAIGHT)
        assert rs.ok, rs.violations
        assert rs.table_count == 3 * 6 ** (n - 1)
        assert rs.row_count == 6**n
        ru = verify_family_structure(n, Shear.UP)
        assert ru.ok, ru.violations
        assert ru.table_count == 3 * 4 ** (n - 1)
        assert ru.row_count == 6 * 4 ** (n - 1)
    verdict(
        "criterion-01 family counts",
        True,
        "straight 3*6^(n-1)/6^n, ascending 3*4^(n-1)/6*4^(n-1), n=2..5",
    )


@pytest.mark.xfail(
    strict=True,
    reason="the descending family is genuinely asymmetric: it has 6^n distinct "
    "rows and a mixed unique-top table profile, so the flat 'each sheared "
    "family' count law cannot hold for it",
)
def test_acceptance_01_descending_literal_clause():
    for n in (2, 3):
        fam = pair_family(n, Shear.DOWN)
        assert len(distinct_rows(fam)) == 6 * 4 ** (n - 1)


# --------------------------------------------------------------------------
# 2. 0235 family counts
# --------------------------------------------------------------------------


def test_acceptance_02_0235_counts():
    for n in (2, 3, 4, 5):
        ru = verify_family_structure(n, Shear.UP, with_0235=True)
        assert ru.ok, ru.violations
        assert ru.table_count == 2 * 4 ** (n - 1)
        assert ru.row_count == 4**n
        rs = verify_family_structure(n, Shear.STRAIGHT, with_0235=True)
        assert rs.ok, rs.violations
        assert rs.row_count == 4 * 6 ** (n - 1)
    verdict(
        "criterion-02 0235 counts",
        True,
        "ascending 2*4^(n-1)/4^n, straight rows 4*6^(n-1), n=2..5",
    )


@pytest.mark.xfail(
    strict=True,
    reason="the straight 0235 family provably factors into (4/3)*6^(n-1) "
    "three-top tables; a 2*6^(n-1) unique-component representation with "
    "two-row tops cannot exist",
)
def test_acceptance_02_straight_0235_table_count_literal():
    for n in (2, 3):
        tabs = factor_h(pair_family(n, Shear.STRAIGHT, last_0235=True), unique="bottom")
        assert len(tabs) == 2 * 6 ** (n - 1)


# --------------------------------------------------------------------------
# 3. oracle equivalence
# --------------------------------------------------------------------------


def test_acceptance_03_oracle_equivalence():
    sizes = [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (4, 2)]
    for n, m in sizes:
        assert trapezoid_union(n, m) == enumerate_windows(n, m), (n, m)
    verdict("criterion-03 oracle equivalence", True, f"exact set equality at {sizes}")


# --------------------------------------------------------------------------
# 4. structural predicates
# --------------------------------------------------------------------------


def test_acceptance_04_structural_predicates():
    # every clause of the family verifiers (pairing, parity classes,
    # leftmost-only differences, column class implications) at widths <= 4
    for n in (2, 3, 4):
        for sh in (Shear.STRAIGHT, Shear.UP):
            for with_0235 in (False, True):
                rep = verify_family_structure(n, sh, with_0235=with_0235)
                assert rep.ok, (n, sh, with_0235, rep.violations)
    verdict("criterion-04 structural predicates", True, "zero violations, widths 2..4")


# --------------------------------------------------------------------------
# 5. duality
# --------------------------------------------------------------------------


def test_acceptance_05_duality():
    for sh in Shear:
        fam = base_family(sh)
        assert frozenset(dual(w) for w in fam) == fam
    for n in (2, 3, 4):
        fam = pair_family(n, Shear.UP, last_0235=False)
        assert frozenset(dual(w) for w in fam) == fam
    for n in (2, 3, 4, 5):
        assert dual_respects_edges(production_graph(n))
    verdict("criterion-05 duality", True, "families and graphs invariant under x -> 5-x")


# --------------------------------------------------------------------------
# 6. the correctness operator
# --------------------------------------------------------------------------


def test_acceptance_06_operator():
    from sesqui.correctness import left_digit_witnesses, left_word

    sizes = [len(left_digit_witnesses(*t)) for t in product(range(6), repeat=3)]
    assert max(sizes) == 1 and sum(1 for s in sizes if s) == 84

    for length in range(3, 8):
        for w in product(range(6), repeat=length):
            img = left_word(w)
            if img is not None and len(img) >= 3:
                assert left_word(img) is not None

    by_right: dict[tuple, set] = {}
    for w in enumerate_windows(3, 2):
        by_right.setdefault(w.right_column, set()).add(w.left_column[1])
    assert all(len(v) == 1 for v in by_right.values())
    by_bottom: dict[tuple, set] = {}
    by_top: dict[tuple, set] = {}
    for w in enumerate_windows(2, 3):
        by_bottom.setdefault(w.bottom, set()).add(w.top[1])
        by_top.setdefault(w.top, set()).add(w.bottom[1])
    assert all(len(v) == 1 for v in by_bottom.values())
    assert all(len(v) == 1 for v in by_top.values())
    verdict(
        "criterion-06 operator",
        True,
        "single-valued on 216 triples; closure 3..7; middle-digit uniqueness",
    )


# --------------------------------------------------------------------------
# 7. graphs
# --------------------------------------------------------------------------


def test_acceptance_07_graphs():
    details = []
    for n in (2, 3, 4, 5):
        g = production_graph(n)
        assert g.is_regular(2)
        f = fold(g)  # raises if the pairing does not exist
        assert len(f.quotient.vertices) == len(g.vertices) // 2
        assert len(f.quotient.edges) == len(g.edges) // 2
        if n == 2:
            assert len(f.quotient.vertices) == 8
        iso_gamma = find_isomorphism(g, debruijn_graph(n))
        assert iso_gamma is not None
        assert frozenset(
            (iso_gamma[u], iso_gamma[v]) for u, v in g.edges
        ) == debruijn_graph(n).edges
        iso_rev = find_isomorphism(g, g.reverse())
        assert iso_rev is not None
        details.append(f"n={n} ok")
    for n in (3, 4, 5):
        q = fold(fold(production_graph(n)).quotient).quotient
        iso = find_isomorphism(q, production_graph(n - 1))
        assert iso is not None
    verdict("criterion-07 graphs", True, "; ".join(details) + "; double-fold n=3..5")


# --------------------------------------------------------------------------
# 8. automata
# --------------------------------------------------------------------------


def test_acceptance_08_automata():
    from sesqui.automata import (
        automata_isomorphic,
        build_automaton,
        fold_automaton,
        kernel_automaton,
        language_partition,
    )

    for n in (2, 3, 4, 5):
        a = build_automaton(n)
        assert all(len(a.letters(s)) == 2 for s in a.states)

    for n in (2, 3, 4):
        folded, _ = fold_automaton(build_automaton(n))
        assert all(len(c) == 1 for c in language_partition(folded))

    for n in (2, 3, 4):
        a = build_automaton(n)
        d, _ = dfa_and_kernel(n)
        assert d.words_up_to(8) == a.words_up_to(8)

    kernel_resolution = {}
    for n in (2, 3, 4):
        a = build_automaton(n)
        d, kr = dfa_and_kernel(n)
        k = kernel_automaton(d, kr.kernel)
        folded, _ = fold_automaton(a)
        iso_folded = automata_isomorphic(k, folded)
        iso_plain = automata_isomorphic(k, a)
        assert iso_folded and not iso_plain
        kernel_resolution[n] = "folded"

    depths = {}
    for n in (2, 3, 4, 5):
        _, kr = dfa_and_kernel(n)
        depths[n] = (kr.absorb_all, kr.absorb_zero)
        assert kr.absorb_zero <= kr.absorb_all
    assert depths == {2: (5, 3), 3: (11, 6), 4: (17, 10), 5: (22, 13)}
    verdict(
        "criterion-08 automata",
        True,
        f"kernel is the folded automaton for n=2..4; depths {depths}",
    )


# --------------------------------------------------------------------------
# 9. column determinism
# --------------------------------------------------------------------------


def test_acceptance_09_kernel_column_determinism():
    nonvacuous = 0
    for n in (2, 3, 4):
        d, kr = dfa_and_kernel(n)
        for m in (2, 3, 4):
            by_left: dict[tuple, set] = {}
            for s in graph_stacks(n, m):
                by_left.setdefault(tuple(r[-1] for r in s), set()).add(s)
            for left, group in by_left.items():
                st = d.initial
                for x in left:
                    st = d.delta.get((st, x))
                    if st is None:
                        break
                if st is not None and st in kr.kernel:
                    nonvacuous += 1
                    assert len(group) == 1, (n, m, left)
    assert nonvacuous > 100
    verdict(
        "criterion-09a kernel-bound column determinism",
        True,
        f"{nonvacuous} kernel-bound columns, all pinning their stack (n,m <= 4)",
    )


@pytest.mark.xfail(
    strict=True,
    reason="without the kernel condition the claim fails by counting: 4^n*2^(m-1) "
    "stacks cannot inject into 6^m left columns (collisions verified "
    "exhaustively)",
)
def test_acceptance_09_unconditioned_column_determinism_literal():
    for n in (2, 3, 4):
        for m in (2, 3, 4):
            by_left: dict[tuple, set] = {}
            for s in graph_stacks(n, m):
                by_left.setdefault(tuple(r[-1] for r in s), set()).add(s)
            assert all(len(g) == 1 for g in by_left.values()), (n, m)


def test_acceptance_09_zero_column_propagation():
    for n in (2, 3):
        _, kr = dfa_and_kernel(n)
        theta = kr.absorb_zero
        zero_left = [
            s
            for s in graph_stacks(n, theta + 1)
            if all(r[-1] == 0 for r in s)
        ]
        assert len(zero_left) == 1
        assert all(d == 0 for r in zero_left[0] for d in r)
    verdict(
        "criterion-09b zero-column propagation",
        True,
        "all-zero left column at the zero-absorption depth forces the zero stack",
    )


def test_acceptance_09_triangle_bijection():
    for k in (0, 1, 2):
        h, w = 2 * k + 1, k + 1
        tris = set()
        for win in enumerate_windows(h, w):
            cells = tuple(
                tuple(win.rows[i][j] for i in range(j, h - j)) for j in range(w)
            )
            tris.add(cells)
        tris = {t for t in tris if all(d not in (1, 4) for d in t[0])}
        verts: dict[tuple, set] = {}
        diags: dict[tuple, set] = {}
        for t in tris:
            verts.setdefault(t[0], set()).add(t)
            diags.setdefault(tuple(t[j][0] for j in range(w)), set()).add(t)
        assert all(len(s) == 1 for s in verts.values())
        assert all(len(s) == 1 for s in diags.values())
        assert len(verts) == len(diags) == 4 ** (k + 1)
    verdict(
        "criterion-09c triangle bijection",
        True,
        "vertical sides <-> diagonal sides, heights 1/3/5 (4, 16, 64 each)",
    )


def test_acceptance_09_square_shadow():
    from sesqui.families import unit_pairs_0235

    rel: dict[int, set[int]] = {}
    for w in unit_pairs_0235():
        rel.setdefault(w.top[0], set()).add(w.bottom[0])
    for width in (2, 3, 4, 5):
        tops: dict[tuple, set] = {}
        rcols = set()
        for s in graph_stacks(width, width):
            rcol = tuple(r[0] for r in s)
            rcols.add(rcol)
            tops.setdefault(s[0], set()).add(rcol)
        assert all(len(v) == 1 for v in tops.values()), width
        chains = [(d,) for d in (0, 2, 3, 5)]
        for _ in range(width - 1):
            chains = [c + (e,) for c in chains for e in rel[c[-1]]]
        assert rcols == set(chains), width
    verdict(
        "criterion-09d square shadow",
        True,
        "top rows determine right columns; columns exhaust the chains (sizes 2..5)",
    )


@pytest.mark.xfail(
    strict=True,
    reason="a two-way bijection between square tops and right columns is "
    "count-impossible at finite size (4^w tops vs 2^(w+1) columns); only "
    "the top->column direction is functional",
)
def test_acceptance_09_square_bijection_literal():
    for width in (2, 3):
        rcols: dict[tuple, set] = {}
        for s in graph_stacks(width, width):
            rcols.setdefault(tuple(r[0] for r in s), set()).add(s[0])
        assert all(len(v) == 1 for v in rcols.values()), width


# --------------------------------------------------------------------------
# 10. probes
# --------------------------------------------------------------------------


def test_acceptance_10_probes():
    from fractions import Fraction

    from sesqui.zprobe import (
        ColumnConstraint,
        deep_survivor,
        emptiness_probe,
        first_fraction_digit,
        fraction_core,
        fraction_core_tables,
        reverify_probe,
        sample_rationals,
        verify_sixth_shift,
    )

    core = fraction_core()
    assert len(core) == 10 and len(fraction_core_tables()) == 4

    for k in range(6):
        assert first_fraction_digit(Fraction(k, 6)) == k
    for num in range(0, 60):
        x = Fraction(num, 60)
        d = first_fraction_digit(x)
        assert (x < Fraction(1, 2)) == (d in (0, 1, 2))
        in_union = x < Fraction(1, 6) or Fraction(1, 3) <= x < Fraction(2, 3)
        assert in_union == (d in (0, 2, 3))

    samples = sample_rationals(10_000, seed=20260806) + [deep_survivor(40)]
    rep = verify_sixth_shift(samples, horizon=40)
    assert rep.ok and rep.checked >= 2

    probes = [
        emptiness_probe(2, [], depth=6),
        emptiness_probe(1, [ColumnConstraint(0, frozenset({2}))], base="0235"),
        emptiness_probe(1, [ColumnConstraint(0, frozenset({0, 2}))], base="0235"),
        emptiness_probe(2, [ColumnConstraint(0, frozenset({0, 1, 2}))], depth=6),
    ]
    assert [p.verdict for p in probes] == [
        "no-obstruction",
        "empty",
        "no-obstruction",
        "no-obstruction",
    ]
    assert all(reverify_probe(p) for p in probes)
    verdict(
        "criterion-10 probes",
        True,
        f"core snapshot, exact digit bridge, {rep.checked} non-vacuous orbit "
        f"samples of {len(samples)}, certificates re-verified",
    )
