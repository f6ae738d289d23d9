import json

from sesqui.families import pair_family
from sesqui.graphs import debruijn_graph, production_graph
from sesqui.serialize import (
    digest,
    digraph_to_dot,
    digraph_to_json,
    htables_to_json,
    htables_to_text,
    windows_to_csv,
    windows_to_json,
)
from sesqui.tables import factor_h
from sesqui.windows import enumerate_windows
from sesqui.words import Shear


def test_window_json_shape():
    data = json.loads(windows_to_json(enumerate_windows(2, 1)))
    assert len(data) == 24
    assert all(set(d) == {"rows", "shear"} for d in data)
    assert data[0]["shear"] == "straight"
    assert all(len(d["rows"]) == 2 for d in data)


def test_serialization_deterministic():
    fam = enumerate_windows(2, 2, Shear.UP)
    assert digest(windows_to_json(fam)) == digest(windows_to_json(set(fam)))
    assert digest(windows_to_csv(fam)) == digest(windows_to_csv(sorted(fam)))


def test_htable_text_has_rule_line():
    tabs = factor_h(pair_family(2, Shear.UP, last_0235=True), unique="bottom")
    text = htables_to_text(tabs)
    assert text.count("--") == len(tabs)
    data = json.loads(htables_to_json(tabs))
    assert len(data) == 8
    assert all(len(t["tops"]) == 2 and len(t["bottoms"]) == 2 for t in data)


def test_digraph_dot_and_json_agree_on_size():
    g = production_graph(2)
    dot = digraph_to_dot(g, name="G2")
    data = json.loads(digraph_to_json(g))
    assert dot.count("->") == len(g.edges)
    assert len(data["vertices"]) == len(g.vertices)
    assert sum(len(v) for v in data["edges"].values()) == len(g.edges)


def test_debruijn_labels_are_digit_strings():
    data = json.loads(digraph_to_json(debruijn_graph(2)))
    assert all(len(v) == 3 and v.strip("0235") == "" for v in data["vertices"])


def test_vtable_exports():
    from sesqui.serialize import vtables_to_json, vtables_to_text
    from sesqui.tables import factor_v

    tabs = factor_v(enumerate_windows(3, 2))
    data = json.loads(vtables_to_json(tabs))
    assert all(set(t) == {"lefts", "rights"} for t in data)
    assert all(len(c) == 3 for t in data for c in t["lefts"])
    text = vtables_to_text(tabs)
    assert text.count("|") == len(tabs)


def test_correctness_dfa_exports():
    from sesqui.correctness import build_correct_dfa
    from sesqui.serialize import correctness_dfa_to_dot, correctness_dfa_to_json

    dfa = build_correct_dfa(frozenset({0, 2, 3, 5}), "bottom_up")
    data = json.loads(correctness_dfa_to_json(dfa))
    assert data["reading"] == "bottom_up"
    assert len(data["states"]) == 2
    dot = correctness_dfa_to_dot(dfa)
    assert dot.count("->") == len(dfa.delta)


def test_automaton_exports():
    from sesqui.automata import build_automaton
    from sesqui.serialize import automaton_to_dot, automaton_to_json

    a = build_automaton(2)
    data = json.loads(automaton_to_json(a))
    assert len(data["states"]) == 16 and data["all_initial"]
    dot = automaton_to_dot(a)
    assert dot.count("label=") == len(a.delta)
