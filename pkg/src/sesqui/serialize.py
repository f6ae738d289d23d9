"""Deterministic JSON / CSV / DOT serialization of the core objects.

Windows serialize as arrays of digit strings (most significant digit
first, one string per row) plus the shear tag; every collection is
canonically ordered so equal inputs give byte-identical output.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
from typing import Iterable

from .automata import Dfa, PartialAutomaton
from .correctness import CorrectnessDfa
from .graphs import Digraph
from .tables import HTable, VTable
from .words import Window, sort_windows


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


# ---------------------------------------------------------------------------
# windows
# ---------------------------------------------------------------------------


def window_to_obj(w: Window) -> dict:
    return {"rows": list(w.row_strings()), "shear": w.shear.value}


def windows_to_json(windows: Iterable[Window]) -> str:
    return canonical_json([window_to_obj(w) for w in sort_windows(windows)])


def windows_to_csv(windows: Iterable[Window]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["shear", "height", "width", "rows"])
    for w in sort_windows(windows):
        writer.writerow([w.shear.value, w.height, w.width, "/".join(w.row_strings())])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------


def _row_str(row: tuple[int, ...]) -> str:
    return "".join(str(d) for d in reversed(row))


def htables_to_json(tables: Iterable[HTable]) -> str:
    return canonical_json(
        [
            {
                "tops": [_row_str(r) for r in t.tops],
                "bottoms": [_row_str(r) for r in t.bottoms],
            }
            for t in sorted(tables)
        ]
    )


def vtables_to_json(tables: Iterable[VTable]) -> str:
    return canonical_json(
        [
            {
                "lefts": ["".join(str(d) for d in c) for c in t.lefts],
                "rights": ["".join(str(d) for d in c) for c in t.rights],
            }
            for t in sorted(tables)
        ]
    )


def htables_to_text(tables: Iterable[HTable]) -> str:
    """Boxed text layout (tops, rule, bottoms) mirroring printed tables."""
    return "\n\n".join(t.text() for t in sorted(tables)) + "\n"


def vtables_to_text(tables: Iterable[VTable]) -> str:
    return "\n".join(t.text() for t in sorted(tables)) + "\n"


# ---------------------------------------------------------------------------
# graphs and automata
# ---------------------------------------------------------------------------


def _label_str(v) -> str:
    if isinstance(v, tuple) and v and isinstance(v[0], int):
        return _row_str(v)
    if isinstance(v, tuple):
        return "{" + ",".join(_label_str(x) for x in v) + "}"
    return str(v)


def digraph_to_dot(g: Digraph, name: str = "G") -> str:
    lines = [f"digraph {name} {{"]
    for v in g.vertices:
        lines.append(f'  "{_label_str(v)}";')
    for u, v in sorted(g.edges, key=lambda e: (_label_str(e[0]), _label_str(e[1]))):
        lines.append(f'  "{_label_str(u)}" -> "{_label_str(v)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def digraph_to_json(g: Digraph) -> str:
    succ = g.successors()
    return canonical_json(
        {
            "vertices": [_label_str(v) for v in g.vertices],
            "edges": {_label_str(v): [_label_str(t) for t in succ[v]] for v in g.vertices},
        }
    )


def automaton_to_json(a: PartialAutomaton) -> str:
    trans: dict[str, dict[str, str]] = {}
    for (s, x), t in sorted(a.delta.items(), key=lambda kv: (_label_str(kv[0][0]), kv[0][1])):
        trans.setdefault(_label_str(s), {})[str(x)] = _label_str(t)
    return canonical_json(
        {
            "states": [_label_str(s) for s in a.states],
            "all_initial": True,
            "all_final": True,
            "transitions": trans,
        }
    )


def automaton_to_dot(a: PartialAutomaton, name: str = "A") -> str:
    lines = [f"digraph {name} {{"]
    for s in a.states:
        lines.append(f'  "{_label_str(s)}";')
    for (s, x), t in sorted(a.delta.items(), key=lambda kv: (_label_str(kv[0][0]), kv[0][1])):
        lines.append(f'  "{_label_str(s)}" -> "{_label_str(t)}" [label="{x}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dfa_to_json(d: Dfa) -> str:
    trans: dict[str, dict[str, int]] = {}
    for (s, x), t in sorted(d.delta.items()):
        trans.setdefault(str(s), {})[str(x)] = t
    return canonical_json(
        {
            "states": d.n_states,
            "initial": d.initial,
            "accepting": sorted(d.accepting),
            "transitions": trans,
        }
    )


def dfa_to_dot(d: Dfa, name: str = "D") -> str:
    lines = [f"digraph {name} {{", f'  "start" [shape=none];', f'  "start" -> "{d.initial}";']
    for s in range(d.n_states):
        shape = "doublecircle" if s in d.accepting else "circle"
        lines.append(f'  "{s}" [shape={shape}];')
    for (s, x), t in sorted(d.delta.items()):
        lines.append(f'  "{s}" -> "{t}" [label="{x}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def correctness_dfa_to_json(d: CorrectnessDfa) -> str:
    trans: dict[str, dict[str, int]] = {}
    for (s, x), t in sorted(d.delta.items()):
        trans.setdefault(str(s), {})[str(x)] = t
    return canonical_json(
        {
            "alphabet": list(d.alphabet),
            "reading": d.reading,
            "states": list(d.states),
            "all_initial": True,
            "all_final": True,
            "transitions": trans,
        }
    )


def correctness_dfa_to_dot(d: CorrectnessDfa, name: str = "C") -> str:
    lines = [f"digraph {name} {{"]
    for s in d.states:
        lines.append(f'  "{s}" [shape=doublecircle];')
    for (s, x), t in sorted(d.delta.items()):
        lines.append(f'  "{s}" -> "{t}" [label="{x}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
