"""Command line interface.

Subcommands: enumerate, tables, graph, automaton, probe, verify, export,
report.  Formats: json, csv, dot, text, png.  Exit codes: 0 ok, 1 a
verification check failed, 2 usage or bounds error.  The SESQUI_THREADS
environment variable sets the worker count for the verify suite.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .manifest import ManifestWriter
from .serialize import canonical_json
from .windows import BoundExceeded
from .words import Shear

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("SESQUI_THREADS", "1")))
    except ValueError:
        return 1


def _emit(text: str, out: str | None, subcommand: str, params: dict) -> None:
    writer = ManifestWriter(subcommand, params)
    if out:
        Path(out).write_text(text, encoding="utf-8")
        manifest = writer.finish(text, out)
        print(f"wrote {out} ({len(text)} bytes, digest {manifest.result_digest[:16]}...)")
    else:
        manifest = writer.finish(text, None)
        sys.stdout.write(text)
        print(f"# digest {manifest.result_digest}", file=sys.stderr)


def _parse_shear(text: str) -> Shear:
    try:
        return Shear(text.lower())
    except ValueError:
        raise argparse.ArgumentTypeError(f"shear must be straight/up/down, got {text!r}")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_enumerate(args) -> int:
    from .serialize import windows_to_csv, windows_to_json
    from .windows import enumerate_windows

    fam = enumerate_windows(args.n, args.m, args.shear)
    text = windows_to_csv(fam) if args.format == "csv" else windows_to_json(fam)
    rows = {r for w in fam for r in w.rows}
    params = {"n": args.n, "m": args.m, "shear": args.shear.value, "format": args.format}
    _emit(text, args.out, "enumerate", params)
    print(f"# {len(fam)} windows, {len(rows)} distinct rows", file=sys.stderr)
    return EXIT_OK


def cmd_tables(args) -> int:
    from .families import pair_family
    from .serialize import htables_to_json, htables_to_text
    from .tables import factor_h, split_h14

    fam = pair_family(args.n, args.family, last_0235=args.with_0235)
    unique = args.unique or ("top" if args.family is Shear.DOWN else "bottom")
    tabs = factor_h(fam, unique=unique)
    if args.split14:
        tabs = split_h14(tabs)
    text = htables_to_text(tabs) if args.format == "text" else htables_to_json(tabs)
    params = {
        "n": args.n,
        "family": args.family.value,
        "with_0235": args.with_0235,
        "unique": unique,
        "split14": args.split14,
        "format": args.format,
    }
    _emit(text, args.out, "tables", params)
    print(f"# {len(tabs)} tables", file=sys.stderr)
    return EXIT_OK


def cmd_graph(args) -> int:
    from .graphs import debruijn_graph, fold, production_graph
    from .serialize import digraph_to_dot, digraph_to_json

    if args.kind == "G":
        g = production_graph(args.n)
    elif args.kind == "Gamma":
        g = debruijn_graph(args.n)
    elif args.kind == "rho":
        g = fold(production_graph(args.n)).quotient
    else:  # rho2
        g = fold(fold(production_graph(args.n)).quotient).quotient
    params = {"n": args.n, "kind": args.kind, "format": args.format}
    if args.format == "png":
        from .render import draw_digraph

        out = args.out or f"graph_{args.kind}_{args.n}.png"
        draw_digraph(g, out, title=f"{args.kind} (width {args.n})")
        writer = ManifestWriter("graph", params)
        writer.finish(digraph_to_json(g), out)
        print(f"wrote {out} ({len(g.vertices)} vertices, {len(g.edges)} edges)")
        return EXIT_OK
    text = digraph_to_dot(g, name=args.kind) if args.format == "dot" else digraph_to_json(g)
    _emit(text, args.out, "graph", params)
    print(f"# {len(g.vertices)} vertices, {len(g.edges)} edges", file=sys.stderr)
    return EXIT_OK


def cmd_automaton(args) -> int:
    from .automata import (
        build_automaton,
        determinize_minimize,
        fold_automaton,
        kernel_automaton,
        kernel_report,
    )
    from .serialize import (
        automaton_to_dot,
        automaton_to_json,
        dfa_to_dot,
        dfa_to_json,
    )

    params = {"n": args.n, "which": args.which, "format": args.format}
    if args.which == "depths":
        import csv as _csv
        import io

        buf = io.StringIO()
        w = _csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "absorb_all", "absorb_zero"])
        for k in range(1, args.n + 1):
            kr = kernel_report(determinize_minimize(build_automaton(k)))
            w.writerow([k, kr.absorb_all, kr.absorb_zero])
        _emit(buf.getvalue(), args.out, "automaton", params)
        return EXIT_OK

    a = build_automaton(args.n)
    if args.which == "A":
        text = automaton_to_dot(a) if args.format == "dot" else automaton_to_json(a)
    elif args.which == "rhoA":
        folded, _ = fold_automaton(a)
        text = automaton_to_dot(folded) if args.format == "dot" else automaton_to_json(folded)
    elif args.which == "D":
        d = determinize_minimize(a)
        text = dfa_to_dot(d) if args.format == "dot" else dfa_to_json(d)
    else:  # kernel
        d = determinize_minimize(a)
        kr = kernel_report(d)
        k = kernel_automaton(d, kr.kernel)
        text = automaton_to_dot(k) if args.format == "dot" else automaton_to_json(k)
    _emit(text, args.out, "automaton", params)
    return EXIT_OK


def cmd_probe(args) -> int:
    from .zprobe import (
        ColumnConstraint,
        deep_survivor,
        emptiness_probe,
        reverify_probe,
        sample_rationals,
        verify_sixth_shift,
    )

    if args.samples:
        samples = sample_rationals(args.samples, seed=args.seed)
        if args.with_survivor:
            samples.append(deep_survivor(args.horizon))
        rep = verify_sixth_shift(samples, horizon=args.horizon)
        payload = {
            "mode": "sixth-shift",
            "samples": args.samples,
            "horizon": args.horizon,
            "seed": args.seed,
            "checked": rep.checked,
            "vacuous": rep.vacuous,
            "counterexamples": rep.counterexamples,
        }
        text = canonical_json(payload)
        _emit(text, args.out, "probe", payload)
        return EXIT_OK if rep.ok else EXIT_CHECK_FAILED

    cols = args.column or []
    alphas = args.alphabet or []
    if len(cols) != len(alphas):
        print("error: need one --alphabet per --column", file=sys.stderr)
        return EXIT_USAGE
    constraints = [
        ColumnConstraint(c, frozenset(int(ch) for ch in a)) for c, a in zip(cols, alphas)
    ]
    result = emptiness_probe(args.width, constraints, depth=args.depth, base=args.base)
    payload = result.to_dict()
    payload["reverified"] = reverify_probe(result)
    text = canonical_json(payload)
    params = {
        "width": args.width,
        "depth": args.depth,
        "base": args.base,
        "columns": cols,
        "alphabets": alphas,
    }
    _emit(text, args.out, "probe", params)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .checks import run_checks

    try:
        results = run_checks(args.scope, threads=_threads())
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    lines = []
    for r in results:
        mark = "PASS" if r.ok else "FAIL"
        lines.append(f"[{mark}] {r.scope}/{r.check_id}: {r.description}")
    ok = all(r.ok for r in results)
    summary = f"{sum(r.ok for r in results)}/{len(results)} checks passed"
    if args.format == "json":
        text = canonical_json(
            {"results": [r.to_dict() for r in results], "summary": summary}
        )
    else:
        text = "\n".join(lines + [summary]) + "\n"
    _emit(text, args.out, "verify", {"scope": args.scope, "format": args.format})
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_export(args) -> int:
    from .families import pair_family
    from .graphs import debruijn_graph, fold, production_graph
    from .serialize import (
        digraph_to_dot,
        digraph_to_json,
        htables_to_json,
        windows_to_csv,
        windows_to_json,
    )
    from .tables import factor_h
    from .windows import enumerate_windows

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []

    def put(name: str, text: str) -> None:
        (out_dir / name).write_text(text, encoding="utf-8")
        written.append(name)

    for sh in Shear:
        fam = enumerate_windows(2, 2, sh)
        put(f"windows_2x2_{sh.value}.json", windows_to_json(fam))
        put(f"windows_2x2_{sh.value}.csv", windows_to_csv(fam))
    for n in range(2, args.max_n + 1):
        put(
            f"tables_up_0235_n{n}.json",
            htables_to_json(factor_h(pair_family(n, Shear.UP, last_0235=True), "bottom")),
        )
        g = production_graph(n)
        put(f"graph_G{n}.dot", digraph_to_dot(g, name=f"G{n}"))
        put(f"graph_G{n}.json", digraph_to_json(g))
        put(f"graph_Gamma{n}.dot", digraph_to_dot(debruijn_graph(n), name=f"Gamma{n}"))
        put(f"graph_rho_G{n}.dot", digraph_to_dot(fold(g).quotient, name=f"rhoG{n}"))
    index = canonical_json({"files": sorted(written)})
    put("index.json", index)
    writer = ManifestWriter("export", {"out_dir": str(out_dir), "max_n": args.max_n})
    writer.finish(index, out_dir / "index.json")
    print(f"wrote {len(written)} files to {out_dir}")
    return EXIT_OK


def cmd_report(args) -> int:
    import csv as _csv
    import io

    from .automata import build_automaton, determinize_minimize, kernel_report
    from .checks import run_checks
    from .graphs import fold, production_graph
    from .render import draw_absorption_chart, draw_check_summary, draw_digraph

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    results = run_checks(args.scope, threads=_threads())

    buf = io.StringIO()
    w = _csv.writer(buf, lineterminator="\n")
    w.writerow(["scope", "check_id", "ok", "description"])
    for r in results:
        w.writerow([r.scope, r.check_id, "pass" if r.ok else "fail", r.description])
    (out_dir / "checks.csv").write_text(buf.getvalue(), encoding="utf-8")
    (out_dir / "checks.json").write_text(
        canonical_json([r.to_dict() for r in results]), encoding="utf-8"
    )

    depth_rows = []
    for k in range(1, args.max_n + 1):
        kr = kernel_report(determinize_minimize(build_automaton(k)))
        depth_rows.append(
            {"n": k, "absorb_all": kr.absorb_all, "absorb_zero": kr.absorb_zero}
        )
    dbuf = io.StringIO()
    dw = _csv.writer(dbuf, lineterminator="\n")
    dw.writerow(["n", "absorb_all", "absorb_zero"])
    for row in depth_rows:
        dw.writerow([row["n"], row["absorb_all"], row["absorb_zero"]])
    (out_dir / "absorption_depths.csv").write_text(dbuf.getvalue(), encoding="utf-8")

    draw_check_summary(results, out_dir / "checks.png")
    draw_absorption_chart(depth_rows, out_dir / "absorption_depths.png")
    draw_digraph(
        fold(production_graph(2)).quotient,
        out_dir / "fold_G2.png",
        title="folded width-2 production graph",
    )

    writer = ManifestWriter("report", {"out_dir": str(out_dir), "scope": args.scope})
    writer.finish(buf.getvalue(), out_dir / "checks.csv")
    ok = all(r.ok for r in results)
    print(
        f"report in {out_dir}: {sum(r.ok for r in results)}/{len(results)} checks passed"
    )
    return EXIT_OK if ok else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="sesqui",
        description="Exact base-6 window calculus for the times-3/2 map.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("enumerate", help="enumerate legal n x m windows")
    pe.add_argument("n", type=int)
    pe.add_argument("m", type=int)
    pe.add_argument("shear", type=_parse_shear, nargs="?", default=Shear.STRAIGHT)
    pe.add_argument("--format", choices=("json", "csv"), default="json")
    pe.add_argument("--out")
    pe.set_defaults(fn=cmd_enumerate)

    pt = sub.add_parser("tables", help="factor a pair family into H-tables")
    pt.add_argument("--n", type=int, default=2)
    pt.add_argument("--family", type=_parse_shear, default=Shear.STRAIGHT)
    pt.add_argument("--with-0235", action="store_true")
    pt.add_argument("--unique", choices=("top", "bottom"))
    pt.add_argument("--split14", action="store_true")
    pt.add_argument("--format", choices=("json", "text"), default="json")
    pt.add_argument("--out")
    pt.set_defaults(fn=cmd_tables)

    pg = sub.add_parser("graph", help="build and export the pair graphs")
    pg.add_argument("n", type=int)
    pg.add_argument("kind", choices=("G", "Gamma", "rho", "rho2"))
    pg.add_argument("--format", choices=("dot", "json", "png"), default="dot")
    pg.add_argument("--out")
    pg.set_defaults(fn=cmd_graph)

    pa = sub.add_parser("automaton", help="build and export the automata")
    pa.add_argument("n", type=int)
    pa.add_argument("which", choices=("A", "rhoA", "D", "kernel", "depths"))
    pa.add_argument("--format", choices=("json", "dot", "csv"), default="json")
    pa.add_argument("--out")
    pa.set_defaults(fn=cmd_automaton)

    pp = sub.add_parser("probe", help="bounded emptiness probes / exact orbit sweeps")
    pp.add_argument("--width", type=int, default=2)
    pp.add_argument("--depth", type=int, default=8)
    pp.add_argument("--base", choices=("full", "0235"), default="full")
    pp.add_argument("--column", type=int, action="append")
    pp.add_argument("--alphabet", action="append", help="digits string, e.g. 012")
    pp.add_argument("--samples", type=int, default=0, help="run the /6 orbit sweep instead")
    pp.add_argument("--horizon", type=int, default=40)
    pp.add_argument("--seed", type=int, default=20260806)
    pp.add_argument(
        "--with-survivor",
        action="store_true",
        help="add a constructed orbit survivor to the sweep samples",
    )
    pp.add_argument("--out")
    pp.set_defaults(fn=cmd_probe)

    pv = sub.add_parser("verify", help="run the verification suite")
    pv.add_argument("scope", nargs="?", default="all")
    pv.add_argument("--format", choices=("text", "json"), default="text")
    pv.add_argument("--out")
    pv.set_defaults(fn=cmd_verify)

    px = sub.add_parser("export", help="dump the standard artifacts to a directory")
    px.add_argument("--out-dir", default="sesqui-export")
    px.add_argument("--max-n", type=int, default=3)
    px.set_defaults(fn=cmd_export)

    pr = sub.add_parser("report", help="verification report with figures and CSV")
    pr.add_argument("--out-dir", default="sesqui-report")
    pr.add_argument("--scope", default="all")
    pr.add_argument("--max-n", type=int, default=4)
    pr.set_defaults(fn=cmd_report)

    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
