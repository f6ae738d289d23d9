import json

from sesqui.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestEnumerate:
    def test_csv_output(self, tmp_path, capsys):
        out = tmp_path / "w.csv"
        code, _, err = run(["enumerate", "2", "2", "straight", "--format", "csv", "--out", str(out)], capsys)
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "shear,height,width,rows"
        assert len(lines) == 1 + 144
        assert "36 distinct rows" in err

    def test_manifest_digest_stable(self, tmp_path, capsys):
        out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
        run(["enumerate", "2", "1", "--out", str(out1)], capsys)
        run(["enumerate", "2", "1", "--out", str(out2)], capsys)
        assert len(json.loads(out1.read_text())) == 24
        d1 = json.loads((tmp_path / "a.json.manifest.json").read_text())
        d2 = json.loads((tmp_path / "b.json.manifest.json").read_text())
        assert d1["result_digest"] == d2["result_digest"]
        assert d1["variant_metadata"]["family_variant"]["selected"] == "up"

    def test_bound_error_is_usage(self, tmp_path, capsys):
        code, _, err = run(["enumerate", "2", "12", "--out", str(tmp_path / "x.json")], capsys)
        assert code == 2


class TestGraph:
    def test_dot_vertex_count(self, tmp_path, capsys):
        out = tmp_path / "g.dot"
        code, _, _ = run(["graph", "2", "rho", "--format", "dot", "--out", str(out)], capsys)
        assert code == 0
        text = out.read_text()
        assert text.count("->") == 16

    def test_gamma_json(self, tmp_path, capsys):
        out = tmp_path / "g.json"
        code, _, _ = run(["graph", "2", "Gamma", "--format", "json", "--out", str(out)], capsys)
        assert code == 0
        data = json.loads(out.read_text())
        assert len(data["vertices"]) == 16

    def test_g3_json_vertex_count(self, tmp_path, capsys):
        out = tmp_path / "g3.json"
        code, _, _ = run(["graph", "3", "G", "--format", "json", "--out", str(out)], capsys)
        assert code == 0
        assert len(json.loads(out.read_text())["vertices"]) == 64

    def test_png_render(self, tmp_path, capsys):
        out = tmp_path / "g.png"
        code, _, _ = run(["graph", "2", "rho", "--format", "png", "--out", str(out)], capsys)
        assert code == 0
        assert out.stat().st_size > 1000


class TestTables:
    def test_text_layout(self, tmp_path, capsys):
        out = tmp_path / "t.txt"
        code, _, err = run(
            ["tables", "--n", "2", "--family", "up", "--with-0235", "--format", "text", "--out", str(out)],
            capsys,
        )
        assert code == 0
        assert "# 8 tables" in err
        assert "--" in out.read_text()


class TestAutomaton:
    def test_depth_table(self, tmp_path, capsys):
        out = tmp_path / "d.csv"
        code, _, _ = run(["automaton", "2", "depths", "--out", str(out)], capsys)
        assert code == 0
        assert out.read_text().splitlines() == [
            "n,absorb_all,absorb_zero",
            "1,1,1",
            "2,5,3",
        ]

    def test_kernel_json(self, tmp_path, capsys):
        out = tmp_path / "k.json"
        code, _, _ = run(["automaton", "2", "kernel", "--out", str(out)], capsys)
        assert code == 0
        data = json.loads(out.read_text())
        assert len(data["states"]) == 8

    def test_folded_automaton_dot(self, tmp_path, capsys):
        out = tmp_path / "a.dot"
        code, _, _ = run(["automaton", "2", "rhoA", "--format", "dot", "--out", str(out)], capsys)
        assert code == 0
        assert out.read_text().count("label=") == 16


class TestProbe:
    def test_emptiness_json(self, tmp_path, capsys):
        out = tmp_path / "p.json"
        code, _, _ = run(
            ["probe", "--width", "1", "--base", "0235", "--column", "0", "--alphabet", "2", "--out", str(out)],
            capsys,
        )
        assert code == 0
        data = json.loads(out.read_text())
        assert data["verdict"] == "empty" and data["reverified"]

    def test_sweep(self, tmp_path, capsys):
        out = tmp_path / "s.json"
        code, _, _ = run(
            ["probe", "--samples", "20", "--horizon", "12", "--seed", "3", "--out", str(out)],
            capsys,
        )
        assert code == 0
        data = json.loads(out.read_text())
        assert data["counterexamples"] == []

    def test_mismatched_constraints(self, capsys):
        code, _, _ = run(["probe", "--width", "2", "--column", "0"], capsys)
        assert code == 2


class TestVerify:
    def test_scope_s5(self, tmp_path, capsys):
        out = tmp_path / "v.txt"
        code, _, _ = run(["verify", "s5", "--out", str(out)], capsys)
        assert code == 0
        text = out.read_text()
        assert "[PASS] s5/" in text and "FAIL" not in text

    def test_bogus_scope(self, capsys):
        code, _, err = run(["verify", "bogus-id"], capsys)
        assert code == 2

    def test_json_format(self, tmp_path, capsys):
        out = tmp_path / "v.json"
        code, _, _ = run(["verify", "s7", "--format", "json", "--out", str(out)], capsys)
        assert code == 0
        data = json.loads(out.read_text())
        assert all(r["ok"] for r in data["results"])


class TestReportAndExport:
    def test_report_writes_figures_and_csv(self, tmp_path, capsys):
        out = tmp_path / "rep"
        code, _, _ = run(["report", "--out-dir", str(out), "--scope", "s7", "--max-n", "2"], capsys)
        assert code == 0
        names = {p.name for p in out.iterdir()}
        assert {"checks.csv", "checks.json", "checks.png",
                "absorption_depths.csv", "absorption_depths.png", "fold_G2.png"} <= names

    def test_export_bundle(self, tmp_path, capsys):
        out = tmp_path / "exp"
        code, _, _ = run(["export", "--out-dir", str(out), "--max-n", "2"], capsys)
        assert code == 0
        index = json.loads((out / "index.json").read_text())
        assert "graph_G2.dot" in index["files"]
        assert (out / "windows_2x2_up.csv").exists()
