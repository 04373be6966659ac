import json

from minvenn.cli import main


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_build_n8_json(capsys):
    code, out, err = run(capsys, ["build", "--n", "8"])
    assert code == 0
    doc = json.loads(out)
    assert doc["crossings"] == 40
    assert doc["report"]["passed"] is True
    assert "verdict: PASS" in err


def test_build_rejects_small_n(capsys):
    code, out, err = run(capsys, ["build", "--n", "7"])
    assert code == 2
    assert "n >= 8 required" in err


def test_build_rejects_over_cap(capsys):
    code, _out, err = run(capsys, ["build", "--n", "17"])
    assert code == 2
    assert "cap" in err
    code, _out, err = run(capsys, ["build", "--n", "8", "--cap", "21"])
    assert code == 2


def test_unknown_flag_and_command(capsys):
    assert run(capsys, ["build", "--n", "8", "--frobnicate"])[0] == 2
    assert run(capsys, ["bogus"])[0] == 2
    assert run(capsys, [])[0] == 2


def test_build_is_deterministic(capsys):
    _, out1, _ = run(capsys, ["build", "--n", "8"])
    _, out2, _ = run(capsys, ["build", "--n", "8"])
    assert out1 == out2


def test_build_dot_and_svg(capsys):
    code, out, _ = run(capsys, ["build", "--n", "8", "--format", "dot"])
    assert code == 0 and out.startswith("graph venn_dual {")
    code, out, _ = run(capsys, ["build", "--n", "8", "--format", "svg-dual"])
    assert code == 0 and "<svg" in out
    code, out, _ = run(capsys, ["build", "--n", "8", "--format", "svg-primal"])
    assert code == 0 and "<svg" in out


def test_build_svg_needs_concentric_layout(capsys):
    code, _out, err = run(capsys, ["build", "--n", "9", "--format", "svg-dual"])
    assert code == 2
    assert "layout" in err


def test_build_out_file(tmp_path, capsys):
    target = tmp_path / "venn8.json"
    code, out, _ = run(capsys, ["build", "--n", "8", "--out", str(target)])
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["crossings"] == 40


def test_stats_rows(capsys):
    code, out, _ = run(capsys, ["stats", "--n-max", "16"])
    assert code == 0
    lines = out.splitlines()
    row16 = next(l for l in lines if l.strip().startswith("16"))
    assert row16.split() == ["16", "4369", "5118", "12870"]
    row8 = next(l for l in lines if l.strip().startswith("8 ") or l.strip() == "8" or l.split()[0] == "8")
    assert row8.split() == ["8", "37", "40", "70"]
    row3 = next(l for l in lines if l.split() and l.split()[0] == "3")
    assert row3.split() == ["3", "3", "-", "3"]


def test_gray_sequence_and_stats(capsys):
    code, out, _ = run(capsys, ["gray", "--k", "2", "--stats"])
    assert code == 0
    seq_line, stats_line = out.strip().splitlines()
    assert seq_line == "1 2 3 2 1 2 3 4 3 2 1 2 3 2 1"
    assert "nu=6" in stats_line and "lambda=8" in stats_line and "mu=14" in stats_line


def test_gray_scaled(capsys):
    code, out, _ = run(capsys, ["gray", "--k", "2", "--m", "1", "--stats"])
    assert code == 0
    assert "nu=12" in out and "lambda=16" in out


def test_gray_rejects_bad_k(capsys):
    assert run(capsys, ["gray", "--k", "1"])[0] == 2
    assert run(capsys, ["gray", "--k", "5"])[0] == 2


def test_partition_text(capsys):
    code, out, err = run(capsys, ["partition", "--k", "2"])
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("x=0:")
    assert "partition check: PASS" in err


def test_partition_svg(capsys):
    code, out, _ = run(capsys, ["partition", "--k", "2", "--format", "svg-dual"])
    assert code == 0
    assert "<svg" in out


def test_verify_round_trip(tmp_path, capsys):
    target = tmp_path / "venn8.json"
    run(capsys, ["build", "--n", "8", "--out", str(target)])
    code, out, err = run(capsys, ["verify", str(target)])
    assert code == 0
    assert out == ""
    assert "verdict: PASS" in err
    code, out, _ = run(capsys, ["verify", str(target), "--json"])
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_verify_rejects_garbage(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, ["verify", str(bad)])[0] == 2
    missing = tmp_path / "missing.json"
    assert run(capsys, ["verify", str(missing)])[0] == 2


def test_verify_failing_document(tmp_path, capsys):
    # a structurally consistent but invalid dual graph: bare partition rings
    from minvenn.builder import partition_preview_graph
    from minvenn.export import dump_json, to_json

    doc = dump_json(to_json(partition_preview_graph(2)))
    target = tmp_path / "rings.json"
    target.write_text(doc)
    code, _out, err = run(capsys, ["verify", str(target)])
    assert code == 1
    assert "verdict: FAIL" in err
