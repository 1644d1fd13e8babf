import csv
import io
import json

import pytest

from randic_cacti import canonical_label, emit_report, parse_digraph
from randic_cacti.cli import run_cli
from randic_cacti.report import CSV_COLUMNS, VerificationReport, instance_id, write_report
from randic_cacti.verify import verify_theorem

C4 = "4 4\n0 1\n1 2\n2 3\n0 3\n"
G2 = "5 6\n0 1\n0 2\n0 3\n0 4\n1 2\n3 4\n"


@pytest.fixture
def files(tmp_path):
    (tmp_path / "c4.txt").write_text(C4)
    (tmp_path / "g2.txt").write_text(G2)
    return tmp_path


# --- emit_report --------------------------------------------------------------------


def test_empty_report_json():
    doc = json.loads(emit_report(VerificationReport("theorem")))
    assert doc["violations"] == [] and doc["passed"] is True
    assert set(doc) >= {"claim", "grid", "instances", "violations", "equality_cases", "max_tables", "wall_ms"}


def test_theorem_csv_rows():
    rep = verify_theorem(n_max=6, r_max=2, a_list=(1,))
    rows = emit_report(rep, "csv").splitlines()
    assert rows[0] == ",".join(CSV_COLUMNS)
    assert "6,2,1,19,19,2,true" in rows
    assert "4,1,1,8,8,4,true" in rows
    parsed = list(csv.DictReader(io.StringIO(emit_report(rep, "csv"))))
    assert len(parsed) == len(rep.max_tables)


def test_text_format_and_unknown_format():
    rep = verify_theorem(n_max=4, r_max=1, a_list=(1,))
    text = emit_report(rep, "text")
    assert text.startswith("[PASS] theorem:")
    with pytest.raises(ValueError):
        emit_report(rep, "xml")


def test_timing_flag_makes_output_stable():
    a = emit_report(verify_theorem(n_max=6, r_max=2, a_list=(1, 2)), "json", timing=False)
    b = emit_report(verify_theorem(n_max=6, r_max=2, a_list=(1, 2)), "json", timing=False)
    assert a == b and '"wall_ms": 0' in a


def test_write_report_unwritable(tmp_path):
    with pytest.raises(OSError):
        write_report("x", tmp_path / "missing-dir" / "r.json")


def test_instance_ids():
    d = parse_digraph("3 2\n0 1\n2 1")
    assert instance_id(d) == "n3:0>1,2>1"
    assert instance_id(d.underlying()) == "n3:0-1,1-2"


# --- CLI ---------------------------------------------------------------------------


def test_cli_index_graph(files, capsys):
    assert run_cli(["index", "--graph", str(files / "c4.txt"), "--a", "1"]) == 0
    assert capsys.readouterr().out.strip() == "R = 16"


def test_cli_index_digraph_and_halves(files, capsys):
    (files / "d.txt").write_text("3 3\n0 1\n1 2\n2 0\n")
    assert run_cli(["index", "--graph", str(files / "d.txt"), "--digraph", "--a", "1"]) == 0
    assert capsys.readouterr().out.strip() == "R = 3"
    (files / "k.txt").write_text("# digraph\n3 2\n0 1\n0 2\n")
    assert run_cli(["index", "--graph", str(files / "k.txt"), "--a", "1,2"]) == 0
    assert capsys.readouterr().out.splitlines() == ["a=1: R = 3", "a=2: R = 5"]


def test_cli_float_mode(files, capsys):
    assert run_cli(["index", "--graph", str(files / "c4.txt"), "--a", "1.5"]) == 0
    assert capsys.readouterr().out.strip() == f"R = {4 * 2 ** 2.5:.12g}"


def test_cli_orient_max(files, capsys):
    for extra in ([], ["--method", "bnb"], ["--halve-reversal", "true"]):
        assert run_cli(["orient-max", "--graph", str(files / "g2.txt"), "--a", "1", *extra]) == 0
        assert capsys.readouterr().out.splitlines()[0] == "max = 14, witnesses = 2"


def test_cli_construct_round_trip(files, capsys):
    out = files / "ext"
    assert run_cli(["construct-extremal", "--n", "6", "--r", "2", "--a", "1", "--out", str(out)]) == 0
    printed = capsys.readouterr().out
    assert printed.count("R=19") == 2
    paths = sorted(out.iterdir())
    assert len(paths) == 2
    from randic_cacti import build_extremal_orientations

    originals = build_extremal_orientations(6, 2)
    for p, d in zip(paths, originals):
        assert canonical_label(parse_digraph(p.read_text())) == canonical_label(d)
        assert run_cli(["index", "--graph", str(p), "--a", "1"]) == 0
        assert capsys.readouterr().out.strip() == "R = 19"


def test_cli_gen_cacti(files, capsys):
    assert run_cli(["gen-cacti", "--n-max", "5", "--r-max", "2", "--out", str(files / "cat")]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "n,r,count" and "4,1,2" in lines and "5,2,1" in lines
    assert (files / "cat" / "cactus_n5_r2_0.txt").exists()


def test_cli_verify_theorem_exit_zero(files, capsys):
    code = run_cli(["verify", "theorem", "--n-max", "7", "--r-max", "2", "--a", "1,2", "--no-timing"])
    assert code == 0
    assert json.loads(capsys.readouterr().out)["violations"] == []


def test_cli_verify_violations_exit_one(files, capsys):
    out = files / "cat.json"
    assert run_cli(["verify", "catalogs", "--a", "1", "--out", str(out)]) == 1
    assert json.loads(out.read_text())["violations"]
    assert "[FAIL] catalogs" in capsys.readouterr().err


def test_cli_verify_csv_output(files, capsys):
    out = files / "t.csv"
    assert run_cli(["verify", "theorem", "--n-max", "6", "--r-max", "2", "--a", "1", "--format", "csv", "--out", str(out)]) == 0
    assert "6,2,1,19,19,2,true" in out.read_text().splitlines()


def test_cli_deterministic_bytes(files):
    paths = [files / "a.json", files / "b.json"]
    for p in paths:
        run_cli(["verify", "theorem", "--n-max", "6", "--r-max", "2", "--a", "1", "--no-timing", "--out", str(p)])
    assert paths[0].read_bytes() == paths[1].read_bytes()


@pytest.mark.parametrize(
    "argv, needle",
    [
        (["index", "--graph", "MISSING", "--a", "1"], "--graph"),
        (["index", "--graph", "{dir}/bad.txt", "--a", "1"], "line 3"),
        (["index", "--graph", "{dir}/c4.txt", "--a", "0"], "--a"),
        (["index", "--graph", "{dir}/c4.txt", "--a", "1.5", "--mode", "exact"], "--a"),
        (["construct-extremal", "--n", "4", "--r", "2", "--a", "1"], "--n/--r"),
        (["gen-cacti", "--n-max", "11"], "--n-max"),
        (["verify", "theorem", "--n-max", "11"], "verify theorem"),
        (["verify", "theorem", "--out", "{dir}/no/such/dir/r.json", "--n-max", "4", "--r-max", "1", "--a", "1"], "--out"),
    ],
)
def test_cli_input_errors_exit_two(files, capsys, argv, needle):
    (files / "bad.txt").write_text("3 2\n0 1\n0 9\n")
    argv = [x.format(dir=files) for x in argv]
    assert run_cli(argv) == 2
    assert needle in capsys.readouterr().err


def test_cli_usage_errors_exit_two(capsys):
    assert run_cli([]) == 2
    assert run_cli(["verify", "nonsense"]) == 2
    assert run_cli(["orient-max", "--graph", "x", "--a", "1", "--halve-reversal", "maybe"]) == 2
