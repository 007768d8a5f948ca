from __future__ import annotations

import json

import pytest

from trigraph.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dims_default(capsys):
    code, out, _ = run(capsys, "dims", "--m", "2")
    assert code == 0
    data = json.loads(out)
    recs = {r["id"]: r for r in data["records"]}
    assert recs["graph-dim-connected-m1-literature"]["computed"] == 1
    assert recs["chords-m3"]["verdict"] == "pass"
    assert recs["graph-dim-all-m2"]["verdict"] == "pass"
    assert [r["id"] for r in data["records"]] == sorted(recs)


def test_dims_informational_rows(capsys):
    code, out, _ = run(capsys, "dims", "--m", "3")
    assert code == 0
    recs = {r["id"]: r for r in json.loads(out)["records"]}
    assert recs["graph-dim-all-m3"]["verdict"] == "computed-no-expectation"


def test_cap_error_exit_two(capsys):
    code, _, err = run(capsys, "dims", "--m", "9")
    assert code == 2 and "dims_degree" in err


def test_usage_error_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["dims", "--format", "yaml"])
    assert exc.value.code == 2


def test_table219(capsys):
    code, out, _ = run(capsys, "table219", "--n", "3")
    assert code == 0
    data = json.loads(out)
    assert data["summary"]["pass"] == 6
    assert {(r["variant"], r["rank"]) for r in data["rows"]} == {
        ("sp-h", 15), ("sp-wedge3", 2), ("sp-u", 1), ("gl-h", 120), ("gl-wedge3", 6), ("gl-u", 4)}
    code, out, _ = run(capsys, "table219", "--n", "2")
    data = json.loads(out)
    assert code == 0 and data["summary"]["computed-no-expectation"] == 6
    assert not any(r["threshold_met"] for r in data["rows"] if r["variant"] != "sp-h")


def test_json_byte_identical(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        run(capsys, "identities", "run", "--suite", "eq20", "--suite", "lemma22", "--seed", "5", "--trials", "20",
            "--out", str(path))
    assert a.read_bytes() == b.read_bytes()


def test_jobs_do_not_change_output(capsys):
    args = ["verify", "--suite", "eq20", "--suite", "eq21", "--suite", "figure8", "--trials", "10"]
    _, one, _ = run(capsys, *args)
    _, two, _ = run(capsys, *args, "--jobs", "2")
    assert one == two


def test_identity_suites_exit_codes(capsys):
    code, _, _ = run(capsys, "identities", "run", "--suite", "lemma22", "--trials", "30")
    assert code == 0
    code, out, _ = run(capsys, "identities", "run", "--suite", "gamma", "--trials", "10")
    assert code == 1
    recs = {r["id"]: r["verdict"] for r in json.loads(out)["records"]}
    assert recs["gamma-commutes-n2"] == "fail"
    assert recs["gamma-anticommutes-n2"] == "pass"


def test_lagrangian_verify(capsys):
    code, out, _ = run(capsys, "lagrangian", "verify", "--n", "3", "--trials", "12", "--seed", "1")
    assert code == 0
    data = json.loads(out)
    assert len(data["records"]) == 12 and data["summary"]["pass"] == 12


def test_contract(capsys):
    code, out, _ = run(capsys, "contract", "--diagram", "2: (1 2)", "--n", "1")
    assert code == 0
    assert json.loads(out)["entries"] == [[["x1", "y1"], "1"], [["y1", "x1"], "-1"]]
    code, out, _ = run(capsys, "contract", "--diagram", "2: (1<2)", "--n", "1", "--format", "csv")
    assert out == "term,coefficient\ny1*x1,1\n"
    code, _, _ = run(capsys, "contract", "--diagram", "3: (1 2)", "--n", "1")
    assert code == 2


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "run.ini"
    cfg.write_text("[trigraph]\nseed = 3\ntrials = 7\nformat = csv\n")
    code, out, _ = run(capsys, "identities", "run", "--suite", "eq20", "--config", str(cfg))
    assert code == 0
    assert out.splitlines()[0] == "id,reference,expected,computed,verdict"
    assert "7/7" in out
    # flags override the file
    code, out, _ = run(capsys, "identities", "run", "--suite", "eq20", "--config", str(cfg), "--trials", "4")
    assert "4/4" in out
    bad = tmp_path / "bad.ini"
    bad.write_text("[trigraph]\ncolour = red\n")
    code, _, err = run(capsys, "dims", "--config", str(bad))
    assert code == 2 and "colour" in err


def test_text_format(capsys):
    code, out, _ = run(capsys, "table219", "--format", "text")
    assert code == 0
    assert out.startswith("suite table219\nPASS table-gl-h-m3-n3")
