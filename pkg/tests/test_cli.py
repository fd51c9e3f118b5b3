import json

import pytest

from chromaface.cli import main


@pytest.fixture
def work(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("CHROMAFACE_BUDGET", raising=False)
    return tmp_path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def fields(text):
    return dict(line.split(": ", 1) for line in text.splitlines() if ": " in line)


def test_gen_headers(work, capsys):
    assert run(capsys, "gen", "--family", "tm", "--m", "4", "--out", "t4")[0] == 0
    assert run(capsys, "gen", "--family", "gn", "--n", "3", "--out", "g3")[0] == 0
    assert run(capsys, "gen", "--family", "cycle", "--n", "9", "--out", "c9")[0] == 0
    assert (work / "t4.pg").read_text().splitlines()[0] == "pg 25 61"
    assert (work / "t4.cert").exists()
    assert (work / "g3.pg").read_text().splitlines()[0] == "pg 7 10"
    assert (work / "c9.el").read_text().splitlines()[0] == "p 9 9"


def test_gen_bad_parameter(work, capsys):
    code, _, err = run(capsys, "gen", "--family", "cycle", "--n", "8", "--out", "c8")
    assert code == 2 and "odd" in err
    assert run(capsys, "gen", "--family", "tm", "--n", "4", "--out", "x")[0] == 2


def test_metrics(work, capsys):
    run(capsys, "gen", "--family", "tm", "--m", "4", "--out", "t4")
    run(capsys, "gen", "--family", "gn", "--n", "3", "--out", "g3")
    run(capsys, "gen", "--family", "gn", "--n", "3", "--out", "prism", "--unsubdivided")
    run(capsys, "gen", "--family", "cycle", "--n", "9", "--out", "c9")
    code, out, _ = run(capsys, "metrics", "t4.pg")
    f = fields(out)
    assert code == 0 and f["fbar"] == "61/19" and f["local_min"] == "16/5"
    assert fields(run(capsys, "metrics", "g3.pg")[1])["fbar"] == "4"
    f = fields(run(capsys, "metrics", "prism.pg")[1])
    assert f["fstar"] == "11/3" and f["fstar_status"] == "exact"
    assert fields(run(capsys, "metrics", "c9.el")[1])["fbar"] == "9"


def test_metrics_round_trip_identical(work, capsys):
    run(capsys, "gen", "--family", "hn", "--n", "4", "--out", "h4")
    first = run(capsys, "metrics", "h4.pg", "--json")[1]
    (work / "copy.pg").write_text((work / "h4.pg").read_text())
    assert run(capsys, "metrics", "copy.pg", "--json")[1] == first


def test_json_mirrors_text(work, capsys):
    run(capsys, "gen", "--family", "tm", "--m", "4", "--out", "t4")
    text = fields(run(capsys, "metrics", "t4")[1])
    data = json.loads(run(capsys, "metrics", "t4", "--json")[1])
    assert set(data) == set(text)
    assert data["fbar"] == "61/19" and data["size_identity"] is True


def test_approx_only_on_request(work, capsys):
    run(capsys, "gen", "--family", "tm", "--m", "4", "--out", "t4")
    plain = run(capsys, "metrics", "t4")[1]
    assert "." not in plain.replace("t4.pg", "")
    assert "(~3.210526)" in run(capsys, "metrics", "t4", "--approx")[1]


def test_verify_modes(work, capsys):
    run(capsys, "gen", "--family", "tm", "--m", "4", "--out", "t4")
    run(capsys, "gen", "--family", "gn", "--n", "3", "--out", "prism", "--unsubdivided")
    code, out, _ = run(capsys, "verify", "t4", "--mode", "critical")
    assert code == 0 and out.strip() == "critical: true (61/61 deletions class 1)"
    code, out, _ = run(capsys, "verify", "prism", "--mode", "critical")
    assert code == 1 and out.startswith("critical: false")
    code, out, _ = run(capsys, "verify", "t4", "--mode", "overfull")
    assert code == 0 and "equality: true" in out
    assert run(capsys, "verify", "prism", "--mode", "overfull")[0] == 1
    code, out, _ = run(capsys, "verify", "t4", "--mode", "chromatic", "--coloring-out", "t4.col")
    assert code == 0 and fields(out)["chromatic_index"] == "6"
    assert (work / "t4.col").read_text().startswith("col 61 6")
    assert run(capsys, "verify", "t4", "--mode", "lemmas")[0] == 0


def test_discharge(work, capsys):
    run(capsys, "gen", "--family", "tm", "--m", "4", "--out", "t4")
    code, out, _ = run(capsys, "discharge", "t4.pg", "--ruleset", "delta6")
    assert code == 0
    assert out.splitlines()[0] == "total_initial: -9, total_final: -9, faces4plus_final_zero: true"
    code, out, _ = run(capsys, "discharge", "t4.pg", "--ruleset", "delta5", "--r", "8", "--log")
    assert code == 0 and "R2.1:" in out and fields(out)["r"] == "8"
    data = json.loads(run(capsys, "discharge", "t4.pg", "--ruleset", "delta5", "--json", "--log")[1])
    assert data["total_final"] == "-8" and data["log"]


def test_discharge_input_errors(work, capsys):
    run(capsys, "gen", "--family", "hn", "--n", "3", "--out", "h3")
    assert run(capsys, "discharge", "h3.el", "--ruleset", "delta6")[0] == 2
    code, _, err = run(capsys, "discharge", "h3.pg", "--ruleset", "delta5")
    assert code == 2 and "r > 3" in err
    assert run(capsys, "discharge", "h3.pg", "--ruleset", "delta5", "--r", "x")[0] == 2


def test_check_exit_codes(work, capsys):
    run(capsys, "gen", "--family", "gn", "--n", "4", "--out", "g4")
    assert run(capsys, "check", "g4")[0] == 0
    (work / "p.el").write_text("p 3 2\ne 1 2\ne 2 3\n")
    code, out, _ = run(capsys, "check", "p.el", "--k", "3")
    assert code == 1 and "FAILS" in out


def test_embeddings(work, capsys):
    (work / "w.el").write_text("p 6 8\ne 1 2\ne 1 3\ne 1 5\ne 1 6\ne 2 3\ne 3 4\ne 3 6\ne 4 5\n")
    code, out, _ = run(capsys, "embeddings", "w.el")
    f = fields(out)
    assert code == 0 and f["embedding_dependent"] == "true" and f["local_min_range"] == "7/2, 4"


def test_budget_env(work, capsys, monkeypatch):
    (work / "w.el").write_text("p 6 8\ne 1 2\ne 1 3\ne 1 5\ne 1 6\ne 2 3\ne 3 4\ne 3 6\ne 4 5\n")
    monkeypatch.setenv("CHROMAFACE_BUDGET", "1")
    f = fields(run(capsys, "embeddings", "w.el")[1])
    assert f["plane_embeddings"] == "none" and f["fstar_status"] == "lower_bound"
    monkeypatch.setenv("CHROMAFACE_BUDGET", "lots")
    assert run(capsys, "embeddings", "w.el")[0] == 2


def test_table(work, capsys):
    code, out, _ = run(capsys, "table")
    assert code == 0 and "100/13" in out and "17/5" in out
    rows = json.loads(run(capsys, "table", "--json")[1])["rows"]
    assert [r["k"] for r in rows] == [2, 3, 4, 5, 6]


def test_missing_input(work, capsys):
    assert run(capsys, "metrics", "nowhere")[0] == 2
    assert run(capsys, "bogus")[0] == 2


def test_malformed_input(work, capsys):
    (work / "bad.el").write_text("p 3 1\ne 1 9\n")
    code, _, err = run(capsys, "verify", "bad.el", "--mode", "chromatic")
    assert code == 2 and err.startswith("error:")


def test_repro_subset(work, capsys):
    code, out, _ = run(capsys, "repro", "--only", "1", "--only", "4")
    assert code == 0 and "2/2 criteria passed" in out
    code, out, _ = run(capsys, "repro", "--only", "7", "--json")
    data = json.loads(out)
    assert code == (0 if data["passed"] == data["total"] else 1)
