import json
from fractions import Fraction

import pytest

from cgcluster.cg import build_initial_seed
from cgcluster.cli import main, parse_ns
from cgcluster.exact import X, format_poly


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_ns():
    assert parse_ns("3..6") == [3, 4, 5, 6]
    assert parse_ns("3,5") == [3, 5]


def test_quiver_dot_and_json(capsys, tmp_path):
    code, out, _ = run(capsys, "quiver", "--n", "5")
    assert code == 0 and out.startswith("digraph")
    assert len([line for line in out.splitlines() if "shape=" in line]) == 25
    code, out, _ = run(capsys, "quiver", "--n", "3", "--format", "json", "--out-dir", str(tmp_path))
    data = json.loads(out)
    assert sum(a["mult"] for a in data["arrows"]) == 18
    assert (tmp_path / "quiver_plain_n3.png").stat().st_size > 0
    code, out, _ = run(capsys, "quiver", "--n", "5", "--flavor", "prime", "--format", "json")
    assert len(json.loads(out)["vertices"]) == 24
    assert run(capsys, "quiver", "--n", "2")[0] == 2


def test_bracket(capsys):
    code, out, _ = run(capsys, "bracket", "--n", "3", "--pair", "1,2", "1,1")
    assert code == 0 and out.strip() == format_poly((X(1, 1) * X(1, 2)).scale(Fraction(-2, 3)))
    assert run(capsys, "bracket", "--n", "3", "--pair", "1,2", "1,4")[0] == 2


def test_check_logcanonical(capsys):
    code, out, _ = run(capsys, "check", "logcanonical", "--n", "3", "--no-timings")
    rep = json.loads(out)
    assert code == 0 and rep["passed"] and "timings" not in rep
    om = rep["findings"]["omega[n=3]"]
    assert len(om["omega"]) == 9 and om["omega"][0][3] == "-4/3" and om["integer_rescaling"] == 3


def test_verify_rank_and_bounds(capsys):
    code, out, _ = run(capsys, "verify", "rank", "--n", "3..6")
    assert code == 0 and json.loads(out)["passed"]
    assert run(capsys, "verify", "rank", "--n", "9")[0] == 2
    assert run(capsys, "verify", "compat", "--n", "5")[0] == 2


def test_verify_tp_emits_witness(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "tp", "--n", "3", "--out-dir", str(tmp_path))
    rep = json.loads(out)
    assert code == 0
    assert rep["findings"]["witness[n=3]"]["t"] == "1"
    assert (tmp_path / "report.json").exists() and (tmp_path / "tp_curve_n3.png").exists()


def test_verify_regularity_and_rho(capsys):
    assert run(capsys, "verify", "regularity", "--n", "3", "--depth", "2")[0] == 0
    assert run(capsys, "verify", "rho", "--n", "3..8")[0] == 0


def test_reports_deterministic(capsys):
    a = run(capsys, "verify", "toric", "--n", "3", "--no-timings")[1]
    b = run(capsys, "verify", "toric", "--n", "3", "--no-timings")[1]
    assert a == b


def write_inputs(tmp_path, seq):
    seed = tmp_path / "seed.json"
    seed.write_text(build_initial_seed(3).dumps())
    sq = tmp_path / "seq.txt"
    sq.write_text(seq)
    return seed, sq


def test_mutate_identity_sequences(capsys, tmp_path):
    for text in ("", "2.2 2.2\n"):
        seed, sq = write_inputs(tmp_path, text)
        out = tmp_path / "out.json"
        code, _, _ = run(capsys, "mutate", str(seed), str(sq), "--out", str(out),
                         "--cache-dir", str(tmp_path / "cache"))
        assert code == 0
        assert json.loads(out.read_text()) == json.loads(seed.read_text())


def test_mutate_T_sequence(capsys, tmp_path):
    seed, sq = write_inputs(tmp_path, "3.2 2.2 1.2 3.3 3.1 2.3 3.2 2.2\n")
    code, out, _ = run(capsys, "mutate", str(seed), str(sq), "--cache-dir", str(tmp_path / "cache"))
    rep = json.loads(out)
    assert code == 0
    assert rep["findings"]["terminal quiver isomorphic to opposite of initial"]
    assert rep["findings"]["terminal cluster equals w0-conjugated initial cluster"]
    assert len(rep["findings"]["steps"]) == 8
    code, out, _ = run(capsys, "mutate", str(seed), str(sq), "--cache-dir", str(tmp_path / "cache"))
    assert json.loads(out)["findings"]["cache"]["hits"] == 8


def test_mutate_errors(capsys, tmp_path):
    seed, sq = write_inputs(tmp_path, "1.1\n")  # theta_n sits at the frozen vertex (1,1)
    assert run(capsys, "mutate", str(seed), str(sq))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(capsys, "mutate", str(bad), str(sq))[0] == 2


def test_tp_matrix(capsys, tmp_path):
    m = tmp_path / "m.json"
    m.write_text(json.dumps([["3", "2", "1"], ["2", "2", "1"], ["1", "1", "1"]]))
    for fam, expected in (("f1w0+f2", False), ("all", False), ("cg", False)):
        code, out, _ = run(capsys, "tp", "--n", "3", "--matrix", str(m), "--family", fam)
        assert code == 0 and json.loads(out)["findings"]["positive"] is expected
    m.write_text(json.dumps([["108", "201", "10"], ["9", "20", "1"], ["1", "19", "1"]]))
    code, out, _ = run(capsys, "tp", "--n", "3", "--matrix", str(m), "--family", "cg")
    assert json.loads(out)["findings"]["positive"] is True
    assert run(capsys, "tp", "--n", "4", "--matrix", str(m))[0] == 2


def test_gap_small_depth(capsys, tmp_path):
    code, out, _ = run(capsys, "gap", "--depth", "2", "--out-dir", str(tmp_path))
    rep = json.loads(out)
    assert code == 0
    assert rep["findings"]["p = p0 + x12 p1 + x12^2 p2 (unsigned form)"] is False
    assert (tmp_path / "gap_counts_mat.png").exists()


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as e:
        main(["verify", "nosuch"])
    assert e.value.code == 2
