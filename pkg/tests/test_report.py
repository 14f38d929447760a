import json
from fractions import Fraction
from pathlib import Path

from cgcluster.report import SCHEMA_VERSION, RunReport, jsonable


def test_jsonable():
    assert jsonable({1: Fraction(1, 3), "p": Path("/a"), "s": {2}}) == {"1": "1/3", "p": "/a", "s": [2]}


def test_report_fields_and_timings(tmp_path):
    rep = RunReport("verify rank", {"n": [3]})
    with rep.timed("step"):
        pass
    rep.check("a", True, value=Fraction(2, 3))
    assert rep.passed
    rep.check("b", False)
    assert not rep.passed
    d = rep.to_json()
    assert d["schema"] == SCHEMA_VERSION
    assert set(d) == {"schema", "command", "parameters", "passed", "checks", "findings", "artifacts", "timings"}
    assert d["checks"][0]["detail"] == {"value": "2/3"}
    assert "timings" not in rep.to_json(timings=False)
    path = rep.write(tmp_path / "sub" / "r.json")
    assert json.loads(path.read_text())["command"] == "verify rank"


def test_report_reproducible_without_timings():
    def run():
        r = RunReport("x", {"n": 3})
        with r.timed("t"):
            r.check("ok", True)
        return r.dumps(timings=False)

    assert run() == run()
