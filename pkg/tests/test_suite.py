import json
from io import StringIO

import pytest

from pglreduce.cli import main
from pglreduce.exact import QuadIrr
from pglreduce.gl2 import Pgl
from pglreduce.suite import DEFAULT_CONFIG, ConfigError, RunConfig, run_verification_suite

SMALL = """\
corpus = quad(0,1,2,1)
corpus = quad(3,1,13,2)
height_bound = 8
depth = 20
slow_steps = 60
gamma_height = 3
"""


def test_default_config_exits_zero_and_is_deterministic(tmp_path):
    first, second = StringIO(), StringIO()
    assert main(["suite"], out=first) == 0
    assert main(["suite", "--config", str(DEFAULT_CONFIG)], out=second) == 0
    assert first.getvalue() == second.getvalue()
    recs = [json.loads(line) for line in first.getvalue().splitlines()]
    assert recs == sorted(recs, key=lambda r: (r["check"], r["input"]))
    assert all(r["pass"] for r in recs)


def test_output_file(tmp_path):
    cfg = tmp_path / "small.cfg"
    cfg.write_text(SMALL)
    target = tmp_path / "report.jsonl"
    assert main(["suite", "--config", str(cfg), "--output", str(target)], out=StringIO()) == 0
    assert all(json.loads(line)["pass"] for line in target.read_text().splitlines())


def test_config_round_trip():
    cfg = RunConfig.loads(SMALL)
    assert cfg.corpus == [QuadIrr(0, 1, 2, 1), QuadIrr(3, 1, 13, 2)]
    assert cfg.height_bound == 8 and cfg.gamma_height == 3
    assert RunConfig.loads(cfg.dumps()) == cfg


@pytest.mark.parametrize("text", [
    "height_bound = 5\n",  # empty corpus
    "corpus = quad(0,1,2,1)\ndepth = 0\n",
    "corpus = quad(0,1,2,1)\nbogus = 1\n",
    "corpus = quad(0,1,2,1)\ndepth = 3\ndepth = 4\n",
    "corpus = 1/2\n",
    "corpus quad(0,1,2,1)\n",
])
def test_bad_configs(text):
    with pytest.raises(ConfigError):
        RunConfig.loads(text)


def test_bad_config_is_usage_error(tmp_path):
    cfg = tmp_path / "empty.cfg"
    cfg.write_text("depth = 3\n")
    assert main(["suite", "--config", str(cfg)], out=StringIO()) == 2


def test_corrupted_w1_formula_fails_with_matrix(monkeypatch):
    import pglreduce.membership as m
    monkeypatch.setattr(m, "w1_element", lambda x: Pgl(0, -1, 1, 5))
    code, recs = run_verification_suite(RunConfig.loads(SMALL))
    assert code != 0
    bad = [r for r in recs if not r["pass"]]
    assert bad and all(r["check"] == "theorem1" for r in bad)
    assert [[0, -1], [1, -2]] in bad[0]["report"]["exceptional_w1"]


def test_unit_interval_value_reports_p_inequality():
    cfg = RunConfig.loads(SMALL.replace("quad(3,1,13,2)", "quad(-1,1,2,1)"))
    code, recs = run_verification_suite(cfg)
    assert code == 1
    bad = [r for r in recs if not r["pass"]]
    assert [r["check"] for r in bad] == ["classic_invariants"]
    assert {f["check"] for f in bad[0]["failures"]} == {"ineq4_p_fibonacci"}
