import json
import re

import jsonschema
import pytest

from nccov.cli import main
from nccov.errors import ConfigError
from nccov.ncmatrix import flipped_product_order
from nccov.suites import REPORT_SCHEMA, SUITES, SuiteConfig, run_suite


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_transform_suite_example(capsys):
    code, out, _ = run(capsys, "check", "--suite", "transform", "--dim", "2", "--trials", "50",
                       "--seed", "7")
    report = json.loads(out)
    assert code == 0
    assert report["suite"] == "transform"
    assert all(p["failures"] == 0 and p["passes"] == 50 for p in report["properties"])
    jsonschema.validate(report, REPORT_SCHEMA)
    code2, out2, _ = run(capsys, "check", "--suite", "transform", "--dim", "2", "--trials", "50",
                         "--seed", "7")
    assert (code2, out2) == (code, out)


@pytest.mark.parametrize("field, value", [
    ("trials", 0), ("dim", 0), ("dim", 9), ("arity", 4), ("max_terms", 0), ("suite", "nope"),
    ("format", "xml"), ("seed", -1), ("seed", 2**64),
])
def test_config_bounds(field, value):
    with pytest.raises(ConfigError):
        SuiteConfig(**{field: value})


def test_cli_config_error_exit_code(capsys):
    code, _, err = run(capsys, "check", "--trials", "0")
    assert code == 2
    assert "trials" in err


def test_mutation_is_detected():
    cfg = SuiteConfig(suite="vspace", dim=2, trials=20, seed=3)
    assert run_suite(cfg).ok
    with flipped_product_order():
        report = run_suite(cfg)
    assert report.total_failures > 0
    broken = [p for p in report.properties if p.failures]
    for p in broken:
        ce = p.counterexample
        assert isinstance(ce, dict) and "trial" in ce
        json.dumps(ce)
    jsonschema.validate(report.to_dict(), REPORT_SCHEMA)


def test_mutation_exit_code(capsys):
    with flipped_product_order():
        code, out, _ = run(capsys, "check", "--suite", "linear", "--trials", "10", "--seed", "1",
                           "--format", "text")
    assert code == 1
    assert "counterexample:" in out and "FAILURES" in out


def test_text_and_json_agree():
    cfg = dict(suite="skew", dim=2, trials=5, seed=11)
    as_json = run_suite(SuiteConfig(**cfg)).to_dict()
    text = run_suite(SuiteConfig(**cfg, format="text")).to_text()
    for p in as_json["properties"]:
        m = re.search(rf"^(PASS|FAIL) {re.escape(p['name'])}: (\d+)/(\d+) passed, (\d+) failed", text, re.M)
        assert m is not None
        assert (int(m.group(2)), int(m.group(3)), int(m.group(4))) == (p["passes"], p["trials"], p["failures"])
    assert text.rstrip().endswith("ALL PASS")


def test_every_suite_runs_and_validates():
    for s in SUITES:
        report = run_suite(SuiteConfig(suite=s, dim=2, trials=3, seed=5))
        assert report.ok, s
        jsonschema.validate(json.loads(report.to_json()), REPORT_SCHEMA)


def test_polylinear_arity_is_in_the_name():
    report = run_suite(SuiteConfig(suite="polylinear", arity=3, dim=2, trials=3))
    assert [p.name for p in report.properties] == ["polylinear_covariance_arity3"]


def test_timing_is_opt_in():
    cfg = SuiteConfig(suite="matrix", trials=2)
    assert run_suite(cfg).elapsed_ms is None
    assert run_suite(cfg, timing=True).elapsed_ms >= 0


def test_output_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "check", "--suite", "matrix", "--trials", "3", "-o", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["suite"] == "matrix"


def test_demo_endo(capsys):
    code, out, _ = run(capsys, "demo", "--kind", "endo", "--g", "i,0;0,1", "--f", "j,0;0,1")
    assert code == 0
    assert re.search(r"f2\s+= -j,0;0,1", out)
    assert "verdict: EQUAL" in out


def test_demo_basis_change_identity(capsys):
    code, out, _ = run(capsys, "demo", "--kind", "basis-change", "--g", "1,0;0,1", "--v", "i,1/2")
    assert code == 0
    assert "v2 (coords in e2)     = (i, 1/2)" in out
    assert "v1 = v2 g             = (i, 1/2)" in out


@pytest.mark.parametrize("kind", ["polylinear", "skew"])
def test_demo_tensor_kinds(capsys, kind):
    code, out, _ = run(capsys, "demo", "--kind", kind, "--g", "1,i;0,j",
                       "--a", "0.0.1=i|j|k & 1|1|1; 1.1.0=j|1|1")
    assert code == 0, out
    assert "verdict: EQUAL" in out


def test_demo_parse_error(capsys):
    code, _, err = run(capsys, "demo", "--kind", "basis-change", "--g", "1+")
    assert code == 2
    assert "offset 2" in err


def test_demo_singular(capsys):
    code, _, err = run(capsys, "demo", "--kind", "endo", "--g", "1,i;j,-k")
    assert code == 2
    assert "nonsingular" in err
