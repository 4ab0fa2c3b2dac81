import json
import subprocess
import sys

import pytest

from acbsoliton.builtin import builtin_example
from acbsoliton.cli import main
from acbsoliton.document import dump_document


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("cmd", ["validate", "classify", "soliton", "verify", "report"])
@pytest.mark.parametrize("example", ["sasaki5", "f5dim3", "flat3"])
def test_examples_exit_zero(capsys, cmd, example):
    code, out, _ = run(capsys, cmd, "--example", example, "--format", "json")
    assert code == 0
    assert json.loads(out)["schema"] == 1


def test_report_json_contents(capsys):
    _, out, _ = run(capsys, "report", "--example", "sasaki5", "--format", "json")
    doc = json.loads(out)
    assert list(doc) == ["schema", "manifold", "validation", "tensors", "classification", "fits", "theorems"]
    sol = doc["fits"]["ricci_like_soliton"]
    assert (sol["lambda"], sol["mu"], sol["nu"]) == ("0", "1", "-5")
    assert doc["theorems"]["theorem_sasaki"]["cases"] == ["iii"]
    assert doc["theorems"]["theorem_torse"]["status"] == "skipped"
    assert doc["tensors"]["ricci"] == {"0,0": "4"}


def test_f5dim3_report(capsys):
    _, out, _ = run(capsys, "report", "--example", "f5dim3", "--format", "json")
    doc = json.loads(out)
    assert doc["classification"]["torse_forming"]["f"] == "-p"
    assert doc["fits"]["ricci_like_soliton"]["lambda"] == "p + 2*p^2"
    assert doc["theorems"]["theorem_torse"]["cases"] == ["iii"]


def test_section_filter_and_text(capsys):
    code, out, _ = run(capsys, "soliton", "--example", "f5dim3", "--set", "p=1", "--section", "fits")
    assert code == 0
    assert "[fits]" in out and "[classification]" not in out
    assert "kind: expanding" in out and "lambda: 3" in out


def test_signature_failure_is_input_error(capsys, tmp_path):
    doc = json.loads(dump_document(builtin_example("f5dim3")))
    doc["metric"] = [["1", "0", "0"], ["0", "q", "0"], ["0", "0", "-q"]]
    doc["params"] = ["p", "q"]
    path = tmp_path / "m.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "report", "--input", str(path), "--set", "p=1", "--set", "q=0")
    assert code == 2 and "signature" in err


def test_verifier_failure_exits_one(capsys, tmp_path, monkeypatch):
    from acbsoliton import analysis
    from acbsoliton.checks import Check

    monkeypatch.setattr(analysis, "scalar_curvature_trace_check",
                        lambda m, s: Check("tau_from_soliton", "fail", "forced"))
    code, out, _ = run(capsys, "verify", "--example", "flat3")
    assert code == 1 and "FAIL tau_from_soliton" in out


@pytest.mark.parametrize("argv, message", [
    (["report", "--example", "f5dim3", "--set", "p"], "PARAM=RATIONAL"),
    (["report", "--example", "f5dim3", "--set", "p=x"], "not a rational"),
    (["report", "--example", "f5dim3", "--set", "z=1"], "unknown parameters"),
    (["report", "--example", "sasaki5", "--set", "p=1"], "no value given"),
    (["report", "--input", "/nonexistent.json"], "cannot read"),
])
def test_input_errors(capsys, argv, message):
    code, _, err = run(capsys, *argv)
    assert code == 2 and message in err


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["report"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["report", "--example", "unknown"])
    assert info.value.code == 2


def test_bad_document_exits_two(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"dim": 3')
    code, _, err = run(capsys, "validate", "--input", str(path))
    assert code == 2 and "invalid JSON" in err


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "acbsoliton", "report", "--example", "sasaki5", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a.startswith(b'{\n  "schema": 1')
