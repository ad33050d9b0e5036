import csv
import io
import json

import pytest

from hilmod import kernels
from hilmod.cli import main
from hilmod.serialize import dump_elementary
from hilmod.suites import delta1


@pytest.fixture(autouse=True)
def restore_kernels():
    before = kernels.BACKEND
    yield
    kernels.use(before)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_example_json(capsys):
    code, out, _ = run(capsys, "verify-example", "--max-level", "4", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["all_passed"] and rep["command"] == "verify-example"
    assert [r["diff_gram_norm"] for r in rep["rows"]] == ["1/2", "1/4", "1/8", "1/16"]
    assert [r["blowup_measure"] for r in rep["rows"]] == ["1/1", "1/2", "1/4", "1/8"]
    assert [r["pointwise_sup"] for r in rep["rows"]] == ["1/1", "2/1", "3/1", "4/1"]
    assert "elapsed_ms" not in rep


def test_timing_flag(capsys):
    _, out, _ = run(capsys, "verify-example", "--max-level", "2", "--format", "json", "--timing")
    assert isinstance(json.loads(out)["elapsed_ms"], int)


def test_csv_and_decimals(capsys):
    code, out, _ = run(capsys, "verify-example", "--max-level", "3", "--format", "csv", "--decimals", "4")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[2]["diff_gram_norm"] == "1/8"
    assert rows[2]["diff_gram_norm_decimal"] == "0.1250"


def test_text(capsys):
    code, out, _ = run(capsys, "walsh-check", "--level", "3", "--cases", "5", "--seed", "1")
    assert code == 0
    assert out.splitlines()[0] == "walsh-check: cases=5 level=3 seed=1"
    assert out.rstrip().endswith("all_passed: true")


@pytest.mark.parametrize("n", ["0", "17"])
def test_max_level_out_of_range(capsys, n):
    code, _, err = run(capsys, "verify-example", "--max-level", n)
    assert code == 2 and "max-level" in err


def test_max_level_env(capsys, monkeypatch):
    monkeypatch.setenv("HILMOD_MAX_LEVEL", "3")
    assert run(capsys, "verify-example", "--max-level", "4")[0] == 2
    assert run(capsys, "verify-example", "--max-level", "3")[0] == 0


def test_walsh_level_limit(capsys):
    assert run(capsys, "walsh-check", "--level", "9")[0] == 2


def test_zero_cases_vacuous(capsys):
    for cmd in ("walsh-check", "functional-check", "axioms"):
        argv = [cmd, "--cases", "0", "--format", "json"]
        if cmd == "walsh-check":
            argv += ["--level", "2"]
        code, out, _ = run(capsys, *argv)
        assert code == 0
        assert json.loads(out)["all_passed"] is True


def test_functional_fixture(capsys):
    code, out, _ = run(capsys, "functional-check", "--fixture", "delta1", "--format", "json")
    assert code == 0
    (row,) = json.loads(out)["rows"]
    assert (row["lhs"], row["mid"], row["rhs"]) == ("1/4", "1/2", "1/2")


def test_functional_max_mass(capsys):
    code, out, _ = run(capsys, "functional-check", "--cases", "20", "--max-mass", "3", "--format", "json")
    assert code == 0
    assert {r["form"] for r in json.loads(out)["rows"]} <= {"literal", "mass-corrected"}
    assert run(capsys, "functional-check", "--max-mass", "0")[0] == 2
    assert run(capsys, "functional-check", "--max-mass", "x")[0] == 2


def test_axioms_with_input(capsys, tmp_path):
    path = tmp_path / "f.json"
    path.write_text(json.dumps(dump_elementary(delta1())))
    code, out, _ = run(capsys, "axioms", "--cases", "10", "--input", str(path), "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["parameters"]["fixtures"] == 1
    assert {r["axiom"] for r in rep["rows"]} >= {"sesquilinearity", "module_cauchy_schwarz", "oracle_equivalence"}


@pytest.mark.parametrize("text", ["{broken", '{"domain_partition": {"cells": []}, "coefficients": []}', "[1]"])
def test_axioms_corrupt_input(capsys, tmp_path, text):
    path = tmp_path / "bad.json"
    path.write_text(text)
    assert run(capsys, "axioms", "--input", str(path))[0] == 2


def test_missing_input(capsys, tmp_path):
    assert run(capsys, "axioms", "--input", str(tmp_path / "absent.json"))[0] == 2


def test_roundtrip(capsys, tmp_path, monkeypatch):
    path = tmp_path / "p.json"
    path.write_text('{"cells": [{"level": 1, "index": 0}, {"level": 1, "index": 1}]}')
    code, out, _ = run(capsys, "roundtrip", "--kind", "partition", "--input", str(path))
    assert code == 0
    assert json.loads(out) == {"cells": [{"index": 0, "level": 1}, {"index": 1, "level": 1}]}
    monkeypatch.setattr("sys.stdin", io.StringIO('"6/4"'))
    code, out, _ = run(capsys, "roundtrip", "--kind", "rational")
    assert code == 0 and json.loads(out) == "3/2"


def test_inner(capsys, tmp_path):
    path = tmp_path / "d.json"
    path.write_text(json.dumps(dump_elementary(delta1())))
    code, out, _ = run(capsys, "inner", str(path), str(path))
    assert code == 0
    body = json.loads(out)
    assert body["norm"] == "1/2" and body["module_norm_sq"] == "1/2"
    assert body["inner_product"]["values"] == ["1/2"]


def test_kernels_flag(capsys):
    outs = set()
    for impl in sorted(kernels.IMPLEMENTATIONS):
        code, out, _ = run(capsys, "--kernels", impl, "axioms", "--cases", "5", "--format", "json")
        assert code == 0
        outs.add(out)
    assert len(outs) == 1


def test_argparse_usage_exit():
    with pytest.raises(SystemExit) as exc:
        main(["verify-example"])
    assert exc.value.code == 2


def test_verify_example_text_columns(capsys):
    code, out, _ = run(capsys, "verify-example", "--max-level", "3")
    assert code == 0
    lines = out.splitlines()
    cols = lines[1].split()
    rows = [dict(zip(cols, line.split())) for line in lines[2:5]]
    assert [r["diff_gram_norm"] for r in rows] == ["1/2", "1/4", "1/8"]
    assert [r["blowup_measure"] for r in rows] == ["1/1", "1/2", "1/4"]


def test_verify_example_single_row(capsys):
    code, out, _ = run(capsys, "verify-example", "--max-level", "1", "--format", "json")
    rows = json.loads(out)["rows"]
    assert code == 0 and len(rows) == 1 and rows[0]["passed"]


@pytest.mark.parametrize("level,cases,seed", [(4, 50, 1), (0, 1, 0)])
def test_walsh_examples(capsys, level, cases, seed):
    code, out, _ = run(capsys, "walsh-check", "--level", str(level), "--cases", str(cases), "--seed", str(seed), "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["all_passed"] and len(rep["rows"]) == cases


def test_functional_defaults(capsys):
    code, out, _ = run(capsys, "functional-check", "--cases", "200", "--seed", "7", "--format", "json")
    assert code == 0 and json.loads(out)["all_passed"]
    code, out, _ = run(capsys, "functional-check", "--fixture", "one", "--format", "json")
    (row,) = json.loads(out)["rows"]
    assert code == 0 and (row["lhs"], row["mid"], row["rhs"]) == ("1/1", "1/1", "1/1")


def test_axioms_example(capsys):
    code, out, _ = run(capsys, "axioms", "--cases", "100", "--seed", "3", "--format", "json")
    assert code == 0 and json.loads(out)["all_passed"]
