import importlib.util
from pathlib import Path

BENCH = Path(__file__).resolve().parent.parent / "benchmarks" / "bench_kernels.py"


def test_benchmark_smoke(capsys):
    spec = importlib.util.spec_from_file_location("bench_kernels", BENCH)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    assert mod.main(["--repeat", "1", "--max-level", "3"]) == 0
    out = capsys.readouterr().out
    assert "refine" in out and "cauchy_report(3)" in out
