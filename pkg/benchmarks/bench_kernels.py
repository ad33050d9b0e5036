"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat R] [--max-level N]

Times each kernel on fixed inputs, then an end-to-end counterexample report,
once per available implementation. Outputs of the two implementations are
checked to be identical before any timing is reported.
"""

import argparse
import random
import sys
import timeit
from array import array
from fractions import Fraction

from hilmod import counterexample, kernels
from hilmod.randgen import random_partition


def _big_partition(rng, cells=2000):
    while True:
        p = random_partition(rng, 14, split_prob=0.85)
        if len(p) >= cells:
            return p


def _inputs(seed=0):
    rng = random.Random(seed)
    p = _big_partition(rng)
    q = _big_partition(rng)
    vp = [Fraction(rng.randint(0, 3), rng.randint(1, 4)) for _ in range(len(p))]
    vq = [rng.randint(-2, 2) for _ in range(len(q))]
    # uniform level-12 step with long runs of equal values, so merges happen
    lv = array("q", [12] * 4096)
    ix = array("q", range(4096))
    runs = [v for v in range(64) for _ in range(64)]
    fw = [Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(1 << 12)]
    return p, q, vp, vq, (lv, ix, runs), fw


def _cases(inputs):
    p, q, vp, vq, (lv, ix, runs), fw = inputs
    return {
        "refine": lambda: kernels.refine(p.levels, p.indices, q.levels, q.indices),
        "merge_siblings": lambda: kernels.merge_siblings(lv, ix, runs),
        "combine(mul)": lambda: kernels.combine(p.levels, p.indices, vp, q.levels, q.indices, vq, kernels.MUL),
        "fwht(4096)": lambda: kernels.fwht(list(fw)),
    }


def _outputs(inputs):
    """Kernel results as text, for comparing implementations."""
    out = {name: repr(fn()) for name, fn in _cases(inputs).items() if name != "fwht(4096)"}
    fw = list(inputs[-1])
    kernels.fwht(fw)
    out["fwht(4096)"] = repr(fw)
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--max-level", type=int, default=11, help="n for the end-to-end cauchy_report")
    args = ap.parse_args(argv)

    impls = sorted(kernels.IMPLEMENTATIONS)
    if "cython" not in impls:
        print("compiled kernels not built; timing the pure-Python fallback only", file=sys.stderr)
    inputs = _inputs()
    previous = kernels.BACKEND
    timings = {}
    results = {}
    try:
        for impl in impls:
            kernels.use(impl)
            results[impl] = _outputs(inputs)
            for name, fn in _cases(inputs).items():
                t = min(timeit.repeat(fn, number=1, repeat=args.repeat))
                timings.setdefault(name, {})[impl] = t

            def report(n=args.max_level):
                counterexample._CACHE.clear()
                counterexample.cauchy_report(n)

            name = f"cauchy_report({args.max_level})"
            timings.setdefault(name, {})[impl] = min(timeit.repeat(report, number=1, repeat=max(1, args.repeat // 2)))
    finally:
        kernels.use(previous)

    if len(results) == 2 and results["cython"] != results["python"]:
        print("kernel outputs differ between implementations", file=sys.stderr)
        return 1

    header = f"{'benchmark':<22}" + "".join(f"{i + ' (ms)':>16}" for i in impls)
    if len(impls) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for name, row in timings.items():
        line = f"{name:<22}" + "".join(f"{row[i] * 1000:>16.2f}" for i in impls)
        if len(impls) == 2:
            line += f"{row['python'] / row['cython']:>9.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
