"""Time the compiled kernels against the pure-Python reference.

Each case runs once per backend; results must agree, and the table reports
wall time and speedup.  Usage: python3 bench/bench_kernels.py [--scale N]
"""

import argparse
import sys
import time

from biform import kernels
from biform.conic import parametrize, rational_point
from biform.arith import divisors, shared_sieve
from biform.counting import icbrt


def cases(scale):
    B = 2000 * scale
    T = 4 * icbrt(B)
    x = (2, 3, -5)
    par = parametrize(x, rational_point(x))
    divs = divisors(par.resultant, shared_sieve(par.resultant))
    return [
        ("brute_count", lambda m: m.brute_count(B, T)),
        ("fiber_region_sum", lambda m: m.fiber_region_sum(10 * B, 20 * icbrt(B))),
        ("conic_count", lambda m: m.conic_count(x, par.R, par.l[0], par.l[1], 0, 20000 * scale, divs)),
        ("param_inner", lambda m: m.param_inner((1, 1, 1), (1, 1, 1), (1, 1, 1), B, icbrt(B), False, False)),
        ("linear_box_count", lambda m: m.linear_box_count(3, 5, -7, 3000 * scale, 3000 * scale, 3000 * scale)),
        ("quadratic_box_count", lambda m: m.quadratic_box_count(1, 2, -3, 300 * scale, 300 * scale, 300 * scale)),
        ("mixed_box_count", lambda m: m.mixed_box_count(1, 1, -2, 12, 12, 12, 8 * scale, 8 * scale, 8 * scale)),
        ("conic_search", lambda m: m.conic_search(3, 5, -7, 60 * scale, 60 * scale, 60 * scale)),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--scale", type=int, default=1, help="multiply every problem size")
    args = ap.parse_args(argv)
    backends = kernels.available()
    if "compiled" not in backends:
        print("compiled extension not built; only the Python backend is available", file=sys.stderr)
    print(f"{'kernel':22s} " + " ".join(f"{b:>10s}" for b in backends) + "    speedup")
    bad = 0
    for name, fn in cases(args.scale):
        times, results = [], []
        for mod in backends.values():
            t0 = time.perf_counter()
            results.append(fn(mod))
            times.append(time.perf_counter() - t0)
        same = all(r == results[0] for r in results)
        bad += not same
        speed = f"{times[0] / times[-1]:9.1f}x" if len(times) > 1 and times[-1] > 0 else ""
        print(f"{name:22s} " + " ".join(f"{t:10.4f}" for t in times) + f" {speed}" + ("" if same else "  MISMATCH"))
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
