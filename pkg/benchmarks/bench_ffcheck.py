"""Time the finite-field oracle under the numba and numpy backends.

Each backend runs in a fresh interpreter because the choice is fixed at
import time by TORUSMOTIVE_DISABLE_NUMBA.

    python benchmarks/bench_ffcheck.py [--repeat 3]
"""

import argparse
import json
import os
import subprocess
import sys

CASES = [(2, 3, 13, False), (2, 3, 13, True), (2, 5, 41, False), (2, 5, 41, True)]

CHILD = r"""
import json, sys, time
from torusmotive._accel import backend
from torusmotive import ffcheck
n, m, q, full, repeat = json.loads(sys.argv[1])
p = ffcheck.FfParams(q, n, m)
t0 = time.perf_counter()
ffcheck.count_irr_pairs(p, full=full)          # includes compilation / table build
first = time.perf_counter() - t0
best = float("inf")
for _ in range(repeat):
    ffcheck._CACHE.clear()
    t0 = time.perf_counter()
    res = ffcheck.count_irr_pairs(p, full=full)
    best = min(best, time.perf_counter() - t0)
print(json.dumps({"backend": backend(), "first": first, "best": best, "result": res}))
"""


def run(case, repeat, disable):
    env = dict(os.environ)
    env["TORUSMOTIVE_DISABLE_NUMBA"] = "1" if disable else ""
    out = subprocess.run([sys.executable, "-c", CHILD, json.dumps([*case, repeat])],
                         env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'n':>2} {'m':>2} {'q':>3} {'join':<8} {'backend':<7} {'first s':>8} {'best s':>8}  irr")
    for n, m, q, full in CASES:
        for disable in (False, True):
            r = run((n, m, q, full), args.repeat, disable)
            join = "full" if full else "bucketed"
            print(f"{n:>2} {m:>2} {q:>3} {join:<8} {r['backend']:<7} "
                  f"{r['first']:8.3f} {r['best']:8.3f}  {r['result']}")


if __name__ == "__main__":
    main()
