#!/usr/bin/env python3
"""Benchmark the compiled row kernel against the pure-Python fallback.

Runs the real workloads that dominate table building (family ranks at a
given weight) under both kernels by re-executing itself with
MZV_PURE_KERNEL=1, then prints a speedup table.

Usage: python benchmarks/bench_rowops.py [--max-weight 12]
"""

import argparse
import json
import os
import subprocess
import sys
import time


def run_cases(max_weight: int) -> dict:
    from mzv import kernel_backend
    from mzv.linalg import RelationMatrix
    from mzv.relations import derivation_all, duality_all

    results = {"backend": kernel_backend, "cases": {}}
    for k in range(9, max_weight + 1):
        der = RelationMatrix.from_polys(k, derivation_all(k))
        dual = RelationMatrix.from_polys(k, duality_all(k))
        t0 = time.perf_counter()
        r5 = der.rank()
        r6 = dual.rank_union(der)
        dt = time.perf_counter() - t0
        results["cases"][f"wt{k}"] = {"rank5": r5, "rank6": r6,
                                      "seconds": dt}
    return results


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-weight", type=int, default=12)
    parser.add_argument("--inner", action="store_true",
                        help=argparse.SUPPRESS)
    args = parser.parse_args()

    if args.inner:
        json.dump(run_cases(args.max_weight), sys.stdout)
        return 0

    runs = {}
    for pure in ("0", "1"):
        env = dict(os.environ, MZV_PURE_KERNEL=pure)
        out = subprocess.run(
            [sys.executable, __file__, "--inner",
             "--max-weight", str(args.max_weight)],
            env=env, capture_output=True, text=True, check=True)
        data = json.loads(out.stdout)
        runs[data["backend"]] = data["cases"]

    if set(runs) == {"python"}:
        print("compiled kernel unavailable; only the fallback ran")
    pure = runs.get("python", {})
    fast = runs.get("compiled", pure)
    print(f"{'case':>6} {'ranks':>12} {'pure s':>9} {'compiled s':>11} "
          f"{'speedup':>8}")
    for case in pure:
        p = pure[case]
        c = fast[case]
        if (p["rank5"], p["rank6"]) != (c["rank5"], c["rank6"]):
            print(f"{case}: RANK MISMATCH {p} vs {c}")
            return 1
        ranks = f"{p['rank5']}/{p['rank6']}"
        speed = p["seconds"] / c["seconds"] if c["seconds"] else float("inf")
        print(f"{case:>6} {ranks:>12} {p['seconds']:>9.3f} "
              f"{c['seconds']:>11.3f} {speed:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
