#!/usr/bin/env python3
"""Benchmark: compiled scanning kernel vs the pure-Python fallback.

Times the two hot paths on identical, seeded workloads and reports the
speedup.  Results are checked for equality first, so a mismatch aborts
instead of timing wrong answers.

    python benchmarks/bench_kernels.py [--divisors N] [--box B]
"""

import argparse
import random
import time

from toricsurf import _kernels_py as kpy
from toricsurf._backend import compiled_kernels
from toricsurf.fan import build_named


def _timeit(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def bench_cohomology(kc, n_divisors):
    fan = build_named("king")
    xs = tuple(r[0] for r in fan.rays)
    ys = tuple(r[1] for r in fan.rays)
    rng = random.Random(1234)
    batch = [tuple(rng.randint(-9, 9) for _ in range(7)) for _ in range(n_divisors)]

    py_out, py_t = _timeit(lambda: [kpy.cohom_dims(xs, ys, cs) for cs in batch])
    c_out, c_t = _timeit(lambda: [kc.cohom_dims(xs, ys, cs) for cs in batch])
    assert [tuple(x) for x in py_out] == [tuple(x) for x in c_out]
    return py_t, c_t


def bench_enumeration(kc, box):
    fan = build_named("king")
    xs = tuple(r[0] for r in fan.rays)
    ys = tuple(r[1] for r in fan.rays)
    si = fan.self_intersections
    lo = (-box, -box, -box, -box, 1)
    hi = (box, box, box, box, 1)
    total = (2 * box + 1) ** 4

    py_out, py_t = _timeit(
        lambda: kpy.scan_candidates(xs, ys, lo, hi, si, 0, total, True)
    )
    c_out, c_t = _timeit(lambda: kc.scan_candidates(xs, ys, lo, hi, si, 0, total, True))
    assert py_out == c_out
    return py_t, c_t, total, len(c_out)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--divisors", type=int, default=400)
    ap.add_argument("--box", type=int, default=6)
    args = ap.parse_args()

    kc = compiled_kernels()
    if kc is None:
        raise SystemExit("compiled kernel not built; nothing to compare against")

    print(f"{'workload':<42} {'python':>10} {'compiled':>10} {'speedup':>8}")
    py_t, c_t = bench_cohomology(kc, args.divisors)
    name = f"cohomology dims, {args.divisors} random divisors"
    print(f"{name:<42} {py_t:>9.3f}s {c_t:>9.3f}s {py_t / c_t:>7.1f}x")

    py_t, c_t, total, hits = bench_enumeration(kc, args.box)
    name = f"bi-acyclic sweep, {total} candidates"
    print(f"{name:<42} {py_t:>9.3f}s {c_t:>9.3f}s {py_t / c_t:>7.1f}x")
    print(f"({hits} bi-acyclic classes found by both backends)")


if __name__ == "__main__":
    main()
