#!/usr/bin/env python3
"""Benchmark: pure-Python kernel vs the compiled Cython kernel.

Times full reduced-Groebner-basis runs (plus staircase enumeration) through
both backends on a small ladder of ideals and checks that the outputs are
identical.  Usage:

    python benchmarks/bench_kernel.py [--quick] [--repeat N]
"""

import argparse
import sys
import time

from bassinv import kernel
from bassinv.groebner import MonomialOrder, buchberger, staircase
from bassinv.polynomials import parse, partial_derivative

VARS = ("x", "y", "z")


def tjurina_gens(text):
    f = parse(text, VARS)
    return [f] + [partial_derivative(f, i) for i in range(3)]


CASES = [
    ("wahl graded fiber", tjurina_gens("z^2+y^3+x^10"), "grevlex"),
    ("wahl deformed fiber", tjurina_gens("z^2+y^3+x^10+x^7*y"), "grevlex"),
    ("wahl deformed fiber", tjurina_gens("z^2+y^3+x^10+x^7*y"), "lex"),
    ("brieskorn-pham 5,5,5", tjurina_gens("x^5+y^5+z^5"), "grevlex"),
    ("elliptic cone + term", tjurina_gens("x^3+y^3+z^3+x*y*z"), "grevlex"),
    ("dense quartic mix", tjurina_gens("x^4+y^4+z^4+x^2*y^2+x*y*z"),
     "grevlex"),
    ("cyclic-style cubic", tjurina_gens("x^3*y+y^3*z+z^3*x"), "grevlex"),
    ("big staircase 40x40", tjurina_gens("x^41+y^41+z^2"), "grevlex"),
]

HEAVY_CASES = [
    ("big staircase 99x99", tjurina_gens("x^100+y^100+z^2"), "grevlex"),
    ("deformed, heavier", tjurina_gens("x^12+y^13+z^3+x^9*y^4"), "grevlex"),
]


def run_case(gens, order_name, repeat):
    order = (MonomialOrder.lex() if order_name == "lex"
             else MonomialOrder.grevlex())
    timings = {}
    results = {}
    for backend in ("python", "cython"):
        with kernel.use(backend):
            best = None
            for _ in range(repeat):
                t0 = time.perf_counter()
                gb = buchberger(gens, order)
                s = staircase(gb)
                dt = time.perf_counter() - t0
                best = dt if best is None else min(best, dt)
            timings[backend] = best
            results[backend] = (gb.generators, s.monomials)
    identical = results["python"] == results["cython"]
    return timings, identical


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true",
                    help="fewer repeats, skip the heavy cases")
    ap.add_argument("--repeat", type=int, default=None)
    args = ap.parse_args(argv)
    repeat = args.repeat or (1 if args.quick else 5)
    cases = CASES if args.quick else CASES + HEAVY_CASES

    if "cython" not in kernel.available_backends():
        print("compiled kernel not available; nothing to compare")
        return 1

    print(f"kernel benchmark ({repeat} repeat(s), best-of timing)")
    print(f"{'case':30s} {'order':8s} {'python':>10s} {'cython':>10s} "
          f"{'speedup':>8s}  identical")
    all_same = True
    for name, gens, order_name in cases:
        timings, identical = run_case(gens, order_name, repeat)
        all_same &= identical
        py, cy = timings["python"], timings["cython"]
        print(f"{name:30s} {order_name:8s} {py * 1000:9.2f}ms "
              f"{cy * 1000:9.2f}ms {py / cy:7.2f}x  "
              f"{'yes' if identical else 'NO'}")
    if not all_same:
        print("MISMATCH between backends", file=sys.stderr)
        return 2
    print("identical=yes for every case")
    return 0


if __name__ == "__main__":
    sys.exit(main())
