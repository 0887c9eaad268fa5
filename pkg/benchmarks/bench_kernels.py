"""Compare the compiled term kernels against the pure-Python twin.

Times the raw kernel operations on identical random inputs, then an
end-to-end workload (longest divided difference + a Schur value) in
subprocesses so each backend is exercised through normal import.

Run:  python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import os
import random
import subprocess
import sys
import time
from fractions import Fraction

from nilheckeb import _kernels_py

try:
    from nilheckeb import _termkernels
except ImportError:
    _termkernels = None


def random_terms(rng, n, nterms):
    out = {}
    for _ in range(nterms):
        e = tuple(rng.randint(0, 5) for _ in range(n))
        m = tuple(i for i in range(1, n + 1) if rng.random() < 0.4)
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        if c:
            out[(e, m)] = c
    return out


def bench_kernel(kern, repeat):
    rng = random.Random(0)
    pairs = [
        (random_terms(rng, 3, 25), random_terms(rng, 3, 25)) for _ in range(40)
    ]
    t0 = time.perf_counter()
    for _ in range(repeat):
        for a, b in pairs:
            kern.mul_terms(a, b)
    t_mul = time.perf_counter() - t0

    t0 = time.perf_counter()
    for _ in range(repeat):
        for a, _ in pairs:
            kern.div_linear_terms(a, 0, 1, 1)
            kern.div_linear_terms(a, 1, 2, -1)
            kern.div_var_terms(a, 2)
    t_div = time.perf_counter() - t0

    t0 = time.perf_counter()
    for _ in range(repeat):
        acc = {}
        for a, b in pairs:
            acc = kern.add_terms(acc, a)
            acc = kern.sub_terms(acc, b)
    t_add = time.perf_counter() - t0
    return t_mul, t_div, t_add


WORKLOAD = r"""
import time
from nilheckeb import BACKEND, schur_ext, staircase, demazure_w, longest_element, verify_dg
t0 = time.perf_counter()
for _ in range(5):
    schur_ext((), (1,), 3)
    demazure_w(longest_element(3), staircase((2, 1), 3))
verify_dg(3, 3, trials=10, seed=0)
print(f"{BACKEND} {time.perf_counter() - t0:.3f}")
"""


def bench_end_to_end():
    rows = []
    for pure in ("0", "1"):
        env = dict(os.environ, NILHECKEB_PURE=pure)
        out = subprocess.run(
            [sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True
        )
        if out.returncode:
            raise RuntimeError(out.stderr)
        name, secs = out.stdout.split()
        rows.append((name, float(secs)))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=20)
    ns = ap.parse_args()

    kernels = [("python", _kernels_py)]
    if _termkernels is not None:
        kernels.append(("cython", _termkernels))

    print(f"kernel microbenchmarks (repeat={ns.repeat})")
    print(f"{'backend':<8} {'mul':>8} {'div':>8} {'add/sub':>8}")
    base = None
    for name, kern in kernels:
        t_mul, t_div, t_add = bench_kernel(kern, ns.repeat)
        print(f"{name:<8} {t_mul:>7.3f}s {t_div:>7.3f}s {t_add:>7.3f}s")
        if base is None:
            base = (t_mul, t_div, t_add)
        else:
            ratios = [b / t for b, t in zip(base, (t_mul, t_div, t_add))]
            print(f"{'speedup':<8} " + " ".join(f"{r:>7.2f}x" for r in ratios))

    print()
    print("end-to-end workload (5 Schur/Schubert rounds + one dg suite)")
    for name, secs in bench_end_to_end():
        print(f"{name:<8} {secs:>7.3f}s")


if __name__ == "__main__":
    main()
