"""Compare the compiled and pure-Python kernels.

Run with ``python3 benchmarks/bench_kernels.py``.  The end-to-end timing
spawns ``quatring verify`` twice, once with QUATRING_PURE=1.
"""

import argparse
import os
import random
import subprocess
import sys
import time
import timeit

from quatring import _pykernels
from quatring.groupring import GroupParams, mult_table, right_mult_matrix, gens

try:
    from quatring import _ckernels
except ImportError:
    _ckernels = None


def best(fn, repeat, number):
    return min(timeit.repeat(fn, repeat=repeat, number=number)) / number


def bench_convolve(mod, table, p, q):
    return best(lambda: mod.convolve(p, q, table), 5, 200)


def bench_hnf(mod, rows, ncols):
    return best(lambda: mod.hnf_rows([list(r) for r in rows], ncols), 3, 3)


def end_to_end(pure):
    env = dict(os.environ)
    if pure:
        env["QUATRING_PURE"] = "1"
    t0 = time.perf_counter()
    subprocess.run([sys.executable, "-m", "quatring", "verify"], env=env,
                   check=True, stdout=subprocess.DEVNULL)
    return time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--skip-verify", action="store_true", help="skip the end-to-end run")
    args = ap.parse_args()
    if _ckernels is None:
        sys.exit("compiled extension not built; run: pip install -e . --no-build-isolation")

    rng = random.Random(0)
    params = GroupParams(7)
    table = mult_table(params)
    p = tuple(rng.randint(-9, 9) for _ in range(28))
    q = tuple(rng.randint(-9, 9) for _ in range(28))
    x, y = gens(params)
    d2_like = right_mult_matrix(-3 + 4 * y) + right_mult_matrix(x + 1)
    rand = [[rng.randint(-5, 5) for _ in range(40)] for _ in range(60)]

    rows = [
        ("convolve, Q28", bench_convolve(_pykernels, table, p, q),
         bench_convolve(_ckernels, table, p, q)),
        ("hnf, P ideal 56x28", bench_hnf(_pykernels, d2_like, 28),
         bench_hnf(_ckernels, d2_like, 28)),
        ("hnf, random 60x40", bench_hnf(_pykernels, rand, 40),
         bench_hnf(_ckernels, rand, 40)),
    ]
    if not args.skip_verify:
        rows.append(("quatring verify (all)", end_to_end(True), end_to_end(False)))

    print(f"{'kernel':<26}{'python':>12}{'cython':>12}{'speedup':>10}")
    for name, py, cy in rows:
        print(f"{name:<26}{py * 1e3:>10.3f}ms{cy * 1e3:>10.3f}ms{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
