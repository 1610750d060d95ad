"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Part one times each kernel on identical integer inputs. Part two times a
full minimal projected representation in two subprocesses, one with
POLYPROJ_PURE_PYTHON=1.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from polyproj import _pykernels

try:
    from polyproj import _ckernels
except ImportError:
    _ckernels = None

END_TO_END = """
import time
from polyproj import kernels
from polyproj.minrep import minimal_projected_representation
from polyproj.testkit import gen_cyclic, random_instance
cases = [("cyclic 4 12", gen_cyclic(4, 12)), ("cyclic 5 10", gen_cyclic(5, 10)),
         ("random 5x16", random_instance(5, 16, 8, 3)[0])]
for name, s in cases:
    t = time.perf_counter()
    for _ in range({repeat}):
        minimal_projected_representation(s)
    print(kernels.BACKEND, name, (time.perf_counter() - t) / {repeat})
"""


def _matrix(rng, m, n, bits):
    hi = 2 ** bits
    return [[rng.randint(-hi, hi) for _ in range(n)] for _ in range(m)]


def micro(repeat):
    rng = random.Random(0)
    rows = _matrix(rng, 40, 12, 1)
    big = _matrix(rng, 40, 12, 6)  # Bareiss overflows int64, compiled path falls back
    low = _matrix(rng, 10, 11, 1) + [[0] * 11] * 30  # rank-deficient
    low = [r + [0] for r in low]
    vec = [rng.randint(-50, 50) for _ in range(12)]
    big_vec = [rng.randint(-2 ** 60, 2 ** 60) for _ in range(12)]
    tight = rows[:8]
    ortho = [0] * 12  # zero vector: every row is tight
    mask = int("10" * 20, 2)
    cases = [
        ("rank 40x12", lambda k: k.rank(rows, 12)),
        ("rank 40x12 low rank", lambda k: k.rank(low, 12)),
        ("rank 40x12 overflow", lambda k: k.rank(big, 12)),
        ("rank 8x12", lambda k: k.rank(tight, 12)),
        ("dots 40x12", lambda k: k.dots(rows, vec)),
        ("dots 40x12 overflow", lambda k: k.dots(big, big_vec)),
        ("zero_rank 40x12", lambda k: k.zero_rank(rows, ortho, 12)),
        ("rank_subset 20 of 40", lambda k: k.rank_subset(rows, mask, 12)),
    ]
    print(f"{'kernel':24} {'python us':>10} {'cython us':>10} {'speedup':>8}")
    for name, fn in cases:
        t_py = min(timeit.repeat(lambda: fn(_pykernels), number=200, repeat=repeat)) / 200
        if _ckernels is None:
            print(f"{name:24} {t_py * 1e6:10.1f} {'n/a':>10}")
            continue
        assert fn(_ckernels) == fn(_pykernels)
        t_c = min(timeit.repeat(lambda: fn(_ckernels), number=200, repeat=repeat)) / 200
        print(f"{name:24} {t_py * 1e6:10.1f} {t_c * 1e6:10.1f} {t_py / t_c:8.1f}x")


def end_to_end(repeat):
    code = END_TO_END.format(repeat=repeat)
    results = {}
    for pure in ("1", "0"):
        env = dict(os.environ, POLYPROJ_PURE_PYTHON=pure)
        out = subprocess.run([sys.executable, "-c", code], env=env, check=True,
                             capture_output=True, text=True).stdout
        for line in out.splitlines():
            backend, *name, secs = line.split()
            results.setdefault(" ".join(name), {})[backend] = float(secs)
    print(f"\n{'minrep':24} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for name, t in results.items():
        py, cy = t.get("python"), t.get("cython")
        if cy is None:
            print(f"{name:24} {py * 1e3:10.1f} {'n/a':>10}")
        else:
            print(f"{name:24} {py * 1e3:10.1f} {cy * 1e3:10.1f} {py / cy:8.1f}x")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args()
    micro(args.repeat)
    end_to_end(max(1, args.repeat // 2))


if __name__ == "__main__":
    main()
