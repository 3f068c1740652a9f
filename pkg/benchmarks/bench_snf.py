"""Benchmark: compiled int64 SNF kernel vs the pure-Python backend.

Run after an editable install:  python benchmarks/bench_snf.py

The "compiled" column times the dispatcher, which retries any matrix whose
elimination overflows int64 in pure Python, so it is the realistic number.
The fallback count shows how often that happened.
"""

import random
import time

from wes6 import backend
from wes6 import _snf_py


def random_matrices(count, size, bound, seed=20240817):
    rng = random.Random(seed)
    return [
        [[rng.randint(-bound, bound) for _ in range(size)] for _ in range(size)]
        for _ in range(count)
    ]


def bench(fn, mats, size):
    start = time.perf_counter()
    for m in mats:
        fn(m, size, size)
    return time.perf_counter() - start


def count_fallbacks(mats, size):
    from wes6 import _snf_cy

    n = 0
    for m in mats:
        try:
            _snf_cy.snf_triple(m, size, size)
        except OverflowError:
            n += 1
    return n


def main():
    print(f"active backend: {backend.BACKEND}")
    for size, count in ((4, 2000), (6, 1000), (8, 400)):
        mats = random_matrices(count, size, 50)
        t_py = bench(_snf_py.snf_triple, mats, size)
        line = f"{size}x{size} x{count}: pure-python {t_py:.3f}s"
        if backend.HAVE_COMPILED:
            t_cy = bench(backend.snf_triple, mats, size)
            for m in mats[:50]:
                assert backend.snf_triple(m, size, size) == _snf_py.snf_triple(
                    m, size, size
                )
            fb = count_fallbacks(mats, size)
            line += (
                f", compiled {t_cy:.3f}s, speedup {t_py / t_cy:.1f}x"
                f", overflow fallbacks {fb}/{count}"
            )
        print(line)


if __name__ == "__main__":
    main()
