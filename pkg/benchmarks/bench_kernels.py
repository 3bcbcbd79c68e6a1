"""Compiled vs pure-Python polynomial kernels.

    python benchmarks/bench_kernels.py [--repeat 5]

Times the raw kernels on random inputs, then an end-to-end workload
(Schubert polynomials of S_7 and a batch of products in the Schubert basis)
with each backend swapped in.
"""

import argparse
import contextlib
import random
import statistics
import time

from schubert import kernels
from schubert.evaluate import _direct, formula_Q, staircase_monomials
from schubert.expand import clear_caches, multiply_alg1
from schubert.verify import random_polynomial
from schubert.words import permutations

NAMES = ("swap", "divided_difference", "multiply", "add_scaled")


@contextlib.contextmanager
def using(backend):
    saved = {name: getattr(kernels, name) for name in NAMES}
    for name in NAMES:
        setattr(kernels, name, getattr(backend, name))
    try:
        yield
    finally:
        for name, fn in saved.items():
            setattr(kernels, name, fn)


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times)


def raw_workloads(seed=0):
    rng = random.Random(seed)
    big = [random_polynomial(rng, nvars=8, max_degree=12, max_terms=60).terms for _ in range(40)]
    small = [random_polynomial(rng, nvars=8, max_degree=4, max_terms=20).terms for _ in range(40)]

    def run(b):
        def dd():
            for f in big:
                for i in range(1, 8):
                    b.divided_difference(f, i)

        def mul():
            for f, g in zip(big, small):
                b.multiply(f, g)

        def sw():
            for f in big:
                for i in range(1, 8):
                    b.swap(f, i)

        def add():
            for f, g in zip(big, small):
                b.add_scaled(f, g, -3)

        return {"divided_difference": dd, "multiply": mul, "swap": sw, "add_scaled": add}

    return run


def end_to_end():
    _direct.cache_clear()
    formula_Q.cache_clear()
    clear_caches()
    for u in permutations(6):
        _direct(u)
    box = staircase_monomials(5)
    rng = random.Random(1)
    for _ in range(40):
        multiply_alg1(rng.choice(box), rng.choice(box))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    backends = [kernels.python_backend]
    if kernels.compiled_backend is None:
        print("compiled backend not built; only the Python kernels are timed")
    else:
        backends.append(kernels.compiled_backend)

    make = raw_workloads()
    rows = {}
    for b in backends:
        for name, fn in make(b).items():
            rows.setdefault(name, {})[b.BACKEND] = best_of(fn, args.repeat)[0]
        with using(b):
            rows.setdefault("end-to-end", {})[b.BACKEND] = best_of(end_to_end, max(1, args.repeat // 2))[0]

    header = f"{'workload':<20}" + "".join(f"{b.BACKEND:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for name, cols in rows.items():
        line = f"{name:<20}" + "".join(f"{cols[b.BACKEND] * 1e3:>10.1f}ms" for b in backends)
        if len(backends) == 2:
            line += f"{cols['python'] / cols['cython']:>9.2f}x"
        print(line)


if __name__ == "__main__":
    main()
