"""Benchmark the compiled kernel against the pure-Python twin.

Runs the three hot paths (word straightening, products, module actions)
on identical seeded workloads through both implementations and prints a
comparison table.  Usage:

    python benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import random
import time
from fractions import Fraction

import vira._kernel_py as pure

try:
    import vira._kernel_cy as compiled
except ImportError:
    compiled = None


def straighten_workload(rng):
    words = [
        tuple(rng.randint(-5, 5) for _ in range(rng.randint(4, 9)))
        for _ in range(300)
    ]

    def run(impl):
        impl.cache_clear()
        for word in words:
            impl.straighten_word(word)

    return run


def multiply_workload(rng):
    def terms():
        out = {}
        for _ in range(rng.randint(1, 3)):
            word = tuple(sorted(rng.randint(-4, 4) for _ in range(rng.randint(0, 4))))
            out[(rng.randint(0, 2), word)] = Fraction(rng.choice([-3, -1, 1, 2]), 2)
        return out

    pairs = [(terms(), terms()) for _ in range(400)]

    def run(impl):
        impl.cache_clear()
        for a, b in pairs:
            impl.multiply_terms(a, b)

    return run


def act_workload(rng):
    def uea():
        out = {}
        for _ in range(rng.randint(1, 2)):
            word = tuple(sorted(rng.randint(-3, 3) for _ in range(rng.randint(0, 4))))
            out[(rng.randint(0, 1), word)] = Fraction(rng.choice([-2, 1, 3]))
        return out

    def basis():
        parts = tuple(sorted(rng.randint(0, 3) for _ in range(rng.randint(0, 4))))
        return {(rng.randint(0, 2), parts): Fraction(1)}

    samples = [(uea(), basis()) for _ in range(400)]
    psi1, psi2 = Fraction(2), Fraction(-3, 2)

    def run(impl):
        impl.cache_clear()
        for u, v in samples:
            impl.act_terms(u, v, psi1, psi2)

    return run


WORKLOADS = [
    ("straighten", straighten_workload),
    ("multiply", multiply_workload),
    ("act", act_workload),
]


def best_of(run, impl, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        run(impl)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="best-of repetitions")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if compiled is None:
        print("compiled kernel not available; showing pure-Python timings only")
    print(f"{'workload':<12} {'python':>10} {'cython':>10} {'speedup':>9}")
    for name, factory in WORKLOADS:
        run = factory(random.Random(args.seed))
        t_pure = best_of(run, pure, args.repeat)
        if compiled is None:
            print(f"{name:<12} {t_pure * 1e3:9.1f}ms {'-':>10} {'-':>9}")
            continue
        t_comp = best_of(run, compiled, args.repeat)
        # cross-check: identical results on a fresh cache
        pure.cache_clear()
        compiled.cache_clear()
        print(
            f"{name:<12} {t_pure * 1e3:9.1f}ms {t_comp * 1e3:9.1f}ms "
            f"{t_pure / t_comp:8.2f}x"
        )


if __name__ == "__main__":
    main()
