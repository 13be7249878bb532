"""Compare the pure-Python and compiled folding kernels.

Generates random wedges of loops (the shape every subgroup graph starts
from) at increasing sizes and times complete folding through each
kernel.  Run as: python benchmarks/bench_fold.py [--seed N]
"""

from __future__ import annotations

import argparse
import random
import time

from stallings._kernel import fold_python
from stallings.cases.fuzz import random_reduced_word
from stallings.graph import bouquet
from stallings.words import Alphabet

try:
    from stallings._kernel._fold_c import fold as fold_compiled
except ImportError:
    fold_compiled = None


def make_instance(rng: random.Random, n_words: int, word_len: int):
    ab = Alphabet.of("a", "b", "c")
    words = [random_reduced_word(rng, ab, word_len, word_len) for _ in range(n_words)]
    g = bouquet(ab, words)
    gen_index = {n: i + 1 for i, n in enumerate(ab.generators)}
    codes = [
        gen_index[l.gen] if l.sign > 0 else -gen_index[l.gen] for l in g.elabel
    ]
    return g.n_vertices, list(g.einit), codes


def time_kernel(fold, instances, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for n, einit, codes in instances:
            fold(n, einit, codes, None)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    shapes = [(20, 8, 200), (60, 20, 60), (200, 40, 12), (600, 80, 4)]
    print(f"{'half-edges':>12} {'instances':>10} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for n_words, word_len, count in shapes:
        rng = random.Random(args.seed)
        instances = [make_instance(rng, n_words, word_len) for _ in range(count)]
        half_edges = len(instances[0][1])
        t_py = time_kernel(fold_python, instances, args.repeats)
        if fold_compiled is None:
            print(f"{half_edges:>12} {count:>10} {t_py:>9.4f}s {'n/a':>10} {'-':>8}")
            continue
        t_c = time_kernel(fold_compiled, instances, args.repeats)
        print(
            f"{half_edges:>12} {count:>10} {t_py:>9.4f}s {t_c:>9.4f}s "
            f"{t_py / t_c:>7.1f}x"
        )
    if fold_compiled is None:
        print("compiled kernel not built; run: python setup.py build_ext --inplace")


if __name__ == "__main__":
    main()
