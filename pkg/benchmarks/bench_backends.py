#!/usr/bin/env python3
"""Times the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import time

from supersat import _pycount
from supersat.core import Family, build_b_family
from supersat.bounds import build_extremal_family, tight_x_max

try:
    from supersat import _fastcount
except ImportError:
    _fastcount = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def bench(name, pure_fn, fast_fn, repeat):
    pure_t, pure_v = best_of(pure_fn, repeat)
    if fast_fn is None:
        print(f"{name:<44} pure {pure_t * 1e3:10.2f} ms   compiled        n/a")
        return
    fast_t, fast_v = best_of(fast_fn, repeat)
    if pure_v != fast_v:
        raise SystemExit(f"{name}: backend results disagree ({pure_v} vs {fast_v})")
    print(
        f"{name:<44} pure {pure_t * 1e3:10.2f} ms   compiled {fast_t * 1e3:10.2f} ms"
        f"   x{pure_t / fast_t:8.1f}"
    )


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _fastcount is None:
        print("compiled kernels not built; timing the pure fallback only\n")

    cases = []
    for n, k in ((10, 3), (12, 3), (14, 2)):
        members = Family.full(n).members
        cases.append((f"count_chains full lattice n={n} k={k}", n, k, members))
    for n, k in ((12, 3), (14, 4)):
        fam = build_extremal_family(n, k, tight_x_max(n, k))
        cases.append((f"count_chains extremal family n={n} k={k}", n, k, fam.members))
    fam = build_b_family(13, 5)
    cases.append(("count_chains five middle rows n=13 k=4", 13, 4, fam.members))

    for name, n, k, members in cases:
        bench(
            name,
            lambda n=n, k=k, members=members: _pycount.count_chains(n, k, members),
            None
            if _fastcount is None
            else (lambda n=n, k=k, members=members: _fastcount.count_chains(n, k, members)),
            args.repeat,
        )

    for k in (2, 3, 4):
        bench(
            f"min_table exhaustive sweep n=4 k={k}",
            lambda k=k: _pycount.min_table(4, k),
            None if _fastcount is None else (lambda k=k: _fastcount.min_table(4, k)),
            args.repeat,
        )


if __name__ == "__main__":
    main()
