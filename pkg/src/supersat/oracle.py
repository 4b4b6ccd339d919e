"""Brute-force ground truth at small n: exact chain-count minima over all
families of a given size, largest chain-free families, an annealing search
for larger n, and the size-by-size comparison table against the centered
construction."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

from supersat import _backend
from supersat.core import Family, binom, check_ground_set, level_words
from supersat.bounds import added_row_level, colex_smallest
from supersat.counting import count_k_chains

EXACT_N_MAX = 4
HEURISTIC_N_MAX = 10


@dataclass(frozen=True)
class OracleResult:
    """Minimum (or best-found) k-chain count over families of a given size."""

    n: int
    k: int
    family_size: int
    min_count: int
    witness: Family
    exact: bool


def _check_size(n: int, m: int) -> None:
    if not 0 <= m <= 1 << n:
        raise ValueError(f"family size must be in [0, {1 << n}], got {m}")


@lru_cache(maxsize=None)
def _exact_table(n: int, k: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    mins, wits = _backend.min_table(n, k)
    return tuple(mins), tuple(wits)


def min_chain_count_exact(n: int, k: int, m: int) -> OracleResult:
    """Exact minimum of the k-chain count over every size-m family, with the
    smallest-bitset witness; full 2^(2^n) sweep, so n <= 4."""
    check_ground_set(n)
    if n > EXACT_N_MAX:
        raise ValueError(f"exact sweep supports n <= {EXACT_N_MAX}, got {n}")
    if k < 1:
        raise ValueError(f"chain length k must be >= 1, got {k}")
    _check_size(n, m)
    mins, wits = _exact_table(n, k)
    return OracleResult(n, k, m, mins[m], Family(n, wits[m]), True)


def max_free_family(n: int, k: int) -> tuple[int, Family]:
    """Largest size at which some family avoids k-chains entirely, with a
    witness family."""
    check_ground_set(n)
    if n > EXACT_N_MAX:
        raise ValueError(f"exact sweep supports n <= {EXACT_N_MAX}, got {n}")
    if k < 1:
        raise ValueError(f"chain length k must be >= 1, got {k}")
    mins, wits = _exact_table(n, k)
    best = max(m for m in range(len(mins)) if mins[m] == 0)
    return best, Family(n, wits[best])


def centered_level_order(n: int) -> list[int]:
    """All levels ordered middle-out: n//2, then alternating above/below."""
    check_ground_set(n)
    return [n // 2] + [added_row_level(n, j) for j in range(2, n + 2)]


def centered_family(n: int, m: int, mirror_partial: bool = False) -> Family:
    """Size-m family filling whole levels middle-out, partial level in colex
    order.

    With `mirror_partial` the partly filled level is taken from the opposite
    end of the filled block (the other variant when the block leaves a side
    choice); falls back to the standard side when no mirror level exists.
    """
    check_ground_set(n)
    _check_size(n, m)
    bits = 0
    remaining = m
    order = centered_level_order(n)
    for idx, row in enumerate(order):
        if remaining == 0:
            break
        size = binom(n, row)
        if remaining >= size:
            for w in level_words(n, row):
                bits |= 1 << w
            remaining -= size
            continue
        if mirror_partial:
            row = _mirror_row(n, order[:idx], row, remaining)
        for w in colex_smallest(n, row, remaining):
            bits |= 1 << w
        remaining = 0
    return Family(n, bits)


def _mirror_row(n: int, filled: list[int], row: int, remaining: int) -> int:
    if not filled:
        mirror = n - row
    elif row > max(filled):
        mirror = min(filled) - 1
    else:
        mirror = max(filled) + 1
    if 0 <= mirror <= n and mirror not in filled and binom(n, mirror) >= remaining:
        return mirror
    return row


def min_chain_count_heuristic(
    n: int, k: int, m: int, seed: int = 0, iterations: int = 2000
) -> OracleResult:
    """Annealed single-swap search for a low-count size-m family.

    The count reported is exact for the returned family, but the minimum is
    only an upper bound; results are deterministic for a fixed seed.
    """
    check_ground_set(n)
    if n > HEURISTIC_N_MAX:
        raise ValueError(f"heuristic search supports n <= {HEURISTIC_N_MAX}, got {n}")
    if k < 1:
        raise ValueError(f"chain length k must be >= 1, got {k}")
    _check_size(n, m)
    if iterations < 0:
        raise ValueError("iterations must be nonnegative")

    # seed the walk at the centered construction (the conjectured optimum),
    # whichever partial-level side counts lower
    start = min(
        {centered_family(n, m), centered_family(n, m, mirror_partial=True)},
        key=lambda fam: (count_k_chains(fam, k), fam.members),
    )
    best_bits = bits = start.members
    best_count = current = count_k_chains(start, k)
    space = 1 << n
    if m == 0 or m == space or iterations == 0 or best_count == 0:
        return OracleResult(n, k, m, best_count, Family(n, best_bits), False)

    rng = random.Random(seed)
    inside = [w for w in range(space) if (bits >> w) & 1]
    outside = [w for w in range(space) if not (bits >> w) & 1]
    t_start = max(1.0, best_count / 4)
    t_end = 0.01
    cooling = (t_end / t_start) ** (1.0 / max(1, iterations - 1))
    temperature = t_start
    for _ in range(iterations):
        i = rng.randrange(len(inside))
        j = rng.randrange(len(outside))
        swapped = bits ^ (1 << inside[i]) ^ (1 << outside[j])
        candidate = _backend.count_chains(n, k, swapped)
        delta = candidate - current
        if delta <= 0 or rng.random() < math.exp(-delta / temperature):
            bits = swapped
            current = candidate
            inside[i], outside[j] = outside[j], inside[i]
            if current < best_count:
                best_count, best_bits = current, bits
                if best_count == 0:
                    break
        temperature *= cooling
    return OracleResult(n, k, m, best_count, Family(n, best_bits), False)


@dataclass(frozen=True)
class KleitmanRow:
    """One family size compared against the centered construction."""

    size: int
    min_count: int
    exact: bool
    construction_count: int
    equal: bool


def construction_count(n: int, k: int, m: int) -> int:
    """Chain count of the centered construction, taking the better of the two
    partial-level sides when the block leaves a choice."""
    return min(
        count_k_chains(centered_family(n, m), k),
        count_k_chains(centered_family(n, m, mirror_partial=True), k),
    )


def kleitman_report(
    n: int, k: int, seed: int = 0, iterations: int = 500
) -> list[KleitmanRow]:
    """Minimum k-chain count versus the centered construction for every size.

    Exact minima for n <= 4; annealing upper bounds (exact = False) for
    5 <= n <= 10.  Rows where the construction already reaches zero skip the
    search, since no family can do better.
    """
    check_ground_set(n)
    if k < 1:
        raise ValueError(f"chain length k must be >= 1, got {k}")
    if n > HEURISTIC_N_MAX:
        raise ValueError(f"report supports n <= {HEURISTIC_N_MAX}, got {n}")
    rows = []
    exact = n <= EXACT_N_MAX
    for m in range((1 << n) + 1):
        built = construction_count(n, k, m)
        if exact:
            found = min_chain_count_exact(n, k, m).min_count
        elif built == 0:
            found = 0
        else:
            result = min_chain_count_heuristic(n, k, m, seed=seed, iterations=iterations)
            found = min(result.min_count, built)
        rows.append(KleitmanRow(m, found, exact, built, found == built))
    return rows
