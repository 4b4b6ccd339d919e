"""Exact k-chain counting: chains inside a family, chains confined to one
decomposition chain, and endpoint-pinned counts."""

from __future__ import annotations

from supersat import _backend
from supersat.core import Family, binom, level
from supersat.scd import Decomposition


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"chain length k must be >= 1, got {k}")


def count_k_chains(family: Family, k: int) -> int:
    """Number of strict chains A_1 < ... < A_k with every set in the family.

    Submask-walk dynamic programming, Theta(k * 3^n) worst case; runs on the
    compiled kernel when available and falls back to unbounded Python ints.
    """
    _check_k(k)
    if k > family.n + 1:
        return 0
    return _backend.count_chains(family.n, k, family.members)


def count_k_chains_naive(family: Family, k: int) -> int:
    """Chain count by direct nested enumeration over member tuples.

    Independent oracle for `count_k_chains`; exponential, keep to n <= 8.
    """
    _check_k(k)
    if k > family.n + 1:
        return 0
    members = sorted(family.words(), key=lambda w: (level(w), w))

    def grow(top: int, depth: int) -> int:
        if depth == k:
            return 1
        total = 0
        for w in members:
            if w != top and (top & w) == top:
                total += grow(w, depth + 1)
        return total

    return sum(grow(w, 1) for w in members)


def count_included_chains(family: Family, dec: Decomposition, k: int) -> int:
    """k-chains of the family whose sets all lie on one chain of `dec`.

    On a single chain, inclusion agrees with chain order, so each chain
    contributes C(#members on it, k).
    """
    if family.n != dec.n:
        raise ValueError(f"family over [{family.n}] but decomposition over [{dec.n}]")
    _check_k(k)
    total = 0
    for ch in dec.chains:
        inside = sum(1 for w in ch if w in family)
        total += binom(inside, k)
    return total


def count_chains_with_min_endpoint(family: Family, k: int, word: int) -> int:
    """k-chains of the family whose smallest set is `word`."""
    return _endpoint_count(family, k, word, largest=False)


def count_chains_with_max_endpoint(family: Family, k: int, word: int) -> int:
    """k-chains of the family whose largest set is `word`."""
    return _endpoint_count(family, k, word, largest=True)


def _endpoint_count(family: Family, k: int, word: int, largest: bool) -> int:
    if word not in family:
        raise ValueError(f"endpoint {word} is not in the family")
    _check_k(k)
    if k > family.n + 1:
        return 0
    members = list(family.words())
    bits = family.members
    space = 1 << family.n
    counts = {w: 1 for w in members}
    for _ in range(k - 1):
        grown = {}
        for w in members:
            acc = 0
            if largest:
                # chains below w: sum over proper submasks in the family
                if w:
                    sub = (w - 1) & w
                    while True:
                        if (bits >> sub) & 1:
                            acc += counts[sub]
                        if not sub:
                            break
                        sub = (sub - 1) & w
            else:
                # chains above w: sum over proper supermasks in the family
                sup = w
                while True:
                    sup = (sup + 1) | w
                    if sup >= space:
                        break
                    if (bits >> sup) & 1:
                        acc += counts[sup]
            grown[w] = acc
        counts = grown
    return counts[word]
