"""Pure-Python kernels: the submask-walk chain-count DP and the exhaustive
family sweep.  Drop-in fallback for the compiled `_fastcount` module; counts
are Python ints, so there is no overflow to detect."""

from __future__ import annotations


def count_chains(n: int, k: int, members: int) -> int:
    """Strict k-chains inside the family given as a 2^n-bit membership bitset.

    Level j of the DP holds, per member B, the number of j-chains with top
    set B; proper submasks are enumerated with the decrementing walk, so
    each level costs at most 3^n word operations.
    """
    words = []
    m = members
    while m:
        low = m & -m
        words.append(low.bit_length() - 1)
        m ^= low
    if k == 1:
        return len(words)
    if k > n + 1:
        return 0
    size = 1 << n
    old = [0] * size
    for w in words:
        old[w] = 1
    for _ in range(k - 1):
        new = [0] * size
        for b in words:
            acc = 0
            if b:
                sub = (b - 1) & b
                while True:
                    acc += old[sub]
                    if not sub:
                        break
                    sub = (sub - 1) & b
            new[b] = acc
        old = new
    return sum(old[w] for w in words)


def min_table(n: int, k: int) -> tuple[list[int], list[int]]:
    """Exhaustive k-chain minima over every family of every size, n <= 4.

    Sweeps the whole 2^(2^n) family space as an integer counter.  Returns
    (mins, witnesses) indexed by family size m; the witness is the smallest
    membership bitset attaining the minimum.
    """
    if not 1 <= n <= 4:
        raise ValueError("exhaustive sweep supports n <= 4 only")
    if k < 1:
        raise ValueError("chain length k must be >= 1")
    size = 1 << n
    subs = []
    for b in range(size):
        lst = []
        if b:
            sub = (b - 1) & b
            while True:
                lst.append(sub)
                if not sub:
                    break
                sub = (sub - 1) & b
        subs.append(tuple(lst))
    mins: list[int | None] = [None] * (size + 1)
    wits = [0] * (size + 1)
    levels = min(k, size + 1) - 1
    for fam in range(1 << size):
        words = []
        f = fam
        while f:
            low = f & -f
            words.append(low.bit_length() - 1)
            f ^= low
        m = len(words)
        if k > m:
            cnt = 0
        else:
            old = [0] * size
            for w in words:
                old[w] = 1
            for _ in range(levels):
                new = [0] * size
                for b in words:
                    acc = 0
                    for sub in subs[b]:
                        acc += old[sub]
                    new[b] = acc
                old = new
            cnt = sum(old[w] for w in words)
        if mins[m] is None or cnt < mins[m]:
            mins[m] = cnt
            wits[m] = fam
    return mins, wits  # type: ignore[return-value]
