"""Closed-form supersaturation machinery: the forced-chain lower bound, its
tightness range, the permutation-count formulas N(n, a_1..a_k) in both
factorial and ratio form, the y/z products with their minimization, and the
extremal family construction that attains the bound."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Callable, Iterable, Optional, Sequence

from supersat.core import (
    Family,
    LevelInterval,
    VARIANTS,
    binom,
    build_b_family,
    check_ground_set,
    check_word,
    level,
    level_words,
    middle_levels,
)
from supersat.scd import Decomposition

# selector(n, level, count) -> `count` distinct subset words on that level
Selector = Callable[[int, int, int], Iterable[int]]


def _check_nk(n: int, k: int) -> None:
    check_ground_set(n)
    if not 2 <= k <= n + 1:
        raise ValueError(f"k must be in [2, {n + 1}], got {k}")


def _check_levels(n: int, levels: Sequence[int]) -> tuple[int, ...]:
    check_ground_set(n)
    levels = tuple(levels)
    if not levels:
        raise ValueError("at least one level is required")
    if any(not 0 <= a <= n for a in levels):
        raise ValueError(f"levels must lie in [0, {n}]: {levels}")
    if any(b <= a for a, b in zip(levels, levels[1:])):
        raise ValueError(f"levels must be strictly increasing: {levels}")
    return levels


def supersat_bound(n: int, k: int, x: int) -> int:
    """Least number of k-chains forced into a family whose size exceeds the
    largest k-chain-free size by x."""
    _check_nk(n, k)
    if x < 0:
        raise ValueError(f"surplus x must be nonnegative, got {x}")
    return x * min_max_yz(n, k)


def added_row_level(n: int, k: int) -> int:
    """Level of the k-th middle row, the row the extremal construction fills:
    n//2 + k//2 for even k, n//2 - k//2 for odd k."""
    _check_nk(n, k)
    return n // 2 + (k // 2 if k % 2 == 0 else -(k // 2))


def tight_x_max(n: int, k: int) -> int:
    """Largest surplus for which the bound is attained: the size of the k-th
    middle row."""
    return binom(n, added_row_level(n, k))


def yz(n: int, levels: Sequence[int]) -> tuple[int, int]:
    """The two consecutive-binomial products for a level tuple.

    y multiplies C(a_{i+1}, a_i) and z multiplies C(n - a_i, n - a_{i+1});
    both depend only on the endpoints and the multiset of consecutive
    differences.
    """
    levels = _check_levels(n, levels)
    y = math.prod(binom(b, a) for a, b in zip(levels, levels[1:]))
    z = math.prod(binom(n - a, n - b) for a, b in zip(levels, levels[1:]))
    return y, z


def n_permutations_factorial(n: int, levels: Sequence[int]) -> int:
    """Permutations carrying some chain with these set sizes onto a single
    decomposition chain: the factorial product times the min-binomial factor."""
    levels = _check_levels(n, levels)
    value = math.factorial(levels[0]) * math.factorial(n - levels[-1])
    for a, b in zip(levels, levels[1:]):
        value *= math.factorial(b - a)
    return value * min(binom(n, levels[0]), binom(n, levels[-1]))


def n_permutations_ratio(n: int, levels: Sequence[int]) -> int:
    """Same count as n! / max{y, z}; agrees with the factorial form on every
    tuple."""
    levels = _check_levels(n, levels)
    y, z = yz(n, levels)
    quotient, remainder = divmod(math.factorial(n), max(y, z))
    if remainder:
        raise ArithmeticError(f"n!/max(y,z) is not integral for {levels}")
    return quotient


def n_permutations_enumerate(dec: Decomposition, chain: Sequence[int]) -> int:
    """Brute-force permutation count over all n! relabelings; n <= 7.

    Relabeling the chain instead of the decomposition visits the same
    permutation count, so a single locator serves all n! checks.
    """
    n = dec.n
    if n > 7:
        raise ValueError("factorial enumeration is capped at n = 7")
    chain = tuple(chain)
    if not chain:
        raise ValueError("empty chain")
    for w in chain:
        check_word(w, n)
    for a, b in zip(chain, chain[1:]):
        if a == b or (a & b) != a:
            raise ValueError("input sets must strictly increase under inclusion")
    count = 0
    for image in permutations(range(n)):
        target = None
        for w in chain:
            out = 0
            rest = w
            while rest:
                low = rest & -rest
                out |= 1 << image[low.bit_length() - 1]
                rest ^= low
            idx, _ = dec.locator[out]
            if target is None:
                target = idx
            elif idx != target:
                break
        else:
            count += 1
    return count


def binomial_identity_holds(a: int, i: int, j: int) -> bool:
    """C(a+i+j, a+i) * C(a+i, a) == C(a+i+j, a+j) * C(a+j, a)."""
    if min(a, i, j) < 0:
        raise ValueError("arguments must be nonnegative")
    return binom(a + i + j, a + i) * binom(a + i, a) == binom(a + i + j, a + j) * binom(a + j, a)


def min_max_yz(n: int, k: int) -> int:
    """Closed-form minimum of max{y, z} over all k-level tuples:
    the falling product from (n+k)//2 of length k-1."""
    _check_nk(n, k)
    top = (n + k) // 2
    return math.prod(range(top - k + 2, top + 1))


def min_max_yz_minimizer(n: int, k: int) -> tuple[int, ...]:
    """The unit-difference tuple ending at (n+k)//2 that attains the minimum."""
    _check_nk(n, k)
    top = (n + k) // 2
    return tuple(range(top - k + 1, top + 1))


def min_max_yz_exhaustive(n: int, k: int) -> tuple[int, tuple[int, ...]]:
    """Verification mode: minimize max{y, z} over every k-level tuple.

    Returns the true minimum and its lexicographically smallest witness.
    """
    _check_nk(n, k)
    best: Optional[int] = None
    arg: tuple[int, ...] = ()
    for levels in combinations(range(n + 1), k):
        y, z = yz(n, levels)
        value = max(y, z)
        if best is None or value < best:
            best, arg = value, levels
    assert best is not None
    return best, arg


@dataclass(frozen=True)
class MinMaxYZReport:
    """Exhaustive audit of the max{y, z} minimization for one (n, k).

    The closed-form product is the minimum over every tuple avoiding the
    full 0..n span, attained at the unit-difference tuple ending at
    (n+k)//2; tuples containing both level 0 and level n can dip below it
    (both single-step reductions are blocked there), and `below_closed_form`
    lists every such dip.
    """

    n: int
    k: int
    closed_form: int
    predicted_minimizer: tuple[int, ...]
    predicted_attains: bool
    exhaustive_min: int
    exhaustive_argmin: tuple[int, ...]
    confirmed: bool
    span_free_min: Optional[int]
    span_free_confirmed: bool
    below_closed_form: tuple[tuple[int, ...], ...]


def min_max_yz_verification(n: int, k: int) -> MinMaxYZReport:
    """Exhaustively minimize max{y, z} and compare against the closed form."""
    _check_nk(n, k)
    closed = min_max_yz(n, k)
    predicted = min_max_yz_minimizer(n, k)
    exhaustive_min, exhaustive_argmin = min_max_yz_exhaustive(n, k)
    span_free: Optional[int] = None
    below = []
    for levels in combinations(range(n + 1), k):
        value = max(yz(n, levels))
        if levels[0] > 0 or levels[-1] < n:
            span_free = value if span_free is None else min(span_free, value)
        if value < closed:
            below.append(levels)
    # only k = n+1 leaves no span-free tuple, and there the single tuple matches
    return MinMaxYZReport(
        n=n,
        k=k,
        closed_form=closed,
        predicted_minimizer=predicted,
        predicted_attains=max(yz(n, predicted)) == closed,
        exhaustive_min=exhaustive_min,
        exhaustive_argmin=exhaustive_argmin,
        confirmed=exhaustive_min == closed,
        span_free_min=span_free,
        span_free_confirmed=span_free is None or span_free == closed,
        below_closed_form=tuple(below),
    )


def colex_smallest(n: int, lvl: int, count: int) -> list[int]:
    """The `count` colexicographically smallest subsets of [n] of size `lvl`."""
    out = []
    for w in level_words(n, lvl):
        if len(out) == count:
            break
        out.append(w)
    if len(out) < count:
        raise ValueError(f"level {lvl} holds only {len(out)} subsets, need {count}")
    return out


def build_extremal_family(
    n: int, k: int, x: int, selector: Optional[Selector] = None
) -> Family:
    """The k-chain-free maximum family plus x sets on the adjacent middle row.

    The base is the variant of the k-1 middle rows sitting on the opposite
    side of the added row, so the filled levels form one contiguous block of
    k middle rows; contiguity is validated rather than assumed.  `selector`
    picks the x sets on the added row (default: colexicographically
    smallest); any choice yields the same chain count.
    """
    _check_nk(n, k)
    limit = tight_x_max(n, k)
    if not 0 <= x <= limit:
        raise ValueError(f"x must be in [0, {limit}] for a tight construction, got {x}")
    row = added_row_level(n, k)

    base: Optional[LevelInterval] = None
    base_variant = None
    for variant in VARIANTS:
        interval = middle_levels(n, k - 1, variant)
        if row in (interval.hi + 1, interval.lo - 1):
            base, base_variant = interval, variant
            break
    if base is None:
        raise RuntimeError(f"no middle-row variant is adjacent to row {row}")
    union = LevelInterval(min(base.lo, row), max(base.hi, row))
    if union not in (middle_levels(n, k, "floor"), middle_levels(n, k, "ceil")):
        raise RuntimeError(f"rows {union} do not form a block of {k} middle rows")

    chosen = list(selector(n, row, x)) if selector is not None else colex_smallest(n, row, x)
    if len(chosen) != x or len(set(chosen)) != x:
        raise ValueError(f"selector must yield {x} distinct sets")
    for w in chosen:
        check_word(w, n)
        if level(w) != row:
            raise ValueError(f"selector returned a set of size {level(w)}, expected {row}")
    return build_b_family(n, k - 1, base_variant).with_words(chosen)


@dataclass(frozen=True)
class BoundReport:
    """Everything the bound says about one (n, k, x) instance."""

    n: int
    k: int
    x: int
    sigma_threshold: int
    bound_value: int
    tight_x_max: int
    achieved_count: Optional[int] = None

    def to_payload(self) -> dict:
        payload = {
            "n": self.n,
            "k": self.k,
            "x": self.x,
            "sigma": self.sigma_threshold,
            "bound": self.bound_value,
            "tight_x_max": self.tight_x_max,
        }
        if self.achieved_count is not None:
            payload["achieved"] = self.achieved_count
        return payload


def bound_report(n: int, k: int, x: int, achieved: Optional[int] = None) -> BoundReport:
    from supersat.core import sigma

    return BoundReport(
        n=n,
        k=k,
        x=x,
        sigma_threshold=sigma(n, k - 1),
        bound_value=supersat_bound(n, k, x),
        tight_x_max=tight_x_max(n, k),
        achieved_count=achieved,
    )
