"""Symmetric chain decompositions of the subset lattice: the inductive and
the bracket-matching constructions, validation, and the permutation action
on decompositions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from supersat.core import binom, check_ground_set, check_word, level

# A chain is a strictly inclusion-increasing tuple of subset words.
Chain = tuple[int, ...]


@dataclass(frozen=True)
class Permutation:
    """Bijection of [n]; image[i] is where element i+1 goes."""

    image: tuple[int, ...]

    def __post_init__(self):
        n = len(self.image)
        check_ground_set(n)
        if sorted(self.image) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of [1, {n}]: {self.image}")

    @property
    def n(self) -> int:
        return len(self.image)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def apply_to_word(self, word: int) -> int:
        out = 0
        for i, target in enumerate(self.image):
            if (word >> i) & 1:
                out |= 1 << (target - 1)
        return out

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self.compose(other))(i) = self(other(i))."""
        if self.n != other.n:
            raise ValueError("permutation size mismatch")
        return Permutation(tuple(self.image[other.image[i] - 1] for i in range(self.n)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, target in enumerate(self.image):
            inv[target - 1] = i + 1
        return Permutation(tuple(inv))


@dataclass(frozen=True)
class Decomposition:
    """Chains covering the subset lattice, with a word -> (chain, position) locator.

    Construction canonicalizes chain order and derives the locator but does
    not require the chains to form a valid SCD; `validate_scd` reports that,
    so deliberately broken decompositions can be represented in tests.
    """

    n: int
    chains: tuple[Chain, ...]
    locator: dict[int, tuple[int, int]] = field(compare=False, repr=False)

    @classmethod
    def from_chains(cls, n: int, chains: Iterable[Sequence[int]]) -> "Decomposition":
        check_ground_set(n)
        canon = []
        for ch in chains:
            ch = tuple(ch)
            if not ch:
                raise ValueError("empty chain")
            for w in ch:
                check_word(w, n)
            canon.append(ch)
        canon.sort(key=lambda ch: (min(level(w) for w in ch), min(ch)))
        locator: dict[int, tuple[int, int]] = {}
        for idx, ch in enumerate(canon):
            for pos, w in enumerate(ch):
                locator.setdefault(w, (idx, pos))
        return cls(n, tuple(canon), locator)


def scd_inductive(n: int) -> Decomposition:
    """Symmetric chain decomposition built by adding one element at a time.

    Each chain (S_m, ..., S_t) of the smaller decomposition becomes
    (S_m, ..., S_t, S_t + new) and, when it has at least two sets,
    (S_m + new, ..., S_{t-1} + new).
    """
    check_ground_set(n)
    chains: list[Chain] = [(0, 1)]
    for m in range(2, n + 1):
        bit = 1 << (m - 1)
        grown: list[Chain] = []
        for ch in chains:
            grown.append(ch + (ch[-1] | bit,))
            if len(ch) >= 2:
                grown.append(tuple(w | bit for w in ch[:-1]))
        chains = grown
    return Decomposition.from_chains(n, chains)


def bracketing_chain_of(n: int, word: int) -> Chain:
    """The full chain through `word` in the bracket-matching decomposition.

    Read position i as ')' when i is in the subset and '(' otherwise, match
    brackets the usual nested way, then sweep the unmatched positions (which
    always read ")..)(..(" left to right) through every ")^j (^(u-j)"
    pattern while matched positions stay fixed.
    """
    check_ground_set(n)
    check_word(word, n)
    stack: list[int] = []
    closers: list[int] = []
    for i in range(n):
        if (word >> i) & 1:
            if stack:
                stack.pop()
            else:
                closers.append(i)
        else:
            stack.append(i)
    base = word
    for pos in closers:
        base &= ~(1 << pos)
    chain = [base]
    w = base
    for pos in closers + stack:  # unmatched positions in ascending order
        w |= 1 << pos
        chain.append(w)
    return tuple(chain)


def scd_bracketing(n: int) -> Decomposition:
    """Symmetric chain decomposition from the bracket-matching rule."""
    check_ground_set(n)
    chains: dict[int, Chain] = {}
    for word in range(1 << n):
        ch = bracketing_chain_of(n, word)
        chains.setdefault(ch[0], ch)
    return Decomposition.from_chains(n, chains.values())


@dataclass(frozen=True)
class ScdValidation:
    """Per-property outcome of validating a decomposition as an SCD."""

    partition: bool
    skipless: bool
    symmetric: bool
    chain_count: bool
    locator: bool
    problems: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return (
            self.partition
            and self.skipless
            and self.symmetric
            and self.chain_count
            and self.locator
        )


def validate_scd(dec: Decomposition) -> ScdValidation:
    """Check partition of the lattice, skipless chains, symmetric chains,
    the chain-count identity, and locator consistency."""
    n = dec.n
    problems: list[str] = []

    seen: set[int] = set()
    duplicates = 0
    for ch in dec.chains:
        for w in ch:
            if w in seen:
                duplicates += 1
            seen.add(w)
    partition = duplicates == 0 and len(seen) == 1 << n
    if duplicates:
        problems.append(f"{duplicates} subsets appear on more than one chain")
    if len(seen) != 1 << n:
        problems.append(f"chains cover {len(seen)} of {1 << n} subsets")

    skipless = True
    for idx, ch in enumerate(dec.chains):
        for a, b in zip(ch, ch[1:]):
            if (a & b) != a or level(b) != level(a) + 1:
                skipless = False
                problems.append(f"chain {idx} is not a skipless chain")
                break

    symmetric = True
    for idx, ch in enumerate(dec.chains):
        lo = min(level(w) for w in ch)
        hi = max(level(w) for w in ch)
        if lo + hi != n:
            symmetric = False
            problems.append(f"chain {idx} spans levels [{lo}, {hi}], not symmetric")

    expected = binom(n, n // 2)
    chain_count = len(dec.chains) == expected
    if not chain_count:
        problems.append(f"{len(dec.chains)} chains, expected C(n, n//2) = {expected}")

    locator = len(dec.locator) == len(seen)
    for idx, ch in enumerate(dec.chains):
        if not locator:
            break
        for pos, w in enumerate(ch):
            if dec.locator.get(w) != (idx, pos):
                locator = False
                problems.append(f"locator disagrees with chain {idx} at position {pos}")
                break

    return ScdValidation(partition, skipless, symmetric, chain_count, locator, tuple(problems))


def permute_decomposition(dec: Decomposition, perm: Permutation) -> Decomposition:
    """Apply the permutation to every set of every chain."""
    if perm.n != dec.n:
        raise ValueError(f"permutation acts on [{perm.n}] but decomposition is over [{dec.n}]")
    return Decomposition.from_chains(
        dec.n, (tuple(perm.apply_to_word(w) for w in ch) for ch in dec.chains)
    )


def chain_through(dec: Decomposition, word: int) -> tuple[int, int]:
    """(chain index, position) of `word`; total whenever `dec` is a partition."""
    check_word(word, dec.n)
    return dec.locator[word]
