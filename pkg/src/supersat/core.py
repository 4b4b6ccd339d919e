"""Subset-lattice basics: subsets as bit words, families as bitsets,
binomials, middle-level families, and the family text format.

A subset of [n] = {1, ..., n} is an n-bit integer word with bit i-1 set
iff element i is in the subset.  A family is an immutable 2^n-bit
membership bitset indexed by subset word.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

# Counting sweeps are Theta(3^n); 3^20 is the practical ceiling.
MAX_N = 20

VARIANTS = ("floor", "ceil")


class FamilyFormatError(ValueError):
    """Malformed family file."""


class MissingHeader(FamilyFormatError):
    pass


class MalformedLine(FamilyFormatError):
    pass


class ElementOutOfRange(FamilyFormatError):
    pass


class DuplicateSubset(FamilyFormatError):
    pass


def check_ground_set(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_N:
        raise ValueError(f"ground-set size must be an integer in [1, {MAX_N}], got {n!r}")


def check_word(word: int, n: int) -> None:
    if word < 0 or word >> n:
        raise ValueError(f"subset word {word} has bits outside [1, {n}]")


def binom(n: int, j: int) -> int:
    """C(n, j) as an exact integer; 0 whenever j < 0 or j > n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if j < 0 or j > n:
        return 0
    return math.comb(n, j)


def level(word: int) -> int:
    """Cardinality of the subset encoded by `word`."""
    return word.bit_count()


def word_from_elements(elements: Iterable[int], n: int) -> int:
    check_ground_set(n)
    word = 0
    for e in elements:
        if not 1 <= e <= n:
            raise ValueError(f"element {e} outside [1, {n}]")
        word |= 1 << (e - 1)
    return word


def elements_of_word(word: int) -> list[int]:
    out = []
    while word:
        low = word & -word
        out.append(low.bit_length())
        word ^= low
    return out


def level_words(n: int, lvl: int) -> Iterator[int]:
    """All subsets of [n] of size `lvl`, ascending as integers (colex order)."""
    if lvl < 0 or lvl > n:
        return
    if lvl == 0:
        yield 0
        return
    v = (1 << lvl) - 1
    top = 1 << n
    while v < top:
        yield v
        c = v & -v
        r = v + c
        v = (((v ^ r) >> 2) // c) | r


class LevelInterval(NamedTuple):
    """Contiguous range of levels [lo, hi] in the subset lattice."""

    lo: int
    hi: int

    @property
    def width(self) -> int:
        return self.hi - self.lo + 1


@dataclass(frozen=True)
class Family:
    """Set family over [n] as a 2^n-bit membership bitset.

    Bit s of `members` is set iff the subset with word s belongs to the
    family.  Immutable and safe to share across threads.
    """

    n: int
    members: int

    def __post_init__(self):
        check_ground_set(self.n)
        if self.members < 0 or self.members.bit_length() > (1 << self.n):
            raise ValueError("membership bitset does not fit the 2^n subsets")

    @classmethod
    def from_words(cls, n: int, words: Iterable[int]) -> "Family":
        bits = 0
        for w in words:
            check_word(w, n)
            bits |= 1 << w
        return cls(n, bits)

    @classmethod
    def empty(cls, n: int) -> "Family":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "Family":
        return cls(n, (1 << (1 << n)) - 1)

    def size(self) -> int:
        return self.members.bit_count()

    def __contains__(self, word: int) -> bool:
        return 0 <= word < (1 << self.n) and (self.members >> word) & 1 == 1

    def words(self) -> Iterator[int]:
        """Member subset words in ascending order."""
        m = self.members
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def with_words(self, words: Iterable[int]) -> "Family":
        bits = self.members
        for w in words:
            check_word(w, self.n)
            bits |= 1 << w
        return Family(self.n, bits)


def middle_levels(n: int, k: int, variant: str = "floor") -> LevelInterval:
    """The k middle levels of the lattice on [n], floor or ceil flavour.

    The two flavours coincide exactly when n - k is odd.
    """
    check_ground_set(n)
    if not 1 <= k <= n + 1:
        raise ValueError(f"k must be in [1, {n + 1}], got {k}")
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    if variant == "floor":
        return LevelInterval((n - k + 1) // 2, (n + k - 1) // 2)
    return LevelInterval((n - k + 2) // 2, (n + k) // 2)


def sigma(n: int, k: int) -> int:
    """Sum of the k largest binomial coefficients C(n, .)."""
    check_ground_set(n)
    if not 0 <= k <= n + 1:
        raise ValueError(f"k must be in [0, {n + 1}], got {k}")
    if k == 0:
        return 0
    lo, hi = middle_levels(n, k, "floor")
    return sum(binom(n, lvl) for lvl in range(lo, hi + 1))


def build_b_family(n: int, k: int, variant: str = "floor") -> Family:
    """Family of all subsets whose size falls in the k middle levels."""
    lo, hi = middle_levels(n, k, variant)
    bits = 0
    for lvl in range(lo, hi + 1):
        for w in level_words(n, lvl):
            bits |= 1 << w
    return Family(n, bits)


def format_word(word: int) -> str:
    """One subset in the family file syntax: `-` or space-separated elements."""
    if word == 0:
        return "-"
    return " ".join(str(e) for e in elements_of_word(word))


def serialize_family(family: Family) -> str:
    lines = [f"n={family.n}"]
    lines.extend(format_word(w) for w in family.words())
    return "\n".join(lines) + "\n"


def parse_family(text: str) -> Family:
    """Parse the family file format.

    First non-comment line is `n=<int>`; each later line is one subset as
    space-separated elements of [1, n] (any order) or `-` for the empty
    set.  `#` starts a comment.  Duplicate subsets are rejected.
    """
    n = None
    bits = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            if not line.startswith("n="):
                raise MissingHeader(f"line {lineno}: expected `n=<int>` header, got {line!r}")
            try:
                n = int(line[2:])
            except ValueError:
                raise MissingHeader(f"line {lineno}: bad ground-set size {line[2:]!r}") from None
            try:
                check_ground_set(n)
            except ValueError as exc:
                raise MalformedLine(f"line {lineno}: {exc}") from None
            continue
        if line == "-":
            word = 0
        else:
            word = 0
            for part in line.split():
                try:
                    e = int(part)
                except ValueError:
                    raise MalformedLine(f"line {lineno}: {part!r} is not an element") from None
                if not 1 <= e <= n:
                    raise ElementOutOfRange(f"line {lineno}: element {e} outside [1, {n}]")
                bit = 1 << (e - 1)
                if word & bit:
                    raise MalformedLine(f"line {lineno}: repeated element {e}")
                word |= bit
        if (bits >> word) & 1:
            raise DuplicateSubset(f"line {lineno}: duplicate subset {format_word(word)!r}")
        bits |= 1 << word
    if n is None:
        raise MissingHeader("missing `n=<int>` header")
    return Family(n, bits)
