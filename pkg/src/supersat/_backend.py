"""Kernel selection: use the compiled `_fastcount` extension when it is
built, otherwise the pure-Python `_pycount` fallback.

The compiled counter works in 64-bit words and raises OverflowError when a
count would wrap; the dispatcher then reruns that call on the unbounded
pure-Python path, so results are always exact.
"""

from __future__ import annotations

from supersat import _pycount

try:
    from supersat import _fastcount  # type: ignore[attr-defined]
except ImportError:
    _fastcount = None

BACKEND = "cython" if _fastcount is not None else "python"


def count_chains(n: int, k: int, members: int) -> int:
    if _fastcount is not None:
        try:
            return _fastcount.count_chains(n, k, members)
        except OverflowError:
            pass
    return _pycount.count_chains(n, k, members)


def min_table(n: int, k: int) -> tuple[list[int], list[int]]:
    if _fastcount is not None:
        return _fastcount.min_table(n, k)
    return _pycount.min_table(n, k)
