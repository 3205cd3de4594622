"""
Bitmask helpers.

Subsets of a poset's ground set 0..n-1 are ints with bit i set iff
element i is a member.
"""

from collections.abc import Iterable, Iterator
from itertools import combinations


def mask_of(elements: Iterable[int]) -> int:
    """
    Build a membership mask from element indices.

    Example:
        >>> mask_of([0, 2])
        5
    """
    mask = 0
    for e in elements:
        mask |= 1 << e
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    """Number of members in a mask."""
    return mask.bit_count()


def full_mask(n: int) -> int:
    """Mask containing every element of 0..n-1."""
    return (1 << n) - 1


def submasks_containing(seed: int, universe: int, extra: int) -> Iterator[int]:
    """
    Yield every mask ``seed | s`` with ``s`` a subset of ``universe - seed``
    of exactly ``extra`` elements, in lexicographic order of the added elements.
    """
    free = list(iter_bits(universe & ~seed))
    for combo in combinations(free, extra):
        yield seed | mask_of(combo)
