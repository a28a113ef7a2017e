"""Subsets of a finite carrier stored as Python ints (bit i <=> element i)."""

from typing import Iterable, Iterator


def members(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def to_list(mask: int) -> list[int]:
    return list(members(mask))


def from_indices(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def full(size: int) -> int:
    return (1 << size) - 1


def popcount(mask: int) -> int:
    return mask.bit_count()


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def least(mask: int) -> int:
    """Index of the least element; mask must be nonzero."""
    return (mask & -mask).bit_length() - 1


def intersect_all(masks: Iterable[int], universe: int) -> int:
    """Intersection of a family; the empty family yields ``universe``."""
    out = universe
    for m in masks:
        out &= m
    return out
