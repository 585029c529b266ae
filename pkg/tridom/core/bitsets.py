# tridom/core/bitsets.py
"""Vertex sets as Python int bit masks (bit v set <=> vertex v present)."""
from collections.abc import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def full_mask(n: int) -> int:
    return (1 << n) - 1


def lowest(mask: int) -> int:
    """Index of the lowest set bit; -1 for the empty mask."""
    return (mask & -mask).bit_length() - 1


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def union_of(masks: Iterable[int]) -> int:
    total = 0
    for m in masks:
        total |= m
    return total
