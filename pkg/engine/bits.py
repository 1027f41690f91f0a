"""Bit-mask helpers for local vertex sets (bit j set ⇔ local vertex j present)."""

from collections.abc import Iterable, Iterator


def iter_bits(mask: int) -> Iterator[int]:
    """Set bit positions, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(mask: int) -> list[int]:
    return list(iter_bits(mask))


def mask_of(ids: Iterable[int]) -> int:
    mask = 0
    for j in ids:
        mask |= 1 << j
    return mask
