"""Small helpers for vertex sets stored as int bitmasks.

Bit k of a mask stands for the 1-based vertex label k+1. Everything in the
package that enumerates sets works on masks; labels only appear at the API
surface and in JSON files.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(labels: Iterable[int], n: int) -> int:
    """Bitmask for a collection of 1-based labels, validated against 1..n."""
    m = 0
    for v in labels:
        if not 1 <= v <= n:
            raise ValueError(f"vertex {v} out of range 1..{n}")
        m |= 1 << (v - 1)
    return m


def labels_of(mask: int) -> tuple[int, ...]:
    """Sorted 1-based labels of a mask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield 0-based bit positions of a mask, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def submasks(mask: int) -> Iterator[int]:
    """All submasks of mask, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def is_antichain(masks: Iterable[int]) -> bool:
    ms = list(masks)
    for i, a in enumerate(ms):
        for j, b in enumerate(ms):
            if i != j and a & b == a:
                return False
    return True


def antichain_max(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal members, deduplicated, sorted by mask value."""
    uniq = sorted(set(masks), key=popcount, reverse=True)
    keep: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in keep):
            keep.append(m)
    keep.sort()
    return keep


def antichain_min(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal members, deduplicated, sorted by mask value."""
    uniq = sorted(set(masks), key=popcount)
    keep: list[int] = []
    for m in uniq:
        if not any(m & k == k for k in keep):
            keep.append(m)
    keep.sort()
    return keep
