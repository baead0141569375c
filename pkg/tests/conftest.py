from __future__ import annotations

from cyclosieve import Composition, Partition


def partitions_of(n: int, max_part: int | None = None):
    """All partitions of n, largest part first."""
    max_part = n if max_part is None else max_part
    if n == 0:
        yield Partition(())
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + tuple(rest))


def all_partitions_up_to(n: int):
    for size in range(n + 1):
        yield from partitions_of(size)


def rectangles_up_to(n: int):
    for size in range(1, n + 1):
        for width in range(1, size + 1):
            if size % width == 0:
                yield Partition((width,) * (size // width))


def compositions_of(n: int, length: int, allow_zero: bool = True):
    """Compositions of n with exactly ``length`` parts."""
    lo = 0 if allow_zero else 1
    if length == 0:
        if n == 0:
            yield Composition(())
        return
    for first in range(lo, n + 1):
        for rest in compositions_of(n - first, length - 1, allow_zero):
            yield Composition((first,) + tuple(rest))
