"""Partitions, compositions, and tableaux.

Coordinates are English / matrix style throughout: row 1 is the top row,
column 1 is the leftmost column.  Public cell arguments are 1-indexed pairs
(row, col).  All values are immutable after construction and every function
here is pure.
"""

from __future__ import annotations

import math
from functools import cache
from typing import Iterator, Optional, Sequence

DEFAULT_CAP = 10**6


class CapExceeded(RuntimeError):
    """An enumeration produced more objects than the configured cap."""


def _resolve_cap(cap: Optional[int]) -> int:
    return DEFAULT_CAP if cap is None else cap


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Sequence[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition parts must weakly decrease: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def nrows(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition(())
        return Partition(tuple(sum(1 for p in self if p > c) for c in range(self[0])))

    def contains_cell(self, cell: tuple[int, int]) -> bool:
        r, c = cell
        return 1 <= r <= len(self) and 1 <= c <= self[r - 1]

    def cells(self) -> Iterator[tuple[int, int]]:
        for r, row_len in enumerate(self, start=1):
            for c in range(1, row_len + 1):
                yield (r, c)

    def is_rectangular(self) -> bool:
        return len(set(self)) <= 1

    def contains(self, other: "Partition") -> bool:
        if len(other) > len(self):
            return False
        return all(o <= s for o, s in zip(other, self))

    def remove_corner(self) -> "Partition":
        """Drop the box at the end of the last row."""
        if not self:
            raise ValueError("empty partition has no corner")
        parts = list(self)
        parts[-1] -= 1
        if parts[-1] == 0:
            parts.pop()
        return Partition(parts)

    def __repr__(self) -> str:
        return f"Partition{tuple(self)}"


class Composition(tuple):
    """A tuple of nonnegative integers; zero parts are allowed and kept."""

    def __new__(cls, parts: Sequence[int] = ()) -> "Composition":
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"composition parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def labels(self) -> tuple[int, ...]:
        """The induced step function [size] -> [len] as a tuple of labels."""
        out: list[int] = []
        for i, p in enumerate(self, start=1):
            out.extend([i] * p)
        return tuple(out)

    def rotated(self) -> "Composition":
        """Content rotation under promotion: (a_1..a_k) -> (a_k, a_1..a_{k-1})."""
        if not self:
            return self
        return Composition((self[-1],) + self[:-1])

    def reversed_parts(self) -> "Composition":
        return Composition(self[::-1])

    def sorted_partition(self) -> Partition:
        """Sort parts decreasingly and drop zeros."""
        return Partition(tuple(sorted((p for p in self if p), reverse=True)))

    def __repr__(self) -> str:
        return f"Composition{tuple(self)}"


def conjugate(shape: Partition) -> Partition:
    return Partition(shape).conjugate()


def arm_leg(shape: Partition, cell: tuple[int, int]) -> tuple[int, int]:
    r, c = cell
    if not Partition(shape).contains_cell(cell):
        raise ValueError(f"cell {cell} is not in shape {tuple(shape)}")
    arm = shape[r - 1] - c
    leg = sum(1 for row_len in shape[r:] if row_len >= c)
    return arm, leg


def hook_length(shape: Partition, cell: tuple[int, int]) -> int:
    arm, leg = arm_leg(Partition(shape), cell)
    return arm + leg + 1


def hook_lengths(shape: Partition) -> dict[tuple[int, int], int]:
    shape = Partition(shape)
    return {cell: hook_length(shape, cell) for cell in shape.cells()}


def syt_count(shape: Partition) -> int:
    """Number of standard fillings, by the hook length formula."""
    shape = Partition(shape)
    n = shape.size
    denom = math.prod(hook_lengths(shape).values())
    count, rem = divmod(math.factorial(n), denom)
    if rem:
        raise AssertionError(f"hook product does not divide {n}! for {shape}")
    return count


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """True iff mu <= lam in dominance order (partial sums comparison)."""
    mu, lam = Partition(mu), Partition(lam)
    if mu.size != lam.size:
        raise ValueError("dominance order compares partitions of equal size")
    total_mu = total_lam = 0
    for i in range(max(len(mu), len(lam))):
        total_mu += mu[i] if i < len(mu) else 0
        total_lam += lam[i] if i < len(lam) else 0
        if total_mu > total_lam:
            return False
    return True


class Tableau:
    """An immutable filling of a partition shape with positive integers."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[int]]):
        object.__setattr__(self, "rows", tuple(tuple(int(x) for x in row) for row in rows))
        lengths = [len(row) for row in self.rows]
        if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)) or 0 in lengths:
            raise ValueError(f"rows do not form a partition shape: {lengths}")

    def __setattr__(self, name, value):
        raise AttributeError("Tableau is immutable")

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def entry(self, cell: tuple[int, int]) -> int:
        r, c = cell
        return self.rows[r - 1][c - 1]

    def max_entry(self) -> int:
        return max((x for row in self.rows for x in row), default=0)

    def content(self, k: Optional[int] = None) -> Composition:
        """Multiplicity vector of entries, reported with explicit length k."""
        if k is None:
            k = self.max_entry()
        counts = [0] * k
        for row in self.rows:
            for x in row:
                if x > k:
                    raise ValueError(f"entry {x} exceeds content length {k}")
                counts[x - 1] += 1
        return Composition(counts)

    def position(self, value: int) -> tuple[int, int]:
        """1-indexed cell of a value that occurs exactly once."""
        hits = [(r, c) for r, row in enumerate(self.rows, 1) for c, x in enumerate(row, 1) if x == value]
        if len(hits) != 1:
            raise ValueError(f"value {value} occurs {len(hits)} times")
        return hits[0]

    def transpose(self) -> "Tableau":
        cols = self.shape.conjugate()
        return Tableau(tuple(tuple(self.rows[r][c] for r in range(cols[c])) for c in range(len(cols))))

    def row_word(self) -> tuple[int, ...]:
        """Concatenation of the rows, top to bottom; the canonical sort key."""
        return tuple(x for row in self.rows for x in row)

    def is_column_strict(self, bound: Optional[int] = None) -> bool:
        for row in self.rows:
            if any(row[i] > row[i + 1] for i in range(len(row) - 1)):
                return False
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(upper[i] >= lower[i] for i in range(len(lower))):
                return False
        return bound is None or self.max_entry() <= bound

    def is_row_strict(self, bound: Optional[int] = None) -> bool:
        for row in self.rows:
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                return False
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(upper[i] > lower[i] for i in range(len(lower))):
                return False
        return bound is None or self.max_entry() <= bound

    def is_standard(self) -> bool:
        n = self.size
        return self.is_column_strict() and sorted(x for row in self.rows for x in row) == list(range(1, n + 1))

    def __eq__(self, other) -> bool:
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __lt__(self, other: "Tableau") -> bool:
        return self.row_word() < other.row_word()

    def __repr__(self) -> str:
        return f"Tableau({list(map(list, self.rows))})"

    def pretty(self) -> str:
        width = max((len(str(x)) for row in self.rows for x in row), default=1)
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in self.rows)


def descent_set(t: Tableau) -> frozenset[int]:
    """D(T): i such that i+1 sits strictly south and weakly west of i."""
    if not t.is_standard():
        raise ValueError("descent sets are defined for standard tableaux")
    pos = {t.rows[r][c]: (r, c) for r in range(len(t.rows)) for c in range(len(t.rows[r]))}
    out = set()
    for i in range(1, t.size):
        (r1, c1), (r2, c2) = pos[i], pos[i + 1]
        if r2 > r1 and c2 <= c1:
            out.add(i)
    return frozenset(out)


def _slide_hole_southeast(grid: list[list[Optional[int]]], hole: tuple[int, int]) -> tuple[int, int]:
    """Forward jeu-de-taquin: slide one hole until nothing lies east or south."""
    r, c = hole
    while True:
        east = grid[r][c + 1] if c + 1 < len(grid[r]) else None
        south = grid[r + 1][c] if r + 1 < len(grid) and c < len(grid[r + 1]) else None
        if east is None and south is None:
            return (r, c)
        if east is None or (south is not None and south <= east):
            grid[r][c], grid[r + 1][c] = south, None
            r += 1
        else:
            grid[r][c], grid[r][c + 1] = east, None
            c += 1


def extended_descent_set(t: Tableau) -> frozenset[int]:
    """D_e(T) for rectangular standard T: D(T), plus n when the slide rule puts it there.

    Membership of n: delete the 1, slide the hole to the southeast corner and
    ask whether n ends up immediately north of it.
    """
    shape = t.shape
    if not shape.is_rectangular():
        raise ValueError("extended descents are defined for rectangular shapes")
    base = set(descent_set(t))
    n = t.size
    grid: list[list[Optional[int]]] = [list(row) for row in t.rows]
    grid[0][0] = None
    r, c = _slide_hole_southeast(grid, (0, 0))
    if r > 0 and grid[r - 1][c] == n:
        base.add(n)
    elif not (c > 0 and grid[r][c - 1] == n) and n > 1:
        raise AssertionError("slide did not leave n adjacent to the hole")
    return frozenset(base)


def css(shape: Partition) -> Tableau:
    """Column superstandard filling: columns filled top to bottom, left to right."""
    shape = Partition(shape)
    rows = [[0] * p for p in shape]
    counter = 1
    cols = shape.conjugate()
    for c in range(len(cols)):
        for r in range(cols[c]):
            rows[r][c] = counter
            counter += 1
    return Tableau(rows)


def enumerate_syt(shape: Partition, cap: Optional[int] = None) -> list[Tableau]:
    """All standard tableaux of the given shape, sorted by row-reading word."""
    shape = Partition(shape)
    limit = _resolve_cap(cap)
    if syt_count(shape) > limit:
        raise CapExceeded(f"SYT({tuple(shape)}) has {syt_count(shape)} > cap {limit} elements")
    n = shape.size
    results: list[Tableau] = []
    rows: list[list[int]] = [[] for _ in shape]

    def place(value: int) -> None:
        if value > n:
            results.append(Tableau([tuple(row) for row in rows]))
            return
        for r in range(len(shape)):
            c = len(rows[r])
            if c < shape[r] and (r == 0 or len(rows[r - 1]) > c):
                rows[r].append(value)
                place(value + 1)
                rows[r].pop()

    place(1)
    results.sort(key=lambda t: t.row_word())
    return results


def _enumerate_fillings(shape: Partition, k: int, content: Optional[Composition], cap: int) -> list[Tableau]:
    """Column-strict fillings with entries <= k, optionally of fixed content."""
    remaining = list(content) if content is not None else None
    cells = [(r, c) for r in range(len(shape)) for c in range(shape[r])]
    cells.sort()  # row by row, left to right
    rows = [[0] * p for p in shape]
    results: list[Tableau] = []

    def fill(idx: int) -> None:
        if idx == len(cells):
            results.append(Tableau([tuple(row) for row in rows]))
            if len(results) > cap:
                raise CapExceeded(f"enumeration exceeded cap {cap}")
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, rows[r][c - 1])
        if r > 0:
            lo = max(lo, rows[r - 1][c] + 1)
        for v in range(lo, k + 1):
            if remaining is not None:
                if v > len(remaining) or remaining[v - 1] == 0:
                    continue
                remaining[v - 1] -= 1
            rows[r][c] = v
            fill(idx + 1)
            if remaining is not None:
                remaining[v - 1] += 1
        rows[r][c] = 0

    fill(0)
    return results


def enumerate_cst(
    shape: Partition,
    k: int,
    content: Optional[Composition] = None,
    cap: Optional[int] = None,
) -> list[Tableau]:
    """All column-strict tableaux with entries <= k, canonically ordered.

    When ``content`` is given it must have length k and size |shape|; the
    enumeration is then restricted to that content.
    """
    shape = Partition(shape)
    if content is not None:
        content = Composition(content)
        if len(content) != k:
            raise ValueError(f"content length {len(content)} != bound {k}")
        if content.size != shape.size:
            raise ValueError("content size must match shape size")
    if k < 0:
        raise ValueError("bound must be nonnegative")
    if len(shape) > k:
        return []
    results = _enumerate_fillings(shape, k, content, _resolve_cap(cap))
    results.sort(key=lambda t: t.row_word())
    return results


def enumerate_rst(
    shape: Partition,
    k: int,
    content: Optional[Composition] = None,
    cap: Optional[int] = None,
) -> list[Tableau]:
    """All row-strict tableaux with entries <= k (transposes of CSTs)."""
    shape = Partition(shape)
    out = [t.transpose() for t in enumerate_cst(shape.conjugate(), k, content, cap)]
    out.sort(key=lambda t: t.row_word())
    return out
