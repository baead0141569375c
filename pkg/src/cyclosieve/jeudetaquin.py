"""Jeu-de-taquin promotion, demotion, evacuation, and (semi)standardization.

Promotion follows the dot-sliding algorithm: delete every occurrence of the
bound k, slide each dot to the northwest (swapping with the greater of its
north/west neighbors, north on ties), then increment everything and fill the
vacated corner with 1s.  Demotion runs the same procedure backward, with the
mirrored tie break (south on ties).

Row-strict promotion is conjugation by transposition; evacuation is the
rotate-complement-rectify construction on the bounding rectangle.
"""

from __future__ import annotations

from typing import Optional

from .tableaux import Composition, Partition, Tableau, descent_set

_HOLE = None


def _home_region_nw(grid: list[list]) -> set[tuple[int, int]]:
    """Holes forming a top-left-justified order ideal (the finished dots)."""
    home: set[tuple[int, int]] = set()
    grown = True
    while grown:
        grown = False
        for r, row in enumerate(grid):
            for c, val in enumerate(row):
                if val is not _HOLE or (r, c) in home:
                    continue
                if (r == 0 or (r - 1, c) in home) and (c == 0 or (r, c - 1) in home):
                    home.add((r, c))
                    grown = True
    return home


def _home_region_se(grid: list[list], shape: Partition) -> set[tuple[int, int]]:
    """Holes forming a bottom-justified filter (finished demotion dots)."""
    home: set[tuple[int, int]] = set()
    grown = True
    while grown:
        grown = False
        for r, row in enumerate(grid):
            for c, val in enumerate(row):
                if val is not _HOLE or (r, c) in home:
                    continue
                below_ok = r + 1 >= len(shape) or c >= shape[r + 1] or (r + 1, c) in home
                east_ok = c + 1 >= shape[r] or (r, c + 1) in home
                if below_ok and east_ok:
                    home.add((r, c))
                    grown = True
    return home


def promote(t: Tableau, k: int) -> Tableau:
    """One step of jeu-de-taquin promotion on CST(shape, k)."""
    if not t.is_column_strict(k):
        raise ValueError(f"not a column-strict tableau with entries <= {k}")
    grid: list[list] = [list(row) for row in t.rows]
    for row in grid:
        for c, val in enumerate(row):
            if val == k:
                row[c] = _HOLE
    while True:
        home = _home_region_nw(grid)
        pending = [
            (c, r)
            for r, row in enumerate(grid)
            for c, val in enumerate(row)
            if val is _HOLE and (r, c) not in home
        ]
        if not pending:
            break
        c, r = min(pending)  # westernmost dot, then northmost
        while True:
            north = grid[r - 1][c] if r > 0 else _HOLE
            west = grid[r][c - 1] if c > 0 else _HOLE
            if north is _HOLE and west is _HOLE:
                break
            if west is _HOLE or (north is not _HOLE and north >= west):
                grid[r][c], grid[r - 1][c] = north, _HOLE
                r -= 1
            else:
                grid[r][c], grid[r][c - 1] = west, _HOLE
                c -= 1
    rows = tuple(tuple(1 if val is _HOLE else val + 1 for val in row) for row in grid)
    return Tableau(rows)


def demote(t: Tableau, k: int) -> Tableau:
    """The inverse of :func:`promote`."""
    if not t.is_column_strict(k):
        raise ValueError(f"not a column-strict tableau with entries <= {k}")
    shape = t.shape
    grid: list[list] = [[_HOLE if val == 1 else val - 1 for val in row] for row in t.rows]
    while True:
        home = _home_region_se(grid, shape)
        pending = [
            (c, r)
            for r, row in enumerate(grid)
            for c, val in enumerate(row)
            if val is _HOLE and (r, c) not in home
        ]
        if not pending:
            break
        c, r = max(pending)  # easternmost dot, then southmost
        while True:
            south = grid[r + 1][c] if r + 1 < len(shape) and c < shape[r + 1] else _HOLE
            east = grid[r][c + 1] if c + 1 < shape[r] else _HOLE
            if south is _HOLE and east is _HOLE:
                break
            if east is _HOLE or (south is not _HOLE and south <= east):
                grid[r][c], grid[r + 1][c] = south, _HOLE
                r += 1
            else:
                grid[r][c], grid[r][c + 1] = east, _HOLE
                c += 1
    rows = tuple(tuple(k if val is _HOLE else val for val in row) for row in grid)
    return Tableau(rows)


def promote_power(t: Tableau, k: int, d: int) -> Tableau:
    """Apply promotion (d >= 0) or demotion (d < 0) repeatedly."""
    for _ in range(abs(d)):
        t = promote(t, k) if d > 0 else demote(t, k)
    return t


def evacuate(t: Tableau, k: Optional[int] = None) -> Tableau:
    """Schutzenberger evacuation: rotate 180 degrees, complement, rectify.

    The rectangle used for the embedding is the bounding box of the shape;
    rectification is translation invariant so nothing larger is needed.
    """
    if k is None:
        k = t.size
    if not t.is_column_strict(k):
        raise ValueError(f"not a column-strict tableau with entries <= {k}")
    shape = t.shape
    if not shape:
        return t
    nrows, ncols = len(shape), shape[0]
    # Rotated complement sits in the southeast corner of the nrows x ncols box.
    grid: list[list] = [[_HOLE] * ncols for _ in range(nrows)]
    for r in range(nrows):
        for c in range(shape[r]):
            grid[nrows - 1 - r][ncols - 1 - c] = k + 1 - t.rows[r][c]
    gone: set[tuple[int, int]] = set()
    remaining = {(r, c) for r in range(nrows) for c in range(ncols) if grid[r][c] is _HOLE}
    while remaining:
        r, c = max(
            (rc for rc in remaining
             if (rc[0] + 1, rc[1]) not in remaining and (rc[0], rc[1] + 1) not in remaining),
        )
        remaining.discard((r, c))
        while True:
            east = grid[r][c + 1] if c + 1 < ncols and (r, c + 1) not in gone else _HOLE
            south = grid[r + 1][c] if r + 1 < nrows and (r + 1, c) not in gone else _HOLE
            if east is _HOLE and south is _HOLE:
                gone.add((r, c))
                break
            if east is _HOLE or (south is not _HOLE and south <= east):
                grid[r][c], grid[r + 1][c] = south, _HOLE
                r += 1
            else:
                grid[r][c], grid[r][c + 1] = east, _HOLE
                c += 1
    rows = []
    for r in range(nrows):
        row = [grid[r][c] for c in range(ncols) if (r, c) not in gone]
        if row:
            rows.append(tuple(row))
    out = Tableau(rows)
    if out.shape != shape:
        raise AssertionError(f"evacuation changed the shape: {shape} -> {out.shape}")
    return out


def standardize(p: Tableau) -> Tableau:
    """std(P) for row-strict P: number equal entries along their vertical strip.

    Cells holding the same value are taken top to bottom (equivalently right
    to left), which is the unique order making std invert semistandardization.
    """
    if not p.is_row_strict():
        raise ValueError("standardize expects a row-strict tableau")
    cells = [(val, r, c) for r, row in enumerate(p.rows) for c, val in enumerate(row)]
    cells.sort(key=lambda vrc: (vrc[0], vrc[1]))
    grid = [list(row) for row in p.rows]
    for number, (_, r, c) in enumerate(cells, start=1):
        grid[r][c] = number
    return Tableau(grid)


def _block_intervals(alpha: Composition) -> list[tuple[int, int]]:
    """The intervals [start, end] of values that each part of alpha absorbs."""
    out = []
    start = 1
    for part in alpha:
        out.append((start, start + part - 1))
        start += part
    return out


def is_semistandardizable(t: Tableau, alpha: Composition) -> bool:
    """True iff every interval of alpha sits inside the descent set of t."""
    alpha = Composition(alpha)
    if alpha.size != t.size:
        raise ValueError("composition size must match tableau size")
    d = descent_set(t)
    for start, end in _block_intervals(alpha):
        if any(i not in d for i in range(start, end)):
            return False
    return True


def semistandardize(t: Tableau, alpha: Composition) -> Optional[Tableau]:
    """rst_alpha(T): collapse the value blocks of alpha, or None if not allowed."""
    alpha = Composition(alpha)
    if alpha.size != t.size:
        raise ValueError("composition size must match tableau size")
    if not is_semistandardizable(t, alpha):
        return None
    label = {}
    for i, (start, end) in enumerate(_block_intervals(alpha), start=1):
        for v in range(start, end + 1):
            label[v] = i
    out = Tableau([tuple(label[v] for v in row) for row in t.rows])
    if not out.is_row_strict(len(alpha)):
        raise AssertionError("semistandardization produced a non-row-strict filling")
    return out


def promote_rst(u: Tableau, k: int) -> Tableau:
    """Promotion on row-strict tableaux, via conjugation by transposition."""
    return promote(u.transpose(), k).transpose()


def demote_rst(u: Tableau, k: int) -> Tableau:
    return demote(u.transpose(), k).transpose()


def evacuate_rst(u: Tableau, k: int) -> Tableau:
    return evacuate(u.transpose(), k).transpose()
