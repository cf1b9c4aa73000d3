"""
Right insertion of a biletter into a bumpless pipe dream.

Only the plactic regime is supported: the row bound ``k`` of the biletter may
not exceed the first descent of the grid's permutation.  There every droop
stays inside a two-column strip, and anything wider is reported as
:class:`DroopBlocked` instead of being guessed at.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bpd import BpdGrid, Cell, InvalidGrid, Tile
from .moves import MoveError, droop_route

__all__ = [
    "InsertionPath",
    "DroopBlocked",
    "NotCrossed",
    "PreconditionViolated",
    "min_droop",
    "cross_bump_swap",
    "insert",
    "insert_word",
    "working_size",
]

MAX_STEPS = 10_000


class DroopBlocked(ValueError):
    """The strip to the right of a droop is not made of horizontal tiles."""


class NotCrossed(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


@dataclass
class InsertionPath:
    cells: list[Cell] = field(default_factory=list)
    pipes_through: list[int] = field(default_factory=list)
    terminal_cell: Cell | None = None
    crossed_pair: tuple[int, int] | None = None
    # (start cell, pipe) of every max-droop, in order
    droops: list[tuple[Cell, int]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "cells": [list(c) for c in self.cells],
            "pipes_through": list(self.pipes_through),
            "terminal_cell": list(self.terminal_cell) if self.terminal_cell else None,
            "crossed_pair": list(self.crossed_pair) if self.crossed_pair else None,
        }


def working_size(grid: BpdGrid, k: int) -> int:
    # an insertion enlarges the support by at most one beyond max(support, k)
    return max(grid.n, grid.permutation().size, k) + 2


def min_droop(grid: BpdGrid, cell: Cell) -> tuple[BpdGrid, Cell]:
    """
    Droop the south-east elbow at ``cell = (i, j)`` into column ``j+1``.

    The landing row is the first row below ``i`` whose tile in column ``j+1``
    is not horizontal; that tile must be blank (becoming ``J``) or an ``R``
    (becoming a bump).
    """
    i, j = cell
    if grid[cell] not in (Tile.R, Tile.BUMP):
        raise PreconditionViolated(f"no south-east elbow at {cell}")
    if j + 1 > grid.n:
        raise DroopBlocked(f"{cell} is in the last column")
    landing_row = None
    for r in range(i + 1, grid.n + 1):
        t = grid[(r, j + 1)]
        if t is Tile.H:
            continue
        if t in (Tile.BLANK, Tile.R):
            landing_row = r
        break
    if landing_row is None:
        raise DroopBlocked(f"column {j + 1} below {cell} is blocked")
    # the pipe must be rising through the corner cell: V becomes R, J becomes H
    if grid[(landing_row, j)] not in (Tile.V, Tile.J):
        raise DroopBlocked(f"pipe cannot turn at {(landing_row, j)} ({grid[(landing_row, j)].value})")
    if grid[(i, j + 1)] not in (Tile.H, Tile.J):
        raise DroopBlocked(f"pipe leaving {cell} runs through a {grid[(i, j + 1)].name}")
    routes = grid.routes()
    p = routes.owner(cell, ("S", "E"))
    try:
        routes[p] = droop_route(routes[p], cell, landing_row)
        new = routes.render()
    except (MoveError, InvalidGrid) as exc:
        raise DroopBlocked(str(exc)) from None
    return new, (landing_row, j + 1)


def cross_bump_swap(grid: BpdGrid, bump_cell: Cell) -> tuple[BpdGrid, Cell]:
    """Exchange a bump with the cross of the same two pipes; returns the former cross."""
    if grid[bump_cell] is not Tile.BUMP:
        raise PreconditionViolated(f"{bump_cell} is not a bump")
    routes = grid.routes()
    q = routes.owner(bump_cell, ("S", "E"))
    p = routes.owner(bump_cell, ("W", "N"))
    cross = grid.crossing_cell(p, q)
    if cross is None:
        raise NotCrossed(f"pipes {p} and {q} do not cross")
    return grid.replace({bump_cell: Tile.CROSS, cross: Tile.BUMP}), cross


def insert(grid: BpdGrid, b: int, k: int) -> tuple[BpdGrid, InsertionPath]:
    """
    Right-insert the biletter ``(b, k)`` into a finished grid.

    The grid is first enlarged so that the new crossing has room.  Returns the
    new grid, whose permutation is ``t_{alpha,beta} * perm`` with
    ``perm^{-1}(alpha) <= k < perm^{-1}(beta)``, together with the insertion path.
    """
    if not 1 <= b <= k:
        raise PreconditionViolated(f"biletter ({b}, {k}) needs 1 <= b <= k")
    perm = grid.permutation()
    if k > perm.first_descent():
        raise PreconditionViolated(f"k={k} exceeds the first descent of {perm}")
    grid = grid.extend(working_size(grid, k))

    row_b = [c for c in range(grid.n, 0, -1) if grid[(b, c)] is Tile.R]
    if not row_b:
        raise InvalidGrid(f"row {b} has no R tile")
    start = (b, row_b[0])

    path = InsertionPath(cells=[start])
    pipes: list[int] = []
    cell = start
    last_droop_col = None
    for _ in range(MAX_STEPS):
        pipe = grid.routes().owner(cell, ("S", "E"))
        if cell[1] != last_droop_col:
            path.droops.append((cell, pipe))
        pipes.append(pipe)
        grid, landing = min_droop(grid, cell)
        tile = grid[landing]
        if tile is Tile.J:
            r, c = landing
            left = [j2 for j2 in range(c - 1, 0, -1) if grid[(r, j2)] is Tile.R]
            if not left:
                raise InvalidGrid(f"no R tile left of {landing}")
            nxt = (r, left[0])
            if left[0] == cell[1]:
                # same column: the max-droop continues
                last_droop_col = cell[1]
            else:
                path.cells += [landing, nxt]
                last_droop_col = None
            cell = nxt
            continue
        # landed on a bump
        path.cells.append(landing)
        last_droop_col = None
        routes = grid.routes()
        q = routes.owner(landing, ("S", "E"))
        p = routes.owner(landing, ("W", "N"))
        if grid.pipes_cross(p, q):
            grid, cell = cross_bump_swap(grid, landing)
            path.cells.append(cell)
            continue
        if routes.exit_row(q) <= k:
            cell = landing
            continue
        grid = grid.replace({landing: Tile.CROSS})
        path.terminal_cell = landing
        path.crossed_pair = (min(p, q), max(p, q))
        pipes += list(path.crossed_pair)
        break
    else:
        raise RuntimeError("insertion did not terminate")

    for p in pipes:
        if p not in path.pipes_through:
            path.pipes_through.append(p)
    return grid, path


def insert_word(grid: BpdGrid, letters) -> tuple[BpdGrid, list[InsertionPath]]:
    """Insert biletters ``(b, k)`` left to right."""
    paths = []
    for b, k in letters:
        grid, path = insert(grid, b, k)
        paths.append(path)
    return grid, paths
