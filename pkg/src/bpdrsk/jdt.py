"""
Jeu de taquin on bumpless pipe dreams and its reverse.

``jdt_step`` slides a blank tile from the first row containing blanks towards
the south-east until it uncrosses two adjacent pipes, lowering the length of
the permutation by one.  ``reversed_jdt`` runs the same moves backwards.

Both directions are built from two strip moves on routes:

* ``rec_undroop(x, y)``: the pipe rising through ``(x, y+1)`` is pulled back
  into column ``y``, and every pipe whose vertical run in column ``y`` lies
  strictly inside the strip is pushed out to column ``y+1``;
* ``rec_droop(x, y)``: the mirror image, pushing the pipe in column ``y-1``
  into column ``y``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bpd import BpdGrid, Cell, InvalidGrid, Routes, Tile
from .insertion import PreconditionViolated
from .moves import MoveError, droop_route, undroop_route
from .perm import Permutation, decompose_decreasing

__all__ = [
    "JdtResult",
    "NoBlank",
    "JdtFailed",
    "AssertStartRow",
    "PreconditionViolated",
    "jdt_step",
    "jdt_path",
    "rect",
    "rect_steps",
    "reversed_jdt",
    "reversed_jdt_path",
]


class NoBlank(ValueError):
    pass


class JdtFailed(ValueError):
    """Reversed jeu de taquin ran into the first column."""


class AssertStartRow(AssertionError):
    pass


@dataclass
class JdtResult:
    grid: BpdGrid
    pop: tuple[int, int]  # (uncrossed column a, start row r)
    path: list[Cell]


def _rising_run(route: list[Cell], cell: Cell) -> Cell:
    """Walk back from ``cell`` down its column to the cell where the route entered it from the west."""
    idx = route.index(cell)
    while idx > 0 and route[idx - 1][1] == cell[1]:
        idx -= 1
    if idx == 0:
        raise MoveError(f"the pipe through {cell} enters its column from the south edge")
    return route[idx]


def _rising_top(route: list[Cell], cell: Cell) -> Cell:
    """Walk up from ``cell`` to the cell where the route turns east."""
    idx = route.index(cell)
    while idx + 1 < len(route) and route[idx + 1][1] == cell[1]:
        idx += 1
    return route[idx]


def _rec_undroop(grid: BpdGrid, x: int, y: int) -> tuple[BpdGrid, Cell]:
    routes = grid.routes()
    p = routes.rising_owner((x, y + 1))
    x2 = _rising_run(routes[p], (x, y + 1))[0]
    if x2 <= x:
        raise InvalidGrid(f"pipe {p} does not turn below {(x, y + 1)}")
    for z in range(x + 1, x2):
        if grid[(z, y)] is not Tile.R:
            continue
        q = routes.owner((z, y), ("S", "E"))
        z2 = _rising_run(routes[q], (z, y))[0]
        if not z < z2 < x2:
            raise MoveError(f"pipe {q} leaves the strip below row {x2}")
        routes[q] = droop_route(routes[q], (z, y), z2)
    routes[p] = undroop_route(routes[p], (x, y), x2)
    return routes.render(), (x2, y + 1)


def _rec_droop(grid: BpdGrid, x: int, y: int) -> tuple[BpdGrid, Cell]:
    routes = grid.routes()
    p = routes.vertical_owner((x, y - 1))
    x2 = _rising_top(routes[p], (x, y - 1))[0]
    if x2 >= x:
        raise InvalidGrid(f"pipe {p} does not turn above {(x, y - 1)}")
    routes = _clear_strip(grid, routes, x2, x, y)
    routes[p] = droop_route(routes[p], (x2, y - 1), x)
    return routes.render(), (x2, y - 1)


def _clear_strip(grid: BpdGrid, routes: Routes, top: int, bottom: int, col: int) -> Routes:
    """Undroop every pipe whose run in ``col`` lies strictly between two rows."""
    for z in range(top + 1, bottom):
        if grid[(z, col)] is not Tile.R:
            continue
        q = routes.owner((z, col), ("S", "E"))
        z2 = _rising_run(routes[q], (z, col))[0]
        if not z < z2 < bottom:
            raise MoveError(f"pipe {q} leaves the strip below row {bottom}")
        routes[q] = undroop_route(routes[q], (z, col - 1), z2)
    return routes


def _swap_tails(routes: Routes, cell: Cell, p: int, q: int) -> None:
    rp, rq = routes[p], routes[q]
    ip, iq = rp.index(cell), rq.index(cell)
    routes[p], routes[q] = rp[:ip + 1] + rq[iq + 1:], rq[:iq + 1] + rp[ip + 1:]


def jdt_step(grid: BpdGrid) -> JdtResult:
    """Apply jeu de taquin once; see the module docstring."""
    grid.check()
    row = grid.first_blank_row()
    if row is None:
        raise NoBlank("grid has no blank tile")
    x, y = row, grid.blanks_in_row(row)[0]
    path = [(x, y)]
    n = grid.n
    try:
        while True:
            while y + 1 <= n and grid[(x, y + 1)] is Tile.BLANK:
                y += 1
                path.append((x, y))
            if y == n:
                raise InvalidGrid(f"blank tile in the last column at {(x, y)}")
            routes = grid.routes()
            p = routes.rising_owner((x, y + 1))
            if p != y + 1:
                grid, (x, y) = _rec_undroop(grid, x, y)
                path.append((x, y))
                continue
            # uncross pipes y and y+1
            cross = grid.crossing_cell(y, y + 1)
            if cross is None or cross[1] != y + 1 or cross[0] <= x:
                raise InvalidGrid(f"pipes {y} and {y + 1} do not cross below {(x, y + 1)}")
            routes = grid.routes()
            _swap_tails(routes, cross, y, y + 1)
            grid = routes.render()
            grid, _ = _rec_undroop(grid, x, y)
            break
    except MoveError as exc:
        raise InvalidGrid(str(exc)) from None
    grid.check()
    return JdtResult(grid, (y, row), path)


def jdt_path(grid: BpdGrid) -> list[Cell]:
    return jdt_step(grid).path


def rect_steps(grid: BpdGrid) -> list[JdtResult]:
    """The jeu de taquin steps clearing the first row that contains blanks."""
    row = grid.first_blank_row()
    if row is None:
        return []
    steps = []
    current = grid
    for _ in range(len(grid.blanks_in_row(row))):
        result = jdt_step(current)
        if result.pop[1] != row:
            raise AssertStartRow(f"jeu de taquin started in row {result.pop[1]}, expected {row}")
        steps.append(result)
        current = result.grid
    return steps


def rect(grid: BpdGrid) -> tuple[BpdGrid, list[int]]:
    """
    Rectify ``grid``: returns the new grid and ``I(D)`` as a decreasing list,
    where ``perm(D) = s_{i_j} ... s_{i_1} perm(rect(D))``.
    """
    steps = rect_steps(grid)
    if not steps:
        return grid, []
    out = steps[-1].grid
    return out, decompose_decreasing(grid.permutation() * out.permutation().inverse())


def reversed_jdt(grid: BpdGrid, r: int, a: int) -> BpdGrid:
    return _reversed(grid, r, a)[0]


def reversed_jdt_path(grid: BpdGrid, r: int, a: int) -> list[Cell]:
    return _reversed(grid, r, a)[1]


def _reversed(grid: BpdGrid, r: int, a: int) -> tuple[BpdGrid, list[Cell]]:
    grid.check()
    perm: Permutation = grid.permutation()
    if a < 1 or perm.is_left_descent(a):
        raise PreconditionViolated(f"s_{a} is a left descent of {perm}")
    grid = grid.extend(max(grid.n, a + 1))
    try:
        # cross pipes a and a+1
        routes = grid.routes()
        x = _rising_top(routes[a], (grid.n, a))[0]
        x2 = _rising_top(routes[a + 1], (grid.n, a + 1))[0]
        if x2 <= x:
            raise InvalidGrid(f"pipe {a + 1} turns above pipe {a}")
        routes = _clear_strip(grid, routes, x, x2, a + 1)
        routes[a] = droop_route(routes[a], (x, a), x2)
        _swap_tails(routes, (x2, a + 1), a, a + 1)
        grid = routes.render()
        y = a
        path = [(x, y)]
        while x > r:
            while y > 1 and grid[(x, y - 1)] is Tile.BLANK:
                y -= 1
                path.append((x, y))
            if y == 1:
                raise JdtFailed(f"reversed jeu de taquin reached the first column in row {x}")
            grid, (x, y) = _rec_droop(grid, x, y)
            path.append((x, y))
    except MoveError as exc:
        raise InvalidGrid(str(exc)) from None
    grid.check()
    return grid, path
