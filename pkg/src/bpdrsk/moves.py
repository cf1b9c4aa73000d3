"""
Route surgery shared by insertion and jeu de taquin.

Every elementary move on a bumpless pipe dream replaces, inside a two-column
strip, one corner shape of a route by the other one:

* *undrooped*: up column ``c`` from row ``bottom`` to row ``top``, then east;
* *drooped*:   east at row ``bottom``, then up column ``c+1`` to row ``top``.
"""

from __future__ import annotations

from .bpd import Cell


class MoveError(ValueError):
    """A route does not have the shape a move expects."""


def droop_route(route: list[Cell], top: Cell, bottom: int) -> list[Cell]:
    """Move the corner of ``route`` at ``top = (t, c)`` down to ``(bottom, c+1)``."""
    t, c = top
    start = _index(route, (bottom, c))
    expected = [(r, c) for r in range(bottom, t - 1, -1)] + [(t, c + 1)]
    if route[start:start + len(expected)] != expected:
        raise MoveError(f"route does not rise from {(bottom, c)} to {top} and turn east")
    replacement = [(bottom, c)] + [(r, c + 1) for r in range(bottom, t - 1, -1)]
    return route[:start] + replacement + route[start + len(expected):]


def undroop_route(route: list[Cell], top: Cell, bottom: int) -> list[Cell]:
    """Inverse of :func:`droop_route`; ``top = (t, c)`` is the cell the corner moves into."""
    t, c = top
    start = _index(route, (bottom, c))
    expected = [(bottom, c)] + [(r, c + 1) for r in range(bottom, t - 1, -1)]
    if route[start:start + len(expected)] != expected:
        raise MoveError(f"route does not turn at {(bottom, c)} and rise to {(t, c + 1)}")
    replacement = [(r, c) for r in range(bottom, t - 1, -1)] + [(t, c + 1)]
    return route[:start] + replacement + route[start + len(expected):]


def _index(route: list[Cell], cell: Cell) -> int:
    try:
        return route.index(cell)
    except ValueError:
        raise MoveError(f"route does not visit {cell}") from None
