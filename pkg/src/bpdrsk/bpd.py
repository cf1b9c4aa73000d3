"""
Bumpless pipe dream grids.

A grid is an ``n x n`` array of tiles, rows numbered 1..n from the top and
columns 1..n from the left.  Pipes enter through the south edge and leave
through the east edge, moving only north and east.  A pipe is labelled by the
column it enters; the grid's permutation sends an exit row to the label of the
pipe leaving there, ``perm(r) = entry column``.

Besides the six ordinary tiles there is a transient ``BUMP`` tile holding two
touching elbows; it only appears in the middle of insertion and jeu de taquin.

Most structural edits are done on *routes*: the list of cells a pipe visits,
from ``(n, label)`` to its exit cell in column ``n``.  Rendering the routes back
into tiles both rebuilds the grid and checks that no two pipes collide.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterable

from .perm import Permutation

__all__ = [
    "Tile",
    "BpdGrid",
    "InvalidGrid",
    "SizeTooSmall",
    "rothe",
    "identity_grid",
    "Routes",
]

N, S, E, W = "N", "S", "E", "W"

Cell = tuple[int, int]


class InvalidGrid(ValueError):
    pass


class SizeTooSmall(ValueError):
    pass


class Tile(enum.Enum):
    BLANK = "."
    H = "-"
    V = "|"
    CROSS = "+"
    R = "r"
    J = "j"
    BUMP = "b"

    @property
    def pieces(self) -> frozenset[tuple[str, str]]:
        """Connection components as (entry side, exit side) pairs."""
        return _PIECES[self]

    @property
    def sides(self) -> frozenset[str]:
        return frozenset(s for piece in self.pieces for s in piece)

    def exit_from(self, side: str) -> str | None:
        for a, b in self.pieces:
            if a == side:
                return b
        return None


_PIECES = {
    Tile.BLANK: frozenset(),
    Tile.H: frozenset({(W, E)}),
    Tile.V: frozenset({(S, N)}),
    Tile.CROSS: frozenset({(W, E), (S, N)}),
    Tile.R: frozenset({(S, E)}),
    Tile.J: frozenset({(W, N)}),
    Tile.BUMP: frozenset({(S, E), (W, N)}),
}
_TILE_OF_PIECES = {v: k for k, v in _PIECES.items()}
_TILE_OF_CHAR = {t.value: t for t in Tile}


def _entry_side(prev: Cell | None, cell: Cell) -> str:
    if prev is None or prev[0] == cell[0] + 1:
        return S
    return W


def _exit_side(cell: Cell, nxt: Cell | None) -> str:
    if nxt is None or nxt[1] == cell[1] + 1:
        return E
    return N


class Routes(dict):
    """Mapping ``label -> list of cells`` for every pipe of a grid."""

    def __init__(self, n: int, routes: dict[int, list[Cell]]):
        super().__init__(routes)
        self.n = n

    def owner(self, cell: Cell, piece: tuple[str, str]) -> int:
        """Label of the pipe using ``piece`` inside ``cell``."""
        for label, route in self.items():
            for idx, c in enumerate(route):
                if c == cell:
                    prev = route[idx - 1] if idx else None
                    nxt = route[idx + 1] if idx + 1 < len(route) else None
                    if (_entry_side(prev, c), _exit_side(c, nxt)) == piece:
                        return label
        raise InvalidGrid(f"no pipe uses {piece} in {cell}")

    def vertical_owner(self, cell: Cell) -> int:
        """The pipe leaving ``cell`` through its north side."""
        for label, route in self.items():
            for idx, c in enumerate(route):
                if c == cell:
                    nxt = route[idx + 1] if idx + 1 < len(route) else None
                    if _exit_side(c, nxt) == N:
                        return label
        raise InvalidGrid(f"no pipe exits {cell} northwards")

    def rising_owner(self, cell: Cell) -> int:
        """The pipe entering ``cell`` through its south side."""
        for label, route in self.items():
            for idx, c in enumerate(route):
                if c == cell:
                    prev = route[idx - 1] if idx else None
                    if _entry_side(prev, c) == S:
                        return label
        raise InvalidGrid(f"no pipe enters {cell} from the south")

    def exit_row(self, label: int) -> int:
        return self[label][-1][0]

    def render(self) -> BpdGrid:
        n = self.n
        pieces: dict[Cell, set[tuple[str, str]]] = {}
        for label, route in self.items():
            if not route or route[0] != (n, label) or route[-1][1] != n:
                raise InvalidGrid(f"pipe {label} does not run from the south to the east edge")
            for idx, cell in enumerate(route):
                prev = route[idx - 1] if idx else None
                nxt = route[idx + 1] if idx + 1 < len(route) else None
                if prev is not None and not (
                    (prev[0] == cell[0] + 1 and prev[1] == cell[1])
                    or (prev[0] == cell[0] and prev[1] == cell[1] - 1)
                ):
                    raise InvalidGrid(f"pipe {label} jumps from {prev} to {cell}")
                if not (1 <= cell[0] <= n and 1 <= cell[1] <= n):
                    raise InvalidGrid(f"pipe {label} leaves the grid at {cell}")
                piece = (_entry_side(prev, cell), _exit_side(cell, nxt))
                pieces.setdefault(cell, set()).add(piece)
        rows = []
        for r in range(1, n + 1):
            row = []
            for c in range(1, n + 1):
                key = frozenset(pieces.get((r, c), ()))
                tile = _TILE_OF_PIECES.get(key)
                if tile is None or len(key) != len(pieces.get((r, c), ())):
                    raise InvalidGrid(f"pipes collide in {(r, c)}: {sorted(key)}")
                row.append(tile)
            rows.append(tuple(row))
        return BpdGrid(tuple(rows))


@dataclass(frozen=True, eq=False)
class BpdGrid:
    tiles: tuple[tuple[Tile, ...], ...]

    @property
    def n(self) -> int:
        return len(self.tiles)

    def __getitem__(self, cell: Cell) -> Tile:
        r, c = cell
        if not (1 <= r <= self.n and 1 <= c <= self.n):
            raise IndexError(cell)
        return self.tiles[r - 1][c - 1]

    def cells(self) -> Iterable[tuple[Cell, Tile]]:
        for r, row in enumerate(self.tiles, start=1):
            for c, t in enumerate(row, start=1):
                yield (r, c), t

    def replace(self, edits: dict[Cell, Tile]) -> BpdGrid:
        rows = [list(row) for row in self.tiles]
        for (r, c), t in edits.items():
            rows[r - 1][c - 1] = t
        return BpdGrid(tuple(tuple(row) for row in rows))

    # -- resizing and equality ------------------------------------------

    def extend(self, size: int) -> BpdGrid:
        """Embed into a larger grid by adding identity pipes on the south-east."""
        grid = self
        while grid.n < size:
            n = grid.n
            rows = [row + (Tile.H,) for row in grid.tiles]
            rows.append((Tile.V,) * n + (Tile.R,))
            grid = BpdGrid(tuple(rows))
        return grid

    def shrink(self) -> BpdGrid:
        """Drop trailing identity pipes; inverse of :meth:`extend`."""
        rows = [list(row) for row in self.tiles]
        while rows:
            n = len(rows)
            last = rows[-1]
            if (
                last[-1] is Tile.R
                and all(t is Tile.V for t in last[:-1])
                and all(rows[r][-1] is Tile.H for r in range(n - 1))
            ):
                rows.pop()
                for row in rows:
                    row.pop()
            else:
                break
        return BpdGrid(tuple(tuple(row) for row in rows))

    def __eq__(self, other):
        if not isinstance(other, BpdGrid):
            return NotImplemented
        return self.shrink().tiles == other.shrink().tiles

    def __hash__(self):
        return hash(self.shrink().tiles)

    # -- pipes ----------------------------------------------------------

    def trace_pipe(self, label: int) -> list[tuple[Cell, tuple[str, str]]]:
        """Walk pipe ``label`` from the south edge; each step is (cell, (in, out))."""
        n = self.n
        if not 1 <= label <= n:
            raise InvalidGrid(f"no pipe enters column {label} of a size-{n} grid")
        r, c, side = n, label, S
        steps = []
        for _ in range(2 * n + 1):
            out = self[(r, c)].exit_from(side)
            if out is None:
                raise InvalidGrid(f"pipe {label} is stuck in {(r, c)}")
            steps.append(((r, c), (side, out)))
            if out == E:
                if c == n:
                    return steps
                c, side = c + 1, W
            else:
                if r == 1:
                    raise InvalidGrid(f"pipe {label} leaves through the north edge")
                r, side = r - 1, S
        raise InvalidGrid(f"pipe {label} does not terminate")

    def routes(self) -> Routes:
        return Routes(
            self.n,
            {p: [cell for cell, _ in self.trace_pipe(p)] for p in range(1, self.n + 1)},
        )

    def permutation(self) -> Permutation:
        images = [0] * self.n
        for p in range(1, self.n + 1):
            exit_row = self.trace_pipe(p)[-1][0][0]
            if images[exit_row - 1]:
                raise InvalidGrid(f"two pipes exit row {exit_row}")
            images[exit_row - 1] = p
        return Permutation(tuple(images))

    def exit_row(self, label: int) -> int:
        return self.trace_pipe(label)[-1][0][0]

    def crossing_cell(self, p: int, q: int) -> Cell | None:
        """First cell (along ``p``) where pipes ``p`` and ``q`` cross."""
        cells_q = {cell for cell, _ in self.trace_pipe(q)}
        for cell, _ in self.trace_pipe(p):
            if cell in cells_q and self[cell] is Tile.CROSS:
                return cell
        return None

    def pipes_cross(self, p: int, q: int) -> bool:
        return self.crossing_cell(p, q) is not None

    def first_blank_row(self) -> int | None:
        for r, row in enumerate(self.tiles, start=1):
            if Tile.BLANK in row:
                return r
        return None

    def blanks_in_row(self, r: int) -> list[int]:
        """Columns of blank tiles in row ``r``, right to left."""
        return [c for c in range(self.n, 0, -1) if self[(r, c)] is Tile.BLANK]

    def count(self, tile: Tile) -> int:
        return sum(row.count(tile) for row in self.tiles)

    # -- validity -------------------------------------------------------

    def check(self, strict: bool = True) -> None:
        """
        Raise :class:`InvalidGrid` unless the boundary and matching conditions hold.

        ``strict`` additionally demands a finished BPD: no bump tiles, every pair
        of pipes crossing at most once, and as many crosses and blanks as the
        length of the permutation.
        """
        n = self.n
        for (r, c), t in self.cells():
            sides = t.sides
            if r == n and S not in sides:
                raise InvalidGrid(f"bottom tile {(r, c)} has no south connection")
            if c == n and E not in sides:
                raise InvalidGrid(f"rightmost tile {(r, c)} has no east connection")
            if r == 1 and N in sides:
                raise InvalidGrid(f"top tile {(r, c)} points north")
            if c == 1 and W in sides:
                raise InvalidGrid(f"leftmost tile {(r, c)} points west")
            if c < n and (E in sides) != (W in self[(r, c + 1)].sides):
                raise InvalidGrid(f"horizontal mismatch between {(r, c)} and {(r, c + 1)}")
            if r < n and (S in sides) != (N in self[(r + 1, c)].sides):
                raise InvalidGrid(f"vertical mismatch between {(r, c)} and {(r + 1, c)}")
        if not strict:
            if self.count(Tile.BUMP) > 1:
                raise InvalidGrid("more than one bump tile")
            return
        if self.count(Tile.BUMP):
            raise InvalidGrid("bump tile in a finished grid")
        perm = self.permutation()
        routes = self.routes()
        seen: set[tuple[int, int]] = set()
        for cell, t in self.cells():
            if t is Tile.CROSS:
                pair = tuple(sorted(
                    label for label, route in routes.items() if cell in route
                ))
                if pair in seen:
                    raise InvalidGrid(f"pipes {pair} cross twice")
                seen.add(pair)
        length = perm.length()
        if self.count(Tile.CROSS) != length or self.count(Tile.BLANK) != length:
            raise InvalidGrid(
                f"{self.count(Tile.CROSS)} crosses and {self.count(Tile.BLANK)} blanks "
                f"for a permutation of length {length}"
            )

    def is_valid(self, strict: bool = True) -> bool:
        try:
            self.check(strict)
        except InvalidGrid:
            return False
        return True

    # -- text forms -----------------------------------------------------

    def rows(self) -> list[str]:
        return ["".join(t.value for t in row) for row in self.tiles]

    def ascii(self) -> str:
        return "\n".join(self.rows())

    def __str__(self) -> str:
        return self.ascii()

    def to_json(self) -> dict:
        return {"n": self.n, "rows": self.rows(), "perm": str(self.permutation())}

    @classmethod
    def from_rows(cls, rows: Iterable[str]) -> BpdGrid:
        try:
            tiles = tuple(tuple(_TILE_OF_CHAR[ch] for ch in row) for row in rows)
        except KeyError as exc:
            raise InvalidGrid(f"unknown tile character {exc}") from None
        if any(len(row) != len(tiles) for row in tiles):
            raise InvalidGrid("grid is not square")
        return cls(tiles)

    @classmethod
    def from_json(cls, data: dict | str) -> BpdGrid:
        if isinstance(data, str):
            data = json.loads(data)
        grid = cls.from_rows(data["rows"])
        if "n" in data and data["n"] != grid.n:
            raise InvalidGrid(f"declared size {data['n']} but {grid.n} rows")
        return grid


def rothe(p: Permutation, n: int | None = None) -> BpdGrid:
    """The Rothe BPD of ``p``: every pipe turns exactly once."""
    n = max(p.size, 1) if n is None else n
    if n < p.size:
        raise SizeTooSmall(f"{p} needs a grid of size at least {p.size}")
    inv = p.inverse()
    rows = []
    for r in range(1, n + 1):
        row = []
        for c in range(1, n + 1):
            horizontal = c > p(r)
            vertical = r > inv(c)
            if c == p(r):
                row.append(Tile.R)
            elif horizontal and vertical:
                row.append(Tile.CROSS)
            elif horizontal:
                row.append(Tile.H)
            elif vertical:
                row.append(Tile.V)
            else:
                row.append(Tile.BLANK)
        rows.append(tuple(row))
    return BpdGrid(tuple(rows))


def identity_grid(n: int) -> BpdGrid:
    return rothe(Permutation.identity(), n)
