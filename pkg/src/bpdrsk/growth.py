"""
Growth diagrams of plactic biwords.

For a biword ``Q`` with letters ``(b_1, k_1) ... (b_l, k_l)`` and largest top
entry ``a``, the diagram has rows ``i = 0..a`` and columns ``j = 0..l``;
``cells[i][j]`` is the permutation of the insertion grid of ``w(i, j)``, the
subword of the first ``j`` letters whose top entry exceeds ``i``.  Column strip
``j`` carries the subscript ``k_j`` and an ``x`` in the square between rows
``b_j - 1`` and ``b_j``.

The diagram can be computed by running insertion (:func:`growth_by_insertion`)
or square by square from the initial conditions (:func:`growth_by_rules`).
The last column read upwards gives a bounded reduced compatible sequence and
from it a reduced pipe dream.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .biword import PlacticBiword
from .bpd import BpdGrid, identity_grid
from .insertion import insert
from .perm import NotDecreasing, Permutation, decompose_decreasing, product

__all__ = [
    "GrowthDiagram",
    "CompatibleSequence",
    "PipeDream",
    "MalformedSquare",
    "InvariantBreach",
    "NotReduced",
    "w_restrict",
    "insertion_grid",
    "growth_by_insertion",
    "local_rule",
    "growth_by_rules",
    "audit_squares",
    "rightmost_chain",
    "compatible_sequence",
    "pipe_dream",
]


class MalformedSquare(ValueError):
    pass


class InvariantBreach(AssertionError):
    pass


class NotReduced(ValueError):
    pass


@dataclass
class GrowthDiagram:
    a: int
    ell: int
    cells: list[list[Permutation]]
    col_sub: list[int] = field(default_factory=list)
    x_rows: list[int] = field(default_factory=list)

    def __getitem__(self, ij: tuple[int, int]) -> Permutation:
        i, j = ij
        return self.cells[i][j]

    @property
    def n(self) -> int:
        """Common size used when printing the cells."""
        return max(p.size for row in self.cells for p in row) or 1

    def text_cells(self) -> list[list[str]]:
        return [[p.format(self.n) for p in row] for row in self.cells]

    def render_ascii(self) -> str:
        """Rows from ``i = a`` at the top down to ``i = 0``, with the x-squares in between."""
        text = self.text_cells()
        width = max(len(t) for row in text for t in row)
        gap = 4
        lines = []
        for i in range(self.a, -1, -1):
            lines.append((" " * gap).join(t.rjust(width) for t in text[i]).rstrip())
            if i == 0:
                break
            marks = []
            for j in range(self.ell):
                tag = f"x{self.col_sub[j]}" if self.x_rows[j] == i else ""
                marks.append(tag.center(width + gap))
            lines.append((" " * (width // 2 + 1) + "".join(marks)).rstrip())
        subs = "".join(f"k={k}".center(width + gap) for k in self.col_sub)
        lines.append((" " * (width // 2 + 1) + subs).rstrip())
        return "\n".join(lines)

    def to_json(self) -> dict:
        cs = compatible_sequence(self)
        return {
            "a": self.a,
            "ell": self.ell,
            "cells": self.text_cells(),
            "subs": list(self.col_sub),
            "xrows": list(self.x_rows),
            "chain": [p.format(self.n) for p in rightmost_chain(self)],
            "compatible": {"a": list(cs.a_seq), "r": list(cs.r_seq)},
            "pipe_dream": [list(c) for c in pipe_dream(cs).sorted_crosses()],
        }


def w_restrict(q: PlacticBiword, i: int, j: int) -> PlacticBiword:
    """The first ``j`` letters of ``q`` whose top entry exceeds ``i``."""
    return PlacticBiword(tuple(l for l in q.letters[:j] if l[0] > i))


@lru_cache(maxsize=200_000)
def _phi(letters: tuple[tuple[int, int], ...]) -> BpdGrid:
    if not letters:
        return identity_grid(1)
    b, k = letters[-1]
    return insert(_phi(letters[:-1]), b, k)[0]


def insertion_grid(q: PlacticBiword) -> BpdGrid:
    """Insert the letters of ``q`` left to right into the identity grid."""
    return _phi(tuple(q.letters)).shrink()


def _shape(q: PlacticBiword) -> tuple[int, int]:
    return max(q.top, default=0), len(q)


def growth_by_insertion(q: PlacticBiword) -> GrowthDiagram:
    a, ell = _shape(q)
    cells = []
    for i in range(a + 1):
        row = []
        for j in range(ell + 1):
            row.append(_phi(tuple(w_restrict(q, i, j).letters)).permutation())
        cells.append(row)
    return GrowthDiagram(a, ell, cells, list(q.bottom), list(q.top))


def _horizon(*perms: Permutation, k: int) -> int:
    return max([p.size for p in perms] + [k]) + 2


def _apply_chain(mu: Permutation, chain: list[int], k: int) -> Permutation:
    """``t_{j_l, j_{l+1}} * mu`` for the first consecutive pair of ``chain`` straddling ``k``."""
    inv = mu.inverse()
    for lo, hi in zip(chain, chain[1:]):
        if inv(lo) <= k < inv(hi):
            return mu.transpose_values(lo, hi)
    raise MalformedSquare(f"no pair of {chain} straddles k={k} in {mu}")


def local_rule(pi: Permutation, mu: Permutation, sigma: Permutation, k: int, has_x: bool) -> Permutation:
    """
    The south-east corner of a square from the other three.

    ``pi`` is the north-west corner, ``mu`` the south-west and ``sigma`` the
    north-east; ``k`` is the subscript of the column strip.
    """
    if has_x:
        if pi != sigma:
            raise MalformedSquare(f"square with x has different top corners {pi} and {sigma}")
    elif pi == sigma:
        return mu
    elif pi == mu:
        return sigma
    try:
        I = set(decompose_decreasing(mu * pi.inverse()))
    except NotDecreasing as exc:
        raise MalformedSquare(str(exc)) from None
    top = _horizon(pi, mu, sigma, k=k)
    complement = [v for v in range(1, top + 1) if v not in I]
    if has_x:
        return _apply_chain(mu, complement, k)

    t = sigma * pi.inverse()
    moved = [v for v in range(1, t.size + 1) if t(v) != v]
    if len(moved) != 2:
        raise MalformedSquare(f"{sigma} is not a transposition away from {pi}")
    inv = pi.inverse()
    alpha, beta = moved
    if not inv(alpha) <= k < inv(beta):
        alpha, beta = beta, alpha
        if not inv(alpha) <= k < inv(beta):
            raise MalformedSquare(f"t_{{{alpha},{beta}}} does not straddle k={k} in {pi}")
    lo, hi = min(alpha, beta), max(alpha, beta)
    between = [v for v in complement if lo <= v < hi]
    chain = [v for v in complement if v >= beta]
    if between:
        chain = sorted(set(chain) | {between[0]})
    return _apply_chain(mu, chain, k)


def growth_by_rules(q: PlacticBiword) -> GrowthDiagram:
    a, ell = _shape(q)
    ident = Permutation.identity()
    cells = [[ident] * (ell + 1) for _ in range(a + 1)]
    for i in range(a, 0, -1):
        for j in range(1, ell + 1):
            b, k = q.letters[j - 1]
            cells[i - 1][j] = local_rule(cells[i][j - 1], cells[i - 1][j - 1], cells[i][j], k, b == i)
    return GrowthDiagram(a, ell, cells, list(q.bottom), list(q.top))


def audit_squares(g: GrowthDiagram) -> list[tuple[int, int]]:
    """Squares ``(i, j)`` (upper row, right column) whose corner disagrees with the local rule."""
    bad = []
    for i in range(g.a, 0, -1):
        for j in range(1, g.ell + 1):
            try:
                rho = local_rule(g.cells[i][j - 1], g.cells[i - 1][j - 1], g.cells[i][j],
                                 g.col_sub[j - 1], g.x_rows[j - 1] == i)
            except MalformedSquare:
                rho = None
            if rho != g.cells[i - 1][j]:
                bad.append((i, j))
    return bad


def rightmost_chain(g: GrowthDiagram) -> list[Permutation]:
    """The last column from ``i = a`` down to ``i = 0``."""
    return [g.cells[i][g.ell] for i in range(g.a, -1, -1)]


@dataclass(frozen=True)
class CompatibleSequence:
    a_seq: tuple[int, ...] = ()
    r_seq: tuple[int, ...] = ()

    def permutation(self) -> Permutation:
        return product(self.a_seq)

    def violations(self) -> list[str]:
        a, r = self.a_seq, self.r_seq
        out = []
        if len(a) != len(r):
            out.append("sequences of different lengths")
            return out
        if self.permutation().length() != len(a):
            out.append(f"word {list(a)} is not reduced")
        for j in range(len(a)):
            if not 1 <= r[j] <= a[j]:
                out.append(f"r_{j + 1}={r[j]} is not in [1, a_{j + 1}={a[j]}]")
            if j + 1 < len(a):
                if r[j] > r[j + 1]:
                    out.append(f"r decreases at position {j + 1}")
                if a[j] < a[j + 1] and r[j] >= r[j + 1]:
                    out.append(f"a ascends at position {j + 1} but r does not")
        return out

    def check(self) -> None:
        problems = self.violations()
        if problems:
            raise InvariantBreach("; ".join(problems))


def compatible_sequence(g: GrowthDiagram) -> CompatibleSequence:
    """
    Read the rightmost chain: the step from row ``i`` to row ``i-1`` contributes the
    decreasing factorisation of ``pi_{i-1,l} pi_{i,l}^{-1}``, all with r-value ``i``.
    """
    a_seq: list[int] = []
    r_seq: list[int] = []
    last = [g.cells[i][g.ell] for i in range(g.a + 1)]
    for i in range(1, g.a + 1):
        try:
            block = decompose_decreasing(last[i - 1] * last[i].inverse())
        except NotDecreasing as exc:
            raise InvariantBreach(str(exc)) from None
        a_seq += block
        r_seq += [i] * len(block)
    cs = CompatibleSequence(tuple(a_seq), tuple(r_seq))
    cs.check()
    if cs.permutation() != last[0]:
        raise InvariantBreach(f"word {a_seq} multiplies to {cs.permutation()}, not {last[0]}")
    return cs


@dataclass(frozen=True)
class PipeDream:
    crosses: frozenset = frozenset()

    def sorted_crosses(self) -> list[tuple[int, int]]:
        return sorted(self.crosses)

    def size(self) -> int:
        return max((r + c for r, c in self.crosses), default=1)

    def exit_column(self, row: int) -> int:
        """Follow the pipe entering ``row`` from the west until it leaves through the top."""
        r, c, came_from = row, 1, "W"
        while r >= 1:
            if (r, c) in self.crosses:
                straight = True
            else:
                straight = False
            if (came_from == "W") == straight:
                c += 1
                came_from = "W"
            else:
                r -= 1
                came_from = "S"
        return c

    def permutation(self) -> Permutation:
        """Row ``i`` is sent to the column where its pipe exits."""
        n = self.size()
        return Permutation(tuple(self.exit_column(i) for i in range(1, n + 1)))

    def is_reduced(self) -> bool:
        return self.permutation().length() == len(self.crosses)

    def ascii(self) -> str:
        n = self.size()
        lines = []
        for r in range(1, n):
            lines.append(" ".join("+" if (r, c) in self.crosses else "." for c in range(1, n - r + 1)))
        return "\n".join(lines)


def pipe_dream(cs: CompatibleSequence) -> PipeDream:
    """Place a cross at ``(r_j, a_j - r_j + 1)`` for every position ``j``."""
    cs.check()
    pd = PipeDream(frozenset((r, a - r + 1) for a, r in zip(cs.a_seq, cs.r_seq)))
    if len(pd.crosses) != len(cs.a_seq) or not pd.is_reduced():
        raise NotReduced(f"pipe dream of {cs} is not reduced")
    return pd
