"""
Plactic biwords and the generalized Knuth relations.

A biword is a sequence of biletters ``(a, k)`` with ``1 <= a <= k``; it is
*plactic* when the ``k`` row is weakly decreasing.  The text form writes the
top row, a slash, then the bottom row: ``"1,3,1,2,1/3,3,2,2,1"``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterator

__all__ = [
    "PlacticBiword",
    "NotPlactic",
    "ClassTooLarge",
    "knuth_neighbors",
    "knuth_class",
    "knuth_connected",
    "restrict_gt",
    "restrict_lt",
    "enumerate_plactic",
    "count_plactic",
]


class NotPlactic(ValueError):
    pass


class ClassTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class PlacticBiword:
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        letters = tuple((int(a), int(k)) for a, k in self.letters)
        object.__setattr__(self, "letters", letters)
        if not is_plactic(letters):
            raise NotPlactic(f"not a plactic biword: {_format(letters)}")

    @classmethod
    def from_rows(cls, top, bottom) -> PlacticBiword:
        top, bottom = list(top), list(bottom)
        if len(top) != len(bottom):
            raise NotPlactic("rows of different lengths")
        return cls(tuple(zip(top, bottom)))

    @classmethod
    def parse(cls, text: str) -> PlacticBiword:
        try:
            top, bottom = text.strip().split("/")
        except ValueError:
            raise NotPlactic(f"expected 'a1,...,al/k1,...,kl', got {text!r}") from None
        to_ints = lambda s: [int(t) for t in s.split(",")] if s.strip() else []
        try:
            return cls.from_rows(to_ints(top), to_ints(bottom))
        except ValueError as exc:
            raise NotPlactic(str(exc)) from None

    @property
    def top(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.letters)

    @property
    def bottom(self) -> tuple[int, ...]:
        return tuple(k for _, k in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return _format(self.letters)

    def __repr__(self) -> str:
        return f"PlacticBiword.parse({str(self)!r})"


def _format(letters) -> str:
    return ",".join(str(a) for a, _ in letters) + "/" + ",".join(str(k) for _, k in letters)


def is_plactic(letters) -> bool:
    if any(not 1 <= a <= k for a, k in letters):
        return False
    return all(letters[i][1] >= letters[i + 1][1] for i in range(len(letters) - 1))


def _moves(letters: tuple[tuple[int, int], ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    """Every word one relation away, in either direction, before the placticity filter."""
    L = list(letters)
    for i in range(len(L) - 2):
        (x, k1), (y, k2), (z, k3) = L[i:i + 3]
        if not k1 == k2 == k3:
            continue
        # (1)  b a c ~ b c a  with a < b <= c
        if y < x <= z:
            yield tuple(L[:i] + [(x, k1), (z, k1), (y, k1)] + L[i + 3:])
        if z < x <= y:
            yield tuple(L[:i] + [(x, k1), (z, k1), (y, k1)] + L[i + 3:])
        # (2)  a c b ~ c a b  with a <= b < c
        if x <= z < y:
            yield tuple(L[:i] + [(y, k1), (x, k1), (z, k1)] + L[i + 3:])
        if y <= z < x:
            yield tuple(L[:i] + [(y, k1), (x, k1), (z, k1)] + L[i + 3:])
    for i in range(len(L) - 1):
        (x, k1), (y, k2) = L[i:i + 2]
        # (3)  (a b / k k) ~ (a b / k+1 k)  with a <= b
        if x <= y and k1 == k2:
            yield tuple(L[:i] + [(x, k1 + 1), (y, k2)] + L[i + 2:])
        if x <= y and k1 == k2 + 1:
            yield tuple(L[:i] + [(x, k2), (y, k2)] + L[i + 2:])
        # (4)  (b a / k+1 k+1) ~ (b a / k+1 k)  with a < b
        if y < x and k1 == k2:
            yield tuple(L[:i] + [(x, k1), (y, k2 - 1)] + L[i + 2:])
        if y < x and k1 == k2 + 1:
            yield tuple(L[:i] + [(x, k1), (y, k1)] + L[i + 2:])


def knuth_neighbors(q: PlacticBiword) -> set[PlacticBiword]:
    """All plactic biwords one generalized Knuth relation away from ``q``."""
    return {PlacticBiword(w) for w in _moves(q.letters) if w != q.letters and is_plactic(w)}


def knuth_class(q: PlacticBiword, limit: int = 100_000) -> set[PlacticBiword]:
    """
    Breadth-first search of the Knuth class of ``q``.

    Classes are finite, so no bound on the entries is imposed; ``limit`` caps
    the number of words visited and :class:`ClassTooLarge` is raised past it.
    """
    seen = {q}
    queue = deque([q])
    while queue:
        for nb in knuth_neighbors(queue.popleft()):
            if nb not in seen:
                seen.add(nb)
                if len(seen) > limit:
                    raise ClassTooLarge(f"class of {q} has more than {limit} words")
                queue.append(nb)
    return seen


def knuth_connected(q1: PlacticBiword, q2: PlacticBiword, limit: int = 100_000) -> bool:
    if len(q1) != len(q2) or sorted(q1.top) != sorted(q2.top):
        return False
    return q2 in knuth_class(q1, limit)


def restrict_gt(q: PlacticBiword, i: int) -> PlacticBiword:
    """Drop every biletter whose top entry is at most ``i``."""
    return PlacticBiword(tuple(l for l in q.letters if l[0] > i))


def restrict_lt(q: PlacticBiword, i: int) -> PlacticBiword:
    """Drop every biletter whose top entry is at least ``i``."""
    return PlacticBiword(tuple(l for l in q.letters if l[0] < i))


def enumerate_plactic(max_k: int, max_len: int, min_len: int = 1) -> Iterator[PlacticBiword]:
    """All plactic biwords with entries at most ``max_k`` and length in ``[min_len, max_len]``."""
    for length in range(min_len, max_len + 1):
        for ks in itertools.combinations_with_replacement(range(max_k, 0, -1), length):
            for tops in itertools.product(*(range(1, k + 1) for k in ks)):
                yield PlacticBiword(tuple(zip(tops, ks)))


def count_plactic(max_k: int, max_len: int, min_len: int = 1) -> int:
    """Count of :func:`enumerate_plactic` without listing the words."""
    # ending[k]: words of the current length whose last bottom entry is k
    ending = {k: k for k in range(1, max_k + 1)}
    total = 0
    for length in range(1, max_len + 1):
        if length > 1:
            ending = {k: k * sum(ending[j] for j in range(k, max_k + 1)) for k in ending}
        if length >= min_len:
            total += sum(ending.values())
    return total
