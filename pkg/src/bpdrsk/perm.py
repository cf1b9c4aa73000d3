"""
Finite permutations of the positive integers in one-line notation.

Every permutation fixes all but finitely many points; the stored tuple is the
one-line notation with trailing fixed points stripped, so permutations that
live in different ambient sizes compare equal.

Composition follows function composition: ``(p * q)(i) == p(q(i))``.  Left
multiplication by a transposition therefore swaps *values* and right
multiplication swaps *positions*.

>>> p = Permutation.parse("25314")
>>> p.length()
5
>>> str(p.transpose_values(1, 2))
'15324'
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "Permutation",
    "NotDecreasing",
    "simple",
    "transposition",
    "product",
    "decompose_decreasing",
]


class NotDecreasing(ValueError):
    """Raised when a permutation is not a strictly decreasing product of simple reflections."""


def _strip(images: Sequence[int]) -> tuple[int, ...]:
    n = len(images)
    while n and images[n - 1] == n:
        n -= 1
    return tuple(images[:n])


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...] = ()

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", _strip(images))

    @classmethod
    def identity(cls) -> Permutation:
        return cls(())

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Read ``"25314"`` or ``"2,5,3,1,4"``; an empty string is the identity."""
        text = text.strip()
        if not text:
            return cls(())
        if "," in text:
            return cls(tuple(int(t) for t in text.split(",")))
        return cls(tuple(int(ch) for ch in text))

    # -- basic access -----------------------------------------------------

    @property
    def size(self) -> int:
        """Largest moved point (0 for the identity)."""
        return len(self.images)

    def __call__(self, i: int) -> int:
        if 1 <= i <= len(self.images):
            return self.images[i - 1]
        if i < 1:
            raise ValueError(f"positions are positive, got {i}")
        return i

    def one_line(self, n: int | None = None) -> tuple[int, ...]:
        """One-line notation padded with fixed points up to ``n``."""
        n = self.size if n is None else n
        if n < self.size:
            raise ValueError(f"{self} does not fit in S_{n}")
        return tuple(self(i) for i in range(1, n + 1))

    def __str__(self) -> str:
        return self.format()

    def format(self, n: int | None = None) -> str:
        """One-line text padded to ``n``: digits up to 9 letters, comma-separated beyond."""
        line = self.one_line(max(self.size, 1) if n is None else max(n, self.size, 1))
        if max(line) <= 9:
            return "".join(str(v) for v in line)
        return ",".join(str(v) for v in line)

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"

    def __lt__(self, other: Permutation) -> bool:
        # only used to get deterministic orderings in reports
        return self.images < other.images

    # -- group structure --------------------------------------------------

    def __mul__(self, other: Permutation) -> Permutation:
        n = max(self.size, other.size)
        return Permutation(tuple(self(other(i)) for i in range(1, n + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def transpose_values(self, alpha: int, beta: int) -> Permutation:
        """Left multiplication ``t_{alpha,beta} * self``."""
        if alpha == beta:
            raise ValueError("a transposition needs two distinct points")
        n = max(self.size, alpha, beta)
        swap = {alpha: beta, beta: alpha}
        return Permutation(tuple(swap.get(self(i), self(i)) for i in range(1, n + 1)))

    def transpose_positions(self, i: int, j: int) -> Permutation:
        """Right multiplication ``self * t_{i,j}``."""
        line = list(self.one_line(max(self.size, i, j)))
        line[i - 1], line[j - 1] = line[j - 1], line[i - 1]
        return Permutation(tuple(line))

    # -- statistics -------------------------------------------------------

    def length(self) -> int:
        """Number of inversions."""
        line = self.images
        return sum(
            1
            for i in range(len(line))
            for j in range(i + 1, len(line))
            if line[i] > line[j]
        )

    def first_descent(self) -> float:
        """Least ``i`` with ``p(i) > p(i+1)``; ``math.inf`` for the identity."""
        line = self.images
        for i in range(len(line) - 1):
            if line[i] > line[i + 1]:
                return i + 1
        return math.inf

    def is_left_descent(self, a: int) -> bool:
        """True when ``s_a * self`` is shorter, i.e. ``a+1`` precedes ``a`` in one-line."""
        inv = self.inverse()
        return inv(a + 1) < inv(a)

    def is_identity(self) -> bool:
        return not self.images


def simple(i: int) -> Permutation:
    """The simple reflection ``s_i``."""
    return transposition(i, i + 1)


def transposition(alpha: int, beta: int) -> Permutation:
    return Permutation.identity().transpose_values(alpha, beta)


def product(word: Iterable[int]) -> Permutation:
    """``s_{w1} * s_{w2} * ...`` for a word of simple-reflection indices."""
    result = Permutation.identity()
    for i in word:
        result = result * simple(i)
    return result


def decompose_decreasing(omega: Permutation) -> list[int]:
    """
    Write ``omega = s_{i_j} ... s_{i_1}`` with ``i_j > ... > i_1``.

    Returns ``[i_j, ..., i_1]``.  The smallest moved point is peeled off on the
    right at every step; the peeled indices must increase strictly and each
    peel must shorten the permutation, otherwise no such factorisation exists.

    >>> decompose_decreasing(Permutation.parse("21534"))
    [4, 3, 1]
    """
    peeled: list[int] = []
    current = omega
    length = current.length()
    while not current.is_identity():
        m = next(i for i, v in enumerate(current.images, start=1) if v != i)
        if peeled and m <= peeled[-1]:
            raise NotDecreasing(f"{omega} repeats index {m}")
        current = current.transpose_positions(m, m + 1)
        new_length = current.length()
        if new_length != length - 1:
            raise NotDecreasing(f"{omega}: peeling s_{m} does not shorten")
        length = new_length
        peeled.append(m)
    return peeled[::-1]
