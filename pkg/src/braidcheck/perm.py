"""Permutations of {1..n} in one-line notation."""
from __future__ import annotations

import dataclasses
from typing import Sequence

from .errors import DomainError


@dataclasses.dataclass(frozen=True)
class Permutation:
    """
    A bijection of {1..n}, stored as the tuple (p(1), ..., p(n)).

    Multiplication is composition of functions: ``(p * q)(x) == p(q(x))``.

    >>> p = Permutation((2, 1, 3)); q = Permutation((1, 3, 2))
    >>> str(p * q)
    '2 3 1'
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise DomainError(f"not a permutation of 1..{len(images)}: {images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        try:
            return cls(tuple(int(t) for t in text.replace(",", " ").split()))
        except ValueError as exc:
            raise DomainError(f"bad permutation text {text!r}") from exc

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if other.n != self.n:
            raise DomainError(f"degree mismatch: {self.n} vs {other.n}")
        return Permutation(tuple(self.images[x - 1] for x in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, start=1))

    def fixes(self, point: int) -> bool:
        return self(point) == point

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest element."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.images)


def from_cycle(n: int, cycle: Sequence[int]) -> Permutation:
    images = list(range(1, n + 1))
    for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
        images[a - 1] = b
    return Permutation(tuple(images))
