"""Elements of the symmetric group S_n and dense indexing of the group.

Conventions used throughout the package:

- One-line notation is 1-based: ``Permutation((2, 1, 3))`` maps 1 -> 2,
  2 -> 1, 3 -> 3, i.e. ``mapping[i - 1] == p(i)``.
- Composition is function composition with the right factor applied
  first: ``(p * q)(i) == p(q(i))``.
- The dense index ("rank") of a permutation is its position in the
  lexicographic enumeration of one-line words, computed through the
  Lehmer code / factorial number system.  ``rank(identity) == 0`` and
  ``rank == factorial(n) - 1`` for the order-reversing word.

Exhaustive enumeration is guarded at n <= 10 (10! is the largest group
that fits comfortably in memory for the dense workflows built on top).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

import numpy as np

from .errors import CapacityError

MAX_ENUMERABLE_N = 10


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n} in 1-based one-line notation."""

    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.mapping)
        if n == 0:
            raise ValueError("permutation must act on at least one point")
        if sorted(self.mapping) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {self.mapping!r}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        """The permutation exchanging points i and j, fixing the rest."""
        if not (1 <= i <= n and 1 <= j <= n and i != j):
            raise ValueError(f"need two distinct points in 1..{n}, got {i}, {j}")
        word = list(range(1, n + 1))
        word[i - 1], word[j - 1] = j, i
        return cls(tuple(word))

    @property
    def n(self) -> int:
        return len(self.mapping)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"point {i} outside 1..{self.n}")
        return self.mapping[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """Return self o other, with other applied first."""
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")
        return Permutation(tuple(self.mapping[v - 1] for v in other.mapping))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return self.compose(other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.mapping):
            inv[v - 1] = i + 1
        return Permutation(tuple(inv))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Disjoint cycles, each starting at its smallest point, ordered by it."""
        seen = [False] * self.n
        out = []
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen[nxt - 1] = True
                nxt = self(nxt)
            out.append(tuple(cyc))
        return tuple(out)

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths sorted descending; a partition of n."""
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def fixed_points(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.n + 1) if self(i) == i)

    def rank(self) -> int:
        """Position in the lexicographic enumeration of S_n (0-based)."""
        return rank_of_word(self.mapping)


def rank_of_word(word) -> int:
    """Lehmer rank of a 1-based one-line word (no validation)."""
    n = len(word)
    r = 0
    for i in range(n):
        smaller = 0
        for j in range(i + 1, n):
            if word[j] < word[i]:
                smaller += 1
        r += smaller * factorial(n - 1 - i)
    return r


def lehmer_unrank(n: int, r: int) -> Permutation:
    """Inverse of Permutation.rank for the group S_n."""
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= r < factorial(n):
        raise IndexError(f"rank {r} outside [0, {n}!)")
    available = list(range(1, n + 1))
    word = []
    for i in range(n):
        base = factorial(n - 1 - i)
        digit, r = divmod(r, base)
        word.append(available.pop(digit))
    return Permutation(tuple(word))


def enumerate_group(n: int):
    """Yield every element of S_n in lexicographic (rank) order."""
    check_enumerable(n)
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)


def check_enumerable(n: int) -> None:
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_ENUMERABLE_N:
        raise CapacityError(
            f"exhaustive enumeration capped at n <= {MAX_ENUMERABLE_N}, got n = {n}"
        )


@lru_cache(maxsize=8)
def group_matrix(n: int) -> np.ndarray:
    """All of S_n as an int8 array of shape (n!, n), row r = word of rank r.

    Cached and marked read-only; shared freely across callers.
    """
    check_enumerable(n)
    mat = np.fromiter(
        itertools.chain.from_iterable(itertools.permutations(range(1, n + 1))),
        dtype=np.int8,
        count=factorial(n) * n,
    ).reshape(factorial(n), n)
    mat.setflags(write=False)
    return mat
