"""Irreducible orthogonal representation matrices of S_n.

Young's orthogonal form over the standard-tableau basis in last-letter
order.  For the adjacent transposition (k, k+1) acting on a tableau T:

- k and k+1 in the same row    -> diagonal entry +1
- k and k+1 in the same column -> diagonal entry -1
- otherwise, with d = content(k+1) - content(k) (content = col - row):
  diagonal entry 1/d and off-diagonal sqrt(1 - 1/d^2) to the tableau
  with k and k+1 exchanged.

``evaluate`` extends the generators to arbitrary permutations through an
adjacent-transposition factorization of the one-line word, so it is a
homomorphism for this package's composition convention:

    evaluate(shape, p * q) == evaluate(shape, p) @ evaluate(shape, q)

and every matrix is orthogonal with evaluate(shape, p).T equal to
evaluate(shape, p.inverse()).

Full-group sweeps use ``group_walk``: a single pass over S_n in
plain-changes order, updating all blocks by one generator multiplication
per step.  For n <= TABLE_MAX_N the per-rank matrices are cached densely
(``representation_tables``), which makes repeated transforms cheap.  All
cached arrays are read-only and safe to share across threads.
"""
from __future__ import annotations

from functools import lru_cache
from math import factorial, sqrt

import numpy as np

from .partitions import dimension, partitions_of, standard_tableaux
from .permutations import Permutation, rank_of_word

# Largest n whose full dense tables are cached: memory is (n!)^2 floats.
TABLE_MAX_N = 6


@lru_cache(maxsize=4096)
def adjacent_generator(shape: tuple[int, ...], k: int) -> np.ndarray:
    """Matrix of the adjacent transposition (k, k+1) on the shape's module."""
    n = sum(shape)
    if not 1 <= k <= n - 1:
        raise IndexError(f"adjacent transposition index k={k} outside 1..{n - 1}")
    tabs = standard_tableaux(shape)
    index = {t: a for a, t in enumerate(tabs)}
    d = len(tabs)
    mat = np.zeros((d, d))
    for a, tab in enumerate(tabs):
        r1, c1 = tab.position(k)
        r2, c2 = tab.position(k + 1)
        if r1 == r2:
            mat[a, a] = 1.0
        elif c1 == c2:
            mat[a, a] = -1.0
        else:
            dist = (c2 - r2) - (c1 - r1)
            mat[a, a] = 1.0 / dist
            b = index[tab.swap(k)]
            mat[a, b] = sqrt(1.0 - 1.0 / dist**2)
    mat.setflags(write=False)
    return mat


def evaluate(shape: tuple[int, ...], p: Permutation) -> np.ndarray:
    """Representation matrix of an arbitrary permutation."""
    n = sum(shape)
    if p.n != n:
        raise ValueError(f"permutation acts on {p.n} points, shape sums to {n}")
    d = dimension(shape)
    mat = np.eye(d)
    word = list(p.mapping)
    # Bubble-sorting the word records a factorization of p into adjacent
    # transpositions; each recorded swap multiplies on the left.
    swapped = True
    while swapped:
        swapped = False
        for j in range(n - 1):
            if word[j] > word[j + 1]:
                word[j], word[j + 1] = word[j + 1], word[j]
                mat = adjacent_generator(shape, j + 1) @ mat
                swapped = True
    return mat


def character(shape: tuple[int, ...], p: Permutation) -> float:
    """Trace of the representation matrix."""
    return float(np.trace(evaluate(shape, p)))


def plain_changes(n: int):
    """Yield 0-based positions j; swapping word[j], word[j+1] after each yield
    steps through all n! arrangements (Steinhaus-Johnson-Trotter)."""
    if n < 2:
        return
    word = list(range(n))
    direction = [-1] * n
    while True:
        mobile_val = -1
        mobile_pos = -1
        for i, v in enumerate(word):
            j = i + direction[v]
            if 0 <= j < n and word[j] < v and v > mobile_val:
                mobile_val = v
                mobile_pos = i
        if mobile_pos < 0:
            return
        j = mobile_pos + direction[mobile_val]
        yield min(mobile_pos, j)
        word[mobile_pos], word[j] = word[j], word[mobile_pos]
        for v in range(mobile_val + 1, n):
            direction[v] = -direction[v]


def group_walk(n: int, shapes: tuple[tuple[int, ...], ...] | None = None):
    """Single pass over S_n yielding (rank, {shape: matrix}) for every element.

    One generator multiplication per block per step.  The dict and its
    matrices are reused between yields: consume each step immediately and
    copy anything retained.
    """
    if shapes is None:
        shapes = partitions_of(n)
    gens = {s: [adjacent_generator(s, k) for k in range(1, n)] for s in shapes}
    current = {s: np.eye(dimension(s)) for s in shapes}
    word = list(range(1, n + 1))
    yield 0, current
    for j in plain_changes(n):
        word[j], word[j + 1] = word[j + 1], word[j]
        for s in shapes:
            current[s] = current[s] @ gens[s][j]
        yield rank_of_word(word), current


@lru_cache(maxsize=3)
def representation_tables(n: int) -> dict[tuple[int, ...], np.ndarray]:
    """Dense per-rank matrices for every shape: tables[shape][r] = matrix.

    Only sensible for small n (memory is (n!)^2 floats); callers guard with
    TABLE_MAX_N.  Arrays are read-only.
    """
    tables = {
        s: np.empty((factorial(n), dimension(s), dimension(s)))
        for s in partitions_of(n)
    }
    for rank, mats in group_walk(n):
        for s, m in mats.items():
            tables[s][rank] = m
    for arr in tables.values():
        arr.setflags(write=False)
    return tables
