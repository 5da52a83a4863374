"""Averaging operators of Cayley graphs on S_n and their block spectra.

A symmetric connection set F (closed under inversion) defines the graph
with an edge from p to t*p for every t in F.  The averaging operator

    (T_F f)(p) = (1/|F|) * mean-free average of f over neighbors
               = (1/|F|) * sum_{t in F} f(t * p)

acts within each isotype; on the spectral side it multiplies every block
by

    B_shape = (1/|F|) * sum_{t in F} rho_shape(t),

so the spectrum of the full n! x n! operator is the union over shapes of
the eigenvalues of B_shape, each with multiplicity dim(shape).  The
reference bound checked here is

    eig_max(B.T @ B) <= n! / (|F| * dim(shape))

for the normalized operator; the raw-sum variant (no 1/|F|) is exposed as
well since either scaling appears in practice, and reports record which
one satisfied the bound.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np

from .errors import EmptySetError
from .partitions import dimension, partitions_of
from .permutations import group_matrix, lehmer_unrank, rank_of_word
from .representations import TABLE_MAX_N, evaluate, representation_tables
from .sets import OrderingSet

BOUND_TOL = 1e-9


@dataclass(frozen=True)
class SymmetricSet:
    """A connection set closed under inversion, stored as sorted ranks."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        base = OrderingSet(self.n, self.members)  # reuse rank validation
        ranks = set(base.members)
        if not ranks:
            raise EmptySetError("connection set must be nonempty")
        for r in ranks:
            inv = lehmer_unrank(self.n, r).inverse().rank()
            if inv not in ranks:
                raise ValueError(
                    f"set is not closed under inversion: rank {r} lacks {inv}"
                )

    def __len__(self) -> int:
        return len(self.members)

    def as_ordering_set(self) -> OrderingSet:
        return OrderingSet(self.n, self.members)


def symmetrize(members: OrderingSet) -> SymmetricSet:
    """Close an ordering set under inversion."""
    ranks = set(members.members)
    for r in members.members:
        ranks.add(lehmer_unrank(members.n, r).inverse().rank())
    return SymmetricSet(members.n, tuple(sorted(ranks)))


def block_operator(
    conn: SymmetricSet, shape: tuple[int, ...], normalized: bool = True
) -> np.ndarray:
    """Sum (optionally averaged) of the representation matrices over the set."""
    n = conn.n
    d = dimension(shape)
    total = np.zeros((d, d))
    if n <= TABLE_MAX_N:
        table = representation_tables(n)[shape]
        for r in conn.members:
            total += table[r]
    else:
        for r in conn.members:
            total += evaluate(shape, lehmer_unrank(n, r))
    if normalized:
        total /= len(conn)
    return total


@dataclass(frozen=True)
class BlockSpectrum:
    """Eigenvalues of B.T @ B for one shape, with the reference bound."""

    eigenvalues: np.ndarray  # descending
    bound: float
    within_bound: bool


def spectrum_report(
    conn: SymmetricSet, normalized: bool = True, tol: float = BOUND_TOL
) -> dict[tuple[int, ...], BlockSpectrum]:
    """Per-shape gram eigenvalues and bound flags for the chosen scaling."""
    n = conn.n
    out = {}
    for shape in partitions_of(n):
        b = block_operator(conn, shape, normalized=normalized)
        eig = np.linalg.eigvalsh(b.T @ b)[::-1]
        bound = factorial(n) / (len(conn) * dimension(shape))
        out[shape] = BlockSpectrum(
            eigenvalues=eig,
            bound=bound,
            within_bound=bool(eig[0] <= bound + tol),
        )
    return out


def bound_violations(
    conn: SymmetricSet, normalized: bool = True, tol: float = BOUND_TOL
) -> tuple[tuple[int, ...], ...]:
    """Shapes whose gram eigenvalues exceed the reference bound."""
    report = spectrum_report(conn, normalized=normalized, tol=tol)
    return tuple(s for s, spec in report.items() if not spec.within_bound)


def dense_operator(conn: SymmetricSet, normalized: bool = True) -> np.ndarray:
    """The full n! x n! averaging matrix, built from group multiplication only.

    Independent of the representation machinery; used to cross-check the
    block route.  Row p holds weight at column rank(t * p) for each t.
    """
    n = conn.n
    size = factorial(n)
    perms = group_matrix(n)
    mat = np.zeros((size, size))
    weight = 1.0 / len(conn) if normalized else 1.0
    for r in conn.members:
        t = perms[r]
        for p in range(size):
            composed = t[perms[p] - 1]  # (t * p) in one-line form
            mat[p, rank_of_word(composed)] += weight
    return mat
