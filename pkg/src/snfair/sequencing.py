"""Fair-ordering sequencing: votes to majority graph to admissible orderings.

Each validator reports the order it received the transactions, written as
a sequence of 1-based transaction labels (first received first).  The
majority graph has an edge i -> j when strictly more than half of the
validators saw i before j; exact ties produce no edge.  Strongly
connected components of that graph are the groups the sequencer may not
separate deterministically: an ordering is admissible when it respects
every edge whose endpoints lie in different components, while members of
one component may appear in any relative order.

Unanimous profiles leave a single admissible ordering; a full rotation
profile produces one big cycle and leaves every ordering admissible.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .errors import CapacityError
from .permutations import group_matrix
from .sets import OrderingSet

DEFAULT_MAX_TX = 8


@dataclass(frozen=True)
class VoteProfile:
    """Receive orders reported by validators, one full sequence each."""

    n_tx: int
    validators: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n_tx < 1:
            raise ValueError("need at least one transaction")
        if not self.validators:
            raise ValueError("need at least one validator")
        expected = list(range(1, self.n_tx + 1))
        for v, order in enumerate(self.validators):
            if sorted(order) != expected:
                raise ValueError(
                    f"validator {v} order {order!r} is not a permutation of 1..{self.n_tx}"
                )

    def to_dict(self) -> dict:
        return {
            "n_tx": self.n_tx,
            "validators": [[int(x) for x in order] for order in self.validators],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "VoteProfile":
        return cls(
            int(data["n_tx"]),
            tuple(tuple(int(x) for x in order) for order in data["validators"]),
        )


@dataclass(frozen=True)
class MajorityGraph:
    """Strict-majority precedence edges and their strongly connected components."""

    n_tx: int
    edges: frozenset[tuple[int, int]]
    sccs: tuple[tuple[int, ...], ...]  # each sorted; ordered by smallest member

    @property
    def has_cycle(self) -> bool:
        return any(len(c) > 1 for c in self.sccs)


def majority_graph(votes: VoteProfile) -> MajorityGraph:
    n = votes.n_tx
    position = np.empty((len(votes.validators), n), dtype=np.int32)
    for v, order in enumerate(votes.validators):
        for pos, tx in enumerate(order):
            position[v, tx - 1] = pos

    edges = set()
    adj = np.zeros((n, n), dtype=np.int8)
    half = len(votes.validators) / 2.0
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            before = int((position[:, i - 1] < position[:, j - 1]).sum())
            if before > half:
                edges.add((i, j))
                adj[i - 1, j - 1] = 1

    _, labels = connected_components(
        csr_matrix(adj), directed=True, connection="strong"
    )
    groups: dict[int, list[int]] = {}
    for tx in range(1, n + 1):
        groups.setdefault(int(labels[tx - 1]), []).append(tx)
    sccs = tuple(sorted((tuple(sorted(g)) for g in groups.values()), key=lambda c: c[0]))
    return MajorityGraph(n_tx=n, edges=frozenset(edges), sccs=sccs)


@dataclass(frozen=True)
class CondorcetStats:
    num_sccs: int
    largest_scc: int
    has_cycle: bool


def condorcet_stats(graph: MajorityGraph) -> CondorcetStats:
    sizes = [len(c) for c in graph.sccs]
    return CondorcetStats(
        num_sccs=len(sizes), largest_scc=max(sizes), has_cycle=graph.has_cycle
    )


def valid_orderings(graph: MajorityGraph, max_tx: int = DEFAULT_MAX_TX) -> OrderingSet:
    """Orderings respecting every edge between different components.

    The ordering word lists transaction labels by execution slot, so tx i
    precedes tx j when i appears earlier in the word.
    """
    n = graph.n_tx
    if n > max_tx:
        raise CapacityError(f"n_tx = {n} exceeds the capacity guard ({max_tx})")
    component = {}
    for c_index, comp in enumerate(graph.sccs):
        for tx in comp:
            component[tx] = c_index
    cross_edges = [
        (i, j) for (i, j) in sorted(graph.edges) if component[i] != component[j]
    ]
    perms = group_matrix(n)
    # slot_of[r, v] = 0-based execution slot of item v + 1 under ordering r
    slot_of = np.argsort(perms, axis=1)
    keep = np.ones(factorial(n), dtype=bool)
    for i, j in cross_edges:
        keep &= slot_of[:, i - 1] < slot_of[:, j - 1]
    return OrderingSet.from_ranks(n, np.nonzero(keep)[0])


def simulate(
    n_tx: int,
    n_validators: int,
    latency_model: str = "iid_shuffle",
    seed: int = 0,
) -> VoteProfile:
    """Generate a vote profile from a latency model.

    iid_shuffle: every validator receives an independent uniformly random
    order (seeded).  adversarial_cycle: validators receive rotations of
    the base order, which yields a full-cycle majority graph; requires
    n_tx >= 3 and a validator count that is a multiple of n_tx.
    """
    if n_tx < 1 or n_validators < 1:
        raise ValueError("need positive transaction and validator counts")
    if latency_model == "iid_shuffle":
        rng = np.random.default_rng(seed)
        orders = tuple(
            tuple(int(x) for x in rng.permutation(n_tx) + 1)
            for _ in range(n_validators)
        )
        return VoteProfile(n_tx, orders)
    if latency_model == "adversarial_cycle":
        if n_tx < 3:
            raise ValueError("a rotation cycle needs n_tx >= 3")
        if n_validators % n_tx != 0:
            raise ValueError(
                "the rotation family guarantees a full cycle only when the "
                f"validator count is a multiple of n_tx (got {n_validators} for {n_tx})"
            )
        base = list(range(1, n_tx + 1))
        orders = tuple(
            tuple(base[(v % n_tx + k) % n_tx] for k in range(n_tx))
            for v in range(n_validators)
        )
        return VoteProfile(n_tx, orders)
    raise ValueError(f"unknown latency model {latency_model!r}")
