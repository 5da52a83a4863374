"""Payoff generators: concrete families of functions on orderings.

Every generator returns a dense :class:`~snfair.fourier.PayoffFn` whose
entry at rank r is the payoff of the ordering with that rank, and every
family produces nonnegative values.

CFMM sandwich-style model: n labeled trades with signed sizes; executing
trade with size D against price p books extraction beta * D^2 * p and
moves the price to p * (1 + gamma * D).  The payoff of an ordering is the
total extracted along it.

Liquidation model: 2k labeled unit trades, the first k upward (+1) and
the last k downward (-1).  An ordering pays 1 exactly when some prefix
drives the cumulative move to -c or below (the position would have been
liquidated), else 0.

Junta payoffs are weighted sums of position-constraint indicators; random
payoffs come from a seeded generator for reproducible experiments.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np

from .errors import CapacityError, ModelValidityError
from .fourier import PayoffFn
from .permutations import group_matrix
from .sets import OrderingSet

DEFAULT_MAX_N = 8


def _check_capacity(n: int, max_n: int) -> None:
    if n > max_n:
        raise CapacityError(f"n = {n} exceeds the capacity guard ({max_n})")


@dataclass(frozen=True)
class CfmmModel:
    """Trade sizes plus price-impact and extraction coefficients."""

    deltas: tuple[float, ...]
    p0: float = 100.0
    gamma: float = 0.001
    beta: float = 1.0

    def __post_init__(self) -> None:
        if len(self.deltas) < 1:
            raise ModelValidityError("need at least one trade")
        if self.p0 <= 0:
            raise ModelValidityError("initial price must be positive")
        if self.gamma < 0 or self.beta < 0:
            raise ModelValidityError("gamma and beta must be nonnegative")
        # prices stay positive along every ordering iff every single-trade
        # factor is positive (each trade comes first in some ordering)
        for d in self.deltas:
            if 1.0 + self.gamma * d <= 0.0:
                raise ModelValidityError(
                    f"trade size {d} drives the price nonpositive "
                    f"(1 + gamma*delta = {1.0 + self.gamma * d})"
                )

    @property
    def n(self) -> int:
        return len(self.deltas)


def cfmm_payoff(model: CfmmModel, max_n: int = DEFAULT_MAX_N) -> PayoffFn:
    """Total extraction of every ordering of the model's trades."""
    n = model.n
    _check_capacity(n, max_n)
    perms = group_matrix(n)
    sizes = np.asarray(model.deltas)[perms - 1]  # (n!, n) trade size per slot
    factors = 1.0 + model.gamma * sizes
    prices = model.p0 * np.cumprod(factors, axis=1)
    prior = np.concatenate(
        [np.full((prices.shape[0], 1), model.p0), prices[:, :-1]], axis=1
    )
    values = model.beta * (sizes**2 * prior).sum(axis=1)
    return PayoffFn(n, values)


@dataclass(frozen=True)
class LiquidationModel:
    """k unit up-moves and k unit down-moves with a liquidation depth c.

    The depth must be reachable: the lowest prefix any ordering attains is
    -k (all down-moves first), so 0 < c <= k; at the c = k boundary only
    the all-downs-first orderings pay.
    """

    k: int
    c: int
    p0: float = 100.0

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ModelValidityError("k must be positive")
        if not 0 < self.c <= self.k:
            raise ModelValidityError(
                f"liquidation depth must satisfy 0 < c <= k, got c={self.c}, k={self.k}"
            )

    @property
    def n(self) -> int:
        return 2 * self.k

    @property
    def moves(self) -> tuple[int, ...]:
        """Signed move of each labeled trade: trades 1..k are +1, k+1..2k are -1."""
        return (1,) * self.k + (-1,) * self.k


def liquidation_payoff(model: LiquidationModel, max_n: int = DEFAULT_MAX_N) -> PayoffFn:
    """Indicator of orderings whose running move total ever reaches -c."""
    n = model.n
    _check_capacity(n, max_n)
    perms = group_matrix(n)
    steps = np.asarray(model.moves)[perms - 1]
    running = np.cumsum(steps, axis=1)
    values = (running <= -model.c).any(axis=1).astype(float)
    return PayoffFn(n, values)


def liquidatable_set(model: LiquidationModel, max_n: int = DEFAULT_MAX_N) -> OrderingSet:
    """The support of the liquidation payoff as an ordering set."""
    f = liquidation_payoff(model, max_n)
    return OrderingSet.from_ranks(model.n, np.nonzero(f.values)[0])


@dataclass(frozen=True)
class JuntaTerm:
    """One weighted product of position constraints: slot i holds item j."""

    constraints: tuple[tuple[int, int], ...]
    coefficient: float = 1.0

    def __post_init__(self) -> None:
        slots = [i for i, _ in self.constraints]
        items = [j for _, j in self.constraints]
        if len(set(slots)) != len(slots):
            raise ValueError(f"duplicate slot in constraints: {self.constraints!r}")
        if len(set(items)) != len(items):
            raise ValueError(f"duplicate item in constraints: {self.constraints!r}")
        if any(i < 1 for i in slots) or any(j < 1 for j in items):
            raise ValueError("slots and items are 1-based")

    @property
    def width(self) -> int:
        return len(self.constraints)


def junta_payoff(terms, n: int, max_n: int = DEFAULT_MAX_N) -> PayoffFn:
    """Sum of the terms' weighted constraint indicators on S_n."""
    _check_capacity(n, max_n)
    terms = list(terms)
    values = np.zeros(factorial(n))
    perms = group_matrix(n)
    for term in terms:
        for i, j in term.constraints:
            if i > n or j > n:
                raise ValueError(f"constraint ({i}, {j}) outside 1..{n}")
        hit = np.ones(values.shape[0], dtype=bool)
        for i, j in term.constraints:
            hit &= perms[:, i - 1] == j
        values += term.coefficient * hit
    return PayoffFn(n, values)


def indicator_payoff(members: OrderingSet) -> PayoffFn:
    """The 0/1 indicator of an ordering set."""
    return PayoffFn(members.n, members.mask().astype(float))


def random_payoff(
    n: int,
    seed: int,
    dist: str = "uniform01",
    nonzero: int | None = None,
    max_n: int = DEFAULT_MAX_N,
) -> PayoffFn:
    """Seeded random payoff: dense uniform values, or a sparse support.

    dist="uniform01" draws every value from [0, 1); dist="sparse" places
    `nonzero` values in (0, 1] at distinct random ranks.
    """
    _check_capacity(n, max_n)
    size = factorial(n)
    rng = np.random.default_rng(seed)
    if dist == "uniform01":
        return PayoffFn(n, rng.random(size))
    if dist == "sparse":
        if nonzero is None or not 1 <= nonzero <= size:
            raise ValueError(f"sparse payoff needs 1 <= nonzero <= {size}")
        values = np.zeros(size)
        ranks = rng.choice(size, size=nonzero, replace=False)
        values[ranks] = 1.0 - rng.random(nonzero)  # in (0, 1]
        return PayoffFn(n, values)
    raise ValueError(f"unknown distribution {dist!r}")
