"""Fairness functionals for payoffs restricted to ordering sets.

The additive gap of a payoff f over a set A is the best member's payoff
minus the whole-group average of the restriction:

    gap_plus(f, A) = max_{p in A} f(p) - (1/n!) * sum_{p in A} f(p)

(the mean is over all n! orderings, treating f as zero off A, not over
|A|; the per-member conditional mean is a separate statistic).  The
multiplicative gap divides instead of subtracting, and the two satisfy

    gap_plus = max * (1 - 1 / gap_star).

A restriction is perfectly fair when the gap vanishes and maximally
unfair when it hits the point-mass extreme (1 - 1/n!) * max.

Upper bounds on the additive gap come from the support-spread inequality
of :func:`snfair.fourier.uncertainty_check`: for a nonnegative restriction
g = f * 1_A,

    gap_plus <= (1 - sinf/s1) * ||g||_inf.

The regime reports compare the payoff's spectral degree s with the set's
agreement level t_max: high agreement (t_max >= s) activates the upper
bound regime, low agreement (t_max < s) the lower bound regime whose
template rhs(c) = (1 - c * (s - t_max - 1)/(n - t_max)!) * ||g||_inf is
solved for the constant that would make it tight.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np

from .cayley import spectrum_report, symmetrize
from .errors import DegenerateError, EmptySetError
from .fourier import (
    DEFAULT_MAX_N,
    PayoffFn,
    degree,
    isotypic_project,
    schatten_summary,
    transform,
)
from .intersecting import intersection_profile, stabilizer_set
from .partitions import dimension, partitions_of
from .payoffs import indicator_payoff
from .sets import OrderingSet

CLASSIFY_TOL = 1e-12


def _restricted(f: PayoffFn, members: OrderingSet) -> np.ndarray:
    if f.n != members.n:
        raise ValueError(f"payoff on S_{f.n} but set in S_{members.n}")
    if len(members) == 0:
        raise EmptySetError("fairness gaps over the empty set are undefined")
    return f.values[list(members.members)]


def additive_gap(f: PayoffFn, members: OrderingSet) -> float:
    """Best member payoff minus the whole-group mean of the restriction."""
    vals = _restricted(f, members)
    return float(vals.max() - vals.sum() / factorial(f.n))


def multiplicative_gap(f: PayoffFn, members: OrderingSet) -> float:
    """Best member payoff over the whole-group mean of the restriction."""
    vals = _restricted(f, members)
    mean = vals.sum() / factorial(f.n)
    if mean <= 0.0:
        raise DegenerateError("multiplicative gap needs a positive restricted mean")
    return float(vals.max() / mean)


def conditional_additive_gap(f: PayoffFn, members: OrderingSet) -> float:
    """Best member payoff minus the per-member (conditional) mean."""
    vals = _restricted(f, members)
    return float(vals.max() - vals.mean())


def classify_fairness(
    f: PayoffFn, members: OrderingSet, tol: float = CLASSIFY_TOL
) -> str:
    """'perfectly_fair', 'maximally_unfair', or 'other'."""
    vals = _restricted(f, members)
    gap = float(vals.max() - vals.sum() / factorial(f.n))
    if abs(gap) <= tol:
        return "perfectly_fair"
    extreme = (1.0 - 1.0 / factorial(f.n)) * float(vals.max())
    if abs(gap - extreme) <= tol:
        return "maximally_unfair"
    return "other"


def trivial_bound(f: PayoffFn, members: OrderingSet) -> float:
    """(1 - 1/n!) * max over the set; the gap can never exceed this."""
    vals = _restricted(f, members)
    return (1.0 - 1.0 / factorial(f.n)) * float(vals.max())


@dataclass(frozen=True)
class UncertaintyBound:
    """Support-spread upper bound on the additive gap of a restriction."""

    bound: float
    additive_gap: float
    slack: float  # bound - gap; nonnegative when the inequality holds


def uncertainty_bound(
    f: PayoffFn, members: OrderingSet, max_n: int = DEFAULT_MAX_N
) -> UncertaintyBound:
    """Evaluate gap_plus <= (1 - sinf/s1) * ||f * 1_A||_inf."""
    vals = _restricted(f, members)
    restricted = np.zeros_like(f.values)
    restricted[list(members.members)] = vals
    linf = float(np.abs(restricted).max())
    if linf == 0.0:
        raise DegenerateError("restriction is identically zero")
    summary = schatten_summary(transform(PayoffFn(f.n, restricted), max_n))
    bound = (1.0 - summary.sinf / summary.s1) * linf
    gap = additive_gap(f, members)
    return UncertaintyBound(bound=bound, additive_gap=gap, slack=bound - gap)


@dataclass(frozen=True)
class FairnessReport:
    """All headline fairness statistics for one (payoff, set) pair."""

    n: int
    set_size: int
    max_value: float
    mean_value: float  # whole-group mean of the restriction
    additive_gap: float
    multiplicative_gap: float | None
    conditional_gap: float
    classification: str
    trivial_bound: float
    uncertainty_bound: float | None


def fairness_report(
    f: PayoffFn,
    members: OrderingSet,
    max_n: int = DEFAULT_MAX_N,
    with_uncertainty: bool = True,
) -> FairnessReport:
    vals = _restricted(f, members)
    mean = float(vals.sum() / factorial(f.n))
    mult = None
    if mean > 0.0:
        mult = float(vals.max() / mean)
    ub = None
    if with_uncertainty and float(np.abs(vals).max()) > 0.0:
        ub = uncertainty_bound(f, members, max_n).bound
    return FairnessReport(
        n=f.n,
        set_size=len(members),
        max_value=float(vals.max()),
        mean_value=mean,
        additive_gap=float(vals.max() - mean),
        multiplicative_gap=mult,
        conditional_gap=conditional_additive_gap(f, members),
        classification=classify_fairness(f, members),
        trivial_bound=trivial_bound(f, members),
        uncertainty_bound=ub,
    )


@dataclass(frozen=True)
class UpperBoundReport:
    """High-agreement regime: set agreement at or above the payoff degree."""

    degree: int
    t_max: int
    applicable: bool  # t_max >= degree
    schatten_ratio: float  # sinf / s1 of the unrestricted payoff's spectrum
    dim_sq_sum: int  # sum of dim^2 over shapes with largest part >= n - degree
    bound_value: float  # (1 - 1/dim_sq_sum) * ||f * 1_A||_inf


def upper_bound_report(
    f: PayoffFn, members: OrderingSet, max_n: int = DEFAULT_MAX_N
) -> UpperBoundReport:
    vals = _restricted(f, members)
    spec = transform(f, max_n)
    s = degree(f, spectrum=spec)
    profile = intersection_profile(members)
    summary = schatten_summary(spec)
    if summary.s1 == 0.0:
        raise DegenerateError("zero payoff has no spectral ratio")
    dim_sq = sum(
        dimension(shape) ** 2 for shape in partitions_of(f.n) if shape[0] >= f.n - s
    )
    linf = float(np.abs(vals).max())
    return UpperBoundReport(
        degree=s,
        t_max=profile.t_max,
        applicable=profile.t_max >= s,
        schatten_ratio=summary.sinf / summary.s1,
        dim_sq_sum=dim_sq,
        bound_value=(1.0 - 1.0 / dim_sq) * linf,
    )


@dataclass(frozen=True)
class LowerBoundReport:
    """Low-agreement regime: set agreement strictly below the payoff degree."""

    degree: int
    t_max: int
    applicable: bool  # t_max < degree and the size gate holds
    additive_gap: float
    max_on_set: float
    gap_ratio: float  # additive_gap / max_on_set
    rhs_coefficient: float  # (degree - t_max - 1) / (n - t_max)!
    implied_constant: float | None  # c making rhs(c) equal the measured gap

    def rhs_value(self, c: float) -> float:
        """Template (1 - c * rhs_coefficient) * max_on_set."""
        return (1.0 - c * self.rhs_coefficient) * self.max_on_set


def lower_bound_report(
    f: PayoffFn, members: OrderingSet, max_n: int = DEFAULT_MAX_N
) -> LowerBoundReport:
    vals = _restricted(f, members)
    linf = float(np.abs(vals).max())
    if linf == 0.0:
        raise DegenerateError("restriction is identically zero")
    s = degree(f, max_n=max_n)
    profile = intersection_profile(members)
    t = profile.t_max
    gap = additive_gap(f, members)
    coeff = (s - t - 1) / factorial(f.n - t) if s - t - 1 != 0 else 0.0
    implied = None
    if s - t - 1 > 0:
        implied = (1.0 - gap / linf) * factorial(f.n - t) / (s - t - 1)
    return LowerBoundReport(
        degree=s,
        t_max=t,
        applicable=t < s and profile.size_gate,
        additive_gap=gap,
        max_on_set=linf,
        gap_ratio=gap / linf,
        rhs_coefficient=coeff,
        implied_constant=implied,
    )


@dataclass(frozen=True)
class TruncationDiagnostic:
    """Both sides of the mid-band truncation chain, reported without verdict.

    mid_band_l1 is the entrywise 1-norm of the indicator's spectral mass
    at degrees in (t, s]; eigenvalue_sum adds, over the same shapes, the
    top gram eigenvalue of the symmetrized set's averaging operator.
    """

    mid_band_l1: float
    eigenvalue_sum: float
    shapes: tuple[tuple[int, ...], ...]


def truncation_diagnostic(
    f: PayoffFn,
    members: OrderingSet,
    t: int,
    s: int,
    max_n: int = DEFAULT_MAX_N,
) -> TruncationDiagnostic:
    if f.n != members.n:
        raise ValueError(f"payoff on S_{f.n} but set in S_{members.n}")
    n = f.n
    if not 0 <= t < s <= n - 1:
        raise ValueError(f"need 0 <= t < s <= n - 1, got t={t}, s={s}")
    band = tuple(
        shape for shape in partitions_of(n) if t < n - shape[0] <= s
    )
    ind = indicator_payoff(members)
    mid = np.zeros_like(ind.values)
    for shape in band:
        mid += isotypic_project(ind, shape, max_n).values
    conn = symmetrize(members)
    report = spectrum_report(conn)
    eig_sum = float(sum(report[shape].eigenvalues[0] for shape in band))
    return TruncationDiagnostic(
        mid_band_l1=float(np.abs(mid).sum()),
        eigenvalue_sum=eig_sum,
        shapes=band,
    )


def nested_stabilizer_instance(
    n: int, outer_pins: int, inner_pins: int
) -> tuple[PayoffFn, OrderingSet]:
    """Low-agreement showcase: a wide pinned set paired with a narrower payoff.

    The set pins the first `outer_pins` slots to their own items; the
    payoff is the indicator of the finer set pinning `inner_pins` slots
    the same way.  With outer_pins < inner_pins the payoff degree exceeds
    the set's agreement level while the restriction stays nonzero, which
    is exactly the lower-bound regime.
    """
    if not 0 < outer_pins < inner_pins < n:
        raise ValueError("need 0 < outer_pins < inner_pins < n")
    outer = stabilizer_set(n, [(i, i) for i in range(1, outer_pins + 1)])
    inner = stabilizer_set(n, [(i, i) for i in range(1, inner_pins + 1)])
    return indicator_payoff(inner), outer
