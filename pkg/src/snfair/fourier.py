"""Matrix-valued Fourier analysis of payoff functions on S_n.

A payoff function assigns a real value to every ordering; it is stored
densely in rank order.  Its transform collects one matrix per partition:

    block[shape] = sum_p f(p) * rho_shape(p)

with rho from :mod:`snfair.representations`.  Inversion transposes the
representation matrix:

    f(p) = (1/n!) * sum_shape dim(shape) * trace(block[shape] @ rho_shape(p).T)

and the Parseval identity in this normalization reads

    sum_p f(p)^2 = (1/n!) * sum_shape dim(shape) * ||block[shape]||_F^2.

The degree of a payoff is the largest n - (largest part) over shapes whose
block is numerically nonzero; constants have degree 0, single-position
indicator payoffs have degree 1, and a point mass has degree n - 1.

Schatten aggregates of a spectrum weight each block's singular values by
the block dimension: s1 = sum_shape dim * sum_i sigma_i(block) and
sinf = max over all blocks of sigma_max.  The support-spread inequality

    (||f||_1 / ||f||_inf) * (s1 / sinf) >= n!

holds for every nonzero payoff, with equality for point masses and for
constants.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

import numpy as np

from .errors import CapacityError, DegenerateError
from .partitions import dimension, partitions_of
from .representations import TABLE_MAX_N, group_walk, representation_tables

DEFAULT_MAX_N = 8
DEGREE_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class PayoffFn:
    """A real-valued function on S_n, dense in rank order."""

    n: int
    values: np.ndarray

    def __post_init__(self) -> None:
        vals = np.asarray(self.values, dtype=float)
        if vals.shape != (factorial(self.n),):
            raise ValueError(
                f"need {factorial(self.n)} values for n={self.n}, got shape {vals.shape}"
            )
        if not np.all(np.isfinite(vals)):
            raise ValueError("payoff values must be finite")
        vals = vals.copy()
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    def to_dict(self) -> dict:
        return {"n": self.n, "values": [float(v) for v in self.values]}

    @classmethod
    def from_dict(cls, data: dict) -> "PayoffFn":
        return cls(int(data["n"]), np.asarray(data["values"], dtype=float))


@dataclass(frozen=True, eq=False)
class FourierSpectrum:
    """One matrix per partition of n, in canonical partition order."""

    n: int
    blocks: dict[tuple[int, ...], np.ndarray]

    def __post_init__(self) -> None:
        expected = partitions_of(self.n)
        if tuple(self.blocks.keys()) != expected:
            ordered = {}
            for s in expected:
                if s not in self.blocks:
                    raise ValueError(f"missing block for shape {s}")
                ordered[s] = self.blocks[s]
            object.__setattr__(self, "blocks", ordered)
        for s, mat in self.blocks.items():
            d = dimension(s)
            if np.asarray(mat).shape != (d, d):
                raise ValueError(f"block {s} must be {d}x{d}")

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "blocks": [
                {"lambda": list(s), "matrix": [[float(x) for x in row] for row in m]}
                for s, m in self.blocks.items()
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "FourierSpectrum":
        blocks = {
            tuple(int(p) for p in b["lambda"]): np.asarray(b["matrix"], dtype=float)
            for b in data["blocks"]
        }
        return cls(int(data["n"]), blocks)


def _check_capacity(n: int, max_n: int) -> None:
    if n > max_n:
        raise CapacityError(
            f"n = {n} exceeds the capacity guard ({max_n}); raise max_n explicitly "
            "if you really want a group this large"
        )


def transform(f: PayoffFn, max_n: int = DEFAULT_MAX_N) -> FourierSpectrum:
    """Forward transform: one dim x dim block per partition."""
    n = f.n
    _check_capacity(n, max_n)
    if n <= TABLE_MAX_N:
        tables = representation_tables(n)
        blocks = {
            s: np.tensordot(f.values, tab, axes=(0, 0)) for s, tab in tables.items()
        }
    else:
        shapes = partitions_of(n)
        blocks = {s: np.zeros((dimension(s), dimension(s))) for s in shapes}
        vals = f.values
        for rank, mats in group_walk(n):
            v = vals[rank]
            if v != 0.0:
                for s in shapes:
                    blocks[s] += v * mats[s]
    return FourierSpectrum(n, blocks)


def _synthesize(
    n: int, blocks: dict[tuple[int, ...], np.ndarray], max_n: int
) -> np.ndarray:
    """Pointwise values of (1/n!) sum_shape dim * trace(block @ rho(p).T)."""
    _check_capacity(n, max_n)
    size = factorial(n)
    out = np.zeros(size)
    if n <= TABLE_MAX_N:
        tables = representation_tables(n)
        for s, mat in blocks.items():
            out += dimension(s) * np.einsum("ij,pij->p", mat, tables[s])
    else:
        shapes = tuple(blocks.keys())
        dims = {s: dimension(s) for s in shapes}
        for rank, mats in group_walk(n, shapes):
            acc = 0.0
            for s in shapes:
                acc += dims[s] * float(np.vdot(blocks[s], mats[s]))
            out[rank] = acc
    return out / size


def inverse(spec: FourierSpectrum, max_n: int = DEFAULT_MAX_N) -> PayoffFn:
    """Invert a full spectrum back to pointwise values."""
    return PayoffFn(spec.n, _synthesize(spec.n, spec.blocks, max_n))


def isotypic_project(
    f: PayoffFn, shape: tuple[int, ...], max_n: int = DEFAULT_MAX_N
) -> PayoffFn:
    """Component of the payoff living in a single partition's isotype."""
    spec = transform(f, max_n)
    return PayoffFn(f.n, _synthesize(f.n, {shape: spec.blocks[shape]}, max_n))


def degree(
    f: PayoffFn,
    tol: float = DEGREE_TOL,
    spectrum: FourierSpectrum | None = None,
    max_n: int = DEFAULT_MAX_N,
) -> int:
    """Largest n - (largest part) over shapes carrying spectral mass.

    The threshold is relative: a block counts when its Frobenius norm
    exceeds tol * ||f||_2.  Undefined for the zero function.
    """
    norm = float(np.linalg.norm(f.values))
    if norm == 0.0:
        raise DegenerateError("degree of the zero function is undefined")
    spec = spectrum if spectrum is not None else transform(f, max_n)
    deg = 0
    for s, mat in spec.blocks.items():
        if np.linalg.norm(mat) > tol * norm:
            deg = max(deg, f.n - s[0])
    return deg


def truncate_low(f: PayoffFn, t: int, max_n: int = DEFAULT_MAX_N) -> PayoffFn:
    """Keep only components of degree <= t."""
    spec = transform(f, max_n)
    kept = {s: m for s, m in spec.blocks.items() if f.n - s[0] <= t}
    return PayoffFn(f.n, _synthesize(f.n, kept, max_n))


def truncate_high(f: PayoffFn, t: int, max_n: int = DEFAULT_MAX_N) -> PayoffFn:
    """Drop components of degree <= t, keeping the high-degree remainder."""
    low = truncate_low(f, t, max_n)
    return PayoffFn(f.n, f.values - low.values)


@dataclass(frozen=True)
class SchattenSummary:
    """Dimension-weighted singular value aggregates of a spectrum."""

    s1: float
    sinf: float
    per_block: dict[tuple[int, ...], np.ndarray] = field(repr=False)


def schatten_summary(spec: FourierSpectrum) -> SchattenSummary:
    per_block = {}
    s1 = 0.0
    sinf = 0.0
    for s, mat in spec.blocks.items():
        sv = np.linalg.svd(mat, compute_uv=False)
        per_block[s] = sv
        s1 += dimension(s) * float(sv.sum())
        if sv.size:
            sinf = max(sinf, float(sv[0]))
    return SchattenSummary(s1=s1, sinf=sinf, per_block=per_block)


@dataclass(frozen=True)
class UncertaintyCheck:
    """Both factors of the support-spread product and the verdict."""

    support_ratio: float  # ||f||_1 / ||f||_inf
    spread_ratio: float  # s1 / sinf
    product: float
    group_order: int
    holds: bool


def uncertainty_check(
    f: PayoffFn, max_n: int = DEFAULT_MAX_N, rel_tol: float = 1e-9
) -> UncertaintyCheck:
    """Check (||f||_1/||f||_inf) * (s1/sinf) >= n! for a nonzero payoff."""
    abs_vals = np.abs(f.values)
    linf = float(abs_vals.max())
    if linf == 0.0:
        raise DegenerateError("support-spread product undefined for the zero function")
    l1 = float(abs_vals.sum())
    summary = schatten_summary(transform(f, max_n))
    support_ratio = l1 / linf
    spread_ratio = summary.s1 / summary.sinf
    product = support_ratio * spread_ratio
    order = factorial(f.n)
    return UncertaintyCheck(
        support_ratio=support_ratio,
        spread_ratio=spread_ratio,
        product=product,
        group_order=order,
        holds=product >= order * (1.0 - rel_tol),
    )
