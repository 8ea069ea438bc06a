"""Monotone measures, the Choquet integral and OWA operators.

Crisp subsets are boolean masks. A :class:`SymmetricMeasure` is stored as its
cumulative vector ``mu_0..mu_n`` (``mu_k`` is the measure of any k-element set),
which both Choquet evaluation and the RIM correspondence read directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from fqfrs.errors import DimensionError, DomainError
from fqfrs.rim import StepRIM

WEIGHT_TOL = 1e-12


class MonotoneMeasure:
    """Set function on the subsets of ``{0, ..., n-1}`` with mu(empty)=0, mu(X)=1."""

    size: int

    def __call__(self, mask) -> float:  # pragma: no cover - abstract
        raise NotImplementedError


@dataclass(frozen=True, eq=False)
class SetFunctionMeasure(MonotoneMeasure):
    """Wraps an arbitrary callable on boolean masks. Monotonicity is the caller's job."""

    size: int
    func: Callable[[np.ndarray], float]

    def __call__(self, mask):
        mask = np.asarray(mask, dtype=bool)
        if not mask.any():
            return 0.0
        if mask.all():
            return 1.0
        return float(self.func(mask))


@dataclass(frozen=True, eq=False)
class SymmetricMeasure(MonotoneMeasure):
    cumulative: np.ndarray

    def __post_init__(self):
        mu = np.asarray(self.cumulative, dtype=np.float64)
        if mu.ndim != 1 or mu.size < 2:
            raise DimensionError("a symmetric measure needs cumulative values mu_0..mu_n with n >= 1")
        if mu[0] != 0.0 or mu[-1] != 1.0:
            raise DomainError("a symmetric measure needs mu_0 = 0 and mu_n = 1")
        if np.any(np.diff(mu) < 0.0):
            raise DomainError("symmetric measure cumulatives must be non-decreasing")
        mu = mu.copy()
        mu.flags.writeable = False
        object.__setattr__(self, "cumulative", mu)

    @property
    def size(self):
        return self.cumulative.size - 1

    def __call__(self, mask):
        return float(self.cumulative[int(np.count_nonzero(mask))])


def existential_measure(n):
    """mu(S) = 1 for every non-empty S."""
    return SymmetricMeasure(np.r_[0.0, np.ones(n)])


def universal_measure(n):
    """mu(S) = 1 only for S = X."""
    return SymmetricMeasure(np.r_[np.zeros(n), 1.0])


@dataclass(frozen=True, eq=False)
class WeightVector:
    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=np.float64)
        if w.ndim != 1 or w.size == 0:
            raise DimensionError("weights must be a non-empty 1-d vector")
        if np.any(w < 0.0):
            raise DomainError("weights must be non-negative")
        if abs(w.sum() - 1.0) > WEIGHT_TOL:
            raise DomainError(f"weights must sum to 1 (got {w.sum()!r})")
        w = w.copy()
        w.flags.writeable = False
        object.__setattr__(self, "weights", w)

    def __len__(self):
        return self.weights.size

    def __array__(self, dtype=None, copy=None):
        return self.weights if dtype is None else self.weights.astype(dtype)


def _weights(w):
    return w.weights if isinstance(w, WeightVector) else WeightVector(w).weights


def owa(w, f):
    """Ordered weighted average: weight ``w_i`` goes to the i-th largest value of ``f``.

    ``f`` may be 2-d, in which case each row is aggregated.
    """
    weights = _weights(w)
    f = np.asarray(f, dtype=np.float64)
    if f.shape[-1] != weights.size:
        raise DimensionError(f"OWA weight length {weights.size} does not match input length {f.shape[-1]}")
    ordered = -np.sort(-f, axis=-1, kind="stable")
    out = ordered @ weights
    return float(out) if np.ndim(out) == 0 else out


def _as_measure(mu, n):
    if isinstance(mu, MonotoneMeasure):
        if mu.size != n:
            raise DimensionError(f"measure on {mu.size} elements applied to function on {n}")
        return mu
    raise TypeError(f"expected a MonotoneMeasure, got {type(mu).__name__}")


def _upper_level_measures(mu, order):
    # values mu(A*_i) for A*_i = {x*_i, ..., x*_n}, i = 1..n (ascending order), plus mu(A*_{n+1}) = 0
    n = order.size
    if isinstance(mu, SymmetricMeasure):
        return np.r_[mu.cumulative[n:0:-1], 0.0]
    out = np.empty(n + 1)
    mask = np.ones(n, dtype=bool)
    for i in range(n):
        out[i] = mu(mask)
        mask[order[i]] = False
    out[n] = 0.0
    return out


def choquet(mu, f):
    """Choquet integral, ``sum_i mu(A*_i) * (f(x*_i) - f(x*_{i-1}))`` with f sorted ascending."""
    f = np.asarray(f, dtype=np.float64)
    if f.ndim != 1:
        raise DimensionError("choquet expects a 1-d function")
    mu = _as_measure(mu, f.size)
    order = np.argsort(f, kind="stable")
    fs = f[order]
    levels = _upper_level_measures(mu, order)[:-1]
    return float(np.dot(levels, np.diff(np.r_[0.0, fs])))


def choquet_by_measure_increments(mu, f):
    """Equivalent form ``sum_i f(x*_i) * (mu(A*_i) - mu(A*_{i+1}))``."""
    f = np.asarray(f, dtype=np.float64)
    if f.ndim != 1:
        raise DimensionError("choquet expects a 1-d function")
    mu = _as_measure(mu, f.size)
    order = np.argsort(f, kind="stable")
    levels = _upper_level_measures(mu, order)
    return float(np.dot(f[order], levels[:-1] - levels[1:]))


def measure_from_rim(rim, n):
    """Symmetric measure ``mu(S) = rim(|S| / n)``."""
    if n < 1:
        raise DomainError("universe size must be positive")
    mu = np.asarray(rim(np.arange(n + 1) / n), dtype=np.float64)
    mu[0], mu[-1] = 0.0, 1.0
    return SymmetricMeasure(mu)


def rim_from_measure(mu):
    """Step RIM quantifier whose measure on an n-element universe is ``mu``."""
    return StepRIM(tuple(float(v) for v in mu.cumulative))


def owa_weights_from_measure(mu):
    """OWA weights ``w_i = mu_i - mu_{i-1}`` of the Choquet integral w.r.t. a symmetric measure."""
    w = np.diff(mu.cumulative)
    # cumulative ends at exactly 1, so the sum only drifts by rounding
    return WeightVector(np.clip(w, 0.0, None))


def measure_from_owa_weights(w):
    """Symmetric measure ``mu(A) = w_1 + ... + w_|A|``."""
    mu = np.r_[0.0, np.cumsum(_weights(w))]
    mu[-1] = 1.0
    return SymmetricMeasure(np.minimum(mu, 1.0))
