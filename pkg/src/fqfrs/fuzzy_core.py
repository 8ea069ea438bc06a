"""Fuzzy sets on finite universes, connectives, cuts and cardinalities.

Universe elements are the dense indices ``0..n-1``. A fuzzy set is stored as a
float64 membership vector; a crisp set is a boolean mask of the same length.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from fqfrs.errors import DimensionError, DomainError

BinaryConnective = Callable[[np.ndarray, np.ndarray], np.ndarray]
UnaryConnective = Callable[[np.ndarray], np.ndarray]


def _check_unit(values, name="value"):
    arr = np.asarray(values, dtype=np.float64)
    if arr.size and (np.isnan(arr).any() or arr.min() < 0.0 or arr.max() > 1.0):
        raise DomainError(f"{name} must lie in [0, 1]")
    return arr


@dataclass(frozen=True, eq=False)
class FuzzySet:
    """Membership vector over the universe ``{0, ..., n-1}``."""

    memberships: np.ndarray

    def __post_init__(self):
        arr = _check_unit(self.memberships, "memberships")
        if arr.ndim != 1 or arr.size == 0:
            raise DimensionError("a fuzzy set needs a non-empty 1-d membership vector")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "memberships", arr)

    @classmethod
    def empty(cls, n):
        return cls(np.zeros(n))

    @classmethod
    def universe(cls, n):
        return cls(np.ones(n))

    @classmethod
    def crisp(cls, mask):
        return cls(np.asarray(mask, dtype=bool).astype(np.float64))

    @property
    def universe_size(self):
        return self.memberships.size

    def is_crisp(self):
        m = self.memberships
        return bool(np.all((m == 0.0) | (m == 1.0)))

    def __len__(self):
        return self.memberships.size

    def __getitem__(self, index):
        return self.memberships[index]

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.memberships
        return self.memberships.astype(dtype)

    def __eq__(self, other):
        if not isinstance(other, FuzzySet):
            return NotImplemented
        return np.array_equal(self.memberships, other.memberships)

    def __repr__(self):
        return f"FuzzySet({self.memberships.tolist()!r})"


@dataclass(frozen=True, eq=False)
class FuzzyRelation:
    """Square matrix of similarities, ``values[x, y] = R(x, y)``."""

    values: np.ndarray

    def __post_init__(self):
        arr = _check_unit(self.values, "relation values")
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise DimensionError(f"a fuzzy relation must be a non-empty square matrix, got shape {arr.shape}")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)

    @classmethod
    def identity(cls, n):
        return cls(np.eye(n))

    @property
    def universe_size(self):
        return self.values.shape[0]

    @property
    def reflexive(self):
        return bool(np.all(np.diag(self.values) == 1.0))

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.values
        return self.values.astype(dtype)


def as_memberships(A, name="fuzzy set"):
    """Return the membership vector of ``A`` (a FuzzySet or array-like) as float64."""
    if isinstance(A, FuzzySet):
        return A.memberships
    return _check_unit(A, name)


def same_universe(A, B):
    a, b = as_memberships(A), as_memberships(B)
    if a.shape[-1] != b.shape[-1]:
        raise DimensionError(f"universe mismatch: {a.shape[-1]} vs {b.shape[-1]}")
    return a, b


# connectives ---------------------------------------------------------------


def kd_implicator(x, y):
    """Kleene-Dienes implicator ``max(1 - x, y)``; works elementwise on arrays."""
    x = _check_unit(x, "implicator antecedent")
    y = _check_unit(y, "implicator consequent")
    out = np.maximum(1.0 - x, y)
    return float(out) if out.ndim == 0 else out


def lukasiewicz_implicator(x, y):
    x = _check_unit(x, "implicator antecedent")
    y = _check_unit(y, "implicator consequent")
    out = np.minimum(1.0, 1.0 - x + y)
    return float(out) if out.ndim == 0 else out


def minimum(x, y):
    out = np.minimum(np.asarray(x, dtype=np.float64), np.asarray(y, dtype=np.float64))
    return float(out) if out.ndim == 0 else out


def maximum(x, y):
    out = np.maximum(np.asarray(x, dtype=np.float64), np.asarray(y, dtype=np.float64))
    return float(out) if out.ndim == 0 else out


def product(x, y):
    out = np.asarray(x, dtype=np.float64) * np.asarray(y, dtype=np.float64)
    return float(out) if out.ndim == 0 else out


def standard_negator(x):
    out = 1.0 - _check_unit(x, "negator argument")
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class Connectives:
    """Implicator, conjunctor and negator used by an approximation."""

    implicator: BinaryConnective = field(default=kd_implicator)
    conjunctor: BinaryConnective = field(default=minimum)
    negator: UnaryConnective = field(default=standard_negator)


DEFAULT_CONNECTIVES = Connectives()


# set operations -------------------------------------------------------------


def pointwise(op, A, B):
    """Extend a binary connective to fuzzy sets: ``result(x) = op(A(x), B(x))``."""
    a, b = same_universe(A, B)
    return FuzzySet(op(a, b))


def sigma_count(A):
    """Zadeh's sigma-count, the sum of memberships."""
    return float(np.sum(as_memberships(A)))


def alpha_cut(A, alpha, strict=False):
    """Boolean mask of ``{x : A(x) >= alpha}`` (or ``> alpha`` when ``strict``)."""
    a = as_memberships(A)
    alpha = float(_check_unit(alpha, "alpha"))
    return a > alpha if strict else a >= alpha


def foreset(R, y):
    """The R-foreset of ``y``: the fuzzy set ``x -> R(x, y)``."""
    values = R.values if isinstance(R, FuzzyRelation) else np.asarray(R, dtype=np.float64)
    n = values.shape[0]
    if not 0 <= y < n:
        raise IndexError(f"element {y} outside universe of size {n}")
    return FuzzySet(values[:, y])


def three_valued_cut(A, gamma):
    """Return the pair ``(A_min, A_max)`` of boolean masks for the cut level ``gamma``.

    For ``gamma > 0`` these are ``A >= (1 + gamma) / 2`` and ``A > (1 - gamma) / 2``;
    at ``gamma == 0`` they are ``A > 1/2`` and ``A >= 1/2``. The comparisons run on
    ``2A - 1`` against ``gamma`` (no epsilon): ``(1 - gamma) / 2`` rounds to 1/2 for tiny
    gamma, while ``2A - 1`` is the quantity the envelope breakpoints ``|2A - 1|`` use.
    """
    a = as_memberships(A)
    gamma = float(_check_unit(gamma, "gamma"))
    if gamma == 0.0:
        return a > 0.5, a >= 0.5
    d = 2.0 * a - 1.0
    return d >= gamma, -d < gamma


def fuzzy_median(a, b):
    """Generalized fuzzy median m_1/2 of two truth values."""
    lo, hi = min(a, b), max(a, b)
    if lo > 0.5:
        return lo
    if hi < 0.5:
        return hi
    return 0.5
