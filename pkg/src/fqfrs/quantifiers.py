"""Semi-fuzzy quantifiers and the directly computable fuzzy quantification models.

The binary models evaluate "Q A's are B's" for fuzzy A and B. Every function
here accepts 1-d membership vectors and also stacks of them (shape ``(k, n)``),
aggregating along the last axis, which is what the batch classifier relies on.

Empty antecedents: ``|A| = 0`` leaves the proportion ``|A n B| / |A|``
undefined. ``empty_value=None`` resolves to 0 for the existential quantifier
("some of nothing is false") and to 1 otherwise (vacuous truth).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from fqfrs.aggregation import (
    SetFunctionMeasure,
    SymmetricMeasure,
    choquet,
    measure_from_rim,
    owa_weights_from_measure,
)
from fqfrs.errors import DomainError
from fqfrs.fuzzy_core import as_memberships, kd_implicator, minimum, same_universe
from fqfrs.rim import RIMQuantifier


def resolve_empty_value(rim, empty_value=None):
    if empty_value is None:
        return 0.0 if getattr(rim, "is_existential", False) else 1.0
    if not 0.0 <= empty_value <= 1.0:
        raise DomainError("empty_value must lie in [0, 1]")
    return float(empty_value)


def _scalar(out):
    return float(out) if np.ndim(out) == 0 else out


# semi-fuzzy quantifiers on crisp masks ---------------------------------------


def semi_q2(rim, A, B, empty_value=None):
    """``rim(|A n B| / |A|)`` for crisp masks A and B."""
    A = np.asarray(A, dtype=bool)
    B = np.asarray(B, dtype=bool)
    size_a = np.count_nonzero(A, axis=-1)
    inter = np.count_nonzero(A & B, axis=-1)
    with np.errstate(invalid="ignore", divide="ignore"):
        ratio = np.where(size_a > 0, inter / np.maximum(size_a, 1), 0.0)
    out = np.where(size_a > 0, rim(ratio), resolve_empty_value(rim, empty_value))
    return _scalar(out)


def semi_q_arrow(rim, A, B):
    """``rim((|not A| + |A n B|) / |X|)`` for crisp masks A and B."""
    A = np.asarray(A, dtype=bool)
    B = np.asarray(B, dtype=bool)
    n = A.shape[-1]
    return _scalar(rim(np.count_nonzero(~A | B, axis=-1) / n))


@dataclass(frozen=True)
class SemiFuzzyBinaryQuantifier:
    """A proportional semi-fuzzy quantifier, ``kind`` is ``"q2"`` or ``"q_arrow"``."""

    kind: str
    rim: RIMQuantifier
    empty_antecedent_value: float | None = None

    def __post_init__(self):
        if self.kind not in ("q2", "q_arrow"):
            raise DomainError(f"unknown semi-fuzzy quantifier kind {self.kind!r}")

    def __call__(self, A, B):
        if self.kind == "q2":
            return semi_q2(self.rim, A, B, self.empty_antecedent_value)
        return semi_q_arrow(self.rim, A, B)


# unary models ------------------------------------------------------------------


def zadeh_unary(rim, A):
    """``rim(|A|_sigma / n)``."""
    a = as_memberships(A)
    return _scalar(rim(np.minimum(a.sum(axis=-1) / a.shape[-1], 1.0)))


def yager_unary(rim, A):
    """Choquet integral of A w.r.t. the measure ``|S| -> rim(|S| / n)`` (an OWA)."""
    a = as_memberships(A)
    w = owa_weights_from_measure(measure_from_rim(rim, a.shape[-1])).weights
    return _scalar(-np.sort(-a, axis=-1) @ w)


# binary models -------------------------------------------------------------------


def zadeh_binary(rim, A, B, empty_value=None):
    """``rim(|A n B|_sigma / |A|_sigma)`` with minimum as intersection."""
    a, b = same_universe(A, B)
    total = a.sum(axis=-1)
    inter = np.minimum(a, b).sum(axis=-1)
    with np.errstate(invalid="ignore", divide="ignore"):
        ratio = np.where(total > 0, np.minimum(inter / np.where(total > 0, total, 1.0), 1.0), 0.0)
    return _scalar(np.where(total > 0, rim(ratio), resolve_empty_value(rim, empty_value)))


def yager_implication_binary(rim, A, B, implicator=kd_implicator):
    """Yager's implication-based model: ``yager_unary(rim, I(A, B))``."""
    a, b = same_universe(A, B)
    return yager_unary(rim, implicator(a, b))


def _weighted_prefix_aggregate(rim, values_desc, weights_in_order):
    # sum_i v_i * (rim(W_i / W_n) - rim(W_{i-1} / W_n)), W the running sum of weights
    cum = np.cumsum(weights_in_order, axis=-1)
    total = cum[..., -1:]
    with np.errstate(invalid="ignore", divide="ignore"):
        ratio = cum / np.where(total > 0, total, 1.0)
    lam = rim(ratio)
    lam = np.concatenate([np.zeros(lam.shape[:-1] + (1,)), lam], axis=-1)
    return np.sum(values_desc * np.diff(lam, axis=-1), axis=-1), total[..., 0]


def wowa_binary(rim, A, B, implicator=kd_implicator, empty_value=None):
    """WOWA-based model: Choquet integral of I(A, B) w.r.t. ``S -> rim(|S n A| / |A|)``.

    Uses the prefix-sum form: elements are visited by decreasing implication
    value and their A-memberships are accumulated in that same order.
    """
    a, b = same_universe(A, B)
    imp = np.asarray(implicator(a, b), dtype=np.float64)
    a_full = np.broadcast_to(a, imp.shape)
    order = np.argsort(-imp, axis=-1, kind="stable")
    imp_desc = np.take_along_axis(imp, order, axis=-1)
    a_in_order = np.take_along_axis(a_full, order, axis=-1)
    out, total = _weighted_prefix_aggregate(rim, imp_desc, a_in_order)
    return _scalar(np.where(total > 0, out, resolve_empty_value(rim, empty_value)))


def ywi_binary(rim, A, B, implicator=kd_implicator, empty_value=None):
    """Yager's weighted implication model.

    Like :func:`wowa_binary`, but the A-memberships are accumulated in
    increasing order of A independently of the implication ordering, which
    makes the weighting measure symmetric (it depends on |S| only).
    """
    a, b = same_universe(A, B)
    imp = np.asarray(implicator(a, b), dtype=np.float64)
    a_full = np.broadcast_to(a, imp.shape)
    imp_desc = -np.sort(-imp, axis=-1)
    out, total = _weighted_prefix_aggregate(rim, imp_desc, np.sort(a_full, axis=-1))
    return _scalar(np.where(total > 0, out, resolve_empty_value(rim, empty_value)))


def ywi_measure(rim, A):
    """The symmetric measure behind :func:`ywi_binary` for a 1-d antecedent A."""
    a = np.sort(as_memberships(A))
    cum = np.cumsum(a)
    mu = np.r_[0.0, rim(cum / cum[-1])]
    mu[-1] = 1.0
    return SymmetricMeasure(mu)


def min_inclusion(A, B, implicator=kd_implicator):
    """Standard inclusion degree ``min_x I(A(x), B(x))``."""
    a, b = same_universe(A, B)
    return _scalar(np.min(implicator(a, b), axis=-1))


# model objects used by the rough-set layer -----------------------------------------


class BinaryQuantifierModel:
    """Callable ``model(A, B) -> [0, 1]``; ``A`` may be a stack of antecedents."""

    name = "?"

    def __call__(self, A, B):  # pragma: no cover - abstract
        raise NotImplementedError


@dataclass(frozen=True)
class YagerImplication(BinaryQuantifierModel):
    rim: RIMQuantifier
    implicator: Callable = field(default=kd_implicator)
    name = "OWA"

    def __call__(self, A, B):
        return yager_implication_binary(self.rim, A, B, self.implicator)


@dataclass(frozen=True)
class WOWA(BinaryQuantifierModel):
    rim: RIMQuantifier
    implicator: Callable = field(default=kd_implicator)
    empty_value: float | None = None
    name = "WOWA"

    def __call__(self, A, B):
        return wowa_binary(self.rim, A, B, self.implicator, self.empty_value)


@dataclass(frozen=True)
class YWI(BinaryQuantifierModel):
    rim: RIMQuantifier
    implicator: Callable = field(default=kd_implicator)
    empty_value: float | None = None
    name = "YWI"

    def __call__(self, A, B):
        return ywi_binary(self.rim, A, B, self.implicator, self.empty_value)


@dataclass(frozen=True)
class Zadeh2(BinaryQuantifierModel):
    rim: RIMQuantifier
    empty_value: float | None = None
    name = "VQFRS"

    def __call__(self, A, B):
        return zadeh_binary(self.rim, A, B, self.empty_value)


@dataclass(frozen=True)
class MinInclusion(BinaryQuantifierModel):
    """The classical fuzzy-rough lower approximation operator."""

    implicator: Callable = field(default=kd_implicator)
    name = "FRS"

    def __call__(self, A, B):
        return min_inclusion(A, B, self.implicator)


def wowa_choquet(rim, A, B, implicator=kd_implicator):
    """Reference evaluation of the WOWA model through the generic Choquet integral.

    Evaluates the non-symmetric measure set by set; meant as a cross-check
    for :func:`wowa_binary`.
    """
    a, b = same_universe(A, B)
    total = a.sum()
    mu = SetFunctionMeasure(a.size, lambda S: float(rim(min(a[S].sum() / total, 1.0))))
    return choquet(mu, implicator(a, b))


__all__ = [
    "BinaryQuantifierModel",
    "MinInclusion",
    "SemiFuzzyBinaryQuantifier",
    "WOWA",
    "YWI",
    "YagerImplication",
    "Zadeh2",
    "min_inclusion",
    "resolve_empty_value",
    "semi_q2",
    "semi_q_arrow",
    "wowa_binary",
    "wowa_choquet",
    "yager_implication_binary",
    "yager_unary",
    "ywi_binary",
    "ywi_measure",
    "zadeh_binary",
    "zadeh_unary",
]
