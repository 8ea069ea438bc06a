"""Regular increasing monotone (RIM) quantifiers.

A RIM quantifier maps a proportion ``p`` in [0, 1] to a truth degree, is
non-decreasing, and satisfies ``Q(0) = 0`` and ``Q(1) = 1``. All quantifiers
here are callable on floats and on numpy arrays.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from fqfrs.errors import DomainError


class RIMQuantifier:
    """Base class; subclasses implement :meth:`_eval` on float arrays."""

    def __call__(self, p):
        arr = np.asarray(p, dtype=np.float64)
        out = self._eval(arr)
        return float(out) if out.ndim == 0 else out

    def _eval(self, p):  # pragma: no cover - abstract
        raise NotImplementedError

    @property
    def is_existential(self):
        return False

    @property
    def is_universal(self):
        return False

    def spec(self):
        """The mini-language string accepted by :func:`parse_rim`."""
        raise NotImplementedError


@dataclass(frozen=True)
class ThresholdGT(RIMQuantifier):
    """"More than 100*k %": 1 if p > k else 0."""

    k: float

    def __post_init__(self):
        if not 0.0 <= self.k < 1.0:
            raise DomainError(f"threshold_gt needs 0 <= k < 1, got {self.k}")

    def _eval(self, p):
        return np.where(p > self.k, 1.0, 0.0)

    @property
    def is_existential(self):
        return self.k == 0.0

    def spec(self):
        return "exists" if self.k == 0.0 else f"gt:{self.k!r}"


@dataclass(frozen=True)
class ThresholdGEQ(RIMQuantifier):
    """"At least 100*k %": 1 if p >= k else 0."""

    k: float

    def __post_init__(self):
        if not 0.0 < self.k <= 1.0:
            raise DomainError(f"threshold_geq needs 0 < k <= 1, got {self.k}")

    def _eval(self, p):
        return np.where(p >= self.k, 1.0, 0.0)

    @property
    def is_universal(self):
        return self.k == 1.0

    def spec(self):
        return "forall" if self.k == 1.0 else f"geq:{self.k!r}"


@dataclass(frozen=True)
class Identity(RIMQuantifier):
    def _eval(self, p):
        return np.clip(p, 0.0, 1.0)

    def spec(self):
        return "id"


@dataclass(frozen=True)
class ZadehS(RIMQuantifier):
    """Zadeh's S-function with shoulders at ``alpha < beta``.

    ``ZadehS(0.3, 0.9)`` and ``ZadehS(0.1, 0.4)`` are common models of "most"
    and "some"; ``ZadehS(a, 1)`` tends to the universal quantifier as a -> 1.
    """

    alpha: float
    beta: float

    def __post_init__(self):
        if not 0.0 <= self.alpha < self.beta <= 1.0:
            raise DomainError(f"S-function needs 0 <= alpha < beta <= 1, got ({self.alpha}, {self.beta})")

    def _eval(self, p):
        a, b = self.alpha, self.beta
        width2 = (b - a) ** 2
        mid = 0.5 * (a + b)
        rising = 2.0 * (p - a) ** 2 / width2
        falling = 1.0 - 2.0 * (p - b) ** 2 / width2
        return np.where(p <= a, 0.0, np.where(p <= mid, rising, np.where(p < b, falling, 1.0)))

    def spec(self):
        return f"s:{self.alpha!r},{self.beta!r}"


@dataclass(frozen=True, eq=False)
class StepRIM(RIMQuantifier):
    """Step quantifier built from a symmetric measure's cumulative vector.

    ``Q(p) = mu_i`` for the largest ``i`` with ``i <= p * n``, so that
    ``Q(k / n) = mu_k`` on the grid.
    """

    cumulative: tuple

    def _eval(self, p):
        mu = np.asarray(self.cumulative, dtype=np.float64)
        n = mu.size - 1
        # small slack so that k/n computed in floating point lands on index k
        idx = np.floor(p * n + 1e-9).astype(np.int64)
        return mu[np.clip(idx, 0, n)]

    @property
    def is_universal(self):
        mu = self.cumulative
        return all(v == 0.0 for v in mu[:-1])

    @property
    def is_existential(self):
        return all(v == 1.0 for v in self.cumulative[1:])


UNIVERSAL = ThresholdGEQ(1.0)
EXISTENTIAL = ThresholdGT(0.0)
IDENTITY = Identity()


def universal():
    return UNIVERSAL


def existential():
    return EXISTENTIAL


def s_function(alpha, beta=1.0):
    return ZadehS(float(alpha), float(beta))


_NUM = r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?"


def parse_rim(text):
    """Parse the RIM mini-language: ``forall``, ``exists``, ``id``, ``gt:k``, ``geq:k``, ``s:a,b``."""
    t = text.strip().lower()
    if t in ("forall", "all"):
        return UNIVERSAL
    if t in ("exists", "some"):
        return EXISTENTIAL
    if t in ("id", "identity"):
        return IDENTITY
    m = re.fullmatch(rf"(gt|geq):({_NUM})", t)
    if m:
        k = float(m.group(2))
        return ThresholdGT(k) if m.group(1) == "gt" else ThresholdGEQ(k)
    m = re.fullmatch(rf"s:({_NUM}),\s*({_NUM})", t)
    if m:
        return ZadehS(float(m.group(1)), float(m.group(2)))
    raise DomainError(f"unrecognised RIM specification {text!r}")
