"""Fuzzy-quantifier-based lower and upper approximations.

The lower approximation of A at y is ``Q_l(Ry, A)`` for a binary quantifier
model, the upper approximation is ``Q_u(C(Ry, A))`` for a unary one (VQFRS is
the exception: its upper approximation is binary, ``Z2(Ry, A)``).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from fqfrs.errors import ConfigurationError, DimensionError
from fqfrs.fuzzy_core import FuzzyRelation, FuzzySet, as_memberships, kd_implicator, minimum
from fqfrs.qfm import FOWA, MCX
from fqfrs.quantifiers import (
    WOWA,
    YWI,
    BinaryQuantifierModel,
    MinInclusion,
    YagerImplication,
    Zadeh2,
    yager_unary,
    zadeh_binary,
    zadeh_unary,
)
from fqfrs.rim import EXISTENTIAL, UNIVERSAL


class NonReflexiveRelationWarning(UserWarning):
    pass


# upper-approximation quantifiers ------------------------------------------------------


class UpperModel:
    binary = False


@dataclass(frozen=True)
class ClassicalSup(UpperModel):
    def __call__(self, C):
        return np.max(C, axis=-1)


@dataclass(frozen=True)
class YagerUnaryUpper(UpperModel):
    rim: object

    def __call__(self, C):
        return yager_unary(self.rim, C)


@dataclass(frozen=True)
class ZadehUnaryUpper(UpperModel):
    rim: object

    def __call__(self, C):
        return zadeh_unary(self.rim, C)


@dataclass(frozen=True)
class VQFRSUpper(UpperModel):
    """Binary upper approximation ``rim(|Ry n A| / |Ry|)``."""

    rim: object
    binary = True

    def __call__(self, Ry, A):
        return zadeh_binary(self.rim, Ry, A)


@dataclass(frozen=True)
class ApproximationSpec:
    lower_model: BinaryQuantifierModel
    upper_model: UpperModel = field(default_factory=ClassicalSup)
    conjunctor: Callable = field(default=minimum)
    implicator: Callable = field(default=kd_implicator)
    name: str = ""


def _relation_values(R, A):
    values = R.values if isinstance(R, FuzzyRelation) else np.asarray(R, dtype=np.float64)
    a = as_memberships(A)
    if values.ndim != 2 or values.shape[0] != values.shape[1]:
        raise DimensionError(f"relation must be square, got shape {values.shape}")
    if values.shape[0] != a.size:
        raise DimensionError(f"relation on {values.shape[0]} elements, concept on {a.size}")
    if not np.all(np.diag(values) == 1.0):
        warnings.warn("relation is not reflexive", NonReflexiveRelationWarning, stacklevel=3)
    return values, a


def lower_approximation(spec, R, A):
    """``result(y) = lower_model(Ry, A)`` where ``Ry(x) = R(x, y)``."""
    values, a = _relation_values(R, A)
    # row y of values.T is the foreset of y
    return FuzzySet(np.clip(spec.lower_model(values.T, a), 0.0, 1.0))


def upper_approximation(spec, R, A):
    """``result(y) = upper_model(C(Ry, A))``, or ``upper_model(Ry, A)`` for VQFRS."""
    values, a = _relation_values(R, A)
    foresets = values.T
    if spec.upper_model.binary:
        out = spec.upper_model(foresets, a)
    else:
        out = spec.upper_model(spec.conjunctor(foresets, a[None, :]))
    return FuzzySet(np.clip(out, 0.0, 1.0))


MODEL_NAMES = ("FRS", "OWA", "WOWA", "YWI", "FOWA", "VQFRS", "MCX")


def named_model(name, rim=UNIVERSAL, upper_rim=EXISTENTIAL):
    """Wire one of the evaluated models with the Kleene-Dienes implicator and minimum.

    FRS ignores ``rim``. Only VQFRS has a model-specific upper approximation;
    all others use Yager's unary model with ``upper_rim``.
    """
    key = name.upper().replace("M_CX", "MCX")
    if key == "ZAD":
        key = "VQFRS"
    upper = YagerUnaryUpper(upper_rim)
    if key == "FRS":
        return ApproximationSpec(MinInclusion(kd_implicator), ClassicalSup(), name="FRS")
    if key == "OWA":
        lower = YagerImplication(rim, kd_implicator)
    elif key == "WOWA":
        lower = WOWA(rim, kd_implicator)
    elif key == "YWI":
        lower = YWI(rim, kd_implicator)
    elif key == "FOWA":
        lower = FOWA(rim)
    elif key == "MCX":
        lower = MCX(rim)
    elif key == "VQFRS":
        lower = Zadeh2(rim)
        upper = VQFRSUpper(upper_rim)
    else:
        raise ConfigurationError(f"unknown model {name!r}; expected one of {', '.join(MODEL_NAMES)}")
    return ApproximationSpec(lower, upper, name=key)


def z2z_spec(rim, upper_rim):
    """(Zadeh binary, Zadeh unary) fuzzy rough set."""
    return ApproximationSpec(Zadeh2(rim), ZadehUnaryUpper(upper_rim), name="Z2Z")


def vqfrs_spec(rim, upper_rim):
    return ApproximationSpec(Zadeh2(rim), VQFRSUpper(upper_rim), name="VQFRS")


def owa_spec(rim, upper_rim, implicator=kd_implicator, conjunctor=minimum):
    return ApproximationSpec(
        YagerImplication(rim, implicator), YagerUnaryUpper(upper_rim), conjunctor, implicator, name="OWA"
    )
