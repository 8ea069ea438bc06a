"""Quantifier fuzzification through three-valued cuts: F_owa and M_CX.

For a semi-fuzzy quantifier Q and fuzzy arguments, the cut level gamma in
[0, 1] defines a range of crisp instantiations ``A_min <= A' <= A_max`` per
argument. ``top``/``bottom`` are the sup/inf of Q over that range. F_owa
integrates their average over gamma; M_CX aggregates ``Q_gamma``, the fuzzy
median of top and bottom, through ``sup min(gamma, .)`` on the distance of
``Q_gamma`` from 1/2.

Both functions are piecewise constant in gamma; they can only change at
``|2m - 1|`` for a membership m of some argument. Each open interval between
consecutive breakpoints is evaluated at its midpoint.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from fqfrs.errors import CapacityError
from fqfrs.fuzzy_core import as_memberships, fuzzy_median, same_universe, three_valued_cut
from fqfrs.quantifiers import (
    BinaryQuantifierModel,
    SemiFuzzyBinaryQuantifier,
    resolve_empty_value,
    yager_implication_binary,
)
from fqfrs.rim import RIMQuantifier

ORACLE_LIMIT = 12


@dataclass(frozen=True, eq=False)
class CutEnvelope:
    """Piecewise constant top/bottom functions over cut levels.

    ``top[i]`` and ``bottom[i]`` hold on ``(breakpoints[i], breakpoints[i+1]]``;
    ``top_at_zero``/``bottom_at_zero`` are the values at gamma = 0 itself.
    """

    breakpoints: np.ndarray
    top_values: np.ndarray
    bottom_values: np.ndarray
    top_at_zero: float
    bottom_at_zero: float

    @property
    def midpoints(self):
        b = self.breakpoints
        return 0.5 * (b[:-1] + b[1:])

    @property
    def widths(self):
        return np.diff(self.breakpoints)

    def at(self, gamma):
        """(top, bottom) at a single cut level."""
        if gamma == 0.0:
            return self.top_at_zero, self.bottom_at_zero
        i = int(np.searchsorted(self.breakpoints, gamma, side="left")) - 1
        i = min(max(i, 0), self.top_values.size - 1)
        return float(self.top_values[i]), float(self.bottom_values[i])

    def owa_integral(self):
        """Exact integral of (top + bottom) / 2 over [0, 1]."""
        return float(np.sum(self.widths * 0.5 * (self.top_values + self.bottom_values)))

    def median_values(self):
        return np.array([fuzzy_median(t, b) for t, b in zip(self.top_values, self.bottom_values)])

    def mcx_value(self):
        """M_CX aggregation of the median function ``f = m_1/2(top, bottom)``.

        ``f`` is either everywhere >= 1/2 and non-increasing, everywhere <= 1/2
        and non-decreasing, or constant 1/2; the sign of ``f(0) - 1/2`` decides:
        ``1/2 + 1/2 sup min(gamma, 2f - 1)`` above, the mirror image below.
        ``min(gamma, c)`` grows with gamma, so each interval attains its sup at
        its right endpoint.
        """
        f0 = fuzzy_median(self.top_at_zero, self.bottom_at_zero)
        if f0 == 0.5:
            return 0.5
        f = self.median_values()
        right = self.breakpoints[1:]
        if f0 > 0.5:
            return 0.5 + 0.5 * float(max(0.0, np.max(np.minimum(right, 2.0 * f - 1.0))))
        return 0.5 - 0.5 * float(max(0.0, np.max(np.minimum(right, 1.0 - 2.0 * f))))


def cut_breakpoints(*args):
    """Sorted distinct cut levels at which some argument's cut status can change."""
    levels = [np.array([0.0, 1.0])]
    for A in args:
        levels.append(np.abs(2.0 * as_memberships(A) - 1.0))
    return np.unique(np.clip(np.concatenate(levels), 0.0, 1.0))


def _cuts_at(values, gammas):
    """Stacked three-valued cuts: boolean arrays of shape (len(gammas), n)."""
    g = gammas[:, None]
    v = values[None, :]
    d = 2.0 * v - 1.0
    lo = np.where(g > 0.0, d >= g, v > 0.5)
    hi = np.where(g > 0.0, -d < g, v >= 0.5)
    return lo, hi


# brute force oracle ----------------------------------------------------------------


def brute_value_set(Q, A, B, gamma, limit=ORACLE_LIMIT):
    """All values of ``Q(A', B')`` over the crisp sets in the gamma cut ranges.

    Enumerates every subset of the fringe elements (``max`` cut minus ``min``
    cut) of both arguments jointly; refuses when there are more than ``limit``.
    """
    a, b = same_universe(A, B)
    a_lo, a_hi = three_valued_cut(a, gamma)
    b_lo, b_hi = three_valued_cut(b, gamma)
    fringe_a = np.flatnonzero(a_hi & ~a_lo)
    fringe_b = np.flatnonzero(b_hi & ~b_lo)
    if fringe_a.size + fringe_b.size > limit:
        raise CapacityError(
            f"{fringe_a.size + fringe_b.size} fringe elements exceed the oracle limit of {limit}"
        )
    out = []
    for choice_a in itertools.product((False, True), repeat=fringe_a.size):
        a_set = a_lo.copy()
        a_set[fringe_a] = choice_a
        for choice_b in itertools.product((False, True), repeat=fringe_b.size):
            b_set = b_lo.copy()
            b_set[fringe_b] = choice_b
            out.append(Q(a_set, b_set))
    return out


def brute_top_bottom(Q, A, B, gamma, limit=ORACLE_LIMIT):
    """Exact (sup, inf) of Q over the gamma cut ranges, by enumeration."""
    values = brute_value_set(Q, A, B, gamma, limit)
    return max(values), min(values)


def brute_envelope(Q, A, B, limit=ORACLE_LIMIT):
    """CutEnvelope of an arbitrary binary semi-fuzzy quantifier by enumeration."""
    a, b = same_universe(A, B)
    bp = cut_breakpoints(a, b)
    mids = 0.5 * (bp[:-1] + bp[1:])
    pairs = [brute_top_bottom(Q, a, b, g, limit) for g in mids]
    t0, b0 = brute_top_bottom(Q, a, b, 0.0, limit)
    return CutEnvelope(
        bp, np.array([p[0] for p in pairs]), np.array([p[1] for p in pairs]), t0, b0
    )


# closed forms for Q2 -----------------------------------------------------------------


def _q2_top_bottom(rim, a_lo, a_hi, b_lo, b_hi, empty):
    """Vectorised sup/inf of Q2 over stacked cut ranges (rows are cut levels).

    sup: take B' = B_max and add exactly the A-fringe elements inside B_max.
    inf: take B' = B_min and add exactly the A-fringe elements outside B_min.
    An empty A_min also admits A' = empty, which evaluates to ``empty``.
    """
    fringe = a_hi & ~a_lo
    n_lo = a_lo.sum(axis=1)
    has_fringe = fringe.any(axis=1)

    m = (fringe & b_hi).sum(axis=1)
    num_top = (a_lo & b_hi).sum(axis=1) + m
    den_top = n_lo + m
    k = (fringe & ~b_lo).sum(axis=1)
    num_bot = (a_lo & b_lo).sum(axis=1)
    den_bot = n_lo + k

    with np.errstate(invalid="ignore", divide="ignore"):
        top = rim(np.where(den_top > 0, num_top / np.maximum(den_top, 1), 0.0))
        bottom = rim(np.where(den_bot > 0, num_bot / np.maximum(den_bot, 1), 0.0))

    # A_min empty: candidates are `empty` (A' = empty) and, with a fringe, some non-empty A'
    nonempty_top = np.where(m > 0, 1.0, rim(0.0))
    nonempty_bot = np.where(k > 0, rim(0.0), rim(1.0))
    top_empty = np.where(has_fringe, np.maximum(empty, nonempty_top), empty)
    bot_empty = np.where(has_fringe, np.minimum(empty, nonempty_bot), empty)

    top = np.where(n_lo > 0, top, top_empty)
    bottom = np.where(n_lo > 0, bottom, bot_empty)
    return top, bottom


def envelope_q2(rim, A, B, empty_value=None):
    """CutEnvelope of ``Q2(A', B') = rim(|A' n B'| / |A'|)`` in O(n) per interval."""
    a, b = same_universe(A, B)
    empty = resolve_empty_value(rim, empty_value)
    bp = cut_breakpoints(a, b)
    gammas = np.r_[0.0, 0.5 * (bp[:-1] + bp[1:])]
    a_lo, a_hi = _cuts_at(a, gammas)
    b_lo, b_hi = _cuts_at(b, gammas)
    top, bottom = _q2_top_bottom(rim, a_lo, a_hi, b_lo, b_hi, empty)
    return CutEnvelope(bp, top[1:], bottom[1:], float(top[0]), float(bottom[0]))


def envelope_unary(rim, A):
    """CutEnvelope of the unary proportional quantifier ``rim(|S| / n)``."""
    a = as_memberships(A)
    bp = cut_breakpoints(a)
    gammas = np.r_[0.0, 0.5 * (bp[:-1] + bp[1:])]
    lo, hi = _cuts_at(a, gammas)
    n = a.size
    top = rim(hi.sum(axis=1) / n)
    bottom = rim(lo.sum(axis=1) / n)
    return CutEnvelope(bp, top[1:], bottom[1:], float(top[0]), float(bottom[0]))


def q2_top_bottom_at(rim, A, B, gamma, empty_value=None):
    """(top, bottom) of Q2 at one cut level, straight from the cut definition."""
    a, b = same_universe(A, B)
    g = np.array([float(gamma)])
    a_lo, a_hi = _cuts_at(a, g)
    b_lo, b_hi = _cuts_at(b, g)
    top, bottom = _q2_top_bottom(rim, a_lo, a_hi, b_lo, b_hi, resolve_empty_value(rim, empty_value))
    return float(top[0]), float(bottom[0])


# the fuzzification mechanisms ----------------------------------------------------------


def _rowwise(func, A, B):
    a, b = same_universe(A, B)
    if a.ndim == 1 and b.ndim == 1:
        return func(a, b)
    a2, b2 = np.broadcast_arrays(np.atleast_2d(a), np.atleast_2d(b))
    return np.array([func(x, y) for x, y in zip(a2, b2)])


def fowa_binary_q2(rim, A, B, empty_value=None):
    """F_owa applied to Q2."""
    return _rowwise(lambda a, b: envelope_q2(rim, a, b, empty_value).owa_integral(), A, B)


def mcx_binary_q2(rim, A, B, empty_value=None):
    """M_CX applied to Q2."""
    return _rowwise(lambda a, b: envelope_q2(rim, a, b, empty_value).mcx_value(), A, B)


def fowa_unary(rim, A):
    """F_owa applied to the unary proportional quantifier; equals Yager's OWA model."""
    a = as_memberships(A)
    if a.ndim == 1:
        return envelope_unary(rim, a).owa_integral()
    return np.array([envelope_unary(rim, row).owa_integral() for row in a])


def fowa_binary_q_arrow(rim, A, B):
    """F_owa applied to the implication-lifted quantifier.

    F_owa is a standard DFS, so this is Yager's OWA model over the Kleene-Dienes
    implication of A and B.
    """
    return yager_implication_binary(rim, A, B)


def fowa_brute(Q, A, B, limit=ORACLE_LIMIT):
    """F_owa of any binary semi-fuzzy quantifier through the enumeration oracle."""
    return brute_envelope(Q, A, B, limit).owa_integral()


@dataclass(frozen=True)
class FOWA(BinaryQuantifierModel):
    rim: RIMQuantifier
    empty_value: float | None = None
    name = "FOWA"

    def __call__(self, A, B):
        return fowa_binary_q2(self.rim, A, B, self.empty_value)


@dataclass(frozen=True)
class MCX(BinaryQuantifierModel):
    rim: RIMQuantifier
    empty_value: float | None = None
    name = "MCX"

    def __call__(self, A, B):
        return mcx_binary_q2(self.rim, A, B, self.empty_value)


def q2(rim, empty_value=None):
    return SemiFuzzyBinaryQuantifier("q2", rim, empty_value)


def q_arrow(rim):
    return SemiFuzzyBinaryQuantifier("q_arrow", rim)
