"""Performance metrics and the two-sided Wilcoxon signed-rank test."""

from __future__ import annotations

import math

import numpy as np
from scipy.stats import rankdata

from fqfrs.errors import DimensionError, UndefinedStatisticError

EXACT_MAX_N = 25
MIN_NONZERO = 5


def balanced_accuracy(predicted, truth):
    """Mean per-class recall over the classes present in ``truth``."""
    predicted = np.asarray(predicted, dtype=object)
    truth = np.asarray(truth, dtype=object)
    if predicted.shape != truth.shape:
        raise DimensionError("predicted and true labels differ in length")
    if truth.size == 0:
        raise DimensionError("no labels")
    recalls = [np.mean(predicted[truth == c] == c) for c in sorted(set(truth.tolist()))]
    return float(np.mean(recalls))


def fractional_rank(scores):
    """Rank 1 for the highest score; tied scores share the mean of their ordinal ranks."""
    return rankdata(-np.asarray(scores, dtype=np.float64), method="average")


def _signed_rank_data(x, y):
    d = np.asarray(x, dtype=np.float64) - np.asarray(y, dtype=np.float64)
    if d.ndim != 1:
        raise DimensionError("wilcoxon expects 1-d samples")
    d = d[d != 0.0]
    if d.size < MIN_NONZERO:
        raise UndefinedStatisticError(
            f"only {d.size} non-zero differences; at least {MIN_NONZERO} are required"
        )
    ranks = rankdata(np.abs(d), method="average")
    return d, ranks, float(ranks[d > 0].sum())


def _exact_pvalue(ranks, w_plus):
    # ranks are multiples of 1/2; count sign assignments over doubled integer ranks
    doubled = np.rint(2.0 * ranks).astype(np.int64)
    counts = np.zeros(int(doubled.sum()) + 1, dtype=object)
    counts[0] = 1
    for r in doubled:
        shifted = np.zeros_like(counts)
        shifted[r:] = counts[: counts.size - r]
        counts = counts + shifted
    total = 2 ** ranks.size
    w = int(round(2.0 * w_plus))
    lower = sum(counts[: w + 1])
    upper = sum(counts[w:])
    return min(1.0, 2.0 * min(lower, upper) / total)


def _normal_pvalue(ranks, w_plus):
    n = ranks.size
    mean = n * (n + 1) / 4.0
    _, tie_counts = np.unique(ranks, return_counts=True)
    var = n * (n + 1) * (2 * n + 1) / 24.0 - np.sum(tie_counts ** 3 - tie_counts) / 48.0
    z = max(abs(w_plus - mean) - 0.5, 0.0) / math.sqrt(var)
    return min(1.0, math.erfc(z / math.sqrt(2.0)))


def wilcoxon_signed_rank(x, y, method="auto"):
    """Two-sided p-value of the Wilcoxon signed-rank test on paired samples.

    Zero differences are dropped and tied absolute differences get average
    ranks. ``method="auto"`` computes the exact null distribution when at most
    25 differences remain and uses the continuity-corrected normal
    approximation otherwise.
    """
    if len(x) != len(y):
        raise DimensionError("paired samples must have equal length")
    _, ranks, w_plus = _signed_rank_data(x, y)
    if method == "auto":
        method = "exact" if ranks.size <= EXACT_MAX_N else "normal"
    if method == "exact":
        return _exact_pvalue(ranks, w_plus)
    if method == "normal":
        return _normal_pvalue(ranks, w_plus)
    raise ValueError(f"unknown method {method!r}")
