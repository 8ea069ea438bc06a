"""Similarity relation, label noise, stratified folds and the lower-approximation classifier."""

from __future__ import annotations

import math

import numpy as np

from fqfrs.errors import ConfigurationError, DimensionError


def attribute_scales(instances):
    """Per-attribute standard deviation (population form) of the training data."""
    return np.std(np.asarray(instances, dtype=np.float64), axis=0)


def similarity_relation(train, queries, scales=None):
    """Similarity of every query to every training instance.

    Returns an array of shape ``(len(queries), n_train)``; row j is the foreset
    of query j over the training universe::

        R(x, y) = mean_a max(1 - |a(y) - a(x)| / sigma_a, 0)

    Attributes with ``sigma_a == 0`` contribute similarity 1.
    """
    X = np.asarray(getattr(train, "instances", train), dtype=np.float64)
    Q = np.asarray(getattr(queries, "instances", queries), dtype=np.float64)
    if Q.ndim == 1:
        Q = Q[None, :]
    if Q.shape[1] != X.shape[1]:
        raise DimensionError(f"queries have {Q.shape[1]} features, training data {X.shape[1]}")
    sigma = attribute_scales(X) if scales is None else np.asarray(scales, dtype=np.float64)
    total = np.zeros((Q.shape[0], X.shape[0]))
    for a in range(X.shape[1]):
        if sigma[a] == 0.0:
            total += 1.0
            continue
        diff = np.abs(Q[:, a, None] - X[None, :, a]) / sigma[a]
        total += np.maximum(1.0 - diff, 0.0)
    return np.clip(total / X.shape[1], 0.0, 1.0)


def inject_label_noise(ds, fraction, seed):
    """Replace the labels of ``floor(fraction * n)`` random instances by a different label."""
    if not 0.0 <= fraction <= 1.0:
        raise ConfigurationError(f"noise fraction must lie in [0, 1], got {fraction}")
    n = ds.n_instances
    # the epsilon keeps e.g. 0.29 * 100 from flooring to 28
    count = min(n, math.floor(fraction * n + 1e-9))
    if count == 0:
        return ds
    if len(ds.label_order) < 2:
        raise ConfigurationError("label noise needs at least two classes")
    rng = np.random.default_rng(seed)
    chosen = rng.choice(n, size=count, replace=False)
    labels = ds.labels.copy()
    for i in chosen:
        others = [c for c in ds.label_order if c != labels[i]]
        labels[i] = others[rng.integers(len(others))]
    return ds.with_labels(labels)


def stratified_kfold(labels, k, seed):
    """Fold id (0..k-1) per instance; per-class fold counts differ by at most one."""
    labels = np.asarray(getattr(labels, "labels", labels), dtype=object)
    n = labels.size
    if k < 2:
        raise ConfigurationError("need at least 2 folds")
    if k > n:
        raise ConfigurationError(f"{k} folds requested for {n} instances")
    rng = np.random.default_rng(seed)
    folds = np.empty(n, dtype=np.int64)
    offset = 0
    for cls in sorted(set(labels.tolist())):
        idx = np.flatnonzero(labels == cls)
        rng.shuffle(idx)
        folds[idx] = (offset + np.arange(idx.size)) % k
        offset = (offset + idx.size) % k
    return folds


def lower_memberships(train, test_instances, spec, scales=None):
    """Lower-approximation membership of each test instance to each training class.

    Returns ``(classes, memberships)`` where ``memberships[i, j]`` belongs to
    ``classes[j]``; classes follow the label order and skip classes absent from
    the training data.
    """
    if train.n_instances == 0:
        raise ConfigurationError("empty training set")
    S = similarity_relation(train, test_instances, scales)
    present = set(train.labels.tolist())
    classes = [c for c in train.label_order if c in present]
    out = np.empty((S.shape[0], len(classes)))
    for j, c in enumerate(classes):
        concept = (train.labels == c).astype(np.float64)
        out[:, j] = spec.lower_model(S, concept)
    return classes, out


def classify(train, test_instances, spec, scales=None):
    """Assign each test instance the class with the largest lower-approximation membership.

    Ties go to the earliest class in the training system's label order.
    """
    classes, memberships = lower_memberships(train, test_instances, spec, scales)
    best = np.argmax(memberships, axis=1)
    return np.array([classes[i] for i in best], dtype=object)
