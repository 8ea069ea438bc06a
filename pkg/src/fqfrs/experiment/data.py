"""Decision systems and their CSV format.

Dataset files are UTF-8 CSV with a header row; every column is numeric except
the last, which holds the class label.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from fqfrs.errors import DimensionError, ParseError


@dataclass(frozen=True, eq=False)
class DecisionSystem:
    instances: np.ndarray
    labels: np.ndarray
    label_order: tuple
    feature_names: tuple = ()
    name: str = ""

    def __post_init__(self):
        X = np.asarray(self.instances, dtype=np.float64)
        y = np.asarray(self.labels, dtype=object)
        if X.ndim != 2 or X.shape[0] < 1 or X.shape[1] < 1:
            raise DimensionError(f"instances must be an n x m matrix with n, m >= 1, got {X.shape}")
        if y.shape != (X.shape[0],):
            raise DimensionError("one label per instance is required")
        if not np.all(np.isfinite(X)):
            raise ParseError("instances contain missing or non-finite values")
        order = tuple(self.label_order) if self.label_order else tuple(sorted(set(y.tolist())))
        unknown = set(y.tolist()) - set(order)
        if unknown:
            raise DimensionError(f"labels {sorted(unknown)} missing from label_order")
        object.__setattr__(self, "instances", X)
        object.__setattr__(self, "labels", y)
        object.__setattr__(self, "label_order", order)

    @classmethod
    def from_arrays(cls, instances, labels, name=""):
        labels = [str(v) for v in labels]
        return cls(np.asarray(instances, dtype=np.float64), np.array(labels, dtype=object),
                   tuple(sorted(set(labels))), name=name)

    @property
    def n_instances(self):
        return self.instances.shape[0]

    @property
    def n_features(self):
        return self.instances.shape[1]

    def subset(self, index):
        """Rows ``index``; the label order of the full system is kept."""
        return DecisionSystem(self.instances[index], self.labels[index], self.label_order,
                              self.feature_names, self.name)

    def with_labels(self, labels):
        return DecisionSystem(self.instances, np.asarray(labels, dtype=object), self.label_order,
                              self.feature_names, self.name)

    def label_codes(self):
        lookup = {c: i for i, c in enumerate(self.label_order)}
        return np.array([lookup[c] for c in self.labels], dtype=np.int64)


def load_csv(path):
    path = Path(path)
    with path.open(newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    rows = [(i + 1, r) for i, r in enumerate(rows) if r and any(cell.strip() for cell in r)]
    if not rows:
        raise ParseError(f"{path}: empty file")
    _, header = rows[0]
    if len(header) < 2:
        raise ParseError(f"{path}: need at least one feature column and a label column", row=1)
    width = len(header)
    if len(rows) == 1:
        raise ParseError(f"{path}: no data rows")

    features, labels = [], []
    for line_no, row in rows[1:]:
        if len(row) != width:
            raise ParseError(f"{path}: expected {width} fields, found {len(row)}", row=line_no)
        values = []
        for col, cell in enumerate(row[:-1], start=1):
            text = cell.strip()
            if not text:
                raise ParseError(f"{path}: blank feature cell {header[col - 1]!r}", row=line_no, column=col)
            try:
                v = float(text)
            except ValueError:
                raise ParseError(f"{path}: non-numeric feature {text!r}", row=line_no, column=col) from None
            if not math.isfinite(v):
                raise ParseError(f"{path}: non-finite feature {text!r}", row=line_no, column=col)
            values.append(v)
        label = row[-1].strip()
        if not label:
            raise ParseError(f"{path}: blank class label", row=line_no, column=width)
        features.append(values)
        labels.append(label)

    return DecisionSystem(
        np.array(features, dtype=np.float64),
        np.array(labels, dtype=object),
        tuple(sorted(set(labels))),
        tuple(h.strip() for h in header[:-1]),
        path.stem,
    )


def save_csv(ds, path):
    names = ds.feature_names or tuple(f"a{i + 1}" for i in range(ds.n_features))
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow([*names, "class"])
        for x, label in zip(ds.instances, ds.labels):
            writer.writerow([repr(float(v)) for v in x] + [label])
