"""Noisy-label cross-validation sweep over quantifier models and the a-grid."""

from __future__ import annotations

import csv
import itertools
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from fqfrs.errors import ConfigurationError, FQFRSError, ParseError, UndefinedStatisticError
from fqfrs.experiment.data import load_csv
from fqfrs.experiment.protocol import (
    attribute_scales,
    classify,
    inject_label_noise,
    stratified_kfold,
)
from fqfrs.experiment.stats import balanced_accuracy, fractional_rank, wilcoxon_signed_rank
from fqfrs.frs import MODEL_NAMES, named_model
from fqfrs.rim import ZadehS

log = logging.getLogger(__name__)

RESULT_COLUMNS = ("dataset", "model", "a", "fold", "balanced_accuracy")
STATS_COLUMNS = ("a", "model_1", "model_2", "p_value")
PLOT_COLUMNS = ("a", "model", "mean_balanced_accuracy", "mean_fractional_rank")


def fmt(x):
    """10 significant digits, locale independent; NaN as ``nan``."""
    return "nan" if math.isnan(x) else format(float(x), ".10g")


@dataclass(frozen=True)
class ExperimentConfig:
    models: tuple
    a_grid: tuple
    datasets: tuple
    folds: int = 5
    noise_fraction: float = 0.2
    seed: int = 0
    jobs: int = 1

    def __post_init__(self):
        errors = []
        if not self.models:
            errors.append("models: at least one model is required")
        for m in self.models:
            if m not in MODEL_NAMES:
                errors.append(f"models: unknown model {m!r} (expected one of {', '.join(MODEL_NAMES)})")
        if not self.a_grid and any(m != "FRS" for m in self.models):
            errors.append("a_grid: at least one value is required")
        for a in self.a_grid:
            if not (isinstance(a, (int, float)) and 0.0 <= a < 1.0):
                errors.append(f"a_grid: {a!r} is outside [0, 1); use model FRS for the universal quantifier")
        if len(set(self.a_grid)) != len(self.a_grid):
            errors.append("a_grid: duplicate values")
        if not isinstance(self.folds, int) or self.folds < 2:
            errors.append(f"folds: must be an integer >= 2, got {self.folds!r}")
        if not (isinstance(self.noise_fraction, (int, float)) and 0.0 <= self.noise_fraction <= 1.0):
            errors.append(f"noise_fraction: must lie in [0, 1], got {self.noise_fraction!r}")
        if not isinstance(self.seed, int) or not 0 <= self.seed < 2 ** 64:
            errors.append(f"seed: must be an unsigned 64-bit integer, got {self.seed!r}")
        if not self.datasets:
            errors.append("datasets: at least one dataset path is required")
        if not isinstance(self.jobs, int) or self.jobs < 1:
            errors.append(f"jobs: must be a positive integer, got {self.jobs!r}")
        if errors:
            raise ConfigurationError("; ".join(errors))

    @classmethod
    def from_dict(cls, data, base_dir=None):
        if not isinstance(data, dict):
            raise ConfigurationError("config must be a JSON object")
        known = {"models", "a_grid", "datasets", "folds", "noise_fraction", "seed", "jobs"}
        extra = sorted(set(data) - known)
        if extra:
            raise ConfigurationError(f"unknown config fields: {', '.join(extra)}")
        missing = [k for k in ("models", "a_grid", "datasets") if k not in data]
        if missing:
            raise ConfigurationError(f"missing config fields: {', '.join(missing)}")
        for key in ("models", "a_grid", "datasets"):
            if not isinstance(data[key], list):
                raise ConfigurationError(f"{key}: must be a list")
        datasets = [str(p) for p in data["datasets"]]
        if base_dir is not None:
            datasets = [str(Path(base_dir) / p) if not Path(p).is_absolute() else p for p in datasets]
        return cls(
            models=tuple(str(m).upper() for m in data["models"]),
            a_grid=tuple(data["a_grid"]),
            datasets=tuple(datasets),
            folds=data.get("folds", 5),
            noise_fraction=data.get("noise_fraction", 0.2),
            seed=data.get("seed", 0),
            jobs=data.get("jobs", 1),
        )

    def with_seed(self, seed):
        return ExperimentConfig(self.models, self.a_grid, self.datasets, self.folds,
                                self.noise_fraction, seed, self.jobs)


@dataclass
class ResultsTable:
    rows: list = field(default_factory=list)
    errors: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.rows)

    def datasets(self):
        return list(dict.fromkeys(r[0] for r in self.rows))

    def models(self):
        return list(dict.fromkeys(r[1] for r in self.rows))

    def a_values(self):
        return sorted(set(r[2] for r in self.rows))

    def to_csv(self, path):
        with Path(path).open("w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(RESULT_COLUMNS)
            for d, m, a, k, ba in self.rows:
                w.writerow([d, m, fmt(a), k, fmt(ba)])

    @classmethod
    def from_csv(cls, path):
        with Path(path).open(newline="", encoding="utf-8") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header is None or tuple(h.strip() for h in header) != RESULT_COLUMNS:
                raise ParseError(f"{path}: expected header {','.join(RESULT_COLUMNS)}", row=1)
            rows = []
            for i, row in enumerate(reader, start=2):
                if not row:
                    continue
                if len(row) != len(RESULT_COLUMNS):
                    raise ParseError(f"{path}: expected {len(RESULT_COLUMNS)} fields", row=i)
                try:
                    rows.append((row[0], row[1], float(row[2]), int(row[3]), float(row[4])))
                except ValueError as exc:
                    raise ParseError(f"{path}: {exc}", row=i) from None
        return cls(rows)

    def dataset_means(self):
        """Mean balanced accuracy over folds, keyed by (dataset, model, a)."""
        groups = {}
        for d, m, a, _, ba in self.rows:
            groups.setdefault((d, m, a), []).append(ba)
        return {key: float(np.mean(v)) for key, v in groups.items()}

    def mean_balanced_accuracy(self):
        """Mean over datasets of the per-dataset fold means, keyed by (model, a)."""
        groups = {}
        for (d, m, a), v in self.dataset_means().items():
            groups.setdefault((m, a), []).append(v)
        return {key: float(np.mean(v)) for key, v in groups.items()}

    def mean_fractional_rank(self):
        """Per (dataset, a) the models are ranked on fold-mean accuracy; ranks averaged over datasets."""
        means = self.dataset_means()
        models = self.models()
        ranks = {}
        for d, a in itertools.product(self.datasets(), self.a_values()):
            present = [m for m in models if (d, m, a) in means]
            if not present:
                continue
            r = fractional_rank([means[(d, m, a)] for m in present])
            for m, v in zip(present, r):
                ranks.setdefault((m, a), []).append(float(v))
        return {key: float(np.mean(v)) for key, v in ranks.items()}

    def pairwise_pvalues(self):
        """Two-sided Wilcoxon p-values per a for every model pair over paired (dataset, fold) units.

        Pairs with too few non-zero differences get NaN.
        """
        lookup = {(d, m, a, k): ba for d, m, a, k, ba in self.rows}
        units = sorted(set((d, k) for d, _, _, k, _ in self.rows))
        out = []
        models = self.models()
        for a in self.a_values():
            for m1, m2 in itertools.combinations(models, 2):
                pairs = [(lookup[(d, m1, a, k)], lookup[(d, m2, a, k)]) for d, k in units
                         if (d, m1, a, k) in lookup and (d, m2, a, k) in lookup]
                try:
                    x, y = zip(*pairs) if pairs else ((), ())
                    p = wilcoxon_signed_rank(list(x), list(y))
                except UndefinedStatisticError:
                    p = float("nan")
                out.append((a, m1, m2, p))
        return out

    def write_stats_csv(self, path):
        with Path(path).open("w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(STATS_COLUMNS)
            for a, m1, m2, p in self.pairwise_pvalues():
                w.writerow([fmt(a), m1, m2, fmt(p)])

    def plot_rows(self):
        ba = self.mean_balanced_accuracy()
        rank = self.mean_fractional_rank()
        return [(a, m, ba[(m, a)], rank[(m, a)])
                for a in self.a_values() for m in self.models() if (m, a) in ba]

    def write_plot_csv(self, path):
        with Path(path).open("w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(PLOT_COLUMNS)
            for a, m, ba, r in self.plot_rows():
                w.writerow([fmt(a), m, fmt(ba), fmt(r)])


def _prepare(config, index, path):
    """Load a dataset, inject noise and assign folds from seeds derived from (seed, index)."""
    ds = load_csv(path)
    noise_seq, fold_seq = np.random.SeedSequence([config.seed, index]).spawn(2)
    noisy = inject_label_noise(ds, config.noise_fraction, noise_seq)
    folds = stratified_kfold(noisy, config.folds, fold_seq)
    return noisy, folds


def _run_fold(args):
    name, ds, folds, k, models, a_grid = args
    train = ds.subset(folds != k)
    test = ds.subset(folds == k)
    scales = attribute_scales(train.instances)
    rows = []
    for m in models:
        if m == "FRS":
            # FRS has no quantifier parameter: evaluated once, reported at every a
            ba = balanced_accuracy(classify(train, test.instances, named_model("FRS"), scales), test.labels)
            rows.extend((name, m, float(a), k, ba) for a in (a_grid or (0.0,)))
            continue
        for a in a_grid:
            spec = named_model(m, ZadehS(float(a), 1.0))
            ba = balanced_accuracy(classify(train, test.instances, spec, scales), test.labels)
            rows.append((name, m, float(a), k, ba))
    return rows


def _dataset_names(paths):
    names, seen = [], {}
    for p in paths:
        stem = Path(p).stem
        seen[stem] = seen.get(stem, 0) + 1
        names.append(stem if seen[stem] == 1 else f"{stem}_{seen[stem]}")
    return names


def run_sweep(config):
    """Evaluate every (dataset, model, a, fold); a dataset that fails to load is reported and skipped."""
    tasks = []
    errors = {}
    for index, (name, path) in enumerate(zip(_dataset_names(config.datasets), config.datasets)):
        try:
            ds, folds = _prepare(config, index, path)
        except (OSError, FQFRSError) as exc:
            log.warning("skipping dataset %s: %s", path, exc)
            errors[name] = str(exc)
            continue
        for k in range(config.folds):
            tasks.append((name, ds, folds, k, config.models, config.a_grid))

    if config.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            chunks = list(pool.map(_run_fold, tasks))
    else:
        chunks = [_run_fold(t) for t in tasks]

    order_d = {n: i for i, n in enumerate(_dataset_names(config.datasets))}
    order_m = {m: i for i, m in enumerate(config.models)}
    rows = sorted(itertools.chain.from_iterable(chunks),
                  key=lambda r: (order_d[r[0]], order_m[r[1]], r[2], r[3]))
    return ResultsTable(rows, errors)


def write_outputs(table, out_dir):
    """Write results.csv, stats.csv and plot_data.csv; returns the three paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = (out_dir / "results.csv", out_dir / "stats.csv", out_dir / "plot_data.csv")
    table.to_csv(paths[0])
    table.write_stats_csv(paths[1])
    table.write_plot_csv(paths[2])
    return paths
