"""Command-line interface.

Exit codes: 0 success, 1 domain or validation error, 2 I/O or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from pathlib import Path

import numpy as np

from fqfrs.errors import FQFRSError, ParseError
from fqfrs.experiment import (
    ExperimentConfig,
    ResultsTable,
    balanced_accuracy,
    classify,
    load_csv,
    run_sweep,
    write_outputs,
)
from fqfrs.experiment.sweep import PLOT_COLUMNS, STATS_COLUMNS, fmt
from fqfrs.frs import lower_approximation, named_model, upper_approximation
from fqfrs.rim import EXISTENTIAL, parse_rim

OUTPUT_DIR_ENV = "FQFRS_OUTPUT_DIR"
QUANTIFY_MODELS = ("owa", "wowa", "ywi", "zad", "fowa", "mcx", "frs")

EXIT_OK, EXIT_DOMAIN, EXIT_IO = 0, 1, 2


def _num(x):
    return format(float(x), ".12g")


def _read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc.msg}", row=exc.lineno, column=exc.colno) from None


def _vector(data, key, path):
    if isinstance(data, dict):
        if key not in data:
            raise ParseError(f"{path}: missing key {key!r}")
        data = data[key]
    if not isinstance(data, list) or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in data):
        raise ParseError(f"{path}: {key!r} must be a list of numbers")
    return np.asarray(data, dtype=np.float64)


def _read_matrix(path):
    rows = []
    with open(path, newline="", encoding="utf-8") as fh:
        for i, row in enumerate(csv.reader(fh), start=1):
            if not row or not any(c.strip() for c in row):
                continue
            try:
                rows.append([float(c) for c in row])
            except ValueError:
                raise ParseError(f"{path}: non-numeric relation entry", row=i) from None
    if not rows:
        raise ParseError(f"{path}: empty relation")
    if len({len(r) for r in rows}) != 1:
        raise ParseError(f"{path}: ragged relation rows")
    return np.asarray(rows, dtype=np.float64)


def _write_table(columns, rows, out):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    w.writerows(rows)
    if out is None:
        sys.stdout.write(buf.getvalue())
    else:
        Path(out).write_text(buf.getvalue(), encoding="utf-8")


def cmd_quantify(args):
    data = _read_json(args.inputs)
    A = _vector(data, "A", args.inputs)
    B = _vector(data, "B", args.inputs)
    spec = named_model(args.model, parse_rim(args.rim))
    print(_num(spec.lower_model(A, B)))


def cmd_approx(args):
    R = _read_matrix(args.relation)
    A = _vector(_read_json(args.concept), "A", args.concept)
    upper_rim = parse_rim(args.upper_rim) if args.upper_rim else EXISTENTIAL
    spec = named_model(args.model, parse_rim(args.rim), upper_rim)
    lower = lower_approximation(spec, R, A).memberships
    if args.upper:
        upper = upper_approximation(spec, R, A).memberships
        _write_table(("lower", "upper"), [(_num(lo), _num(up)) for lo, up in zip(lower, upper)], None)
    else:
        _write_table(("lower",), [(_num(v),) for v in lower], None)


def cmd_classify(args):
    train = load_csv(args.train)
    test = load_csv(args.test)
    spec = named_model(args.model, parse_rim(args.rim))
    predicted = classify(train, test.instances, spec)
    for label in predicted:
        print(label)
    print(f"balanced_accuracy={fmt(balanced_accuracy(predicted, test.labels))}", file=sys.stderr)


def cmd_experiment(args):
    raw = _read_json(args.config)
    config = ExperimentConfig.from_dict(raw, base_dir=Path(args.config).resolve().parent)
    if args.seed is not None:
        config = config.with_seed(args.seed)
    if args.jobs is not None:
        config = ExperimentConfig(config.models, config.a_grid, config.datasets, config.folds,
                                  config.noise_fraction, config.seed, args.jobs)
    out_dir = args.out or os.environ.get(OUTPUT_DIR_ENV) or "results"
    table = run_sweep(config)
    for name, message in table.errors.items():
        print(f"skipped {name}: {message}", file=sys.stderr)
    if not table.rows:
        print("error: no dataset could be processed", file=sys.stderr)
        return EXIT_IO
    paths = write_outputs(table, out_dir)
    print(f"{len(table.rows)} result rows from {len(table.datasets())} dataset(s)")
    for (model, a), value in sorted(table.mean_balanced_accuracy().items(), key=lambda kv: (kv[0][1], kv[0][0])):
        print(f"a={fmt(a)} {model} mean_balanced_accuracy={fmt(value)}")
    for p in paths:
        print(f"wrote {p}")
    return EXIT_OK


def cmd_stats(args):
    table = ResultsTable.from_csv(args.results)
    rows = [(fmt(a), m1, m2, fmt(p)) for a, m1, m2, p in table.pairwise_pvalues()]
    _write_table(STATS_COLUMNS, rows, args.out)


def cmd_plotdata(args):
    table = ResultsTable.from_csv(args.results)
    rows = [(fmt(a), m, fmt(ba), fmt(r)) for a, m, ba, r in table.plot_rows()]
    _write_table(PLOT_COLUMNS, rows, args.out)


def build_parser():
    parser = argparse.ArgumentParser(prog="fqfrs", description="Fuzzy quantifier-based fuzzy rough sets.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("quantify", help='evaluate "Q A\'s are B\'s" for one pair of fuzzy sets')
    p.add_argument("--model", required=True, help=f"one of {', '.join(QUANTIFY_MODELS)}")
    p.add_argument("--rim", default="forall", help="forall, exists, id, gt:k, geq:k or s:alpha,beta")
    p.add_argument("--in", dest="inputs", required=True, help='JSON file {"A": [...], "B": [...]}')
    p.set_defaults(func=cmd_quantify)

    p = sub.add_parser("approx", help="lower (and upper) approximation of a concept")
    p.add_argument("--relation", required=True, help="CSV matrix, R[x][y] in row x, column y")
    p.add_argument("--concept", required=True, help='JSON list or {"A": [...]}')
    p.add_argument("--model", default="frs")
    p.add_argument("--rim", default="forall")
    p.add_argument("--upper", action="store_true", help="also print the upper approximation")
    p.add_argument("--upper-rim", default=None, help="quantifier of the upper approximation (default exists)")
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("classify", help="lower-approximation classifier")
    p.add_argument("--train", required=True)
    p.add_argument("--test", required=True)
    p.add_argument("--model", default="frs")
    p.add_argument("--rim", default="forall")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("experiment", help="run the noisy-label cross-validation sweep")
    p.add_argument("config", help="JSON experiment configuration")
    p.add_argument("--out", default=None, help=f"output directory (default ${OUTPUT_DIR_ENV} or ./results)")
    p.add_argument("--seed", type=int, default=None, help="override the config seed")
    p.add_argument("--jobs", type=int, default=None, help="worker processes")
    p.set_defaults(func=cmd_experiment)

    for name, func, text in (("stats", cmd_stats, "pairwise Wilcoxon p-values"),
                             ("plotdata", cmd_plotdata, "mean accuracy and rank per (a, model)")):
        p = sub.add_parser(name, help=f"{text} from a results CSV")
        p.add_argument("results")
        p.add_argument("--out", default=None, help="write CSV here instead of stdout")
        p.set_defaults(func=func)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        code = args.func(args)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (FQFRSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
