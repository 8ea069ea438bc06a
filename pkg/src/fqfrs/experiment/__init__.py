"""Noisy-label classification experiment built on the lower approximation."""

from fqfrs.experiment.data import DecisionSystem, load_csv, save_csv
from fqfrs.experiment.protocol import (
    classify,
    inject_label_noise,
    lower_memberships,
    similarity_relation,
    stratified_kfold,
)
from fqfrs.experiment.stats import balanced_accuracy, fractional_rank, wilcoxon_signed_rank
from fqfrs.experiment.sweep import ExperimentConfig, ResultsTable, run_sweep, write_outputs

__all__ = [
    "DecisionSystem",
    "ExperimentConfig",
    "ResultsTable",
    "balanced_accuracy",
    "classify",
    "fractional_rank",
    "inject_label_noise",
    "load_csv",
    "lower_memberships",
    "run_sweep",
    "save_csv",
    "similarity_relation",
    "stratified_kfold",
    "wilcoxon_signed_rank",
    "write_outputs",
]
