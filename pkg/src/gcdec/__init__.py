"""Generalized concatenated codes with multi-attempt and interleaved-RS decoding."""

from .channel import ErrorSpec, inject_errors, monte_carlo_run
from .galois import Field
from .gc_code import DecodeReport, GCCode, GroupPlan, plan_groups
from .inner_code import NestedBinaryCode
from .interleaved_rs import IRSCode
from .reed_solomon import RSCode
from .thresholds import (
    actual_attempts,
    adversarial_efail_oracle,
    bound_collaborative,
    bound_independent,
    maximal_threshold_set,
    min_attempts_independent,
    thresholds_collaborative,
    thresholds_independent,
)

__all__ = [
    "DecodeReport",
    "ErrorSpec",
    "Field",
    "GCCode",
    "GroupPlan",
    "IRSCode",
    "NestedBinaryCode",
    "RSCode",
    "actual_attempts",
    "adversarial_efail_oracle",
    "bound_collaborative",
    "bound_independent",
    "inject_errors",
    "maximal_threshold_set",
    "min_attempts_independent",
    "monte_carlo_run",
    "plan_groups",
    "thresholds_collaborative",
    "thresholds_independent",
]
