"""Throughput analysis of hierarchical cooperation in wireless networks.

Closed-form delay and throughput models for a two-phase layered
cooperation scheme and its three-phase ancestor, plus optimizers for the
layer structure, regime classification over the deployment area, and
comparison sweeps. The command-line entry point lives in hiercoop.cli.
"""
from __future__ import annotations

from .area import (
    CandidateOutcome,
    Regime,
    RegimeReport,
    area_from_exponent,
    c0_tradeoff,
    classify,
    throughput_with_area,
)
from .errors import DomainError, InfeasibleError, PlanError
from .explorer import (
    SweepRow,
    compare_schemes,
    detect_crossovers,
    find_n_for_ratio,
    ratio_log_adjusted,
    ratio_original,
    ratio_original_closed_form,
)
from .optimizer import (
    LayerChoice,
    layer_choice,
    minimal_delay,
    optimal_cluster_sizes,
    optimal_top_cluster,
    rounded_size_gap,
)
from .params import (
    MAX_LAYERS,
    MIN_RATE_RATIO,
    HierarchyPlan,
    NetworkConfig,
    SchemeParams,
    derive,
    validate_plan,
)
from .recurrence import (
    TIME_SHARING_FACTOR,
    DelaySlots,
    delay_base,
    delay_closed_form,
    delay_recursive,
    integer_slot_gap,
)
from .selfcheck import SuiteResult, run_all
from .throughput import (
    ModifiedThroughput,
    ThroughputReport,
    layer_throughput,
    multihop_baseline,
    optimal_modified,
    original_optimal_layers,
    original_throughput,
    per_pair_rate,
    throughput_given_M1,
    upper_bound,
)

__version__ = "0.1.0"

__all__ = [
    "CandidateOutcome",
    "DelaySlots",
    "DomainError",
    "HierarchyPlan",
    "InfeasibleError",
    "LayerChoice",
    "MAX_LAYERS",
    "MIN_RATE_RATIO",
    "ModifiedThroughput",
    "NetworkConfig",
    "PlanError",
    "Regime",
    "RegimeReport",
    "SchemeParams",
    "SuiteResult",
    "SweepRow",
    "ThroughputReport",
    "TIME_SHARING_FACTOR",
    "area_from_exponent",
    "c0_tradeoff",
    "classify",
    "compare_schemes",
    "delay_base",
    "delay_closed_form",
    "delay_recursive",
    "derive",
    "detect_crossovers",
    "find_n_for_ratio",
    "integer_slot_gap",
    "layer_choice",
    "layer_throughput",
    "minimal_delay",
    "multihop_baseline",
    "optimal_cluster_sizes",
    "optimal_modified",
    "optimal_top_cluster",
    "original_optimal_layers",
    "original_throughput",
    "per_pair_rate",
    "ratio_log_adjusted",
    "ratio_original",
    "ratio_original_closed_form",
    "rounded_size_gap",
    "run_all",
    "throughput_given_M1",
    "throughput_with_area",
    "upper_bound",
    "validate_plan",
]
