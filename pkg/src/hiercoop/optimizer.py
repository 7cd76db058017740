"""Optimal hierarchy shaping for a fixed rate pair.

Three nested choices, each with a closed-form answer:

* For fixed depth h and top size M1, the slot bracket is a sum of h-1
  positive terms whose product does not depend on the lower layer sizes, so
  the minimum is where all terms are equal. That pins every layer size and
  gives minimal_delay.
* For fixed depth h and node budget n, the top size that balances the
  cooperative exchange slots against the long-range slots satisfies
  n = 8 * (1 + Q/R) * c**((h-2)/2) * (M1/2)**(h/(h-1)).
* The depth itself is picked by bounded argmax of the per-depth throughput
  over feasible integers; the curve is treated as a black box (no
  unimodality assumed) and ties break toward the smaller depth.

Brute-force counterparts of all three (grid search, golden section,
coordinate descent) live in the test suite and must land on the same
answers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, InfeasibleError, PlanError
from .params import MAX_LAYERS, HierarchyPlan, SchemeParams, validate_plan
from .recurrence import DelaySlots, delay_closed_form

#: A cluster must hold at least this many nodes to be worth the name.
MIN_CLUSTER = 2.0

#: Headroom added above ceil(h_approx) when no explicit depth cap is given.
DEPTH_SEARCH_MARGIN = 3


def _check_depth(h: int) -> None:
    if not isinstance(h, int) or h < 2:
        raise PlanError("h", f"layer count must be an integer >= 2, got {h!r}")
    if h > MAX_LAYERS:
        raise PlanError("h", f"layer count capped at {MAX_LAYERS}, got {h}")


def _size_at(i: int, h: int, M1: float, params: SchemeParams) -> float:
    # equal-term layer size, valid for 2 <= i <= h-1
    return (
        2.0
        * params.c ** (-((i - 1) * (h - i)) / 2.0)
        * (M1 / 2.0) ** ((h - i) / (h - 1.0))
    )


def _bottom_size(h: int, M1: float, params: SchemeParams) -> float:
    # smallest layer of the equal-term hierarchy; equals M1 itself at h=2
    return M1 if h == 2 else _size_at(h - 1, h, M1, params)


def optimal_cluster_sizes(
    h: int, M1: float, params: SchemeParams, L: float = 1.0
) -> HierarchyPlan:
    """Equal-term layer sizes below a given top size.

    Args:
        h: layer count, integer >= 2.
        M1: top-layer cluster size, >= 2.
        params: derived rate constants.
        L: bits per source block carried by the returned plan.

    Returns:
        A validated HierarchyPlan whose bracket terms are all equal.

    Raises:
        InfeasibleError: some layer would drop below MIN_CLUSTER nodes.
        PlanError: h out of range.
    """
    _check_depth(h)
    if not (math.isfinite(M1) and M1 >= MIN_CLUSTER):
        raise InfeasibleError(f"top cluster must hold >= {MIN_CLUSTER:g} nodes, got {M1}")
    sizes = [float(M1)]
    for i in range(2, h):
        m = _size_at(i, h, M1, params)
        if m < MIN_CLUSTER:
            raise InfeasibleError(
                f"layer {i} cluster size {m:.6g} falls below {MIN_CLUSTER:g} "
                f"at h={h}, M1={M1:g}"
            )
        sizes.append(m)
    plan = HierarchyPlan(h=h, sizes=tuple(sizes), L=L)
    validate_plan(plan)
    return plan


def minimal_delay(h: int, M1: float, L: float, params: SchemeParams) -> DelaySlots:
    """Slot count at the equal-term optimum.

    Evaluates 2*M1*(L/R) * (h-1) * c**((h-2)/2) * (M1/2)**(1/(h-1)) directly,
    decomposed into its h-1 equal terms; it must match delay_closed_form
    over optimal_cluster_sizes to 1e-12.
    """
    _check_depth(h)
    if not (math.isfinite(M1) and M1 >= MIN_CLUSTER):
        raise InfeasibleError(f"top cluster must hold >= {MIN_CLUSTER:g} nodes, got {M1}")
    if _bottom_size(h, M1, params) < MIN_CLUSTER:
        raise InfeasibleError(f"depth h={h} does not fit below M1={M1:g}")
    if not (math.isfinite(L) and L > 0):
        raise PlanError("L", f"bits per block must be positive, got {L}")
    term = (
        2.0
        * M1
        * (L / params.R)
        * params.c ** ((h - 2) / 2.0)
        * (M1 / 2.0) ** (1.0 / (h - 1))
    )
    return DelaySlots(slots=(h - 1) * term, decomposition=(term,) * (h - 1))


def optimal_top_cluster(h: int, n: int, params: SchemeParams) -> float:
    """Top size that balances exchange slots against long-range slots.

    Solves n = 8 * (1 + Q/R) * c**((h-2)/2) * (M1/2)**(h/(h-1)) for M1. At
    this size the phase groups stand in the ratio (P1 + P3) : P2 = (h-1) : 1.

    Raises InfeasibleError when the balancing size leaves no room for a
    cluster (M1 < 2) or exceeds the network (M1 >= n).
    """
    _check_depth(h)
    if n < 4:
        raise DomainError(f"need n >= 4, got {n}")
    load = 8.0 * (1.0 + params.Q / params.R) * params.c ** ((h - 2) / 2.0)
    M1 = 2.0 * load ** (-(h - 1.0) / h) * float(n) ** ((h - 1.0) / h)
    if M1 < MIN_CLUSTER:
        raise InfeasibleError(
            f"balanced top size {M1:.6g} is below {MIN_CLUSTER:g} at h={h}, n={n}"
        )
    if not M1 < n:
        raise InfeasibleError(f"balanced top size {M1:.6g} exceeds n={n} at h={h}")
    return M1


def _depth_value(h: int, n: int, params: SchemeParams) -> float:
    # per-depth throughput at the balanced optimum:
    #   R / (h * (1+R/Q)**((h-1)/h) * c**((h-1)/2)) * (n/2)**((h-1)/h)
    e = (h - 1.0) / h
    pre = params.R / (h * (1.0 + params.R / params.Q) ** e * params.c ** ((h - 1) / 2.0))
    return pre * (n / 2.0) ** e


def _feasible_top(h: int, n: int, params: SchemeParams) -> float:
    # combined gate: balanced top size exists and the whole depth fits
    M1 = optimal_top_cluster(h, n, params)
    if _bottom_size(h, M1, params) < MIN_CLUSTER:
        raise InfeasibleError(
            f"depth h={h} does not fit n={n}: bottom layer falls below "
            f"{MIN_CLUSTER:g} nodes"
        )
    return M1


@dataclass(frozen=True)
class LayerChoice:
    """Depth selection for one network size."""

    h_exact: float
    """Positive root of the depth stationarity condition (real-valued)."""

    h_approx: float
    """sqrt(log_beta1(n/2)), the large-n shortcut for h_exact."""

    h_int: int
    """Bounded argmax of per-depth throughput over feasible integer depths."""

    feasible: bool
    """True whenever a feasible depth exists; layer_choice raises otherwise."""


def layer_choice(n: int, params: SchemeParams, h_max: int | None = None) -> LayerChoice:
    """Pick the number of layers for n nodes.

    h_int scans integer depths 2..h_max (default ceil(h_approx) plus
    DEPTH_SEARCH_MARGIN), skips depths that do not fit the node budget, and
    keeps the best throughput, breaking ties toward fewer layers.

    Raises:
        DomainError: n < 4.
        InfeasibleError: no depth in range fits.
    """
    if n < 4:
        raise DomainError(f"need n >= 4, got {n}")
    half = math.log(n / 2.0)
    lg = half / math.log(params.beta1)
    h_approx = math.sqrt(lg)

    a = math.log(params.beta1)
    rhs = half - math.log(1.0 + params.R / params.Q)
    disc = 1.0 + 4.0 * a * rhs
    if disc < 0.0:
        raise DomainError(f"depth stationarity has no real root at n={n}")
    h_exact = (math.sqrt(disc) - 1.0) / (2.0 * a)

    if h_max is None:
        h_max = math.ceil(h_approx) + DEPTH_SEARCH_MARGIN
    h_max = max(2, min(int(h_max), MAX_LAYERS))

    best_h = 0
    best_value = -math.inf
    for h in range(2, h_max + 1):
        try:
            _feasible_top(h, n, params)
        except InfeasibleError:
            continue
        value = _depth_value(h, n, params)
        if value > best_value:
            best_h, best_value = h, value
    if best_h == 0:
        raise InfeasibleError(f"no depth in 2..{h_max} fits n={n}")
    return LayerChoice(h_exact=h_exact, h_approx=h_approx, h_int=best_h, feasible=True)


def rounded_size_gap(
    h: int, M1: float, params: SchemeParams, L: float = 1.0
) -> float:
    """Report-only: relative delay increase from rounding the fluid-optimal
    lower layer sizes to whole nodes.

    Raises PlanError if rounding collapses two adjacent layers.
    """
    plan = optimal_cluster_sizes(h, M1, params, L=L)
    rounded = HierarchyPlan(
        h=h,
        sizes=(plan.sizes[0],) + tuple(float(round(m)) for m in plan.sizes[1:]),
        L=L,
    )
    validate_plan(rounded)
    fluid = delay_closed_form(plan, params).slots
    integral = delay_closed_form(rounded, params).slots
    return (integral - fluid) / fluid
