"""Cross-scheme comparison sweeps and divergence probes.

The headline claim is that the two-phase scheme's advantage over the
three-phase one grows without bound: the ratio of their depth-optimized
throughputs is

    (beta1 * sqrt(log_beta(beta1)) / (c_n * beta))
        * beta ** (2 * (1 - sqrt(log_beta(beta1))) * sqrt(log_beta(n/2)))

and the exponent is positive because beta1 < beta. Limits are not directly
testable, so the claim is exercised as strict monotonicity on finite grids
plus threshold crossing (find_n_for_ratio). ratio_original evaluates both
the direct division and the closed form and cross-checks them with a bare
assert, so the check runs under pytest and plain python but compiles away
under -O.

compare_schemes assembles one row of named metrics per grid point. Scheme
columns hold the interference-limited values; the area factor travels in
its own column so every row keeps ratio == T1_smooth / T_orig regardless of
regime. Rows that fail carry the message in .error and the sweep continues.
"""
from __future__ import annotations

import dataclasses
import math

from .area import area_from_exponent, classify
from .errors import DomainError, InfeasibleError, PlanError
from .params import NetworkConfig, SchemeParams
from .throughput import (
    multihop_baseline,
    optimal_modified,
    original_throughput,
    per_pair_rate,
)

#: Relative tolerance for the two-route ratio cross-check.
RATIO_ROUTE_TOL = 1e-9


@dataclasses.dataclass(frozen=True)
class SweepRow:
    """Metrics for one network size; extras is empty when error is set."""

    n: int
    extras: dict[str, float]
    error: str | None = None


def ratio_original_closed_form(n: int, params: SchemeParams) -> float:
    """Throughput ratio of the two schemes from the closed-form expression."""
    if n < 4:
        raise DomainError(f"need n >= 4, got {n}")
    lg1 = math.log(n / 2.0) / math.log(params.beta1)
    c_n = (1.0 + params.R / params.Q) ** (1.0 - 1.0 / math.sqrt(lg1))
    log_b_b1 = math.log(params.beta1) / math.log(params.beta)
    lgb = math.log(n / 2.0) / math.log(params.beta)
    front = params.beta1 * math.sqrt(log_b_b1) / (c_n * params.beta)
    return front * params.beta ** (2.0 * (1.0 - math.sqrt(log_b_b1)) * math.sqrt(lgb))


def ratio_original(n: int, params: SchemeParams) -> float:
    """Two-phase over three-phase depth-optimized throughput (smooth depth).

    Computed by direct division; the closed-form route is cross-asserted to
    RATIO_ROUTE_TOL when asserts are enabled.
    """
    direct = optimal_modified(n, params).smooth.value / original_throughput(n, params)
    assert (
        abs(direct - ratio_original_closed_form(n, params)) <= RATIO_ROUTE_TOL * direct
    ), f"ratio routes disagree at n={n}"
    return direct


def ratio_log_adjusted(n: int, a: float, params: SchemeParams) -> float:
    """ratio_original divided by log_a(n); still diverges, just slower."""
    if not a > 1.0:
        raise DomainError(f"log base must exceed 1, got {a}")
    return ratio_original(n, params) / (math.log(n) / math.log(a))


def find_n_for_ratio(
    threshold: float, params: SchemeParams, n_cap: int = 2**60
) -> int | None:
    """Smallest n with ratio_original(n) >= threshold, or None past n_cap.

    Doubles from n=4 to bracket the crossing, then bisects to the integer.
    """
    if not threshold > 0:
        raise DomainError(f"threshold must be positive, got {threshold}")
    if n_cap < 4:
        raise DomainError(f"cap must be >= 4, got {n_cap}")
    lo = 4
    if ratio_original(lo, params) >= threshold:
        return lo
    hi = 8
    while True:
        if hi > n_cap:
            hi = n_cap
            if hi <= lo or ratio_original(hi, params) < threshold:
                return None
            break
        if ratio_original(hi, params) >= threshold:
            break
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ratio_original(mid, params) >= threshold:
            hi = mid
        else:
            lo = mid
    return hi


def compare_schemes(
    n_grid: list[int],
    cfg: NetworkConfig,
    params: SchemeParams,
    c_mh: float,
    log_base: float = 10.0,
    nu: float | None = None,
) -> list[SweepRow]:
    """One SweepRow of named metrics per grid point.

    Metrics: T1_smooth, T1_int (absent when no integer depth fits), T_orig,
    multihop, ratio, ratio_log_adj, per_pair, area_factor. The area grows as
    n**nu when nu is given, else stays at cfg.area. A row whose computation
    raises or produces a non-finite value is annotated and the sweep moves
    on; the grid itself must be strictly increasing.
    """
    if not n_grid:
        raise DomainError("sweep grid is empty")
    rows: list[SweepRow] = []
    prev: int | None = None
    for n in n_grid:
        if prev is not None and n <= prev:
            raise DomainError(f"grid must increase strictly, got {n} after {prev}")
        prev = n
        try:
            area = area_from_exponent(n, nu) if nu is not None else cfg.area
            geo = dataclasses.replace(cfg, n=n, area=area)
            both = optimal_modified(n, params)
            extras = {"T1_smooth": both.smooth.value}
            if both.integer is not None:
                extras["T1_int"] = both.integer.value
            extras["T_orig"] = original_throughput(n, params)
            extras["multihop"] = multihop_baseline(n, c_mh)
            extras["ratio"] = ratio_original(n, params)
            extras["ratio_log_adj"] = ratio_log_adjusted(n, log_base, params)
            extras["per_pair"] = per_pair_rate(n, params)
            extras["area_factor"] = classify(geo).factor
            for key, value in extras.items():
                if not math.isfinite(value):
                    raise DomainError(f"metric {key} is not finite at n={n}")
        except (DomainError, InfeasibleError, PlanError, ValueError, OverflowError) as exc:
            rows.append(SweepRow(n=n, extras={}, error=str(exc)))
        else:
            rows.append(SweepRow(n=n, extras=extras))
    return rows


def detect_crossovers(
    rows: list[SweepRow], metric_a: str, metric_b: str
) -> list[int]:
    """Indices where the sign of (metric_a - metric_b) flips.

    Each returned index is the first row of the new ordering. Rows missing
    either metric (errors, absent T1_int) break the comparison chain instead
    of faking a flip.
    """
    flips: list[int] = []
    prev_sign = 0
    chained = False
    for i, row in enumerate(rows):
        if row.error is not None or metric_a not in row.extras or metric_b not in row.extras:
            chained = False
            prev_sign = 0
            continue
        diff = row.extras[metric_a] - row.extras[metric_b]
        sign = (diff > 0) - (diff < 0)
        if chained and sign != 0 and prev_sign != 0 and sign != prev_sign:
            flips.append(i)
        if sign != 0:
            prev_sign = sign
        chained = True
    return flips
