"""Aggregate throughput of the hierarchical schemes.

The modified (two-phase) scheme serves n*M1 source blocks of L bits in
three slot groups: cooperative exchange within top clusters (P1), one
long-range transmission per source (P2), and the re-encoded exchange that
replaces the original's separate delivery phase (P3 = P1 * Q/R). Dividing
bits served by total slots and optimizing M1, then the depth h, yields the
closed forms below.

Two conventions coexist and are reported side by side:

* smooth: depth treated as the real number sqrt(log_beta1(n/2)), giving the
  scaling-law expression beta1*R/(c_n*sqrt(lg)) * (n/2)**(1 - 2/sqrt(lg)).
* integer: depth from layer_choice, throughput from the per-depth closed
  form. Only this one respects the upper bound at every n; the smooth
  curve may poke above it when sqrt(lg) < 1/c_n.

original_throughput is the three-phase counterpart kept for head-to-head
sweeps; multihop_baseline is the flat nearest-neighbor reference.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, InfeasibleError
from .optimizer import (
    _check_depth,
    _depth_value,
    _feasible_top,
    layer_choice,
    minimal_delay,
)
from .params import SchemeParams
from .recurrence import TIME_SHARING_FACTOR


@dataclass(frozen=True)
class ThroughputReport:
    """One throughput figure plus the pieces it was assembled from."""

    value: float
    """Aggregate rate in bits per slot."""

    h_used: float
    """Layer count behind the figure; real-valued for the smooth convention."""

    M1_used: float | None
    """Top cluster size, when one was materialized."""

    phase_slots: tuple[float, float, float] | None
    """(P1, P2, P3) slot counts, when the figure came from an explicit plan."""

    pre_constant: float
    """value / (n/2)**exponent, the scaling-law front factor."""

    exponent: float
    """Exponent of n/2 in the scaling law."""

    c_n: float | None = None
    """Slowly varying correction (1 + R/Q)**(1 - 1/sqrt(lg)), smooth only."""

    factor: float = 1.0
    """Area attenuation applied on top (1.0 unless classified sparse)."""


@dataclass(frozen=True)
class ModifiedThroughput:
    """Smooth and integer-depth readings of the two-phase scheme."""

    smooth: ThroughputReport
    integer: ThroughputReport | None

    @property
    def value(self) -> float:
        return self.smooth.value


def throughput_given_M1(
    h: int, M1: float, n: int, L: float, params: SchemeParams
) -> ThroughputReport:
    """Throughput of an explicit (h, M1) design at the equal-term sizes.

    Builds the three phase groups and divides bits served by slots spent;
    no balancing of M1 is applied, so this is the curve layer_throughput
    maximizes.
    """
    _check_depth(h)
    if n < 4:
        raise DomainError(f"need n >= 4, got {n}")
    if not M1 <= n:
        raise InfeasibleError(f"top cluster {M1:g} exceeds n={n}")
    exchange = TIME_SHARING_FACTOR * minimal_delay(h, M1, L, params).slots
    long_range = 2.0 * n * L / params.R
    re_exchange = exchange * params.Q / params.R
    total = exchange + long_range + re_exchange
    value = n * M1 * L / total
    exponent = (h - 1.0) / h
    return ThroughputReport(
        value=value,
        h_used=float(h),
        M1_used=float(M1),
        phase_slots=(exchange, long_range, re_exchange),
        pre_constant=value / (n / 2.0) ** exponent,
        exponent=exponent,
    )


def layer_throughput(h: int, n: int, params: SchemeParams) -> ThroughputReport:
    """Best throughput at a fixed integer depth: M1 balanced, sizes equal-term.

    Closed form R / (h * (1+R/Q)**((h-1)/h) * c**((h-1)/2)) * (n/2)**((h-1)/h);
    agrees with throughput_given_M1 at the balanced M1 to 1e-9.
    """
    M1 = _feasible_top(h, n, params)
    value = _depth_value(h, n, params)
    exponent = (h - 1.0) / h
    return ThroughputReport(
        value=value,
        h_used=float(h),
        M1_used=M1,
        phase_slots=None,
        pre_constant=value / (n / 2.0) ** exponent,
        exponent=exponent,
    )


def optimal_modified(
    n: int, params: SchemeParams, h_max: int | None = None
) -> ModifiedThroughput:
    """Depth-optimized throughput of the two-phase scheme.

    The smooth report uses h = sqrt(log_beta1(n/2)) as a real number. The
    integer report optimizes over feasible integer depths and is None when
    no depth fits the node budget (tiny n at large beta1).
    """
    if n < 4:
        raise DomainError(f"need n >= 4, got {n}")
    lg = math.log(n / 2.0) / math.log(params.beta1)
    if lg <= 0.0:
        raise DomainError(f"n/2 must exceed 1, got n={n}")
    root = math.sqrt(lg)
    c_n = (1.0 + params.R / params.Q) ** (1.0 - 1.0 / root)
    exponent = 1.0 - 2.0 / root
    pre = params.beta1 * params.R / (c_n * root)
    smooth = ThroughputReport(
        value=pre * (n / 2.0) ** exponent,
        h_used=root,
        M1_used=None,
        phase_slots=None,
        pre_constant=pre,
        exponent=exponent,
        c_n=c_n,
    )
    try:
        choice = layer_choice(n, params, h_max=h_max)
    except InfeasibleError:
        integer = None
    else:
        integer = layer_throughput(choice.h_int, n, params)
    return ModifiedThroughput(smooth=smooth, integer=integer)


def upper_bound(n: int, params: SchemeParams) -> float:
    """Envelope beta1 * R * (n/2)**(1 - 2/sqrt(lg)) over integer-depth curves.

    Every layer_throughput(h, n, ...) stays at or below this; the smooth
    convention does not, so never test it against this bound.
    """
    if n < 4:
        raise DomainError(f"need n >= 4, got {n}")
    lg = math.log(n / 2.0) / math.log(params.beta1)
    if lg <= 0.0:
        raise DomainError(f"n/2 must exceed 1, got n={n}")
    return params.beta1 * params.R * (n / 2.0) ** (1.0 - 2.0 / math.sqrt(lg))


def original_optimal_layers(n: int, beta: float) -> float:
    """Real-valued optimal depth sqrt(log_beta(n/2)) of the three-phase scheme."""
    if beta <= 1.0:
        raise DomainError(f"depth base must exceed 1, got {beta}")
    if n < 4:
        raise DomainError(f"need n >= 4, got {n}")
    return math.sqrt(math.log(n / 2.0) / math.log(beta))


def original_throughput(n: int, params: SchemeParams) -> float:
    """Smooth-depth throughput of the three-phase scheme.

    beta * R / sqrt(log_beta(n/2)) * (n/2)**(1 - 2/sqrt(log_beta(n/2))) with
    beta = 2*sqrt(1 + Q/R); the extra delivery phase is what moves beta1 to
    beta and drops the c_n correction.
    """
    h = original_optimal_layers(n, params.beta)
    return params.beta * params.R / h * (n / 2.0) ** (1.0 - 2.0 / h)


def multihop_baseline(n: int, c_mh: float) -> float:
    """Nearest-neighbor relaying reference c_mh * sqrt(n).

    The constant absorbs bandwidth and path-loss details, so callers must
    supply it explicitly.
    """
    if not (math.isfinite(c_mh) and c_mh > 0):
        raise DomainError(f"multihop constant must be positive, got {c_mh}")
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    return c_mh * math.sqrt(n)


def per_pair_rate(n: int, params: SchemeParams) -> float:
    """Smooth-convention throughput share of one source-destination pair.

    Equals beta1*R/(c_n*sqrt(lg)) * (1/2) * beta1**(-2*sqrt(lg)); almost flat
    in n, which is the scheme's selling point.
    """
    return optimal_modified(n, params).smooth.value / n
