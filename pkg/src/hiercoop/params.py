"""Model parameters: link rates, derived growth constants, network geometry,
and hierarchy plans.

Two rates drive everything. R is the rate of a long-range transmission
between distant nodes; Q is the rate at which quantized observations are
shuffled around inside a cluster. Their ratio fixes the constants

    beta1 = 2*sqrt(Q/R)        growth base of the two-phase scheme
    beta  = 2*sqrt(1 + Q/R)    growth base of the three-phase ancestor
    c     = 4*Q/R = beta1**2   per-layer slot inflation in the delay bracket

Deeper hierarchies only pay off when beta1 > 1, i.e. Q/R > 1/4; derive()
rejects anything else.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, PlanError

#: Hard cap on hierarchy depth; guards runaway recursion on pathological input.
MAX_LAYERS = 64

#: Q/R at or below this, extra layers stop paying for themselves.
MIN_RATE_RATIO = 0.25


@dataclass(frozen=True)
class SchemeParams:
    """Rate pair plus the constants derived from it.

    Build instances with derive(); constructing directly bypasses the
    consistency relations between the fields (tests use that to inject
    deliberately corrupted constants).
    """

    R: float
    """Rate of a long-range node-to-node transmission."""

    Q: float
    """Rate of the in-cluster quantized-observation exchange."""

    beta1: float
    """2*sqrt(Q/R); per-layer growth base of the two-phase scheme."""

    beta: float
    """2*sqrt(1 + Q/R); growth base of the three-phase ancestor."""

    c: float
    """4*Q/R; slot inflation factor per hierarchy layer."""

    def __post_init__(self) -> None:
        if not (math.isfinite(self.R) and self.R > 0):
            raise DomainError(f"R must be positive and finite, got {self.R}")
        if not (math.isfinite(self.Q) and self.Q > 0):
            raise DomainError(f"Q must be positive and finite, got {self.Q}")


def derive(R: float, Q: float) -> SchemeParams:
    """Derive the growth constants for the rate pair (R, Q).

    Raises DomainError unless both rates are positive and Q/R > 1/4, the
    region where beta1 > 1 and depth can help.
    """
    if not (math.isfinite(R) and R > 0 and math.isfinite(Q) and Q > 0):
        raise DomainError(f"rates must be positive and finite, got R={R}, Q={Q}")
    ratio = Q / R
    if ratio <= MIN_RATE_RATIO:
        raise DomainError(
            f"Q/R must exceed {MIN_RATE_RATIO} for layering to gain, got {ratio:g}"
        )
    return SchemeParams(
        R=float(R),
        Q=float(Q),
        beta1=2.0 * math.sqrt(ratio),
        beta=2.0 * math.sqrt(1.0 + ratio),
        c=4.0 * ratio,
    )


@dataclass(frozen=True)
class NetworkConfig:
    """Network size and geometry."""

    n: int
    """Number of nodes; at least 4."""

    area: float = 1.0
    """Physical area of the square deployment region."""

    alpha: float = 3.0
    """Path-loss exponent; at least 2."""

    c0: float = 1.0
    """Power-threshold constant separating the dense and sparse regimes."""

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 4:
            raise ValueError(f"n must be an integer >= 4, got {self.n!r}")
        if not (math.isfinite(self.area) and self.area > 0):
            raise ValueError(f"area must be positive and finite, got {self.area}")
        if not (math.isfinite(self.alpha) and self.alpha >= 2):
            raise ValueError(f"alpha must be >= 2, got {self.alpha}")
        if not (math.isfinite(self.c0) and self.c0 > 0):
            raise ValueError(f"c0 must be positive and finite, got {self.c0}")


@dataclass(frozen=True)
class HierarchyPlan:
    """A concrete hierarchy: h layers and the cluster size at each of them.

    sizes holds (M1, ..., M_{h-1}) top-down: sizes[0] is the top-layer
    cluster size, each further entry the size one layer below. Sizes are
    real-valued; the fluid relaxation is the primary model. L is the number
    of bits in each source block.

    Construction does not validate, so tests can build broken plans on
    purpose; validate_plan() checks the structural invariants.
    """

    h: int
    sizes: tuple[float, ...]
    L: float = 1.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "sizes", tuple(float(m) for m in self.sizes))


def validate_plan(plan: HierarchyPlan) -> None:
    """Raise PlanError naming the first violated invariant; return None if valid."""
    if not isinstance(plan.h, int) or plan.h < 2:
        raise PlanError("h", f"layer count must be an integer >= 2, got {plan.h!r}")
    if plan.h > MAX_LAYERS:
        raise PlanError("h", f"layer count capped at {MAX_LAYERS}, got {plan.h}")
    if len(plan.sizes) != plan.h - 1:
        raise PlanError(
            "sizes", f"need h-1 = {plan.h - 1} cluster sizes, got {len(plan.sizes)}"
        )
    for i, m in enumerate(plan.sizes):
        if not (math.isfinite(m) and m >= 2.0):
            raise PlanError("sizes", f"cluster size at index {i} must be >= 2, got {m}")
    for i in range(len(plan.sizes) - 1):
        if not plan.sizes[i] > plan.sizes[i + 1]:
            raise PlanError(
                "sizes",
                f"sizes must strictly decrease, violated at index {i}: "
                f"{plan.sizes[i]:g} <= {plan.sizes[i + 1]:g}",
            )
    if not (math.isfinite(plan.L) and plan.L > 0):
        raise PlanError("L", f"bits per block must be positive, got {plan.L}")
