"""Extended-area behavior: regime split and power-limited attenuation.

On a unit area the scheme is interference-limited and the scaling law
applies as is. Stretching the same n nodes over area A raises the
near-neighbor distance, and once A**(alpha/2) outgrows c0*n the network
becomes power-limited: every rate picks up the factor c0*n/A**(alpha/2).
The boundary is inclusive on the dense side, so factor = min(1, ...) is
continuous and equals 1 exactly at the crossover.

c0 absorbs hardware constants (power budget, noise level, bandwidth); the
tradeoff helper sweeps candidate (c0, R, Q) triples supplied by the caller.
"""
from __future__ import annotations

import dataclasses
import enum

from .errors import DomainError, InfeasibleError, PlanError
from .params import NetworkConfig, SchemeParams, derive
from .throughput import ThroughputReport, optimal_modified


class Regime(enum.Enum):
    """Which resource caps the rate on the given area."""

    DENSE = "dense"
    SPARSE = "sparse"


@dataclasses.dataclass(frozen=True)
class RegimeReport:
    """Classification of one network geometry."""

    regime: Regime
    factor: float
    """Rate attenuation min(1, c0*n / area**(alpha/2))."""
    threshold: float
    """Signed margin c0*n - area**(alpha/2); nonnegative exactly when dense."""


def classify(cfg: NetworkConfig) -> RegimeReport:
    """Dense/sparse split for one geometry; the boundary counts as dense."""
    demand = cfg.area ** (cfg.alpha / 2.0)
    supply = cfg.c0 * cfg.n
    factor = min(1.0, supply / demand)
    regime = Regime.DENSE if demand <= supply else Regime.SPARSE
    return RegimeReport(regime=regime, factor=factor, threshold=supply - demand)


def throughput_with_area(cfg: NetworkConfig, params: SchemeParams) -> ThroughputReport:
    """Smooth-convention throughput with the area attenuation applied.

    Returns the smooth report scaled by the regime factor; pre_constant
    scales with it so value / (n/2)**exponent keeps holding.
    """
    report = optimal_modified(cfg.n, params).smooth
    factor = classify(cfg).factor
    if factor == 1.0:
        return report
    return dataclasses.replace(
        report,
        value=report.value * factor,
        pre_constant=report.pre_constant * factor,
        factor=factor,
    )


def area_from_exponent(n: int, nu: float) -> float:
    """Area n**nu for sweeps that grow the area with the network."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    if nu < 0.0:
        raise DomainError(f"area exponent must be >= 0, got {nu}")
    return float(n) ** nu


@dataclasses.dataclass(frozen=True)
class CandidateOutcome:
    """One (c0, R, Q) triple's result in a tradeoff sweep."""

    c0: float
    R: float
    Q: float
    report: ThroughputReport | None
    error: str | None


def c0_tradeoff(
    cfg: NetworkConfig, candidates: list[tuple[float, float, float]]
) -> list[CandidateOutcome]:
    """Evaluate candidate (c0, R, Q) triples on a fixed geometry.

    Successes come first, best attenuated throughput on top; candidates
    whose rate pair is out of domain follow with the error message instead
    of a report.
    """
    outcomes: list[CandidateOutcome] = []
    for c0, R, Q in candidates:
        try:
            if not c0 > 0:
                raise DomainError(f"area constant must be positive, got {c0}")
            params = derive(R, Q)
            geo = dataclasses.replace(cfg, c0=c0)
            report = throughput_with_area(geo, params)
        except (DomainError, InfeasibleError, PlanError, ValueError) as exc:
            outcomes.append(CandidateOutcome(c0=c0, R=R, Q=Q, report=None, error=str(exc)))
        else:
            outcomes.append(CandidateOutcome(c0=c0, R=R, Q=Q, report=report, error=None))
    successes = [o for o in outcomes if o.report is not None]
    failures = [o for o in outcomes if o.report is None]
    successes.sort(key=lambda o: o.report.value, reverse=True)
    return successes + failures
