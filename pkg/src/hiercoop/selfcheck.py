"""Built-in oracle suites behind the verify subcommand.

Each suite checks one analytical identity numerically on either a seeded
random population or a fixed grid, reporting its worst relative error:

* recursion_vs_closed_form: the level-by-level recursion (driven by Q and R)
  against the unrolled bracket (driven by the stored c), total and per-term.
  The only suite that trips when c is inconsistent with Q/R.
* am_gm_equal_terms: at the optimizer's layer sizes all bracket terms are
  equal and minimal_delay matches their sum.
* phase_balance: at the balanced top size, exchange plus re-exchange slots
  come to (h-1) times the long-range slots.
* bound_checks: every feasible integer-depth throughput sits under the
  envelope (one-sided; only excess above the bound counts as error).
* ratio_two_routes: division of the two scheme throughputs against the
  closed-form ratio expression.

Tolerances split by arithmetic: 1e-12 where the identity is rational in the
inputs, 1e-9 where exp/log round-trips are involved.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import DomainError, InfeasibleError
from .explorer import ratio_original_closed_form
from .optimizer import minimal_delay, optimal_cluster_sizes, optimal_top_cluster
from .params import HierarchyPlan, SchemeParams
from .recurrence import delay_closed_form, delay_recursive
from .throughput import (
    layer_throughput,
    optimal_modified,
    original_throughput,
    throughput_given_M1,
    upper_bound,
)

RATIONAL_TOL = 1e-12
TRANSCENDENTAL_TOL = 1e-9


@dataclass(frozen=True)
class SuiteResult:
    """Outcome of one oracle suite."""

    name: str
    passed: bool
    worst_rel_err: float
    cases: int
    tolerance: float


def _result(name: str, worst: float, cases: int, tol: float) -> SuiteResult:
    # zero cases means the suite never exercised anything; that is a failure
    return SuiteResult(
        name=name, passed=cases > 0 and worst <= tol, worst_rel_err=worst, cases=cases, tolerance=tol
    )


def recursion_vs_closed_form(
    params: SchemeParams, seed: int, cases: int = 200
) -> SuiteResult:
    """Random geometric hierarchies, recursion vs bracket, sum and per term."""
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(cases):
        h = rng.randint(2, 6)
        sizes = [rng.uniform(2.0, 64.0)]
        for _ in range(h - 2):
            sizes.append(sizes[-1] * rng.uniform(1.5, 8.0))
        sizes.reverse()
        plan = HierarchyPlan(h=h, sizes=tuple(sizes), L=rng.uniform(0.25, 8.0))
        walked = delay_recursive(plan, params)
        bracket = delay_closed_form(plan, params)
        worst = max(worst, abs(walked.slots - bracket.slots) / bracket.slots)
        for a, b in zip(walked.decomposition, bracket.decomposition):
            worst = max(worst, abs(a - b) / b)
    return _result("recursion_vs_closed_form", worst, cases, RATIONAL_TOL)


def am_gm_equal_terms(params: SchemeParams) -> SuiteResult:
    """Equal-term sizes really equalize the bracket, and minimal_delay agrees."""
    worst = 0.0
    cases = 0
    for h in range(2, 7):
        for M1 in (32.0, 512.0, 4096.0, 131072.0):
            try:
                plan = optimal_cluster_sizes(h, M1, params)
            except InfeasibleError:
                continue
            terms = delay_closed_form(plan, params).decomposition
            mean = sum(terms) / len(terms)
            for t in terms:
                worst = max(worst, abs(t - mean) / mean)
            direct = minimal_delay(h, M1, 1.0, params).slots
            worst = max(worst, abs(direct - sum(terms)) / direct)
            cases += 1
    return _result("am_gm_equal_terms", worst, cases, TRANSCENDENTAL_TOL)


def phase_balance(params: SchemeParams) -> SuiteResult:
    """(P1 + P3) == (h-1) * P2 at the balanced top size."""
    worst = 0.0
    cases = 0
    for h in range(2, 7):
        for k in range(12, 31, 2):
            n = 2**k
            try:
                M1 = optimal_top_cluster(h, n, params)
                report = throughput_given_M1(h, M1, n, 1.0, params)
            except InfeasibleError:
                continue
            p1, p2, p3 = report.phase_slots
            target = (h - 1) * p2
            worst = max(worst, abs((p1 + p3) - target) / target)
            cases += 1
    return _result("phase_balance", worst, cases, TRANSCENDENTAL_TOL)


def bound_checks(params: SchemeParams) -> SuiteResult:
    """Integer-depth throughput never exceeds the envelope (one-sided)."""
    worst = 0.0
    cases = 0
    for h in range(2, 13):
        for i in range(30):
            n = round(2.0 ** (8.0 + 32.0 * i / 29.0))
            try:
                value = layer_throughput(h, n, params).value
            except (InfeasibleError, DomainError):
                continue
            cap = upper_bound(n, params)
            worst = max(worst, max(0.0, (value - cap) / cap))
            cases += 1
    return _result("bound_checks", worst, cases, RATIONAL_TOL)


def ratio_two_routes(params: SchemeParams) -> SuiteResult:
    """Direct division of the scheme throughputs vs the closed-form ratio."""
    worst = 0.0
    cases = 0
    for k in range(10, 45, 2):
        n = 2**k
        direct = (
            optimal_modified(n, params).smooth.value
            / original_throughput(n, params)
        )
        closed = ratio_original_closed_form(n, params)
        worst = max(worst, abs(direct - closed) / direct)
        cases += 1
    return _result("ratio_two_routes", worst, cases, TRANSCENDENTAL_TOL)


def run_all(params: SchemeParams, seed: int = 0) -> list[SuiteResult]:
    """All suites in fixed order; deterministic for a given params and seed."""
    return [
        recursion_vs_closed_form(params, seed),
        am_gm_equal_terms(params),
        phase_balance(params),
        bound_checks(params),
        ratio_two_routes(params),
    ]
