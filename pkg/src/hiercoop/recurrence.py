"""Slot-count accounting for the layered exchange schedule.

The slot count of an h-layer hierarchy obeys a linear recursion. The top
layer spends (M1/M2) * 2*M1 * (L/R) slots relaying blocks between itself and
the layer below, then hands each cluster one level down an inflated block of
L * (Q/R) * (M1/M2) bits; neighboring clusters at that level time-share the
channel in groups of TIME_SHARING_FACTOR. A single bottom-layer cluster
finishes its all-to-all exchange directly in (L/R) * M**2 slots.

Unrolling the recursion gives, with c from SchemeParams,

    slots = 2*M1*(L/R) * ( M1/M2 + c*M2/M3 + ... + c**(h-3) * M_{h-2}/M_{h-1}
                           + c**(h-2) * M_{h-1}/2 )

delay_recursive walks the recursion using Q and R directly;
delay_closed_form evaluates the bracket using the stored c. The two routes
share no arithmetic, so their agreement is a real consistency check.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import PlanError
from .params import HierarchyPlan, SchemeParams, validate_plan

#: Neighboring clusters time-share the channel in groups of this size.
TIME_SHARING_FACTOR = 4


@dataclass(frozen=True)
class DelaySlots:
    """Total slot count plus its per-layer additive decomposition."""

    slots: float
    decomposition: tuple[float, ...]


def delay_base(M: float, L_prime: float, R: float) -> DelaySlots:
    """Bottom-layer all-to-all exchange: M**2 ordered pairs of L_prime bits at rate R.

    L_prime is the (possibly inflated) per-pair block size reaching the
    bottom layer, not the top-level L.
    """
    if not (math.isfinite(M) and M >= 1):
        raise PlanError("M", f"base cluster size must be >= 1, got {M}")
    if not (L_prime > 0 and R > 0):
        raise PlanError("L_prime", f"need positive L_prime and R, got L_prime={L_prime}, R={R}")
    slots = (L_prime / R) * M * M
    return DelaySlots(slots=slots, decomposition=(slots,))


def delay_recursive(
    plan: HierarchyPlan,
    params: SchemeParams,
    *,
    integer_slots: bool = False,
    exact_pairs: bool = False,
) -> DelaySlots:
    """Evaluate the recursion level by level.

    The decomposition entry at index i is the slot share contributed by
    layer i+1 of the hierarchy, including the time-sharing multiplier
    accumulated on the way down.

    integer_slots rounds each level's count up to a whole slot before
    scaling; exact_pairs uses M*(M-1) ordered pairs at the base instead of
    M**2. Both are reporting variants, the fluid count is the model.
    """
    validate_plan(plan)
    R, Q = params.R, params.Q

    def walk(sizes: tuple[float, ...], L: float) -> tuple[float, ...]:
        if len(sizes) == 1:
            M = sizes[0]
            base = (L / R) * (M * (M - 1.0) if exact_pairs else M * M)
            return (math.ceil(base) if integer_slots else base,)
        top, below = sizes[0], sizes[1]
        relay = (top / below) * 2.0 * top * (L / R)
        if integer_slots:
            relay = math.ceil(relay)
        rest = walk(sizes[1:], L * (Q / R) * (top / below))
        return (relay,) + tuple(TIME_SHARING_FACTOR * x for x in rest)

    decomposition = walk(plan.sizes, plan.L)
    return DelaySlots(slots=sum(decomposition), decomposition=decomposition)


def delay_closed_form(plan: HierarchyPlan, params: SchemeParams) -> DelaySlots:
    """Evaluate the closed-form bracket; one decomposition entry per layer."""
    validate_plan(plan)
    sizes = plan.sizes
    lead = 2.0 * sizes[0] * (plan.L / params.R)
    terms = [
        lead * params.c**i * sizes[i] / sizes[i + 1] for i in range(len(sizes) - 1)
    ]
    terms.append(lead * params.c ** (len(sizes) - 1) * sizes[-1] / 2.0)
    return DelaySlots(slots=sum(terms), decomposition=tuple(terms))


def integer_slot_gap(
    plan: HierarchyPlan, params: SchemeParams, *, exact_pairs: bool = False
) -> float:
    """Relative slot overhead of whole-slot scheduling, (ceiled - fluid) / fluid.

    Can come out negative with exact_pairs=True, since M*(M-1) trims the
    base-layer pair count below the fluid M**2.
    """
    fluid = delay_recursive(plan, params).slots
    ceiled = delay_recursive(
        plan, params, integer_slots=True, exact_pairs=exact_pairs
    ).slots
    return (ceiled - fluid) / fluid
