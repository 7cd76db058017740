"""Slot recursion, closed-form bracket, and the equivalence between them."""
import pytest
from hypothesis import given, settings, strategies as st

from hiercoop import (
    TIME_SHARING_FACTOR,
    HierarchyPlan,
    PlanError,
    delay_base,
    delay_closed_form,
    delay_recursive,
    integer_slot_gap,
)
from oracles import base_slots_by_enumeration, slots_by_tree_walk
from strategies import plans, rate_params


def test_time_sharing_group_size():
    assert TIME_SHARING_FACTOR == 4


class TestBaseExchange:
    def test_single_pair_at_matching_rate_takes_one_slot(self):
        out = delay_base(1.0, 2.0, 2.0)
        assert out.slots == 1.0
        assert out.decomposition == (1.0,)

    def test_eight_node_cluster(self):
        assert delay_base(8.0, 1.0, 1.0).slots == 64.0

    def test_matches_literal_pair_enumeration(self):
        got = delay_base(16.0, 2.0, 1.0).slots
        assert got == 512.0
        assert got == base_slots_by_enumeration(16, 2.0, 1.0)

    @pytest.mark.parametrize(
        "M,L_prime,R", [(0.5, 1.0, 1.0), (8.0, 0.0, 1.0), (8.0, 1.0, 0.0)]
    )
    def test_degenerate_input_is_rejected(self, M, L_prime, R):
        with pytest.raises(PlanError):
            delay_base(M, L_prime, R)


class TestRecursion:
    def test_two_layers_reduce_to_the_base_case(self, unit_params):
        plan = HierarchyPlan(h=2, sizes=(8.0,), L=1.0)
        out = delay_recursive(plan, unit_params)
        assert out.slots == 64.0
        assert out.slots == delay_base(8.0, 1.0, 1.0).slots

    def test_three_layer_hand_expansion(self, unit_params):
        # relay 2*512*32 = 32768, then 4 subproblems of 16**2 slots at an
        # inflated 32-bit block: 4 * 8192 = 32768
        out = delay_recursive(HierarchyPlan(h=3, sizes=(512.0, 16.0)), unit_params)
        assert out.slots == 65536.0
        assert out.decomposition == (32768.0, 32768.0)

    def test_three_layers_off_the_optimum(self, unit_params):
        plan = HierarchyPlan(h=3, sizes=(512.0, 8.0))
        assert delay_recursive(plan, unit_params).slots == 81920.0

    def test_four_layer_value_and_tree_walk_agreement(self, unit_params):
        plan = HierarchyPlan(h=4, sizes=(4096.0, 256.0, 16.0))
        walked = delay_recursive(plan, unit_params).slots
        assert walked == 1703936.0
        oracle = slots_by_tree_walk(plan.sizes, 1.0, 1.0, 1.0)
        assert walked == pytest.approx(oracle, rel=1e-12)

    def test_invalid_plans_are_rejected_before_any_arithmetic(self, unit_params):
        with pytest.raises(PlanError):
            delay_recursive(HierarchyPlan(h=3, sizes=(16.0, 32.0)), unit_params)
        with pytest.raises(PlanError):
            delay_closed_form(HierarchyPlan(h=3, sizes=(16.0,)), unit_params)
        with pytest.raises(PlanError):
            delay_recursive(HierarchyPlan(h=65, sizes=tuple(2.0 ** (66 - i) for i in range(64))), unit_params)


class TestClosedForm:
    def test_two_layer_bracket(self, unit_params):
        out = delay_closed_form(HierarchyPlan(h=2, sizes=(8.0,)), unit_params)
        assert out.slots == 64.0

    def test_bracket_terms_follow_the_unrolled_recursion(self, unit_params):
        plan = HierarchyPlan(h=4, sizes=(100.0, 25.0, 5.0), L=3.0)
        out = delay_closed_form(plan, unit_params)
        lead = 2.0 * 100.0 * 3.0  # 2*M1*L/R
        expected = (
            lead * 100.0 / 25.0,
            lead * 4.0 * 25.0 / 5.0,
            lead * 16.0 * 5.0 / 2.0,
        )
        assert out.decomposition == pytest.approx(expected, rel=1e-12)
        assert out.slots == pytest.approx(sum(expected), rel=1e-12)

    def test_four_layer_agreement_with_the_recursion(self, unit_params):
        plan = HierarchyPlan(h=4, sizes=(4096.0, 256.0, 16.0))
        assert delay_closed_form(plan, unit_params).slots == pytest.approx(
            1703936.0, rel=1e-12
        )


@given(plan=plans(), params=rate_params())
@settings(max_examples=150)
def test_recursion_equals_the_bracket(plan, params):
    walked = delay_recursive(plan, params)
    bracket = delay_closed_form(plan, params)
    assert len(walked.decomposition) == plan.h - 1
    assert len(bracket.decomposition) == plan.h - 1
    assert walked.slots == pytest.approx(bracket.slots, rel=1e-12)
    for a, b in zip(walked.decomposition, bracket.decomposition):
        assert a == pytest.approx(b, rel=1e-12)
    assert walked.slots == pytest.approx(sum(walked.decomposition), rel=1e-12)


@given(plan=plans(), params=rate_params())
def test_tree_walk_oracle_agrees_with_the_recursion(plan, params):
    walked = delay_recursive(plan, params).slots
    oracle = slots_by_tree_walk(plan.sizes, plan.L, params.R, params.Q)
    assert walked == pytest.approx(oracle, rel=1e-12)


@given(plan=plans(), params=rate_params(), scale=st.floats(1.1, 4.0))
def test_delay_grows_with_the_block_size(plan, params, scale):
    bigger = HierarchyPlan(h=plan.h, sizes=plan.sizes, L=plan.L * scale)
    assert delay_recursive(bigger, params).slots > delay_recursive(plan, params).slots


@given(plan=plans(), params=rate_params(), scale=st.floats(1.1, 4.0))
def test_delay_grows_with_the_top_cluster(plan, params, scale):
    sizes = (plan.sizes[0] * scale,) + plan.sizes[1:]
    bigger = HierarchyPlan(h=plan.h, sizes=sizes, L=plan.L)
    assert delay_recursive(bigger, params).slots > delay_recursive(plan, params).slots


def test_block_size_scales_the_slot_count_linearly(unit_params):
    plan = HierarchyPlan(h=4, sizes=(4096.0, 256.0, 16.0), L=1.0)
    scaled = HierarchyPlan(h=4, sizes=plan.sizes, L=8.0)
    assert (
        delay_recursive(scaled, unit_params).slots
        == 8.0 * delay_recursive(plan, unit_params).slots
    )
    assert (
        delay_closed_form(scaled, unit_params).slots
        == 8.0 * delay_closed_form(plan, unit_params).slots
    )


class TestIntegerSlots:
    def test_integral_plan_has_zero_ceiling_overhead(self, unit_params):
        gap = integer_slot_gap(HierarchyPlan(h=3, sizes=(512.0, 16.0)), unit_params)
        assert gap == 0.0

    def test_fractional_plan_pays_a_small_overhead(self, unit_params):
        gap = integer_slot_gap(HierarchyPlan(h=3, sizes=(511.3, 15.7), L=1.1), unit_params)
        assert gap > 0.0

    @given(plan=plans(), params=rate_params())
    def test_ceiling_overhead_is_never_negative(self, plan, params):
        assert integer_slot_gap(plan, params) >= 0.0

    def test_exact_pair_count_can_undercut_the_fluid_model(self, unit_params):
        # M*(M-1) ordered pairs trim the base layer below the fluid M**2
        gap = integer_slot_gap(
            HierarchyPlan(h=2, sizes=(8.0,)), unit_params, exact_pairs=True
        )
        assert gap == -0.125
