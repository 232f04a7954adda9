"""Tests for the exact algebraic integrability conditions and verdicts."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from conftest import BOUND, flat, random_family_member, sphere
from killingtensor import (
    ConditionForm1,
    ConditionForm2,
    InvalidArgument,
    Tensor,
    UnsupportedForm,
    benenti_rep,
    check,
    condition1_residual,
    condition2_residual,
    condition3_residual,
    metric_rep,
    r_to_s,
    random_curvature,
    random_invertible_matrix,
    verify_identity_suite,
)

FORM1_ALL = list(ConditionForm1)
FORM2_ALL = list(ConditionForm2)


def random_s(dim: int, seed: int):
    return r_to_s(random_curvature(dim, random.Random(seed), bound=BOUND))


class TestFormParsing:
    @pytest.mark.parametrize(
        "raw, expected",
        [
            ("main1", ConditionForm1.MAIN1),
            ("MAIN1", ConditionForm1.MAIN1),
            ("young-a", ConditionForm1.YOUNG_A),
            ("young_a", ConditionForm1.YOUNG_A),
            (" Hook-D ", ConditionForm1.HOOK_D),
            (ConditionForm1.OMEGA, ConditionForm1.OMEGA),
        ],
    )
    def test_first_condition_forms(self, raw, expected):
        assert ConditionForm1.parse(raw) is expected

    @pytest.mark.parametrize(
        "raw, expected",
        [
            ("main2", ConditionForm2.MAIN2),
            ("KS2_HOOK_YIN", ConditionForm2.KS2_HOOK_YIN),
            ("ks2-44-both", ConditionForm2.KS2_44_BOTH),
        ],
    )
    def test_second_condition_forms(self, raw, expected):
        assert ConditionForm2.parse(raw) is expected

    def test_unknown_forms_are_rejected(self):
        with pytest.raises(InvalidArgument, match="ConditionForm1"):
            ConditionForm1.parse("main2")
        with pytest.raises(InvalidArgument, match="ConditionForm2"):
            ConditionForm2.parse("bogus")
        with pytest.raises(InvalidArgument, match="ConditionForm1"):
            condition1_residual(random_s(3, 0), sphere(3), form="nope")


class TestResidualStructure:
    def test_residuals_are_homogeneous_in_the_input(self):
        # Degrees 2, 3, 4: scaling the input scales the residuals by
        # c^2, c^3, c^4.
        model = sphere(4)
        K = random_s(4, 1)
        doubled = K * 2
        assert condition1_residual(doubled, model) == condition1_residual(K, model) * 4
        assert condition2_residual(doubled, model) == condition2_residual(K, model) * 8
        assert condition3_residual(doubled, model) == condition3_residual(K, model) * 16

    def test_curvature_and_symmetric_inputs_agree(self):
        model = sphere(4)
        R = random_curvature(4, random.Random(2), bound=BOUND)
        S = r_to_s(R)
        for form in FORM1_ALL:
            assert condition1_residual(R, model, form) == condition1_residual(
                S, model, form
            )
        for form in FORM2_ALL:
            assert condition2_residual(R, model, form) == condition2_residual(
                S, model, form
            )

    def test_gbar_may_be_a_model_or_a_tensor(self):
        model = sphere(4)
        K = random_s(4, 3)
        assert condition1_residual(K, model) == condition1_residual(K, model.gbar())
        assert condition2_residual(K, model) == condition2_residual(K, model.gbar())

    def test_gbar_validation(self):
        K = random_s(3, 4)
        with pytest.raises(InvalidArgument, match="order 2"):
            condition1_residual(K, Tensor.basis_vector(3, 0))
        with pytest.raises(InvalidArgument, match="dimension mismatch"):
            condition1_residual(K, sphere(4))
        with pytest.raises(InvalidArgument, match="ModelSpace or an order-2"):
            condition1_residual(K, "sphere")

    def test_rejects_unwrapped_inputs(self):
        with pytest.raises(InvalidArgument, match="CurvatureTensor or SymCurvatureTensor"):
            condition1_residual(Tensor.zeros(3, 4), sphere(3))

    def test_omega_form_needs_nondegenerate_gbar(self):
        K = random_s(4, 5)
        # Defined on the sphere...
        condition1_residual(K, sphere(4), ConditionForm1.OMEGA)
        # ...but not on the flat model, whose gbar is degenerate.
        with pytest.raises(UnsupportedForm, match="wedge-square"):
            condition1_residual(K, flat(4), ConditionForm1.OMEGA)
        with pytest.raises(UnsupportedForm, match="wedge-square"):
            check(K, flat(4), form1="omega")


class TestKnownVerdicts:
    @pytest.mark.parametrize(
        "model", [sphere(4), sphere(3, 1), flat(4)], ids=repr
    )
    def test_metric_representative_is_integrable(self, model):
        report = check(metric_rep(model), model)
        assert report.integrable
        assert report.cond1_support == 0
        assert report.cond2_support == 0
        assert report.warnings == ()

    @pytest.mark.parametrize("model", [sphere(4), flat(4)], ids=repr)
    def test_benenti_representatives_are_integrable(self, model):
        A = random_invertible_matrix(model.dim, random.Random(6), bound=BOUND)
        assert check(benenti_rep(model, A), model).integrable

    def test_family_members_are_integrable_on_the_sphere(self):
        model = sphere(4)
        K = random_family_member(model, random.Random(7))
        for form1 in FORM1_ALL:
            assert condition1_residual(K, model, form1).is_zero()
        for form2 in FORM2_ALL:
            assert condition2_residual(K, model, form2).is_zero()

    def test_random_inputs_fail_at_dimension_four(self):
        model = sphere(4)
        report = check(random_curvature(4, random.Random(8), bound=BOUND), model)
        assert not report.integrable
        assert not report.cond1_zero
        assert report.cond1_support > 0
        assert report.residual_supports["condition1"] == report.cond1_support

    def test_everything_passes_in_ambient_dimension_three(self):
        # Four-slot antisymmetrisers vanish identically in three ambient
        # dimensions, so both conditions hold for arbitrary inputs.
        for seed, model in [(9, sphere(3)), (10, flat(3)), (11, sphere(2, 1))]:
            K = random_curvature(3, random.Random(seed), bound=BOUND)
            report = check(K, model)
            assert report.integrable
            assert report.cond1_support == 0

    def test_failed_first_condition_raises_a_warning(self):
        model = flat(4)
        K = random_family_member(model, random.Random(12))
        report = check(K, model)
        assert not report.cond1_zero
        assert len(report.warnings) == 1
        assert "only guaranteed equivalent" in report.warnings[0]

    def test_custom_gbar_reports(self):
        model = sphere(3)
        report = check(random_s(3, 13), model.gbar())
        assert report.model_kind == "custom"
        assert report.signature is None
        assert report.integrable

    def test_report_metadata(self):
        model = sphere(3)
        report = check(random_s(3, 14), model, form1="anti-c", form2="ks2-44-both")
        assert report.model_kind == "sphere"
        assert report.signature == (3, 0)
        assert report.dim == 3
        assert report.forms_used == ("anti-c", "ks2-44-both")
        assert report.elapsed_seconds >= 0.0


class TestThirdCondition:
    def test_vanishes_whenever_the_first_two_conditions_hold(self):
        cases = [
            (random_s(3, 15), sphere(3)),
            (random_s(3, 16), flat(3)),
            (random_family_member(sphere(4), random.Random(17)), sphere(4)),
        ]
        for K, model in cases:
            assert check(K, model).integrable
            assert condition3_residual(K, model).is_zero()

    def test_nonzero_on_generic_inputs(self):
        assert not condition3_residual(random_s(4, 18), sphere(4)).is_zero()


class TestIdentitySuite:
    @pytest.mark.parametrize(
        "dim, model_builder", [(3, sphere), (3, flat), (4, sphere)]
    )
    def test_suite_passes_for_valid_inputs(self, dim, model_builder):
        S = random_s(dim, 19 + dim)
        names = verify_identity_suite(S, model_builder(dim), rng=0)
        assert names == (
            "symmetrised_bianchi",
            "hook_4_1_1_on_quadratic",
            "hook_6_1_1_on_cubic_yin",
            "hook_6_1_1_on_cubic_yang",
            "hook_8_1_1_on_quartic_yin",
            "hook_8_1_1_on_quartic_yang",
            "projector_decomposition",
        )

    def test_suite_rejects_invalid_inputs(self):
        bad = Tensor.from_entries(3, 4, [((0, 1, 1, 2), 1)])
        with pytest.raises(InvalidArgument, match="symmetric"):
            verify_identity_suite(bad, sphere(3))
        with pytest.raises(InvalidArgument, match="order-4"):
            verify_identity_suite(Tensor.zeros(3, 3), sphere(3))
