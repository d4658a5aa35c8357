"""Tests for the demonstration-suite runner and its fixture inventory."""

import random
import re

import pytest

from bimodal import fixtures, suite
from bimodal.kripke import FrameClass, frame_has_property
from bimodal.proof import SYSTEMS, match_schema
from bimodal.suite import (
    PROFILES,
    CheckResult,
    Profile,
    SuiteCheck,
    announcement_reduction_random,
    mirror_pointwise_exhaustive,
    mirror_pointwise_random,
    random_formula,
    run_suite,
    suite_checks,
)
from bimodal.syntax import metrics, render


class TestFixtures:
    def test_validity_battery_shape(self):
        rows = fixtures.validity_battery()
        assert len(rows) == 17
        slugs = [slug for slug, _, _ in rows]
        assert len(set(slugs)) == 17
        assert slugs[:5] == [
            "contingency-as-possibility",
            "accident-as-possibility",
            "contingent-implies-some-accident",
            "accident-cover-weak",
            "necessity-almost-definable",
        ]
        assert "axiom-a1" in slugs and "axiom-at" in slugs and "axiom-a4-4" in slugs

    def test_generic_axiom_instance(self):
        assert render(fixtures.axiom_instance("K", "A1")) == "A p -> p"
        assert render(fixtures.axiom_instance("T", "AT")) == "D p & p -> O(q -> p)"

    def test_instances_match_their_schemas(self):
        for system_name, system in SYSTEMS.items():
            for axiom_name, schema in system.axioms.items():
                instance = fixtures.axiom_instance(system_name, axiom_name)
                assert match_schema(schema, instance) is not None

    def test_singleton_pair(self):
        assert fixtures.REFLEXIVE_POINT.model.frame.succ == (0b1,)
        assert fixtures.ARROWLESS_POINT.model.frame.succ == (0b0,)
        assert fixtures.REFLEXIVE_POINT.point == "s"

    def test_serial_pair_differs_only_by_the_loop(self):
        looped = fixtures.SERIAL_LOOPED.model
        plain = fixtures.SERIAL_PLAIN.model
        assert looped.valuation == plain.valuation
        assert looped.frame.worlds == plain.frame.worlds
        extra = set(looped.frame.pairs()) - set(plain.frame.pairs())
        assert extra == {("t", "t")}

    def test_reduction_frames_have_their_properties(self):
        assert frame_has_property(fixtures.LOOP_FRAME, FrameClass.T)
        assert frame_has_property(fixtures.LOOP_FRAME, FrameClass.D)
        assert frame_has_property(fixtures.LASSO_FRAME, FrameClass.FIVE)
        assert frame_has_property(fixtures.LASSO_FRAME, FrameClass.CONV)
        assert not frame_has_property(fixtures.ARROW_FRAME, FrameClass.D)
        assert frame_has_property(fixtures.COMPLETE_PAIR_FRAME, FrameClass.B)


class TestRandomFormula:
    def test_deterministic_for_a_seed(self):
        first = [
            random_formula(random.Random(7), 9, ("p", "q"), ann_budget=2)
            for _ in range(20)
        ]
        second = [
            random_formula(random.Random(7), 9, ("p", "q"), ann_budget=2)
            for _ in range(20)
        ]
        assert first == second

    def test_core_output_respects_the_size_budget(self):
        # sugar-free output has no desugaring growth, so the budget is exact
        rng = random.Random(20260817)
        for _ in range(300):
            budget = rng.randint(1, 9)
            f = random_formula(rng, budget, ("p", "q"), sugar=False)
            assert metrics(f)["size"] <= budget

    def test_zero_budget_means_no_announcements(self):
        rng = random.Random(3)
        for _ in range(200):
            f = random_formula(rng, 8, ("p",))
            assert metrics(f)["announcement_depth"] == 0

    def test_announcement_budget_caps_the_depth(self):
        rng = random.Random(4)
        depths = set()
        for _ in range(300):
            f = random_formula(rng, 9, ("p", "q"), ann_budget=2)
            depth = metrics(f)["announcement_depth"]
            assert depth <= 2
            depths.add(depth)
        assert 2 in depths  # the budget is actually exercised


class TestBatteries:
    def test_mirror_exhaustive_small(self):
        violations, frames, formulas = mirror_pointwise_exhaustive(2, ("p",), 3)
        assert violations == 0
        assert frames == 8  # labeled frames on <= 2 worlds with a pure loop
        assert formulas > 0

    def test_mirror_random_small(self):
        assert mirror_pointwise_random(25, 7, 2, seed=11) == (0, 8)

    def test_announcement_reduction_random_small(self):
        assert announcement_reduction_random(25, seed=11) == (0, 25)


class TestRegistry:
    def test_profiles(self):
        assert set(PROFILES) == {"fast", "slow"}
        fast, slow = PROFILES["fast"], PROFILES["slow"]
        assert isinstance(fast, Profile)
        assert fast.worlds <= slow.worlds
        assert fast.random_count < slow.random_count
        assert fast.battery_size < slow.battery_size

    def test_slugs_unique_and_kebab_case(self):
        checks = suite_checks()
        slugs = [check.slug for check in checks]
        assert len(set(slugs)) == len(slugs)
        for slug in slugs:
            assert re.fullmatch(r"[a-z0-9]+(-[a-z0-9]+)*", slug), slug

    def test_every_check_describes_itself(self):
        for check in suite_checks():
            assert check.description
            assert check.slug != check.description

    def test_expected_checks_present(self):
        slugs = {check.slug for check in suite_checks()}
        assert {
            "axiom-a1",
            "axiom-at",
            "axiom-a4-4",
            "accident-cover-strong-refuted",
            "mirror-invariance-exhaustive",
            "sole-successor-stripping-breaks-validity",
            "accompanied-loop-stripping-breaks-validity",
            "transitivity-defined-exactly",
            "symmetry-defined-exactly",
            "possibility-splits-the-singleton-pair",
            "contingency-blind-on-singleton-pair",
            "accident-of-noncontingency-splits-the-serial-pair",
            "bundled-proofs-check",
            "corrupted-proofs-rejected",
            "conjecture-sweep-clean",
        } <= slugs


class TestRunSuite:
    def test_fast_profile_is_green(self):
        results = run_suite("fast")
        assert len(results) == len(suite_checks())
        failures = [r for r in results if not r.ok]
        assert failures == []
        assert all(r.detail for r in results)
        assert all(r.elapsed >= 0 for r in results)

    def test_only_keeps_report_order(self):
        results = run_suite(
            "fast", only=["bundled-proofs-check", "formula-round-trips"]
        )
        assert [r.slug for r in results] == [
            "formula-round-trips",
            "bundled-proofs-check",
        ]

    def test_unknown_profile(self):
        with pytest.raises(KeyError, match="unknown profile"):
            run_suite("glacial")

    def test_unknown_slug_rejected_before_running(self):
        with pytest.raises(KeyError, match="unknown checks"):
            run_suite("fast", only=["bundled-proofs-check", "nope"])

    def test_profile_object_accepted(self):
        tiny = Profile("tiny", 2, 2, 3, 5, 2, 2)
        results = run_suite(tiny, only=["axiom-a1"])
        assert results[0].ok
        assert results[0].detail == "holds to 2 worlds"

    def test_failures_are_reported_not_raised(self, monkeypatch):
        def broken(profile, workers):
            raise suite.CheckFailure("the sky is falling")

        checks = list(suite._CHECKS) + [
            SuiteCheck("always-fails", "a check that always fails", broken)
        ]
        monkeypatch.setattr(suite, "_CHECKS", checks)
        results = run_suite("fast", only=["always-fails"])
        assert len(results) == 1
        assert not results[0].ok
        assert results[0].detail == "the sky is falling"

    def test_result_json_shape(self):
        result = CheckResult("slug", "description", True, "detail", 0.25)
        assert result.to_json() == {
            "slug": "slug",
            "description": "description",
            "ok": True,
            "detail": "detail",
        }
