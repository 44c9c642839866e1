import math

import pytest

from omlab import geometry as geo
from omlab import growth as gr
from omlab import inclusion as inc
from omlab import young as yf
from omlab.errors import DomainError, HypothesisError
from omlab.grids import log_grid
from omlab.norms import SpaceSpec, char_norm_closed


def sst_space(young, growth, override=False):
    return SpaceSpec("sst", young, growth, 1, override=override)


@pytest.fixture(scope="module")
def families():
    return inc.acceptance_fixtures(seed=0, num_random=20)


class TestMakeFixture:
    def test_samples_include_indicators_at_every_radius(self, families):
        fixture = families["sst"]
        chars = [f for f in fixture.samples if f.is_characteristic]
        assert sorted(f.breakpoints[0] for f in chars) == sorted(fixture.radii)

    def test_corpus_is_seeded_and_deterministic(self):
        a = inc.random_simple_functions(0, 20)
        b = inc.random_simple_functions(0, 20)
        assert a == b
        assert a != inc.random_simple_functions(1, 20)
        assert all(len(f.values) <= 8 for f in a)
        assert all(2.0 ** -4 <= bp <= 2.0 ** 4 for f in a for bp in f.breakpoints)

    def test_hypothesis_failure_without_override(self):
        # square vs linear Young: the order genuinely fails on the default grids
        with pytest.raises(HypothesisError):
            inc.make_fixture(
                "sst",
                sst_space(yf.power(2), gr.power(0.5)),
                sst_space(yf.power(1), gr.power(0.5)),
            )

    def test_override_keeps_failed_reports(self):
        fixture = inc.make_fixture(
            "sst",
            sst_space(yf.power(2), gr.power(0.5)),
            sst_space(yf.power(1), gr.power(0.5)),
            override=True,
        )
        assert fixture.overridden
        assert not fixture.hypotheses["young_prec"].holds

    def test_variant_mismatch(self):
        with pytest.raises(DomainError):
            inc.make_fixture(
                "weak-sst",
                sst_space(yf.power(2), gr.power(0.5)),
                sst_space(yf.power(2), gr.power(0.5)),
            )

    def test_same_young_gate(self):
        with pytest.raises(DomainError):
            inc.make_fixture(
                "sst-same-young",
                sst_space(yf.power(2), gr.power_capped(0.5)),
                sst_space(yf.power(3), gr.power(0.25)),
            )


class TestSufficiency:
    def test_families_pass_with_unit_constants(self, families):
        # every built-in pair dominates pointwise, so the witnesses are 1
        for name in ("sst", "weak-nakai", "nakai", "weak-sst"):
            fixture = families[name]
            report = inc.verify_sufficiency(fixture)
            assert report.passed, name
            assert report.proof_constant == 1.0
            assert report.measured_constant <= 1.0 + 1e-9

    def test_guliyev_family(self, families):
        report = inc.verify_sufficiency(families["guliyev"])
        assert report.passed
        # the two spaces have equal norms, so the measured ratio is 1
        assert report.measured_constant == pytest.approx(1.0, rel=1e-9)
        assert report.proof_constant >= 1.0

    def test_same_young_special_case(self):
        fixture = inc.make_fixture(
            "sst-same-young",
            sst_space(yf.power(2), gr.power_capped(0.5)),
            sst_space(yf.power(2), gr.power(0.5)),
            seed=3,
        )
        report = inc.verify_sufficiency(fixture)
        assert report.passed
        assert report.proof_constant == 1.0

    def test_reflexive_fixture_measures_exactly_one(self):
        space = sst_space(yf.power(2), gr.power(0.5))
        fixture = inc.make_fixture("sst", space, space, seed=1)
        report = inc.verify_sufficiency(fixture)
        assert report.passed
        assert report.proof_constant == 1.0
        assert report.measured_constant == 1.0
        necessity = inc.verify_necessity(fixture, 1.0)
        assert necessity.passed
        assert necessity.proof_constant == 1.0

    def test_quartic_dominated_study_with_override(self):
        # psi2 = t**0.5 is not admissible next to t**2 + t**4 (its ratio grows),
        # but the forward inequality still holds pointwise; the override route
        # lets the study run and the measured constant stays below 1
        space2 = sst_space(yf.sum_of(yf.power(2), yf.power(4)), gr.power(0.5), override=True)
        fixture = inc.make_fixture(
            "sst", sst_space(yf.power(2), gr.power_capped(0.5)), space2, seed=5
        )
        report = inc.verify_sufficiency(fixture)
        assert report.passed
        assert report.measured_constant <= 1.0 + 1e-9

    def test_rows_carry_both_norms(self, families):
        report = inc.verify_sufficiency(families["sst"])
        assert len(report.rows) == len(families["sst"].samples)
        for row in report.rows:
            assert row.lhs >= 0.0 and row.rhs >= 0.0
            if row.rhs > 0:
                assert row.ratio == row.lhs / row.rhs


class TestNecessity:
    def test_round_trip(self, families):
        for name, fixture in families.items():
            suff = inc.verify_sufficiency(fixture)
            assert suff.passed, name
            nec = inc.verify_necessity(fixture, suff.measured_constant)
            assert nec.passed, name

    def test_sst_constant_recovery(self, families):
        fixture = families["sst"]
        suff = inc.verify_sufficiency(fixture)
        nec = inc.verify_necessity(fixture, suff.measured_constant)
        y1, y2 = fixture.space1.young, fixture.space2.young
        expected = suff.measured_constant * y1.inverse(1.0) / y2.inverse(1.0)
        assert nec.proof_constant == pytest.approx(expected, rel=1e-15)

    def test_necessity_is_indicator_norm_comparison(self, families):
        # for the sst family the recovered bound is exactly the ratio of
        # closed-form indicator norms scaled by the assumed constant
        fixture = families["sst"]
        assumed = 2.0
        nec = inc.verify_necessity(fixture, assumed)
        for r, row in zip(fixture.radii, nec.rows):
            lhs_norm = char_norm_closed(fixture.space1, r)
            rhs_norm = char_norm_closed(fixture.space2, r)
            ok_norms = lhs_norm <= assumed * rhs_norm * (1.0 + 1e-9)
            ok_row = row.lhs <= nec.proof_constant * row.rhs * (1.0 + 1e-9)
            assert ok_norms == ok_row

    def test_contrapositive_fails_on_wide_grid(self):
        contra = inc.contrapositive_fixture(seed=0)
        report = inc.verify_necessity(contra, 1.0)
        assert not report.passed
        # the violation shows up at large radii where t**0.5 outgrows t**0.25
        bad = [row for row in report.rows if row.lhs > report.proof_constant * row.rhs]
        assert bad and max(float(r.sample_id.split("=")[1]) for r in bad) >= 4.0

    def test_hypothesis_violating_fixture_needs_override_on_tight_grid(self):
        tight_c = log_grid(-1.0, 1.0, 21)
        with pytest.raises(HypothesisError):
            inc.make_fixture(
                "weak-sst",
                SpaceSpec("weak-sst", yf.power(2), gr.power(0.5), 1),
                SpaceSpec("weak-sst", yf.power(2), gr.power(0.25), 1),
                c_grid=tight_c,
            )
        fixture = inc.make_fixture(
            "weak-sst",
            SpaceSpec("weak-sst", yf.power(2), gr.power(0.5), 1),
            SpaceSpec("weak-sst", yf.power(2), gr.power(0.25), 1),
            c_grid=tight_c,
            override=True,
        )
        assert fixture.overridden
        assert not inc.verify_necessity(fixture, 1.0).passed

    def test_weak_nakai_recovery_checks_young_transfer(self, families):
        fixture = families["weak-nakai"]
        suff = inc.verify_sufficiency(fixture)
        nec = inc.verify_necessity(fixture, suff.measured_constant)
        assert nec.passed
        # rows compare Y1(t0/C3) against Y2(t0) with bound 1
        assert nec.proof_constant == 1.0

    def test_assumed_constant_validation(self, families):
        with pytest.raises(DomainError):
            inc.verify_necessity(families["sst"], 0.0)


class TestProofConstants:
    def test_guliyev_assembly(self, families):
        fixture = families["guliyev"]
        cy = fixture.hypotheses["young_prec"].witness_c
        ci = fixture.hypotheses["inverse_prec"].witness_c
        cg = fixture.hypotheses["growth_preceq"].witness_c
        assert inc.proof_constant(fixture) == cy * max(1.0, ci) * cg

    def test_nakai_assembly(self, families):
        fixture = families["nakai"]
        cy = fixture.hypotheses["young_prec"].witness_c
        cg = fixture.hypotheses["growth_preceq"].witness_c
        assert inc.proof_constant(fixture) == cy * max(1.0, cg)
        assert "growth_preceq_rev" in fixture.hypotheses  # two-sided hypothesis


class TestMorreyPower:
    def test_identical_spaces(self):
        report = inc.morrey_power_crosscheck(2, 2, gr.power(0.5), gr.power(0.5), seed=2)
        assert report.passed
        assert report.proof_constant == 1.0
        assert report.measured_constant == pytest.approx(1.0, rel=1e-12)

    def test_exponent_jump_with_capped_weights(self):
        report = inc.morrey_power_crosscheck(
            1, 2, gr.power_capped(0.5), gr.power_capped(0.5), seed=2
        )
        assert report.passed
        # power means grow with the exponent, so every ratio is at most 1
        assert report.measured_constant <= 1.0 + 1e-9

    def test_mixed_weights(self):
        report = inc.morrey_power_crosscheck(1, 2, gr.power_capped(0.5), gr.power(0.5), seed=4)
        assert report.passed

    def test_indicator_rows_use_exact_ratio(self):
        report = inc.morrey_power_crosscheck(1, 2, gr.power(0.5), gr.power(0.5), seed=2)
        grid = dict()
        for row in report.rows:
            if row.sample_id.startswith("chi_r="):
                grid[float(row.sample_id.split("=")[1])] = row
        space1 = sst_space(yf.power(1), gr.power(0.5))
        space2 = sst_space(yf.power(2), gr.power(0.5))
        for r, row in grid.items():
            assert row.lhs == pytest.approx(char_norm_closed(space1, r), rel=1e-12)
            assert row.rhs == pytest.approx(char_norm_closed(space2, r), rel=1e-12)

    def test_exponent_order_enforced(self):
        with pytest.raises(DomainError):
            inc.morrey_power_crosscheck(3, 2, gr.power(0.25), gr.power(0.25))

    def test_growth_hypothesis_enforced(self):
        # cubic growth escapes every candidate constant against a quarter power
        with pytest.raises(HypothesisError):
            inc.morrey_power_crosscheck(1, 2, gr.power(3), gr.power(0.25))
