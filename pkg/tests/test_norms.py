import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from omlab import geometry as geo
from omlab import growth as gr
from omlab import norms
from omlab import young as yf
from omlab.errors import DomainError, HypothesisError, UnsupportedGeometryError
from omlab.inclusion import random_simple_functions

CHI = geo.characteristic((0.0,), 1.0)
B1 = geo.Ball((0.0,), 1.0)
B2 = geo.Ball((0.0,), 2.0)


def spec(variant, young, growth, n=1, override=False):
    return norms.SpaceSpec(variant, young, growth, n, override=override)


class TestSpaceSpec:
    def test_class_gate(self):
        with pytest.raises(HypothesisError):
            spec("sst", yf.power(2), gr.power(0.9))
        overridden = spec("sst", yf.power(2), gr.power(0.9), override=True)
        assert not overridden.validated
        assert overridden.membership.violation is not None

    def test_class_dispatch(self):
        assert spec("nakai", yf.power(2), gr.power(0.5)).required_class == "G1"
        assert spec("weak-sst", yf.power(2), gr.power(0.5)).required_class == "G2"
        assert spec("guliyev", yf.power(2), gr.inv_power(0.5)).required_class == "GTheta"

    def test_bad_variant(self):
        with pytest.raises(DomainError):
            spec("strong", yf.power(2), gr.power(0.5))


class TestLuxemburgLocal:
    def test_scaled_indicator_on_own_ball(self):
        assert norms.luxemburg_local(CHI.scaled(3.0), yf.power(2), B1) == 3.0

    def test_indicator_in_larger_ball(self):
        value = norms.luxemburg_local(CHI, yf.power(2), B2)
        assert value == pytest.approx(1.0 / math.sqrt(2.0), rel=1e-12)

    def test_zero_function(self):
        zero = geo.SimpleRadialFunction((0.0,), (1.0,), (0.0,))
        assert norms.luxemburg_local(zero, yf.power(2), B1) == 0.0

    def test_support_outside_ball(self):
        ring = geo.SimpleRadialFunction((0.0,), (1.0, 2.0), (0.0, 5.0))
        small = geo.Ball((0.0,), 0.5)
        assert norms.luxemburg_local(ring, yf.power(2), small) == 0.0

    def test_bisect_agrees_with_closed_form(self):
        for Y in [yf.power(3), yf.exp_minus_one(), yf.sum_of(yf.power(1), yf.power(2))]:
            auto = norms.luxemburg_local(CHI, Y, B2)
            forced = norms.luxemburg_local(CHI, Y, B2, method="bisect")
            assert forced == pytest.approx(auto, rel=1e-9)

    def test_defining_inequality_holds_at_result(self):
        f = geo.SimpleRadialFunction((0.0,), (0.5, 1.0, 2.0), (4.0, 1.0, 0.5))
        Y = yf.power_log(2)
        b = norms.luxemburg_local(f, Y, B2)
        assert geo.mean_integral(f, Y, b, B2) <= 1.0

    def test_misaligned(self):
        with pytest.raises(UnsupportedGeometryError):
            norms.luxemburg_local(CHI, yf.power(2), geo.Ball((1.0,), 1.0))


class TestNakaiLocal:
    def test_indicator_closed_form_value(self):
        # condition phi(|B|)/|B| * int = 2*Phi(1/b) <= 1 forces b = sqrt(2)
        value = norms.nakai_local(CHI, gr.power(1), yf.power(2), B1)
        assert value == pytest.approx(math.sqrt(2.0), rel=1e-12)

    def test_indicator_in_larger_ball(self):
        value = norms.nakai_local(CHI, gr.power(1), yf.power(2), B2)
        expected = 1.0 / yf.power(2).inverse(4.0 / (2.0 * gr.power(1)(4.0)))
        assert value == pytest.approx(expected, rel=1e-12)

    def test_oracle_bisection(self):
        phi, Y = gr.power(0.5), yf.exp_minus_one()
        got = norms.nakai_local(CHI, phi, Y, B2)
        weight = phi(B2.measure) / B2.measure

        def ok(b):
            return weight * Y(1.0 / b) * 2.0 <= 1.0

        assert got == pytest.approx(oracles.halving_gauge(ok), rel=1e-9)

    def test_unit_measure_reduces_to_luxemburg(self):
        ball = geo.Ball((0.0,), 0.5)  # |B| = 1 in dimension 1
        f = geo.characteristic((0.0,), 0.25).scaled(2.0)
        assert norms.nakai_local(f, gr.power(1), yf.power(2), ball) == pytest.approx(
            norms.luxemburg_local(f, yf.power(2), ball), rel=1e-12
        )


class TestWeakLocal:
    def test_example(self):
        sp = spec("weak-nakai", yf.power(2), gr.power(1))
        f = geo.characteristic((0.0,), 0.5).scaled(2.0)
        ball = geo.Ball((0.0,), 0.5)
        assert norms.weak_local(f, sp, ball) == pytest.approx(2.0, rel=1e-12)

    def test_indicator_closed_forms(self):
        for r, r0 in [(0.5, 1.0), (1.0, 1.0), (2.0, 0.5), (4.0, 2.0)]:
            chi = geo.characteristic((0.0,), r0)
            ball = geo.Ball((0.0,), r)
            inter = geo.concentric_intersection(1, r, r0)
            sp_n = spec("weak-nakai", yf.power(2), gr.power(0.5))
            expected = 1.0 / yf.power(2).inverse(
                ball.measure / (inter * gr.power(0.5)(ball.measure))
            )
            assert norms.weak_local(chi, sp_n, ball) == pytest.approx(expected, rel=1e-12)
            sp_s = spec("weak-sst", yf.power(2), gr.power(0.5))
            expected = 1.0 / yf.power(2).inverse(ball.measure / inter)
            assert norms.weak_local(chi, sp_s, ball) == pytest.approx(expected, rel=1e-12)

    def test_indicator_weak_equals_strong_locally(self):
        sp = spec("weak-nakai", yf.power(2), gr.power(0.5))
        for r in [0.5, 1.0, 3.0]:
            ball = geo.Ball((0.0,), r)
            weak = norms.weak_local(CHI, sp, ball)
            strong = norms.nakai_local(CHI, gr.power(0.5), yf.power(2), ball)
            assert weak == pytest.approx(strong, rel=1e-12)

    def test_levels_vs_bisect(self):
        rng = random.Random(7)
        sp = spec("weak-sst", yf.sum_of(yf.power(1), yf.power(2)), gr.power_capped(0.5))
        for f in random_simple_functions(11, 20):
            ball = geo.Ball((0.0,), 2.0 ** rng.uniform(-2, 4))
            a = norms.weak_local(f, sp, ball, method="levels")
            b = norms.weak_local(f, sp, ball, method="bisect")
            assert b == pytest.approx(a, rel=1e-9, abs=1e-300)

    def test_strong_variant_rejected(self):
        sp = spec("sst", yf.power(2), gr.power(0.5))
        with pytest.raises(DomainError):
            norms.weak_local(CHI, sp, B1)


class TestCharNormClosed:
    def test_weight_inside_variants(self):
        sp = spec("nakai", yf.power(2), gr.power(1))
        value = norms.char_norm_closed(sp, 1.0)
        assert value == pytest.approx(math.sqrt(2.0), rel=1e-15)
        sp_w = spec("weak-nakai", yf.power(2), gr.power(1))
        assert norms.char_norm_closed(sp_w, 1.0) == value

    def test_mean_luxemburg_variants(self):
        sp = spec("sst", yf.power(2), gr.power(0.5))
        assert norms.char_norm_closed(sp, 0.5) == 1.0  # psi(1)/Yinv(1)
        sp_w = spec("weak-sst", yf.power(2), gr.power(0.5))
        assert norms.char_norm_closed(sp_w, 0.5) == 1.0

    def test_unnormalized_variant(self):
        sp = spec("guliyev", yf.power(2), gr.inv_power(0.5))
        assert norms.char_norm_closed(sp, 1.0) == pytest.approx(math.sqrt(2.0), rel=1e-15)

    def test_degenerate_radius(self):
        sp = spec("sst", yf.power(2), gr.power(0.5))
        with pytest.raises(DomainError):
            norms.char_norm_closed(sp, 0.0)


ALL_SPECS = [
    ("nakai", yf.power(2), gr.power(0.5)),
    ("sst", yf.power(2), gr.power(0.5)),
    ("weak-nakai", yf.sum_of(yf.power(1), yf.power(2)), gr.power_capped(0.5)),
    ("weak-sst", yf.power(2), gr.power(0.5)),
    ("guliyev", yf.power(2), gr.inv_power(0.5)),
]


class TestGlobalNorm:
    @pytest.mark.parametrize("variant,Y,g", ALL_SPECS, ids=lambda x: str(x))
    def test_indicator_matches_closed_form(self, variant, Y, g):
        sp = spec(variant, Y, g)
        for r0 in [0.25, 1.0, 4.0]:
            chi = geo.characteristic((0.0,), r0)
            result = norms.global_norm(chi, sp)
            assert result.exact
            assert result.attained_at == r0
            assert result.value == norms.char_norm_closed(sp, r0)

    def test_caller_grid_without_r0_is_lower_bound(self):
        sp = spec("sst", yf.power(2), gr.power(0.5))
        chi = geo.characteristic((0.0,), 1.0)
        result = norms.global_norm(chi, sp, radii=[0.25, 0.5])
        assert not result.exact
        assert result.value <= norms.char_norm_closed(sp, 1.0)

    def test_override_spec_never_exact(self):
        sp = spec("sst", yf.power(2), gr.power(0.9), override=True)
        result = norms.global_norm(geo.characteristic((0.0,), 1.0), sp)
        assert not result.exact

    def test_zero_function(self):
        sp = spec("sst", yf.power(2), gr.power(0.5))
        zero = geo.SimpleRadialFunction((0.0,), (1.0,), (0.0,))
        assert norms.global_norm(zero, sp).value == 0.0

    def test_empty_grid(self):
        sp = spec("sst", yf.power(2), gr.power(0.5))
        with pytest.raises(DomainError):
            norms.global_norm(CHI, sp, radii=[])

    def test_dimension_mismatch(self):
        sp = spec("sst", yf.power(2), gr.power(0.5), n=2)
        with pytest.raises(DomainError):
            norms.global_norm(CHI, sp)

    @pytest.mark.parametrize("variant,Y,g", ALL_SPECS, ids=lambda x: str(x))
    @pytest.mark.parametrize("factor", [0.5, 2.0, 3.0, math.pi])
    def test_absolute_homogeneity(self, variant, Y, g, factor):
        sp = spec(variant, Y, g)
        f = geo.SimpleRadialFunction((0.0,), (0.5, 1.0, 3.0), (2.0, 5.0, 1.0))
        base = norms.global_norm(f, sp).value
        scaled = norms.global_norm(f.scaled(factor), sp).value
        assert scaled == pytest.approx(factor * base, rel=1e-9)

    @pytest.mark.parametrize("variant,Y,g", ALL_SPECS, ids=lambda x: str(x))
    def test_monotone_in_the_function(self, variant, Y, g):
        sp = spec(variant, Y, g)
        f = geo.SimpleRadialFunction((0.0,), (0.5, 1.0, 3.0), (2.0, 5.0, 1.0))
        bigger = geo.SimpleRadialFunction((0.0,), (0.5, 1.0, 3.0), (2.5, 5.0, 2.0))
        assert geo.pointwise_leq(f, bigger)
        assert (
            norms.global_norm(f, sp).value
            <= norms.global_norm(bigger, sp).value * (1.0 + 1e-12)
        )


class TestWeakBelowStrong:
    PAIRS = [
        (("weak-nakai", "nakai"), yf.power(2), gr.power(0.5)),
        (("weak-nakai", "nakai"), yf.exp_minus_one(), gr.constant(1)),
        (("weak-sst", "sst"), yf.power(2), gr.power(0.5)),
        (("weak-sst", "sst"), yf.sum_of(yf.power(1), yf.power(2)), gr.power_capped(0.5)),
    ]

    @pytest.mark.parametrize("variants,Y,g", PAIRS, ids=lambda x: str(x))
    def test_global(self, variants, Y, g):
        weak_spec = spec(variants[0], Y, g)
        strong_spec = spec(variants[1], Y, g)
        for f in random_simple_functions(3, 25):
            weak = norms.global_norm(f, weak_spec).value
            strong = norms.global_norm(f, strong_spec).value
            assert weak <= strong + 1e-12

    def test_local(self):
        sp = spec("weak-nakai", yf.power(2), gr.power(0.5))
        for f in random_simple_functions(5, 15):
            for r in [0.5, 2.0, 8.0]:
                ball = geo.Ball((0.0,), r)
                weak = norms.weak_local(f, sp, ball)
                strong = norms.nakai_local(f, gr.power(0.5), yf.power(2), ball)
                assert weak <= strong + 1e-12


class TestGuliyevGlobal:
    def test_indicator_example(self):
        result = norms.guliyev_global(CHI, gr.inv_power(0.5), yf.power(2))
        assert result.value == pytest.approx(math.sqrt(2.0), rel=1e-12)

    def test_zero(self):
        zero = geo.SimpleRadialFunction((0.0,), (1.0,), (0.0,))
        assert norms.guliyev_global(zero, gr.inv_power(0.5), yf.power(2)).value == 0.0

    def test_constant_weight_single_radius(self):
        result = norms.guliyev_global(CHI, gr.constant(1), yf.power(2), radii=[1.0])
        assert result.value == pytest.approx(1.0, rel=1e-12)

    def test_quantity_by_hand(self):
        # at r = 1: (1/theta(2)) * Yinv(1/2) * unnormalized gauge of chi
        theta, Y = gr.inv_power(0.5), yf.power(2)
        lux = norms.luxemburg_unnormalized(CHI, Y, B1)
        assert lux == pytest.approx(math.sqrt(2.0), rel=1e-12)
        by_hand = (1.0 / theta(2.0)) * Y.inverse(0.5) * lux
        result = norms.guliyev_global(CHI, theta, Y, radii=[1.0])
        assert result.value == pytest.approx(by_hand, rel=1e-12)


class TestPowerReductions:
    def test_identity_weight_is_orlicz_norm(self):
        # growth t -> t makes the per-ball condition the raw integral; the
        # supremum over radii covering the support is the whole-space norm
        sp = spec("nakai", yf.exp_minus_one(), gr.power(1))
        for f in random_simple_functions(13, 10):
            got = norms.global_norm(f, sp).value
            expected = oracles.orlicz_norm(f, yf.exp_minus_one(), 1)
            assert got == pytest.approx(expected, rel=1e-7, abs=1e-300)

    def test_power_young_is_generalized_morrey(self):
        sp = spec("sst", yf.power(2), gr.power(0.5))
        radii = [2.0 ** k for k in range(-6, 7)]
        for f in random_simple_functions(17, 10):
            got = norms.global_norm(f, sp).value
            expected = oracles.generalized_morrey_norm(
                f, 1, radii, 2.0, lambda u: u ** 0.5
            )
            assert got == pytest.approx(expected, rel=1e-9, abs=1e-300)


@settings(max_examples=25, deadline=None)
@given(
    st.sampled_from([0.25, 0.5, 1.0, 2.0, 4.0]),
    st.floats(0.25, 8.0),
)
def test_indicator_norm_scales_with_radius_pair(r, r0):
    # local indicator norms follow the intersection formula for every r, r0
    sp = spec("weak-sst", yf.power(2), gr.power(0.5))
    chi = geo.characteristic((0.0,), r0)
    ball = geo.Ball((0.0,), r)
    expected = 1.0 / yf.power(2).inverse(
        geo.ball_volume(1, r) / geo.concentric_intersection(1, r, r0)
    )
    assert norms.weak_local(chi, sp, ball) == pytest.approx(expected, rel=1e-12)
