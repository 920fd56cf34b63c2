"""Tests for closed-form and variational K-functionals and the band estimates."""

import math

import numpy as np
import pytest

from src.core.errors import DomainError, InvariantError, SolverError
from src.core.kfun import (
    build_kcurve,
    ces_lower_bounds,
    check_kcurve,
    evaluate_kcurve,
    k_discrete,
    k_l1_linf,
    k_variational,
    k_variational_converged,
    k_weighted_l1,
    k_weighted_l1_many,
    restricted_g,
    theorem3_bounds,
    theorem3_terms,
    theorem4_upper_lower,
)
from src.core.norms import ces_norm
from src.structs import (
    CoupleSpec,
    Domain,
    KMethod,
    QuadConfig,
    Seq,
    StepFunction,
    TailKind,
    TGridSpec,
    Weight,
    WeightKind,
)

ONE = Weight()
INV_T = Weight.named(WeightKind.INV_T)
LOG_INV = Weight.named(WeightKind.LOG_INV)
ONE_MINUS_T = Weight.named(WeightKind.ONE_MINUS_T)
Q = QuadConfig()
MESH = 64


def _f():
    return StepFunction.from_arrays([0.0, 0.1, 0.4, 1.0], [2.0, 0.5, 1.5])


class TestClosedForms:
    """Exact K for weighted L1, (L1, L_inf) and the discrete couple."""

    def test_weighted_l1_constant(self):
        """K(1/2, 1; L1, L1(1/t)) = 1/2 + ln(2)/2."""
        assert k_weighted_l1(0.5, StepFunction.constant(), ONE, INV_T) == pytest.approx(0.5 + 0.5 * math.log(2.0))
        assert k_weighted_l1(0.5, StepFunction.constant(), ONE, INV_T) == pytest.approx(0.84657, abs=1e-5)

    def test_weighted_l1_beyond_support(self):
        """For t past the support K is ||f||_L1."""
        f = _f()
        assert k_weighted_l1(2.0, f, ONE, INV_T) == pytest.approx(f.integral())

    def test_generic_pair_matches_named(self):
        """The root-finding path agrees with the analytic crossover."""
        f = _f()
        step = Weight(kind=WeightKind.STEP, step=StepFunction.constant())
        # a STEP weight equal to 1 forces the generic route
        generic = k_weighted_l1(0.3, f, ONE_MINUS_T, step)
        named = k_weighted_l1(0.3, f, ONE_MINUS_T, ONE)
        assert generic == pytest.approx(named, rel=1e-10)

    def test_equal_weights(self):
        """Equal weights give min(1, t) ||f||."""
        ks = k_weighted_l1_many([0.25, 4.0], _f(), ONE, ONE)
        assert ks == pytest.approx([0.25 * _f().integral(), _f().integral()])

    def test_l1_linf(self):
        """K(t; L1, L_inf) is the integral of the rearrangement over [0, t]."""
        f = StepFunction.from_arrays([0.0, 1 / 3, 2 / 3, 1.0], [1.0, 3.0, 2.0])
        assert k_l1_linf(0.5, f) == pytest.approx(3 / 3 + 2 / 6)
        assert k_l1_linf(0.5, f) == pytest.approx(4 / 3)

    def test_discrete(self):
        """K(t; l1, l1(1/k)) = sum x_k min(1, t/k)."""
        assert k_discrete(1.5, Seq(vals=(1.0, 1.0))) == pytest.approx(1.75)
        assert k_discrete(2.0, Seq.unit_vector(1)) == pytest.approx(1.0)

    def test_nonpositive_t(self):
        """t must be positive."""
        with pytest.raises(DomainError):
            k_weighted_l1(0.0, _f(), ONE, INV_T)

    def test_unit_only_weights(self):
        """Logarithmic weights are rejected on the half-line."""
        f = StepFunction.from_arrays([0.0, 2.0], [1.0], Domain.halfline(4.0))
        with pytest.raises(DomainError):
            k_weighted_l1(0.5, f, LOG_INV, ONE)


class TestVariational:
    """The LP oracle reproduces closed forms and respects the couple."""

    @pytest.mark.parametrize("t", [0.05, 0.3, 2.0])
    def test_matches_weighted_l1(self, t):
        """LP optimum equals the closed form for (L1, L1(1/t))."""
        f = _f()
        d = k_variational(t, f, CoupleSpec.weighted_l1(ONE, INV_T), MESH)
        assert d.value == pytest.approx(k_weighted_l1(t, f, ONE, INV_T), rel=1e-7)

    def test_matches_l1_linf(self):
        """LP optimum equals the rearrangement formula for (L1, L_inf)."""
        f = StepFunction.from_arrays([0.0, 1 / 3, 2 / 3, 1.0], [1.0, 3.0, 2.0])
        d = k_variational(0.5, f, CoupleSpec.l1_linf(), MESH)
        assert d.value == pytest.approx(4 / 3, rel=1e-7)

    def test_witness_splits_f(self):
        """g + h = f and the value is recomputed from the witness."""
        f = _f()
        d = k_variational(0.2, f, CoupleSpec.ces_unit(), MESH)
        xs = np.linspace(0.001, 0.999, 200)
        assert np.allclose(d.g(xs) + d.h(xs), f(xs), atol=1e-9)
        assert d.value == pytest.approx(d.lp_value, rel=1e-6)

    def test_ces_beyond_one(self):
        """K(t; Ces_1, Ces_inf) = ||f||_Ces1 for t >= 1."""
        f = _f()
        d = k_variational(1.5, f, CoupleSpec.ces_unit(), MESH)
        assert d.value == pytest.approx(ces_norm(f, 1.0, Q), rel=1e-7)

    def test_converged(self):
        """Mesh doubling stops once successive values agree."""
        d = k_variational_converged(0.3, _f(), CoupleSpec.ces_unit(), mesh_start=32, mesh_cap=256, rel_change=1e-3)
        assert d.mesh_n >= 32
        assert d.value > 0

    def test_discrete_has_no_lp(self):
        """The discrete couple has no step-function LP."""
        with pytest.raises(SolverError):
            k_variational(0.5, _f(), CoupleSpec.discrete(), MESH)

    def test_restricted_support(self):
        """Restricted couples only admit functions supported in their interval."""
        couple = CoupleSpec.restricted(CoupleSpec.l1w_cesinf(ONE_MINUS_T), 0.5, 1.0)
        with pytest.raises(DomainError):
            k_variational(0.5, _f(), couple, MESH)

    @pytest.mark.parametrize("t", [0.01, 0.2, 0.7])
    def test_restricted_sandwich(self, t):
        """G(t, h) <= K(t, h) <= 2 G(t, h) for supp h in [1/2, 1]."""
        h = StepFunction.from_arrays([0.0, 0.5, 0.8, 1.0], [0.0, 1.0, 4.0])
        couple = CoupleSpec.restricted(CoupleSpec.l1w_cesinf(ONE_MINUS_T), 0.5, 1.0)
        G = restricted_g(t, h)
        K = k_variational(t, h, couple, MESH).value
        assert G * (1 - 1e-7) <= K <= 2 * G * (1 + 1e-7)


class TestBandEstimates:
    """Two-sided estimates for K(t, f; Ces_1, Ces_inf)."""

    def test_constant_example(self):
        """Bounds for f = 1 at t = 1/2."""
        A, B = theorem3_terms(0.5, StepFunction.constant(), Q)
        lower, upper = theorem3_bounds(0.5, StepFunction.constant(), Q)
        assert upper == pytest.approx(1.00226, abs=1e-4)
        assert lower == pytest.approx(0.06782, abs=1e-4)
        assert upper == pytest.approx(A + 0.5 * B)
        assert lower == pytest.approx(upper / (2 * math.e**2))

    @pytest.mark.parametrize("t", [0.01, 0.1, 0.5, 0.9])
    def test_sandwich_holds(self, t):
        """lower <= K_LP <= upper and K_LP >= the certified lower bounds."""
        f = _f()
        lower, upper = theorem3_bounds(t, f, Q)
        K = k_variational(t, f, CoupleSpec.ces_unit(), MESH).value
        eps = 1e-6 * upper
        assert lower - eps <= K <= upper + eps
        assert ces_lower_bounds(t, f, Q).combined <= K + eps

    def test_decreasing(self):
        """v/3 <= K <= v for non-increasing f."""
        f = StepFunction.from_arrays([0.0, 0.05, 0.3, 1.0], [5.0, 2.0, 0.5])
        for t in (0.02, 0.3, 0.8):
            lower, upper = theorem4_upper_lower(t, f, Q)
            K = k_variational(t, f, CoupleSpec.ces_unit(), MESH).value
            assert lower * (1 - 1e-6) <= K <= upper * (1 + 1e-6)

    def test_decreasing_needs_monotone(self):
        """The one-band estimate rejects increasing functions."""
        with pytest.raises(InvariantError):
            theorem4_upper_lower(0.5, _f(), Q)

    def test_band_range(self):
        """Band estimates live on 0 < t < 1."""
        with pytest.raises(DomainError):
            theorem3_bounds(1.0, _f(), Q)


class TestKCurve:
    """Sampled curves, tails and invariant witnesses."""

    def test_closed_form_curve(self):
        """Closed-form curves evaluate exactly and carry a constant tail."""
        f = _f()
        kc = build_kcurve(f, CoupleSpec.weighted_l1(ONE, INV_T))
        assert kc.tail.kind == TailKind.CONSTANT_BEYOND
        assert kc.tail.t_c == pytest.approx(1.0)
        assert kc.tail.value == pytest.approx(f.integral())
        assert float(evaluate_kcurve(kc, [0.3])[0]) == pytest.approx(k_weighted_l1(0.3, f, ONE, INV_T))

    def test_discrete_curve(self):
        """Kinks at the integers and a constant tail from N on."""
        kc = build_kcurve(Seq(vals=(1.0, 2.0, 0.5)), CoupleSpec.discrete())
        assert kc.kinks == (1.0, 2.0, 3.0)
        assert kc.tail.t_c == pytest.approx(3.0)
        assert kc.tail.value == pytest.approx(3.5)

    def test_lp_curve(self):
        """LP curves stop at the constant tail and interpolate in between."""
        f = _f()
        grid = TGridSpec(t_min=1e-3, t_max=10.0, points_per_decade=2)
        kc = build_kcurve(f, CoupleSpec.ces_unit(), grid, KMethod.LP, mesh_n=32)
        assert kc.tgrid[-1] == pytest.approx(1.0)
        assert float(evaluate_kcurve(kc, [5.0])[0]) == pytest.approx(kc.tail.value)
        assert np.all(np.diff(kc.kvals) >= -1e-6 * max(kc.kvals))

    def test_no_closed_form(self):
        """The Cesaro couple needs the LP method."""
        with pytest.raises(DomainError):
            build_kcurve(_f(), CoupleSpec.ces_unit())

    def test_check_rejects_decreasing(self):
        """Samples that decrease in t break the invariants."""
        ts = np.array([0.1, 0.2, 0.4])
        with pytest.raises(InvariantError):
            check_kcurve(ts, np.array([0.3, 0.2, 0.25]), 1.0, 10.0, 1e-9)
