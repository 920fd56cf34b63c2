"""Tests for the (theta, p) and (theta, inf) interpolation norms."""

import math

import pytest

from src.core.errors import DivergenceError, DomainError
from src.core.interp import (
    lower_theta_p_norm,
    theta_inf_norm,
    theta_p_bracket,
    theta_p_norm,
    thm1_identity_norm,
)
from src.core.kfun import build_kcurve
from src.structs import CoupleSpec, Domain, KMethod, QuadConfig, Seq, StepFunction, TGridSpec, Weight, WeightKind

ONE = Weight()
INV_T = Weight.named(WeightKind.INV_T)
Q = QuadConfig()


def _f():
    return StepFunction.from_arrays([0.0, 0.1, 0.4, 1.0], [2.0, 0.5, 1.5])


class TestThetaP:
    """(theta, p)-norms of closed-form and sampled curves."""

    @pytest.mark.parametrize("p", [1.5, 2.0, 3.0])
    def test_unit_vector(self, p):
        """||e_1|| over (l1, l1(1/k)) is (p')^(1/p) at theta = 1 - 1/p."""
        kc = build_kcurve(Seq.unit_vector(1), CoupleSpec.discrete())
        dual = p / (p - 1.0)
        assert theta_p_norm(kc, 1.0 - 1.0 / p, p, Q) == pytest.approx(dual ** (1.0 / p), rel=1e-8)

    def test_constant_identity(self):
        """f = 1 at p = 2 gives sqrt(6) both ways."""
        f = StepFunction.constant()
        kc = build_kcurve(f, CoupleSpec.weighted_l1(ONE, INV_T))
        assert thm1_identity_norm(f, 2.0, Q) == pytest.approx(math.sqrt(6.0), rel=1e-9)
        assert theta_p_norm(kc, 0.5, 2.0, Q) == pytest.approx(math.sqrt(6.0), rel=1e-6)

    @pytest.mark.parametrize("p", [1.5, 2.0, 4.0])
    def test_identity_step_function(self, p):
        """The curve integral agrees with the Cesaro-plus-Copson formula."""
        f = _f()
        kc = build_kcurve(f, CoupleSpec.weighted_l1(ONE, INV_T))
        ident = thm1_identity_norm(f, p, Q)
        assert theta_p_norm(kc, 1.0 - 1.0 / p, p, Q) == pytest.approx(ident, rel=1e-6)

    def test_identity_halfline(self):
        """On the half-line no end-point term is added."""
        f = StepFunction.from_arrays([0.0, 1.0, 3.0], [1.0, 0.5], Domain.halfline(16.0))
        kc = build_kcurve(f, CoupleSpec.weighted_l1(ONE, INV_T))
        assert theta_p_norm(kc, 0.5, 2.0, Q) == pytest.approx(thm1_identity_norm(f, 2.0, Q), rel=1e-6)

    def test_bracket_ordered(self):
        """The enclosure is ordered and contains the midpoint."""
        kc = build_kcurve(_f(), CoupleSpec.l1_linf())
        lo, hi = theta_p_bracket(kc, 0.3, 2.0, Q)
        assert 0 < lo <= hi
        assert lo <= theta_p_norm(kc, 0.3, 2.0, Q) <= hi

    def test_zero_curve(self):
        """The zero element has norm zero for every theta."""
        kc = build_kcurve(Seq(vals=(0.0,)), CoupleSpec.discrete())
        assert theta_p_norm(kc, 0.0, 2.0) == 0.0

    def test_theta_zero_diverges(self):
        """theta = 0 with p < inf diverges at infinity."""
        kc = build_kcurve(_f(), CoupleSpec.l1_linf())
        with pytest.raises(DivergenceError):
            theta_p_norm(kc, 0.0, 2.0)

    def test_theta_one_diverges(self):
        """theta = 1 with p < inf diverges at 0."""
        kc = build_kcurve(_f(), CoupleSpec.l1_linf())
        with pytest.raises(DivergenceError):
            theta_p_norm(kc, 1.0, 2.0)

    @pytest.mark.parametrize(("theta", "p"), [(-0.1, 2.0), (1.5, 2.0), (0.5, 0.5), (0.5, math.inf)])
    def test_bad_parameters(self, theta, p):
        """theta lies in [0, 1] and p in [1, inf)."""
        kc = build_kcurve(_f(), CoupleSpec.l1_linf())
        with pytest.raises(DomainError):
            theta_p_norm(kc, theta, p)

    def test_p_one_identity_diverges(self):
        """The identity norm is infinite at p = 1."""
        with pytest.raises(DivergenceError):
            thm1_identity_norm(_f(), 1.0)


class TestThetaInf:
    """(theta, inf)-norms."""

    def test_theta_one(self):
        """theta = 1 gives ||f||_X1."""
        f = StepFunction.indicator(0.5, 1.0)
        kc = build_kcurve(f, CoupleSpec.weighted_l1(ONE, INV_T))
        assert theta_inf_norm(kc, 1.0) == pytest.approx(math.log(2.0))

    def test_theta_zero(self):
        """theta = 0 gives ||f||_X0."""
        f = _f()
        kc = build_kcurve(f, CoupleSpec.weighted_l1(ONE, INV_T))
        assert theta_inf_norm(kc, 0.0) == pytest.approx(f.integral())

    def test_unit_vector(self):
        """sup of t^-theta min(1, t) is attained at t = 1."""
        kc = build_kcurve(Seq.unit_vector(1), CoupleSpec.discrete())
        assert theta_inf_norm(kc, 0.4) == pytest.approx(1.0)

    def test_bad_theta(self):
        """theta outside [0, 1] is rejected."""
        kc = build_kcurve(Seq.unit_vector(1), CoupleSpec.discrete())
        with pytest.raises(DomainError):
            theta_inf_norm(kc, 2.0)


class TestLowerCurve:
    """Certified lower bound for (Ces_1, Ces_inf)."""

    def test_below_lp_upper(self):
        """The lower-bound curve stays under the LP enclosure."""
        f = _f()
        grid = TGridSpec(t_min=1e-4, t_max=1.0, points_per_decade=4)
        kc = build_kcurve(f, CoupleSpec.ces_unit(), grid, KMethod.LP, mesh_n=32)
        _, upper = theta_p_bracket(kc, 0.5, 2.0, Q)
        assert 0 < lower_theta_p_norm(f, 2.0, Q) <= upper

    def test_needs_p_above_one(self):
        """p = 1 is rejected."""
        with pytest.raises(DomainError):
            lower_theta_p_norm(_f(), 1.0)
