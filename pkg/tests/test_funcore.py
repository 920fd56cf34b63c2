"""Tests for step functions, rearrangement and the tau split geometry."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from src.core.errors import DomainError
from src.core.funcore import (
    common_refinement,
    rearrange,
    t_one,
    t_zero,
    tau1,
    tau1_inverse,
    tau2,
    tau_pair,
)
from src.structs import Domain, StepFunction, TauPair


def _f():
    return StepFunction.from_arrays([0.0, 0.25, 0.5, 1.0], [1.0, 3.0, 2.0])


class TestTau:
    """tau1(t) = t / ln(e/t), tau2(t) = e^-t and their crossing points."""

    def test_values_at_one(self):
        """At t = 1 both functions are explicit."""
        tp = tau_pair(1.0)
        assert tp.tau1 == pytest.approx(1.0)
        assert tp.tau2 == pytest.approx(math.exp(-1.0))

    def test_out_of_range(self):
        """Only 0 < t <= 1 is accepted."""
        with pytest.raises(DomainError):
            tau_pair(0.0)
        with pytest.raises(DomainError):
            tau_pair(1.5)

    def test_hand_built_pair_checked(self):
        """A TauPair outside 0 < tau1 <= t, 1/e <= tau2 < 1 is rejected."""
        TauPair(t=0.5, tau1=tau1(0.5), tau2=tau2(0.5))
        with pytest.raises(ValidationError):
            TauPair(t=0.5, tau1=0.6, tau2=tau2(0.5))
        with pytest.raises(ValidationError):
            TauPair(t=0.5, tau1=0.0, tau2=tau2(0.5))
        with pytest.raises(ValidationError):
            TauPair(t=0.5, tau1=tau1(0.5), tau2=0.2)
        with pytest.raises(ValidationError):
            TauPair(t=0.5, tau1=tau1(0.5), tau2=1.0)
        with pytest.raises(ValidationError):
            TauPair(t=2.0, tau1=0.5, tau2=0.5)

    def test_t_zero(self):
        """t0 is the unique crossing of tau1 and tau2."""
        t0 = t_zero()
        assert abs(t0 - 0.6867) < 5e-3
        assert tau1(t0) == pytest.approx(tau2(t0), abs=1e-12)
        assert tau1(0.5 * t0) < tau2(0.5 * t0)
        assert tau1(0.5 * (1 + t0)) > tau2(0.5 * (1 + t0))

    def test_t_one(self):
        """t1 lies in (0, t0) and solves tau1 = tau2 / e."""
        t1 = t_one()
        assert 0.0 < t1 < t_zero()
        assert tau1(t1) == pytest.approx(tau2(t1) / math.e, abs=1e-12)

    @given(st.floats(min_value=1e-8, max_value=1.0))
    @settings(max_examples=50, deadline=None)
    def test_tau1_inverse(self, s):
        """tau1(tau1_inverse(s)) = s."""
        assert tau1(tau1_inverse(s)) == pytest.approx(s, rel=1e-10)


class TestStepFunction:
    """Mesh operations keep the function pointwise."""

    def test_masses_and_primitive(self):
        """Cell masses and the exact primitive."""
        f = _f()
        assert f.integral() == pytest.approx(0.25 + 0.75 + 1.0)
        assert float(f.primitive(0.375)) == pytest.approx(0.25 + 3 * 0.125)
        assert float(f.primitive(2.0)) == pytest.approx(2.0)

    def test_invalid_mesh(self):
        """Unit meshes start at 0 and end at 1; values are nonnegative."""
        with pytest.raises(ValueError):
            StepFunction.from_arrays([0.0, 0.5], [1.0])
        with pytest.raises(ValueError):
            StepFunction.from_arrays([0.0, 1.0], [-1.0])
        with pytest.raises(ValueError):
            StepFunction.from_arrays([0.0, 0.5, 0.5, 1.0], [1.0, 1.0, 1.0])

    def test_mask(self):
        """Masking keeps only the chosen intervals."""
        g = _f().mask([(0.0, 0.3), (0.9, 1.0)])
        assert g.integral() == pytest.approx(0.25 + 3 * 0.05 + 2 * 0.1)
        assert float(g(0.6)) == 0.0

    def test_refine_is_pointwise_equal(self):
        """Refinement adds cells, grading and extra points without changing values."""
        f = _f()
        r = f.refine(64, extra_points=[0.3141], geometric_levels=5)
        assert r.n_cells >= 64
        assert 0.3141 in r.breaks
        xs = np.linspace(0.001, 0.999, 997)
        assert np.array_equal(f(xs), r(xs))
        assert r.integral() == pytest.approx(f.integral(), rel=1e-14)

    def test_support(self):
        """Support ends of a function with zero cells."""
        g = StepFunction.indicator(0.2, 0.7)
        assert g.support_start() == pytest.approx(0.2)
        assert g.support_end() == pytest.approx(0.7)


class TestRearrange:
    """Non-increasing rearrangement."""

    def test_rearrange(self):
        """Cells are sorted by value and the integral is kept."""
        r = rearrange(_f())
        assert r.is_nonincreasing()
        assert list(r.vals) == [3.0, 2.0, 1.0]
        assert r.breaks == pytest.approx((0.0, 0.25, 0.75, 1.0))

    def test_halfline(self):
        """Rearrangement on the half-line keeps the length."""
        f = StepFunction.from_arrays([0.0, 1.0, 3.0], [0.5, 2.0], Domain.halfline(10.0))
        r = rearrange(f)
        assert r.end == pytest.approx(3.0)
        assert r.integral() == pytest.approx(f.integral())

    def test_common_refinement(self):
        """Both functions share one mesh after refinement."""
        f = _f()
        g = StepFunction.indicator(0.1, 0.6)
        a, b = common_refinement(f, g)
        assert a.breaks == b.breaks
        assert a.integral() == pytest.approx(f.integral())
        assert b.integral() == pytest.approx(g.integral())

    def test_common_refinement_domains(self):
        """Functions on different domains cannot be merged."""
        h = StepFunction.constant(domain=Domain.halfline(2.0))
        with pytest.raises(DomainError):
            common_refinement(_f(), h)
