"""Tests for the Cesaro, Copson, discrete and maximal operators."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from src.core.errors import DomainError
from src.core.operators import (
    cesaro,
    cesaro_of,
    copson,
    copson_of,
    discrete_cesaro,
    discrete_copson,
    maximal,
    maximal_many,
)
from src.structs import Domain, Seq, StepFunction

XS = np.geomspace(1e-6, 1.0, 41)


def _f():
    return StepFunction.from_arrays([0.0, 0.1, 0.4, 1.0], [2.0, 0.5, 1.5])


class TestCesaroCopson:
    """Exact piecewise transforms of step functions."""

    def test_constant(self):
        """C1 = 1 and C*1 = ln(1/x) on [0, 1]."""
        one = StepFunction.constant()
        assert np.allclose(cesaro(one)(XS), 1.0)
        assert np.allclose(copson(one)(XS), np.log(1.0 / XS), atol=1e-14)

    def test_against_quadrature(self):
        """Closed forms agree with adaptive quadrature."""
        f = _f()
        for x in (0.05, 0.1, 0.3, 0.77):
            ces = quad(lambda s: float(f(s)), 0.0, x, points=[0.1, 0.4])[0] / x
            cop = quad(lambda s: float(f(s)) / s, x, 1.0, points=[0.1, 0.4], limit=200)[0]
            assert float(cesaro(f)(x)) == pytest.approx(ces, rel=1e-10)
            assert float(copson(f)(x)) == pytest.approx(cop, rel=1e-10)

    def test_halfline_tail(self):
        """Cf continues as ||f||_1 / x beyond the support on the half-line."""
        f = StepFunction.from_arrays([0.0, 1.0, 2.0], [1.0, 3.0], Domain.halfline(8.0))
        cf = cesaro(f)
        assert float(cf(5.0)) == pytest.approx(4.0 / 5.0)
        assert float(copson(f)(5.0)) == 0.0

    def test_composition_identities(self):
        """C(C*f) = Cf + C*f and C*(Cf) = Cf + C*f - ||f||_1 on [0, 1]."""
        f = _f()
        both = (cesaro(f) + copson(f))(XS)
        assert np.allclose(cesaro_of(copson(f), XS), both, rtol=1e-12, atol=1e-12)
        assert np.allclose(copson_of(cesaro(f), XS), both - f.integral(), rtol=1e-12, atol=1e-12)

    def test_halfline_identity(self):
        """C*(Cf) = Cf + C*f on the half-line."""
        f = StepFunction.from_arrays([0.0, 0.5, 3.0], [2.0, 1.0], Domain.halfline(16.0))
        xs = np.geomspace(1e-5, 30.0, 50)
        assert np.allclose(copson_of(cesaro(f), xs), (cesaro(f) + copson(f))(xs), rtol=1e-12)

    def test_points_must_be_positive(self):
        """Transforms of piecewise-smooth functions are evaluated at x > 0."""
        with pytest.raises(DomainError):
            cesaro_of(cesaro(_f()), np.array([0.0, 0.5]))


class TestDiscrete:
    """Discrete Cesaro and Copson operators."""

    def test_values(self):
        """Averages and tail sums of a short sequence."""
        x = Seq(vals=(3.0, 2.0, 1.0))
        assert discrete_cesaro(x, 4).vals == pytest.approx((3.0, 2.5, 2.0, 1.5))
        assert discrete_copson(x, 4).vals == pytest.approx((3 + 1 + 1 / 3, 1 + 1 / 3, 1 / 3, 0.0))

    @given(st.lists(st.floats(min_value=0.0, max_value=1e3), min_size=1, max_size=40))
    @settings(max_examples=60, deadline=None)
    def test_identity(self, vals):
        """C(C*x)(n) = Cx(n) + C*x(n+1)."""
        x = Seq(vals=tuple(vals))
        M = x.N + 3
        lhs = discrete_cesaro(discrete_copson(x, M), M).a
        rhs = discrete_cesaro(x, M).a + discrete_copson(x, M + 1).a[1:]
        assert np.allclose(lhs, rhs, rtol=1e-12, atol=1e-12 * max(1.0, x.total()))

    def test_bad_length(self):
        """Output length must be positive."""
        with pytest.raises(DomainError):
            discrete_cesaro(Seq(vals=(1.0,)), 0)


class TestMaximal:
    """Exact Hardy-Littlewood maximal function of step functions."""

    def test_indicator(self):
        """M chi_[0, 1/2](x) = 1/(2x) for x > 1/2."""
        f = StepFunction.indicator(0.0, 0.5)
        assert maximal(f, 0.25) == pytest.approx(1.0)
        assert maximal(f, 0.8) == pytest.approx(1.0 / 1.6)

    def test_dominates_f(self):
        """Mf >= f and Mf <= max f."""
        f = _f()
        xs = np.linspace(0.01, 0.99, 50)
        m = maximal_many(f, xs)
        assert np.all(m >= f(xs) - 1e-14)
        assert np.all(m <= 2.0 + 1e-14)

    def test_outside_domain(self):
        """Points outside (0, 1) are rejected."""
        with pytest.raises(DomainError):
            maximal(_f(), 1.0)
        assert math.isfinite(maximal(_f(), 0.999))
