"""Tests for the verification suites and their reports."""

import math

import numpy as np
import pytest

from src.structs import SUITE_ALIASES, CorpusSpec, SuiteConfig, SuiteName, SuiteStatus
from src.workflows import SUITES, SuiteState, run_suite
from src.workflows.suites import max_relative_residual

SMALL_CORPUS = CorpusSpec(count=2, max_pieces=6, seed=3)


def _config(suite: SuiteName, **update) -> SuiteConfig:
    params = {
        "suite": suite,
        "corpus": SMALL_CORPUS,
        "p_values": (2.0,),
        "t_count": 3,
        "mesh_n": 32,
        "lp_functions": 1,
        "grid_n": 16,
        "workers": 1,
    }
    return SuiteConfig.model_validate({**params, **update})


class TestRegistry:
    """Every suite name has a runner."""

    def test_all_names_registered(self):
        """The registry covers the enum."""
        assert set(SUITES) == set(SuiteName)

    def test_short_names(self):
        """Short result names resolve to the descriptive suites."""
        assert SuiteName("thm3") is SuiteName.CES_SANDWICH
        assert SuiteName("eq7_halfline") is SuiteName.HALFLINE_L1_CESINF
        assert SuiteConfig(suite="lemma3").suite is SuiteName.INDICATOR_DIVERGENCE
        assert set(SUITE_ALIASES.values()) <= {s.value for s in SuiteName}
        with pytest.raises(ValueError):
            SuiteName("thm9")

    def test_invalid_exponent(self):
        """Suite exponents lie strictly between 1 and infinity."""
        with pytest.raises(ValueError):
            SuiteConfig(suite=SuiteName.AP, p_values=(1.0,))


class TestSmallSuites:
    """Cheap suites pass on a small corpus."""

    @pytest.mark.parametrize(
        "suite",
        [
            SuiteName.IDENTITIES,
            SuiteName.EMBEDDINGS,
            SuiteName.WEIGHTED_L1,
            SuiteName.AP,
            SuiteName.COPSON_COUNTEREXAMPLE,
        ],
    )
    def test_passes(self, suite):
        """No assertion fails and every summary has checks."""
        report = run_suite(_config(suite))
        assert report.passed, [f.model_dump() for f in report.failures]
        assert report.suite == suite.value
        assert report.seed == SMALL_CORPUS.seed
        assert report.assertions
        assert all(a.checks > 0 and a.worst_margin >= 0 for a in report.assertions)

    def test_deterministic(self):
        """The same seed and config give the same report."""
        config = _config(SuiteName.IDENTITIES)
        assert run_suite(config).model_dump() == run_suite(config).model_dump()

    def test_rows_collected(self):
        """A passed-in state keeps one row per check."""
        config = _config(SuiteName.AP)
        state = SuiteState(suite=config.suite.value, seed=config.corpus.seed)
        report = run_suite(config, state=state)
        assert len(state.rows) == sum(a.checks for a in report.assertions)
        assert {"assertion", "parameter", "value_lhs", "relation", "value_rhs", "bound", "pass"} <= set(state.rows[0])

    def test_observations(self):
        """The maximal-operator ratio is recorded as a bounded range."""
        report = run_suite(_config(SuiteName.AP))
        obs = {o.id: o for o in report.observations}
        assert "maximal_ratio_p2" in obs
        assert 1.0 <= obs["maximal_ratio_p2"].minimum <= obs["maximal_ratio_p2"].maximum
        assert obs["maximal_ratio_p2"].bounded


class TestSuiteState:
    """Check bookkeeping."""

    def test_failure_recorded(self):
        """A violated check is counted and reported."""
        state = SuiteState(suite="demo", seed=1)
        assert state.check_le("le", "a <= b", 1.0, 2.0)
        assert not state.check_ge("ge", "a >= b", 1.0, 2.0, 0.5, x=4)
        config = _config(SuiteName.AP)
        report = state.to_report(config)
        assert report.status == SuiteStatus.FAILED
        assert not report.passed
        assert report.failures[0].assertion_id == "ge"
        assert report.failures[0].input == {"x": 4}
        assert report.failures[0].bound == pytest.approx(1.5)
        summary = {a.id: a for a in report.assertions}
        assert summary["ge"].failures == 1
        assert summary["ge"].worst_margin < 0
        assert summary["le"].passed

    def test_reference_and_json_keys(self):
        """Each summary carries its reference; JSON uses the margin and pass keys."""
        state = SuiteState(suite="demo", seed=1)
        state.check_le("le", "a <= b", 1.0, 2.0, ref="Hardy inequality", x=1)
        report = state.to_report(_config(SuiteName.AP))
        assert report.failures == []
        dumped = report.model_dump(mode="json", by_alias=True)["assertions"][0]
        assert dumped["paper_ref"] == "Hardy inequality"
        assert dumped["margin"] == pytest.approx(0.5)
        assert dumped["pass"] is True
        assert "worst_margin" not in dumped

    def test_slack_passes(self):
        """Slack widens the bound."""
        state = SuiteState(suite="demo", seed=1)
        assert state.check_le("le", "a <= b", 1.0 + 1e-10, 1.0, 1e-9)

    def test_unbounded_observation(self):
        """Ranges spanning more than three decades are flagged."""
        state = SuiteState(suite="demo", seed=1)
        for v in (1.0, 10.0, 1e4):
            state.observe("r", "ratio", v)
        state.observe("s", "ratio", math.inf)
        obs = {o.id: o for o in state.to_report(_config(SuiteName.AP)).observations}
        assert not obs["r"].bounded
        assert not obs["s"].bounded
        assert obs["r"].drift is None

    def test_drift_under_refinement(self):
        """A ratio that moves when the mesh doubles is flagged even inside a narrow range."""
        state = SuiteState(suite="demo", seed=1)
        state.observe("steady", "ratio", 2.0, refined=2.0001)
        state.observe("steady", "ratio", 3.0, refined=3.0)
        state.observe("moving", "ratio", 2.0, refined=2.0)
        state.observe("moving", "ratio", 3.0, refined=4.5)
        obs = {o.id: o for o in state.to_report(_config(SuiteName.AP)).observations}
        assert obs["steady"].drift == pytest.approx(5e-5)
        assert not obs["steady"].drifting
        assert obs["steady"].bounded
        assert obs["moving"].drift == pytest.approx(0.5)
        assert obs["moving"].drifting
        assert not obs["moving"].bounded


class TestResidual:
    """Pointwise relative residuals of the composition identities."""

    def test_small_values_checked_per_point(self):
        """An error at a small value fails even when it is tiny next to the largest value."""
        rhs = np.geomspace(1e-3, 1e3, 64)
        lhs = rhs.copy()
        assert max_relative_residual(lhs, rhs) == 0.0
        lhs[0] *= 1.0 + 1e-6
        assert abs(lhs[0] - rhs[0]) <= 1e-9 * float(np.max(rhs))
        assert max_relative_residual(lhs, rhs) == pytest.approx(1e-6, rel=1e-6)

    def test_zero_rhs_is_absolute(self):
        """Where the right side vanishes the error is taken as absolute."""
        assert max_relative_residual(np.array([1e-12, 1.0]), np.array([0.0, 1.0])) == pytest.approx(1e-12)

    def test_identities_report_halfline_cesaro_of_copson(self):
        """The half-line suite checks both compositions."""
        report = run_suite(_config(SuiteName.IDENTITIES))
        ids = {a.id for a in report.assertions}
        assert {"cesaro_of_copson_halfline", "copson_of_cesaro_halfline"} <= ids
        assert all(a.paper_ref for a in report.assertions)
