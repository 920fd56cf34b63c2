import math
from typing import Any

from pydantic import BaseModel, Field

from src.settings import custom_logger
from src.structs import (
    AssertionSummary,
    FailureRecord,
    RatioRange,
    Report,
    SuiteConfig,
    SuiteStatus,
)

# Create logger
logger = custom_logger("Suite State")

# Largest relative change under mesh doubling before a ratio counts as drifting
DRIFT_TOL = 0.1


class SuiteState(BaseModel):
    """Running record of a verification suite: checks, failures, observed ratios and sweep rows."""

    suite: str
    seed: int
    assertions: dict[str, AssertionSummary] = Field(default_factory=dict)
    failures: list[FailureRecord] = Field(default_factory=list)
    observations: dict[str, list[float]] = Field(default_factory=dict)
    drifts: dict[str, list[float]] = Field(default_factory=dict)
    descriptions: dict[str, str] = Field(default_factory=dict)
    rows: list[dict[str, Any]] = Field(default_factory=list)

    def _record(
        self,
        assertion_id: str,
        description: str,
        lhs: float,
        rhs: float,
        slack: float,
        relation: str,
        ref: str,
        inputs: dict[str, Any],
    ) -> bool:
        if relation == "<=":
            gap = rhs + slack - lhs
            bound = rhs + slack
        else:
            gap = lhs - (rhs - slack)
            bound = rhs - slack
        scale = max(abs(lhs), abs(rhs), 1e-300)
        margin = gap / scale if math.isfinite(gap) else (math.inf if gap > 0 else -math.inf)
        passed = bool(gap >= 0)

        summary = self.assertions.setdefault(
            assertion_id, AssertionSummary(id=assertion_id, paper_ref=ref, description=description)
        )
        summary.checks += 1
        summary.worst_margin = min(summary.worst_margin, margin)
        if not passed:
            summary.failures += 1
            summary.passed = False
            logger.error(f"{assertion_id} failed: {lhs!r} {relation} {bound!r} for {inputs}")
            self.failures.append(
                FailureRecord(assertion_id=assertion_id, input=inputs, bound=bound, observed=lhs)
            )
        self.rows.append(
            {
                "assertion": assertion_id,
                "parameter": _parameter(inputs),
                "value_lhs": lhs,
                "relation": relation,
                "value_rhs": rhs,
                "bound": bound,
                "pass": passed,
            }
        )
        return passed

    def check_le(
        self,
        assertion_id: str,
        description: str,
        lhs: float,
        rhs: float,
        slack: float = 0.0,
        *,
        ref: str = "",
        **inputs: Any,
    ) -> bool:
        """Record lhs <= rhs + slack; `ref` names the result being checked."""
        return self._record(assertion_id, description, lhs, rhs, slack, "<=", ref, inputs)

    def check_ge(
        self,
        assertion_id: str,
        description: str,
        lhs: float,
        rhs: float,
        slack: float = 0.0,
        *,
        ref: str = "",
        **inputs: Any,
    ) -> bool:
        """Record lhs >= rhs - slack."""
        return self._record(assertion_id, description, lhs, rhs, slack, ">=", ref, inputs)

    def observe(
        self,
        observation_id: str,
        description: str,
        value: float,
        refined: float | None = None,
    ) -> None:
        """Add one sample to a ratio the theory bounds only qualitatively.

        `refined` is the same ratio recomputed on a doubled mesh.
        """
        self.descriptions[observation_id] = description
        self.observations.setdefault(observation_id, []).append(value)
        if refined is not None:
            drift = abs(refined - value) / abs(value) if value else math.inf
            self.drifts.setdefault(observation_id, []).append(drift if math.isfinite(drift) else math.inf)

    def to_report(self, config: SuiteConfig) -> Report:
        """Assemble the final report; the suite passes iff no check failed."""
        observations = []
        for key, values in self.observations.items():
            lo, hi = min(values), max(values)
            drift = max(self.drifts[key]) if key in self.drifts else None
            drifting = drift is not None and not drift <= DRIFT_TOL
            if drifting:
                logger.warning(f"{key} drifts by {drift:.3g} under mesh refinement")
            bounded = all(math.isfinite(v) and v > 0 for v in values) and hi <= 1e3 * lo and not drifting
            observations.append(
                RatioRange(
                    id=key,
                    description=self.descriptions[key],
                    minimum=lo,
                    maximum=hi,
                    drift=drift,
                    drifting=drifting,
                    bounded=bounded,
                )
            )
        status = SuiteStatus.FAILED if self.failures else SuiteStatus.PASSED
        logger.info(f"suite {self.suite}: {len(self.assertions)} assertions, {len(self.failures)} failures")
        return Report(
            suite=self.suite,
            seed=self.seed,
            config=config.model_dump(mode="json"),
            assertions=list(self.assertions.values()),
            failures=self.failures,
            observations=observations,
            status=status,
        )


def _parameter(inputs: dict[str, Any]) -> str:
    return " ".join(f"{k}={v}" for k, v in inputs.items())
