from typing import Any

from pydantic import BaseModel, Field, computed_field

from src.structs.status import SuiteStatus


class FailureRecord(BaseModel):
    """A single violated inequality."""

    assertion_id: str
    input: dict[str, Any]
    bound: float
    observed: float


class AssertionSummary(BaseModel):
    """Outcome of one assertion over the whole corpus.

    Margins are scaled so that a nonnegative worst margin means every check passed.
    Serialized with the keys `margin` and `pass`.
    """

    id: str
    paper_ref: str = ""
    description: str
    checks: int = 0
    failures: int = 0
    worst_margin: float = Field(default=float("inf"), serialization_alias="margin")
    passed: bool = Field(default=True, serialization_alias="pass")


class RatioRange(BaseModel):
    """Observed range of a ratio the theory only bounds qualitatively.

    `drift` is the largest relative change of a sample when its mesh is
    doubled; None for ratios that do not depend on a mesh.
    """

    id: str
    description: str
    minimum: float
    maximum: float
    drift: float | None = None
    drifting: bool = False
    bounded: bool


class Report(BaseModel):
    """Result of a verification suite run."""

    suite: str
    seed: int
    config: dict[str, Any] = Field(default_factory=dict)
    assertions: list[AssertionSummary] = Field(default_factory=list)
    failures: list[FailureRecord] = Field(default_factory=list)
    observations: list[RatioRange] = Field(default_factory=list)
    status: SuiteStatus = SuiteStatus.PASSED

    @computed_field
    @property
    def passed(self) -> bool:
        return self.status == SuiteStatus.PASSED
