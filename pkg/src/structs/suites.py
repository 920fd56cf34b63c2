from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.settings import settings
from src.structs.corpus import CorpusSpec


class SuiteName(str, Enum):
    IDENTITIES = "identities"
    EMBEDDINGS = "embeddings"
    WEIGHTED_L1 = "weighted_l1"
    RESTRICTED_COUPLE = "restricted_couple"
    CES_SANDWICH = "ces_sandwich"
    DECREASING_SANDWICH = "decreasing_sandwich"
    LOG_WEIGHTED = "log_weighted"
    AP = "ap"
    INDICATOR_DIVERGENCE = "indicator_divergence"
    HALFLINE_L1_CESINF = "halfline_l1_cesinf"
    COPSON_COUNTEREXAMPLE = "copson_counterexample"

    @classmethod
    def _missing_(cls, value: object) -> "SuiteName | None":
        alias = SUITE_ALIASES.get(value) if isinstance(value, str) else None
        return cls(alias) if alias else None


# Short names of the result each suite verifies
SUITE_ALIASES: dict[str, str] = {
    "thm1": SuiteName.WEIGHTED_L1.value,
    "thm2": SuiteName.RESTRICTED_COUPLE.value,
    "thm3": SuiteName.CES_SANDWICH.value,
    "thm4": SuiteName.DECREASING_SANDWICH.value,
    "thm5": SuiteName.LOG_WEIGHTED.value,
    "lemma3": SuiteName.INDICATOR_DIVERGENCE.value,
    "eq7_halfline": SuiteName.HALFLINE_L1_CESINF.value,
}


class SuiteConfig(BaseModel):
    """Parameters of one verification run.

    `converge` switches the LP checks from a fixed mesh to the doubling
    protocol (slower, used for the full acceptance batteries).
    """

    model_config = ConfigDict(frozen=True)

    suite: SuiteName
    corpus: CorpusSpec = Field(default_factory=CorpusSpec)
    p_values: tuple[float, ...] = (1.5, 2.0, 3.0)
    t_count: int = Field(default=20, ge=2)
    mesh_n: int = Field(default_factory=lambda: settings.MESH_START, ge=1)
    converge: bool = False
    tol: float = Field(default_factory=lambda: settings.LP_TOL, gt=0.0)
    lp_functions: int = Field(default=5, ge=1)
    grid_n: int = Field(default=200, ge=2)
    workers: int = Field(default_factory=lambda: settings.WORKERS, ge=1)

    @field_validator("suite", mode="before")
    @classmethod
    def _resolve_alias(cls, suite: object) -> object:
        return SuiteName(suite) if isinstance(suite, str) else suite

    @field_validator("p_values")
    @classmethod
    def _exponents(cls, p_values: tuple[float, ...]) -> tuple[float, ...]:
        if not p_values or any(not 1.0 < p < float("inf") for p in p_values):
            raise ValueError("suite exponents satisfy 1 < p < inf")
        return p_values
