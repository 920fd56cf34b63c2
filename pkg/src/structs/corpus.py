from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.structs.domain import Domain


class CorpusSpec(BaseModel):
    """Seeded random corpus of step functions and sequences."""

    model_config = ConfigDict(frozen=True)

    count: int = Field(default=20, ge=1)
    min_pieces: int = Field(default=1, ge=1)
    max_pieces: int = Field(default=64, ge=1)
    value_low: float = Field(default=1e-3, gt=0.0)
    value_high: float = Field(default=1e3, gt=0.0)
    seed: int = 7
    domain: Domain = Field(default_factory=Domain.unit)
    support: tuple[float, float] | None = None
    nonincreasing: bool = False

    @model_validator(mode="after")
    def _ranges(self) -> "CorpusSpec":
        if self.min_pieces > self.max_pieces:
            raise ValueError("min_pieces exceeds max_pieces")
        if self.value_low > self.value_high:
            raise ValueError("value_low exceeds value_high")
        if self.support is not None and not 0.0 <= self.support[0] < self.support[1] <= self.domain.T:
            raise ValueError(f"support {self.support} outside the domain")
        return self
