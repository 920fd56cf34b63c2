from pydantic import BaseModel, ConfigDict, Field


class FhFamily(BaseModel):
    """f_h(t) = (1 - t)^(-1/2) on [h, 1), 0 elsewhere."""

    model_config = ConfigDict(frozen=True)

    h: float = Field(gt=0.0, lt=1.0)


class FsFamily(BaseModel):
    """f_s = indicator of [0, s]."""

    model_config = ConfigDict(frozen=True)

    s: float = Field(gt=0.0, le=1.0)


class FhRatio(BaseModel):
    """Copson and Cesaro norms of f_h and the lower bound for their ratio^p."""

    h: float
    p: float
    cop_p: float
    ces_p: float
    lower_bound: float

    @property
    def ratio_p(self) -> float:
        return (self.cop_p / self.ces_p) ** self.p


class FsRow(BaseModel):
    """One row of the indicator-family sweep."""

    s: float
    p: float
    ces_p: float
    interp_norm: float
    certified_interp_norm: float
    ratio: float
    certified_ratio: float
    bound: float
