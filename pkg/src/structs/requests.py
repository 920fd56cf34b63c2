from enum import Enum

from pydantic import BaseModel, Field

from src.structs.corpus import CorpusSpec
from src.structs.couples import CoupleKind, KMethod
from src.structs.domain import Domain
from src.structs.weights import WeightKind


class NormKind(str, Enum):
    L1 = "l1"
    LINF = "linf"
    LP = "lp"
    CES = "ces"
    COP = "cop"
    CES_LOG = "ces_log"
    IDENTITY = "identity"
    LOWER_INTERP = "lower_interp"


class FunctionPayload(BaseModel):
    """A step function as sent over the wire: breakpoints x_0..x_n and cell values."""

    domain: Domain = Field(default_factory=Domain.unit)
    breaks: list[float]
    vals: list[float]


class NormRequest(BaseModel):
    function: FunctionPayload
    norm: NormKind
    p: float = 2.0
    weight: WeightKind = WeightKind.ONE


class NormResponse(BaseModel):
    norm: NormKind
    p: float
    value: float


class CoupleRequest(BaseModel):
    """Couple selection by kind plus optional weights and support."""

    kind: CoupleKind
    w0: WeightKind | None = None
    w1: WeightKind | None = None
    base: "CoupleRequest | None" = None
    support: tuple[float, float] | None = None


class KCurveRequest(BaseModel):
    function: FunctionPayload
    couple: CoupleRequest
    method: KMethod = KMethod.CLOSED_FORM
    t_min: float = 1e-3
    t_max: float = 10.0
    points_per_decade: int = 8
    mesh_n: int | None = None


class KCurveRow(BaseModel):
    t: float
    K: float
    lower_bound: float | None = None
    upper_bound: float | None = None


class KCurveResponse(BaseModel):
    couple: str
    method: KMethod
    rows: list[KCurveRow]


class VerifyRequest(BaseModel):
    suite: str
    corpus: CorpusSpec = Field(default_factory=CorpusSpec)
    p_values: tuple[float, ...] = (2.0,)
    mesh_n: int = 64


CoupleRequest.model_rebuild()
