from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.structs.domain import Seq, StepFunction
from src.structs.weights import Weight, WeightKind


class CoupleKind(str, Enum):
    WEIGHTED_L1 = "weighted_l1"
    L1_LINF = "l1_linf"
    DISCRETE_L1_L1INVK = "discrete_l1_l1invk"
    CES1_CESINF_UNIT = "ces1_cesinf_unit"
    L1W_CESINF = "l1w_cesinf"
    L1_CESINF_HALFLINE = "l1_cesinf_halfline"
    RESTRICTED = "restricted"


class CoupleSpec(BaseModel):
    """A Banach couple (X0, X1) the K-functional is taken over.

    RESTRICTED keeps the base couple's norms but only admits functions (and
    decompositions) supported in `support`.
    """

    model_config = ConfigDict(frozen=True)

    kind: CoupleKind
    w0: Weight | None = None
    w1: Weight | None = None
    base: "CoupleSpec | None" = None
    support: tuple[float, float] | None = None

    @model_validator(mode="after")
    def _payload(self) -> "CoupleSpec":
        if self.kind == CoupleKind.WEIGHTED_L1 and (self.w0 is None or self.w1 is None):
            raise ValueError("weighted L1 couples need w0 and w1")
        if self.kind == CoupleKind.L1W_CESINF and self.w0 is None:
            raise ValueError("L1(w0) / Ces_inf couples need w0")
        if self.kind == CoupleKind.RESTRICTED:
            if self.base is None or self.support is None:
                raise ValueError("restricted couples need a base couple and a support")
            if not 0.0 <= self.support[0] < self.support[1]:
                raise ValueError(f"invalid support {self.support}")
        return self

    @classmethod
    def weighted_l1(cls, w0: Weight | WeightKind | str, w1: Weight | WeightKind | str) -> "CoupleSpec":
        return cls(kind=CoupleKind.WEIGHTED_L1, w0=_as_weight(w0), w1=_as_weight(w1))

    @classmethod
    def l1_linf(cls) -> "CoupleSpec":
        return cls(kind=CoupleKind.L1_LINF)

    @classmethod
    def discrete(cls) -> "CoupleSpec":
        return cls(kind=CoupleKind.DISCRETE_L1_L1INVK)

    @classmethod
    def ces_unit(cls) -> "CoupleSpec":
        return cls(kind=CoupleKind.CES1_CESINF_UNIT)

    @classmethod
    def l1w_cesinf(cls, w0: Weight | WeightKind | str) -> "CoupleSpec":
        return cls(kind=CoupleKind.L1W_CESINF, w0=_as_weight(w0))

    @classmethod
    def l1_cesinf_halfline(cls) -> "CoupleSpec":
        return cls(kind=CoupleKind.L1_CESINF_HALFLINE)

    @classmethod
    def restricted(cls, base: "CoupleSpec", a: float, b: float) -> "CoupleSpec":
        return cls(kind=CoupleKind.RESTRICTED, base=base, support=(a, b))

    def resolved(self) -> "CoupleSpec":
        """Innermost non-restricted couple."""
        return self.base.resolved() if self.kind == CoupleKind.RESTRICTED else self

    def label(self) -> str:
        match self.kind:
            case CoupleKind.WEIGHTED_L1:
                return f"L1({self.w0.kind.value}),L1({self.w1.kind.value})"
            case CoupleKind.L1W_CESINF:
                return f"L1({self.w0.kind.value}),Ces_inf"
            case CoupleKind.RESTRICTED:
                return f"{self.base.label()}|[{self.support[0]},{self.support[1]}]"
            case _:
                return self.kind.value


CoupleSpec.model_rebuild()


def _as_weight(w: Weight | WeightKind | str) -> Weight:
    return w if isinstance(w, Weight) else Weight.named(w)


class Decomposition(BaseModel):
    """Witness f = g + h of a variational K-functional value.

    `value` is recomputed from the witness with exact norms, so it is an upper
    bound on K(t, f) regardless of solver accuracy.
    """

    model_config = ConfigDict(frozen=True)

    t: float
    g: StepFunction
    h: StepFunction
    value: float
    lp_value: float
    mesh_n: int
    converged: bool = True


class TailKind(str, Enum):
    CONSTANT_BEYOND = "constant_beyond"
    POWER_TAIL = "power_tail"


class KTail(BaseModel):
    """Behaviour of K beyond the sampled range.

    CONSTANT_BEYOND: K(t) = value for t >= t_c.
    POWER_TAIL: K(t_c) <= K(t) <= value * (t / t_c) ** exponent for t >= t_c.
    """

    model_config = ConfigDict(frozen=True)

    kind: TailKind
    t_c: float = Field(gt=0.0)
    value: float = Field(ge=0.0)
    exponent: float = Field(default=0.0, ge=0.0)


class KMethod(str, Enum):
    CLOSED_FORM = "closed_form"
    LP = "lp"


class KCurve(BaseModel):
    """Sampled t -> K(t, f; X0, X1) with tail and method metadata."""

    model_config = ConfigDict(frozen=True)

    couple: CoupleSpec
    f_id: str = ""
    tgrid: tuple[float, ...]
    kvals: tuple[float, ...]
    tail: KTail
    method: KMethod
    mesh_n: int | None = None
    tol: float | None = None
    kinks: tuple[float, ...] = ()
    x0_norm: float = float("inf")
    x1_norm: float = float("inf")
    source: StepFunction | Seq | None = None

    @model_validator(mode="after")
    def _aligned(self) -> "KCurve":
        if len(self.tgrid) != len(self.kvals) or len(self.tgrid) < 2:
            raise ValueError("need at least two (t, K) samples")
        return self

    def scaled(self, c: float) -> "KCurve":
        """The curve of c * f."""
        tail = self.tail.model_copy(update={"value": c * self.tail.value})
        source = None
        if isinstance(self.source, StepFunction):
            source = self.source.scaled(c)
        elif isinstance(self.source, Seq):
            source = Seq(vals=tuple(c * v for v in self.source.vals))
        return self.model_copy(
            update={
                "kvals": tuple(c * k for k in self.kvals),
                "tail": tail,
                "x0_norm": c * self.x0_norm,
                "x1_norm": c * self.x1_norm,
                "source": source,
            }
        )


class TGridSpec(BaseModel):
    """Log-spaced t grid: points_per_decade samples per factor of ten."""

    model_config = ConfigDict(frozen=True)

    t_min: float = Field(default=1e-4, gt=0.0)
    t_max: float = Field(default=10.0, gt=0.0)
    points_per_decade: int = Field(default=8, ge=1)

    @model_validator(mode="after")
    def _ordered(self) -> "TGridSpec":
        if self.t_min >= self.t_max:
            raise ValueError("t_min must be below t_max")
        return self

    def points(self, extra: tuple[float, ...] = ()) -> list[float]:
        """Grid points (endpoints included) merged with extra points inside the range."""
        decades = np.log10(self.t_max / self.t_min)
        n = max(2, int(np.ceil(decades * self.points_per_decade)) + 1)
        pts = set(np.geomspace(self.t_min, self.t_max, n).tolist())
        pts.update(t for t in extra if self.t_min <= t <= self.t_max)
        return sorted(pts)


class CesLowerBounds(BaseModel):
    """Certified lower bounds for K(t, f; Ces_1, Ces_inf) on [0, 1], 0 < t <= 1."""

    t: float
    head: float
    outer: float
    middle: float
    weighted_l1: float

    @property
    def combined(self) -> float:
        return max(self.head, self.outer, self.middle, self.weighted_l1)
