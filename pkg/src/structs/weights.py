from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.settings import settings
from src.structs.domain import StepFunction


class WeightKind(str, Enum):
    ONE = "one"
    INV_T = "inv_t"
    LOG_INV = "log_inv"
    LOG_E = "log_e"
    ONE_MINUS_T = "one_minus_t"
    STEP = "step"


# Weights singular at 0 (integrable unless INV_T)
SINGULAR_AT_ZERO = {WeightKind.INV_T, WeightKind.LOG_INV, WeightKind.LOG_E}
# Weights only meaningful on [0, 1]
UNIT_ONLY = {WeightKind.LOG_INV, WeightKind.LOG_E, WeightKind.ONE_MINUS_T}


class Weight(BaseModel):
    """Named weight: 1, 1/t, ln(1/t), ln(e/t), 1 - t, or a step-function weight."""

    model_config = ConfigDict(frozen=True)

    kind: WeightKind = WeightKind.ONE
    step: StepFunction | None = None

    @model_validator(mode="after")
    def _step_payload(self) -> "Weight":
        if (self.kind == WeightKind.STEP) != (self.step is not None):
            raise ValueError("a step weight carries exactly one StepFunction")
        return self

    @classmethod
    def named(cls, kind: WeightKind | str) -> "Weight":
        return cls(kind=WeightKind(kind))

    @property
    def singular_at_zero(self) -> bool:
        return self.kind in SINGULAR_AT_ZERO

    def __call__(self, xs: np.ndarray | float) -> np.ndarray:
        xs = np.asarray(xs, dtype=float)
        safe = np.where(xs > 0, xs, np.finfo(float).tiny)
        match self.kind:
            case WeightKind.ONE:
                return np.ones_like(xs)
            case WeightKind.INV_T:
                return 1.0 / safe
            case WeightKind.LOG_INV:
                return np.log(1.0 / safe)
            case WeightKind.LOG_E:
                return 1.0 + np.log(1.0 / safe)
            case WeightKind.ONE_MINUS_T:
                return 1.0 - xs
            case WeightKind.STEP:
                return self.step(xs)

    def antiderivative(self, xs: np.ndarray | float) -> np.ndarray:
        """Closed-form W with W' = w; W(0) = 0 except for 1/t (ln x)."""
        xs = np.asarray(xs, dtype=float)
        pos = xs > 0
        safe = np.where(pos, xs, 1.0)
        match self.kind:
            case WeightKind.ONE:
                return xs.copy()
            case WeightKind.INV_T:
                return np.where(pos, np.log(safe), -np.inf)
            case WeightKind.LOG_INV:
                return np.where(pos, safe * (1.0 + np.log(1.0 / safe)), 0.0)
            case WeightKind.LOG_E:
                return np.where(pos, safe * (2.0 + np.log(1.0 / safe)), 0.0)
            case WeightKind.ONE_MINUS_T:
                return xs - 0.5 * xs * xs
            case WeightKind.STEP:
                return self.step.primitive(xs)

    def integral(self, a: np.ndarray | float, b: np.ndarray | float) -> np.ndarray:
        """Exact integral of w over [a, b] (vectorised)."""
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        if self.kind == WeightKind.INV_T:
            safe_a = np.where(a > 0, a, 1.0)
            return np.where(a > 0, np.log(np.maximum(b, safe_a) / safe_a), np.inf)
        return self.antiderivative(b) - self.antiderivative(a)

    def power(self, r: float) -> "Weight":
        """Return w**r as a step weight (only for ONE and STEP)."""
        if self.kind == WeightKind.ONE:
            return self
        if self.kind == WeightKind.STEP:
            powered = StepFunction.from_arrays(self.step.x, self.step.v**r, self.step.domain)
            return Weight(kind=WeightKind.STEP, step=powered)
        raise ValueError(f"no closed-form power for weight {self.kind.value}")


class QuadConfig(BaseModel):
    """Quadrature controls shared by every norm and t-integral."""

    model_config = ConfigDict(frozen=True)

    gauss_order: int = Field(default=32, ge=2)
    geometric_refine_levels: int = Field(default=20, ge=0)
    log_grid_points: int = Field(default=400, ge=2)
    rel_tol: float = Field(default=1e-9, gt=0.0)

    @classmethod
    def from_settings(cls) -> "QuadConfig":
        """Build the configuration from the global settings."""
        return cls(
            gauss_order=settings.GAUSS_ORDER,
            geometric_refine_levels=settings.GEOMETRIC_REFINE_LEVELS,
            log_grid_points=settings.LOG_GRID_POINTS,
            rel_tol=settings.REL_TOL,
        )


class SeqSpaceKind(str, Enum):
    LP = "lp"
    CES = "ces"
    COP = "cop"
    CES_INF = "ces_inf"


class SeqSpace(BaseModel):
    """Sequence space: weighted l_p (weight 1 or 1/k), ces_p, cop_p or ces_inf."""

    model_config = ConfigDict(frozen=True)

    kind: SeqSpaceKind
    p: float = Field(default=1.0, ge=1.0)
    weight: WeightKind = WeightKind.ONE

    @model_validator(mode="after")
    def _sequence_weights(self) -> "SeqSpace":
        if self.weight not in (WeightKind.ONE, WeightKind.INV_T):
            raise ValueError("sequence weights are 1 or 1/k")
        return self
