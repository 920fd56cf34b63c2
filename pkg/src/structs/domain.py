import math
from enum import Enum
from typing import Iterable, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

# Points closer than this (relative) are treated as the same breakpoint
MERGE_RTOL = 1e-14


class DomainKind(str, Enum):
    UNIT = "unit"
    HALFLINE = "halfline"


class Domain(BaseModel):
    """The interval the functions live on: [0, 1] or [0, inf) truncated at T.

    Operator formulas treat the unit interval as HalfLine(1) except that the
    Copson integral stops at 1. On the half-line, T only bounds the support;
    operator outputs are continued analytically beyond it.
    """

    model_config = ConfigDict(frozen=True)

    kind: DomainKind = DomainKind.UNIT
    T: float = Field(default=1.0, gt=0.0)

    @model_validator(mode="after")
    def _unit_has_length_one(self) -> "Domain":
        if self.kind == DomainKind.UNIT and self.T != 1.0:
            raise ValueError("the unit interval has T = 1")
        return self

    @classmethod
    def unit(cls) -> "Domain":
        """Return the unit interval [0, 1]."""
        return cls(kind=DomainKind.UNIT, T=1.0)

    @classmethod
    def halfline(cls, T: float) -> "Domain":
        """Return the half-line with supports truncated at T."""
        return cls(kind=DomainKind.HALFLINE, T=T)

    @property
    def is_unit(self) -> bool:
        return self.kind == DomainKind.UNIT

    def label(self) -> str:
        """Return the header used in function spec files."""
        return "unit" if self.is_unit else f"halfline {self.T!r}"


def merge_meshes(*meshes: Iterable[float]) -> np.ndarray:
    """Sorted union of breakpoint arrays, dropping near-duplicates."""
    pts = np.unique(np.concatenate([np.asarray(list(m), dtype=float) for m in meshes]))
    if pts.size < 2:
        return pts
    keep = np.concatenate(([True], np.diff(pts) > MERGE_RTOL * np.maximum(1.0, np.abs(pts[1:]))))
    out = pts[keep]
    if out.size > 1:
        # the right endpoint survives exactly
        out[-1] = pts[-1]
    return out


class StepFunction(BaseModel):
    """Nonnegative piecewise-constant function with value vals[i] on (breaks[i], breaks[i+1]]."""

    model_config = ConfigDict(frozen=True)

    domain: Domain = Field(default_factory=Domain.unit)
    breaks: tuple[float, ...]
    vals: tuple[float, ...]

    @field_validator("vals")
    @classmethod
    def _nonnegative(cls, vals: tuple[float, ...]) -> tuple[float, ...]:
        if any(not np.isfinite(v) or v < 0 for v in vals):
            raise ValueError("step values must be finite and nonnegative")
        return vals

    @model_validator(mode="after")
    def _check_mesh(self) -> "StepFunction":
        if len(self.vals) < 1 or len(self.breaks) != len(self.vals) + 1:
            raise ValueError("need n >= 1 values and n + 1 breakpoints")
        x = np.asarray(self.breaks)
        if x[0] != 0.0:
            raise ValueError("the mesh starts at 0")
        if np.any(np.diff(x) <= 0):
            raise ValueError("breakpoints must be strictly increasing")
        if self.domain.is_unit and abs(x[-1] - 1.0) > 1e-12:
            raise ValueError("a unit-interval mesh ends at 1")
        if not self.domain.is_unit and x[-1] > self.domain.T * (1 + 1e-12):
            raise ValueError(f"support end {x[-1]} exceeds the truncation T={self.domain.T}")
        return self

    @classmethod
    def from_arrays(
        cls, breaks: Sequence[float], vals: Sequence[float], domain: Domain | None = None
    ) -> "StepFunction":
        """Build a step function from array-likes."""
        return cls(
            domain=domain or Domain.unit(),
            breaks=tuple(float(b) for b in breaks),
            vals=tuple(float(v) for v in vals),
        )

    @classmethod
    def constant(cls, value: float = 1.0, domain: Domain | None = None) -> "StepFunction":
        """Constant function on the whole domain (up to T on the half-line)."""
        domain = domain or Domain.unit()
        return cls(domain=domain, breaks=(0.0, domain.T), vals=(float(value),))

    @classmethod
    def indicator(cls, a: float, b: float, domain: Domain | None = None) -> "StepFunction":
        """Characteristic function of [a, b]."""
        domain = domain or Domain.unit()
        if not 0.0 <= a < b <= domain.T:
            raise ValueError(f"need 0 <= a < b <= {domain.T}, got [{a}, {b}]")
        pts = merge_meshes([0.0, a, b, domain.T])
        mids = 0.5 * (pts[:-1] + pts[1:])
        vals = np.where((mids > a) & (mids < b), 1.0, 0.0)
        return cls.from_arrays(pts, vals, domain)

    @property
    def x(self) -> np.ndarray:
        return np.asarray(self.breaks, dtype=float)

    @property
    def v(self) -> np.ndarray:
        return np.asarray(self.vals, dtype=float)

    @property
    def n_cells(self) -> int:
        return len(self.vals)

    @property
    def end(self) -> float:
        return self.breaks[-1]

    @property
    def lengths(self) -> np.ndarray:
        return np.diff(self.x)

    @property
    def masses(self) -> np.ndarray:
        return self.v * self.lengths

    def cumulative(self) -> np.ndarray:
        """Return F at every breakpoint, F(x_0) = 0."""
        return np.concatenate(([0.0], np.cumsum(self.masses)))

    def integral(self) -> float:
        return float(self.masses.sum())

    def cell_index(self, xs: np.ndarray | float) -> np.ndarray:
        """Index of the cell (x_{i}, x_{i+1}] holding each point, clipped to the mesh."""
        idx = np.searchsorted(self.x, np.asarray(xs, dtype=float), side="left") - 1
        return np.clip(idx, 0, self.n_cells - 1)

    def __call__(self, xs: np.ndarray | float) -> np.ndarray:
        xs = np.asarray(xs, dtype=float)
        out = self.v[self.cell_index(xs)]
        return np.where((xs > 0) & (xs <= self.end), out, np.where(xs == 0, self.v[0], 0.0))

    def primitive(self, xs: np.ndarray | float) -> np.ndarray:
        """Exact F(x) = integral of f over [0, x]."""
        xs = np.clip(np.asarray(xs, dtype=float), 0.0, self.end)
        k = self.cell_index(xs)
        return self.cumulative()[k] + self.v[k] * (xs - self.x[k])

    def is_zero(self) -> bool:
        return not np.any(self.v > 0)

    def support_end(self) -> float:
        """Right end of the last cell with a positive value (0 for f = 0)."""
        pos = np.flatnonzero(self.v > 0)
        return float(self.x[pos[-1] + 1]) if pos.size else 0.0

    def support_start(self) -> float:
        """Left end of the first cell with a positive value."""
        pos = np.flatnonzero(self.v > 0)
        return float(self.x[pos[0]]) if pos.size else self.end

    def with_breaks(self, points: Iterable[float]) -> "StepFunction":
        """Same function on the mesh refined by the given points."""
        pts = [p for p in points if 0.0 < p < self.end]
        mesh = merge_meshes(self.x, pts)
        mids = 0.5 * (mesh[:-1] + mesh[1:])
        return StepFunction.from_arrays(mesh, self(mids), self.domain)

    def mask(self, intervals: Iterable[tuple[float, float]]) -> "StepFunction":
        """Multiply by the indicator of a finite union of closed intervals."""
        intervals = [(a, b) for a, b in intervals if b > a]
        ends = [p for iv in intervals for p in iv]
        refined = self.with_breaks(ends)
        mids = 0.5 * (refined.x[:-1] + refined.x[1:])
        inside = np.zeros(mids.size, dtype=bool)
        for a, b in intervals:
            inside |= (mids > a) & (mids < b)
        return StepFunction.from_arrays(refined.x, np.where(inside, refined.v, 0.0), self.domain)

    def refine(
        self,
        mesh_n: int,
        extra_points: Iterable[float] = (),
        geometric_levels: int = 0,
    ) -> "StepFunction":
        """Split cells uniformly to reach at least mesh_n cells.

        Extra points are inserted as breakpoints and the first cell is graded
        geometrically toward 0. The result is pointwise equal to self.
        """
        m = max(1, -(-mesh_n // self.n_cells))
        x = self.x
        parts = [np.linspace(x[i], x[i + 1], m + 1)[:-1] for i in range(self.n_cells)]
        pts = np.concatenate(parts + [[x[-1]]])
        first = pts[1]
        graded = first * 0.5 ** np.arange(1, geometric_levels + 1)
        return self.with_breaks(np.concatenate((pts, graded, list(extra_points))))

    def scaled(self, c: float) -> "StepFunction":
        return StepFunction.from_arrays(self.x, c * self.v, self.domain)

    def is_nonincreasing(self) -> bool:
        return bool(np.all(np.diff(self.v) <= 0))


class Seq(BaseModel):
    """Finitely supported nonnegative sequence a_1..a_N (zero beyond N)."""

    model_config = ConfigDict(frozen=True)

    vals: tuple[float, ...] = Field(min_length=1)

    @field_validator("vals")
    @classmethod
    def _nonnegative(cls, vals: tuple[float, ...]) -> tuple[float, ...]:
        if any(not np.isfinite(v) or v < 0 for v in vals):
            raise ValueError("sequence entries must be finite and nonnegative")
        return vals

    @classmethod
    def unit_vector(cls, k: int = 1) -> "Seq":
        """Return e_k."""
        return cls(vals=tuple(1.0 if i == k else 0.0 for i in range(1, k + 1)))

    @property
    def a(self) -> np.ndarray:
        return np.asarray(self.vals, dtype=float)

    @property
    def N(self) -> int:
        return len(self.vals)

    def total(self) -> float:
        return float(self.a.sum())


class TauPair(BaseModel):
    """Split points tau1(t) = t / ln(e/t) and tau2(t) = exp(-t)."""

    model_config = ConfigDict(frozen=True)

    t: float
    tau1: float
    tau2: float

    @model_validator(mode="after")
    def _split(self) -> "TauPair":
        if not 0.0 < self.t <= 1.0:
            raise ValueError(f"split points are defined for 0 < t <= 1, got t={self.t}")
        if not 0.0 < self.tau1 <= self.t:
            raise ValueError(f"tau1 must lie in (0, t], got {self.tau1} for t={self.t}")
        # exp(-t) rounds to 1 once t drops below machine epsilon
        below_one = self.tau2 < 1.0 or (self.tau2 == 1.0 and self.t < np.finfo(float).eps)
        if not (math.exp(-1.0) <= self.tau2 and below_one):
            raise ValueError(f"tau2 must lie in [1/e, 1), got {self.tau2}")
        return self
