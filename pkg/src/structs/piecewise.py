import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from src.structs.domain import merge_meshes


class PiecewiseSmooth(BaseModel):
    """x -> alpha + beta/x + gamma*ln(1/x) on each piece (breaks[i], breaks[i+1]].

    Beyond the last break the function is tail/x when tail is set (half-line
    continuation) and 0 otherwise. Cesaro and Copson transforms of step
    functions, and their sums, are exactly of this form.
    """

    model_config = ConfigDict(frozen=True)

    breaks: tuple[float, ...]
    alpha: tuple[float, ...]
    beta: tuple[float, ...]
    gamma: tuple[float, ...]
    tail: float | None = None

    @model_validator(mode="after")
    def _check_shapes(self) -> "PiecewiseSmooth":
        n = len(self.breaks) - 1
        if n < 1 or not (len(self.alpha) == len(self.beta) == len(self.gamma) == n):
            raise ValueError("need one (alpha, beta, gamma) triple per piece")
        if self.breaks[0] != 0.0 or np.any(np.diff(self.breaks) <= 0):
            raise ValueError("breaks must start at 0 and increase strictly")
        return self

    @classmethod
    def from_arrays(
        cls,
        breaks: np.ndarray,
        alpha: np.ndarray,
        beta: np.ndarray,
        gamma: np.ndarray,
        tail: float | None = None,
    ) -> "PiecewiseSmooth":
        """Build from numpy arrays."""
        return cls(
            breaks=tuple(map(float, breaks)),
            alpha=tuple(map(float, alpha)),
            beta=tuple(map(float, beta)),
            gamma=tuple(map(float, gamma)),
            tail=None if tail is None else float(tail),
        )

    @property
    def x(self) -> np.ndarray:
        return np.asarray(self.breaks, dtype=float)

    @property
    def coefficients(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return np.asarray(self.alpha), np.asarray(self.beta), np.asarray(self.gamma)

    @property
    def n_pieces(self) -> int:
        return len(self.alpha)

    @property
    def end(self) -> float:
        return self.breaks[-1]

    def piece_index(self, xs: np.ndarray) -> np.ndarray:
        idx = np.searchsorted(self.x, xs, side="left") - 1
        return np.clip(idx, 0, self.n_pieces - 1)

    def _coefficients_at(self, xs: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Coefficients in force at each point, tail included."""
        a, b, g = self.coefficients
        k = self.piece_index(xs)
        beyond = xs > self.end
        tail = 0.0 if self.tail is None else self.tail
        return (
            np.where(beyond, 0.0, a[k]),
            np.where(beyond, tail, b[k]),
            np.where(beyond, 0.0, g[k]),
        )

    def __call__(self, xs: np.ndarray | float) -> np.ndarray:
        xs = np.asarray(xs, dtype=float)
        a, b, g = self._coefficients_at(xs)
        safe = np.where(xs > 0, xs, 1.0)
        out = a + np.where(b != 0, b / safe, 0.0) + np.where(g != 0, g * np.log(1.0 / safe), 0.0)
        return np.where(xs > 0, out, np.inf)

    def __add__(self, other: "PiecewiseSmooth") -> "PiecewiseSmooth":
        mesh = merge_meshes(self.x, other.x)
        mids = 0.5 * (mesh[:-1] + mesh[1:])
        left = self._coefficients_at(mids)
        right = other._coefficients_at(mids)
        if self.tail is None and other.tail is None:
            tail = None
        else:
            tail = (self.tail or 0.0) + (other.tail or 0.0)
        return PiecewiseSmooth.from_arrays(
            mesh, left[0] + right[0], left[1] + right[1], left[2] + right[2], tail
        )
