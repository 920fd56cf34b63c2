"""Cesaro, Copson, discrete and maximal operators with exact piecewise evaluation."""

import numpy as np

from src.core.errors import DivergenceError, DomainError
from src.settings import custom_logger
from src.structs.domain import Seq, StepFunction
from src.structs.piecewise import PiecewiseSmooth

# Create logger
logger = custom_logger("Operators")


def cesaro(f: StepFunction) -> PiecewiseSmooth:
    """Cf(x) = F(x)/x, exactly v_j + (F_{j-1} - v_j x_{j-1})/x on piece j.

    On the half-line Cf continues as S/x beyond the support, S = integral of f.
    """
    x, v = f.x, f.v
    F = f.cumulative()
    beta = F[:-1] - v * x[:-1]
    tail = None if f.domain.is_unit else float(F[-1])
    return PiecewiseSmooth.from_arrays(x, v, beta, np.zeros_like(v), tail)


def copson(f: StepFunction) -> PiecewiseSmooth:
    """C*f(x) = integral of f(t)/t over (x, end), zero beyond the support.

    On piece j: v_j ln(x_{j+1}/x) + R_j with R_j the contribution of later cells.
    """
    x, v = f.x, f.v
    logs = np.zeros_like(v)
    logs[1:] = v[1:] * np.log(x[2:] / x[1:-1])
    later = np.concatenate((np.cumsum(logs[::-1])[::-1][1:], [0.0]))
    alpha = v * np.log(x[1:]) + later
    return PiecewiseSmooth.from_arrays(x, alpha, np.zeros_like(v), v, None)


def _xlog(s: np.ndarray) -> np.ndarray:
    """s * (1 + ln(1/s)), continued by 0 at s = 0."""
    pos = s > 0
    safe = np.where(pos, s, 1.0)
    return np.where(pos, safe * (1.0 + np.log(1.0 / safe)), 0.0)


def _piece_integral(a, b, alpha, beta, gamma) -> np.ndarray:
    """Integral of alpha + beta/x + gamma*ln(1/x) over [a, b]."""
    pos = a > 0
    safe_a = np.where(pos, a, 1.0)
    if np.any(~pos & (beta != 0)):
        raise DivergenceError("a beta/x term is not integrable at 0")
    log_term = np.where(beta != 0, beta * np.log(b / safe_a), 0.0)
    return alpha * (b - a) + log_term + gamma * (_xlog(b) - _xlog(a))


def _piece_integral_over_x(a, b, alpha, beta, gamma) -> np.ndarray:
    """Integral of (alpha + beta/x + gamma*ln(1/x)) / x over [a, b], a > 0."""
    ratio = np.log(b / a)
    return (
        alpha * ratio
        + beta * (b - a) / (a * b)
        + gamma * ratio * 0.5 * (np.log(1.0 / a) + np.log(1.0 / b))
    )


def primitive_of(g: PiecewiseSmooth, xs: np.ndarray | float) -> np.ndarray:
    """Exact G(x) = integral of g over [0, x], tail included."""
    xs = np.asarray(xs, dtype=float)
    x = g.x
    alpha, beta, gamma = g.coefficients
    cum = np.concatenate(([0.0], np.cumsum(_piece_integral(x[:-1], x[1:], alpha, beta, gamma))))
    inside = np.minimum(xs, g.end)
    k = g.piece_index(inside)
    out = cum[k] + _piece_integral(x[k], inside, alpha[k], beta[k], gamma[k])
    if g.tail:
        out = out + np.where(xs > g.end, g.tail * np.log(np.maximum(xs, g.end) / g.end), 0.0)
    return out


def cesaro_of(g: PiecewiseSmooth, xs: np.ndarray | float) -> np.ndarray:
    """(Cg)(x) = G(x)/x for a piecewise-smooth g."""
    xs = np.asarray(xs, dtype=float)
    if np.any(xs <= 0):
        raise DomainError("the Cesaro transform is evaluated at x > 0")
    return primitive_of(g, xs) / xs


def copson_of(g: PiecewiseSmooth, xs: np.ndarray | float) -> np.ndarray:
    """(C*g)(x) = integral of g(t)/t over (x, end), plus the tail c/t^2 beyond."""
    xs = np.asarray(xs, dtype=float)
    if np.any(xs <= 0):
        raise DomainError("the Copson transform is evaluated at x > 0")
    x = g.x
    alpha, beta, gamma = g.coefficients
    full = np.zeros(g.n_pieces)
    full[1:] = _piece_integral_over_x(x[1:-1], x[2:], alpha[1:], beta[1:], gamma[1:])
    after = np.concatenate((np.cumsum(full[::-1])[::-1][1:], [0.0]))
    inside = np.minimum(xs, g.end)
    k = g.piece_index(inside)
    out = after[k] + _piece_integral_over_x(inside, x[k + 1], alpha[k], beta[k], gamma[k])
    out = np.where(xs < g.end, out, 0.0)
    if g.tail:
        out = out + g.tail / np.maximum(xs, g.end)
    return out


def discrete_cesaro(x: Seq, M: int) -> Seq:
    """(C_d x)(n) = (1/n) * sum_{k<=n} x_k for n = 1..M."""
    if M < 1:
        raise DomainError(f"output length must be positive, got M={M}")
    padded = np.zeros(max(M, x.N))
    padded[: x.N] = x.a
    n = np.arange(1, M + 1)
    return Seq(vals=tuple(np.cumsum(padded)[:M] / n))


def discrete_copson(x: Seq, M: int) -> Seq:
    """(C*_d x)(n) = sum_{k>=n} x_k / k for n = 1..M (exact, finite support)."""
    if M < 1:
        raise DomainError(f"output length must be positive, got M={M}")
    k = np.arange(1, x.N + 1)
    tails = np.cumsum((x.a / k)[::-1])[::-1]
    out = np.zeros(M)
    m = min(M, x.N)
    out[:m] = tails[:m]
    return Seq(vals=tuple(out))


def _pair_table(f: StepFunction) -> np.ndarray:
    """B[L, R] = max average over breakpoint pairs x_i < x_j with i < L and j >= R."""
    x = f.x
    F = f.cumulative()
    with np.errstate(divide="ignore", invalid="ignore"):
        avg = (F[None, :] - F[:, None]) / (x[None, :] - x[:, None])
    i, j = np.indices(avg.shape)
    avg = np.where(j > i, avg, -np.inf)
    # reverse running max over j, then running max over i
    over_j = np.maximum.accumulate(avg[:, ::-1], axis=1)[:, ::-1]
    over_j = np.concatenate((over_j, np.full((x.size, 1), -np.inf)), axis=1)
    over_i = np.maximum.accumulate(over_j, axis=0)
    return np.concatenate((np.full((1, x.size + 1), -np.inf), over_i), axis=0)


def maximal_many(f: StepFunction, xs: np.ndarray) -> np.ndarray:
    """Exact Hardy-Littlewood maximal function at many points.

    For step f the interval average is monotone in each endpoint between
    breakpoints, so the sup is attained with endpoints in breaks U {x}.

    Raises:
        DomainError: If a point lies outside the open domain.
    """
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    limit = f.domain.T
    if np.any(xs <= 0) or np.any(xs > limit) or (f.domain.is_unit and np.any(xs >= 1.0)):
        raise DomainError("maximal function points must lie inside the domain")
    x = f.x
    F = f.cumulative()
    Fx = f.primitive(xs)
    L = np.searchsorted(x, xs, side="left")
    R = np.searchsorted(x, xs, side="right")
    best = _pair_table(f)[L, R]
    with np.errstate(divide="ignore", invalid="ignore"):
        right = (F[None, :] - Fx[:, None]) / (x[None, :] - xs[:, None])
        left = (Fx[:, None] - F[None, :]) / (xs[:, None] - x[None, :])
    cols = np.arange(x.size)[None, :]
    right = np.where(cols >= R[:, None], right, -np.inf).max(axis=1)
    left = np.where(cols < L[:, None], left, -np.inf).max(axis=1)
    return np.maximum.reduce([best, right, left])


def maximal(f: StepFunction, x: float) -> float:
    """Mf(x) = sup of averages of f over intervals containing x."""
    return float(maximal_many(f, np.array([x]))[0])
