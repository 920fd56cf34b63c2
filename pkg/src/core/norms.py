"""Continuous and discrete norms, the A_p constant and the maximal-operator witness."""

import math

import numpy as np

from src.core.errors import DivergenceError, DomainError
from src.core.operators import cesaro, copson, discrete_copson, maximal_many
from src.core.quadrature import integrate, integrate_pieces
from src.settings import custom_logger
from src.structs.domain import Seq, StepFunction, merge_meshes
from src.structs.piecewise import PiecewiseSmooth
from src.structs.weights import (
    UNIT_ONLY,
    QuadConfig,
    SeqSpace,
    SeqSpaceKind,
    Weight,
    WeightKind,
)

# Create logger
logger = custom_logger("Norms")

ONE = Weight()
LOG_INV = Weight.named(WeightKind.LOG_INV)
LOG_E = Weight.named(WeightKind.LOG_E)

# Doubling cap for the sequence tail bracket
MAX_SEQ_TERMS = 2**22


def _check_p(p: float) -> None:
    if not (p >= 1.0):
        raise DomainError(f"norm exponent must satisfy p >= 1, got p={p}")


def l1_norm(f: StepFunction) -> float:
    return f.integral()


def linf_norm(f: StepFunction) -> float:
    return float(f.v.max())


def _step_lp(f: StepFunction, p: float, w: Weight) -> float:
    if math.isinf(p):
        if w.kind != WeightKind.ONE:
            raise DomainError("weighted sup norms are not supported")
        return linf_norm(f)
    cell = w.integral(f.x[:-1], f.x[1:])
    active = f.v > 0
    if np.any(active & np.isinf(cell)):
        raise DivergenceError(f"f is not in L_{p}({w.kind.value})")
    return float(np.sum(np.where(active, f.v**p * np.where(active, cell, 0.0), 0.0))) ** (1.0 / p)


def _piece_sup(g: PiecewiseSmooth) -> float:
    """Exact sup of |g|: piece endpoints plus the stationary point x = -beta/gamma."""
    x = g.x
    alpha, beta, gamma = g.coefficients
    if (beta[0] != 0 or gamma[0] != 0) and x[0] == 0.0:
        return math.inf
    pts = [x[1:], np.where(x[:-1] > 0, x[:-1], x[1:])]
    with np.errstate(divide="ignore", invalid="ignore"):
        crit = np.where(gamma != 0, -beta / gamma, np.nan)
    inside = (crit > x[:-1]) & (crit < x[1:])
    pts.append(np.where(inside, crit, x[1:]))
    best = 0.0
    for k in range(g.n_pieces):
        cands = np.array([p[k] for p in pts])
        vals = alpha[k] + beta[k] / cands + gamma[k] * np.log(1.0 / cands)
        best = max(best, float(np.abs(vals).max()))
    return best


def _tail_integral(c: float, end: float, p: float, w: Weight) -> float:
    """Integral of (|c|/x)^p w(x) over (end, inf)."""
    if c == 0.0:
        return 0.0
    match w.kind:
        case WeightKind.ONE:
            if p <= 1.0:
                raise DivergenceError("an a/x tail is not integrable for p = 1")
            return abs(c) ** p * end ** (1.0 - p) / (p - 1.0)
        case WeightKind.INV_T:
            return abs(c) ** p * end ** (-p) / p
        case _:
            raise DomainError(f"no closed-form tail for weight {w.kind.value}")


def lp_weighted(
    g: PiecewiseSmooth | StepFunction, p: float, w: Weight, q: QuadConfig
) -> float:
    """Weighted L_p norm (integral of |g|^p w)^(1/p); p may be inf.

    Step inputs are integrated exactly cell by cell. Piecewise-smooth inputs use
    graded Gauss-Legendre per piece and the closed-form a/x tail on the half-line.

    Raises:
        DomainError: If p < 1 or the weight does not fit the domain.
        DivergenceError: If the norm is infinite.
    """
    _check_p(p)
    if w.kind in UNIT_ONLY:
        end = g.end
        if end > 1.0 + 1e-12 or (isinstance(g, PiecewiseSmooth) and g.tail):
            raise DomainError(f"weight {w.kind.value} lives on [0, 1]")
    if isinstance(g, StepFunction):
        return _step_lp(g, p, w)
    if math.isinf(p):
        if w.kind != WeightKind.ONE:
            raise DomainError("weighted sup norms are not supported")
        return _piece_sup(g)
    if w.kind == WeightKind.INV_T and (g.coefficients[0][0] or g.coefficients[2][0]):
        raise DivergenceError("1/t is not integrable at 0")
    breaks = g.x
    if w.kind == WeightKind.STEP:
        if g.tail:
            raise DomainError("step weights with an analytic tail are not supported")
        breaks = merge_meshes(breaks, [b for b in w.step.breaks if b < g.end])
    body = integrate_pieces(lambda s: np.abs(g(s)) ** p * w(s), breaks, q)
    tail = _tail_integral(g.tail, g.end, p, w) if g.tail else 0.0
    return (body + tail) ** (1.0 / p)


def ces_norm(f: StepFunction, p: float, q: QuadConfig) -> float:
    """Cesaro norm ||Cf||_p.

    p = 1 on [0, 1] is the exact integral of f ln(1/t); p = inf is the exact
    maximum of F(x)/x over breakpoints.

    Raises:
        DivergenceError: For p = 1 on the half-line with f != 0.
    """
    _check_p(p)
    if math.isinf(p):
        F = f.cumulative()
        return float(np.max(F[1:] / f.x[1:]))
    if p == 1.0:
        if not f.domain.is_unit:
            if f.is_zero():
                return 0.0
            raise DivergenceError("Ces_1 on the half-line contains only 0")
        return lp_weighted(f, 1.0, LOG_INV, q)
    return lp_weighted(cesaro(f), p, ONE, q)


def cop_norm(f: StepFunction, p: float, q: QuadConfig) -> float:
    """Copson norm ||C*f||_p for 1 <= p < inf."""
    _check_p(p)
    if math.isinf(p):
        raise DomainError("C*f is unbounded near 0; use p < inf")
    return lp_weighted(copson(f), p, ONE, q)


def ces_log_norm(f: StepFunction, p: float, q: QuadConfig) -> float:
    """Weighted Cesaro norm (integral of (Cf)^p ln(e/x))^(1/p) on [0, 1]."""
    if not f.domain.is_unit:
        raise DomainError("the ln(e/x)-weighted Cesaro norm lives on [0, 1]")
    if not 1.0 < p < math.inf:
        raise DomainError(f"need 1 < p < inf, got p={p}")
    return lp_weighted(cesaro(f), p, LOG_E, q)


def _zeta_tail_bracket(M: int, p: float) -> tuple[float, float]:
    """Enclosure of sum_{n>M} n^-p from the convexity of n^-p."""
    lower = (M + 1.0) ** (1.0 - p) / (p - 1.0) + 0.5 * (M + 1.0) ** (-p)
    upper = (M + 0.5) ** (1.0 - p) / (p - 1.0)
    return lower, upper


def seq_norm(x: Seq, space: SeqSpace, M: int, q: QuadConfig | None = None) -> float:
    """Norm of a finitely supported sequence.

    cop_p and ces_inf are exact. For ces_p the terms beyond the support are
    (S/n)^p, whose tail past M is enclosed by integral bounds; M doubles until
    the enclosure is within rel_tol and the midpoint is returned.
    """
    q = q or QuadConfig()
    p = space.p
    a = x.a
    match space.kind:
        case SeqSpaceKind.LP:
            w = 1.0 / np.arange(1, x.N + 1) if space.weight == WeightKind.INV_T else 1.0
            if math.isinf(p):
                return float(np.max(a * w))
            return float(np.sum(a**p * w)) ** (1.0 / p)
        case SeqSpaceKind.COP:
            c = discrete_copson(x, x.N).a
            return float(c.max()) if math.isinf(p) else float(np.sum(c**p)) ** (1.0 / p)
        case SeqSpaceKind.CES_INF:
            return float(np.max(np.cumsum(a) / np.arange(1, x.N + 1)))
        case SeqSpaceKind.CES:
            if math.isinf(p):
                return float(np.max(np.cumsum(a) / np.arange(1, x.N + 1)))
            if p == 1.0:
                if x.total() == 0.0:
                    return 0.0
                raise DivergenceError("ces_1 = {0}")
            return _ces_seq_norm(a, p, max(M, x.N), q.rel_tol)


def _ces_seq_norm(a: np.ndarray, p: float, M: int, rel_tol: float) -> float:
    S = float(a.sum())
    if S == 0.0:
        return 0.0
    head = float(np.sum((np.cumsum(a) / np.arange(1, a.size + 1)) ** p))
    done = a.size
    while True:
        head += S**p * float(np.sum(np.arange(done + 1, M + 1, dtype=float) ** (-p)))
        done = M
        lo, hi = _zeta_tail_bracket(M, p)
        lower, upper = (head + S**p * lo) ** (1 / p), (head + S**p * hi) ** (1 / p)
        mid = 0.5 * (lower + upper)
        if upper - lower <= rel_tol * mid or M >= MAX_SEQ_TERMS:
            if upper - lower > rel_tol * mid:
                logger.warning(f"ces_{p} tail bracket width {upper - lower:.3e} above tolerance")
            return mid
        M *= 2


def ap_grid(grid_n: int, levels: int) -> np.ndarray:
    """Equispaced points on [0, 1] plus geometric points toward 0."""
    geometric = (1.0 / grid_n) * 0.5 ** np.arange(1, levels + 1)
    return merge_meshes(np.linspace(0.0, 1.0, grid_n + 1), geometric)


def ap_constant(w: Weight, p: float, grid_n: int, q: QuadConfig) -> float:
    """Largest A_p expression (avg w)(avg w^(-1/(p-1)))^(p-1) over grid intervals.

    The grid maximum is a lower bound for the A_p constant of w on [0, 1].

    Raises:
        DomainError: If p <= 1 or w is not positive and locally integrable.
    """
    if not 1.0 < p < math.inf:
        raise DomainError(f"need 1 < p < inf, got p={p}")
    if w.kind == WeightKind.INV_T:
        raise DomainError("1/t is not integrable at 0")
    if w.kind == WeightKind.STEP and np.any(w.step.v <= 0):
        raise DomainError("the A_p condition needs a positive weight")
    r = 1.0 / (p - 1.0)
    pts = ap_grid(grid_n, q.geometric_refine_levels)
    cell_w = w.integral(pts[:-1], pts[1:])
    if w.kind in (WeightKind.ONE, WeightKind.STEP):
        cell_dual = w.power(-r).integral(pts[:-1], pts[1:])
    else:
        cell_dual = np.array(
            [integrate(lambda s: w(s) ** (-r), a, b, q) for a, b in zip(pts[:-1], pts[1:])]
        )
    W = np.concatenate(([0.0], np.cumsum(cell_w)))
    V = np.concatenate(([0.0], np.cumsum(cell_dual)))
    with np.errstate(divide="ignore", invalid="ignore"):
        length = pts[None, :] - pts[:, None]
        value = ((W[None, :] - W[:, None]) / length) * ((V[None, :] - V[:, None]) / length) ** (p - 1.0)
    i, j = np.indices(value.shape)
    best = float(np.max(np.where(j > i, value, -np.inf)))
    logger.debug(f"A_{p} grid maximum for {w.kind.value}: {best:.12g}")
    return best


def ap_log_bound(b: float) -> float:
    """Closed-form bound ln(e^2/b) / ln(e/b) <= 2 for ln(e/x) on intervals (a, b)."""
    return math.log(math.e**2 / b) / math.log(math.e / b)


def maximal_norm(f: StepFunction, p: float, w: Weight, q: QuadConfig) -> float:
    """||Mf||_{L_p(w)} on [0, 1] by graded quadrature of the exact maximal function."""
    _check_p(p)
    if not f.domain.is_unit:
        raise DomainError("the maximal-operator witness runs on [0, 1]")
    return integrate_pieces(lambda s: maximal_many(f, s) ** p * w(s), f.x, q) ** (1.0 / p)
