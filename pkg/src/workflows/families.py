"""Analytic counterexample families: f_h = (1 - t)^(-1/2) on [h, 1) and indicators of [0, s]."""

import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from src.core.errors import DomainError, InvariantError
from src.core.funcore import tau1, tau1_inverse
from src.core.interp import theta_inf_norm
from src.core.kfun import build_kcurve
from src.core.quadrature import integrate, integrate_toward_one
from src.settings import custom_logger, settings
from src.structs import (
    CoupleSpec,
    FhFamily,
    FhRatio,
    FsFamily,
    FsRow,
    KMethod,
    QuadConfig,
    StepFunction,
    TGridSpec,
)

# Create logger
logger = custom_logger("Counterexample Families")

# Samples per decade of the certified lower curve for indicators
FS_LOWER_POINTS_PER_DECADE = 200


def fh_cesaro(family: FhFamily, ts: np.ndarray | float) -> np.ndarray:
    """C(f_h)(t): 0 for t <= h, (2/t)(sqrt(1 - h) - sqrt(1 - t)) for h <= t <= 1."""
    h = family.h
    ts = np.asarray(ts, dtype=float)
    inside = np.clip(ts, h, 1.0)
    return np.where(ts <= h, 0.0, 2.0 / inside * (math.sqrt(1.0 - h) - np.sqrt(1.0 - inside)))


def fh_copson(family: FhFamily, ts: np.ndarray | float) -> np.ndarray:
    """C*(f_h)(t) = integral over [max(t, h), 1] of ds / (s sqrt(1 - s)) = 2 artanh(sqrt(1 - max(t, h)))."""
    ts = np.asarray(ts, dtype=float)
    return 2.0 * np.arctanh(np.sqrt(1.0 - np.clip(np.maximum(ts, family.h), 0.0, 1.0)))


def fh_cesaro_by_quadrature(family: FhFamily, t: float, q: QuadConfig) -> float:
    """(1/t) * integral of f_h over [0, t], integrated in the gap 1 - s toward the singularity."""
    if t <= family.h:
        return 0.0
    return integrate(lambda y: y**-0.5, 1.0 - t, 1.0 - family.h, q) / t


def fh_norms(family: FhFamily, p: float, q: QuadConfig) -> tuple[float, float]:
    """(||f_h||_Cop(p), ||f_h||_Ces(p)) by graded quadrature of the closed forms."""
    h = family.h

    def ces_of_gap(y: np.ndarray) -> np.ndarray:
        return fh_cesaro(family, 1.0 - y) ** p

    def cop_of_gap(y: np.ndarray) -> np.ndarray:
        # the gap form keeps sqrt(1 - s) exact near s = 1
        return (2.0 * np.arctanh(np.sqrt(np.clip(y, 0.0, 1.0)))) ** p

    ces_p = integrate_toward_one(ces_of_gap, h, q)
    cop_p = h * float(fh_copson(family, h)) ** p + integrate_toward_one(cop_of_gap, h, q)
    return cop_p ** (1.0 / p), ces_p ** (1.0 / p)


def fh_lower_bound(h: float, p: float) -> float:
    """Lower bound (p - 1) h^p / (1 - h^(p-1)) for (||f_h||_Cop / ||f_h||_Ces)^p."""
    return (p - 1.0) * h**p / (1.0 - h ** (p - 1.0))


def fh_cop_lower(h: float, p: float) -> float:
    """2^p h (1 - h)^(p/2) <= ||f_h||_Cop(p)^p."""
    return 2.0**p * h * (1.0 - h) ** (p / 2.0)


def fh_ces_upper(h: float, p: float) -> float:
    """||f_h||_Ces(p)^p <= 2^p (1 - h)^(p/2) (1 - h^(p-1)) / ((p - 1) h^(p-1))."""
    return 2.0**p * (1.0 - h) ** (p / 2.0) * (1.0 - h ** (p - 1.0)) / ((p - 1.0) * h ** (p - 1.0))


def fh_ratio(h: float, p: float, q: QuadConfig | None = None) -> FhRatio:
    """Copson and Cesaro norms of f_h and the lower bound for their ratio^p.

    Raises:
        DomainError: If h is outside (0, 1) or p <= 1.
        InvariantError: If the ratio falls below its lower bound.
    """
    if not 0.0 < h < 1.0:
        raise DomainError(f"need 0 < h < 1, got h={h}")
    if not 1.0 < p < math.inf:
        raise DomainError(f"need 1 < p < inf, got p={p}")
    q = q or QuadConfig()
    cop_p, ces_p = fh_norms(FhFamily(h=h), p, q)
    result = FhRatio(h=h, p=p, cop_p=cop_p, ces_p=ces_p, lower_bound=fh_lower_bound(h, p))
    if result.ratio_p < result.lower_bound * (1.0 - 1e-12):
        raise InvariantError(f"(cop/ces)^p = {result.ratio_p} below {result.lower_bound} at h={h}")
    logger.debug(f"h={h} p={p}: ratio^p={result.ratio_p:.6g} >= {result.lower_bound:.6g}")
    return result


def fs_ces_norm(family: FsFamily, p: float) -> float:
    """||chi_[0,s]||_Ces(p) = ((p/(p-1)) s - s^p/(p-1))^(1/p)."""
    s = family.s
    return ((p * s - s**p) / (p - 1.0)) ** (1.0 / p)


def fs_bound(s: float, p: float) -> float:
    """(1 / (6 p')) ln(e/s)^(1/p), below which the interpolation-to-Cesaro ratio cannot fall."""
    p_dual = p / (p - 1.0)
    return math.log(math.e / s) ** (1.0 / p) / (6.0 * p_dual)


def fs_certified_interp(s: float, p: float) -> float:
    """Lower bound for the (1 - 1/p, inf)-norm of chi_[0,s] over (Ces_1, Ces_inf).

    Uses K(t) >= ||chi_[0, min(s, tau1(t))]||_Ces1 / 3 for t < 1 and
    K(t) = s(1 + ln(1/s)) for t >= 1; the sup over a finite set of t is a
    lower bound for the sup over all t.
    """
    theta = 1.0 - 1.0 / p
    t_star = tau1_inverse(s)
    n = FS_LOWER_POINTS_PER_DECADE * 8 + 1
    ts = np.unique(np.concatenate((np.geomspace(1e-8, 1.0, n)[:-1], [t_star])))
    ts = ts[ts < 1.0]
    m = np.minimum(s, np.array([tau1(float(t)) for t in ts]))
    lows = m * (1.0 + np.log(1.0 / m)) / 3.0
    head = float(np.max(lows * ts ** (-theta)))
    return max(head, s * (1.0 + math.log(1.0 / s)))


def _fs_row(s: float, p: float, grid: TGridSpec, mesh_n: int, tol: float) -> FsRow:
    family = FsFamily(s=s)
    f = StepFunction.constant() if s == 1.0 else StepFunction.indicator(0.0, s)
    kc = build_kcurve(
        f,
        CoupleSpec.ces_unit(),
        grid,
        KMethod.LP,
        mesh_n=mesh_n,
        tol=tol,
        f_id=f"f_s={s!r}",
        workers=1,
        extra_t=(tau1_inverse(s),),
    )
    theta = 1.0 - 1.0 / p
    ces_p = fs_ces_norm(family, p)
    interp = theta_inf_norm(kc, theta)
    certified = fs_certified_interp(s, p)
    return FsRow(
        s=s,
        p=p,
        ces_p=ces_p,
        interp_norm=interp,
        certified_interp_norm=certified,
        ratio=interp / ces_p,
        certified_ratio=certified / ces_p,
        bound=fs_bound(s, p),
    )


def fs_sweep(
    p: float,
    s_grid: list[float],
    mesh_n: int | None = None,
    tol: float | None = None,
    grid: TGridSpec | None = None,
    workers: int | None = None,
) -> list[FsRow]:
    """Interpolation-to-Cesaro ratios for indicators of [0, s] over (Ces_1, Ces_inf).

    Each row carries the LP-based ratio, the certified ratio from the
    one-band lower estimate and the divergence bound.
    """
    if not 1.0 < p < math.inf:
        raise DomainError(f"need 1 < p < inf, got p={p}")
    if any(not 0.0 < s <= 1.0 for s in s_grid):
        raise DomainError("indicator lengths lie in (0, 1]")
    mesh_n = mesh_n or settings.MESH_START
    tol = settings.LP_TOL if tol is None else tol
    grid = grid or TGridSpec(t_min=1e-4, t_max=1.0, points_per_decade=settings.KCURVE_POINTS_PER_DECADE)
    with ThreadPoolExecutor(max_workers=workers or settings.WORKERS) as pool:
        rows = list(pool.map(lambda s: _fs_row(s, p, grid, mesh_n, tol), s_grid))
    for row in rows:
        logger.debug(f"s={row.s:.6g}: ratio={row.ratio:.6g} certified={row.certified_ratio:.6g} bound={row.bound:.6g}")
    return rows
