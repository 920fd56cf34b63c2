"""K-functionals: closed forms, the variational LP oracle and two-sided estimates."""

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable

import numpy as np
from scipy.optimize import brentq

from src.core.errors import DivergenceError, DomainError, InvariantError
from src.core.funcore import rearrange, t_zero, tau_pair
from src.core.lp import model_norm, norm_models, solve_decomposition
from src.core.norms import ces_norm, lp_weighted
from src.settings import custom_logger, settings
from src.structs.couples import (
    CesLowerBounds,
    CoupleKind,
    CoupleSpec,
    Decomposition,
    KCurve,
    KMethod,
    KTail,
    TailKind,
    TGridSpec,
)
from src.structs.domain import Seq, StepFunction
from src.structs.weights import UNIT_ONLY, QuadConfig, Weight, WeightKind

# Create logger
logger = custom_logger("K-Functionals")

ONE = Weight()
LOG_INV = Weight.named(WeightKind.LOG_INV)
ONE_MINUS_T = Weight.named(WeightKind.ONE_MINUS_T)

# Geometric levels added toward 0 when an LP mesh is refined
LP_GRADING_LEVELS = 10
# Samples per cell when locating crossovers of general weight pairs
CROSSOVER_SAMPLES = 33
CLOSED_FORM_KINDS = {CoupleKind.WEIGHTED_L1, CoupleKind.L1_LINF, CoupleKind.DISCRETE_L1_L1INVK}


def _as_ts(ts: Iterable[float]) -> np.ndarray:
    return np.atleast_1d(np.asarray(ts if isinstance(ts, np.ndarray) else list(ts), dtype=float))


def _check_t(ts: np.ndarray) -> None:
    if np.any(~(ts > 0)) or np.any(~np.isfinite(ts)):
        raise DomainError("K-functionals are evaluated at finite t > 0")


def _check_weights(f: StepFunction, *weights: Weight) -> None:
    if f.end > 1.0 + 1e-12 and any(w.kind in UNIT_ONLY for w in weights):
        raise DomainError("ln and 1 - t weights live on [0, 1]")


def weighted_upper(f: StepFunction, w: Weight, xs: np.ndarray | float) -> np.ndarray:
    """Exact U(x) = integral of w f over [x, end] (vectorised).

    Cells where w is not integrable contribute inf, so U(0) is inf for 1/t
    unless f vanishes near 0.
    """
    xs = np.clip(np.asarray(xs, dtype=float), 0.0, f.end)
    with np.errstate(invalid="ignore"):
        cell = np.where(f.v > 0, f.v * w.integral(f.x[:-1], f.x[1:]), 0.0)
    after = np.concatenate((np.cumsum(cell[::-1])[::-1][1:], [0.0]))
    k = f.cell_index(xs)
    with np.errstate(invalid="ignore"):
        partial = np.where(f.v[k] > 0, f.v[k] * w.integral(xs, f.x[k + 1]), 0.0)
    return after[k] + partial


def _named_crossover(w0: Weight, w1: Weight, ts: np.ndarray) -> tuple[np.ndarray, bool] | None:
    """Crossover c(t) where w0 = t w1, and whether t w1 is the smaller weight left of it."""
    pair = (w0.kind, w1.kind)
    if pair == (WeightKind.ONE, WeightKind.INV_T):
        return ts, False
    if pair == (WeightKind.LOG_INV, WeightKind.ONE):
        return np.exp(-ts), True
    if pair == (WeightKind.ONE_MINUS_T, WeightKind.ONE):
        return np.clip(1.0 - ts, 0.0, None), True
    return None


def _same_weight(w0: Weight, w1: Weight) -> bool:
    return w0.kind == w1.kind and (w0.kind != WeightKind.STEP or w0.step == w1.step)


def _weighted_norm(f: StepFunction, w: Weight) -> float:
    try:
        return lp_weighted(f, 1.0, w, QuadConfig())
    except DivergenceError:
        return math.inf


def _generic_weighted_l1(t: float, f: StepFunction, w0: Weight, w1: Weight) -> float:
    """Integral of min(w0, t w1) f with crossovers located by brentq per cell."""
    mesh = f.x
    for w in (w0, w1):
        if w.kind == WeightKind.STEP:
            mesh = np.union1d(mesh, [b for b in w.step.breaks if 0.0 < b < f.end])
    g = f.with_breaks(mesh)

    def gap(s: float) -> float:
        return float(w0(s) - t * w1(s))

    total = 0.0
    for a, b, v in zip(g.x[:-1], g.x[1:], g.v):
        if v == 0:
            continue
        start = a if a > 0 else b * 1e-12
        samples = np.linspace(start, b, CROSSOVER_SAMPLES)
        # step weights are evaluated strictly inside the cell
        samples[-1] = b - 1e-12 * (b - a)
        d = np.array([gap(s) for s in samples])
        cuts = [a]
        for s0, s1, d0, d1 in zip(samples[:-1], samples[1:], d[:-1], d[1:]):
            if d0 * d1 < 0:
                cuts.append(brentq(gap, s0, s1, xtol=1e-15))
        cuts.append(b)
        for lo, hi in zip(cuts[:-1], cuts[1:]):
            mid = 0.5 * (lo + hi)
            if gap(mid) <= 0:
                total += v * float(w0.integral(lo, hi))
            else:
                total += t * v * float(w1.integral(lo, hi))
    return total


def k_weighted_l1_many(
    ts: Iterable[float], f: StepFunction, w0: Weight, w1: Weight, q: QuadConfig | None = None
) -> np.ndarray:
    """K(t, f; L1(w0), L1(w1)) = integral of min(w0, t w1) f, for many t.

    Named weight pairs use the analytic crossover; equal weights give
    min(1, t) ||f||; other pairs fall back to per-cell root finding.

    Raises:
        DomainError: If some t <= 0 or a weight does not fit the domain.
    """
    ts = _as_ts(ts)
    _check_t(ts)
    _check_weights(f, w0, w1)
    if f.is_zero():
        return np.zeros_like(ts)
    if _same_weight(w0, w1):
        return np.minimum(1.0, ts) * _weighted_norm(f, w0)
    named = _named_crossover(w0, w1, ts)
    if named is None:
        return np.array([_generic_weighted_l1(float(t), f, w0, w1) for t in ts])
    c, x1_on_left = named
    c = np.clip(c, 0.0, f.end)
    if x1_on_left:
        left = ts * (weighted_upper(f, w1, 0.0) - weighted_upper(f, w1, c))
        right = weighted_upper(f, w0, c)
    else:
        left = weighted_upper(f, w0, 0.0) - weighted_upper(f, w0, c)
        right = ts * weighted_upper(f, w1, np.maximum(c, np.finfo(float).tiny))
    return left + right


def k_weighted_l1(t: float, f: StepFunction, w0: Weight, w1: Weight, q: QuadConfig | None = None) -> float:
    """Single-t K(t, f; L1(w0), L1(w1))."""
    return float(k_weighted_l1_many([t], f, w0, w1, q)[0])


def k_l1_linf_many(ts: Iterable[float], f: StepFunction) -> np.ndarray:
    """K(t, f; L1, L_inf) = integral of the rearrangement f* over [0, min(t, end)]."""
    ts = _as_ts(ts)
    _check_t(ts)
    return rearrange(f).primitive(np.minimum(ts, f.end))


def k_l1_linf(t: float, f: StepFunction) -> float:
    return float(k_l1_linf_many([t], f)[0])


def k_discrete_many(ts: Iterable[float], x: Seq) -> np.ndarray:
    """K(t, x; l1, l1(1/k)) = sum of x_k min(1, t/k), exact for finite support."""
    ts = _as_ts(ts)
    _check_t(ts)
    k = np.arange(1, x.N + 1, dtype=float)
    return np.sum(x.a[None, :] * np.minimum(1.0, ts[:, None] / k[None, :]), axis=1)


def k_discrete(t: float, x: Seq) -> float:
    return float(k_discrete_many([t], x)[0])


def _check_couple_fit(f: StepFunction, couple: CoupleSpec) -> None:
    if couple.kind == CoupleKind.RESTRICTED:
        a, b = couple.support
        pos = f.v > 0
        if np.any(pos & ((f.x[:-1] < a - 1e-15) | (f.x[1:] > b + 1e-15))):
            raise DomainError(f"f is not supported in [{a}, {b}]")
        _check_couple_fit(f, couple.base)
        return
    match couple.kind:
        case CoupleKind.CES1_CESINF_UNIT:
            if not f.domain.is_unit:
                raise DomainError("(Ces_1, Ces_inf) is taken on [0, 1]")
        case CoupleKind.L1_CESINF_HALFLINE:
            if f.domain.is_unit:
                raise DomainError("(L1, Ces_inf) on the half-line needs a half-line function")
        case CoupleKind.WEIGHTED_L1:
            _check_weights(f, couple.w0, couple.w1)
        case CoupleKind.L1W_CESINF:
            _check_weights(f, couple.w0)


def _lp_extra_points(t: float, couple: CoupleSpec) -> list[float]:
    """Breakpoints worth adding to an LP mesh at this t."""
    pts: list[float] = []
    if couple.kind == CoupleKind.RESTRICTED:
        pts.extend(couple.support)
    base = couple.resolved()
    if base.kind == CoupleKind.CES1_CESINF_UNIT and t <= 1.0:
        tp = tau_pair(t)
        pts.extend([tp.tau1, tp.tau2])
    weights = [w for w in (base.w0, base.w1) if w is not None]
    if base.kind == CoupleKind.WEIGHTED_L1:
        named = _named_crossover(base.w0, base.w1, np.array([t]))
        if named is not None:
            pts.append(float(named[0][0]))
    if base.kind == CoupleKind.L1W_CESINF and any(w.kind == WeightKind.ONE_MINUS_T for w in weights):
        pts.append(1.0 - t)
    return [p for p in pts if p > 0]


def k_variational(
    t: float,
    f: StepFunction,
    couple: CoupleSpec,
    mesh_n: int,
    tol: float | None = None,
) -> Decomposition:
    """Upper bound for K(t, f) by the exact optimum over step decompositions.

    The mesh of f is refined to at least mesh_n cells, with the split points
    relevant at this t inserted, before solving the linear program.

    Raises:
        DomainError: If t <= 0 or f does not fit the couple.
        SolverError: If the couple has no LP model or HiGHS fails.
    """
    _check_t(np.array([t]))
    norm_models(couple)
    _check_couple_fit(f, couple)
    tol = settings.LP_TOL if tol is None else tol
    refined = f.refine(mesh_n, _lp_extra_points(t, couple), LP_GRADING_LEVELS)
    return solve_decomposition(t, refined, couple, tol)


def k_variational_converged(
    t: float,
    f: StepFunction,
    couple: CoupleSpec,
    mesh_start: int | None = None,
    mesh_cap: int | None = None,
    rel_change: float | None = None,
    tol: float | None = None,
) -> Decomposition:
    """Double the mesh until two successive LP values agree to rel_change."""
    mesh = mesh_start or settings.MESH_START
    cap = mesh_cap or settings.MESH_CAP
    rel_change = settings.MESH_REL_CHANGE if rel_change is None else rel_change
    prev = k_variational(t, f, couple, mesh, tol)
    while True:
        if prev.value == 0.0:
            return prev
        if 2 * mesh > cap:
            logger.warning(f"mesh cap {cap} reached at t={t} without convergence")
            return prev.model_copy(update={"converged": False})
        mesh *= 2
        cur = k_variational(t, f, couple, mesh, tol)
        change = abs(cur.value - prev.value) / max(abs(cur.value), np.finfo(float).tiny)
        logger.debug(f"t={t:.6g} mesh={cur.mesh_n} K={cur.value:.12g} change={change:.3e}")
        if change < rel_change:
            return cur
        prev = cur


def _check_band_t(t: float, f: StepFunction) -> None:
    if not f.domain.is_unit:
        raise DomainError("band estimates are taken on [0, 1]")
    if not 0.0 < t < 1.0:
        raise DomainError(f"band estimates need 0 < t < 1, got t={t}")


def theorem3_terms(t: float, f: StepFunction, q: QuadConfig | None = None) -> tuple[float, float]:
    """A = ||f on [0, tau1] u [tau2, 1]||_Ces1 and B = ||f on [tau1, tau2]||_Ces_inf."""
    _check_band_t(t, f)
    q = q or QuadConfig()
    tp = tau_pair(t)
    if tp.tau1 >= tp.tau2:
        return ces_norm(f, 1.0, q), 0.0
    outer = f.mask([(0.0, tp.tau1), (tp.tau2, 1.0)])
    middle = f.mask([(tp.tau1, tp.tau2)])
    return ces_norm(outer, 1.0, q), ces_norm(middle, math.inf, q)


def theorem3_bounds(t: float, f: StepFunction, q: QuadConfig | None = None) -> tuple[float, float]:
    """((A + tB) / (2e^2), A + tB) bracketing K(t, f; Ces_1, Ces_inf) for 0 < t < 1."""
    A, B = theorem3_terms(t, f, q)
    upper = A + t * B
    return upper / (2.0 * math.e**2), upper


def theorem4_upper_lower(t: float, f: StepFunction, q: QuadConfig | None = None) -> tuple[float, float]:
    """(v / 3, v) with v = ||f on [0, tau1(t)]||_Ces1, for non-increasing f.

    Raises:
        InvariantError: If f is not non-increasing.
    """
    _check_band_t(t, f)
    if not f.is_nonincreasing():
        raise InvariantError("the one-band estimate needs a non-increasing f")
    v = ces_norm(f.mask([(0.0, tau_pair(t).tau1)]), 1.0, q or QuadConfig())
    return v / 3.0, v


def ces_lower_bounds(t: float, f: StepFunction, q: QuadConfig | None = None) -> CesLowerBounds:
    """Certified lower bounds for K(t, f; Ces_1, Ces_inf) on [0, 1], 0 < t <= 1."""
    if not f.domain.is_unit:
        raise DomainError("band estimates are taken on [0, 1]")
    if not 0.0 < t <= 1.0:
        raise DomainError(f"band estimates need 0 < t <= 1, got t={t}")
    q = q or QuadConfig()
    tp = tau_pair(t)
    head = ces_norm(f.mask([(0.0, tp.tau1)]), 1.0, q) / 3.0
    if tp.tau1 < tp.tau2:
        outer = ces_norm(f.mask([(0.0, tp.tau1), (tp.tau2, 1.0)]), 1.0, q) / 4.0
    else:
        outer = ces_norm(f, 1.0, q) / 4.0
    middle = 0.0
    if t < t_zero() and tp.tau1 < tp.tau2:
        middle = t * ces_norm(f.mask([(tp.tau1, tp.tau2)]), math.inf, q) / math.e**2
    # Ces_inf embeds into L1 with norm one
    weighted = k_weighted_l1(t, f, LOG_INV, ONE)
    return CesLowerBounds(t=t, head=head, outer=outer, middle=middle, weighted_l1=weighted)


def restricted_g(t: float, h: StepFunction) -> float:
    """G(t, h) = integral over [1/2, 1] of min(1 - s, t) h(s) for h supported there."""
    _check_couple_fit(h, CoupleSpec.restricted(CoupleSpec.l1w_cesinf(ONE_MINUS_T), 0.5, 1.0))
    return k_weighted_l1(t, h, ONE_MINUS_T, ONE)


def _ratio_sup(w0: Weight, w1: Weight, f: StepFunction) -> float | None:
    """sup of w0 / w1 over the support of f, when known in closed form."""
    if _same_weight(w0, w1):
        return 1.0
    start, end = f.support_start(), f.support_end()
    match (w0.kind, w1.kind):
        case (WeightKind.ONE, WeightKind.INV_T):
            return end
        case (WeightKind.ONE_MINUS_T, WeightKind.ONE):
            return 1.0 - start
        case (WeightKind.ONE_MINUS_T, WeightKind.INV_T):
            return 0.25
        case (WeightKind.LOG_INV, WeightKind.INV_T):
            return 1.0 / math.e
        case (WeightKind.LOG_E, WeightKind.INV_T):
            return 1.0
        case (WeightKind.ONE, WeightKind.ONE_MINUS_T):
            return 1.0 / (1.0 - end) if end < 1.0 else None
        case (WeightKind.LOG_INV, WeightKind.ONE):
            return math.log(1.0 / start) if start > 0 else None
        case (WeightKind.LOG_E, WeightKind.ONE):
            return 1.0 + math.log(1.0 / start) if start > 0 else None
    return None


def _x_norms(source: StepFunction | Seq, couple: CoupleSpec) -> tuple[float, float]:
    """(||f||_X0, ||f||_X1), inf when a norm diverges."""
    base = couple.resolved()
    if base.kind == CoupleKind.DISCRETE_L1_L1INVK:
        return source.total(), float(np.sum(source.a / np.arange(1, source.N + 1)))
    if base.kind == CoupleKind.WEIGHTED_L1:
        return _weighted_norm(source, base.w0), _weighted_norm(source, base.w1)
    x0, x1 = norm_models(base)
    return model_norm(source, x0), model_norm(source, x1)


def _tail(source: StepFunction | Seq, couple: CoupleSpec, x0: float, x1: float, t_max: float) -> KTail:
    """Tail descriptor: constant beyond t_c when ||h||_X0 <= t_c ||h||_X1 on supp f."""
    base = couple.resolved()
    t_c: float | None = None
    match base.kind:
        case CoupleKind.DISCRETE_L1_L1INVK:
            t_c = float(source.N)
        case CoupleKind.L1_LINF:
            t_c = source.end
        case CoupleKind.CES1_CESINF_UNIT:
            t_c = 1.0
        case CoupleKind.L1_CESINF_HALFLINE:
            t_c = source.support_end()
        case CoupleKind.WEIGHTED_L1:
            t_c = _ratio_sup(base.w0, base.w1, source)
        case CoupleKind.L1W_CESINF:
            w0 = base.w0
            bounded = w0.kind in (WeightKind.ONE, WeightKind.ONE_MINUS_T, WeightKind.LOG_INV) or (
                w0.kind == WeightKind.STEP and float(w0.step.v.max()) <= 1.0
            )
            if bounded and source.domain.is_unit:
                # L1(w0) norm of h is at most its Ces_inf norm on [0, 1]
                t_c = 1.0
    if t_c is not None and math.isfinite(x0):
        return KTail(kind=TailKind.CONSTANT_BEYOND, t_c=max(t_c, 1e-300), value=x0)
    if math.isfinite(x0):
        return KTail(kind=TailKind.POWER_TAIL, t_c=t_max, value=x0, exponent=0.0)
    return KTail(kind=TailKind.POWER_TAIL, t_c=t_max, value=x1 * t_max, exponent=1.0)


def _kinks(source: StepFunction | Seq, couple: CoupleSpec) -> list[float]:
    """t-values where a closed-form K loses smoothness."""
    base = couple.resolved()
    if base.kind == CoupleKind.DISCRETE_L1_L1INVK:
        return [float(k) for k in range(1, source.N + 1)]
    if base.kind == CoupleKind.L1_LINF:
        return [float(b) for b in rearrange(source).x[1:]]
    pts = source.x[1:-1]
    pts = pts[pts > 0]
    if pts.size == 0:
        return []
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = base.w0(pts) / base.w1(pts)
    return sorted({float(r) for r in ratio if np.isfinite(r) and r > 0})


def closed_form_k(source: StepFunction | Seq, couple: CoupleSpec, ts: Iterable[float]) -> np.ndarray:
    """Exact K on many t for the couples with closed forms.

    Raises:
        DomainError: If the couple has no closed form or the input type does not match.
    """
    base = couple.resolved()
    if base.kind not in CLOSED_FORM_KINDS:
        raise DomainError(f"no closed form for {couple.label()}; use the LP method")
    if base.kind == CoupleKind.DISCRETE_L1_L1INVK:
        if not isinstance(source, Seq):
            raise DomainError("the discrete couple takes a sequence")
        return k_discrete_many(ts, source)
    if not isinstance(source, StepFunction):
        raise DomainError(f"{couple.label()} takes a step function")
    _check_couple_fit(source, couple)
    if base.kind == CoupleKind.L1_LINF:
        return k_l1_linf_many(ts, source)
    return k_weighted_l1_many(ts, source, base.w0, base.w1)


def evaluate_kcurve(kc: KCurve, ts: Iterable[float]) -> np.ndarray:
    """K at arbitrary t: exact for closed-form curves, log-linear interpolation otherwise.

    Beyond a constant tail the tail value is returned; below the sampled range
    LP curves are continued linearly through the origin.
    """
    ts = _as_ts(ts)
    _check_t(ts)
    if kc.method == KMethod.CLOSED_FORM and kc.source is not None:
        return closed_form_k(kc.source, kc.couple, ts)
    tg = np.asarray(kc.tgrid)
    kv = np.asarray(kc.kvals)
    inside = np.interp(np.log(ts), np.log(tg), kv)
    out = np.where(ts < tg[0], kv[0] * ts / tg[0], inside)
    if kc.tail.kind == TailKind.CONSTANT_BEYOND:
        out = np.where(ts >= kc.tail.t_c, kc.tail.value, out)
    return out


def check_kcurve(ts: np.ndarray, ks: np.ndarray, x0: float, x1: float, slack: float) -> None:
    """Monotonicity, concavity and norm-bound witnesses of sampled K values.

    Raises:
        InvariantError: If a witness fails by more than slack (relative).
    """
    scale = max(1.0, float(np.max(ks)))
    if np.any(ks < -slack * scale):
        raise InvariantError("K has a negative sample")
    if np.any(np.diff(ks) < -slack * scale):
        raise InvariantError("K is not nondecreasing in t")
    ratio = ks / ts
    if np.any(np.diff(ratio) > slack * np.maximum(1.0, ratio[:-1])):
        raise InvariantError("K(t)/t is not nonincreasing in t")
    bound = np.minimum(x0, ts * x1)
    if np.any(ks > bound + slack * np.maximum(1.0, bound)):
        raise InvariantError("K exceeds min(||f||_X0, t ||f||_X1)")


def build_kcurve(
    source: StepFunction | Seq,
    couple: CoupleSpec,
    grid: TGridSpec | None = None,
    method: KMethod = KMethod.CLOSED_FORM,
    mesh_n: int | None = None,
    tol: float | None = None,
    f_id: str = "",
    workers: int | None = None,
    extra_t: Iterable[float] = (),
) -> KCurve:
    """Sample t -> K(t, f) on a log grid and attach its tail descriptor.

    LP curves stop at the start of a constant tail, where K is known exactly.

    Raises:
        DomainError: If the method does not fit the couple.
        InvariantError: If the samples break monotonicity or concavity.
    """
    grid = grid or TGridSpec(
        t_min=settings.KCURVE_T_MIN,
        t_max=settings.KCURVE_T_MAX,
        points_per_decade=settings.KCURVE_POINTS_PER_DECADE,
    )
    base = couple.resolved()
    if method == KMethod.CLOSED_FORM and base.kind not in CLOSED_FORM_KINDS:
        raise DomainError(f"no closed form for {couple.label()}; use the LP method")
    if method == KMethod.LP and not isinstance(source, StepFunction):
        raise DomainError("the LP method takes a step function")
    if isinstance(source, StepFunction):
        _check_couple_fit(source, couple)

    x0, x1 = _x_norms(source, couple)
    tail = _tail(source, couple, x0, x1, grid.t_max)
    extra = list(extra_t)

    if method == KMethod.CLOSED_FORM:
        kinks = _kinks(source, couple)
        ts = np.asarray(grid.points(tuple(kinks + extra)))
        ks = closed_form_k(source, couple, ts)
        check_kcurve(ts, ks, x0, x1, 1e-9)
        return KCurve(
            couple=couple, f_id=f_id, tgrid=tuple(ts), kvals=tuple(ks), tail=tail,
            method=method, kinks=tuple(kinks), x0_norm=x0, x1_norm=x1, source=source,
        )

    mesh_n = mesh_n or settings.MESH_START
    tol = settings.LP_TOL if tol is None else tol
    pts = grid.points(tuple(extra))
    if tail.kind == TailKind.CONSTANT_BEYOND:
        pts = [t for t in pts if t < tail.t_c] + [tail.t_c]
        if len(pts) < 2:
            pts = [0.5 * tail.t_c, tail.t_c]
    ts = np.asarray(pts)
    with ThreadPoolExecutor(max_workers=workers or settings.WORKERS) as pool:
        decomps = list(pool.map(lambda t: k_variational(float(t), source, couple, mesh_n, tol), ts))
    ks = np.array([d.value for d in decomps])
    logger.debug(f"LP curve {couple.label()} over {ts.size} points, mesh {mesh_n}")
    check_kcurve(ts, ks, x0, x1, 1e-6)
    return KCurve(
        couple=couple, f_id=f_id, tgrid=tuple(ts), kvals=tuple(ks), tail=tail,
        method=method, mesh_n=mesh_n, tol=tol, x0_norm=x0, x1_norm=x1, source=source,
    )
