"""Real-interpolation norms from sampled or closed-form K-curves."""

import math

import numpy as np
from scipy.optimize import minimize_scalar

from src.core.errors import DivergenceError, DomainError
from src.core.kfun import ces_lower_bounds, evaluate_kcurve
from src.core.norms import ces_norm, l1_norm, lp_weighted
from src.core.operators import cesaro, copson
from src.core.quadrature import gauss_laguerre, panel_nodes
from src.settings import custom_logger
from src.structs.couples import KCurve, KMethod, KTail, TailKind
from src.structs.domain import StepFunction
from src.structs.weights import QuadConfig, Weight

# Create logger
logger = custom_logger("Interpolation Norms")

# Log-length of a body panel (in ln t)
PANEL_LOG_LENGTH = 1.0
# The head starts this factor below the first kink or sample
HEAD_FACTOR = 1e-3
# Closed-form bodies are extended up to this t while a power tail stays loose
MAX_T_EXTENSION = 1e12
# Samples per decade when searching the sup of t^-theta K(t)
SUP_POINTS_PER_DECADE = 64
# Lower-bound curve for (Ces_1, Ces_inf): range and density of the step sum
LOWER_T_MIN = 1e-6
LOWER_POINTS_PER_DECADE = 100


def _check_params(theta: float, p: float) -> None:
    if not 0.0 <= theta <= 1.0:
        raise DomainError(f"need 0 <= theta <= 1, got theta={theta}")
    if not 1.0 <= p < math.inf:
        raise DomainError(f"need 1 <= p < inf, got p={p}")


def _exact(kc: KCurve) -> bool:
    return kc.method == KMethod.CLOSED_FORM and kc.source is not None


def _log_body(kc: KCurve, a: float, b: float, theta: float, p: float, order: int) -> float:
    """Gauss-Legendre in u = ln t of (t^-theta K(t))^p over [a, b], split at kinks."""
    if b <= a:
        return 0.0
    cuts = [math.log(a)] + [math.log(k) for k in kc.kinks if a < k < b] + [math.log(b)]
    los, his = [], []
    for u0, u1 in zip(cuts[:-1], cuts[1:]):
        n = max(1, math.ceil((u1 - u0) / PANEL_LOG_LENGTH))
        edges = np.linspace(u0, u1, n + 1)
        los.append(edges[:-1])
        his.append(edges[1:])
    nodes, weights = panel_nodes(np.concatenate(los), np.concatenate(his), order)
    ks = evaluate_kcurve(kc, np.exp(nodes))
    return float(np.sum(weights * (np.exp(-theta * nodes) * ks) ** p))


def _exact_head(kc: KCurve, t_lo: float, theta: float, p: float, order: int) -> float:
    """Integral over (0, t_lo] through t = t_lo exp(-v / lam) and Gauss-Laguerre."""
    lam = (1.0 - theta) * p
    v, w = gauss_laguerre(order)
    ts = np.maximum(t_lo * np.exp(-v / lam), 1e-300)
    ks = evaluate_kcurve(kc, ts)
    return float(t_lo**lam / lam * np.sum(w * (ks / ts) ** p))


def _tail_bracket(tail: KTail, k_at_tc: float, theta: float, p: float) -> tuple[float, float]:
    """Bracket for the integral of (t^-theta K)^p dt/t over [t_c, inf)."""
    if tail.value == 0.0:
        return 0.0, 0.0
    if theta <= tail.exponent:
        raise DivergenceError(f"theta={theta} does not beat the tail growth t^{tail.exponent}")
    base = tail.t_c ** (-theta * p)
    if tail.kind == TailKind.CONSTANT_BEYOND:
        exact = tail.value**p * base / (theta * p)
        return exact, exact
    return k_at_tc**p * base / (theta * p), tail.value**p * base / ((theta - tail.exponent) * p)


def _closed_form_bracket(kc: KCurve, theta: float, p: float, q: QuadConfig) -> tuple[float, float]:
    first = min([kc.tgrid[0], *kc.kinks])
    t_lo = first * HEAD_FACTOR
    t_hi = kc.tail.t_c
    lam = (1.0 - theta) * p
    orders = (q.gauss_order, max(2, q.gauss_order // 2))
    bodies = [_log_body(kc, t_lo, t_hi, theta, p, n) for n in orders]
    heads = [_exact_head(kc, t_lo, theta, p, n) for n in (48, 32)] if lam > 0 else [math.inf] * 2
    if not math.isfinite(heads[0]):
        raise DivergenceError("theta = 1 makes the head diverge")
    body, head = bodies[0], heads[0]
    err = abs(bodies[0] - bodies[1]) + abs(heads[0] - heads[1])

    tail = kc.tail
    if tail.kind == TailKind.POWER_TAIL and tail.exponent == 0.0:
        # push the body out while the tail bracket is loose
        while True:
            k_hi = float(evaluate_kcurve(kc, [t_hi])[0])
            lo, hi = _tail_bracket(tail.model_copy(update={"t_c": t_hi}), k_hi, theta, p)
            if hi - lo <= q.rel_tol * (body + head) or t_hi >= MAX_T_EXTENSION:
                break
            body += _log_body(kc, t_hi, 10.0 * t_hi, theta, p, orders[0])
            t_hi *= 10.0
    else:
        k_hi = float(evaluate_kcurve(kc, [t_hi])[0])
        lo, hi = _tail_bracket(tail, k_hi, theta, p)
    core = body + head
    return max(core - err, 0.0) + lo, core + err + hi


def _sampled_bracket(kc: KCurve, theta: float, p: float) -> tuple[float, float]:
    ts = np.asarray(kc.tgrid)
    ks = np.asarray(kc.kvals)
    u = np.log(ts)
    phi = (np.exp(-theta * u) * ks) ** p
    fine = float(np.trapezoid(phi, u))
    coarse_idx = np.unique(np.append(np.arange(0, ts.size, 2), ts.size - 1))
    coarse = float(np.trapezoid(phi[coarse_idx], u[coarse_idx]))
    # Richardson estimate of the trapezoid error
    err = abs(fine - coarse) / 3.0
    lam = (1.0 - theta) * p
    if lam <= 0:
        raise DivergenceError("theta = 1 makes the head diverge")
    t_lo = float(ts[0])
    scale = t_lo**lam / lam
    head_lo = (ks[0] / t_lo) ** p * scale
    head_hi = kc.x1_norm**p * scale if math.isfinite(kc.x1_norm) else math.inf
    tail_lo, tail_hi = _tail_bracket(kc.tail, float(ks[-1]), theta, p)
    return max(fine - err, 0.0) + head_lo + tail_lo, fine + err + head_hi + tail_hi


def theta_p_bracket(kc: KCurve, theta: float, p: float, q: QuadConfig | None = None) -> tuple[float, float]:
    """Enclosure (lower, upper) of ||f||_{theta,p} = (int (t^-theta K)^p dt/t)^(1/p).

    Closed-form curves are integrated in ln t with Gauss-Legendre between
    kinks, a Gauss-Laguerre head and an analytic tail. Sampled (LP) curves use
    the log-trapezoid with a Richardson error estimate, the head bracket
    K(t_lo)/t_lo <= K(t)/t <= ||f||_X1 and the tail descriptor.

    Raises:
        DomainError: If theta or p is out of range.
        DivergenceError: If the integral diverges at 0 or infinity.
    """
    _check_params(theta, p)
    q = q or QuadConfig()
    if not any(kc.kvals) and kc.tail.value == 0.0:
        return 0.0, 0.0
    if theta == 0.0:
        raise DivergenceError("theta = 0 makes the tail diverge")
    if _exact(kc):
        lo, hi = _closed_form_bracket(kc, theta, p, q)
    else:
        lo, hi = _sampled_bracket(kc, theta, p)
    logger.debug(f"theta={theta} p={p} {kc.couple.label()}: bracket [{lo:.12g}, {hi:.12g}]")
    return lo ** (1.0 / p), hi ** (1.0 / p)


def theta_p_norm(kc: KCurve, theta: float, p: float, q: QuadConfig | None = None) -> float:
    """Midpoint of theta_p_bracket; warns when the bracket is wider than rel_tol."""
    q = q or QuadConfig()
    lo, hi = theta_p_bracket(kc, theta, p, q)
    mid = 0.5 * (lo + hi)
    if hi - lo > q.rel_tol * max(mid, np.finfo(float).tiny):
        logger.warning(f"(theta={theta}, p={p}) bracket width {(hi - lo) / mid:.3e} relative")
    return mid


def theta_inf_norm(kc: KCurve, theta: float) -> float:
    """sup over t > 0 of t^-theta K(t), with the head and tail handled analytically.

    theta = 1 picks up the limit ||f||_X1 of K(t)/t at 0; theta = 0 the limit
    ||f||_X0 of K at infinity.
    """
    if not 0.0 <= theta <= 1.0:
        raise DomainError(f"need 0 <= theta <= 1, got theta={theta}")
    if theta == 1.0:
        return kc.x1_norm
    if theta == 0.0:
        return max(kc.tail.value if kc.tail.exponent == 0.0 else math.inf, max(kc.kvals))
    best = float(np.max(np.asarray(kc.kvals) * np.asarray(kc.tgrid) ** (-theta)))
    if _exact(kc):
        t_lo, t_hi = kc.tgrid[0] * HEAD_FACTOR, kc.tail.t_c
        n = max(2, math.ceil(math.log10(t_hi / t_lo) * SUP_POINTS_PER_DECADE) + 1)
        ts = np.unique(np.concatenate((np.geomspace(t_lo, t_hi, n), [k for k in kc.kinks if t_lo < k < t_hi])))
        vals = evaluate_kcurve(kc, ts) * ts ** (-theta)
        i = int(np.argmax(vals))
        lo, hi = math.log(ts[max(i - 1, 0)]), math.log(ts[min(i + 1, ts.size - 1)])
        if hi > lo:
            res = minimize_scalar(
                lambda u: -float(evaluate_kcurve(kc, [math.exp(u)])[0]) * math.exp(-theta * u),
                bounds=(lo, hi),
                method="bounded",
                options={"xatol": 1e-12},
            )
            best = max(best, -float(res.fun))
        best = max(best, float(vals[i]))
    tail = kc.tail
    edge = tail.value * tail.t_c ** (-theta)
    if tail.kind == TailKind.CONSTANT_BEYOND:
        best = max(best, edge)
    elif edge > best * (1.0 + 1e-9):
        logger.warning(f"power tail may exceed the sampled sup: {edge:.6g} > {best:.6g}")
    return best


def thm1_identity_norm(f: StepFunction, p: float, q: QuadConfig | None = None) -> float:
    """(1 - 1/p, p)-norm over (L1, L1(1/t)) through the Cesaro-plus-Copson identity.

    On the half-line the value is ||Cf + C*f||_p; on [0, 1] the end-point term
    ||f||_1^p / (p - 1) is added under the p-th root.

    Raises:
        DivergenceError: If p = 1 and f != 0.
    """
    q = q or QuadConfig()
    if not 1.0 <= p < math.inf:
        raise DomainError(f"need 1 <= p < inf, got p={p}")
    if f.is_zero():
        return 0.0
    if p == 1.0:
        raise DivergenceError("the (0, 1)-norm is infinite for f != 0")
    total = cesaro(f) + copson(f)
    body = lp_weighted(total, p, Weight(), q)
    if not f.domain.is_unit:
        return body
    return (body**p + l1_norm(f) ** p / (p - 1.0)) ** (1.0 / p)


def lower_theta_p_norm(f: StepFunction, p: float, q: QuadConfig | None = None) -> float:
    """Certified lower bound for the (1 - 1/p, p)-norm over (Ces_1, Ces_inf) on [0, 1].

    K(t) >= L(t_i) on [t_i, t_{i+1}] for the lower-bound record L, so the
    left step sum of t^(-theta p) L^p over a log grid stays below the true
    integral; beyond t = 1 K equals ||f||_Ces1 exactly.
    """
    q = q or QuadConfig()
    if not 1.0 < p < math.inf:
        raise DomainError(f"need 1 < p < inf, got p={p}")
    theta = 1.0 - 1.0 / p
    n = math.ceil(math.log10(1.0 / LOWER_T_MIN) * LOWER_POINTS_PER_DECADE) + 1
    ts = np.geomspace(LOWER_T_MIN, 1.0, n)
    lows = np.array([ces_lower_bounds(float(t), f, q).combined for t in ts[:-1]])
    body = float(np.sum(lows**p * ts[1:] ** (-theta * p) * np.diff(np.log(ts))))
    tail = ces_norm(f, 1.0, q) ** p / (theta * p)
    return (body + tail) ** (1.0 / p)
