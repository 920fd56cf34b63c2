"""Rearrangement, mesh plumbing and the tau1 / tau2 split geometry."""

import math
from functools import lru_cache

import numpy as np
from scipy.optimize import brentq

from src.core.errors import DomainError
from src.settings import custom_logger
from src.structs.domain import StepFunction, TauPair

# Create logger
logger = custom_logger("Function Core")

BISECTION_STEPS = 50


def tau1(t: float) -> float:
    return t / math.log(math.e / t)


def tau2(t: float) -> float:
    return math.exp(-t)


def tau_pair(t: float) -> TauPair:
    """Return (tau1(t), tau2(t)) = (t / ln(e/t), exp(-t)) for 0 < t <= 1.

    Raises:
        DomainError: If t is outside (0, 1].
    """
    if not 0.0 < t <= 1.0:
        raise DomainError(f"tau functions are defined on (0, 1], got t={t}")
    return TauPair(t=t, tau1=tau1(t), tau2=tau2(t))


def _bisect(func, lo: float, hi: float) -> float:
    """Root of a sign-changing function on [lo, hi] by plain bisection."""
    f_lo = func(lo)
    for _ in range(BISECTION_STEPS):
        mid = 0.5 * (lo + hi)
        f_mid = func(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid < 0) == (f_lo < 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@lru_cache(maxsize=1)
def t_zero() -> float:
    """Unique t0 in (0, 1) with tau1(t0) = tau2(t0); tau1 < tau2 exactly on (0, t0)."""
    root = _bisect(lambda t: tau1(t) - tau2(t), 1e-6, 1.0)
    logger.debug(f"t0 = {root!r}")
    return root


@lru_cache(maxsize=1)
def t_one() -> float:
    """Root t1 in (0, t0) of tau1(t) = tau2(t) / e."""
    return _bisect(lambda t: tau1(t) - tau2(t) / math.e, 1e-6, t_zero())


def tau1_inverse(s: float) -> float:
    """The t in (0, 1] with tau1(t) = s, for 0 < s <= 1 (tau1 is increasing)."""
    if not 0.0 < s <= 1.0:
        raise DomainError(f"tau1 maps (0, 1] onto (0, 1], got s={s}")
    if s == 1.0:
        return 1.0
    return brentq(lambda t: tau1(t) - s, s, 1.0, xtol=1e-15, rtol=4 * np.finfo(float).eps)


def rearrange(f: StepFunction) -> StepFunction:
    """Non-increasing rearrangement of a step function.

    Cells are sorted by value (stable, descending) and laid end to end, so the
    result is equimeasurable with f and occupies the same length.
    """
    order = np.argsort(-f.v, kind="stable")
    lengths = f.lengths[order]
    breaks = np.concatenate(([0.0], np.cumsum(lengths)))
    breaks[-1] = f.end
    return StepFunction.from_arrays(breaks, f.v[order], f.domain)


def common_refinement(f: StepFunction, g: StepFunction) -> tuple[StepFunction, StepFunction]:
    """Both functions on the merged breakpoint mesh, pointwise unchanged.

    Raises:
        DomainError: If f and g live on different domains.
    """
    if f.domain != g.domain:
        raise DomainError(f"domain mismatch: {f.domain.label()} vs {g.domain.label()}")
    end = max(f.end, g.end)
    f_ext = _extend_to(f, end)
    g_ext = _extend_to(g, end)
    return f_ext.with_breaks(g_ext.breaks), g_ext.with_breaks(f_ext.breaks)


def _extend_to(f: StepFunction, end: float) -> StepFunction:
    """Half-line function padded with a zero cell up to `end`."""
    if end <= f.end:
        return f
    return StepFunction.from_arrays(
        np.append(f.x, end), np.append(f.v, 0.0), f.domain
    )


def is_nonincreasing(f: StepFunction) -> bool:
    return f.is_nonincreasing()
