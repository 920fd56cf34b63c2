"""Piecewise Gauss-Legendre quadrature graded toward integrable end singularities."""

from functools import lru_cache
from typing import Callable

import numpy as np

from src.structs.weights import QuadConfig

Integrand = Callable[[np.ndarray], np.ndarray]

# Panels away from 0 keep hi/lo <= 2, so log and 1/x terms stay well resolved
PANEL_RATIO = 2.0
LAGUERRE_ORDER = 48


@lru_cache(maxsize=16)
def gauss_legendre(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights on [-1, 1]."""
    return np.polynomial.legendre.leggauss(order)


@lru_cache(maxsize=4)
def gauss_laguerre(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights for the weight exp(-u) on [0, inf)."""
    return np.polynomial.laguerre.laggauss(order)


def panel_nodes(lo: np.ndarray, hi: np.ndarray, order: int) -> tuple[np.ndarray, np.ndarray]:
    """Flattened nodes and weights of Gauss-Legendre on every panel [lo_i, hi_i]."""
    x, w = gauss_legendre(order)
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    nodes = mid[:, None] + half[:, None] * x[None, :]
    weights = half[:, None] * w[None, :]
    return nodes.ravel(), weights.ravel()


def graded_panels(a: float, b: float, levels: int) -> tuple[np.ndarray, np.ndarray, float]:
    """Panels covering [a, b] graded geometrically toward 0.

    Returns panel ends and the width eps of the uncovered end cap [0, eps]
    (zero when a > 0).
    """
    if a > 0:
        n = max(1, int(np.ceil(np.log(b / a) / np.log(PANEL_RATIO))))
        pts = a * (b / a) ** (np.arange(n + 1) / n)
        pts[-1] = b
        return pts[:-1], pts[1:], 0.0
    pts = b * 0.5 ** np.arange(levels + 1)
    return pts[1:], pts[:-1], float(pts[-1])


def end_cap(func: Integrand, eps: float) -> float:
    """Integral over [0, eps] through x = eps * exp(-u) and Gauss-Laguerre."""
    u, w = gauss_laguerre(LAGUERRE_ORDER)
    return float(eps * np.sum(w * func(eps * np.exp(-u))))


def integrate(func: Integrand, a: float, b: float, q: QuadConfig) -> float:
    """Integral of a vectorised func over [a, b], 0 <= a < b.

    The integrand may carry integrable log-type or power singularities at 0;
    it must be smooth on (a, b].
    """
    if b <= a:
        return 0.0
    lo, hi, eps = graded_panels(a, b, q.geometric_refine_levels)
    nodes, weights = panel_nodes(lo, hi, q.gauss_order)
    total = float(np.sum(weights * func(nodes)))
    if eps > 0:
        total += end_cap(func, eps)
    return total


def integrate_pieces(func: Integrand, breaks: np.ndarray, q: QuadConfig) -> float:
    """Sum of integrate() over consecutive pieces of a mesh."""
    los, his = [], []
    cap = 0.0
    for a, b in zip(breaks[:-1], breaks[1:]):
        lo, hi, eps = graded_panels(float(a), float(b), q.geometric_refine_levels)
        los.append(lo)
        his.append(hi)
        if eps > 0:
            cap += end_cap(func, eps)
    nodes, weights = panel_nodes(np.concatenate(los), np.concatenate(his), q.gauss_order)
    return float(np.sum(weights * func(nodes))) + cap


def integrate_toward_one(func_of_gap: Integrand, a: float, q: QuadConfig) -> float:
    """Integral over [a, 1] of an integrand singular (integrably) at 1.

    The integrand is passed as a function of the gap y = 1 - x so that values
    near the singularity are not lost to cancellation.
    """
    return integrate(func_of_gap, 0.0, 1.0 - a, q)
