"""Sparse linear programs for K(t, f) over step decompositions on a fixed mesh."""

import math
from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy import sparse
from scipy.optimize import linprog

from src.core.errors import SolverError
from src.core.norms import ces_norm, linf_norm, lp_weighted
from src.settings import custom_logger
from src.structs.couples import CoupleKind, CoupleSpec, Decomposition
from src.structs.domain import StepFunction
from src.structs.weights import QuadConfig, Weight, WeightKind

# Create logger
logger = custom_logger("Linear Programs")

# HiGHS refuses feasibility tolerances below this
HIGHS_MIN_TOL = 1e-10


class NormShape(str, Enum):
    LINEAR = "linear"
    CES_INF = "ces_inf"
    LINF = "linf"


class NormModel(BaseModel):
    """How a norm acts on nonnegative step functions over a fixed mesh.

    LINEAR norms are sums of cell masses times the cell average of a weight;
    CES_INF and LINF are maxima of finitely many linear functionals.
    """

    model_config = ConfigDict(frozen=True)

    shape: NormShape
    weight: Weight | None = None


def norm_models(couple: CoupleSpec) -> tuple[NormModel, NormModel]:
    """Norm models of (X0, X1) for the couples the LP supports.

    Raises:
        SolverError: For the discrete couple, which has no step-function LP.
    """
    couple = couple.resolved()
    ces_inf = NormModel(shape=NormShape.CES_INF)
    match couple.kind:
        case CoupleKind.WEIGHTED_L1:
            return (
                NormModel(shape=NormShape.LINEAR, weight=couple.w0),
                NormModel(shape=NormShape.LINEAR, weight=couple.w1),
            )
        case CoupleKind.L1_LINF:
            return NormModel(shape=NormShape.LINEAR, weight=Weight()), NormModel(shape=NormShape.LINF)
        case CoupleKind.CES1_CESINF_UNIT:
            return NormModel(shape=NormShape.LINEAR, weight=Weight.named(WeightKind.LOG_INV)), ces_inf
        case CoupleKind.L1W_CESINF:
            return NormModel(shape=NormShape.LINEAR, weight=couple.w0), ces_inf
        case CoupleKind.L1_CESINF_HALFLINE:
            return NormModel(shape=NormShape.LINEAR, weight=Weight()), ces_inf
        case _:
            raise SolverError(f"no linear program for couple {couple.label()}")


def model_norm(g: StepFunction, model: NormModel) -> float:
    """Exact value of a modelled norm on a step function (inf when divergent)."""
    match model.shape:
        case NormShape.LINEAR:
            cell = model.weight.integral(g.x[:-1], g.x[1:])
            active = g.v > 0
            if np.any(active & np.isinf(cell)):
                return math.inf
            return lp_weighted(g, 1.0, model.weight, QuadConfig())
        case NormShape.CES_INF:
            return ces_norm(g, math.inf, QuadConfig())
        case NormShape.LINF:
            return linf_norm(g)


def _cell_averages(f: StepFunction, model: NormModel) -> np.ndarray:
    with np.errstate(divide="ignore", invalid="ignore"):
        return model.weight.integral(f.x[:-1], f.x[1:]) / f.lengths


def solve_decomposition(t: float, f: StepFunction, couple: CoupleSpec, tol: float) -> Decomposition:
    """Minimise ||g||_X0 + t ||f - g||_X1 over step g with 0 <= g <= f on f's mesh.

    Unknowns are the running masses G_j of g (and an epigraph variable z for a
    max-type X1), so every constraint row has at most three entries. The
    returned value is recomputed exactly from the clipped witness and is a
    certified upper bound on K(t, f).

    Raises:
        SolverError: If HiGHS does not report an optimum or the couple is unsupported.
    """
    x0, x1 = norm_models(couple)
    n = f.n_cells
    x, lengths, masses = f.x, f.lengths, f.masses
    M = f.cumulative()[1:]
    active = masses > 0

    a = _cell_averages(f, x0)
    lo = np.zeros(n)
    hi = np.where(active, masses, 0.0)
    # g vanishes where the X0 weight is not integrable
    hi = np.where(np.isinf(a), 0.0, hi)
    kappa = np.where(np.isinf(a), 0.0, a)
    const = 0.0
    max_type = x1.shape != NormShape.LINEAR
    if not max_type:
        b = _cell_averages(f, x1)
        # h vanishes where the X1 weight is not integrable
        lo = np.where(np.isinf(b) & active, masses, lo)
        b_fin = np.where(np.isinf(b), 0.0, b)
        kappa = kappa - t * b_fin
        const = t * float(np.sum(np.where(active, b_fin * masses, 0.0)))

    # objective in terms of G: c_j = G_j - G_{j-1}
    c_G = kappa - np.concatenate((kappa[1:], [0.0]))
    D = sparse.eye(n, format="csr") - sparse.eye(n, k=-1, format="csr")
    blocks = [D, -D]
    rhs = [hi, -lo]
    n_vars = n + (1 if max_type else 0)
    if max_type:
        c_G = np.append(c_G, t)
        blocks = [sparse.hstack([blk, sparse.csr_matrix((n, 1))]) for blk in blocks]
        if x1.shape == NormShape.CES_INF:
            # (M_j - G_j) / x_j <= z at every right breakpoint
            row = sparse.hstack([-sparse.eye(n), sparse.csr_matrix(-x[1:, None])])
            rhs.append(-M)
        else:
            # (m_j - c_j) / l_j <= z on every cell
            row = sparse.hstack([-sparse.diags(1.0 / lengths) @ D, sparse.csr_matrix(-np.ones((n, 1)))])
            rhs.append(-f.v)
        blocks.append(row)
    A_ub = sparse.vstack(blocks, format="csr")
    b_ub = np.concatenate(rhs)
    bounds = [(0.0, float(m)) for m in M] + ([(0.0, None)] if max_type else [])

    feas = max(min(tol, 1e-7), HIGHS_MIN_TOL)
    logger.debug(f"LP t={t:.6g} {couple.label()}: {n_vars} variables, {A_ub.shape[0]} rows")
    res = linprog(
        c_G,
        A_ub=A_ub,
        b_ub=b_ub,
        bounds=bounds,
        method="highs",
        options={"primal_feasibility_tolerance": feas, "dual_feasibility_tolerance": feas},
    )
    if res.status != 0:
        logger.error(f"HiGHS failed at t={t}: {res.message}")
        raise SolverError(f"linear program failed at t={t}: {res.message}")

    G = res.x[:n]
    cells = np.diff(np.concatenate(([0.0], G)))
    residual = float(np.max(np.maximum(cells - hi, 0.0) + np.maximum(lo - cells, 0.0)))
    cells = np.clip(cells, lo, hi)
    g_vals = np.where(active, cells / lengths, 0.0)
    g_vals = np.minimum(np.maximum(g_vals, 0.0), f.v)
    g = StepFunction.from_arrays(x, g_vals, f.domain)
    h = StepFunction.from_arrays(x, np.maximum(f.v - g_vals, 0.0), f.domain)

    value = model_norm(g, x0) + t * model_norm(h, x1)
    lp_value = float(res.fun) + const
    if not math.isfinite(value):
        raise SolverError(f"witness at t={t} has an infinite norm")
    gap = abs(value - lp_value)
    if gap > 1e3 * max(tol, feas) * max(1.0, value):
        logger.warning(f"certificate gap {gap:.3e} at t={t} (residual {residual:.3e})")
    return Decomposition(t=t, g=g, h=h, value=value, lp_value=lp_value, mesh_n=n)
