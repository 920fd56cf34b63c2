"""Request-level operations shared by the command line and the HTTP API."""

from pydantic import ValidationError

from src.core.errors import DomainError
from src.core.interp import lower_theta_p_norm, thm1_identity_norm
from src.core.kfun import build_kcurve, theorem3_bounds
from src.core.norms import ces_log_norm, ces_norm, cop_norm, l1_norm, linf_norm, lp_weighted
from src.settings import custom_logger
from src.structs import (
    CoupleKind,
    CoupleRequest,
    CoupleSpec,
    FunctionPayload,
    KCurveRow,
    KMethod,
    NormKind,
    QuadConfig,
    Report,
    Seq,
    StepFunction,
    SuiteConfig,
    SuiteName,
    TGridSpec,
    VerifyRequest,
    Weight,
)
from src.workflows.suites import run_suite

# Create logger
logger = custom_logger("Query Service")


def function_from_payload(payload: FunctionPayload) -> StepFunction:
    """Raises DomainError for malformed meshes or values."""
    try:
        return StepFunction.from_arrays(payload.breaks, payload.vals, payload.domain)
    except ValidationError as e:
        raise DomainError(f"invalid step function: {e.errors()[0]['msg']}") from e


def couple_from_request(request: CoupleRequest) -> CoupleSpec:
    """Raises DomainError when the couple kind lacks its weights or support."""
    try:
        return CoupleSpec(
            kind=request.kind,
            w0=Weight.named(request.w0) if request.w0 else None,
            w1=Weight.named(request.w1) if request.w1 else None,
            base=couple_from_request(request.base) if request.base else None,
            support=request.support,
        )
    except ValidationError as e:
        raise DomainError(f"invalid couple: {e.errors()[0]['msg']}") from e


def compute_norm(f: StepFunction, norm: NormKind, p: float, weight: Weight, q: QuadConfig | None = None) -> float:
    """One named norm of f."""
    q = q or QuadConfig.from_settings()
    match norm:
        case NormKind.L1:
            return l1_norm(f)
        case NormKind.LINF:
            return linf_norm(f)
        case NormKind.LP:
            return lp_weighted(f, p, weight, q)
        case NormKind.CES:
            return ces_norm(f, p, q)
        case NormKind.COP:
            return cop_norm(f, p, q)
        case NormKind.CES_LOG:
            return ces_log_norm(f, p, q)
        case NormKind.IDENTITY:
            return thm1_identity_norm(f, p, q)
        case NormKind.LOWER_INTERP:
            return lower_theta_p_norm(f, p, q)


def kcurve_rows(
    source: StepFunction | Seq,
    couple: CoupleSpec,
    grid: TGridSpec,
    method: KMethod = KMethod.CLOSED_FORM,
    mesh_n: int | None = None,
    q: QuadConfig | None = None,
) -> list[KCurveRow]:
    """Sampled K-curve; rows of the (Ces_1, Ces_inf) couple below t = 1 carry the two-band bounds."""
    q = q or QuadConfig.from_settings()
    kc = build_kcurve(source, couple, grid, method, mesh_n=mesh_n)
    banded = couple.kind == CoupleKind.CES1_CESINF_UNIT and isinstance(source, StepFunction)
    rows = []
    for t, k in zip(kc.tgrid, kc.kvals):
        lower = upper = None
        if banded and t < 1.0:
            lower, upper = theorem3_bounds(t, source, q)
        rows.append(KCurveRow(t=t, K=k, lower_bound=lower, upper_bound=upper))
    logger.debug(f"{len(rows)} K-curve rows for {couple.label()} ({method.value})")
    return rows


def suite_config_from_request(request: VerifyRequest) -> SuiteConfig:
    """Raises DomainError for unknown suites or invalid parameters."""
    try:
        return SuiteConfig(
            suite=SuiteName(request.suite),
            corpus=request.corpus,
            p_values=request.p_values,
            mesh_n=request.mesh_n,
        )
    except ValueError as e:
        raise DomainError(f"invalid verify request: {e}") from e


def verify(request: VerifyRequest) -> Report:
    return run_suite(suite_config_from_request(request))
