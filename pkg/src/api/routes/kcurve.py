"""Sampled K-functional curves."""

from fastapi import APIRouter

from src.api.errors import to_http
from src.core.errors import CesaroInterpError
from src.settings import custom_logger
from src.structs import KCurveRequest, KCurveResponse, TGridSpec
from src.workflows.queries import couple_from_request, function_from_payload, kcurve_rows

# Create logger
logger = custom_logger("K-curve API Router")

# Create router
router = APIRouter(prefix="/kcurve", tags=["K-functional"])


@router.post("", response_model=KCurveResponse)
def kcurve(request: KCurveRequest):
    """Sample t -> K(t, f) for the posted function and couple."""
    try:
        f = function_from_payload(request.function)
        couple = couple_from_request(request.couple)
        grid = TGridSpec(t_min=request.t_min, t_max=request.t_max, points_per_decade=request.points_per_decade)
        rows = kcurve_rows(f, couple, grid, request.method, request.mesh_n)
    except (CesaroInterpError, ValueError) as e:
        logger.error(f"kcurve request failed: {e}")
        raise to_http(e) from e
    return KCurveResponse(couple=couple.label(), method=request.method, rows=rows)
