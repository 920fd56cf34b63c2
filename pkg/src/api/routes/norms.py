"""Norms of a posted step function."""

from fastapi import APIRouter

from src.api.errors import to_http
from src.core.errors import CesaroInterpError
from src.settings import custom_logger
from src.structs import NormRequest, NormResponse, Weight
from src.workflows.queries import compute_norm, function_from_payload

# Create logger
logger = custom_logger("Norms API Router")

# Create router
router = APIRouter(prefix="/norms", tags=["Norms"])


@router.post("", response_model=NormResponse)
def norm(request: NormRequest):
    """Compute one named norm of the posted function."""
    logger.debug(f"norm request: {request.norm.value} p={request.p}")
    try:
        f = function_from_payload(request.function)
        value = compute_norm(f, request.norm, request.p, Weight.named(request.weight))
    except CesaroInterpError as e:
        logger.error(f"norm request failed: {e}")
        raise to_http(e) from e
    return NormResponse(norm=request.norm, p=request.p, value=value)
