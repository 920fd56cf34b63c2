"""Run a verification suite and return its report."""

from fastapi import APIRouter

from src.api.errors import to_http
from src.core.errors import CesaroInterpError
from src.settings import custom_logger
from src.structs import Report, VerifyRequest
from src.workflows.queries import verify

# Create logger
logger = custom_logger("Verify API Router")

# Create router
router = APIRouter(prefix="/verify", tags=["Verification"])


@router.post("", response_model=Report)
def run_verify(request: VerifyRequest):
    """Run the named suite; a failing suite still returns 200 with passed = false."""
    logger.info(f"verify request for suite {request.suite}")
    try:
        return verify(request)
    except CesaroInterpError as e:
        logger.error(f"verify request failed: {e}")
        raise to_http(e) from e
