"""Healthcheck endpoint reporting the numerical backends in use."""

import numpy as np
import scipy
from fastapi import APIRouter

from src.settings import custom_logger, settings

# Create logger
logger = custom_logger("Health API Router")

# Create router
router = APIRouter(prefix="/health", tags=["Health"])


# Define the endpoints
@router.get("")
async def health():
    """Report that the service is up, with library versions and LP settings."""
    return {
        "status": "ok",
        "numpy": np.__version__,
        "scipy": scipy.__version__,
        "lp_tol": settings.LP_TOL,
        "mesh_start": settings.MESH_START,
    }
