"""Aggregate and expose API routers."""

from fastapi import APIRouter

from src.api.routes.health import router as health_router
from src.api.routes.kcurve import router as kcurve_router
from src.api.routes.norms import router as norms_router
from src.api.routes.verify import router as verify_router

# Create the main router
router = APIRouter()

# Include all routers
router.include_router(health_router)
router.include_router(norms_router)
router.include_router(kcurve_router)
router.include_router(verify_router)
