"""FastAPI application factory and setup."""

import uvicorn
from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from src.api.routes import router
from src.settings import custom_logger

# Create the logger
logger = custom_logger(__name__)


# Create the app
def create_app() -> FastAPI:
    """Create and configure the FastAPI application."""
    logger.info("Creating FastAPI app")
    app = FastAPI(
        title="Cesaro Interp",
        description="Cesaro/Copson norms, K-functionals and interpolation norms",
        version="0.1.0",
        docs_url="/docs",
    )

    # Configure CORS
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_credentials=True,
        allow_methods=["*"],
        allow_headers=["*"],
    )

    # Include the routers
    logger.info("Including routers")
    app.include_router(router)
    return app


def main(host: str = "0.0.0.0", port: int = 8000, reload: bool = False):
    """Run the FastAPI application."""
    uvicorn.run(
        "src.api.main:create_app",
        factory=True,
        host=host,
        port=port,
        log_level="info",
        reload=reload,
    )


if __name__ == "__main__":
    main()
