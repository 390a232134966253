"""
Unitary Cayley - FastAPI Application Entry Point.

HTTP surface over the same services as the command line: spectra,
polynomials, determinants, property checks and the adjacency-algebra basis
of unitary Cayley graphs X_n.

Tech Stack:
- FastAPI + pydantic + sympy + numpy + networkx
"""

from collections.abc import AsyncIterator
from contextlib import asynccontextmanager

from fastapi import FastAPI

from src.api.routes import coherent, spectra, system
from src.config import settings
from src.utils.logger import logger, setup_logging


@asynccontextmanager
async def lifespan(app: FastAPI) -> AsyncIterator[None]:
    """Application lifespan events (logging only; the service is stateless)."""
    logger.info(
        "application_starting",
        environment=settings.environment,
        debug=settings.debug,
    )
    yield
    logger.info("application_stopped")


# ============================================================================
# FastAPI Application
# ============================================================================

app = FastAPI(
    title="Unitary Cayley API",
    description="Exact spectra and coherent algebras of unitary Cayley graphs",
    version="1.0.0",
    docs_url="/docs" if settings.is_development else None,
    redoc_url="/redoc" if settings.is_development else None,
    lifespan=lifespan,
)

# ============================================================================
# Routes
# ============================================================================

app.include_router(system.router, tags=["system"])
app.include_router(spectra.router, tags=["spectra"])
app.include_router(coherent.router, tags=["coherent"])


# ============================================================================
# Startup
# ============================================================================

def main() -> None:
    """Run application (for development)."""
    import logging

    import uvicorn

    setup_logging(debug=settings.debug, level=settings.log_level)

    logger.info(
        "starting_uvicorn",
        host=settings.api_host,
        port=settings.api_port,
        reload=settings.is_development,
        debug_mode=settings.debug,
    )

    if not settings.debug:
        logging.getLogger("uvicorn").setLevel(logging.WARNING)
        logging.getLogger("uvicorn.access").setLevel(logging.WARNING)

    uvicorn.run(
        "src.main:app",
        host=settings.api_host,
        port=settings.api_port,
        reload=settings.is_development,
        log_config=None,
    )


if __name__ == "__main__":
    main()
