"""
System API Routes - Unitary Cayley.

Health check and service info.
"""

from fastapi import APIRouter

from src.config import settings


router = APIRouter()


@router.get("/health")
async def health_check() -> dict[str, object]:
    """System health check.

    The service is stateless; healthy whenever it answers.
    """
    return {"status": "healthy", "environment": settings.environment}


@router.get("/")
async def root() -> dict[str, object]:
    """Root endpoint."""
    return {
        "app": "Unitary Cayley",
        "version": "1.0.0",
        "environment": settings.environment,
        "guards": {
            "closed_form_max_n": settings.closed_form_max_n,
            "oracle_charpoly_max_n": settings.oracle_charpoly_max_n,
            "wl_max_n": settings.wl_max_n,
            "check_max_n": settings.check_max_n,
        },
    }
