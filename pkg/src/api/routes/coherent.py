"""
Coherent-Algebra API Routes - Unitary Cayley.
"""

from fastapi import APIRouter, HTTPException, status

from src.services.coherent import algebra_basis, verify_pattern_polynomial
from src.utils.logger import logger


router = APIRouter()


@router.get("/basis/{n}")
async def get_basis(n: int) -> dict[str, object]:
    """Disjoint 0/1 basis of the adjacency algebra of X_n."""
    try:
        basis = algebra_basis(n)
    except ValueError as e:
        logger.warning("api_invalid_request", operation="basis", n=n, error=str(e))
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=str(e)) from e
    return {"n": basis.n, "members": [m.to_json() for m in basis.members]}


@router.get("/verify/{n}")
async def get_pattern_polynomial_report(n: int) -> dict[str, object]:
    """Closed-form, WL and spectral dimension counts with the pass flag."""
    try:
        report = verify_pattern_polynomial(n)
    except ValueError as e:
        logger.warning("api_invalid_request", operation="verify", n=n, error=str(e))
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=str(e)) from e
    return report.to_json()
