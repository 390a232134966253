"""
Spectra API Routes - Unitary Cayley.

Closed-form spectrum, polynomials, determinant and property checks of X_n.
Payloads match the CLI's JSON mode.
"""

from fastapi import APIRouter, HTTPException, status

from src.config import settings
from src.domain.models import CheckProperty, CheckVerdict, Spectrum, format_factored
from src.services.spectra import (
    characteristic_polynomial,
    determinant_closed,
    minimal_polynomial,
    nullity,
    unitary_spectrum,
)
from src.services.verification import check_property
from src.utils.logger import logger


router = APIRouter()


def _unprocessable(operation: str, n: int, e: ValueError) -> HTTPException:
    logger.warning("api_invalid_request", operation=operation, n=n, error=str(e))
    return HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=str(e))


@router.get("/spectrum/{n}", response_model=Spectrum)
async def get_spectrum(n: int) -> Spectrum:
    """Spectrum of X_n as ascending (eigenvalue, multiplicity) pairs."""
    try:
        return unitary_spectrum(n)
    except ValueError as e:
        raise _unprocessable("spectrum", n, e) from e


@router.get("/charpoly/{n}")
async def get_charpoly(n: int) -> dict[str, object]:
    """Characteristic polynomial; coefficients (low to high) only within the oracle range."""
    try:
        spectrum = unitary_spectrum(n)
    except ValueError as e:
        raise _unprocessable("charpoly", n, e) from e
    payload: dict[str, object] = {"n": n, "factored": format_factored(spectrum.pairs)}
    if n <= settings.oracle_charpoly_max_n:
        payload["coefficients"] = list(characteristic_polynomial(n).coeffs)
    return payload


@router.get("/minpoly/{n}")
async def get_minpoly(n: int) -> dict[str, object]:
    try:
        poly = minimal_polynomial(n)
        distinct = unitary_spectrum(n).distinct
    except ValueError as e:
        raise _unprocessable("minpoly", n, e) from e
    return {
        "n": n,
        "factored": format_factored([(v, 1) for v in distinct]),
        "degree": poly.degree,
        "coefficients": list(poly.coeffs),
    }


@router.get("/det/{n}")
async def get_det(n: int) -> dict[str, object]:
    """Determinant and nullity of A(X_n)."""
    try:
        return {"n": n, "det": determinant_closed(n), "nullity": nullity(n)}
    except ValueError as e:
        raise _unprocessable("det", n, e) from e


@router.get("/check/{n}/{prop}", response_model=CheckVerdict)
async def get_check(n: int, prop: CheckProperty) -> CheckVerdict:
    """Brute-force verdict next to the closed-form characterization."""
    try:
        return check_property(n, prop)
    except ValueError as e:
        raise _unprocessable("check", n, e) from e
