"""API Routes - Unitary Cayley."""

from src.api.routes import coherent, spectra, system

__all__ = ["coherent", "spectra", "system"]
