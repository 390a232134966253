"""
Services Module - Unitary Cayley.

Pure computational services: arithmetic, polynomials, graphs, spectra,
coherent algebras and the verification sweep that ties them together.
"""

from src.services.arith import factorize, ramanujan_closed
from src.services.coherent import algebra_basis, verify_pattern_polynomial, wl_closure
from src.services.graphs import materialize, unitary_connection_set, unitary_graph
from src.services.spectra import (
    characteristic_polynomial,
    determinant_closed,
    minimal_polynomial,
    unitary_spectrum,
)
from src.services.verification import check_property, run_case, run_sweep

__all__ = [
    "factorize",
    "ramanujan_closed",
    "algebra_basis",
    "verify_pattern_polynomial",
    "wl_closure",
    "materialize",
    "unitary_connection_set",
    "unitary_graph",
    "characteristic_polynomial",
    "determinant_closed",
    "minimal_polynomial",
    "unitary_spectrum",
    "check_property",
    "run_case",
    "run_sweep",
]
