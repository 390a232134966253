"""Domain Models - Pydantic models for Unitary Cayley.

All models are type-safe with validation; value types are frozen.
"""

from src.domain.models.arithmetic import DStarElement, Factorization
from src.domain.models.coherent import (
    BasisMember,
    CoherentBasis,
    DimensionChain,
    PatternPolynomialReport,
    PowerExpansion,
    WLColoring,
)
from src.domain.models.enums import CheckProperty, OutputFormat
from src.domain.models.graph import (
    ConnectionSet,
    DenseGraph,
    DistanceProfile,
    DistanceRegularity,
    IntersectionArray,
    StrongRegularity,
)
from src.domain.models.polynomial import IntPoly, format_factored
from src.domain.models.report import CaseResult, CheckVerdict, SweepReport, SweepSummary
from src.domain.models.spectrum import Spectrum, TableRowCheck

__all__ = [
    # Enums
    "CheckProperty",
    "OutputFormat",
    # Arithmetic
    "Factorization",
    "DStarElement",
    # Polynomials
    "IntPoly",
    "format_factored",
    # Graphs
    "ConnectionSet",
    "DenseGraph",
    "DistanceProfile",
    "DistanceRegularity",
    "IntersectionArray",
    "StrongRegularity",
    # Spectra
    "Spectrum",
    "TableRowCheck",
    # Coherent algebra
    "BasisMember",
    "CoherentBasis",
    "DimensionChain",
    "PatternPolynomialReport",
    "PowerExpansion",
    "WLColoring",
    # Reports
    "CaseResult",
    "CheckVerdict",
    "SweepReport",
    "SweepSummary",
]
