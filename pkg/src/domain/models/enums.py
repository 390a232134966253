"""
Domain Enums - Unitary Cayley.
"""

from enum import Enum


class OutputFormat(str, Enum):
    """CLI rendering mode."""

    TABLE = "table"
    JSON = "json"


class CheckProperty(str, Enum):
    """Structural property verifiable both by brute force and by a closed form."""

    DISTANCE_REGULAR = "dr"
    STRONGLY_REGULAR = "srg"
    BIPARTITE = "bipartite"
    COMPLETE = "complete"
    CROWN = "crown"
    SINGULAR = "singular"
    INTEGRAL = "integral"

    @property
    def characterization(self) -> str:
        """Closed-form condition on n, as stated for X_n."""
        descriptions = {
            CheckProperty.DISTANCE_REGULAR: "prime power or 2p",
            CheckProperty.STRONGLY_REGULAR: "p^k with k >= 2",
            CheckProperty.BIPARTITE: "n even",
            CheckProperty.COMPLETE: "n prime",
            CheckProperty.CROWN: "n = 2p, p odd prime",
            CheckProperty.SINGULAR: "n not square-free",
            CheckProperty.INTEGRAL: "always integral",
        }
        return descriptions[self]
