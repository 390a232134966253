"""
Spectrum Domain Models - Unitary Cayley.
"""

from collections import Counter
from collections.abc import Iterable

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Spectrum(BaseModel):
    """Multiset of integer eigenvalues as (value, multiplicity) pairs.

    Serializes to the canonical ``{"n": int, "pairs": [[value, multiplicity], ...]}``.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    pairs: tuple[tuple[int, int], ...]

    @model_validator(mode="after")
    def validate_pairs(self) -> "Spectrum":
        values = [v for v, _ in self.pairs]
        if any(b <= a for a, b in zip(values, values[1:], strict=False)):
            raise ValueError("eigenvalues must be strictly increasing")
        if any(m < 1 for _, m in self.pairs):
            raise ValueError("multiplicities must be positive")
        if sum(m for _, m in self.pairs) != self.n:
            raise ValueError(f"multiplicities must sum to n={self.n}")
        return self

    @classmethod
    def from_values(cls, n: int, values: Iterable[int]) -> "Spectrum":
        counts = Counter(values)
        return cls(n=n, pairs=tuple(sorted(counts.items())))

    @property
    def trace(self) -> int:
        return sum(v * m for v, m in self.pairs)

    @property
    def distinct(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.pairs)

    @property
    def largest(self) -> tuple[int, int]:
        return self.pairs[-1]

    def multiplicity(self, value: int) -> int:
        return dict(self.pairs).get(value, 0)

    def values(self) -> list[int]:
        """Eigenvalues with repetition, ascending."""
        return [v for v, m in self.pairs for _ in range(m)]


class TableRowCheck(BaseModel):
    """One row of the printed spectrum table, evaluated at n."""

    model_config = ConfigDict(frozen=True)

    row: str
    pairs: tuple[tuple[int, int], ...]
    multiplicity_total: int
    sums_to_n: bool
    matches_derived: bool

    @property
    def consistent(self) -> bool:
        return self.sums_to_n and self.matches_derived
