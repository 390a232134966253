"""
Coherent-Algebra Domain Models - Unitary Cayley.

A CoherentBasis is a list of pairwise disjoint 0/1 circulants summing to J;
a WLColoring is the stable pair colouring whose classes span the coherent
closure.
"""

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.domain.models.graph import ConnectionSet


class BasisMember(BaseModel):
    """Labelled 0/1 circulant.

    ``x`` is the divisor of the radical the member is attached to (H_x); the
    identity carries x = None.
    """

    model_config = ConfigDict(frozen=True)

    label: str
    connection_set: ConnectionSet
    x: int | None = None

    def to_json(self) -> dict[str, object]:
        """``{"label": str, "connection_set": [int]}``; the identity lists residue 0."""
        residues = self.connection_set.sorted_elems()
        if self.connection_set.diagonal:
            residues = [0, *residues]
        return {"label": self.label, "connection_set": residues}


class CoherentBasis(BaseModel):
    """Disjoint 0/1 basis of an adjacency algebra of order n."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    members: tuple[BasisMember, ...]

    @model_validator(mode="after")
    def validate_partition(self) -> "CoherentBasis":
        seen: set[int] = set()
        diagonals = 0
        for member in self.members:
            cs = member.connection_set
            if cs.n != self.n:
                raise ValueError(f"member {member.label} has order {cs.n}, expected {self.n}")
            if seen & cs.elems:
                raise ValueError(f"member {member.label} overlaps an earlier member")
            seen |= cs.elems
            diagonals += int(cs.diagonal)
        if diagonals != 1 or seen != set(range(1, self.n)):
            raise ValueError("members must sum to the all-ones matrix J")
        return self

    def __len__(self) -> int:
        return len(self.members)

    def labels(self) -> list[str]:
        return [m.label for m in self.members]


class WLColoring(BaseModel):
    """Stable colouring of ordered vertex pairs.

    Colour ids are 0..num_colors-1 in lexicographic order of their refinement
    signatures, so they are reproducible run to run.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    n: int = Field(..., ge=1)
    color: np.ndarray
    rounds: int = Field(..., ge=0)
    num_colors: int = Field(..., ge=1)

    def is_union_of_classes(self, mask: np.ndarray) -> bool:
        """The 0/1 matrix ``mask`` is a sum of colour-class indicators."""
        inside = set(np.unique(self.color[mask]).tolist())
        outside = set(np.unique(self.color[~mask]).tolist())
        return not inside & outside


class PowerExpansion(BaseModel):
    """Coefficients of A^f on the disjoint basis, one row per power f."""

    model_config = ConfigDict(frozen=True)

    n: int
    labels: tuple[str, ...]
    coefficients: tuple[tuple[int, ...], ...]
    exact: bool
    parity_separated: bool | None = None


class PatternPolynomialReport(BaseModel):
    """Three independent dimension counts for the adjacency algebra of X_n."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    n: int
    dim_closed_form: int
    dim_wl: int
    dim_spectral: int
    passed: bool = Field(..., alias="pass")
    basis: tuple[BasisMember, ...]
    members_are_color_unions: bool = Field(default=True, exclude=True)

    def to_json(self) -> dict[str, object]:
        return {
            "n": self.n,
            "dim_closed_form": self.dim_closed_form,
            "dim_wl": self.dim_wl,
            "dim_spectral": self.dim_spectral,
            "pass": self.passed,
            "basis": [m.to_json() for m in self.basis],
        }


class DimensionChain(BaseModel):
    """dim A(K_n) <= dim A(X_n) <= tau(n) <= dim A(C_n) <= n."""

    model_config = ConfigDict(frozen=True)

    n: int
    dim_complete: int
    dim_unitary: int
    dim_gcd_span: int
    dim_cycle: int
    dim_directed_cycle: int
    square_free: bool = False
    prime: bool = False

    @property
    def monotone(self) -> bool:
        chain = (
            self.dim_complete,
            self.dim_unitary,
            self.dim_gcd_span,
            self.dim_cycle,
            self.dim_directed_cycle,
        )
        return all(a <= b for a, b in zip(chain, chain[1:], strict=False))

    @property
    def equalities_hold(self) -> bool:
        """dim A(X_n) = tau(n) for square-free n; dim A(K_n) = dim A(X_n) for prime n."""
        if self.square_free and self.dim_unitary != self.dim_gcd_span:
            return False
        return not self.prime or self.dim_complete == self.dim_unitary
