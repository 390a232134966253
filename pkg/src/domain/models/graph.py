"""
Graph Domain Models - Unitary Cayley.

A circulant 0/1 matrix is carried as its ConnectionSet (the nonzero positions
of the first row); the dense form is built only for oracles.
"""

from collections.abc import Iterable

import networkx as nx
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator, model_validator


class ConnectionSet(BaseModel):
    """Symmetric subset of Z_n without 0, plus an optional identity part.

    ``diagonal`` marks the identity matrix (A_1 = W_n^n = I) so the residue
    set itself stays loop-free.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    elems: frozenset[int] = Field(default_factory=frozenset)
    diagonal: bool = False

    @model_validator(mode="after")
    def validate_symmetric(self) -> "ConnectionSet":
        for s in self.elems:
            if not 1 <= s <= self.n - 1:
                raise ValueError(f"residue {s} outside [1, {self.n - 1}]")
            if (self.n - s) % self.n not in self.elems:
                raise ValueError(f"connection set not symmetric: {s} without {self.n - s}")
        return self

    @field_serializer("elems")
    def serialize_elems(self, elems: frozenset[int]) -> list[int]:
        return sorted(elems)

    def __len__(self) -> int:
        return len(self.elems)

    def sorted_elems(self) -> list[int]:
        return sorted(self.elems)

    def union(self, other: "ConnectionSet") -> "ConnectionSet":
        if other.n != self.n:
            raise ValueError("connection sets of different order")
        return ConnectionSet(
            n=self.n, elems=self.elems | other.elems, diagonal=self.diagonal or other.diagonal
        )

    def is_disjoint(self, other: "ConnectionSet") -> bool:
        """Hadamard product of the two 0/1 circulants is zero."""
        return not (self.elems & other.elems) and not (self.diagonal and other.diagonal)

    def first_row(self) -> np.ndarray:
        row = np.zeros(self.n, dtype=np.int64)
        row[list(self.elems)] = 1
        if self.diagonal:
            row[0] = 1
        return row

    def to_matrix(self) -> np.ndarray:
        """n x n 0/1 circulant, identity part included."""
        row = self.first_row()
        return np.array([np.roll(row, i) for i in range(self.n)], dtype=np.int64)


class DenseGraph(BaseModel):
    """Simple undirected graph as a symmetric 0/1 matrix with zero diagonal."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    adjacency: np.ndarray

    @field_validator("adjacency", mode="before")
    @classmethod
    def coerce_boolean(cls, v: object) -> np.ndarray:
        return np.asarray(v).astype(bool)

    @model_validator(mode="after")
    def validate_simple(self) -> "DenseGraph":
        a = self.adjacency
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency must be square")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency must be symmetric")
        if a.diagonal().any():
            raise ValueError("adjacency must have zero diagonal")
        return self

    @property
    def n(self) -> int:
        return int(self.adjacency.shape[0])

    @property
    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    def is_regular(self) -> bool:
        degrees = self.degrees
        return bool(self.n == 0 or (degrees == degrees[0]).all())

    def neighbors(self, u: int) -> np.ndarray:
        return np.flatnonzero(self.adjacency[u])

    def int_matrix(self) -> np.ndarray:
        return self.adjacency.astype(np.int64)

    def is_circulant(self) -> bool:
        """Row i equals row 0 cyclically shifted right by i."""
        row = self.adjacency[0]
        return all(np.array_equal(self.adjacency[i], np.roll(row, i)) for i in range(self.n))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(zip(*np.nonzero(np.triu(self.adjacency)), strict=True))
        return g

    def to_edge_list(self) -> str:
        """One ``u v`` pair per line, 0-indexed, u < v, lexicographic."""
        rows, cols = np.nonzero(np.triu(self.adjacency))
        return "".join(f"{u} {v}\n" for u, v in zip(rows.tolist(), cols.tolist(), strict=True))

    @classmethod
    def from_edge_list(cls, text: str, n: int) -> "DenseGraph":
        a = np.zeros((n, n), dtype=bool)
        for line in text.splitlines():
            if not line.strip():
                continue
            u, v = (int(tok) for tok in line.split())
            a[u, v] = a[v, u] = True
        return cls(adjacency=a)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "DenseGraph":
        a = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            a[u, v] = a[v, u] = True
        return cls(adjacency=a)


class DistanceProfile(BaseModel):
    """All-pairs hop distances; UNREACHABLE (-1) between components.

    ``diameter`` is None when the graph is disconnected.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    dist: np.ndarray
    diameter: int | None

    @property
    def connected(self) -> bool:
        return self.diameter is not None


class IntersectionArray(BaseModel):
    """{b_0, ..., b_{D-1}; c_1, ..., c_D} of a distance-regular graph."""

    model_config = ConfigDict(frozen=True)

    b: tuple[int, ...]
    c: tuple[int, ...]

    @property
    def diameter(self) -> int:
        return len(self.c)

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.b)) + "; " + ", ".join(map(str, self.c)) + "}"


class DistanceRegularity(BaseModel):
    """Verdict of the distance-regularity check."""

    model_config = ConfigDict(frozen=True)

    is_distance_regular: bool
    intersection_array: IntersectionArray | None = None
    diagnostic: str | None = None

    def __bool__(self) -> bool:
        return self.is_distance_regular


class StrongRegularity(BaseModel):
    """Verdict of the combinatorial strong-regularity check, (n, k, lambda, mu) when true."""

    model_config = ConfigDict(frozen=True)

    is_strongly_regular: bool
    parameters: tuple[int, int, int, int] | None = None
    diagnostic: str | None = None

    def __bool__(self) -> bool:
        return self.is_strongly_regular
