"""
Graph Service - Unitary Cayley.

Builds X_d^n = Cay(Z_n, (n/d) U_d) and other circulants, computes BFS
distance profiles and checks structural predicates combinatorially:
bipartite, complete, complete bipartite, crown, distance-regular (neighbour
shell counts, with an optional full p^k_ij audit) and strongly regular.
"""

from collections.abc import Iterable, Sequence
from math import gcd

import networkx as nx
import numpy as np

from src.domain.constants import UNREACHABLE
from src.domain.exceptions import InvalidArgumentError
from src.domain.models import (
    ConnectionSet,
    DenseGraph,
    DistanceProfile,
    DistanceRegularity,
    IntersectionArray,
    StrongRegularity,
)
from src.services.arith import check_positive, units
from src.utils.logger import logger


# ============================================================================
# Construction
# ============================================================================

def unitary_connection_set(n: int, d: int) -> ConnectionSet:
    """{(n/d) k mod n : k in U_d}; for d = 1 this is the identity (diagonal flag).

    Raises:
        InvalidArgumentError: d does not divide n

    Example:
        >>> unitary_connection_set(12, 3).sorted_elems()
        [4, 8]
    """
    check_positive(n, "unitary_connection_set")
    if d < 1 or n % d:
        raise InvalidArgumentError(f"unitary_connection_set: {d} does not divide {n}")
    if d == 1:
        return ConnectionSet(n=n, diagonal=True)
    return ConnectionSet(n=n, elems=frozenset((n // d) * k % n for k in units(d)))


def gcd_connection_set(n: int, divisor_set: Iterable[int]) -> ConnectionSet:
    """Union of (n/d) U_d over the given divisors of n (an integral circulant)."""
    acc = ConnectionSet(n=n)
    for d in divisor_set:
        acc = acc.union(unitary_connection_set(n, d))
    return acc


def cycle_connection_set(n: int) -> ConnectionSet:
    """C_n = Cay(Z_n, {1, n-1})."""
    if n < 3:
        raise InvalidArgumentError(f"cycle_connection_set: n must be >= 3, got {n}")
    return ConnectionSet(n=n, elems=frozenset({1, n - 1}))


def complete_connection_set(n: int) -> ConnectionSet:
    """K_n = Cay(Z_n, Z_n minus 0)."""
    check_positive(n, "complete_connection_set")
    return ConnectionSet(n=n, elems=frozenset(range(1, n)))


def materialize(cs: ConnectionSet) -> DenseGraph:
    """a_ij = 1 iff (j - i) mod n is in the connection set.

    Raises:
        InvalidArgumentError: the set carries the identity (a loop on every vertex)
    """
    if cs.diagonal:
        raise InvalidArgumentError("materialize: identity part is not a simple graph")
    return DenseGraph(adjacency=cs.to_matrix())


def unitary_graph(n: int, d: int | None = None) -> DenseGraph:
    """Dense X_d^n; d defaults to n (the unitary Cayley graph X_n)."""
    return materialize(unitary_connection_set(n, n if d is None else d))


def circulant_from_first_row(row: Sequence[int]) -> DenseGraph:
    n = len(row)
    elems = frozenset(j for j in range(1, n) if row[j])
    if row[0]:
        raise InvalidArgumentError("circulant_from_first_row: loop at position 0")
    return materialize(ConnectionSet(n=n, elems=elems))


def connection_set_of(g: DenseGraph) -> ConnectionSet:
    """Connection set of a circulant graph (first row)."""
    return ConnectionSet(n=g.n, elems=frozenset(np.flatnonzero(g.adjacency[0]).tolist()))


def gcd_divisor_set(cs: ConnectionSet) -> list[int]:
    """Divisors d whose orbit (n/d) U_d meets the connection set.

    The residue s lies in the orbit with d = n / gcd(s, n); ``cs`` is a union
    of orbits iff ``gcd_connection_set(n, gcd_divisor_set(cs)) == cs``.
    """
    return sorted({cs.n // gcd(s, cs.n) for s in cs.elems})


# ============================================================================
# Distances
# ============================================================================

def bfs_all_pairs(g: DenseGraph) -> DistanceProfile:
    """Hop distances from every source; diameter None when disconnected."""
    dist = np.full((g.n, g.n), UNREACHABLE, dtype=np.int64)
    for source, lengths in nx.all_pairs_shortest_path_length(g.to_networkx()):
        for target, hops in lengths.items():
            dist[source, target] = hops
    diameter = None if (dist == UNREACHABLE).any() else int(dist.max(initial=0))
    return DistanceProfile(dist=dist, diameter=diameter)


# ============================================================================
# Structural predicates
# ============================================================================

def is_bipartite(g: DenseGraph) -> bool:
    """BFS 2-colouring succeeds."""
    return bool(nx.is_bipartite(g.to_networkx()))


def is_complete(g: DenseGraph) -> bool:
    return g.edge_count == g.n * (g.n - 1) // 2


def _two_colouring(g: DenseGraph) -> tuple[set[int], set[int]] | None:
    graph = g.to_networkx()
    if not nx.is_bipartite(graph):
        return None
    colour = nx.bipartite.color(graph)
    left = {v for v, c in colour.items() if c == 0}
    return left, set(graph) - left


def is_complete_bipartite(g: DenseGraph) -> bool:
    """K_{a,b} with a, b >= 1."""
    parts = _two_colouring(g)
    if parts is None or not nx.is_connected(g.to_networkx()):
        return False
    left, right = parts
    return bool(left) and bool(right) and g.edge_count == len(left) * len(right)


def is_crown(g: DenseGraph) -> bool:
    """K_{m,m} minus a perfect matching, m >= 2.

    Bipartite with equal parts, (m-1)-regular, and every vertex misses exactly
    one vertex of the opposite part.
    """
    if g.n < 4 or g.n % 2:
        return False
    parts = _two_colouring(g)
    if parts is None:
        return False
    left, right = parts
    m = g.n // 2
    if len(left) != m or len(right) != m:
        return False
    if not g.is_regular() or int(g.degrees[0]) != m - 1:
        return False
    a = g.adjacency
    right_idx = sorted(right)
    return all(int((~a[u, right_idx]).sum()) == 1 for u in left)


# ============================================================================
# Distance regularity
# ============================================================================

def is_distance_regular(g: DenseGraph, strict: bool = False) -> DistanceRegularity:
    """Neighbour-shell certificate: c_j, a_j, b_j depend only on j = d(u, v).

    For every ordered pair (u, v) at distance j, count the neighbours of v at
    distance j-1, j, j+1 from u. ``strict`` additionally checks that every
    p^k_ij is constant on pairs at distance k.
    """
    profile = bfs_all_pairs(g)
    if not profile.connected:
        return DistanceRegularity(is_distance_regular=False, diagnostic="disconnected")
    if not g.is_regular():
        return DistanceRegularity(is_distance_regular=False, diagnostic="not regular")

    diameter = profile.diameter or 0
    dist = profile.dist
    a = g.adjacency.astype(np.float64)
    shells = np.arange(diameter + 2)
    rows = np.arange(g.n)

    c_seen: dict[int, set[int]] = {j: set() for j in range(diameter + 1)}
    a_seen: dict[int, set[int]] = {j: set() for j in range(diameter + 1)}
    b_seen: dict[int, set[int]] = {j: set() for j in range(diameter + 1)}

    for u in range(g.n):
        du = dist[u]
        onehot = (du[:, None] == shells[None, :]).astype(np.float64)
        # counts[v, i] = neighbours of v at distance i from u
        counts = np.rint(a @ onehot).astype(np.int64)
        padded = np.hstack([np.zeros((g.n, 1), dtype=np.int64), counts])
        for j_val, c_val, a_val, b_val in zip(
            du.tolist(),
            padded[rows, du].tolist(),
            padded[rows, du + 1].tolist(),
            padded[rows, du + 2].tolist(),
            strict=True,
        ):
            if j_val >= 1:
                c_seen[j_val].add(c_val)
            a_seen[j_val].add(a_val)
            if j_val < diameter:
                b_seen[j_val].add(b_val)

    for j in range(diameter + 1):
        for name, seen in (("c", c_seen), ("a", a_seen), ("b", b_seen)):
            if len(seen[j]) > 1:
                return DistanceRegularity(
                    is_distance_regular=False,
                    diagnostic=f"{name}_{j} takes values {sorted(seen[j])}",
                )

    if strict:
        diagnostic = _intersection_numbers_diagnostic(dist, diameter)
        if diagnostic is not None:
            return DistanceRegularity(is_distance_regular=False, diagnostic=diagnostic)

    array = IntersectionArray(
        b=tuple(next(iter(b_seen[j])) for j in range(diameter)),
        c=tuple(next(iter(c_seen[j])) for j in range(1, diameter + 1)),
    )
    logger.debug("distance_regular", n=g.n, intersection_array=str(array))
    return DistanceRegularity(is_distance_regular=True, intersection_array=array)


def _intersection_numbers_diagnostic(dist: np.ndarray, diameter: int) -> str | None:
    """None when p^k_ij = |{w : d(u,w)=i, d(v,w)=j}| is constant over d(u,v)=k."""
    shells = np.arange(diameter + 1)
    onehot = (dist[:, :, None] == shells[None, None, :]).astype(np.float64)
    reference: dict[int, np.ndarray] = {}
    for u in range(dist.shape[0]):
        # p[v, i, j] for this u
        p = np.rint(np.einsum("wi,vwj->vij", onehot[u], onehot)).astype(np.int64)
        for v, k in enumerate(dist[u].tolist()):
            if k not in reference:
                reference[k] = p[v]
            elif not np.array_equal(reference[k], p[v]):
                return f"p^{k}_ij not constant (u={u}, v={v})"
    return None


def is_strongly_regular_combinatorial(g: DenseGraph) -> StrongRegularity:
    """Regular, diameter exactly 2, common neighbours constant on edges and on non-edges."""
    if not g.is_regular():
        return StrongRegularity(is_strongly_regular=False, diagnostic="not regular")
    profile = bfs_all_pairs(g)
    if profile.diameter != 2:
        return StrongRegularity(
            is_strongly_regular=False, diagnostic=f"diameter is {profile.diameter}"
        )
    a = g.int_matrix()
    common = a @ a
    off_diagonal = ~np.eye(g.n, dtype=bool)
    lambdas = np.unique(common[g.adjacency])
    mus = np.unique(common[~g.adjacency & off_diagonal])
    if len(lambdas) > 1 or len(mus) > 1:
        return StrongRegularity(
            is_strongly_regular=False,
            diagnostic=f"lambda in {lambdas.tolist()}, mu in {mus.tolist()}",
        )
    k = int(g.degrees[0])
    lam = int(lambdas[0]) if len(lambdas) else 0
    return StrongRegularity(
        is_strongly_regular=True, parameters=(g.n, k, lam, int(mus[0]))
    )
