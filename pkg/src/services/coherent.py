"""
Coherent-Algebra Service - Unitary Cayley.

Disjoint 0/1 basis {I, H_x} of the adjacency algebra of X_n, the
2-dimensional Weisfeiler-Leman pair refinement used as coherent-closure
oracle, and the checks built on them: pattern-polynomial verification,
power expansion on the basis, span membership in L(B_n), Hoffman's J test
and the dimension chain K_n, X_n, L(B_n), C_n, DC_n.
"""

import time

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from src.config import settings
from src.domain.constants import WL_DIAGONAL, WL_EDGE, WL_NON_EDGE
from src.domain.exceptions import GuardExceededError, InvalidArgumentError, NotCirculantError
from src.domain.models import (
    BasisMember,
    CoherentBasis,
    ConnectionSet,
    DenseGraph,
    DimensionChain,
    PatternPolynomialReport,
    PowerExpansion,
    WLColoring,
)
from src.services.arith import divisors, is_prime, is_square_free, radical, tau
from src.services.graphs import (
    complete_connection_set,
    connection_set_of,
    cycle_connection_set,
    gcd_connection_set,
    gcd_divisor_set,
    materialize,
    unitary_connection_set,
    unitary_graph,
)
from src.services.spectra import distinct_eigenvalue_count
from src.utils.logger import log_check_result, logger


# ============================================================================
# H_x basis
# ============================================================================

def h_matrix(n: int, x: int) -> ConnectionSet:
    """H_x = sum of A_d over d | n with gamma(n/d) = x.

    For x = gamma(n) the d = 1 term is the identity and shows up as the
    diagonal flag.

    Raises:
        InvalidArgumentError: x does not divide gamma(n)
    """
    gamma = radical(n)
    if x < 1 or gamma % x:
        raise InvalidArgumentError(f"h_matrix: {x} does not divide gamma({n}) = {gamma}")
    acc = ConnectionSet(n=n)
    for d in divisors(n):
        if radical(n // d) == x:
            acc = acc.union(unitary_connection_set(n, d))
    return acc


def algebra_basis(n: int) -> CoherentBasis:
    """Disjoint 0/1 basis of the adjacency algebra of X_n.

    Square-free n: {A_d : d | n}. Otherwise {I, H_gamma - I} together with
    H_x for every proper divisor x of gamma(n).

    Example:
        >>> algebra_basis(12).labels()
        ['I', 'H_1', 'H_2', 'H_3', 'H_6 - I']
    """
    if n < 2:
        raise InvalidArgumentError(f"algebra_basis: n must be >= 2, got {n}")

    members: list[BasisMember] = []
    if is_square_free(n):
        for d in divisors(n):
            label = "I" if d == 1 else f"A_{d}"
            x = None if d == 1 else n // d
            members.append(
                BasisMember(label=label, connection_set=unitary_connection_set(n, d), x=x)
            )
    else:
        gamma = radical(n)
        members.append(BasisMember(label="I", connection_set=ConnectionSet(n=n, diagonal=True)))
        for x in divisors(gamma):
            h = h_matrix(n, x)
            if x == gamma:
                members.append(
                    BasisMember(
                        label=f"H_{gamma} - I",
                        connection_set=ConnectionSet(n=n, elems=h.elems),
                        x=gamma,
                    )
                )
            else:
                members.append(BasisMember(label=f"H_{x}", connection_set=h, x=x))

    return CoherentBasis(n=n, members=tuple(members))


# ============================================================================
# Weisfeiler-Leman pair refinement
# ============================================================================

def _canonical(signatures: np.ndarray, n: int) -> tuple[np.ndarray, int]:
    """Colour ids in lexicographic order of the signature rows."""
    unique, inverse = np.unique(signatures, axis=0, return_inverse=True)
    return inverse.reshape(n, n).astype(np.int64), int(unique.shape[0])


def wl_refine(color: np.ndarray) -> tuple[np.ndarray, int]:
    """One refinement round.

    The new colour of (u, v) is its old colour together with the multiset of
    colour pairs (c(u, w), c(w, v)) over all w, each pair encoded as
    c(u, w) * k + c(w, v) and sorted along w.
    """
    n = color.shape[0]
    k = int(color.max()) + 1
    # codes[u, v, w]
    codes = color[:, None, :] * k + color.T[None, :, :]
    codes.sort(axis=2)
    signatures = np.hstack([color.reshape(-1, 1), codes.reshape(n * n, n)])
    return _canonical(signatures, n)


def initial_coloring(g: DenseGraph) -> np.ndarray:
    color = np.where(g.adjacency, WL_EDGE, WL_NON_EDGE)
    np.fill_diagonal(color, WL_DIAGONAL)
    return color.astype(np.int64)


def wl_closure(g: DenseGraph) -> WLColoring:
    """Stable pair colouring; num_colors is the dimension of the coherent closure.

    Raises:
        GuardExceededError: n above the configured ceiling
    """
    if g.n > settings.wl_max_n:
        raise GuardExceededError("wl_closure", g.n, settings.wl_max_n)
    start = time.perf_counter()

    color, num_colors = _canonical(initial_coloring(g).reshape(-1, 1), g.n)
    rounds = 0
    while True:
        refined, refined_count = wl_refine(color)
        if refined_count == num_colors:
            break
        color, num_colors = refined, refined_count
        rounds += 1

    logger.debug(
        "wl_refinement_stable",
        n=g.n,
        rounds=rounds,
        num_colors=num_colors,
        duration_ms=int((time.perf_counter() - start) * 1000),
    )
    return WLColoring(n=g.n, color=color, rounds=rounds, num_colors=num_colors)


def is_stable(coloring: WLColoring) -> bool:
    """One more round leaves the partition unchanged."""
    _, refined_count = wl_refine(coloring.color)
    return refined_count == coloring.num_colors


# ============================================================================
# Pattern-polynomial verification
# ============================================================================

def verify_pattern_polynomial(n: int) -> PatternPolynomialReport:
    """Closed-form, WL and spectral dimension counts of X_n must coincide.

    Also requires every basis member to be a union of WL colour classes.
    Failures are recorded in the report, not raised.
    """
    if n > settings.wl_max_n:
        raise GuardExceededError("verify_pattern_polynomial", n, settings.wl_max_n)
    basis = algebra_basis(n)
    coloring = wl_closure(unitary_graph(n))
    dim_spectral = distinct_eigenvalue_count(n)

    unions = all(
        coloring.is_union_of_classes(m.connection_set.to_matrix().astype(bool))
        for m in basis.members
    )
    passed = unions and len(basis) == coloring.num_colors == dim_spectral
    log_check_result(n, "pattern_polynomial", passed, dims=(len(basis), coloring.num_colors, dim_spectral))

    return PatternPolynomialReport(
        n=n,
        dim_closed_form=len(basis),
        dim_wl=coloring.num_colors,
        dim_spectral=dim_spectral,
        passed=passed,
        basis=basis.members,
        members_are_color_unions=unions,
    )


# ============================================================================
# Power expansion
# ============================================================================

def _representative(cs: ConnectionSet) -> int:
    """Column of the first-row entry read for this member."""
    return 0 if cs.diagonal else min(cs.elems)


def _parity_ok(member: BasisMember, power: int) -> bool:
    if member.x is None:
        return power % 2 == 0
    return member.x % 2 == power % 2


def power_expansion(n: int) -> PowerExpansion:
    """Coefficients of A^f on the disjoint basis for f = 1..dim-1.

    Each coefficient is read from one entry of A^f inside the member's support;
    the expansion is exact when the weighted members rebuild A^f entirely.
    For even n, odd powers must live on odd-x members and even powers on
    even-x members plus I.

    Raises:
        GuardExceededError: n above the configured ceiling
    """
    if n > settings.power_check_max_n:
        raise GuardExceededError("power_expansion", n, settings.power_check_max_n)
    basis = algebra_basis(n)
    a = unitary_graph(n).int_matrix().astype(object)
    supports = [m.connection_set.to_matrix().astype(object) for m in basis.members]

    power = np.eye(n, dtype=np.int64).astype(object)
    rows: list[tuple[int, ...]] = []
    exact = True
    parity = True
    for f in range(1, len(basis)):
        power = power.dot(a)
        coeffs = tuple(int(power[0, _representative(m.connection_set)]) for m in basis.members)
        rebuilt = sum((c * s for c, s in zip(coeffs, supports, strict=True)), np.zeros_like(power))
        exact = exact and bool(np.array_equal(rebuilt, power))
        parity = parity and all(
            c == 0 or _parity_ok(m, f) for c, m in zip(coeffs, basis.members, strict=True)
        )
        rows.append(coeffs)

    return PowerExpansion(
        n=n,
        labels=tuple(basis.labels()),
        coefficients=tuple(rows),
        exact=exact,
        parity_separated=parity if n % 2 == 0 else None,
    )


def power_expansion_check(n: int) -> bool:
    expansion = power_expansion(n)
    return expansion.exact and expansion.parity_separated is not False


# ============================================================================
# Integral circulants
# ============================================================================

def span_membership(g: DenseGraph) -> bool:
    """A(g) lies in L(B_n): its connection set is closed under multiplication by units.

    Raises:
        GuardExceededError: n above the configured ceiling
        NotCirculantError: rows are not cyclic shifts of row 0
    """
    if g.n > settings.span_max_n:
        raise GuardExceededError("span_membership", g.n, settings.span_max_n)
    if not g.is_circulant():
        raise NotCirculantError("span_membership: adjacency is not circulant")
    cs = connection_set_of(g)
    return gcd_connection_set(g.n, gcd_divisor_set(cs)).elems == cs.elems


# ============================================================================
# Adjacency-algebra dimension
# ============================================================================

def _rank(rows: list[list[int]]) -> int:
    matrix = DomainMatrix(
        [[QQ(v) for v in row] for row in rows], (len(rows), len(rows[0])), QQ
    )
    return int(matrix.rank())


def _power_rows(g: DenseGraph) -> list[list[int]]:
    """vec(I), vec(A), ... up to the first power dependent on the earlier ones.

    Circulants are represented by their first row.
    """
    circulant = g.is_circulant()
    a = g.int_matrix().astype(object)
    power = np.eye(g.n, dtype=np.int64).astype(object)
    rows: list[list[int]] = []
    while len(rows) < g.n:
        vec = power[0] if circulant else power.reshape(-1)
        candidate = [*rows, [int(v) for v in vec]]
        if _rank(candidate) < len(candidate):
            break
        rows = candidate
        power = power.dot(a)
    return rows


def adjacency_algebra_dimension(g: DenseGraph) -> int:
    """dim span{I, A, A^2, ...}."""
    return len(_power_rows(g))


def hoffman_check(g: DenseGraph) -> bool:
    """J lies in the adjacency algebra (connected and regular, by Hoffman)."""
    rows = _power_rows(g)
    ones = [1] * len(rows[0])
    return _rank([*rows, ones]) == len(rows)


def dimension_chain(n: int) -> DimensionChain:
    """dim A(K_n), dim A(X_n), tau(n), dim A(C_n) and n, in chain order."""
    if n < 2:
        raise InvalidArgumentError(f"dimension_chain: n must be >= 2, got {n}")
    cycle = cycle_connection_set(n) if n >= 3 else complete_connection_set(n)
    chain = DimensionChain(
        n=n,
        dim_complete=adjacency_algebra_dimension(materialize(complete_connection_set(n))),
        dim_unitary=distinct_eigenvalue_count(n),
        dim_gcd_span=tau(n),
        dim_cycle=adjacency_algebra_dimension(materialize(cycle)),
        dim_directed_cycle=n,
        square_free=is_square_free(n),
        prime=is_prime(n),
    )
    logger.debug(
        "dimension_chain", n=n, monotone=chain.monotone, equalities=chain.equalities_hold
    )
    return chain
