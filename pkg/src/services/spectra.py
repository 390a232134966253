"""
Spectra Service - Unitary Cayley.

Closed forms for X_n derived from the Ramanujan sums c_n(i): spectrum,
characteristic and minimal polynomials, determinant and nullity. The exact
matrix oracles (fraction-free determinants plus interpolation) certify every
closed form without floating point.

The printed spectrum table is kept only as a fixture: ``printed_table_rows``
evaluates each applicable row at n so the sweep can report rows whose
multiplicities do not add up.
"""

import time
from collections import Counter
from collections.abc import Iterable, Iterator
from itertools import chain, count

import numpy as np
from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from src.config import settings
from src.domain.constants import (
    TABLE_ROW_EVEN_NOT_SQUARE_FREE,
    TABLE_ROW_ODD_NOT_SQUARE_FREE,
    TABLE_ROW_PRIME,
    TABLE_ROW_PRIME_POWER,
    TABLE_ROW_SQUARE_FREE_EVEN,
    TABLE_ROW_SQUARE_FREE_ODD,
    TABLE_ROW_TWICE_PRIME,
    TABLE_ROW_TWO_ODD_PRIMES,
)
from src.domain.exceptions import GuardExceededError, InvalidArgumentError, NonIntegralQuotientError
from src.domain.models import ConnectionSet, DenseGraph, IntPoly, Spectrum, TableRowCheck
from src.services.arith import (
    check_positive,
    d_star_subsets,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    is_prime_power,
    is_square_free,
    is_twice_odd_prime,
    radical,
    ramanujan_closed,
    tau,
)
from src.services.graphs import bfs_all_pairs, gcd_connection_set, gcd_divisor_set
from src.services.polynomials import poly_from_roots
from src.utils.logger import log_oracle_call, logger


def _check_closed_form(n: int, operation: str) -> None:
    check_positive(n, operation)
    if n > settings.closed_form_max_n:
        raise GuardExceededError(operation, n, settings.closed_form_max_n)


# ============================================================================
# Closed forms
# ============================================================================

def unitary_spectrum(n: int) -> Spectrum:
    """{c_n(i) : 0 <= i < n} grouped into (value, multiplicity) pairs.

    Exactly phi(n/d) indices i have gcd(i, n) = d, so the multiset is built
    per divisor instead of per index.

    Example:
        >>> unitary_spectrum(12).pairs
        ((-4, 1), (-2, 2), (0, 6), (2, 2), (4, 1))
    """
    _check_closed_form(n, "unitary_spectrum")
    counts: Counter[int] = Counter()
    for d in divisors(n):
        counts[ramanujan_closed(n, d)] += euler_phi(n // d)
    spectrum = Spectrum(n=n, pairs=tuple(sorted(counts.items())))
    logger.debug("spectrum_computed", n=n, distinct=len(spectrum.pairs))
    return spectrum


def characteristic_polynomial(n: int) -> IntPoly:
    """prod (x - lambda)^m over the spectrum; monic of degree n."""
    return poly_from_roots(unitary_spectrum(n).pairs)


def minimal_polynomial(n: int) -> IntPoly:
    """prod (x - lambda) over the distinct eigenvalues."""
    return poly_from_roots((value, 1) for value in unitary_spectrum(n).distinct)


def expected_minpoly_degree(n: int) -> int:
    """tau(n) for square-free n, tau(gamma(n)) + 1 otherwise."""
    f = factorize(n)
    return tau(f) if is_square_free(f) else tau(radical(f)) + 1


def determinant_closed(n: int) -> int:
    """det A(X_n) by the case split on the shape of n.

    Products over D* run over every subset of the odd primes; subsets with a
    common product each contribute their own factor.
    """
    _check_closed_form(n, "determinant_closed")
    f = factorize(n)
    if n == 1:
        return 1
    if not is_square_free(f):
        return 0
    if n == 2:
        return -1
    if is_prime(f):
        return n - 1
    if is_twice_odd_prime(f):
        p = f.factors[1][0]
        return -((p - 1) ** 2)
    phi = euler_phi(f)
    if n % 2 and f.omega == 2:
        p, q = f.primes
        return (p - 1) ** q * (q - 1) ** p
    if n % 2:
        det = (-1) ** f.omega
        for b, t in d_star_subsets(f):
            det *= ((-1) ** t * b) ** (phi // b)
        return det
    det = 1
    for b, _ in d_star_subsets(f):
        det *= (-1) ** (phi // b) * b ** (2 * phi // b)
    return det


def nullity(n: int) -> int:
    """n - gamma(n), the multiplicity of eigenvalue 0."""
    _check_closed_form(n, "nullity")
    return n - radical(n)


def distinct_eigenvalue_count(n: int) -> int:
    return len(unitary_spectrum(n).pairs)


def eigenvalues_divide_phi(n: int) -> bool:
    """Every nonzero eigenvalue of X_n divides phi(n)."""
    phi = euler_phi(n)
    return all(phi % value == 0 for value in unitary_spectrum(n).distinct if value)


def circulant_spectrum(cs: ConnectionSet) -> Spectrum:
    """Spectrum of an integral circulant: lambda_k = sum over d in D of c_d(k).

    Raises:
        InvalidArgumentError: the set is not a union of (n/d) U_d orbits
    """
    divisor_set = gcd_divisor_set(cs)
    if gcd_connection_set(cs.n, divisor_set).elems != cs.elems:
        raise InvalidArgumentError("circulant_spectrum: connection set is not a union of unit orbits")
    values = (sum(ramanujan_closed(d, k) for d in divisor_set) for k in range(cs.n))
    return Spectrum.from_values(cs.n, values)


# ============================================================================
# Printed spectrum table
# ============================================================================

def _scaled_rows(
    fixed: Iterable[tuple[int, int]], scaled: Iterator[tuple[int, int]]
) -> tuple[tuple[int, int], ...]:
    counts: Counter[int] = Counter()
    for value, mult in chain(fixed, scaled):
        counts[value] += mult
    return tuple(sorted((v, m) for v, m in counts.items() if m))


def _printed_rows(n: int) -> list[tuple[str, tuple[tuple[int, int], ...]]]:
    f = factorize(n)
    phi = euler_phi(f)
    r = f.omega
    subsets = list(d_star_subsets(f))
    rows: list[tuple[str, tuple[tuple[int, int], ...]]] = []

    if is_prime(f):
        rows.append((TABLE_ROW_PRIME, _scaled_rows([(-1, n - 1), (n - 1, 1)], iter(()))))
    if is_prime_power(f) and not is_prime(f):
        p, k = f.factors[0]
        rows.append((
            TABLE_ROW_PRIME_POWER,
            _scaled_rows([(-(p ** (k - 1)), p - 1), (0, n - p), ((p - 1) * p ** (k - 1), 1)], iter(())),
        ))
    if is_twice_odd_prime(f):
        p = f.factors[1][0]
        rows.append((
            TABLE_ROW_TWICE_PRIME,
            _scaled_rows([(-(p - 1), 1), (-1, p - 1), (1, p - 1), (p - 1, 1)], iter(())),
        ))
    if n % 2 and r == 2 and is_square_free(f):
        p, q = f.primes
        rows.append((
            TABLE_ROW_TWO_ODD_PRIMES,
            _scaled_rows([(1, phi), (-(p - 1), q - 1), (-(q - 1), p - 1), (phi, 1)], iter(())),
        ))

    if is_square_free(f) and n % 2 == 0:
        rows.append((
            TABLE_ROW_SQUARE_FREE_EVEN,
            _scaled_rows(
                [(-1, phi), (1, phi)],
                chain.from_iterable(((b, phi // b), (-b, phi // b)) for b, _ in subsets),
            ),
        ))
    elif is_square_free(f) and n > 1:
        rows.append((
            TABLE_ROW_SQUARE_FREE_ODD,
            _scaled_rows(
                [((-1) ** r, phi)],
                (((-1) ** (r + t) * b, phi // b) for b, t in subsets),
            ),
        ))
    elif not is_square_free(f):
        scale = n // radical(f)
        if n % 2 == 0:
            rows.append((
                TABLE_ROW_EVEN_NOT_SQUARE_FREE,
                _scaled_rows(
                    [(0, n - radical(f)), (-scale, phi), (scale, phi)],
                    chain.from_iterable(
                        ((scale * b, phi // b), (-scale * b, phi // b)) for b, _ in subsets
                    ),
                ),
            ))
        else:
            rows.append((
                TABLE_ROW_ODD_NOT_SQUARE_FREE,
                _scaled_rows(
                    [(0, n - radical(f)), ((-1) ** r * scale, phi)],
                    (((-1) ** (r + t) * b * scale, phi // b) for b, t in subsets),
                ),
            ))
    return rows


def printed_table_rows(n: int) -> list[TableRowCheck]:
    """Every printed table row whose hypothesis covers n, evaluated and checked.

    A row is consistent when its multiplicities sum to n and its pairs equal
    the spectrum derived from c_n(i).
    """
    check_positive(n, "printed_table_rows")
    derived = unitary_spectrum(n).pairs
    checks = []
    for row, pairs in _printed_rows(n):
        total = sum(m for _, m in pairs)
        checks.append(
            TableRowCheck(
                row=row,
                pairs=pairs,
                multiplicity_total=total,
                sums_to_n=total == n,
                matches_derived=pairs == derived,
            )
        )
    return checks


def table_row_consistent(n: int, row: str) -> bool:
    """Consistency of a single named row at n.

    Raises:
        InvalidArgumentError: the row's hypothesis does not cover n
    """
    for check in printed_table_rows(n):
        if check.row == row:
            return check.consistent
    raise InvalidArgumentError(f"table row '{row}' does not apply to n={n}")


# ============================================================================
# Exact matrix oracles
# ============================================================================

def _to_domain_matrix(m: np.ndarray) -> DomainMatrix:
    rows = [[ZZ(int(v)) for v in row] for row in m.tolist()]
    return DomainMatrix(rows, m.shape, ZZ)


def _interpolation_nodes(k: int) -> list[int]:
    """0, 1, -1, 2, -2, ... (k nodes)."""
    nodes = [0]
    for step in count(1):
        if len(nodes) >= k:
            break
        nodes.extend((step, -step))
    return nodes[:k]


def oracle_determinant(g: DenseGraph) -> int:
    """Exact det A by fraction-free elimination.

    Raises:
        GuardExceededError: n above the configured ceiling
    """
    if g.n > settings.oracle_det_max_n:
        raise GuardExceededError("oracle_determinant", g.n, settings.oracle_det_max_n)
    start = time.perf_counter()
    det = int(_to_domain_matrix(g.int_matrix()).det())
    log_oracle_call("oracle_determinant", g.n, int((time.perf_counter() - start) * 1000))
    return det


def oracle_char_poly(g: DenseGraph) -> IntPoly:
    """det(xI - A) evaluated at n + 1 integer nodes and interpolated over QQ.

    Raises:
        GuardExceededError: n above the configured ceiling
        NonIntegralQuotientError: interpolation produced a non-integer coefficient
    """
    n = g.n
    if n > settings.oracle_charpoly_max_n:
        raise GuardExceededError("oracle_char_poly", n, settings.oracle_charpoly_max_n)
    start = time.perf_counter()

    a = g.int_matrix()
    identity = np.eye(n, dtype=np.int64)
    nodes = _interpolation_nodes(n + 1)
    values = [int(_to_domain_matrix(x * identity - a).det()) for x in nodes]

    vandermonde = DomainMatrix(
        [[QQ(x) ** j for j in range(n + 1)] for x in nodes], (n + 1, n + 1), QQ
    )
    rhs = DomainMatrix([[QQ(v)] for v in values], (n + 1, 1), QQ)
    solution = vandermonde.lu_solve(rhs).to_Matrix()

    coeffs = []
    for c in solution:
        if c.q != 1:
            raise NonIntegralQuotientError(f"oracle_char_poly: non-integral coefficient {c}")
        coeffs.append(int(c))
    log_oracle_call("oracle_char_poly", n, int((time.perf_counter() - start) * 1000))
    return IntPoly(coeffs=tuple(coeffs))


def evaluate_at_matrix(p: IntPoly, g: DenseGraph) -> DomainMatrix:
    """p(A) by Horner's rule over exact integers."""
    n = g.n
    a = _to_domain_matrix(g.int_matrix())
    result = DomainMatrix.zeros((n, n), ZZ).to_dense()
    for c in reversed(p.coeffs):
        result = result.matmul(a) + DomainMatrix.diag([ZZ(c)] * n, ZZ)
    return result


def annihilates(p: IntPoly, g: DenseGraph) -> bool:
    """p(A) is the zero matrix."""
    return bool(evaluate_at_matrix(p, g).is_zero_matrix)


def distinct_root_count(p: IntPoly) -> int:
    """Degree of the square-free part; for a char poly, the distinct eigenvalue count."""
    return int(p.to_sympy().sqf_part().degree())


def is_strongly_regular_spectral(g: DenseGraph, char_poly: IntPoly | None = None) -> bool:
    """Connected, regular and exactly three distinct eigenvalues."""
    if not g.is_regular() or not bfs_all_pairs(g).connected:
        return False
    poly = oracle_char_poly(g) if char_poly is None else char_poly
    return distinct_root_count(poly) == 3
