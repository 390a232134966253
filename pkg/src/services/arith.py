"""
Arithmetic Service - Unitary Cayley.

Exact number-theoretic kernel: factorization, multiplicative functions and
Ramanujan sums computed three independent ways (closed form, divisor sum and
the floating-point root-of-unity definition used as oracle).

Every function is pure; memoization is read-mostly and thread-safe.
"""

from collections.abc import Iterator
from functools import lru_cache
from itertools import combinations, product
from math import gcd, prod

import numpy as np
from sympy import factorint

from src.config import settings
from src.domain.exceptions import (
    GuardExceededError,
    InvalidArgumentError,
    ToleranceExceededError,
)
from src.domain.models import DStarElement, Factorization
from src.utils.logger import logger


# ============================================================================
# Factorization
# ============================================================================

@lru_cache(maxsize=4096)
def factorize(n: int) -> Factorization:
    """Canonical prime-power decomposition of n >= 1.

    Raises:
        InvalidArgumentError: n < 1

    Example:
        >>> factorize(45).factors
        ((3, 2), (5, 1))
    """
    if n < 1:
        raise InvalidArgumentError(f"factorize: n must be >= 1, got {n}")
    factors = tuple(sorted(factorint(n).items())) if n > 1 else ()
    return Factorization(n=n, factors=factors)


def as_factorization(value: Factorization | int) -> Factorization:
    return value if isinstance(value, Factorization) else factorize(value)


def check_positive(n: int, operation: str) -> None:
    if n < 1:
        raise InvalidArgumentError(f"{operation}: n must be >= 1, got {n}")


# ============================================================================
# Multiplicative functions
# ============================================================================

def euler_phi(f: Factorization | int) -> int:
    """phi(n) = prod p^(e-1) (p-1); phi(1) = 1."""
    f = as_factorization(f)
    return prod(p ** (e - 1) * (p - 1) for p, e in f.factors)


def moebius(f: Factorization | int) -> int:
    """0 if a square divides n, else (-1)^(number of primes)."""
    f = as_factorization(f)
    if any(e >= 2 for _, e in f.factors):
        return 0
    return -1 if f.omega % 2 else 1


def radical(f: Factorization | int) -> int:
    """gamma(n): product of the distinct primes dividing n."""
    return prod(as_factorization(f).primes)


def divisors(f: Factorization | int) -> list[int]:
    """All positive divisors, ascending."""
    f = as_factorization(f)
    powers = [[p**k for k in range(e + 1)] for p, e in f.factors]
    return sorted(prod(combo) for combo in product(*powers))


def tau(f: Factorization | int) -> int:
    """Number of positive divisors."""
    return prod(e + 1 for _, e in as_factorization(f).factors)


def is_square_free(f: Factorization | int) -> bool:
    return all(e == 1 for _, e in as_factorization(f).factors)


def is_prime(f: Factorization | int) -> bool:
    f = as_factorization(f)
    return len(f.factors) == 1 and f.factors[0][1] == 1


def is_prime_power(f: Factorization | int) -> bool:
    """n = p^k with k >= 1."""
    return len(as_factorization(f).factors) == 1


def is_twice_odd_prime(f: Factorization | int) -> bool:
    """n = 2p with p an odd prime."""
    f = as_factorization(f)
    return len(f.factors) == 2 and f.factors[0] == (2, 1) and f.factors[1][1] == 1


def units(n: int) -> list[int]:
    """U_n = {1 <= k <= n : gcd(k, n) = 1}; U_1 = {1}."""
    check_positive(n, "units")
    return [k for k in range(1, n + 1) if gcd(k, n) == 1]


# ============================================================================
# Ramanujan sums
# ============================================================================

def _check_args(n: int, m: int, operation: str) -> None:
    check_positive(n, operation)
    if m < 0:
        raise InvalidArgumentError(f"{operation}: m must be >= 0, got {m}")


def ramanujan_closed(n: int, m: int) -> int:
    """c_n(m) = mu(n/d) phi(n) / phi(n/d) with d = gcd(m, n).

    m is reduced mod n first; gcd(0, n) = n gives c_n(0) = phi(n).
    """
    _check_args(n, m, "ramanujan_closed")
    d = gcd(m % n, n)
    return _closed_at_divisor(n, d)


@lru_cache(maxsize=65536)
def _closed_at_divisor(n: int, d: int) -> int:
    e = factorize(n // d)
    return moebius(e) * (euler_phi(n) // euler_phi(e))


def ramanujan_divisor_sum(n: int, m: int) -> int:
    """c_n(m) = sum over d | gcd(n, m) of mu(n/d) * d."""
    _check_args(n, m, "ramanujan_divisor_sum")
    g = gcd(m % n, n)
    return sum(moebius(n // d) * d for d in divisors(g))


def ramanujan_direct(n: int, m: int, tolerance: float | None = None) -> int:
    """Floating-point sum of (zeta_n^k)^m over k in U_n, rounded after a hard check.

    Independent oracle for the two exact forms.

    Raises:
        GuardExceededError: n above the configured ceiling
        ToleranceExceededError: imaginary part or rounding distance >= tolerance
    """
    _check_args(n, m, "ramanujan_direct")
    if n > settings.ramanujan_direct_max_n:
        raise GuardExceededError("ramanujan_direct", n, settings.ramanujan_direct_max_n)
    tol = settings.ramanujan_tolerance if tolerance is None else tolerance

    k = np.arange(1, n + 1, dtype=np.int64)
    k = k[np.gcd(k, n) == 1]
    # exponents reduced mod n keep every angle in [0, 2*pi)
    angles = 2.0 * np.pi * ((k * (m % n)) % n) / n
    total = complex(np.exp(1j * angles).sum())

    nearest = round(total.real)
    if abs(total.imag) >= tol or abs(total.real - nearest) >= tol:
        logger.error("ramanujan_direct_tolerance", n=n, m=m, value=str(total))
        raise ToleranceExceededError(
            f"c_{n}({m}) = {total} is not within {tol} of an integer"
        )
    return int(nearest)


# ============================================================================
# D* (products of p_j - 1 over odd primes)
# ============================================================================

def d_star_subsets(f: Factorization | int) -> Iterator[tuple[int, int]]:
    """(product, t) for every nonempty subset of {p_j - 1}, collisions kept."""
    a = [p - 1 for p in as_factorization(f).odd_primes]
    for t in range(1, len(a) + 1):
        for subset in combinations(a, t):
            yield prod(subset), t


def d_star(f: Factorization | int) -> list[DStarElement]:
    """D* with (value, t) deduplication, sorted by value then t.

    Two subsets with equal product but different t stay distinct.
    """
    unique = sorted(set(d_star_subsets(f)))
    return [DStarElement(value=b, t=t) for b, t in unique]
