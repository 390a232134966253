"""
Polynomial Service - Unitary Cayley.

Exact integer/rational polynomial arithmetic on IntPoly: ring operations,
rational Euclid gcd, cyclotomic polynomials by exact division, representer
polynomials of the gcd circulants and the Ramanujan-coefficient polynomial.

Arithmetic is delegated to sympy ``Poly`` over ZZ (or QQ for division and gcd).
"""

from collections.abc import Iterable
from functools import lru_cache

from sympy import QQ, Poly

from src.domain.exceptions import InvalidArgumentError, NonIntegralQuotientError, ZeroDivisorError
from src.domain.models import IntPoly
from src.domain.models.polynomial import X
from src.services.arith import check_positive, divisors, ramanujan_closed, units


def _over_qq(p: IntPoly) -> Poly:
    return p.to_sympy().set_domain(QQ)


def _integral(p: Poly, operation: str) -> IntPoly:
    coeffs = p.all_coeffs()
    if any(c.q != 1 for c in coeffs):
        raise NonIntegralQuotientError(f"{operation}: non-integral coefficient in {p.as_expr()}")
    return IntPoly(coeffs=tuple(int(c) for c in reversed(coeffs)))


# ============================================================================
# Ring operations
# ============================================================================

def poly_add(a: IntPoly, b: IntPoly) -> IntPoly:
    return IntPoly.from_sympy(a.to_sympy() + b.to_sympy())


def poly_sub(a: IntPoly, b: IntPoly) -> IntPoly:
    return IntPoly.from_sympy(a.to_sympy() - b.to_sympy())


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    return IntPoly.from_sympy(a.to_sympy() * b.to_sympy())


def poly_divmod(a: IntPoly, b: IntPoly) -> tuple[IntPoly, IntPoly]:
    """(q, r) with a = q*b + r and deg r < deg b, computed over QQ.

    Raises:
        ZeroDivisorError: b is the zero polynomial
        NonIntegralQuotientError: q or r has a non-integer coefficient
    """
    if b.is_zero:
        raise ZeroDivisorError("poly_divmod: division by the zero polynomial")
    q, r = _over_qq(a).div(_over_qq(b))
    return _integral(q, "poly_divmod"), _integral(r, "poly_divmod")


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Rational Euclid gcd scaled to primitive integer form, positive leading coefficient.

    gcd(p, 0) is the primitive part of p.
    """
    if a.is_zero and b.is_zero:
        raise InvalidArgumentError("poly_gcd: both arguments are zero")
    g = _over_qq(a).gcd(_over_qq(b))
    _, g_int = g.clear_denoms(convert=True)
    _, primitive = g_int.primitive()
    result = IntPoly.from_sympy(primitive)
    if result.leading < 0:
        result = IntPoly(coeffs=tuple(-c for c in result.coeffs))
    return result


def poly_from_roots(roots: Iterable[tuple[int, int]]) -> IntPoly:
    """prod (x - root)^multiplicity, monic."""
    acc = Poly(1, X, domain="ZZ")
    for root, mult in roots:
        acc *= Poly(X - root, X, domain="ZZ") ** mult
    return IntPoly.from_sympy(acc)


# ============================================================================
# Cyclotomic polynomials
# ============================================================================

@lru_cache(maxsize=1024)
def cyclotomic(n: int) -> IntPoly:
    """Phi_n(x) = (x^n - 1) / prod over proper divisors d of Phi_d(x).

    Example:
        >>> cyclotomic(12).coeffs
        (1, 0, -1, 0, 1)
    """
    check_positive(n, "cyclotomic")
    denominator = IntPoly.constant(1)
    for d in divisors(n)[:-1]:
        denominator = poly_mul(denominator, cyclotomic(d))
    q, r = poly_divmod(IntPoly.x_pow_minus_one(n), denominator)
    if not r.is_zero:
        raise ArithmeticError(f"cyclotomic({n}): inexact division")
    return q


# ============================================================================
# Circulant polynomials
# ============================================================================

def representer(n: int, d: int) -> IntPoly:
    """p_{A_d}(x) = sum over k in U_d of x^(nk/d mod n), the first row of A_d.

    Raises:
        InvalidArgumentError: d does not divide n
    """
    check_positive(n, "representer")
    if d < 1 or n % d:
        raise InvalidArgumentError(f"representer: {d} does not divide {n}")
    exponents = {(n // d) * k % n for k in units(d)}
    return IntPoly(coeffs=tuple(1 if i in exponents else 0 for i in range(n)))


def ramanujan_poly(n: int) -> IntPoly:
    """R_n(x) = c_n(0) + c_n(1) x + ... + c_n(n-1) x^(n-1)."""
    check_positive(n, "ramanujan_poly")
    return IntPoly(coeffs=tuple(ramanujan_closed(n, i) for i in range(n)))


def is_singular_circulant(p: IntPoly, n: int) -> bool:
    """True iff gcd(p(x), x^n - 1) is non-constant, i.e. p vanishes at some n-th root of unity."""
    check_positive(n, "is_singular_circulant")
    return poly_gcd(p, IntPoly.x_pow_minus_one(n)).degree >= 1


def unit_coefficient_count(p: IntPoly) -> int:
    """Number of coefficients equal to +1 or -1."""
    return sum(1 for c in p.coeffs if abs(c) == 1)
