"""
Unit Tests - Integer Polynomials.

IntPoly storage, ring operations, gcd, cyclotomic and circulant polynomials.
"""

import pytest

from src.domain.exceptions import InvalidArgumentError, NonIntegralQuotientError, ZeroDivisorError
from src.domain.models import IntPoly, format_factored
from src.services.arith import divisors, euler_phi, moebius, radical
from src.services.polynomials import (
    cyclotomic,
    is_singular_circulant,
    poly_add,
    poly_divmod,
    poly_from_roots,
    poly_gcd,
    poly_mul,
    poly_sub,
    ramanujan_poly,
    representer,
    unit_coefficient_count,
)


def P(*coeffs: int) -> IntPoly:
    """Polynomial from coefficients, constant term first."""
    return IntPoly(coeffs=coeffs)


# ============================================================================
# IntPoly model
# ============================================================================

@pytest.mark.unit
def test_trailing_zeros_trimmed():
    """Test trailing zero coefficients are trimmed."""
    p = P(1, 2, 0, 0)
    assert p.coeffs == (1, 2)
    assert p.degree == 1


@pytest.mark.unit
def test_zero_polynomial():
    """Test the zero polynomial."""
    z = IntPoly.zero()
    assert z.is_zero
    assert z.degree == -1
    assert P(0, 0) == z


@pytest.mark.unit
def test_evaluate_and_render():
    """Test evaluation and string rendering."""
    p = P(-1, 0, 1)
    assert p(3) == 8
    assert str(p) == "x^2 - 1"
    assert p.is_monic


@pytest.mark.unit
def test_format_factored():
    """Test factored rendering order."""
    assert format_factored([(-3, 1), (0, 1), (6, 1)]) == "x*(x-6)*(x+3)"
    assert format_factored([(-4, 1), (0, 6), (2, 2)]) == "x^6*(x-2)^2*(x+4)"
    assert format_factored([]) == "1"


# ============================================================================
# Ring operations
# ============================================================================

@pytest.mark.unit
def test_mul_and_add():
    """Test ring operations."""
    assert poly_mul(P(1, 1), P(-1, 1)) == P(-1, 0, 1)
    assert poly_add(P(3, 1), IntPoly.zero()) == P(3, 1)
    assert poly_sub(P(1, 1), P(1, 1)).is_zero


@pytest.mark.unit
def test_divmod_exact():
    """Test exact division."""
    q, r = poly_divmod(P(-1, 0, 1), P(-1, 1))
    assert q == P(1, 1)
    assert r.is_zero


@pytest.mark.unit
def test_divmod_with_remainder():
    """Test division with remainder."""
    q, r = poly_divmod(P(1, 0, 1), P(-1, 1))
    assert q == P(1, 1)
    assert r == P(2)


@pytest.mark.unit
def test_divmod_by_zero():
    """Test division by the zero polynomial."""
    with pytest.raises(ZeroDivisorError):
        poly_divmod(P(1, 1), IntPoly.zero())


@pytest.mark.unit
def test_divmod_non_integral_quotient():
    """Test non-integral quotient is rejected."""
    with pytest.raises(NonIntegralQuotientError):
        poly_divmod(P(0, 1), P(0, 2))


@pytest.mark.unit
def test_gcd():
    """Test primitive gcd with positive leading coefficient."""
    assert poly_gcd(P(-1, 0, 1), P(-1, 1)) == P(-1, 1)
    assert poly_gcd(P(2, 4), IntPoly.zero()) == P(1, 2)
    assert poly_gcd(P(-2, -2), P(-1, 0, 1)) == P(1, 1)


@pytest.mark.unit
def test_gcd_of_two_zeros_rejected():
    """Test gcd of two zero polynomials."""
    with pytest.raises(InvalidArgumentError):
        poly_gcd(IntPoly.zero(), IntPoly.zero())


@pytest.mark.unit
def test_from_roots():
    """Test building polynomials from roots."""
    assert poly_from_roots([(1, 1), (-1, 1)]) == P(-1, 0, 1)
    assert poly_from_roots([]) == P(1)


# ============================================================================
# Cyclotomic polynomials
# ============================================================================

@pytest.mark.unit
@pytest.mark.parametrize(
    "n, coeffs",
    [
        (1, (-1, 1)),
        (2, (1, 1)),
        (4, (1, 0, 1)),
        (6, (1, -1, 1)),
        (12, (1, 0, -1, 0, 1)),
    ],
)
def test_cyclotomic_small(n, coeffs):
    """Test small cyclotomic polynomials."""
    assert cyclotomic(n).coeffs == coeffs


@pytest.mark.unit
def test_cyclotomic_product_is_x_pow_n_minus_one():
    """Test product of Phi_d over d | n is x^n - 1."""
    for n in range(1, 201):
        acc = IntPoly.constant(1)
        for d in divisors(n):
            acc = poly_mul(acc, cyclotomic(d))
        assert acc == IntPoly.x_pow_minus_one(n)
        assert cyclotomic(n).degree == euler_phi(n)


@pytest.mark.unit
def test_cyclotomic_divides_shifted_representer():
    """Test Phi_n divides the shifted representer."""
    for n in range(2, 201):
        shifted = poly_sub(representer(n, n), IntPoly.constant(moebius(n)))
        _, r = poly_divmod(shifted, cyclotomic(n))
        assert r.is_zero, n


# ============================================================================
# Circulant polynomials
# ============================================================================

@pytest.mark.unit
def test_representer_examples():
    """Test representer polynomials."""
    assert representer(6, 2) == IntPoly.monomial(3)
    assert representer(7, 1) == P(1)
    assert representer(6, 6) == P(0, 1, 0, 0, 0, 1)


@pytest.mark.unit
def test_representer_row_sum_is_phi():
    """Test representer has phi(d) terms."""
    for n in (12, 30, 36):
        for d in divisors(n):
            assert representer(n, d)(1) == euler_phi(d)


@pytest.mark.unit
def test_representer_rejects_non_divisor():
    """Test representer rejects a non-divisor."""
    with pytest.raises(InvalidArgumentError):
        representer(12, 5)


@pytest.mark.unit
def test_ramanujan_poly_small():
    """Test Ramanujan polynomial coefficients."""
    assert ramanujan_poly(4) == P(2, 0, -2)


@pytest.mark.unit
def test_ramanujan_poly_structure():
    """Test Ramanujan polynomial support and unit coefficients."""
    for n in range(2, 201):
        r_n = ramanujan_poly(n)
        gamma = radical(n)
        assert r_n.nonzero_count() == gamma
        assert r_n.degree == n - n // gamma
        if gamma != n:
            assert unit_coefficient_count(r_n) == 0
        elif n % 2:
            assert unit_coefficient_count(r_n) == euler_phi(n)
        else:
            assert unit_coefficient_count(r_n) == 2 * euler_phi(n // 2)


@pytest.mark.unit
@pytest.mark.parametrize("n, singular", [(12, True), (6, False), (18, True), (30, False)])
def test_is_singular_circulant(n, singular):
    """Test circulant singularity from the gcd with x^n - 1."""
    assert is_singular_circulant(representer(n, n), n) is singular


@pytest.mark.unit
def test_constant_never_singular():
    """Test nonzero constants are never singular."""
    assert is_singular_circulant(P(1), 12) is False


@pytest.mark.unit
def test_kernel_degree_is_nullity():
    """Test gcd degree equals the nullity."""
    for n in range(2, 101):
        g = poly_gcd(representer(n, n), IntPoly.x_pow_minus_one(n))
        assert g.degree == n - radical(n)
