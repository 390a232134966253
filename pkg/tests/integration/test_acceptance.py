"""
Integration Tests - Full-Range Cross-Checks.

Every closed form against its exact oracle over the desk-scale ranges, and
the verification sweep end to end.
"""

import pytest

from src.domain.models import IntPoly, SweepReport
from src.services.arith import (
    euler_phi,
    is_prime,
    is_prime_power,
    is_square_free,
    is_twice_odd_prime,
    moebius,
    radical,
    ramanujan_closed,
    ramanujan_direct,
    ramanujan_divisor_sum,
)
from src.services.coherent import algebra_basis, wl_closure
from src.services.graphs import (
    is_distance_regular,
    is_strongly_regular_combinatorial,
    unitary_graph,
)
from src.services.polynomials import (
    cyclotomic,
    poly_divmod,
    poly_sub,
    ramanujan_poly,
    representer,
    unit_coefficient_count,
)
from src.services.spectra import (
    annihilates,
    characteristic_polynomial,
    determinant_closed,
    distinct_eigenvalue_count,
    expected_minpoly_degree,
    is_strongly_regular_spectral,
    minimal_polynomial,
    oracle_char_poly,
    unitary_spectrum,
)
from src.services.verification import run_sweep


@pytest.fixture(scope="module")
def sweep_2_64() -> SweepReport:
    return run_sweep(2, 64)


# ============================================================================
# Arithmetic and polynomials
# ============================================================================

@pytest.mark.integration
def test_ramanujan_triple_agreement():
    """Test Ramanujan sums agree three ways for n <= 200."""
    for n in range(1, 201):
        for m in range(n):
            closed = ramanujan_closed(n, m)
            assert ramanujan_direct(n, m) == closed, (n, m)
            assert ramanujan_divisor_sum(n, m) == closed, (n, m)


@pytest.mark.integration
def test_ramanujan_poly_structure():
    """Test Ramanujan polynomial structure for n <= 200."""
    for n in range(2, 201):
        r_n = ramanujan_poly(n)
        gamma = radical(n)
        assert r_n.nonzero_count() == gamma, n
        assert r_n.degree == n - n // gamma, n
        if not is_square_free(n):
            expected = 0
        elif n % 2:
            expected = euler_phi(n)
        else:
            expected = 2 * euler_phi(n // 2)
        assert unit_coefficient_count(r_n) == expected, n


@pytest.mark.integration
def test_cyclotomic_divisibility():
    """Test Phi_n divides the shifted representer for n <= 200."""
    for n in range(2, 201):
        shifted = poly_sub(representer(n, n), IntPoly.constant(moebius(n)))
        _, remainder = poly_divmod(shifted, cyclotomic(n))
        assert remainder.is_zero, n


# ============================================================================
# Spectra
# ============================================================================

@pytest.mark.integration
@pytest.mark.slow
def test_char_poly_oracle():
    """Test characteristic polynomials against the oracle for n <= 64."""
    for n in range(2, 65):
        assert oracle_char_poly(unitary_graph(n)) == characteristic_polynomial(n), n


@pytest.mark.integration
def test_spectrum_fixtures():
    """Test spectrum and determinant fixtures."""
    for p in (2, 3, 5, 7, 11, 13):
        assert unitary_spectrum(p).pairs == tuple(sorted({(-1, p - 1), (p - 1, 1)}))
    for p, k in ((2, 2), (2, 3), (3, 2), (5, 2)):
        n = p**k
        expected = sorted([(-(p ** (k - 1)), p - 1), (0, n - p), ((p - 1) * p ** (k - 1), 1)])
        assert unitary_spectrum(n).pairs == tuple(expected), n
    assert determinant_closed(2) == -1
    for p in (3, 5, 7):
        assert determinant_closed(2 * p) == -((p - 1) ** 2)
    for p, q in ((3, 5), (3, 7)):
        assert determinant_closed(p * q) == (p - 1) ** q * (q - 1) ** p


@pytest.mark.integration
@pytest.mark.slow
def test_minimal_polynomial_annihilates():
    """Test minimal polynomials annihilate A for n <= 48."""
    for n in range(2, 49):
        minpoly = minimal_polynomial(n)
        assert minpoly.degree == expected_minpoly_degree(n), n
        assert annihilates(minpoly, unitary_graph(n)), n


# ============================================================================
# Structure
# ============================================================================

@pytest.mark.integration
@pytest.mark.slow
def test_distance_regular_characterization():
    """Test DR and SRG characterizations for n <= 64."""
    for n in range(2, 65):
        g = unitary_graph(n)
        assert bool(is_distance_regular(g)) == (is_prime_power(n) or is_twice_odd_prime(n)), n
        combinatorial = bool(is_strongly_regular_combinatorial(g))
        assert combinatorial == is_strongly_regular_spectral(g), n
        assert combinatorial == (is_prime_power(n) and not is_prime(n)), n


@pytest.mark.integration
@pytest.mark.slow
def test_srg_tests_agree_on_random_circulants(random_circulants):
    """Test SRG tests agree on random circulants."""
    for g in random_circulants:
        assert bool(is_strongly_regular_combinatorial(g)) == is_strongly_regular_spectral(g)


@pytest.mark.integration
@pytest.mark.slow
def test_pattern_polynomial():
    """Test pattern-polynomial dimensions for n <= 48."""
    for n in range(2, 49):
        basis = algebra_basis(n)
        assert wl_closure(unitary_graph(n)).num_colors == len(basis), n
        assert len(basis) == distinct_eigenvalue_count(n), n


# ============================================================================
# Sweep
# ============================================================================

@pytest.mark.integration
@pytest.mark.slow
def test_sweep_passes(sweep_2_64):
    """Test the 2..64 sweep passes."""
    assert sweep_2_64.ok
    assert len(sweep_2_64.per_n) == 63
    assert [c.n for c in sweep_2_64.per_n] == list(range(2, 65))


@pytest.mark.integration
@pytest.mark.slow
def test_sweep_flags_every_non_square_free_n(sweep_2_64):
    """Test every non-square-free n is flagged as an erratum."""
    for case in sweep_2_64.per_n:
        assert case.erratum == (not is_square_free(case.n)), case.n
        assert case.spectrum_match, case.n


@pytest.mark.integration
@pytest.mark.slow
def test_sweep_n6_dimensions(sweep_2_64):
    """Test sweep dimensions for n = 6."""
    case = sweep_2_64.per_n[4]
    assert case.n == 6
    assert case.dims == (4, 4, 4)
    assert case.dr_brute


@pytest.mark.integration
@pytest.mark.slow
def test_sweep_report_round_trip(sweep_2_64):
    """Test sweep report JSON round trip."""
    text = sweep_2_64.to_json()
    assert SweepReport.model_validate_json(text).to_json() == text


@pytest.mark.integration
def test_parallel_sweep_is_deterministic():
    """Test parallel and serial sweeps agree."""
    serial = run_sweep(2, 16)
    parallel = run_sweep(2, 16, workers=2)
    assert parallel.to_json() == serial.to_json()
