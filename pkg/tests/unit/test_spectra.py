"""
Unit Tests - Spectra, Determinants and Matrix Oracles.
"""

from math import prod

import numpy as np
import pytest

from src.domain.constants import (
    TABLE_ROW_EVEN_NOT_SQUARE_FREE,
    TABLE_ROW_PRIME,
    TABLE_ROW_PRIME_POWER,
    TABLE_ROW_SQUARE_FREE_ODD,
    TABLE_ROW_TWICE_PRIME,
)
from src.domain.exceptions import GuardExceededError, InvalidArgumentError
from src.domain.models import ConnectionSet, IntPoly
from src.services.arith import divisors, euler_phi
from src.services.graphs import gcd_connection_set, materialize, unitary_graph
from src.services.polynomials import poly_from_roots
from src.services.spectra import (
    annihilates,
    characteristic_polynomial,
    circulant_spectrum,
    determinant_closed,
    distinct_root_count,
    eigenvalues_divide_phi,
    expected_minpoly_degree,
    is_strongly_regular_spectral,
    minimal_polynomial,
    nullity,
    oracle_char_poly,
    oracle_determinant,
    printed_table_rows,
    table_row_consistent,
    unitary_spectrum,
)


# ============================================================================
# Spectrum
# ============================================================================

@pytest.mark.unit
@pytest.mark.parametrize(
    "n, pairs",
    [
        (1, ((1, 1),)),
        (6, ((-2, 1), (-1, 2), (1, 2), (2, 1))),
        (7, ((-1, 6), (6, 1))),
        (9, ((-3, 2), (0, 6), (6, 1))),
        (12, ((-4, 1), (-2, 2), (0, 6), (2, 2), (4, 1))),
    ],
)
def test_unitary_spectrum(n, pairs):
    """Test closed-form spectra."""
    assert unitary_spectrum(n).pairs == pairs


@pytest.mark.unit
def test_spectrum_invariants():
    """Test trace, largest eigenvalue and nullity."""
    for n in range(2, 201):
        spectrum = unitary_spectrum(n)
        assert sum(m for _, m in spectrum.pairs) == n
        assert spectrum.trace == 0
        assert spectrum.largest == (euler_phi(n), 1)
        assert spectrum.multiplicity(0) == nullity(n)


@pytest.mark.unit
def test_spectrum_json_shape():
    """Test spectrum JSON shape."""
    assert unitary_spectrum(12).model_dump_json() == (
        '{"n":12,"pairs":[[-4,1],[-2,2],[0,6],[2,2],[4,1]]}'
    )


@pytest.mark.unit
def test_spectrum_guard(monkeypatch):
    """Test closed-form guard."""
    from src.config import settings

    monkeypatch.setattr(settings, "closed_form_max_n", 100)
    with pytest.raises(GuardExceededError):
        unitary_spectrum(101)


@pytest.mark.unit
def test_nonzero_eigenvalues_divide_phi():
    """Test nonzero eigenvalues divide phi(n)."""
    assert all(eigenvalues_divide_phi(n) for n in range(1, 201))


# ============================================================================
# Polynomials
# ============================================================================

@pytest.mark.unit
def test_char_poly_small():
    """Test small characteristic polynomials."""
    assert characteristic_polynomial(3).coeffs == (-2, -3, 0, 1)
    assert characteristic_polynomial(6).coeffs == (-4, 0, 9, 0, -6, 0, 1)


@pytest.mark.unit
def test_char_poly_matches_oracle(k3):
    """Test characteristic polynomial against the exact oracle."""
    assert oracle_char_poly(k3) == characteristic_polynomial(3)
    assert oracle_char_poly(unitary_graph(12)) == characteristic_polynomial(12)


@pytest.mark.unit
def test_minimal_polynomial_examples():
    """Test minimal polynomial examples."""
    assert minimal_polynomial(9) == poly_from_roots([(0, 1), (6, 1), (-3, 1)])
    assert minimal_polynomial(12).degree == 5


@pytest.mark.unit
def test_minimal_polynomial_degree():
    """Test minimal polynomial degree."""
    for n in range(1, 201):
        assert minimal_polynomial(n).degree == expected_minpoly_degree(n), n


@pytest.mark.unit
def test_minimal_polynomial_annihilates():
    """Test minimal polynomial annihilates A."""
    for n in (6, 9, 12, 16, 30):
        g = unitary_graph(n)
        assert annihilates(minimal_polynomial(n), g)
        assert not annihilates(IntPoly.monomial(1), g)


# ============================================================================
# Determinant and nullity
# ============================================================================

@pytest.mark.unit
@pytest.mark.parametrize(
    "n, det",
    [
        (1, 1),
        (2, -1),
        (6, -4),
        (7, 6),
        (10, -16),
        (12, 0),
        (15, 2048),
        (21, 128 * 216),
    ],
)
def test_determinant_closed(n, det):
    """Test closed-form determinants."""
    assert determinant_closed(n) == det


@pytest.mark.unit
def test_determinant_is_product_of_eigenvalues():
    """Test determinant equals the eigenvalue product."""
    for n in range(1, 301):
        expected = prod(v**m for v, m in unitary_spectrum(n).pairs)
        assert determinant_closed(n) == expected, n


@pytest.mark.unit
def test_determinant_matches_oracle():
    """Test closed-form determinant against Bareiss."""
    for n in range(2, 41):
        assert oracle_determinant(unitary_graph(n)) == determinant_closed(n), n


@pytest.mark.unit
def test_nullity():
    """Test nullity is n - gamma(n)."""
    assert nullity(12) == 6
    assert nullity(30) == 0
    assert nullity(64) == 62


@pytest.mark.unit
def test_oracle_guard(monkeypatch):
    """Test oracle guards."""
    from src.config import settings

    monkeypatch.setattr(settings, "oracle_det_max_n", 8)
    with pytest.raises(GuardExceededError):
        oracle_determinant(unitary_graph(9))


# ============================================================================
# Printed spectrum table
# ============================================================================

@pytest.mark.unit
def test_table_rows_square_free_consistent():
    """Test square-free table rows are consistent."""
    for n in (6, 10, 15, 30, 105):
        rows = printed_table_rows(n)
        assert rows
        assert all(row.consistent for row in rows), n


@pytest.mark.unit
def test_table_row_n12_does_not_sum_to_n():
    """Test the n = 12 printed row overcounts."""
    (row,) = printed_table_rows(12)
    assert row.row == TABLE_ROW_EVEN_NOT_SQUARE_FREE
    assert row.multiplicity_total == 18
    assert not row.consistent


@pytest.mark.unit
def test_table_rows_prime_power():
    """Test prime-power table rows."""
    rows = {row.row: row for row in printed_table_rows(9)}
    assert rows[TABLE_ROW_PRIME_POWER].consistent
    assert any(not row.consistent for row in rows.values())


@pytest.mark.unit
def test_table_row_consistent_lookup():
    """Test lookup of a named table row."""
    assert table_row_consistent(7, TABLE_ROW_PRIME)
    assert table_row_consistent(6, TABLE_ROW_TWICE_PRIME)
    assert table_row_consistent(15, TABLE_ROW_SQUARE_FREE_ODD)
    with pytest.raises(InvalidArgumentError):
        table_row_consistent(7, TABLE_ROW_TWICE_PRIME)


# ============================================================================
# Integral circulants and strong regularity
# ============================================================================

@pytest.mark.unit
def test_circulant_spectrum_matches_oracle():
    """Test integral circulant spectra against the oracle."""
    rng = np.random.default_rng(7)

    for _ in range(20):
        n = int(rng.integers(4, 25))
        proper = divisors(n)[1:]
        chosen = [d for d in proper if rng.random() < 0.5] or [n]
        cs = gcd_connection_set(n, chosen)
        spectrum = circulant_spectrum(cs)
        assert poly_from_roots(spectrum.pairs) == oracle_char_poly(materialize(cs))


@pytest.mark.unit
def test_circulant_spectrum_rejects_non_orbit_union():
    """Test non-integral circulants are rejected."""
    with pytest.raises(InvalidArgumentError):
        circulant_spectrum(ConnectionSet(n=8, elems=frozenset({1, 7})))


@pytest.mark.unit
def test_strongly_regular_spectral(c6, petersen):
    """Test spectral strong-regularity."""
    assert is_strongly_regular_spectral(unitary_graph(4))
    assert is_strongly_regular_spectral(unitary_graph(9))
    assert is_strongly_regular_spectral(petersen)
    assert not is_strongly_regular_spectral(c6)
    assert not is_strongly_regular_spectral(unitary_graph(7))


@pytest.mark.unit
def test_distinct_root_count():
    """Test distinct root count of a characteristic polynomial."""
    assert distinct_root_count(characteristic_polynomial(12)) == 5
