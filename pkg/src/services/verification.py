"""
Verification Service - Unitary Cayley.

Runs every cross-check for a single n (closed form against exact oracle,
characterization against brute force) and sweeps a range of n into a
SweepReport. Printed-table inconsistencies are errata, never failures.
"""

from concurrent.futures import ProcessPoolExecutor

from src.config import settings
from src.domain.exceptions import GuardExceededError, InvalidArgumentError
from src.domain.models import (
    CaseResult,
    CheckProperty,
    CheckVerdict,
    IntPoly,
    SweepReport,
    TableRowCheck,
)
from src.domain.models.report import tally
from src.services.arith import (
    euler_phi,
    factorize,
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
from src.services.coherent import (
    adjacency_algebra_dimension,
    dimension_chain,
    hoffman_check,
    power_expansion_check,
    span_membership,
    verify_pattern_polynomial,
)
from src.services.graphs import (
    bfs_all_pairs,
    is_bipartite,
    is_complete,
    is_complete_bipartite,
    is_crown,
    is_distance_regular,
    is_strongly_regular_combinatorial,
    unitary_graph,
)
from src.services.polynomials import (
    cyclotomic,
    is_singular_circulant,
    poly_divmod,
    poly_gcd,
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
    eigenvalues_divide_phi,
    expected_minpoly_degree,
    is_strongly_regular_spectral,
    minimal_polynomial,
    nullity,
    oracle_char_poly,
    oracle_determinant,
    printed_table_rows,
    unitary_spectrum,
)
from src.utils.logger import log_check_result, log_erratum, logger


# ============================================================================
# Characterizations
# ============================================================================

def predicted(n: int, prop: CheckProperty) -> bool:
    """Closed-form answer for X_n."""
    f = factorize(n)
    predictions = {
        CheckProperty.DISTANCE_REGULAR: is_prime_power(f) or is_twice_odd_prime(f),
        CheckProperty.STRONGLY_REGULAR: is_prime_power(f) and not is_prime(f),
        CheckProperty.BIPARTITE: n % 2 == 0,
        CheckProperty.COMPLETE: is_prime(f),
        CheckProperty.CROWN: is_twice_odd_prime(f),
        CheckProperty.SINGULAR: not is_square_free(f),
        CheckProperty.INTEGRAL: True,
    }
    return predictions[prop]


def check_property(n: int, prop: CheckProperty) -> CheckVerdict:
    """Brute-force verdict on the materialized X_n next to its characterization.

    Raises:
        GuardExceededError: n above the configured ceiling
        InvalidArgumentError: n < 2
    """
    if n > settings.check_max_n:
        raise GuardExceededError(f"check {prop.value}", n, settings.check_max_n)
    if n < 2:
        raise InvalidArgumentError(f"check: n must be >= 2, got {n}")
    g = unitary_graph(n)
    brute = {
        CheckProperty.DISTANCE_REGULAR: lambda: bool(is_distance_regular(g)),
        CheckProperty.STRONGLY_REGULAR: lambda: bool(is_strongly_regular_combinatorial(g)),
        CheckProperty.BIPARTITE: lambda: is_bipartite(g),
        CheckProperty.COMPLETE: lambda: is_complete(g),
        CheckProperty.CROWN: lambda: is_crown(g),
        CheckProperty.SINGULAR: lambda: oracle_determinant(g) == 0,
        CheckProperty.INTEGRAL: lambda: span_membership(g),
    }[prop]()
    verdict = CheckVerdict(
        n=n,
        property=prop,
        brute_force=brute,
        predicted=predicted(n, prop),
        characterization=prop.characterization,
    )
    log_check_result(n, prop.value, verdict.agree, brute_force=brute)
    return verdict


# ============================================================================
# Single case
# ============================================================================

def _ramanujan_checks(n: int) -> tuple[bool, bool, bool]:
    agree = all(
        ramanujan_closed(n, m) == ramanujan_direct(n, m) == ramanujan_divisor_sum(n, m)
        for m in range(n)
    )

    shifted = poly_sub(representer(n, n), IntPoly.constant(moebius(n)))
    _, remainder = poly_divmod(shifted, cyclotomic(n))
    divides = remainder.is_zero

    f = factorize(n)
    r_n = ramanujan_poly(n)
    gamma = radical(f)
    if not is_square_free(f):
        units_expected = 0
    elif n % 2:
        units_expected = euler_phi(f)
    else:
        units_expected = 2 * euler_phi(n // 2)
    poly_ok = (
        r_n.nonzero_count() == gamma
        and r_n.degree == n - n // gamma
        and unit_coefficient_count(r_n) == units_expected
    )
    return agree, divides, poly_ok


def _spectral_corollaries(n: int) -> bool:
    """Eigenvalue facts read off the closed-form spectrum."""
    f = factorize(n)
    spectrum = unitary_spectrum(n)
    nonzero = sum(m for v, m in spectrum.pairs if v)
    ok = eigenvalues_divide_phi(n) and nonzero == radical(f)
    ok = ok and distinct_eigenvalue_count(n) == expected_minpoly_degree(n)
    if not is_square_free(f):
        ok = ok and spectrum.multiplicity(1) == 0 and spectrum.multiplicity(-1) == 0
    if n >= 3:
        ok = ok and spectrum.largest == (euler_phi(f), 1)
    return ok and is_singular_circulant(representer(n, n), n) == (not is_square_free(f))


def _erratum_detail(n: int, rows: list[TableRowCheck]) -> str | None:
    bad = [r for r in rows if not r.consistent]
    if not bad:
        return None
    details = []
    for row in bad:
        detail = f"row '{row.row}' multiplicities sum to {row.multiplicity_total}, expected {n}"
        log_erratum(n, row.row, detail)
        details.append(detail)
    return "; ".join(details)


def run_case(n: int) -> CaseResult:
    """Every cross-check for X_n; checks above a guard are recorded as None."""
    f = factorize(n)
    square_free = is_square_free(f)
    ramanujan_agree, cyclotomic_divides, ramanujan_poly_ok = _ramanujan_checks(n)

    charpoly = characteristic_polynomial(n)
    minpoly = minimal_polynomial(n)
    minpoly_degree_ok = minpoly.degree == expected_minpoly_degree(n)
    kernel_degree = poly_gcd(representer(n, n), IntPoly.x_pow_minus_one(n)).degree
    nullity_ok = nullity(n) == unitary_spectrum(n).multiplicity(0) == kernel_degree
    spectral_ok = _spectral_corollaries(n)

    spectrum_match: bool | None = None
    det_match: bool | None = None
    minpoly_annihilates: bool | None = None
    structure_ok: bool | None = None
    dr_brute: bool | None = None
    srg_combinatorial: bool | None = None
    srg_spectral: bool | None = None
    biggs_ok: bool | None = None
    dims: tuple[int, int, int] | None = None
    pattern_pass: bool | None = None
    power_ok: bool | None = None
    chain_ok: bool | None = None

    if n >= 2:
        g = unitary_graph(n)
        if n <= settings.oracle_charpoly_max_n:
            oracle_poly = oracle_char_poly(g)
            spectrum_match = oracle_poly == charpoly
            srg_spectral = is_strongly_regular_spectral(g, char_poly=oracle_poly)
        if n <= settings.oracle_det_max_n:
            closed = determinant_closed(n)
            det_match = closed == oracle_determinant(g) == (-1) ** n * charpoly.coefficient(0)
        if n <= settings.check_max_n:
            _, remainder = poly_divmod(charpoly, minpoly)
            minpoly_annihilates = remainder.is_zero and annihilates(minpoly, g)

            structure_ok = (
                is_bipartite(g) == (n % 2 == 0)
                and is_complete(g) == is_prime(f)
                and is_complete_bipartite(g) == (f.primes == (2,))
                and is_crown(g) == is_twice_odd_prime(f)
                and hoffman_check(g)
            )
            dr_brute = bool(is_distance_regular(g))
            srg_combinatorial = bool(is_strongly_regular_combinatorial(g))

            diameter = bfs_all_pairs(g).diameter or 0
            dim_a = adjacency_algebra_dimension(g)
            biggs_ok = diameter + 1 <= dim_a <= n and dim_a == distinct_eigenvalue_count(n)
            chain = dimension_chain(n)
            chain_ok = chain.monotone and chain.equalities_hold
        if n <= settings.wl_max_n:
            report = verify_pattern_polynomial(n)
            dims = (report.dim_closed_form, report.dim_wl, report.dim_spectral)
            pattern_pass = report.passed
        if n <= settings.power_check_max_n:
            power_ok = power_expansion_check(n)

    dr_predicted = predicted(n, CheckProperty.DISTANCE_REGULAR) if n >= 2 else True
    rows = printed_table_rows(n)
    erratum_detail = _erratum_detail(n, rows)

    checks: dict[str, bool | None] = {
        "ramanujan_agree": ramanujan_agree,
        "cyclotomic_divides": cyclotomic_divides,
        "ramanujan_poly": ramanujan_poly_ok,
        "spectrum_match": spectrum_match,
        "det_match": det_match,
        "minpoly_annihilates": minpoly_annihilates,
        "minpoly_degree": minpoly_degree_ok,
        "nullity": nullity_ok,
        "spectral_corollaries": spectral_ok,
        "structure": structure_ok,
        "dr_characterization": None if dr_brute is None else dr_brute == dr_predicted,
        "srg_agreement": (
            None if srg_combinatorial is None or srg_spectral is None
            else srg_combinatorial == srg_spectral
        ),
        "biggs_bound": biggs_ok,
        "pattern_polynomial": pattern_pass,
        "power_expansion": power_ok,
        "dimension_chain": chain_ok,
    }
    for name, passed in checks.items():
        log_check_result(n, name, passed)
    failures = tuple(name for name, passed in checks.items() if passed is False)

    return CaseResult(
        n=n,
        square_free=square_free,
        ramanujan_agree=ramanujan_agree,
        cyclotomic_divides=cyclotomic_divides,
        ramanujan_poly_ok=ramanujan_poly_ok,
        spectrum_match=spectrum_match,
        det_match=det_match,
        minpoly_annihilates=minpoly_annihilates,
        minpoly_degree_ok=minpoly_degree_ok,
        nullity_ok=nullity_ok,
        spectral_corollaries_ok=spectral_ok,
        structure_ok=structure_ok,
        dr_brute=dr_brute,
        dr_predicted=dr_predicted,
        srg_combinatorial=srg_combinatorial,
        srg_spectral=srg_spectral,
        biggs_bound_ok=biggs_ok,
        dims=dims,
        pattern_polynomial_pass=pattern_pass,
        power_expansion_ok=power_ok,
        dimension_chain_ok=chain_ok,
        table_rows=tuple(rows),
        erratum=erratum_detail is not None,
        erratum_detail=erratum_detail,
        failures=failures,
    )


# ============================================================================
# Sweep
# ============================================================================

def sweep_ceiling(max_n: int | None = None) -> int:
    """Effective upper bound for ``verify``; raising it past the default is logged.

    Raises:
        GuardExceededError: ``max_n`` above the hard ceiling
    """
    if max_n is None:
        return settings.sweep_default_max_n
    if max_n > settings.sweep_hard_max_n:
        raise GuardExceededError("verify --max-n", max_n, settings.sweep_hard_max_n)
    if max_n > settings.sweep_default_max_n:
        logger.warning(
            "sweep_ceiling_raised", max_n=max_n, default=settings.sweep_default_max_n
        )
    return max_n


def run_sweep(
    n_min: int, n_max: int, max_n: int | None = None, workers: int = 1
) -> SweepReport:
    """run_case for every n in [n_min, n_max], merged in ascending order.

    Raises:
        InvalidArgumentError: empty or non-positive range
        GuardExceededError: n_max above the effective ceiling
    """
    if n_min < 1 or n_max < n_min:
        raise InvalidArgumentError(f"verify: invalid range [{n_min}, {n_max}]")
    ceiling = sweep_ceiling(max_n)
    if n_max > ceiling:
        raise GuardExceededError("verify", n_max, ceiling)

    logger.info("sweep_started", n_min=n_min, n_max=n_max, workers=workers)
    ns = range(n_min, n_max + 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            cases = list(pool.map(run_case, ns))
    else:
        cases = [run_case(n) for n in ns]

    for case in cases:
        if not case.passed:
            logger.error("sweep_case_failed", n=case.n, failures=list(case.failures))

    summary = tally(cases)
    logger.info(
        "sweep_finished",
        total=summary.total,
        passed=summary.passed,
        failed=summary.failed,
        errata=summary.errata,
    )
    return SweepReport(n_range=(n_min, n_max), per_n=tuple(cases), summary=summary)
