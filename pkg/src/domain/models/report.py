"""
Verification Report Models - Unitary Cayley.

A SweepReport is the machine-readable result of running every cross-check
over a range of n. Printed-table errata are reported separately from genuine
closed-form/oracle mismatches.
"""

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from src.domain.models.enums import CheckProperty
from src.domain.models.spectrum import TableRowCheck


class CheckVerdict(BaseModel):
    """Brute-force verdict against the closed-form prediction for one property."""

    model_config = ConfigDict(frozen=True)

    n: int
    property: CheckProperty
    brute_force: bool
    predicted: bool
    characterization: str

    @computed_field  # type: ignore[prop-decorator]
    @property
    def agree(self) -> bool:
        return self.brute_force == self.predicted

    def render(self) -> str:
        bf = str(self.brute_force).lower()
        pred = str(self.predicted).lower()
        verdict = "AGREE" if self.agree else "DISAGREE"
        return (
            f"{self.property.value}: {bf}\n"
            f"brute-force: {bf}; characterization ({self.characterization}): {pred}; {verdict}"
        )


class CaseResult(BaseModel):
    """All cross-checks for a single n. ``None`` marks a check skipped by a guard."""

    model_config = ConfigDict(frozen=True)

    n: int
    square_free: bool

    # arith / polynomials
    ramanujan_agree: bool
    cyclotomic_divides: bool
    ramanujan_poly_ok: bool

    # spectra
    spectrum_match: bool | None
    det_match: bool | None
    minpoly_annihilates: bool | None
    minpoly_degree_ok: bool
    nullity_ok: bool
    spectral_corollaries_ok: bool

    # graphs
    structure_ok: bool | None
    dr_brute: bool | None
    dr_predicted: bool
    srg_combinatorial: bool | None
    srg_spectral: bool | None
    biggs_bound_ok: bool | None

    # coherent
    dims: tuple[int, int, int] | None
    pattern_polynomial_pass: bool | None
    power_expansion_ok: bool | None
    dimension_chain_ok: bool | None = None

    # printed table
    table_rows: tuple[TableRowCheck, ...]
    erratum: bool
    erratum_detail: str | None = None

    failures: tuple[str, ...] = ()

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return not self.failures


class SweepSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    total: int
    passed: int
    failed: int
    errata: int


class SweepReport(BaseModel):
    """Per-n results over [n_min, n_max] with tallies."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    n_range: tuple[int, int] = Field(..., alias="range")
    per_n: tuple[CaseResult, ...]
    summary: SweepSummary

    @model_validator(mode="after")
    def validate_coverage(self) -> "SweepReport":
        n_min, n_max = self.n_range
        if [c.n for c in self.per_n] != list(range(n_min, n_max + 1)):
            raise ValueError("per_n must cover every n in range exactly once, ascending")
        expected = tally(self.per_n)
        if expected != self.summary:
            raise ValueError("summary does not match per_n tallies")
        return self

    @property
    def ok(self) -> bool:
        return self.summary.failed == 0

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)


def tally(cases: tuple[CaseResult, ...] | list[CaseResult]) -> SweepSummary:
    return SweepSummary(
        total=len(cases),
        passed=sum(1 for c in cases if c.passed),
        failed=sum(1 for c in cases if not c.passed),
        errata=sum(1 for c in cases if c.erratum),
    )
