"""
Arithmetic Domain Models - Unitary Cayley.

Factorization is the root of every closed form: phi, mu, the radical and the
divisor lattice are all read off the prime-power list.
"""

from math import prod

from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy import isprime


class Factorization(BaseModel):
    """A positive integer with its canonical prime-power decomposition.

    ``factors`` is ordered by strictly increasing prime; n = 1 has no factors.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    factors: tuple[tuple[int, int], ...] = Field(default=())

    @model_validator(mode="after")
    def validate_decomposition(self) -> "Factorization":
        """Primes increase, exponents are positive and the product is n."""
        previous = 1
        for p, e in self.factors:
            if p <= previous or not isprime(p):
                raise ValueError(f"factor {p} is not an increasing prime")
            if e < 1:
                raise ValueError(f"exponent of {p} must be >= 1")
            previous = p
        if prod(p**e for p, e in self.factors) != self.n:
            raise ValueError(f"factors do not multiply to {self.n}")
        return self

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def odd_primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors if p != 2)

    @property
    def omega(self) -> int:
        """Number of distinct prime divisors."""
        return len(self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


class DStarElement(BaseModel):
    """A product of t distinct values p_j - 1 over odd primes p_j dividing n."""

    model_config = ConfigDict(frozen=True)

    value: int = Field(..., ge=1)
    t: int = Field(..., ge=1)
