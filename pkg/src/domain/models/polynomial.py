"""
Polynomial Domain Model - Unitary Cayley.

IntPoly is a dense integer polynomial; index i holds the coefficient of x^i.
Ring operations live in ``src.services.polynomials``; this model only stores,
evaluates and converts.
"""

from collections.abc import Iterable, Sequence

from pydantic import BaseModel, ConfigDict, Field, field_validator
from sympy import Poly, Symbol

X = Symbol("x")


class IntPoly(BaseModel):
    """Dense integer-coefficient polynomial, trailing zeros trimmed.

    The zero polynomial is the empty sequence and has degree -1.
    """

    model_config = ConfigDict(frozen=True)

    coeffs: tuple[int, ...] = Field(default=())

    @field_validator("coeffs", mode="before")
    @classmethod
    def trim_trailing_zeros(cls, v: Iterable[int]) -> tuple[int, ...]:
        values = [int(c) for c in v]
        while values and values[-1] == 0:
            values.pop()
        return tuple(values)

    # -------------------------------------------------------------------------
    # Constructors
    # -------------------------------------------------------------------------
    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(coeffs=())

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls(coeffs=(c,))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "IntPoly":
        """coefficient * x^degree."""
        return cls(coeffs=(0,) * degree + (coefficient,))

    @classmethod
    def x_pow_minus_one(cls, n: int) -> "IntPoly":
        """x^n - 1."""
        return cls(coeffs=(-1,) + (0,) * (n - 1) + (1,))

    @classmethod
    def from_sympy(cls, p: Poly) -> "IntPoly":
        """Convert a sympy Poly whose coefficients are integers."""
        return cls(coeffs=tuple(int(c) for c in reversed(p.all_coeffs())))

    def to_sympy(self) -> Poly:
        """sympy Poly over ZZ (highest degree first, as sympy expects)."""
        return Poly.from_list(list(reversed(self.coeffs)) or [0], X, domain="ZZ")

    # -------------------------------------------------------------------------
    # Queries
    # -------------------------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    def nonzero_count(self) -> int:
        return sum(1 for c in self.coeffs if c != 0)

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x: int) -> int:
        """Horner evaluation at an integer point."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return str(self.to_sympy().as_expr()).replace("**", "^")


def format_factored(roots: Sequence[tuple[int, int]]) -> str:
    """Render prod (x - root)^m as ``x^6*(x-4)*(x+2)^2``.

    The zero root comes first, the rest in descending order.
    """
    ordered = sorted(roots, key=lambda rm: (rm[0] != 0, -rm[0]))
    parts = []
    for root, mult in ordered:
        if root == 0:
            base = "x"
        elif root > 0:
            base = f"(x-{root})"
        else:
            base = f"(x+{-root})"
        parts.append(base if mult == 1 else f"{base}^{mult}")
    return "*".join(parts) if parts else "1"
