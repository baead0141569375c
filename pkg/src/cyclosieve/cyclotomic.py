"""Exact arithmetic in Z[zeta_m] = Z[q]/(Phi_m(q)) for root-of-unity evaluation.

Floating point is never used: the sieving checks demand exact integer
equality between fixed-point counts and polynomial evaluations.
"""

from __future__ import annotations

from functools import cache
from typing import Optional

from .qpolys import IntPolynomial


@cache
def cyclotomic_polynomial(m: int) -> IntPolynomial:
    """Phi_m(q), computed as (q^m - 1) / prod of the lower cyclotomics."""
    if m < 1:
        raise ValueError("cyclotomic polynomials are indexed by m >= 1")
    numerator = IntPolynomial((-1,) + (0,) * (m - 1) + (1,))
    for d in range(1, m):
        if m % d == 0:
            numerator = numerator.exact_div(cyclotomic_polynomial(d))
    return numerator


class CyclotomicElement:
    """An element of Z[q]/(Phi_m(q)), stored as its reduced residue."""

    __slots__ = ("order", "residue")

    def __init__(self, order: int, residue: IntPolynomial):
        if order < 1:
            raise ValueError("order must be positive")
        phi = cyclotomic_polynomial(order)
        if residue.degree >= phi.degree:
            residue = residue.divmod(phi)[1]
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "residue", residue)

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicElement is immutable")

    @classmethod
    def from_int(cls, order: int, value: int) -> "CyclotomicElement":
        return cls(order, IntPolynomial((value,)))

    def _coerce(self, other) -> "CyclotomicElement":
        if isinstance(other, CyclotomicElement):
            if other.order != self.order:
                raise ValueError(f"mixed orders {self.order} and {other.order}")
            return other
        if isinstance(other, int):
            return CyclotomicElement.from_int(self.order, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclotomicElement(self.order, self.residue + other.residue)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement(self.order, -self.residue)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclotomicElement(self.order, self.residue - other.residue)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclotomicElement(self.order, self.residue * other.residue)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers are not supported")
        result = CyclotomicElement.from_int(self.order, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def is_zero(self) -> bool:
        return self.residue.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CyclotomicElement.from_int(self.order, other)
        return (
            isinstance(other, CyclotomicElement)
            and self.order == other.order
            and self.residue == other.residue
        )

    def __hash__(self) -> int:
        return hash((self.order, self.residue))

    def __repr__(self) -> str:
        body = repr(self.residue).replace("q", f"z{self.order}")
        return f"({body})"


def zeta(m: int, d: int = 1) -> CyclotomicElement:
    """zeta_m ** d as an exact ring element."""
    return CyclotomicElement(m, IntPolynomial.monomial(d % m if m > 1 else 0))


def eval_at_root(x: IntPolynomial, m: int, d: int) -> CyclotomicElement:
    """X(zeta_m^d): substitute q -> q^(d mod m) and reduce modulo Phi_m."""
    if m < 1:
        raise ValueError("order must be positive")
    exponents: dict[int, int] = {}
    for e, c in enumerate(x.coeffs):
        if c:
            key = (e * d) % m
            exponents[key] = exponents.get(key, 0) + c
    if not exponents:
        return CyclotomicElement.from_int(m, 0)
    coeffs = [0] * (max(exponents) + 1)
    for e, c in exponents.items():
        coeffs[e] = c
    return CyclotomicElement(m, IntPolynomial(coeffs))


def as_integer(x: CyclotomicElement) -> Optional[int]:
    """The integer value of a constant residue, or None if non-rational."""
    if x.residue.is_zero():
        return 0
    if x.residue.degree == 0:
        return x.residue.coefficient(0)
    return None
