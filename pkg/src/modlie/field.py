"""Exact scalar arithmetic over a prime field F_p or the rationals Q.

Elements are plain Python values: residues ``int`` in ``[0, p)`` for F_p and
reduced :class:`fractions.Fraction` for Q. A :class:`FieldSpec` owns the arithmetic,
so matrices and polynomials only store raw values.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Literal

from .errors import FieldDivisionByZeroError, MixedFieldsError, UnsupportedFieldError

if TYPE_CHECKING:
    from collections.abc import Iterator

FieldElement = int | Fraction

ArithOp = Literal["add", "sub", "mul", "div", "neg", "inv"]

# p * p must fit a signed 64-bit machine word
MAX_PRIME = 2**31

_SCALAR_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


@dataclass(frozen=True)
class FieldSpec:
    """A coefficient field: F_p when ``characteristic`` is a prime p, Q when it is 0."""

    characteristic: int

    def __post_init__(self) -> None:
        """Reject characteristics that are neither 0 nor a supported prime."""
        p = self.characteristic
        if p == 0:
            return
        if p < 0 or p >= MAX_PRIME:
            msg = f"prime field characteristic must be in [2, 2^31), got {p}"
            raise ValueError(msg)
        # Lazy import: sympy is slow to import and only needed when a prime field is built.
        from sympy import isprime  # noqa: PLC0415

        if not isprime(p):
            msg = f"F_p needs a prime p, got {p}"
            raise ValueError(msg)

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        """The prime field F_p."""
        return cls(p)

    @classmethod
    def rationals(cls) -> FieldSpec:
        """The rational numbers."""
        return cls(0)

    @property
    def is_prime_field(self) -> bool:
        """Whether this is F_p."""
        return self.characteristic > 0

    @property
    def label(self) -> str:
        """Short display name (``F_5`` or ``Q``)."""
        return f"F_{self.characteristic}" if self.is_prime_field else "Q"

    def __str__(self) -> str:
        return self.label

    # --- Elements ---

    @property
    def zero(self) -> FieldElement:
        """Additive identity."""
        return 0 if self.is_prime_field else Fraction(0)

    @property
    def one(self) -> FieldElement:
        """Multiplicative identity."""
        return 1 if self.is_prime_field else Fraction(1)

    def __call__(self, value: int | Fraction | str) -> FieldElement:
        """Coerce an integer, fraction or scalar string into this field."""
        if isinstance(value, str):
            return self.parse_scalar(value)
        if self.is_prime_field:
            if isinstance(value, Fraction):
                return self.div(value.numerator % self.characteristic, self(value.denominator))
            return value % self.characteristic
        return Fraction(value)

    def contains(self, a: object) -> bool:
        """Whether ``a`` is a canonical element of this field."""
        if self.is_prime_field:
            return type(a) is int and 0 <= a < self.characteristic
        return isinstance(a, Fraction)

    def check(self, a: object) -> FieldElement:
        """Return ``a`` unchanged or raise :class:`MixedFieldsError`."""
        if not self.contains(a):
            raise MixedFieldsError(self.label, a)
        return a  # type: ignore[return-value]

    def elements(self) -> Iterator[FieldElement]:
        """Iterate all of F_p in residue order."""
        if not self.is_prime_field:
            raise UnsupportedFieldError("element enumeration", self.label)
        return iter(range(self.characteristic))

    def is_zero(self, a: FieldElement) -> bool:
        """Whether ``a`` is zero."""
        return a == 0

    def sort_key(self, a: FieldElement) -> FieldElement:
        """Ordering used for sorted eigenvalue lists (residue or numeric value)."""
        return a

    # --- Arithmetic (operands are assumed to belong to the field) ---

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        """a + b."""
        if self.is_prime_field:
            return (a + b) % self.characteristic
        return a + b

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        """a - b."""
        if self.is_prime_field:
            return (a - b) % self.characteristic
        return a - b

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        """a * b."""
        if self.is_prime_field:
            return (a * b) % self.characteristic
        return a * b

    def neg(self, a: FieldElement) -> FieldElement:
        """-a."""
        if self.is_prime_field:
            return -a % self.characteristic
        return -a

    def inv(self, a: FieldElement) -> FieldElement:
        """Multiplicative inverse of a nonzero element."""
        if a == 0:
            raise FieldDivisionByZeroError(self.label)
        if self.is_prime_field:
            return pow(int(a), -1, self.characteristic)
        return 1 / Fraction(a)

    def div(self, a: FieldElement, b: FieldElement) -> FieldElement:
        """a / b for nonzero b."""
        return self.mul(a, self.inv(b))

    def power(self, a: FieldElement, k: int) -> FieldElement:
        """a ** k; negative k goes through the inverse."""
        if k < 0:
            return self.power(self.inv(a), -k)
        if self.is_prime_field:
            return pow(int(a), k, self.characteristic)
        return Fraction(a) ** k

    def from_int(self, n: int) -> FieldElement:
        """Image of the integer n under Z -> field."""
        return n % self.characteristic if self.is_prime_field else Fraction(n)

    # --- Text ---

    def parse_scalar(self, text: str) -> FieldElement:
        """Parse ``-3`` or ``2/5``; over F_p the fraction means a * b^-1."""
        match = _SCALAR_RE.match(text.strip())
        if match is None:
            msg = f"not a scalar: {text!r}"
            raise ValueError(msg)
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) else 1
        if self.from_int(denominator) == 0:
            raise FieldDivisionByZeroError(self.label)
        return self.div(self.from_int(numerator), self.from_int(denominator))

    def format(self, a: FieldElement) -> str:
        """Render an element in the scalar syntax accepted by :meth:`parse_scalar`."""
        if self.is_prime_field:
            return str(a)
        value = Fraction(a)
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"


def field_arith(
    spec: FieldSpec,
    op: ArithOp,
    a: FieldElement,
    b: FieldElement | None = None,
) -> FieldElement:
    """Checked field arithmetic: both operands must belong to ``spec``."""
    spec.check(a)
    if op == "neg":
        return spec.neg(a)
    if op == "inv":
        return spec.inv(a)
    if b is None:
        msg = f"operation {op!r} needs two operands"
        raise ValueError(msg)
    spec.check(b)
    binary = {"add": spec.add, "sub": spec.sub, "mul": spec.mul, "div": spec.div}
    if op not in binary:
        msg = f"unknown field operation {op!r}"
        raise ValueError(msg)
    return binary[op](a, b)


def frobenius(spec: FieldSpec, a: FieldElement) -> FieldElement:
    """a ** p over F_p; the identity map since F_p is fixed by Frobenius."""
    if not spec.is_prime_field:
        raise UnsupportedFieldError("frobenius", spec.label)
    return spec.power(spec.check(a), spec.characteristic)
