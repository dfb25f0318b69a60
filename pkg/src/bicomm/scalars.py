"""Exact scalar arithmetic over the rationals or a prime field.

A :class:`Field` instance interprets plain Python values as field elements:
``fractions.Fraction`` for the rationals and canonical residues ``0..p-1``
(plain ints) for a prime field.  All operations are exact; no floating
point is involved anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, InvalidField


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """The rationals (``characteristic == 0``) or F_p for a word-size prime."""

    __slots__ = ("characteristic",)

    def __init__(self, characteristic: int):
        if characteristic != 0:
            if characteristic >= 1 << 31:
                raise InvalidField(f"modulus too large: {characteristic}")
            if not _is_prime(characteristic):
                raise InvalidField(f"modulus is not prime: {characteristic}")
        self.characteristic = characteristic

    @classmethod
    def rationals(cls) -> "Field":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "Field":
        if p == 0:
            raise InvalidField("prime field needs a nonzero modulus")
        return cls(p)

    @classmethod
    def parse(cls, spec: str) -> "Field":
        """Parse a field tag: ``q`` for the rationals, ``fp:P`` for F_P."""
        spec = spec.strip()
        if spec == "q":
            return cls.rationals()
        if spec.startswith("fp:"):
            try:
                p = int(spec[3:])
            except ValueError:
                raise InvalidField(f"bad field spec: {spec!r}") from None
            return cls.prime(p)
        raise InvalidField(f"bad field spec: {spec!r}")

    @property
    def is_rationals(self) -> bool:
        return self.characteristic == 0

    @property
    def zero(self):
        return Fraction(0) if self.is_rationals else 0

    @property
    def one(self):
        return Fraction(1) if self.is_rationals else 1

    def from_int(self, n: int):
        if self.is_rationals:
            return Fraction(n)
        return n % self.characteristic

    def add(self, a, b):
        if self.is_rationals:
            return a + b
        return (a + b) % self.characteristic

    def sub(self, a, b):
        if self.is_rationals:
            return a - b
        return (a - b) % self.characteristic

    def neg(self, a):
        if self.is_rationals:
            return -a
        return (-a) % self.characteristic

    def mul(self, a, b):
        if self.is_rationals:
            return a * b
        return (a * b) % self.characteristic

    def inv(self, a):
        if not a:
            raise DivisionByZero("cannot invert zero")
        if self.is_rationals:
            return 1 / a
        return pow(a, self.characteristic - 2, self.characteristic)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def parse_scalar(self, text: str):
        """Parse ``a`` or ``a/b`` with an optional leading sign, ``b > 0``."""
        text = text.strip()
        sign = 1
        if text.startswith(("+", "-")):
            sign = -1 if text[0] == "-" else 1
            text = text[1:].strip()
        if "/" in text:
            num_s, den_s = text.split("/", 1)
            num, den = int(num_s), int(den_s)
            if den <= 0:
                raise InvalidField(f"denominator must be positive: {text!r}")
            if self.is_rationals:
                return Fraction(sign * num, den)
            return self.div(self.from_int(sign * num), self.from_int(den))
        return self.from_int(sign * int(text))

    def format_scalar(self, a) -> str:
        return str(a)

    def check_same(self, other: "Field") -> None:
        if self != other:
            raise FieldMismatch(f"field mismatch: {self} vs {other}")

    def __eq__(self, other):
        return isinstance(other, Field) and self.characteristic == other.characteristic

    def __hash__(self):
        return hash(("Field", self.characteristic))

    def __repr__(self):
        return "Field(q)" if self.is_rationals else f"Field(fp:{self.characteristic})"

    def spec_string(self) -> str:
        return "q" if self.is_rationals else f"fp:{self.characteristic}"
