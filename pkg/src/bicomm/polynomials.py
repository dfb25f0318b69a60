"""Sparse polynomials over the y/z variables with exact coefficients."""

from __future__ import annotations

from .monomials import ONE, Monomial
from .orders import weight_key
from .scalars import Field


class Poly:
    """A polynomial in K[Y, Z], stored as a dict Monomial -> coefficient.

    Zero coefficients are never stored.  Instances are treated as
    immutable by convention: all operations return new polynomials.
    """

    __slots__ = ("field", "terms")

    def __init__(self, field: Field, terms=None):
        self.field = field
        self.terms = {}
        if terms:
            for m, c in dict(terms).items():
                if c:
                    self.terms[m] = c

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field)

    @classmethod
    def monomial(cls, field: Field, m: Monomial, coeff=None) -> "Poly":
        c = field.one if coeff is None else coeff
        return cls(field, {m: c})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_mixed_only(self) -> bool:
        return all(m.is_mixed for m in self.terms)

    def degree(self) -> int:
        return max((m.degree for m in self.terms), default=0)

    def max_index(self) -> int:
        return max((m.max_index for m in self.terms), default=0)

    def leading(self):
        """Greatest (monomial, coefficient) pair under the weight order."""
        m = max(self.terms, key=weight_key)
        return m, self.terms[m]

    def sorted_terms(self) -> list:
        """Terms as (monomial, coefficient), weight-descending."""
        return [(m, self.terms[m]) for m in sorted(self.terms, key=weight_key, reverse=True)]

    def add(self, other: "Poly") -> "Poly":
        self.field.check_same(other.field)
        acc = dict(self.terms)
        add = self.field.add
        for m, c in other.terms.items():
            v = add(acc.get(m, self.field.zero), c)
            if v:
                acc[m] = v
            else:
                acc.pop(m, None)
        out = Poly(self.field)
        out.terms = acc
        return out

    def add_scaled(self, coeff, other: "Poly") -> "Poly":
        self.field.check_same(other.field)
        if not coeff:
            return self
        acc = dict(self.terms)
        add, mul = self.field.add, self.field.mul
        for m, c in other.terms.items():
            v = add(acc.get(m, self.field.zero), mul(coeff, c))
            if v:
                acc[m] = v
            else:
                acc.pop(m, None)
        out = Poly(self.field)
        out.terms = acc
        return out

    def sub(self, other: "Poly") -> "Poly":
        return self.add_scaled(self.field.neg(self.field.one), other)

    def neg(self) -> "Poly":
        neg = self.field.neg
        out = Poly(self.field)
        out.terms = {m: neg(c) for m, c in self.terms.items()}
        return out

    def scale(self, coeff) -> "Poly":
        if not coeff:
            return Poly.zero(self.field)
        mul = self.field.mul
        out = Poly(self.field)
        out.terms = {m: mul(coeff, c) for m, c in self.terms.items()}
        return out

    def mul_monomial(self, m: Monomial, coeff=None) -> "Poly":
        c = self.field.one if coeff is None else coeff
        if not c:
            return Poly.zero(self.field)
        mul = self.field.mul
        out = Poly(self.field)
        out.terms = {mm * m: mul(c, cc) for mm, cc in self.terms.items()}
        return out

    def mul(self, other: "Poly") -> "Poly":
        self.field.check_same(other.field)
        acc = {}
        add, mul, zero = self.field.add, self.field.mul, self.field.zero
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                v = add(acc.get(m, zero), mul(c1, c2))
                if v:
                    acc[m] = v
                else:
                    acc.pop(m, None)
        out = Poly(self.field)
        out.terms = acc
        return out

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        _, c = self.leading()
        return self.scale(self.field.inv(c))

    def apply_index_map(self, phi: dict) -> "Poly":
        acc = {}
        add, zero = self.field.add, self.field.zero
        for m, c in self.terms.items():
            mm = m.apply_index_map(phi)
            v = add(acc.get(mm, zero), c)
            if v:
                acc[mm] = v
            else:
                acc.pop(mm, None)
        out = Poly(self.field)
        out.terms = acc
        return out

    def coefficient(self, m: Monomial):
        return self.terms.get(m, self.field.zero)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def __str__(self):
        if self.is_zero:
            return "0"
        return format_terms(self.field, self.sorted_terms())

    def __repr__(self):
        return f"Poly({self})"


def format_terms(field: Field, pairs) -> str:
    """Render (monomial-string-able, coefficient) pairs as a signed sum.

    Over the rationals a negative coefficient is shown with a binary
    minus; over a prime field residues are printed as-is.
    """
    chunks = []
    one = field.one
    for m, c in pairs:
        mono = str(m)
        if field.is_rationals and c < 0:
            sign = "-"
            c = -c
        else:
            sign = "+"
        if c == one and mono != "1":
            body = mono
        elif mono == "1":
            body = field.format_scalar(c)
        else:
            body = f"{field.format_scalar(c)}*{mono}"
        chunks.append((sign, body))
    first_sign, first_body = chunks[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in chunks[1:]:
        text += f" {sign} {body}"
    return text
