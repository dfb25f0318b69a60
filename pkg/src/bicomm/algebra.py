"""Canonical forms in the free bicommutative algebra.

An algebra element is a linear part (a combination of the generators x_i)
plus a quadratic part living in the span of mixed monomials Y^a Z^b with
|a| >= 1 and |b| >= 1.  The product follows four rules:

    x_i * x_j         -> y_i z_j
    x_i * (Y^a Z^b)   -> y_i Y^a Z^b
    (Y^a Z^b) * x_j   -> Y^a Z^b z_j
    (Y^a Z^b)(Y^c Z^d) -> Y^(a+c) Z^(b+d)

Writing t(f) = sum c_i y_i + quad(f) and s(f) = sum c_i z_i + quad(f) for
f with linear coefficients c_i, every product collapses to the polynomial
identity f * g = t(f) s(g), which is how multiplication is implemented.
The square of the algebra is therefore commutative and associative, and
left/right multiplications by the generators act on it as multiplication
by y_i and z_j.
"""

from __future__ import annotations

from math import comb

from .errors import BadElement, FieldMismatch, InvalidIndexMap
from .monomials import Monomial
from .polynomials import Poly, format_terms
from .scalars import Field
from .terms import Leaf, NAPolynomial, NATerm


class BicommElement:
    """Canonical form: sparse linear part plus a mixed-monomial polynomial."""

    __slots__ = ("field", "lin", "quad")

    def __init__(self, field: Field, lin=None, quad: Poly | None = None):
        self.field = field
        self.lin = {}
        if lin:
            for i, c in dict(lin).items():
                if c:
                    if i < 1:
                        raise BadElement(f"bad generator index {i}")
                    self.lin[i] = c
        self.quad = quad if quad is not None else Poly.zero(field)
        if self.quad.field != field:
            raise FieldMismatch("quadratic part uses a different field")
        if not self.quad.is_mixed_only:
            raise BadElement("quadratic part contains a non-mixed monomial")

    @classmethod
    def zero(cls, field: Field) -> "BicommElement":
        return cls(field)

    @classmethod
    def generator(cls, field: Field, i: int) -> "BicommElement":
        return cls(field, {i: field.one})

    @classmethod
    def from_quad(cls, quad: Poly) -> "BicommElement":
        return cls(quad.field, None, quad)

    @property
    def is_zero(self) -> bool:
        return not self.lin and self.quad.is_zero

    @property
    def has_linear_part(self) -> bool:
        return bool(self.lin)

    def degree(self) -> int:
        if not self.quad.is_zero:
            return self.quad.degree()
        return 1 if self.lin else 0

    def indices(self) -> set:
        out = set(self.lin)
        for m in self.quad.terms:
            out |= m.indices()
        return out

    def max_index(self) -> int:
        return max(self.indices(), default=0)

    def t_poly(self) -> Poly:
        """Linear part as y-variables, plus the quadratic part."""
        terms = {Monomial([(i, 1)], []): c for i, c in self.lin.items()}
        return Poly(self.field, terms).add(self.quad)

    def s_poly(self) -> Poly:
        """Linear part as z-variables, plus the quadratic part."""
        terms = {Monomial([], [(i, 1)]): c for i, c in self.lin.items()}
        return Poly(self.field, terms).add(self.quad)

    def add_scaled(self, coeff, other: "BicommElement") -> "BicommElement":
        self.field.check_same(other.field)
        lin = dict(self.lin)
        for i, c in other.lin.items():
            v = self.field.add(lin.get(i, self.field.zero), self.field.mul(coeff, c))
            if v:
                lin[i] = v
            else:
                lin.pop(i, None)
        return BicommElement(self.field, lin, self.quad.add_scaled(coeff, other.quad))

    def __add__(self, other):
        return self.add_scaled(self.field.one, other)

    def __sub__(self, other):
        return self.add_scaled(self.field.neg(self.field.one), other)

    def __neg__(self):
        return self.scale(self.field.neg(self.field.one))

    def scale(self, coeff) -> "BicommElement":
        if not coeff:
            return BicommElement.zero(self.field)
        lin = {i: self.field.mul(coeff, c) for i, c in self.lin.items()}
        return BicommElement(self.field, lin, self.quad.scale(coeff))

    def multiply(self, other: "BicommElement") -> "BicommElement":
        """Algebra product; the result always lies in the square."""
        self.field.check_same(other.field)
        return BicommElement.from_quad(self.t_poly().mul(other.s_poly()))

    def __mul__(self, other):
        return self.multiply(other)

    def apply_index_map(self, phi: dict) -> "BicommElement":
        items = sorted(phi.items())
        for (i1, j1), (i2, j2) in zip(items, items[1:]):
            if j1 >= j2:
                raise InvalidIndexMap(
                    f"map not strictly increasing at {i1}->{j1}, {i2}->{j2}"
                )
        lin = {}
        for i, c in self.lin.items():
            if i not in phi:
                raise InvalidIndexMap(f"index {i} not in the domain of the map")
            lin[phi[i]] = c
        return BicommElement(self.field, lin, self.quad.apply_index_map(phi))

    def homogeneous_component(self, n: int) -> "BicommElement":
        """Part of total degree n."""
        if n == 1:
            return BicommElement(self.field, dict(self.lin))
        quad = Poly(
            self.field, {m: c for m, c in self.quad.terms.items() if m.degree == n}
        )
        return BicommElement.from_quad(quad)

    def split_multihomogeneous(self) -> dict:
        """Split into parts with a fixed per-index degree.

        Returns a dict mapping the sparse multidegree ((index, deg), ...)
        to the corresponding part; linear terms get multidegree ((i, 1),).
        """
        parts = {}
        for i, c in self.lin.items():
            key = ((i, 1),)
            cur = parts.get(key, BicommElement.zero(self.field))
            parts[key] = cur + BicommElement(self.field, {i: c})
        for m, c in self.quad.terms.items():
            key = m.multidegree()
            cur = parts.get(key, BicommElement.zero(self.field))
            parts[key] = cur + BicommElement.from_quad(Poly(self.field, {m: c}))
        return parts

    def __eq__(self, other):
        return (
            isinstance(other, BicommElement)
            and self.field == other.field
            and self.lin == other.lin
            and self.quad == other.quad
        )

    def __hash__(self):
        return hash((self.field, frozenset(self.lin.items()), self.quad))

    def __str__(self):
        if self.is_zero:
            return "0"
        pairs = self.quad.sorted_terms()
        pairs += [(f"x{i}", self.lin[i]) for i in sorted(self.lin)]
        return format_terms(self.field, pairs)

    def __repr__(self):
        return f"BicommElement({self})"


def normalize_term(t: NATerm, field: Field) -> BicommElement:
    """Canonical form of a single tree, by folding the product rules."""
    if isinstance(t, Leaf):
        return BicommElement.generator(field, t.index)
    return normalize_term(t.left, field).multiply(normalize_term(t.right, field))


def normalize(poly: NAPolynomial) -> BicommElement:
    """Canonical form of a formal combination of trees."""
    out = BicommElement.zero(poly.field)
    for t, c in poly.terms.items():
        out = out.add_scaled(c, normalize_term(t, poly.field))
    return out


def graded_dimension(d: int, n: int) -> int:
    """Dimension of the degree-n component on d generators.

    Degree 1 is spanned by the generators.  For n >= 2 the component is
    spanned by the mixed monomials Y^a Z^b with |a| + |b| = n, counted by
    splitting n into the two positive block sizes and counting exponent
    vectors of each size on d indices.
    """
    if d < 0 or n < 1:
        raise ValueError("need d >= 0 and n >= 1")
    if n == 1 or d == 0:
        return d
    total = 0
    for a in range(1, n):
        total += comb(a + d - 1, d - 1) * comb(n - a + d - 1, d - 1)
    return total


def multilinear_dimension(n: int) -> int:
    """Dimension of the span of normal forms of multilinear degree-n trees.

    A multilinear tree normalizes to Y^a Z^b where the index sets of a and
    b partition {1..n} into two nonempty blocks, and every such partition
    occurs; the count is the number of proper nonempty subsets chosen as
    the y-block.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        return 1
    return sum(comb(n, k) for k in range(1, n))
