"""Finite-dimensional algebras given by structure constants.

An algebra of dimension n over a field is stored as a sparse table of
basis products e_i * e_j = sum_k c[k] e_k; absent (i, j) entries mean the
product is zero.  Elements are sparse coordinate dicts index -> scalar.
Identity checking evaluates non-associative polynomials either on all
basis tuples (complete for multilinear identities), with generic
coefficient indeterminates (complete for arbitrary scalar extensions), or
on random sample tuples (sound for failures only).
"""

from __future__ import annotations

import json
import random

from .errors import BadElement, NotMultilinear
from .scalars import Field
from .terms import Leaf, NAPolynomial, Node, term_leaves


class StructureAlgebra:
    """Algebra by structure constants over a scalar field."""

    __slots__ = ("dim", "field", "table")

    def __init__(self, dim: int, field: Field, table=None):
        if dim < 1:
            raise ValueError(f"dimension must be positive, got {dim}")
        self.dim = dim
        self.field = field
        self.table = {}
        if table:
            for (i, j), coeffs in dict(table).items():
                self._set_product(i, j, coeffs)

    def _set_product(self, i: int, j: int, coeffs) -> None:
        if not (0 <= i < self.dim and 0 <= j < self.dim):
            raise BadElement(f"basis index pair ({i}, {j}) out of range")
        coeffs = list(coeffs)
        if len(coeffs) != self.dim:
            raise BadElement(
                f"product ({i}, {j}) has {len(coeffs)} coefficients, need {self.dim}"
            )
        if any(coeffs):
            self.table[(i, j)] = tuple(coeffs)

    def basis_element(self, i: int) -> dict:
        if not 0 <= i < self.dim:
            raise BadElement(f"basis index {i} out of range")
        return {i: self.field.one}

    def check_element(self, v: dict) -> dict:
        out = {}
        for i, c in v.items():
            if not 0 <= int(i) < self.dim:
                raise BadElement(f"coordinate index {i} out of range")
            if c:
                out[int(i)] = c
        return out

    def product(self, u: dict, v: dict) -> dict:
        f = self.field
        acc = {}
        for i, a in u.items():
            for j, b in v.items():
                coeffs = self.table.get((i, j))
                if coeffs is None:
                    continue
                ab = f.mul(a, b)
                for k, c in enumerate(coeffs):
                    if not c:
                        continue
                    w = f.add(acc.get(k, f.zero), f.mul(ab, c))
                    if w:
                        acc[k] = w
                    else:
                        acc.pop(k, None)
        return acc

    def to_json_obj(self) -> dict:
        rows = []
        for (i, j), coeffs in sorted(self.table.items()):
            rows.append([i, j, [self.field.format_scalar(c) for c in coeffs]])
        return {"dim": self.dim, "field": self.field.spec_string(), "table": rows}

    def to_json(self) -> str:
        obj = self.to_json_obj()
        lines = [
            "{",
            f'  "dim": {obj["dim"]},',
            f'  "field": {json.dumps(obj["field"])},',
        ]
        if obj["table"]:
            lines.append('  "table": [')
            rows = [json.dumps(row) for row in obj["table"]]
            lines.extend(f"    {row}," for row in rows[:-1])
            lines.append(f"    {rows[-1]}")
            lines.append("  ]")
        else:
            lines.append('  "table": []')
        lines.append("}")
        return "\n".join(lines)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "StructureAlgebra":
        dim = int(obj["dim"])
        field = Field.parse(str(obj["field"]))

        def scalar(raw):
            if isinstance(raw, str):
                return field.parse_scalar(raw)
            return field.from_int(int(raw))

        table = {}
        for row in obj.get("table", []):
            i, j, coeffs = int(row[0]), int(row[1]), [scalar(c) for c in row[2]]
            table[(i, j)] = coeffs
        return cls(dim, field, table)

    @classmethod
    def from_json(cls, text: str) -> "StructureAlgebra":
        return cls.from_json_obj(json.loads(text))

    def __eq__(self, other):
        return (
            isinstance(other, StructureAlgebra)
            and self.dim == other.dim
            and self.field == other.field
            and self.table == other.table
        )

    def __repr__(self):
        return f"StructureAlgebra(dim={self.dim}, {self.field!r}, {len(self.table)} products)"


def witt_truncated(n: int, field: Field) -> StructureAlgebra:
    """Truncated one-variable Witt-type algebra on e_0 .. e_{n-1}.

    With e_i standing for x^i d/dx, the product (f d/dx) * (g d/dx) =
    (g f') d/dx gives e_i * e_j = i e_{i+j-1}, cut to zero when the
    exponent leaves the truncation range.
    """
    if n < 1:
        raise ValueError(f"need a positive dimension, got {n}")
    table = {}
    for i in range(n):
        for j in range(n):
            k = i + j - 1
            if i >= 1 and 0 <= k < n:
                coeffs = [field.zero] * n
                coeffs[k] = field.from_int(i)
                table[(i, j)] = coeffs
    return StructureAlgebra(n, field, table)


# --- evaluation -------------------------------------------------------------


class _FieldRing:
    """Plain field coordinates."""

    def __init__(self, field: Field):
        self.field = field
        self.zero = field.zero

    def add(self, a, b):
        return self.field.add(a, b)

    def mul(self, a, b):
        return self.field.mul(a, b)

    def scale(self, c, a):
        return self.field.mul(c, a)


class _GenericRing:
    """Coordinates that are polynomials in indeterminates a_{k,i}.

    A value is a dict mapping a sorted tuple of ((k, i), exponent) pairs
    to a nonzero field scalar; the empty dict is zero.
    """

    def __init__(self, field: Field):
        self.field = field
        self.zero = {}

    def variable(self, k, i):
        return {(((k, i), 1),): self.field.one}

    def add(self, a, b):
        out = dict(a)
        for key, c in b.items():
            v = self.field.add(out.get(key, self.field.zero), c)
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return out

    def mul(self, a, b):
        out = {}
        for k1, c1 in a.items():
            for k2, c2 in b.items():
                merged = dict(k1)
                for var, e in k2:
                    merged[var] = merged.get(var, 0) + e
                key = tuple(sorted(merged.items()))
                v = self.field.add(out.get(key, self.field.zero), self.field.mul(c1, c2))
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return out

    def scale(self, c, a):
        out = {}
        for key, v in a.items():
            w = self.field.mul(c, v)
            if w:
                out[key] = w
        return out


def _ring_product(alg: StructureAlgebra, ring, u: dict, v: dict) -> dict:
    acc = {}
    for i, a in u.items():
        for j, b in v.items():
            coeffs = alg.table.get((i, j))
            if coeffs is None:
                continue
            ab = ring.mul(a, b)
            for k, c in enumerate(coeffs):
                if not c:
                    continue
                w = ring.add(acc.get(k, ring.zero), ring.scale(c, ab))
                if w:
                    acc[k] = w
                else:
                    acc.pop(k, None)
    return acc


def _eval_tree(t, args: dict, alg: StructureAlgebra, ring) -> dict:
    if isinstance(t, Leaf):
        got = args.get(t.index)
        if got is None:
            raise BadElement(f"no argument supplied for x{t.index}")
        return got
    left = _eval_tree(t.left, args, alg, ring)
    right = _eval_tree(t.right, args, alg, ring)
    return _ring_product(alg, ring, left, right)


def _eval_poly(f: NAPolynomial, args: dict, alg: StructureAlgebra, ring) -> dict:
    acc = {}
    for t, c in f.sorted_terms():
        val = _eval_tree(t, args, alg, ring)
        for k, v in val.items():
            w = ring.add(acc.get(k, ring.zero), ring.scale(c, v))
            if w:
                acc[k] = w
            else:
                acc.pop(k, None)
    return acc


def evaluate_polynomial(f: NAPolynomial, args, alg: StructureAlgebra) -> dict:
    """Value of f at the given elements, as a sparse coordinate dict.

    args may be a sequence (position r supplies x_{r+1}) or a dict
    mapping variable indices to elements.
    """
    alg.field.check_same(f.field)
    if isinstance(args, dict):
        supplied = {int(k): alg.check_element(v) for k, v in args.items()}
    else:
        supplied = {r + 1: alg.check_element(v) for r, v in enumerate(args)}
    ring = _FieldRing(alg.field)
    return _eval_poly(f, supplied, alg, ring)


# --- identity checking ------------------------------------------------------


class CheckResult:
    """Outcome of an identity check: verdict plus an optional witness.

    For the exhaustive mode the witness is a tuple of basis indices; for
    sample mode a tuple of coordinate dicts; symbolic failures carry no
    witness since they may only appear after scalar extension.
    """

    __slots__ = ("holds", "witness", "mode")

    def __init__(self, holds: bool, witness=None, mode: str = ""):
        self.holds = holds
        self.witness = witness
        self.mode = mode

    def __bool__(self):
        return self.holds

    def __repr__(self):
        if self.holds:
            return f"CheckResult(Holds, mode={self.mode})"
        return f"CheckResult(Fails, witness={self.witness}, mode={self.mode})"


def _multilinear_variables(f: NAPolynomial) -> list:
    """Sorted variable list, or NotMultilinear when some term repeats or
    omits a variable used elsewhere."""
    varset = None
    for t in f.terms:
        leaves = term_leaves(t)
        if len(set(leaves)) != len(leaves):
            raise NotMultilinear(f"variable repeated in a term of {f}")
        s = set(leaves)
        if varset is None:
            varset = s
        elif s != varset:
            raise NotMultilinear("terms use different variable sets")
    return sorted(varset or ())


def check_identity(
    f: NAPolynomial,
    alg: StructureAlgebra,
    mode: str = "multilinear",
    samples: int = 100,
    seed: int = 0,
) -> CheckResult:
    """Check whether f vanishes identically on the algebra.

    mode "multilinear" evaluates on every basis tuple, which is complete
    for multilinear f; "symbolic" substitutes generic coordinates, which
    decides validity over every scalar extension; "sample" tries random
    tuples and can only certify failure.
    """
    alg.field.check_same(f.field)
    if mode == "multilinear":
        variables = _multilinear_variables(f)
        if not variables:
            return CheckResult(f.is_zero, None, mode)
        ring = _FieldRing(alg.field)

        def tuples(pos, assign):
            if pos == len(variables):
                yield dict(assign)
                return
            for i in range(alg.dim):
                assign[variables[pos]] = i
                yield from tuples(pos + 1, assign)

        for assignment in tuples(0, {}):
            args = {k: alg.basis_element(i) for k, i in assignment.items()}
            if _eval_poly(f, args, alg, ring):
                witness = tuple(assignment[k] for k in variables)
                return CheckResult(False, witness, mode)
        return CheckResult(True, None, mode)
    if mode == "symbolic":
        ring = _GenericRing(alg.field)
        variables = sorted({v for t in f.terms for v in term_leaves(t)})
        args = {
            k: {i: ring.variable(k, i) for i in range(alg.dim)} for k in variables
        }
        value = _eval_poly(f, args, alg, ring)
        return CheckResult(not value, None, mode)
    if mode == "sample":
        rng = random.Random(seed)
        variables = sorted({v for t in f.terms for v in term_leaves(t)})
        ring = _FieldRing(alg.field)
        for _ in range(samples):
            args = {}
            for k in variables:
                coords = {}
                for i in range(alg.dim):
                    if alg.field.is_rationals:
                        c = alg.field.from_int(rng.randint(-3, 3))
                    else:
                        c = alg.field.from_int(rng.randrange(alg.field.characteristic))
                    if c:
                        coords[i] = c
                args[k] = coords
            if _eval_poly(f, args, alg, ring):
                witness = tuple(args[k] for k in variables)
                return CheckResult(False, witness, mode)
        return CheckResult(True, None, mode)
    raise ValueError(f"unknown identity-check mode {mode!r}")


def left_commutativity(field: Field) -> NAPolynomial:
    """x1*(x2*x3) - x2*(x1*x3)."""
    a = NAPolynomial.term(field, Node(Leaf(1), Node(Leaf(2), Leaf(3))))
    b = NAPolynomial.term(field, Node(Leaf(2), Node(Leaf(1), Leaf(3))))
    return a.sub(b)


def right_commutativity(field: Field) -> NAPolynomial:
    """(x1*x2)*x3 - (x1*x3)*x2."""
    a = NAPolynomial.term(field, Node(Node(Leaf(1), Leaf(2)), Leaf(3)))
    b = NAPolynomial.term(field, Node(Node(Leaf(1), Leaf(3)), Leaf(2)))
    return a.sub(b)


class BicommVerdict:
    """Joint verdict of the two defining identities."""

    __slots__ = ("left", "right")

    def __init__(self, left: CheckResult, right: CheckResult):
        self.left = left
        self.right = right

    @property
    def holds(self) -> bool:
        return self.left.holds and self.right.holds

    @property
    def witness(self):
        if not self.left.holds:
            return self.left.witness
        if not self.right.holds:
            return self.right.witness
        return None

    def __bool__(self):
        return self.holds

    def __repr__(self):
        if self.holds:
            return "BicommVerdict(Holds)"
        return f"BicommVerdict(Fails, witness={self.witness})"


def check_bicommutative(alg: StructureAlgebra) -> BicommVerdict:
    """Exhaustive check of left and right commutativity on basis triples."""
    left = check_identity(left_commutativity(alg.field), alg, mode="multilinear")
    right = check_identity(right_commutativity(alg.field), alg, mode="multilinear")
    return BicommVerdict(left, right)
