"""Ideal membership via commutative polynomial algebra.

The square of the free algebra is a module over the polynomial ring in
the y and z variables: left multiplication by x_i acts as y_i, right
multiplication as z_i.  Membership questions therefore reduce to ideal
arithmetic in that ring, done here with Groebner bases under the weight
order.

For a two-sided ideal with generators g_k = l_k + p_k (linear plus
quadratic part), products collapse through the rule u*v = t(u)s(v), so
the quadratic slice of the ideal is

    span{p_k adjusted by the linear solve}  +  ideal({y_j s_k, t_k z_j})

with s_k = s(g_k) and t_k = t(g_k).  Pair products t_k s_l never add
anything: the y-linear part of t_k combines the y_j s_l directly, and
every mixed monomial of its quadratic part factors off one y variable,
leaving a polynomial multiple of some y_u s_l.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd

from .algebra import BicommElement
from .errors import BadChain, FieldMismatch, UnsupportedGenerator
from .linalg import Echelon
from .monomials import Monomial
from .orders import weight_key
from .polynomials import Poly
from .scalars import Field


def spolynomial(f: Poly, g: Poly) -> Poly:
    """S-polynomial under the weight order; inputs need not be monic."""
    field = f.field
    mf, cf = f.leading()
    mg, cg = g.leading()
    lcm = mf.lcm(mg)
    left = f.mul_monomial(lcm.div(mf), field.inv(cf))
    right = g.mul_monomial(lcm.div(mg), field.inv(cg))
    return left.sub(right)


def poly_divmod(p: Poly, divisors):
    """Multivariate division by an ordered list of polynomials.

    Returns (cofactors, remainder) with p = sum cofactor_i * divisor_i +
    remainder and no remainder monomial divisible by any divisor's
    leading monomial.  Ties go to the first divisor in list order.
    """
    field = p.field
    leads = [(d.leading(), d) for d in divisors if not d.is_zero]
    work = dict(p.terms)
    remainder = {}
    cofactors = [dict() for _ in divisors]
    index_of = {id(d): i for i, d in enumerate(divisors)}
    while work:
        m = max(work, key=weight_key)
        coeff = work.pop(m)
        hit = None
        for (lm, lc), d in leads:
            if lm.divides(m):
                hit = (lm, lc, d)
                break
        if hit is None:
            remainder[m] = coeff
            continue
        lm, lc, d = hit
        q = field.div(coeff, lc)
        qm = m.div(lm)
        cof = cofactors[index_of[id(d)]]
        cof[qm] = field.add(cof.get(qm, field.zero), q)
        for dm, dc in d.terms.items():
            if dm == lm:
                continue
            key = dm * qm
            v = field.sub(work.get(key, field.zero), field.mul(q, dc))
            if v:
                work[key] = v
            else:
                work.pop(key, None)
    return [Poly(field, c) for c in cofactors], Poly(field, remainder)


def poly_normal_form(p: Poly, basis) -> Poly:
    """Remainder of division by a Groebner basis (or any divisor list)."""
    divisors = basis.generators if isinstance(basis, GroebnerBasis) else basis
    _, r = poly_divmod(p, divisors)
    return r


class GroebnerBasis:
    """Reduced basis: monic generators, mutually irreducible, sorted by
    leading monomial so equal ideals give equal objects."""

    __slots__ = ("field", "generators")

    def __init__(self, field: Field, generators):
        self.field = field
        self.generators = list(generators)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.field == other.field
            and self.generators == other.generators
        )

    def __repr__(self):
        return f"GroebnerBasis({[str(g) for g in self.generators]})"


def _primitive(p: Poly, field: Field) -> Poly:
    """Canonical scalar multiple of p: monic over a prime field; over the
    rationals, coprime integer coefficients with a positive leading one.

    Keeping intermediate basis elements integral stops the coefficient
    growth that monic tails suffer during long reduction chains.
    """
    if p.is_zero or not field.is_rationals:
        return p.monic()
    denom_lcm = 1
    for c in p.terms.values():
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    num_gcd = 0
    for c in p.terms.values():
        num_gcd = gcd(num_gcd, c.numerator * (denom_lcm // c.denominator))
    scale = Fraction(denom_lcm, num_gcd)
    if p.leading()[1] < 0:
        scale = -scale
    return p.scale(scale)


def buchberger(gens, field: Field | None = None) -> GroebnerBasis:
    """Reduced Groebner basis under the weight order.

    S-pairs are selected by smallest lcm (normal strategy) with index
    tiebreak; pairs with coprime leading monomials are skipped, as are
    pairs covered by the chain criterion (some earlier-treated element
    divides the lcm and both side pairs were already treated).  The
    final basis is minimalized, interreduced, made monic and sorted, so
    the result is the unique reduced basis of the ideal.
    """
    polys = [p for p in gens if not p.is_zero]
    if field is None:
        if not polys:
            raise ValueError("cannot infer the field from an empty input")
        field = polys[0].field
    for p in polys:
        field.check_same(p.field)

    basis = []
    seen = set()
    for p in polys:
        q = _primitive(p, field)
        if q not in seen:
            seen.add(q)
            basis.append(q)

    lead = [g.leading()[0] for g in basis]
    pairs = []
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            lcm = lead[i].lcm(lead[j])
            heapq.heappush(pairs, (weight_key(lcm), i, j, lcm))
    done = set()
    while pairs:
        _, i, j, lcm = heapq.heappop(pairs)
        done.add((i, j))
        if lcm.degree == lead[i].degree + lead[j].degree:
            continue  # coprime leading monomials: S-polynomial reduces to 0
        covered = any(
            k != i
            and k != j
            and lead[k].divides(lcm)
            and (min(i, k), max(i, k)) in done
            and (min(j, k), max(j, k)) in done
            for k in range(len(basis))
        )
        if covered:
            continue  # chain criterion: S-polynomial already accounted for
        r = poly_normal_form(spolynomial(basis[i], basis[j]), basis)
        if r.is_zero:
            continue
        basis.append(_primitive(r, field))
        k = len(basis) - 1
        lead.append(basis[k].leading()[0])
        for i2 in range(k):
            lcm = lead[i2].lcm(lead[k])
            heapq.heappush(pairs, (weight_key(lcm), i2, k, lcm))

    return GroebnerBasis(field, _reduce_basis(basis, field))


def _reduce_basis(basis, field):
    kept = []
    for i, g in enumerate(basis):
        lm = g.leading()[0]
        redundant = False
        for j, h in enumerate(basis):
            if i == j:
                continue
            lmh = h.leading()[0]
            if lmh.divides(lm) and (lmh != lm or j < i):
                redundant = True
                break
        if not redundant:
            kept.append(g)
    changed = True
    while changed:
        changed = False
        for i in range(len(kept)):
            others = kept[:i] + kept[i + 1 :]
            r = poly_normal_form(kept[i], others)
            if r != kept[i]:
                changed = True
                if r.is_zero:
                    kept.pop(i)
                else:
                    kept[i] = _primitive(r, field)
                break
    kept = [g.monic() for g in kept]
    kept.sort(key=lambda g: weight_key(g.leading()[0]))
    return kept


class MembershipResult:
    """Boolean verdict plus a certificate when the element is a member.

    mu: coefficients over the generators used to match the linear part;
    span: coefficients over the kernel polynomials (or generator span);
    cofactors: list of (basis index, polynomial) pairs for the module
    ideal part of the decomposition.
    """

    __slots__ = ("member", "mu", "span", "cofactors")

    def __init__(self, member, mu=None, span=None, cofactors=None):
        self.member = member
        self.mu = mu
        self.span = span
        self.cofactors = cofactors

    def __bool__(self):
        return self.member

    def __repr__(self):
        return f"MembershipResult({self.member})"


class TwoSidedPresentation:
    """Finite presentation of the two-sided ideal generated by elements.

    Stores per generator the polynomials s_k and t_k, the kernel
    polynomials pi (quadratic parts of combinations with vanishing
    linear part), and a Groebner basis of the module ideal, all per
    variable range; ranges grow on demand when a query element uses
    higher indices than the generators.
    """

    __slots__ = ("field", "generators", "lin_echelon", "_cache", "_pi_raw")

    def __init__(self, generators, field: Field | None = None):
        gens = list(generators)
        if field is None:
            if not gens:
                raise ValueError("cannot infer the field from an empty input")
            field = gens[0].field
        for g in gens:
            field.check_same(g.field)
        self.field = field
        self.generators = gens
        self.lin_echelon = Echelon(field)
        self._cache = {}
        self._pi_raw = None

    def _kernel_polys(self):
        """Quadratic parts of the linear-kernel combinations, plus the
        echelon used to solve for linear parts."""
        pi = []
        for k, g in enumerate(self.generators):
            dep = self.lin_echelon.insert(dict(g.lin), label=k)
            if dep is None:
                continue
            p = g.quad
            for l, c in dep.items():
                p = p.add_scaled(self.field.neg(c), self.generators[l].quad)
            pi.append(p)
        return pi

    def data_for_range(self, var_range: int):
        """(module GB, pi list, echelon of pi normal forms) for indices
        up to var_range."""
        d = max(var_range, self.var_range)
        if d in self._cache:
            return self._cache[d]
        field = self.field
        module_gens = []
        seen = set()

        def push(p):
            if not p.is_zero:
                q = p.monic()
                if q not in seen:
                    seen.add(q)
                    module_gens.append(q)

        s_list = [g.s_poly() for g in self.generators]
        t_list = [g.t_poly() for g in self.generators]
        for k, g in enumerate(self.generators):
            for j in range(1, d + 1):
                push(s_list[k].mul_monomial(Monomial([(j, 1)], [])))
                push(t_list[k].mul_monomial(Monomial([], [(j, 1)])))
        gb = buchberger(module_gens, field)
        pi = self.pi
        pi_ech = Echelon(field, sort_key=weight_key)
        for i, p in enumerate(pi):
            pi_ech.insert(dict(poly_normal_form(p, gb).terms), label=i)
        data = (gb, pi, pi_ech)
        self._cache[d] = data
        return data

    @property
    def pi(self):
        if self._pi_raw is None:
            self._pi_raw = self._kernel_polys()
        return self._pi_raw

    @property
    def var_range(self) -> int:
        r = 1
        for g in self.generators:
            r = max(r, g.max_index())
        return r


def two_sided_member(f: BicommElement, pres) -> MembershipResult:
    """Decide membership of f in the two-sided ideal of the presentation.

    pres may be a TwoSidedPresentation or a plain list of generators.
    Solve the linear parts exactly, then test the adjusted quadratic part
    against the module ideal plus the span of the kernel polynomials.
    """
    if not isinstance(pres, TwoSidedPresentation):
        gens = list(pres)
        if not gens:
            return MembershipResult(f.is_zero, {}, {}, [])
        pres = TwoSidedPresentation(gens, field=f.field)
    field = pres.field
    field.check_same(f.field)
    if f.is_zero:
        return MembershipResult(True, {}, {}, [])
    if not pres.generators:
        return MembershipResult(False)
    # make sure the echelon of linear parts is populated
    pres.pi
    mu = pres.lin_echelon.express(dict(f.lin))
    if mu is None:
        return MembershipResult(False)
    target = f.quad
    for k, c in mu.items():
        target = target.add_scaled(field.neg(c), pres.generators[k].quad)
    d = max(f.max_index(), pres.var_range)
    gb, pi, pi_ech = pres.data_for_range(d)
    nf = poly_normal_form(target, gb)
    span = pi_ech.express(dict(nf.terms))
    if span is None:
        return MembershipResult(False)
    residue = target
    for i, c in span.items():
        residue = residue.add_scaled(field.neg(c), pi[i])
    cofactors, rem = poly_divmod(residue, gb.generators)
    if not rem.is_zero:
        raise AssertionError("division failed to certify a proven member")
    named = [(i, c) for i, c in enumerate(cofactors) if not c.is_zero]
    return MembershipResult(True, mu, span, named)


def _one_sided_member(f: BicommElement, gens, side: str) -> MembershipResult:
    field = None
    elements = list(gens)
    for g in elements:
        if field is None:
            field = g.field
        field.check_same(g.field)
        if g.lin:
            raise UnsupportedGenerator(
                "one-sided membership needs generators without linear part"
            )
    if field is None:
        field = f.field
    field.check_same(f.field)
    if f.is_zero:
        return MembershipResult(True, {}, {}, [])
    if f.lin or not elements:
        return MembershipResult(False)
    d = f.max_index()
    for g in elements:
        d = max(d, g.max_index())
    module_gens = []
    for g in elements:
        for j in range(1, d + 1):
            if side == "left":
                m = Monomial([(j, 1)], [])
            else:
                m = Monomial([], [(j, 1)])
            module_gens.append(g.quad.mul_monomial(m))
    gb = buchberger(module_gens, field)
    ech = Echelon(field, sort_key=weight_key)
    for k, g in enumerate(elements):
        ech.insert(dict(poly_normal_form(g.quad, gb).terms), label=k)
    nf = poly_normal_form(f.quad, gb)
    span = ech.express(dict(nf.terms))
    if span is None:
        return MembershipResult(False)
    residue = f.quad
    for k, c in span.items():
        residue = residue.add_scaled(field.neg(c), elements[k].quad)
    cofactors, rem = poly_divmod(residue, gb.generators)
    if not rem.is_zero:
        raise AssertionError("division failed to certify a proven member")
    named = [(i, c) for i, c in enumerate(cofactors) if not c.is_zero]
    return MembershipResult(True, {}, span, named)


def left_ideal_member(f: BicommElement, gens) -> MembershipResult:
    """Membership in the left ideal generated by quadratic elements.

    Left multiplications only ever multiply by y variables or mixed
    monomials, so the reachable set is the span of the generators plus
    the polynomial ideal of their y-multiples.
    """
    return _one_sided_member(f, gens, "left")


def right_ideal_member(f: BicommElement, gens) -> MembershipResult:
    """Mirror image of left_ideal_member, with z-multiples."""
    return _one_sided_member(f, gens, "right")


def chain_stabilization(steps, mode: str = "two"):
    """Index from which an ascending chain of ideals stops growing.

    steps: list of generator lists, cumulative (each step contains the
    previous step's generators).  Returns the smallest index k such that
    every later step's new generators already belong to the ideal built
    so far, or None when growth continues through the final step (the
    list does not certify stabilization).
    """
    if mode not in ("two", "left", "right"):
        raise ValueError(f"unknown mode {mode!r}")
    steps = [list(step) for step in steps]
    if not steps:
        return 1
    last_growth = 0
    prev: list = []
    prev_set: set = set()
    for idx, step in enumerate(steps, 1):
        step_set = set(step)
        if not prev_set <= step_set:
            raise BadChain(f"step {idx} drops earlier generators")
        new = [g for g in step if g not in prev_set]
        if idx == 1:
            grew = any(not g.is_zero for g in new)
        elif new:
            if mode == "two":
                pres = TwoSidedPresentation(prev)
                grew = any(not two_sided_member(g, pres) for g in new)
            elif mode == "left":
                grew = any(not left_ideal_member(g, prev) for g in new)
            else:
                grew = any(not right_ideal_member(g, prev) for g in new)
        else:
            grew = False
        if grew:
            last_growth = idx
        prev = step
        prev_set = step_set
    if last_growth == 0:
        return 1
    if last_growth == len(steps):
        return None
    return last_growth
