"""Substitution-closed ideals: bounded closures, weight lifting, reduction.

Two closure notions live here, both bounded by an explicit window.

The full substitution closure (t_ideal_closure_bounded and
t_ideal_member_bounded) substitutes formal scalar combinations of basis
monomials for the variables of each generator, collects every
multihomogeneous component of the expansion, multiplies by monomials,
and row-reduces per multidegree.  Formal expansion keeps the result
correct over small fields, where scaling tricks are unavailable.

The reduction machinery (lift_weight, specht_reduce,
specht_basis_search) works with the narrower family obtained from
generators by strictly increasing index relabelings followed by monomial
multiplications.  Those are exactly the moves the weight calculus
controls: both preserve leading-monomial bookkeeping, so reduction
terminates and its certificates are meaningful.  The narrower family is
what the basis search enumerates and verifies against.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import factorial

from .algebra import BicommElement
from .errors import (
    NotDominated,
    UnsupportedGenerator,
    WindowTooSmall,
    WrongCharacteristic,
)
from .linalg import Echelon
from .monomials import Monomial
from .orders import higman_embedding, higman_leq, minimal_antichain, weight_key, weight_of
from .polynomials import Poly
from .scalars import Field


class Substitution:
    """Assignment of algebra elements to generator indices.

    Unmapped indices default to the generator itself; every stored image
    must be nonzero, since a substitution is an algebra endomorphism
    determined by nonzero generator images.
    """

    __slots__ = ("images",)

    def __init__(self, images=None):
        self.images = {}
        if images:
            for i, v in dict(images).items():
                if v.is_zero:
                    raise ValueError(f"substitution image for x{i} is zero")
                self.images[int(i)] = v

    def image(self, i: int, field: Field) -> BicommElement:
        got = self.images.get(i)
        if got is not None:
            field.check_same(got.field)
            return got
        return BicommElement.generator(field, i)


def _poly_pow(p: Poly, e: int) -> Poly:
    out = Poly(p.field, {Monomial(): p.field.one})
    for _ in range(e):
        out = out.mul(p)
    return out


def apply_substitution(f: BicommElement, sigma: Substitution) -> BicommElement:
    """Image of f under the endomorphism extending sigma.

    On the quadratic part the map is plain polynomial composition: y_i
    goes to t(sigma(x_i)) and z_i to s(sigma(x_i)), because left and
    right multiplications act through those polynomials.
    """
    field = f.field
    out = BicommElement.zero(field)
    t_cache = {}
    s_cache = {}

    def t_of(i):
        if i not in t_cache:
            t_cache[i] = sigma.image(i, field).t_poly()
        return t_cache[i]

    def s_of(i):
        if i not in s_cache:
            s_cache[i] = sigma.image(i, field).s_poly()
        return s_cache[i]

    for i, c in f.lin.items():
        out = out.add_scaled(c, sigma.image(i, field))
    quad = Poly.zero(field)
    for m, c in f.quad.terms.items():
        prod = Poly(field, {Monomial(): field.one})
        for i, e in m.ys:
            prod = prod.mul(_poly_pow(t_of(i), e))
        for j, e in m.zs:
            prod = prod.mul(_poly_pow(s_of(j), e))
        quad = quad.add_scaled(c, prod)
    return out + BicommElement.from_quad(quad)


@dataclass(frozen=True)
class ClosureWindow:
    """Degree and variable bounds for the bounded closure computations."""

    max_degree: int = 5
    max_variables: int = 3

    def __post_init__(self):
        if self.max_degree < 1 or self.max_variables < 1:
            raise ValueError("window bounds must be positive")


def _multidegree_key(mu: dict) -> tuple:
    return tuple(sorted((v, d) for v, d in mu.items() if d))


def _iter_multidegrees(nvars: int, max_total: int):
    """All sparse multidegree dicts over variables 1..nvars, total >= 1."""

    def rec(v, remaining, acc):
        if v > nvars:
            if acc:
                yield dict(acc)
            return
        for d in range(0, remaining + 1):
            if d:
                acc[v] = d
            yield from rec(v + 1, remaining - d, acc)
            if d:
                del acc[v]

    yield from rec(1, max_total, {})


def _iter_splits(r: dict, mixed_only: bool = False):
    """All monomials Y^a Z^b with a + b equal to the multidegree r."""
    items = sorted(r.items())

    def rec(pos, ys, zs):
        if pos == len(items):
            if mixed_only and (not ys or not zs):
                return
            yield Monomial(ys, zs)
            return
        v, d = items[pos]
        for t in range(d + 1):
            ny = ys + [(v, t)] if t else ys
            nz = zs + [(v, d - t)] if d - t else zs
            yield from rec(pos + 1, ny, nz)

    yield from rec(0, [], [])


def _basis_monomial_options(budget: dict):
    """Basis monomials of the free algebra with multidegree below budget.

    Returns (multidegree dict, t-image, s-image) triples: the generator
    x_i maps to (y_i, z_i), a mixed monomial to (itself, itself).
    """
    out = []
    for v in sorted(budget):
        if budget[v] >= 1:
            out.append(({v: 1}, Monomial([(v, 1)], []), Monomial([], [(v, 1)])))
    for total in range(2, sum(budget.values()) + 1):
        for mu in _iter_multidegrees(max(budget), total):
            if sum(mu.values()) != total:
                continue
            if any(mu.get(v, 0) > budget.get(v, 0) for v in mu):
                continue
            for m in _iter_splits(mu, mixed_only=True):
                out.append((mu.copy(), m, m))
    return out


def _iter_multisets(options, size, budget: dict):
    """Multisets of option triples whose multidegrees sum within budget.

    Yields (counts, used): counts pairs each chosen option with its
    multiplicity, used is the consumed multidegree.
    """

    def rec(idx, left, remaining, acc):
        if left == 0:
            used = {v: budget[v] - remaining.get(v, 0) for v in budget}
            yield list(acc), {v: d for v, d in used.items() if d}
            return
        if idx == len(options):
            return
        yield from rec(idx + 1, left, remaining, acc)
        md = options[idx][0]
        rem = dict(remaining)
        for c in range(1, left + 1):
            if any(rem.get(v, 0) < d for v, d in md.items()):
                break
            for v, d in md.items():
                rem[v] = rem.get(v, 0) - d
            acc.append((options[idx], c))
            yield from rec(idx + 1, left - c, dict(rem), acc)
            acc.pop()

    yield from rec(0, size, dict(budget), [])


def _iter_count_splits(counts, alpha):
    """Ways to split a multiset into a part of size alpha and the rest.

    counts: list of (option, multiplicity).  Yields (coeff, t_factors,
    s_factors) with coeff the product of the two multinomial repetition
    factors for the split.
    """
    beta = sum(c for _, c in counts) - alpha

    def rec(idx, left, chosen):
        if idx == len(counts):
            if left == 0:
                coeff = factorial(alpha) * factorial(beta)
                t_factors = []
                s_factors = []
                for (opt, n), r in zip(counts, chosen):
                    coeff //= factorial(r) * factorial(n - r)
                    if r:
                        t_factors.append((opt, r))
                    if n - r:
                        s_factors.append((opt, n - r))
                yield coeff, t_factors, s_factors
            return
        _, n = counts[idx]
        for r in range(0, min(n, left) + 1):
            chosen.append(r)
            yield from rec(idx + 1, left - r, chosen)
            chosen.pop()

    if 0 <= alpha <= alpha + beta:
        yield from rec(0, alpha, [])


def _monomial_power(m: Monomial, e: int) -> Monomial:
    out = Monomial()
    for _ in range(e):
        out = out * m
    return out


class _BoundedClosure:
    """Bucketed spans of the full bounded substitution closure."""

    def __init__(self, gens, window: ClosureWindow, field: Field | None = None):
        self.window = window
        gens = [g for g in gens if not g.is_zero]
        if field is None and gens:
            field = gens[0].field
        self.field = field
        self.any_linear = False
        self.components = []
        for g in gens:
            if field is not None:
                field.check_same(g.field)
            if g.degree() > window.max_degree:
                raise WindowTooSmall(
                    f"generator of degree {g.degree()} exceeds the window"
                )
            for key, part in sorted(g.split_multihomogeneous().items()):
                if part.lin:
                    self.any_linear = True
                else:
                    self.components.append((dict(key), part.quad))
        self._buckets = {}

    def bucket(self, mu: dict):
        """Row-reduced span of the quadratic component at multidegree mu."""
        key = _multidegree_key(mu)
        if key in self._buckets:
            return self._buckets[key]
        mu = dict(key)
        field = self.field
        rows: list
        if field is None:
            rows = []
        elif self.any_linear:
            monos = sorted(_iter_splits(mu, mixed_only=True), key=weight_key)
            rows = [Poly(field, {m: field.one}) for m in reversed(monos)]
        else:
            ech = Echelon(field, sort_key=weight_key)
            options = _basis_monomial_options(mu)
            for delta, quad in self.components:
                if sum(delta.values()) > sum(mu.values()):
                    continue
                for elem, used in self._component_patterns(delta, quad, options, mu):
                    left = {v: mu[v] - used.get(v, 0) for v in mu}
                    left = {v: d for v, d in left.items() if d}
                    for mult in _iter_splits(left) if left else [Monomial()]:
                        ech.insert(dict(elem.mul_monomial(mult).terms))
            ordered = sorted(ech.rows, key=lambda r: weight_key(r[0]), reverse=True)
            rows = [Poly(field, vec) for _, vec, _ in ordered]
        self._buckets[key] = rows
        return rows

    def _component_patterns(self, delta, quad, options, mu):
        """Substitution patterns for one multihomogeneous generator part.

        Assigns to each variable of the part a multiset of basis
        monomials; the yielded element is the corresponding coefficient
        of the formal expansion, already summed over all ways the y- and
        z-exponents of each generator monomial can distribute over the
        multiset.
        """
        field = self.field
        variables = sorted(delta)

        def rec(pos, remaining, assigned):
            if pos == len(variables):
                elem = self._pattern_element(quad, variables, assigned)
                if not elem.is_zero:
                    used = {v: mu[v] - remaining.get(v, 0) for v in mu}
                    yield elem, {v: d for v, d in used.items() if d}
                return
            v = variables[pos]
            for counts, used in _iter_multisets(options, delta[v], remaining):
                rem = {k: remaining.get(k, 0) - used.get(k, 0) for k in remaining}
                assigned.append(counts)
                yield from rec(pos + 1, rem, assigned)
                assigned.pop()

        yield from rec(0, dict(mu), [])

    def _pattern_element(self, quad, variables, assigned) -> Poly:
        field = self.field
        acc = {}
        for w, cw in quad.terms.items():
            ydeg = dict(w.ys)
            per_var = []
            ok = True
            for v, counts in zip(variables, assigned):
                alpha = ydeg.get(v, 0)
                choices = []
                for coeff, t_factors, s_factors in _iter_count_splits(counts, alpha):
                    mono = Monomial()
                    for (md, t_img, _), r in t_factors:
                        mono = mono * _monomial_power(t_img, r)
                    for (md, _, s_img), r in s_factors:
                        mono = mono * _monomial_power(s_img, r)
                    choices.append((coeff, mono))
                if not choices:
                    ok = False
                    break
                per_var.append(choices)
            if not ok:
                continue
            stack = [(1, Monomial())]
            for choices in per_var:
                stack = [
                    (c0 * c1, m0 * m1) for c0, m0 in stack for c1, m1 in choices
                ]
            for c, m in stack:
                v = field.add(acc.get(m, field.zero), field.mul(cw, field.from_int(c)))
                if v:
                    acc[m] = v
                else:
                    acc.pop(m, None)
        return Poly(field, acc)

    def contains(self, f: BicommElement) -> bool:
        if f.is_zero:
            return True
        if self.field is None:
            return False
        parts = f.split_multihomogeneous()
        for key, part in sorted(parts.items()):
            if part.lin:
                if not self.any_linear:
                    return False
                continue
            rows = self.bucket(dict(key))
            ech = Echelon(self.field, sort_key=weight_key)
            for r in rows:
                ech.insert(dict(r.terms))
            if not ech.contains(dict(part.quad.terms)):
                return False
        return True


class TIdealSpan:
    """Bounded closure presented per multidegree as row-reduced lists."""

    __slots__ = ("window", "field", "buckets")

    def __init__(self, window: ClosureWindow, field, buckets):
        self.window = window
        self.field = field
        self.buckets = buckets

    def component(self, mu) -> list:
        key = _multidegree_key(dict(mu))
        return self.buckets.get(key, [])

    def dimensions(self) -> dict:
        return {key: len(rows) for key, rows in sorted(self.buckets.items())}


def t_ideal_closure_bounded(gens, window: ClosureWindow) -> TIdealSpan:
    """Spans of the bounded substitution closure, bucket by multidegree."""
    closure = _BoundedClosure(gens, window)
    buckets = {}
    field = closure.field
    for mu in _iter_multidegrees(window.max_variables, window.max_degree):
        key = _multidegree_key(mu)
        if sum(mu.values()) == 1:
            if closure.any_linear:
                (v,) = mu
                buckets[key] = [BicommElement.generator(field, v)]
            else:
                buckets[key] = []
            continue
        rows = closure.bucket(mu)
        buckets[key] = [BicommElement.from_quad(p) for p in rows]
    return TIdealSpan(window, field, buckets)


def t_ideal_member_bounded(f: BicommElement, gens, window: ClosureWindow) -> bool:
    """Window-complete membership test in the substitution closure.

    Complete within the window because the closure span is the direct
    sum of its multidegree components, so f belongs exactly when each of
    its multihomogeneous parts lies in the matching component.
    """
    if f.degree() > window.max_degree or f.max_index() > window.max_variables:
        raise WindowTooSmall("element does not fit in the window")
    closure = _BoundedClosure(gens, window, field=f.field)
    return closure.contains(f)


def lift_weight(f: BicommElement, target: Monomial) -> BicommElement:
    """Element of the substitution closure of f with weight exactly target.

    Built the way the weight calculus prescribes: relabel the indices of
    f along the greedy embedding of wt(f) into target, then apply one
    left multiplication by x_k per missing y_k and one right
    multiplication per missing z_k.  Both moves multiply the weight by
    the corresponding variable, so the result's weight is target and its
    leading coefficient equals that of f.
    """
    wt, _ = weight_of(f)
    phi = higman_embedding(wt, target)
    if phi is None:
        raise NotDominated(f"{wt} does not embed into {target}")
    total = {}
    prev = 0
    for i in sorted(f.indices()):
        value = phi.get(i)
        if value is None:
            value = prev + 1
        if value <= prev:
            raise AssertionError("embedding extension failed to increase")
        total[i] = value
        prev = value
    h = f.apply_index_map(total)
    mapped_wt = wt.apply_index_map({i: phi[i] for i in range(1, wt.max_index + 1)})
    q = target.div(mapped_wt)
    field = f.field
    for k, e in q.ys:
        for _ in range(e):
            h = BicommElement.generator(field, k) * h
    for k, e in q.zs:
        for _ in range(e):
            h = h * BicommElement.generator(field, k)
    if weight_of(h)[0] != target:
        raise AssertionError("lift produced the wrong weight")
    return h


def specht_reduce(g: BicommElement, basis, trace=None) -> BicommElement:
    """Reduce the quadratic part of g against lifted basis elements.

    At each pass the current weight is recorded in trace (when given),
    then the first basis element whose weight embeds into it is lifted
    to that exact weight and subtracted with the cancelling ratio.  The
    weight strictly decreases every pass, so the loop terminates; it
    stops when no basis weight embeds.  The trace therefore lists one
    weight per pass, including the final pass that found no reducer.
    """
    field = g.field
    active = []
    for b in basis:
        field.check_same(b.field)
        if not b.quad.is_zero:
            active.append((weight_of(b)[0], b))
    work = g
    while not work.quad.is_zero:
        w, nu = weight_of(work)
        if trace is not None:
            trace.append(w)
        chosen = None
        for wb, b in active:
            if higman_leq(wb, w):
                chosen = b
                break
        if chosen is None:
            break
        h = lift_weight(chosen, w)
        mu = weight_of(h)[1]
        work = work.add_scaled(field.neg(field.div(nu, mu)), h)
        if not work.quad.is_zero and weight_key(weight_of(work)[0]) >= weight_key(w):
            raise AssertionError("reduction failed to decrease the weight")
    return work


def _iter_window_multipliers(window: ClosureWindow, max_total: int):
    """All monomials over the window's variables with degree <= max_total."""
    yield Monomial()
    for total in range(1, max_total + 1):
        for mu in _iter_multidegrees(window.max_variables, total):
            if sum(mu.values()) != total:
                continue
            yield from _iter_splits(mu)


def spanning_shift_multiples(gens, window: ClosureWindow) -> list:
    """Shifted monomial multiples of the generators within the window.

    These elements span the part of the closure that the reduction
    machinery manipulates directly: each is a strictly increasing
    relabeling of a generator times a monomial.
    """
    out = []
    for g in gens:
        if g.is_zero:
            continue
        if g.lin:
            raise UnsupportedGenerator(
                "spanning enumeration needs generators without linear part"
            )
        if g.degree() > window.max_degree:
            raise WindowTooSmall("generator degree exceeds the window")
        indices = sorted(g.indices())
        if len(indices) > window.max_variables:
            raise WindowTooSmall("generator uses more variables than the window")
        room = window.max_degree - g.degree()
        for targets in combinations(range(1, window.max_variables + 1), len(indices)):
            shifted = g.apply_index_map(dict(zip(indices, targets)))
            for mult in _iter_window_multipliers(window, room):
                if mult.is_unit:
                    out.append(shifted)
                else:
                    out.append(BicommElement.from_quad(shifted.quad.mul_monomial(mult)))
    return out


class SpechtSearchResult:
    """Candidate basis with its weight antichain and the window verdict."""

    __slots__ = ("basis", "antichain", "verified")

    def __init__(self, basis, antichain, verified):
        self.basis = basis
        self.antichain = antichain
        self.verified = verified

    def __repr__(self):
        state = "verified" if self.verified else "unverified"
        return f"SpechtSearchResult({len(self.basis)} elements, {state})"


def specht_basis_search(gens, window: ClosureWindow) -> SpechtSearchResult:
    """Select a small basis and verify it against the bounded closure.

    Generators are reduced against the elements already kept, so
    redundant inputs drop out.  The closure span is then enumerated; its
    leading monomials yield the minimal weight antichain.  The verdict
    is true when every leading monomial dominates some kept weight and
    every spanning element reduces to zero, which together force every
    element of the bounded span to reduce to zero.
    """
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        return SpechtSearchResult([], [], True)
    field = gens[0].field
    basis = []
    for g in gens:
        r = specht_reduce(g, basis)
        if not r.is_zero:
            basis.append(r)
    spanning = spanning_shift_multiples(gens, window)
    ech = Echelon(field, sort_key=weight_key)
    for v in spanning:
        ech.insert(dict(v.quad.terms))
    pivots = ech.pivots()
    antichain = minimal_antichain(pivots)
    weights = [weight_of(b)[0] for b in basis]
    covered = all(any(higman_leq(wb, p) for wb in weights) for p in pivots)
    verified = covered and all(specht_reduce(v, basis).is_zero for v in spanning)
    return SpechtSearchResult(basis, antichain, verified)


def char_zero_two_variable_heuristic(gens, window: ClosureWindow | None = None) -> list:
    """Try to rewrite each generator in at most two variables.

    Over the rationals, a two-row symmetry argument lets identity
    systems be compared inside the two-generated free algebra; the
    heuristic substitutes the first two generators for the variables of
    each generator and keeps a candidate whose bounded closure matches.
    Generators with no exact two-variable equivalent pass through
    unchanged.
    """
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        return []
    field = gens[0].field
    if not field.is_rationals:
        raise WrongCharacteristic("the two-variable projection needs rationals")
    max_degree = max(5, max(g.degree() for g in gens))
    if window is None:
        window = ClosureWindow(max_degree, 2)
    else:
        window = ClosureWindow(max(window.max_degree, max_degree), 2)
    out = []
    for g in gens:
        if g.max_index() <= 2:
            out.append(g)
            continue
        variables = sorted(g.indices())
        reference = None
        found = None
        candidates = []
        seen = set()
        for pattern in _iter_assignments(len(variables)):
            sigma = Substitution(
                {
                    v: BicommElement.generator(field, a)
                    for v, a in zip(variables, pattern)
                }
            )
            c = apply_substitution(g, sigma)
            if c.is_zero or c in seen:
                continue
            seen.add(c)
            candidates.append(c)
        for c in candidates:
            if reference is None:
                reference = _closure_table(_BoundedClosure([g], window), window)
            table = _closure_table(_BoundedClosure([c], window), window)
            if table == reference:
                found = c
                break
        out.append(found if found is not None else g)
    return out


def _iter_assignments(n):
    def rec(acc):
        if len(acc) == n:
            yield tuple(acc)
            return
        for a in (1, 2):
            acc.append(a)
            yield from rec(acc)
            acc.pop()

    yield from rec([])


def _closure_table(closure: _BoundedClosure, window: ClosureWindow):
    table = {}
    for mu in _iter_multidegrees(window.max_variables, window.max_degree):
        if sum(mu.values()) == 1:
            table[_multidegree_key(mu)] = closure.any_linear
        else:
            table[_multidegree_key(mu)] = tuple(closure.bucket(mu))
    return table
