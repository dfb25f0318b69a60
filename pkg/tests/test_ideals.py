"""Groebner machinery and ideal membership, checked against closures
built directly from generator actions."""

import itertools
import random

import pytest

from bicomm.algebra import BicommElement
from bicomm.errors import BadChain, UnsupportedGenerator
from bicomm.ideals import (
    GroebnerBasis,
    TwoSidedPresentation,
    buchberger,
    chain_stabilization,
    left_ideal_member,
    poly_divmod,
    poly_normal_form,
    right_ideal_member,
    spolynomial,
    two_sided_member,
)
from bicomm.linalg import Echelon
from bicomm.monomials import Monomial, parse_monomial
from bicomm.orders import weight_key
from bicomm.polynomials import Poly

from conftest import QQ, F2, F5, element, quad_element, random_mixed_monomial, random_scalar


def _poly(field, *pairs):
    terms = {}
    for text, c in pairs:
        terms[parse_monomial(text)] = field.from_int(c)
    return Poly(field, terms)


def _random_poly(rng, field, terms=3, max_index=2, max_degree=4):
    p = Poly(field, {})
    for _ in range(terms):
        m = random_mixed_monomial(rng, max_index=max_index, max_degree=max_degree)
        p = p.add_scaled(random_scalar(rng, field, nonzero=True), Poly(field, {m: field.one}))
    return p


def _vec(e):
    v = {("l", i): c for i, c in e.lin.items()}
    for m, c in e.quad.terms.items():
        v[("q", m)] = c
    return v


def _vec_key(key):
    if key[0] == "l":
        return (0, key[1])
    return (1, weight_key(key[1]))


def _min_degree(e):
    d = None
    if e.lin:
        d = 1
    for m in e.quad.terms:
        d = m.degree if d is None else min(d, m.degree)
    return 0 if d is None else d


def _action_closure(gens, var_range, cap):
    """Echelon spanning every element reachable from the generators by
    repeated left and right multiplication with x_1..x_var_range, where
    products are expanded while their smallest component degree stays
    within cap."""
    field = gens[0].field
    ech = Echelon(field, sort_key=_vec_key)
    frontier = []

    def add(e):
        if e.is_zero:
            return
        if ech.insert(_vec(e)) is None:
            frontier.append(e)

    for g in gens:
        add(g)
    while frontier:
        e = frontier.pop()
        if _min_degree(e) > cap:
            continue
        for j in range(1, var_range + 1):
            xj = BicommElement.generator(field, j)
            add(xj.multiply(e))
            add(e.multiply(xj))
    return ech


def _monomials_up_to(var_range, max_degree):
    slots = []
    for i in range(1, var_range + 1):
        slots.append(("y", i))
        slots.append(("z", i))
    out = []
    for d in range(1, max_degree + 1):
        for combo in itertools.combinations_with_replacement(slots, d):
            ys = [i for kind, i in combo if kind == "y"]
            zs = [i for kind, i in combo if kind == "z"]
            out.append(Monomial([(i, ys.count(i)) for i in set(ys)], [(i, zs.count(i)) for i in set(zs)]))
    return out


def _one_sided_closure(gens, var_range, cap, side):
    """Span of the generators and all their monomial multiples whose
    multiplier carries at least one variable on the acting side.  A
    product v*h contributes t(v)*s(h), and s ranges over z-linear plus
    mixed polynomials, so any monomial with a z slot can multiply from
    the right (and dually for the left)."""
    field = gens[0].field
    ech = Echelon(field, sort_key=_vec_key)
    for g in gens:
        if not g.is_zero:
            ech.insert(_vec(g))
    for g in gens:
        for m in _monomials_up_to(var_range, cap - _min_degree(g)):
            ok = m.ydeg >= 1 if side == "left" else m.zdeg >= 1
            if ok:
                ech.insert(_vec(BicommElement.from_quad(g.quad.mul_monomial(m))))
    return ech


def test_division_identity_and_irreducible_remainder():
    rng = random.Random(401)
    for field in (QQ, F5):
        for _ in range(40):
            p = _random_poly(rng, field, terms=4)
            divisors = [_random_poly(rng, field, terms=2, max_degree=3) for _ in range(2)]
            divisors = [d for d in divisors if not d.is_zero]
            cofactors, rem = poly_divmod(p, divisors)
            total = rem
            for q, d in zip(cofactors, divisors):
                total = total.add(q.mul(d))
            assert total == p
            leads = [d.leading()[0] for d in divisors]
            for m in rem.terms:
                assert not any(lm.divides(m) for lm in leads)


def test_spolynomial_cancels_the_common_leading_monomial():
    rng = random.Random(402)
    for _ in range(60):
        f = _random_poly(rng, QQ, terms=3)
        g = _random_poly(rng, QQ, terms=3)
        if f.is_zero or g.is_zero:
            continue
        lcm = f.leading()[0].lcm(g.leading()[0])
        s = spolynomial(f, g)
        assert lcm not in s.terms
        for m in s.terms:
            assert weight_key(m) < weight_key(lcm)


def test_buchberger_closes_under_spolynomials():
    rng = random.Random(403)
    for field in (QQ, F2):
        for _ in range(15):
            gens = [_random_poly(rng, field, terms=2, max_degree=3) for _ in range(3)]
            gens = [g for g in gens if not g.is_zero]
            gb = buchberger(gens, field)
            for g in gens:
                assert poly_normal_form(g, gb).is_zero
            rows = gb.generators
            for i in range(len(rows)):
                for j in range(i + 1, len(rows)):
                    s = spolynomial(rows[i], rows[j])
                    assert poly_normal_form(s, gb).is_zero


def test_buchberger_output_is_reduced_and_order_independent():
    rng = random.Random(404)
    for _ in range(10):
        gens = [_random_poly(rng, QQ, terms=2, max_degree=3) for _ in range(3)]
        gens = [g for g in gens if not g.is_zero]
        gb = buchberger(gens, QQ)
        leads = [g.leading()[0] for g in gb.generators]
        for i, g in enumerate(gb.generators):
            assert g.leading()[1] == QQ.one
            for m in g.terms:
                for j, lm in enumerate(leads):
                    if j != i:
                        assert not lm.divides(m)
        shuffled = gens[:]
        rng.shuffle(shuffled)
        assert buchberger(shuffled, QQ) == gb


def test_buchberger_literal_example():
    gb = buchberger([_poly(QQ, ("y1*z1", 1), ("y1*z2", 1)), _poly(QQ, ("y1*z2", 1))], QQ)
    assert gb.generators == [_poly(QQ, ("y1*z1", 1)), _poly(QQ, ("y1*z2", 1))]


def test_normal_form_is_linear_over_a_groebner_basis():
    rng = random.Random(405)
    gens = [_poly(QQ, ("y1*z1", 1), ("y1*z2", -1)), _poly(QQ, ("y2*z1", 1), ("y1*z1", 2))]
    gb = buchberger(gens, QQ)
    for _ in range(20):
        p = _random_poly(rng, QQ)
        q = _random_poly(rng, QQ)
        c = random_scalar(rng, QQ)
        lhs = poly_normal_form(p.scale(c).add(q), gb)
        rhs = poly_normal_form(p, gb).scale(c).add(poly_normal_form(q, gb))
        assert lhs == rhs


def _random_member(rng, gens, depth=2):
    """A random combination of generator action words, hence a member."""
    field = gens[0].field
    total = BicommElement.zero(field)
    for g in gens:
        e = g
        for _ in range(rng.randrange(depth + 1)):
            j = rng.randrange(1, 3)
            xj = BicommElement.generator(field, j)
            e = xj.multiply(e) if rng.random() < 0.5 else e.multiply(xj)
        total = total.add_scaled(random_scalar(rng, field, nonzero=True), e)
    return total


def test_two_sided_membership_agrees_with_action_closure():
    rng = random.Random(406)
    for field in (QQ, F2):
        for trial in range(12):
            gens = [
                element(
                    field,
                    lin={1: 1} if trial % 3 == 0 else None,
                    quad=[(str(random_mixed_monomial(rng, max_index=2, max_degree=3)), 1)],
                ),
                quad_element(field, (str(random_mixed_monomial(rng, max_index=2, max_degree=2)), 1)),
            ]
            gens = [g for g in gens if not g.is_zero]
            candidates = [_random_member(rng, gens) for _ in range(2)]
            candidates += [
                quad_element(field, (str(random_mixed_monomial(rng, max_index=2, max_degree=4)), 1))
                for _ in range(2)
            ]
            cap = max(5, max(f.degree() for f in candidates if not f.is_zero) + 1)
            # one variable beyond anything used, to exercise the range logic
            closure = _action_closure(gens, var_range=3, cap=cap)
            for f in candidates:
                got = two_sided_member(f, gens)
                assert got.member == closure.contains(_vec(f)), str(f)


def test_two_sided_certificate_reconstructs_the_element():
    rng = random.Random(407)
    for field in (QQ, F5):
        gens = [
            element(field, lin={1: 1, 2: 2}, quad=[("y1*z1", 1)]),
            quad_element(field, ("y1*z2", 1), ("y2*z1", 1)),
        ]
        pres = TwoSidedPresentation(gens)
        for _ in range(10):
            f = _random_member(rng, gens, depth=3)
            res = two_sided_member(f, pres)
            assert res.member
            gb, pi, _ = pres.data_for_range(max(f.max_index(), pres.var_range))
            rebuilt = BicommElement.zero(field)
            for k, c in res.mu.items():
                rebuilt = rebuilt.add_scaled(c, gens[k])
            extra = Poly(field, {})
            for i, c in res.span.items():
                extra = extra.add_scaled(c, pi[i])
            for j, cof in res.cofactors:
                extra = extra.add(cof.mul(gb.generators[j]))
            assert rebuilt.add_scaled(field.one, BicommElement.from_quad(extra)) == f


def test_two_sided_multidegree_obstruction():
    # the ideal of y1*z1 only reaches monomials with at least two slots
    # on the first variable
    g = quad_element(QQ, ("y1*z1", 1))
    assert two_sided_member(quad_element(QQ, ("y1^2*z1", 3)), [g])
    assert two_sided_member(quad_element(QQ, ("y1*z1*z2", 1)), [g])
    assert not two_sided_member(quad_element(QQ, ("y1*z2", 1)), [g])
    assert not two_sided_member(quad_element(QQ, ("y2*z2", 1)), [g])


def test_two_sided_accepts_plain_lists_and_zero_cases():
    g = quad_element(QQ, ("y1*z1", 1))
    zero = BicommElement.zero(QQ)
    assert two_sided_member(zero, [g])
    assert two_sided_member(zero, [])
    assert not two_sided_member(g, [])
    assert two_sided_member(g, [zero, g])


def test_one_sided_membership_matches_direct_closure():
    rng = random.Random(408)
    for field in (QQ, F2):
        for _ in range(10):
            gens = [
                quad_element(field, (str(random_mixed_monomial(rng, max_index=2, max_degree=3)), 1)),
                quad_element(field, (str(random_mixed_monomial(rng, max_index=2, max_degree=2)), 1)),
            ]
            fs = [
                quad_element(field, (str(random_mixed_monomial(rng, max_index=2, max_degree=4)), 1))
                for _ in range(3)
            ]
            fs.append(_random_member(rng, gens))
            for side, member in (("left", left_ideal_member), ("right", right_ideal_member)):
                closure = _one_sided_closure(gens, var_range=3, cap=6, side=side)
                for f in fs:
                    if f.lin:
                        continue
                    assert member(f, gens).member == closure.contains(_vec(f)), (side, str(f))


def test_left_and_right_ideals_differ():
    g = quad_element(QQ, ("y1*z1", 1))
    f = quad_element(QQ, ("y1^2*z1", 1))
    assert left_ideal_member(f, [g])
    assert not right_ideal_member(f, [g])
    h = quad_element(QQ, ("y1*z1^2", 1))
    assert right_ideal_member(h, [g])
    assert not left_ideal_member(h, [g])


def test_one_sided_rejects_unsupported_inputs():
    g = element(QQ, lin={1: 1}, quad=[("y1*z1", 1)])
    with pytest.raises(UnsupportedGenerator):
        left_ideal_member(quad_element(QQ, ("y1*z1", 1)), [g])
    f = element(QQ, lin={2: 1})
    assert not left_ideal_member(f, [quad_element(QQ, ("y1*z1", 1))])
    assert not right_ideal_member(f, [quad_element(QQ, ("y1*z1", 1))])


def test_strictly_ascending_left_chain_and_flat_two_sided_chain():
    # z-multiples of a fixed mixed monomial never enter the left ideal
    # of the earlier ones, while right multiplication by x1 produces
    # each next element from the first
    family = [quad_element(QQ, (f"y1*z1^{n}", 1)) for n in range(1, 7)]
    for n in range(1, len(family)):
        assert not left_ideal_member(family[n], family[:n])
        assert two_sided_member(family[n], [family[0]])
    steps = [family[: n + 1] for n in range(len(family))]
    assert chain_stabilization(steps, mode="left") is None
    assert chain_stabilization(steps, mode="two") == 1


def test_chain_stabilization_modes_and_errors():
    g = quad_element(QQ, ("y1*z1", 1))
    x1 = BicommElement.generator(QQ, 1)
    grown = [g, x1.multiply(g), g.multiply(x1)]
    assert chain_stabilization([[g], grown[:2], grown], mode="two") == 1
    h = quad_element(QQ, ("y2*z2", 1))
    member = g.multiply(x1)
    assert chain_stabilization([[g], [g, h], [g, h, member]], mode="two") == 2
    assert chain_stabilization([], mode="two") == 1
    assert chain_stabilization([[BicommElement.zero(QQ)]], mode="two") == 1
    assert chain_stabilization([[g], [g, h]], mode="two") is None
    with pytest.raises(BadChain):
        chain_stabilization([[g, h], [g]], mode="two")
    with pytest.raises(ValueError):
        chain_stabilization([[g]], mode="sideways")


def test_presentation_reuses_cached_data():
    gens = [element(QQ, lin={1: 1}, quad=[("y1*z1", 1)])]
    pres = TwoSidedPresentation(gens)
    first = pres.data_for_range(2)
    again = pres.data_for_range(2)
    assert first is again
    wider = pres.data_for_range(3)
    assert wider is not first
    assert isinstance(first[0], GroebnerBasis)
