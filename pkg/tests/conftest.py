"""Shared constructors and random generators for the test suite."""

import sys

from bicomm.algebra import BicommElement
from bicomm.monomials import Monomial
from bicomm.monomials import parse_monomial as pm
from bicomm.polynomials import Poly
from bicomm.scalars import Field

QQ = Field.rationals()
F2 = Field.prime(2)
F3 = Field.prime(3)
F5 = Field.prime(5)


def quad_element(field, *pairs):
    """Quadratic element from (monomial text, integer coefficient) pairs."""
    terms = {}
    for text, c in pairs:
        m = pm(text)
        v = field.add(terms.get(m, field.zero), field.from_int(c))
        if v:
            terms[m] = v
        else:
            terms.pop(m, None)
    return BicommElement.from_quad(Poly(field, terms))


def element(field, lin=None, quad=None):
    """Element with a linear part {index: int} and quadratic pairs."""
    e = BicommElement.zero(field)
    if lin:
        e = e + BicommElement(field, lin={i: field.from_int(c) for i, c in lin.items()})
    if quad:
        e = e + quad_element(field, *quad)
    return e


def random_scalar(rng, field, nonzero=False):
    while True:
        if field.is_rationals:
            c = field.from_int(rng.randint(-4, 4))
        else:
            c = field.from_int(rng.randrange(field.characteristic))
        if c or not nonzero:
            return c


def random_mixed_monomial(rng, max_index=3, max_degree=5):
    """Random monomial with at least one y and one z factor."""
    ydeg = rng.randint(1, max_degree - 1)
    zdeg = rng.randint(1, max_degree - ydeg)
    ys = {}
    for _ in range(ydeg):
        i = rng.randint(1, max_index)
        ys[i] = ys.get(i, 0) + 1
    zs = {}
    for _ in range(zdeg):
        i = rng.randint(1, max_index)
        zs[i] = zs.get(i, 0) + 1
    return Monomial(ys.items(), zs.items())


def random_quad_element(rng, field, max_index=3, max_degree=5, terms=3):
    acc = {}
    for _ in range(rng.randint(1, terms)):
        m = random_mixed_monomial(rng, max_index, max_degree)
        c = random_scalar(rng, field, nonzero=True)
        v = field.add(acc.get(m, field.zero), c)
        if v:
            acc[m] = v
        else:
            acc.pop(m, None)
    return BicommElement.from_quad(Poly(field, acc))


def random_element(rng, field, max_index=3, max_degree=5, terms=3, linear=True):
    e = random_quad_element(rng, field, max_index, max_degree, terms)
    if linear and rng.random() < 0.5:
        lin = {}
        for _ in range(rng.randint(1, 2)):
            i = rng.randint(1, max_index)
            c = random_scalar(rng, field, nonzero=True)
            v = field.add(lin.get(i, field.zero), c)
            if v:
                lin[i] = v
            else:
                lin.pop(i, None)
        if lin:
            e = e + BicommElement(field, lin=lin)
    return e


def pytest_terminal_summary(terminalreporter):
    """One verdict line per acceptance criterion, when that module ran."""
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(results):
        verdict = "PASS" if results[num] else "FAIL"
        terminalreporter.write_line(f"criterion {num:02d}: {verdict}")
