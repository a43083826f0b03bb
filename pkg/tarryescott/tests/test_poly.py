# -*- coding: utf-8 -*-

import random
from fractions import Fraction

import pytest

import tarryescott.config.formulas as formulas
from tarryescott.poly import MultiPoly, symbols, verify_identity_family
from tarryescott.utils import ExponentOverflow, IdentityFails


def test_difference_of_squares():
    x, y = symbols("x y")
    assert (x + y) * (x - y) == x**2 - y**2


def test_binomial():
    m1, m2 = symbols(["m1", "m2"])
    p = (m1 + m2) ** 3
    assert len(p) == 4
    assert sorted(p.terms.values()) == [1, 1, 3, 3]
    assert p.degree() == 3


def test_eval_family_entry():
    m1, m2 = symbols("m1 m2")
    x1 = formulas.deg4_a(m1, m2)[0][0]
    # 5 times the reduced entry 57
    assert x1.eval({"m1": 1, "m2": 1}) == 285
    assert x1.eval([1, 1]) == 5 * 57


def test_constants_and_fractions():
    x, y = symbols("x y")
    p = x * Fraction(1, 2) + 1
    assert p.eval([3, 0]) == Fraction(5, 2)
    assert (p - p).is_zero()
    assert (2 - x).eval([2, 7]) == 0
    assert MultiPoly.constant(4, ("x", "y")) == 4


def test_substitute():
    x, y = symbols("x y")
    assert (x + y).substitute("y", x) == 2 * x
    assert (x * y**2).substitute("y", 3) == 9 * x


def test_repr():
    x, y = symbols("x y")
    assert repr(x**2 - 2 * y) == "x^2 - 2*y"
    assert repr(x - x) == "0"


def test_errors():
    (x,) = symbols("x", cap=4)
    with pytest.raises(ExponentOverflow):
        x**5
    with pytest.raises(ValueError):
        symbols("x")[0] + symbols("y")[0]
    with pytest.raises(ValueError):
        x.eval({"y": 1})
    with pytest.raises(ValueError):
        symbols("x x")


def _random_poly(rng, xs):
    res = MultiPoly(xs[0].variables)
    for _ in range(rng.randint(1, 4)):
        term = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        for x in xs:
            term = term * x ** rng.randint(0, 2)
        res = res + term
    return res


def test_ring_laws():
    rng = random.Random(8)
    xs = symbols("x y z")
    for _ in range(30):
        p, q, r = (_random_poly(rng, xs) for _ in range(3))
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p * q == q * p
        point = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in xs]
        assert (p * q).eval(point) == p.eval(point) * q.eval(point)
        assert (p - q).eval(point) == p.eval(point) - q.eval(point)


def test_matches_sympy():
    sympy = pytest.importorskip("sympy")
    sx, sy = sympy.symbols("x y")
    x, y = symbols("x y")

    p = (x + 2 * y - 3) ** 3 * (x**2 - y * Fraction(1, 2))
    expr = (sx + 2 * sy - 3) ** 3 * (sx**2 - sy / 2)
    expected = {
        e: Fraction(int(c.p), int(c.q)) for e, c in sympy.Poly(expr, sx, sy).as_dict().items()
    }
    assert p.terms == expected


# ------------------
# identity proofs


@pytest.mark.parametrize("family_id", formulas.family_ids())
def test_verify_identity_family(family_id):
    report = verify_identity_family(family_id)
    conf = formulas.family_config(family_id)
    assert report.exponents == tuple(range(1, conf["degree"] + 1))
    assert report.products == conf["products"]


def test_identity_fails(monkeypatch):
    def bad(n):
        return [n, -n], [n + 1, -n - 1]

    monkeypatch.setitem(formulas.FAMILIES["Deg7"], "formula", bad)
    with pytest.raises(IdentityFails) as e:
        verify_identity_family("Deg7")
    assert e.value.r == 2
    assert e.value.family == "Deg7"
    assert not e.value.poly.is_zero()
