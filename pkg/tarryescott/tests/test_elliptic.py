# -*- coding: utf-8 -*-

import random
from fractions import Fraction

import pytest

import tarryescott.config.constants as const
from tarryescott import elliptic
from tarryescott.core import classify_symmetry, equivalent, verify_degree
from tarryescott.utils import DegenerateSolution, ExceptionalPoint

P = elliptic.GENERATOR
P2 = elliptic.ECPoint(Fraction(569, 25), Fraction(-5772, 125))
P3 = elliptic.ECPoint(Fraction(9121912, 591361), Fraction(2979279240, 454756609))


def test_curve():
    curve = elliptic.CURVE
    assert elliptic.on_curve(curve, P)
    assert elliptic.on_curve(curve, elliptic.INFINITY)
    assert not elliptic.on_curve(curve, elliptic.ECPoint(0, 0))
    with pytest.raises(ValueError):
        # y^2 = x^3
        elliptic.EllipticCurve(0, 0, 0)


def test_point():
    assert elliptic.INFINITY.is_infinity
    assert not P.is_infinity
    with pytest.raises(ValueError):
        elliptic.ECPoint(1, None)


def test_group_law():
    curve = elliptic.CURVE
    assert elliptic.double(curve, P) == P2
    assert elliptic.add(curve, P2, P) == P3
    assert elliptic.add(curve, P, elliptic.INFINITY) == P
    assert elliptic.add(curve, P, elliptic.negate(curve, P)).is_infinity


def test_scalar_mul():
    curve = elliptic.CURVE
    assert elliptic.scalar_mul(curve, 1, P) == P
    assert elliptic.multiple(2) == P2
    assert elliptic.multiple(3) == P3
    assert elliptic.multiple(0).is_infinity
    assert elliptic.multiple(-2) == elliptic.negate(curve, P2)
    assert elliptic.multiple(4) == elliptic.double(curve, P2)
    assert elliptic.on_curve(curve, elliptic.multiple(7))


def test_associativity():
    rng = random.Random(10)
    curve = elliptic.CURVE
    points = [elliptic.multiple(n) for n in range(-4, 5)]
    for _ in range(20):
        a, b, c = (rng.choice(points) for _ in range(3))
        left = elliptic.add(curve, elliptic.add(curve, a, b), c)
        right = elliptic.add(curve, a, elliptic.add(curve, b, c))
        assert left == right


def test_birational_maps():
    qp = elliptic.weierstrass_to_quartic(P)
    assert qp == (Fraction(2, 3), Fraction(2, 3))
    for n in range(2, 7):
        pt = elliptic.multiple(n)
        qp = elliptic.weierstrass_to_quartic(pt)
        assert elliptic.on_quartic(qp)
        assert elliptic.quartic_to_weierstrass(qp) == pt


def test_exceptional_points():
    with pytest.raises(ExceptionalPoint):
        elliptic.weierstrass_to_quartic(elliptic.INFINITY)
    with pytest.raises(ExceptionalPoint):
        # V^2 = 18 - 25 + 8 = 1
        elliptic.quartic_to_weierstrass((1, 1))
    with pytest.raises(ValueError):
        elliptic.quartic_to_weierstrass((1, 2))


def test_point_to_deg5(ec_deg5_examples):
    for pt, expected in zip((P2, P3), ec_deg5_examples):
        res = elliptic.point_to_deg5(elliptic.weierstrass_to_quartic(pt))
        assert equivalent(res, expected)
        assert classify_symmetry(res) == const.SYMMETRIC_EVEN


def test_point_to_deg7(ec_deg7_examples):
    for pt, expected in zip((P2, P3), ec_deg7_examples):
        res = elliptic.point_to_deg7(elliptic.weierstrass_to_quartic(pt))
        assert equivalent(res, expected)


def test_generator_is_trivial():
    qp = elliptic.weierstrass_to_quartic(P)
    with pytest.raises(DegenerateSolution):
        elliptic.point_to_deg5(qp)
    with pytest.raises(DegenerateSolution):
        elliptic.point_to_deg7(qp)


@pytest.mark.parametrize("n", range(2, 9))
def test_multiples(n):
    qp = elliptic.weierstrass_to_quartic(elliptic.multiple(n))
    assert verify_degree(elliptic.point_to_deg5(qp)).max_degree >= 5
    res = elliptic.point_to_deg7(qp)
    assert res.size == 8
    assert verify_degree(res).max_degree >= 7
