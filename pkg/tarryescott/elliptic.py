# -*- coding: utf-8 -*-

import logging
from collections import namedtuple

import tarryescott.config.constants as const
from tarryescott.core import MultigradeSolution, reduce, verify_degree
from tarryescott.shift import shift_chain
from tarryescott.utils import (
    DegenerateSolution,
    ExceptionalPoint,
    NotASolution,
    clear_denominators,
    content,
    to_fraction,
)

logger = logging.getLogger(__name__)


class EllipticCurve(namedtuple("EllipticCurve", ["c2", "c4", "c6"])):
    """Y^2 = X^3 + c2 X^2 + c4 X + c6 over the rationals, nonsingular"""

    __slots__ = ()

    def __new__(cls, c2, c4, c6):
        curve = super().__new__(cls, to_fraction(c2), to_fraction(c4), to_fraction(c6))
        if curve.discriminant() == 0:
            raise ValueError("curve {0} is singular".format(tuple(curve)))
        return curve

    def discriminant(self):
        """discriminant of the cubic X^3 + c2 X^2 + c4 X + c6"""
        a, b, c = self
        return 18 * a * b * c - 4 * a**3 * c + a**2 * b**2 - 4 * b**3 - 27 * c**2


class ECPoint(namedtuple("ECPoint", ["x", "y"])):
    """a rational point, x = y = None is the point at infinity"""

    __slots__ = ()

    def __new__(cls, x=None, y=None):
        if x is None or y is None:
            if x is not None or y is not None:
                raise ValueError("a finite point needs both coordinates")
            return super().__new__(cls, None, None)
        return super().__new__(cls, to_fraction(x), to_fraction(y))

    @property
    def is_infinity(self):
        return self.x is None


INFINITY = ECPoint()

QuarticPoint = namedtuple("QuarticPoint", ["u", "v"])

CURVE = EllipticCurve(*const.CURVE_COEFFS)
GENERATOR = ECPoint(*const.GENERATOR)


# ------------------
# Group law
# ------------------


def on_curve(curve, pt):
    if pt.is_infinity:
        return True
    x, y = pt
    return y**2 == x**3 + curve.c2 * x**2 + curve.c4 * x + curve.c6


def negate(curve, p):
    if p.is_infinity:
        return p
    return ECPoint(p.x, -p.y)


def add(curve, p, q):
    """chord and tangent sum of two points on curve"""

    if p.is_infinity:
        return q
    if q.is_infinity:
        return p

    if p.x == q.x:
        if p.y == -q.y:
            return INFINITY
        lam = (3 * p.x**2 + 2 * curve.c2 * p.x + curve.c4) / (2 * p.y)
    else:
        lam = (q.y - p.y) / (q.x - p.x)

    x3 = lam**2 - curve.c2 - p.x - q.x
    y3 = lam * (p.x - x3) - p.y
    return ECPoint(x3, y3)


def double(curve, p):
    return add(curve, p, p)


def scalar_mul(curve, n, p):
    """
    n-fold sum of p, double and add

    Args:
        curve : an EllipticCurve
        n : integer, negative n multiplies -p
        p : an ECPoint on curve

    Returns:
        an ECPoint
    """

    if not on_curve(curve, p):
        raise ValueError("{0} is not on the curve".format(tuple(p)))
    if n < 0:
        return scalar_mul(curve, -n, negate(curve, p))

    res = INFINITY
    base = p
    while n:
        if n & 1:
            res = add(curve, res, base)
        n >>= 1
        if n:
            base = double(curve, base)
    return res


def multiple(n):
    """n times the generator of the curve Y^2 = X^3 - X^2 - 784X + 8704"""
    return scalar_mul(CURVE, n, GENERATOR)


# ------------------
# Quartic V^2 = 18U^4 - 25U^2 + 8
# ------------------


def on_quartic(qp):
    c0, c1, c2, c3, c4 = const.QUARTIC_COEFFS
    u, v = qp
    return v**2 == c0 * u**4 + c1 * u**3 + c2 * u**2 + c3 * u + c4


def weierstrass_to_quartic(pt):
    """
    Map a curve point to the quartic

    U = (9X - Y - 104) / (11X - Y - 236)
    V = (X^3 - 198X^2 + 916X + 980Y + 34336) / (11X - Y - 236)^2
    """

    if pt.is_infinity:
        raise ExceptionalPoint("the point at infinity has no quartic image")
    if not on_curve(CURVE, pt):
        raise ValueError("{0} is not on the curve".format(tuple(pt)))

    x, y = pt
    den = 11 * x - y - 236
    if den == 0:
        raise ExceptionalPoint("11X - Y - 236 vanishes at {0}".format(tuple(pt)))

    u = (9 * x - y - 104) / den
    v = (x**3 - 198 * x**2 + 916 * x + 980 * y + 34336) / den**2
    return QuarticPoint(u, v)


def quartic_to_weierstrass(qp):
    """
    Inverse map

    X = 2(14U^2 - 17U + V + 4) / (U - 1)^2
    Y = 2(36U^3 - 25U^2 + 11UV - 25U - 9V + 16) / (U - 1)^3
    """

    u, v = to_fraction(qp[0]), to_fraction(qp[1])
    if not on_quartic((u, v)):
        raise ValueError("({0}, {1}) is not on the quartic".format(u, v))
    if u == 1:
        raise ExceptionalPoint("U = 1 has no curve image")

    x = 2 * (14 * u**2 - 17 * u + v + 4) / (u - 1) ** 2
    y = 2 * (36 * u**3 - 25 * u**2 + 11 * u * v - 25 * u - 9 * v + 16) / (u - 1) ** 3
    return ECPoint(x, y)


# ------------------
# Solutions from quartic points
# ------------------


def _progressions(qp):
    """integers a, b, d1, d2 with q = s = 1, r = U, p = V / (2U^2 - 1)"""

    u, v = to_fraction(qp[0]), to_fraction(qp[1])
    den = 2 * u**2 - 1
    if den == 0:
        raise ExceptionalPoint("2U^2 - 1 vanishes")
    p = v / den

    values, _ = clear_denominators([p * u + 2, -p * u + 2, p - 3 * u, -p - 3 * u])
    g = content(values)
    if g == 0:
        raise DegenerateSolution("all progression parameters vanish")
    return [x // g for x in values]


def _deg5(qp):
    a, b, d1, d2 = _progressions(qp)

    def side(c, d):
        half = [c - d, c, c + d]
        return half + [-x for x in half]

    sol = MultigradeSolution(side(a, d1), side(b, d2), 5)
    if sol.left == sol.right:
        raise DegenerateSolution("({0}, {1}) gives a trivial solution".format(*qp))
    if verify_degree(sol, 5).max_degree < 5:
        raise NotASolution("({0}, {1}) is not on the quartic".format(*qp))
    return sol, d1, d2


def point_to_deg5(qp):
    """
    Symmetric degree 5 solution from a point of the quartic

    Each side is a three term progression and its negation:
    a - d1, a, a + d1 and b - d2, b, b + d2.

    Args:
        qp : a QuarticPoint

    Returns:
        a reduced MultigradeSolution, 6+6
    """

    sol, _, _ = _deg5(qp)
    return reduce(sol)


def point_to_deg7(qp):
    """
    Symmetric degree 7 solution, the degree 5 solution shifted by d1 then d2

    Returns:
        a reduced MultigradeSolution
    """

    sol, d1, d2 = _deg5(qp)
    res = shift_chain(sol, [d1, d2])
    if res.is_empty() or res.left == res.right:
        raise DegenerateSolution("shifts cancel every term")
    logger.debug("degree 7 solution with %d terms per side", res.size)
    return reduce(res)
