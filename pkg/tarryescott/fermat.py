# -*- coding: utf-8 -*-

import logging
from collections import namedtuple

from tarryescott.utils import AscentStuck, rational_sqrt, to_fraction

logger = logging.getLogger(__name__)


class QuarticForm(namedtuple("QuarticForm", ["c0", "c1", "c2", "c3", "c4"])):
    """f(t) = c0 t^4 + c1 t^3 + c2 t^2 + c3 t + c4, t = u/v of a binary quartic"""

    __slots__ = ()

    def __new__(cls, c0, c1, c2, c3, c4):
        coeffs = [to_fraction(c) for c in (c0, c1, c2, c3, c4)]
        if all(c == 0 for c in coeffs):
            raise ValueError("quartic must not be identically zero")
        return super().__new__(cls, *coeffs)

    def evaluate(self, t):
        t = to_fraction(t)
        res = self.c0
        for c in self[1:]:
            res = res * t + c
        return res

    def taylor(self, t0):
        """coefficients F0..F4 of f(t0 + e) in powers of e"""
        c0, c1, c2, c3, c4 = self
        t0 = to_fraction(t0)
        return (
            self.evaluate(t0),
            4 * c0 * t0**3 + 3 * c1 * t0**2 + 2 * c2 * t0 + c3,
            6 * c0 * t0**2 + 3 * c1 * t0 + c2,
            4 * c0 * t0 + c1,
            c0,
        )


SquarePoint = namedtuple("SquarePoint", ["t", "root"])


def eval_square(f, t):
    """return the nonnegative rational square root of f(t), None if not a square"""
    return rational_sqrt(f.evaluate(t))


# ------------------
# Ascent constructions
# ------------------


def _tangent(f, t0, w):
    """
    fit w + a e + b e^2 to f(t0 + e) up to e^2, the remainder e^3 (A + B e)
    gives e = -A/B
    returns a new t, 'square' if f is the square of the fitted quadratic, or None
    """

    F0, F1, F2, F3, F4 = f.taylor(t0)
    alpha = F1 / (2 * w)
    beta = (F2 - alpha**2) / (2 * w)
    A = F3 - 2 * alpha * beta
    B = F4 - beta**2

    if A == 0 and B == 0:
        return "square"
    if B == 0 or A == 0:
        return None
    return t0 - A / B


def _secant(f, t0, w, t_other, w_other):
    """
    quadratic g through (t0, w) tangent to sqrt f, and through (t_other, w_other)
    f - g^2 = L (t - t0)^2 (t - t_other)(t - t1)
    """

    c0, c1 = f.c0, f.c1
    slope = f.taylor(t0)[1] / (2 * w)
    h = t_other - t0
    gamma = (w_other - w - slope * h) / h**2
    g2 = gamma
    g1 = slope - 2 * gamma * t0

    L = c0 - g2**2
    M = c1 - 2 * g2 * g1
    if L == 0:
        return None
    return -M / L - 2 * t0 - t_other


def _leading(f, t0, w, sign):
    """
    fit w + a e + b e^2 with b^2 = F4 and 2ab = F3, the remainder e (C + D e)
    gives e = -C/D
    """

    F0, F1, F2, F3, F4 = f.taylor(t0)
    root = rational_sqrt(F4)
    if root is None or root == 0:
        return None
    beta = sign * root
    alpha = F3 / (2 * beta)
    C = F1 - 2 * w * alpha
    D = F2 - alpha**2 - 2 * w * beta
    if C == 0 or D == 0:
        return None
    return t0 - C / D


def fermat_ascent(f, t0, known=()):
    """
    Find a new rational t1 making f(t1) a square from a square point t0

    The tangent construction is tried first, then secants through the known
    square points, then the construction matching the leading coefficient.

    Args:
        f : a QuarticForm
        t0 : rational with f(t0) a nonzero square
        known : other rationals where f is a square, used by the secant

    Returns:
        a rational t1 != t0 with f(t1) a square
    """

    t0 = to_fraction(t0)
    w = eval_square(f, t0)
    if w is None or w == 0:
        raise ValueError("f({0}) must be a nonzero rational square".format(t0))

    def accept(t1):
        return t1 is not None and t1 != t0 and eval_square(f, t1) is not None

    t1 = _tangent(f, t0, w)
    if t1 == "square":
        logger.debug("quartic is a square, any point works")
        return t0 + 1
    if accept(t1):
        return t1

    logger.info("tangent at %s degenerates, trying secants", t0)
    for t_other in known:
        t_other = to_fraction(t_other)
        w_other = eval_square(f, t_other) if t_other != t0 else None
        if w_other is None:
            continue
        for s in (1, -1):
            t1 = _secant(f, t0, w, t_other, s * w_other)
            if accept(t1) and t1 != t_other:
                return t1

    logger.info("secants through %d points degenerate, matching the leading term", len(known))
    for s in (1, -1):
        t1 = _leading(f, t0, w, s)
        if accept(t1):
            return t1

    raise AscentStuck("no new square point from t0={0}".format(t0))


def ascend(f, t0, steps, known=()):
    """
    Repeat fermat_ascent, starting each step from the last new point

    Returns:
        a list of (t, sqrt f(t)) SquarePoint, at most steps long
    """

    seen = [to_fraction(t0)] + [to_fraction(t) for t in known]
    current = seen[0]
    res = []
    for _ in range(steps):
        t1 = fermat_ascent(f, current, known=seen)
        if t1 in seen:
            logger.warning("ascent returned the known point %s, stopping", t1)
            break
        seen.append(t1)
        res.append(SquarePoint(t1, eval_square(f, t1)))
        current = t1
    return res
