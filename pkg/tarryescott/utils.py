# -*- coding: utf-8 -*-

import math
from collections import Counter
from fractions import Fraction


def to_fraction(value):
    """
    convert an int, a Fraction or a decimal string to a Fraction, floats are refused
    """

    if isinstance(value, bool):
        raise ValueError("{0} is not a rational number".format(value))
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError("{0} is not a rational number".format(value))
    raise ValueError("{0} is not an exact rational number".format(value))


def clear_denominators(values):
    """
    Multiply a list of rationals by the least common denominator

    Args:
        values : an iterable of int or Fraction

    Returns:
        a tuple (list of int, factor)
    """

    values = [Fraction(v) for v in values]
    factor = 1
    for v in values:
        factor = factor * v.denominator // math.gcd(factor, v.denominator)
    return [int(v * factor) for v in values], factor


def content(values):
    """gcd of a list of integers, 0 if all are zero"""
    g = 0
    for v in values:
        g = math.gcd(g, v)
    return g


def rational_sqrt(value):
    """
    return the nonnegative rational square root of value, None if not a square
    """

    value = Fraction(value)
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


def cancel_common(left, right):
    """
    remove the multiset intersection of left and right from both sides
    returns two sorted lists
    """

    lc, rc = Counter(left), Counter(right)
    common = lc & rc
    lc.subtract(common)
    rc.subtract(common)
    return sorted(lc.elements()), sorted(rc.elements())


# -------------------
# Errors
# -------------------


class Error(Exception):
    """Base class for exceptions in this module."""

    def __init__(self, message):
        super().__init__(message)
        self.message = message


class SideCardinalityMismatch(Error):
    """Exception raised if the two sides of a solution have different sizes"""

    def __init__(self, left, right):
        super().__init__(
            "sides have {0} and {1} entries, they must be equal".format(left, right)
        )


class ZeroScale(Error):
    """Exception raised on a Frolov transform with M=0"""

    def __init__(self, message="scale M must be nonzero"):
        super().__init__(message)


class DegenerateSolution(Error):
    """Exception raised if a solution collapses to a trivial one"""

    pass


class NotASolution(Error):
    """Exception raised if a solution fails its claimed relations"""

    pass


class NonPositiveCount(Error):
    """Exception raised for a progression with n < 1"""

    def __init__(self, n):
        super().__init__("progression count must be positive, got {0}".format(n))


class UnsupportedExponent(Error):
    """Exception raised if no closed form exists for the exponent"""

    def __init__(self, k):
        super().__init__(
            "closed power sums exist for k in 1..4, got {0}".format(k)
        )


class CardinalityMismatch(Error):
    """Exception raised if assembled blocks have different term counts"""

    def __init__(self, left, right):
        super().__init__(
            "blocks expand to {0} and {1} terms, they must be equal".format(left, right)
        )


class DegenerateParameters(Error):
    """Exception raised if family parameters give a trivial solution"""

    pass


class DenominatorVanishes(Error):
    """Exception raised if a construction divides by zero"""

    pass


class NoCancellation(Error):
    """Exception raised if no d makes the selected pair of terms equal"""

    pass


class NotIdeal(Error):
    """Exception raised if side size is not degree + 1"""

    def __init__(self, size, degree):
        super().__init__(
            "solution of degree {0} has {1} terms per side, ideal needs {2}".format(
                degree, size, degree + 1
            )
        )


class ExceptionalPoint(Error):
    """Exception raised on the exceptional locus of a birational map"""

    pass


class AscentStuck(Error):
    """Exception raised if no new square point can be constructed"""

    pass


class ExponentOverflow(Error):
    """Exception raised if a polynomial exceeds the degree cap"""

    def __init__(self, degree, cap):
        super().__init__(
            "polynomial degree {0} exceeds the cap {1}".format(degree, cap)
        )


class IdentityFails(Error):
    """Exception raised if a power sum difference is not the zero polynomial"""

    def __init__(self, r, poly, family=None):
        self.r = r
        self.poly = poly
        self.family = family
        name = "" if family is None else "{0}: ".format(family)
        super().__init__(
            "{0}power sums differ at r={1} by {2}".format(name, r, poly)
        )


class BoundTooLarge(Error):
    """Exception raised if a search bound exceeds the safety limit"""

    def __init__(self, bound, limit):
        super().__init__(
            "bound {0} exceeds the safety limit {1}, raise PTE_SAFETY_BOUND".format(
                bound, limit
            )
        )
