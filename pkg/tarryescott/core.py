# -*- coding: utf-8 -*-

import json
import math
from collections import Counter, namedtuple

import pandas as pd

import tarryescott.config.constants as const
from tarryescott.utils import (
    DegenerateSolution,
    NotASolution,
    SideCardinalityMismatch,
    ZeroScale,
    clear_denominators,
    content,
    to_fraction,
)


def _as_int(value):
    """exact integer from int, integral Fraction or decimal string"""

    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError("{0} is not an exact integer".format(value))
    if isinstance(value, int):
        return value
    v = to_fraction(value)
    if v.denominator != 1:
        raise ValueError("{0} is not an integer, clear denominators first".format(value))
    return v.numerator


# ------------------
# Solutions
# ------------------


class MultigradeSolution(namedtuple("MultigradeSolution", ["left", "right", "degree"])):
    """
    Two multisets of integers and a claimed degree k

    Sides are stored as sorted tuples, so equal multisets compare equal.
    """

    __slots__ = ()

    def __new__(cls, left, right, degree=0):
        left = tuple(sorted(_as_int(v) for v in left))
        right = tuple(sorted(_as_int(v) for v in right))
        degree = int(degree)
        if degree < 0:
            raise ValueError("degree must be nonnegative, got {0}".format(degree))
        return super().__new__(cls, left, right, degree)

    @property
    def size(self):
        return len(self.left)

    def is_empty(self):
        return len(self.left) == 0 and len(self.right) == 0

    def with_degree(self, degree):
        return MultigradeSolution(self.left, self.right, degree)

    def __str__(self):
        return format_solution(self)


def negate(sol):
    """negate every entry"""
    return MultigradeSolution([-x for x in sol.left], [-y for y in sol.right], sol.degree)


def _check_sides(sol):
    if len(sol.left) != len(sol.right):
        raise SideCardinalityMismatch(len(sol.left), len(sol.right))


# ------------------
# Verification
# ------------------


class VerifyReport(namedtuple("VerifyReport", ["per_exponent", "max_degree"])):
    """per_exponent is a tuple of (r, holds) for r = 1..cap"""

    __slots__ = ()

    def holds(self, r):
        for e, ok in self.per_exponent:
            if e == r:
                return ok
        raise ValueError("exponent {0} was not checked".format(r))

    @property
    def cap(self):
        return len(self.per_exponent)

    def holding(self):
        """set of exponents where power sums agree"""
        return {r for r, ok in self.per_exponent if ok}

    def to_frame(self):
        """return the report as a DataFrame indexed by exponent"""
        df = pd.DataFrame(list(self.per_exponent), columns=["r", "holds"])
        return df.set_index("r")


def power_sum(values, r):
    """exact sum of r-th powers"""

    if r < 1:
        raise ValueError("exponent must be positive, got {0}".format(r))
    return sum(v**r for v in values)


def verify_degree(sol, cap=None):
    """
    Check which power sums agree

    Args:
        sol : a MultigradeSolution
        cap : largest exponent to check, default claimed degree + 2

    Returns:
        a VerifyReport, max_degree is the largest k' with r = 1..k' all holding
    """

    _check_sides(sol)
    if cap is None:
        cap = sol.degree + const.VERIFY_CAP_MARGIN
    if cap < 1:
        raise ValueError("cap must be positive, got {0}".format(cap))

    per_exponent = []
    max_degree = 0
    prefix = True
    lp, rp = list(sol.left), list(sol.right)
    for r in range(1, cap + 1):
        ok = sum(lp) == sum(rp)
        per_exponent.append((r, ok))
        prefix = prefix and ok
        if prefix:
            max_degree = r
        lp = [p * x for p, x in zip(lp, sol.left)]
        rp = [p * y for p, y in zip(rp, sol.right)]

    return VerifyReport(tuple(per_exponent), max_degree)


def verify_exponents(sol, exponents):
    """return a dict exponent -> power sums agree, for any set of exponents"""

    _check_sides(sol)
    return {r: power_sum(sol.left, r) == power_sum(sol.right, r) for r in sorted(set(exponents))}


def equal_products(sol):
    """True if the products of the two sides agree"""
    _check_sides(sol)
    return math.prod(sol.left) == math.prod(sol.right)


# ------------------
# Frolov transforms and reduced forms
# ------------------


def frolov_transform(sol, M, K):
    """
    Map every entry e to M*e + K, then clear denominators

    Args:
        sol : a MultigradeSolution
        M : nonzero rational scale
        K : rational translation

    Returns:
        a MultigradeSolution with the same claimed degree
    """

    M, K = to_fraction(M), to_fraction(K)
    if M == 0:
        raise ZeroScale()

    values = [M * e + K for e in sol.left + sol.right]
    values, _ = clear_denominators(values)
    n = len(sol.left)
    return MultigradeSolution(values[:n], values[n:], sol.degree)


def _canonical(left, right):
    """
    sort sides, put the smaller side first, then keep the smaller of the two
    sign choices
    """

    candidates = []
    for sign in (1, -1):
        a = sorted(sign * x for x in left)
        b = sorted(sign * y for y in right)
        first, second = min(a, b), max(a, b)
        candidates.append((first, second))
    return min(candidates, key=lambda c: c[0] + c[1])


def reduce(sol):
    """
    Return the reduced form: zero side sums, entry gcd 1, canonical order and sign

    The solution is scaled by s and translated by -sum(left) to stay integral,
    then divided by the gcd of its entries.
    """

    _check_sides(sol)
    s = len(sol.left)
    if s == 0:
        raise DegenerateSolution("cannot reduce the empty solution")

    total = sum(sol.left)
    if total != sum(sol.right):
        raise NotASolution(
            "side sums {0} and {1} differ".format(total, sum(sol.right))
        )

    left = [s * x - total for x in sol.left]
    right = [s * y - total for y in sol.right]
    g = content(left + right)
    if g == 0:
        raise DegenerateSolution("all entries are equal")

    left, right = _canonical([x // g for x in left], [y // g for y in right])
    return MultigradeSolution(left, right, sol.degree)


def equivalent(a, b):
    """True if a and b have the same reduced form, up to sign and side swap"""

    try:
        ra = reduce(a)
    except DegenerateSolution:
        ra = None
    try:
        rb = reduce(b)
    except DegenerateSolution:
        rb = None

    if ra is None or rb is None:
        return ra is None and rb is None and len(a.left) == len(b.left)
    return (ra.left, ra.right) == (rb.left, rb.right)


def _negation_closed(values):
    c = Counter(values)
    return all(c[v] == c[-v] for v in c)


def classify_symmetry(sol):
    """
    Return SymmetricOdd, SymmetricEven or Nonsymmetric on the reduced form
    """

    red = reduce(sol)
    if sorted(-x for x in red.left) == list(red.right):
        return const.SYMMETRIC_ODD
    if _negation_closed(red.left) and _negation_closed(red.right):
        return const.SYMMETRIC_EVEN
    return const.NONSYMMETRIC


def even_power_halves(sol):
    """
    Half of each side of a negation closed solution

    A negation closed solution of degree k gives a solution of the even power
    system r = 2, 4, ..., k - 1 (k odd) on half the terms.

    Returns:
        a tuple (MultigradeSolution of the nonnegative halves, exponents)
    """

    _check_sides(sol)
    if not (_negation_closed(sol.left) and _negation_closed(sol.right)):
        raise ValueError("both sides must be closed under negation")

    def half(values):
        c = Counter(values)
        res = [v for v in values if v > 0]
        return res + [0] * (c[0] // 2)

    left, right = half(sol.left), half(sol.right)
    if len(left) != len(right):
        raise ValueError("sides must have the same number of zero entries")
    exponents = tuple(range(2, sol.degree + 1, 2))
    return MultigradeSolution(left, right, 0), exponents


# ------------------
# Text and JSON formats
# ------------------


def parse_solution(text):
    """
    Parse a solution

    Args:
        text : 'a1 ... as | b1 ... bs @ k' or '{"left": [...], "right": [...], "degree": k}'
               entries are decimal strings or integers, never floats

    Returns:
        a MultigradeSolution, the degree defaults to 0
    """

    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValueError("invalid JSON solution: {0}".format(e))
        if not isinstance(data, dict) or "left" not in data or "right" not in data:
            raise ValueError("JSON solution must have left and right")
        if not isinstance(data["left"], list) or not isinstance(data["right"], list):
            raise ValueError("left and right must be lists")
        degree = data.get("degree", 0)
        if isinstance(degree, bool) or not isinstance(degree, (int, str)):
            raise ValueError("degree must be an integer")
        return MultigradeSolution(data["left"], data["right"], int(degree))

    degree = 0
    if "@" in text:
        text, deg = text.rsplit("@", 1)
        try:
            degree = int(deg.strip())
        except ValueError:
            raise ValueError("{0} is not a degree".format(deg.strip()))

    sides = text.split("|")
    if len(sides) != 2:
        raise ValueError("solution must have exactly one '|' between the sides")

    try:
        left = [int(v) for v in sides[0].split()]
        right = [int(v) for v in sides[1].split()]
    except ValueError as e:
        raise ValueError("entries must be integers: {0}".format(e))
    return MultigradeSolution(left, right, degree)


def format_solution(sol, as_json=False):
    """return the text or JSON form of a solution"""

    if as_json:
        return json.dumps(
            {
                "left": [str(x) for x in sol.left],
                "right": [str(y) for y in sol.right],
                "degree": sol.degree,
            }
        )
    return "{0} | {1} @ {2}".format(
        " ".join(str(x) for x in sol.left),
        " ".join(str(y) for y in sol.right),
        sol.degree,
    )


def read_solutions(stream):
    """parse one solution per non empty line, lines starting with # are skipped"""

    res = []
    for line in stream:
        line = line.strip()
        if line and not line.startswith("#"):
            res.append(parse_solution(line))
    return res
