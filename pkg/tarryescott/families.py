# -*- coding: utf-8 -*-

import logging
import math
from enum import Enum

import tarryescott.config.constants as const
import tarryescott.config.formulas as formulas
from tarryescott.core import (
    MultigradeSolution,
    classify_symmetry,
    equal_products,
    power_sum,
    reduce,
    verify_degree,
)
from tarryescott.fermat import QuarticForm
from tarryescott.progression import APBlock, assemble
from tarryescott.shift import shift_chain
from tarryescott.utils import (
    DegenerateParameters,
    DegenerateSolution,
    DenominatorVanishes,
    IdentityFails,
    NoCancellation,
    NotASolution,
    NotIdeal,
    cancel_common,
    clear_denominators,
    content,
    rational_sqrt,
    to_fraction,
)

logger = logging.getLogger(__name__)


class FamilyId(str, Enum):
    Deg4SixTerm = "Deg4SixTerm"
    Deg4A = "Deg4A"
    Deg4B = "Deg4B"
    Deg5Sym1 = "Deg5Sym1"
    Deg5Sym2 = "Deg5Sym2"
    Deg5Nonsym = "Deg5Nonsym"
    Deg6 = "Deg6"
    Deg7 = "Deg7"
    EqProdDeg4 = "EqProdDeg4"
    EqProdDeg5 = "EqProdDeg5"


def _fractions(*values):
    return [to_fraction(v) for v in values]


def _count(n, name="n"):
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ValueError("{0} must be a positive integer, got {1}".format(name, n))
    return int(n)


def _integral(values):
    """scale rationals to integers without a common factor"""

    ints, _ = clear_denominators(values)
    g = content(ints)
    if g == 0:
        raise DegenerateParameters("all progression parameters vanish")
    return [x // g for x in ints]


def _finish(family_id, left, right, cancel=False):
    """
    Clear denominators, check the family relations, return the reduced form

    Raises DegenerateParameters if the sides coincide or collapse,
    IdentityFails if a power sum (or the product) differs.
    """

    conf = formulas.family_config(family_id)
    degree = conf["degree"]

    if cancel:
        left, right = cancel_common(left, right)
    values, _ = clear_denominators(list(left) + list(right))
    sol = MultigradeSolution(values[: len(left)], values[len(left) :], degree)
    if sol.left == sol.right:
        raise DegenerateParameters("{0}: parameters give equal sides".format(family_id))

    report = verify_degree(sol, degree)
    if report.max_degree < degree:
        r = report.max_degree + 1
        diff = power_sum(sol.left, r) - power_sum(sol.right, r)
        raise IdentityFails(r, diff, family_id)

    if conf["products"] and not equal_products(sol):
        raise IdentityFails("product", math.prod(sol.left) - math.prod(sol.right), family_id)

    try:
        return reduce(sol)
    except DegenerateSolution as e:
        raise DegenerateParameters("{0}: {1}".format(family_id, e.message))


# --------------------------------------------------------
# DEGREE 4


def deg4_six_term(m1, m2, p, q):
    """
    Degree 4 solution from three progressions

    Common terms are cancelled, so special (p, q) such as p = 2m2+1,
    q = 2m1+2m2+1 give 5+5 solutions.
    """

    m1, m2, p, q = _fractions(m1, m2, p, q)
    if m1 + m2 == 0:
        raise DenominatorVanishes("m1 + m2 must be nonzero")
    left, right = formulas.deg4_six_term(m1, m2, p, q)
    return _finish(FamilyId.Deg4SixTerm.value, left, right, cancel=True)


def deg4_family_A(m1, m2):
    """
    Two parameter ideal degree 4 family

    Args:
        m1, m2 : rationals

    Returns:
        a reduced 5+5 MultigradeSolution, (1, 1) gives
        57 -22 40 -61 -14 | 19 16 -42 62 -55 up to sign and order
    """

    left, right = formulas.deg4_a(*_fractions(m1, m2))
    return _finish(FamilyId.Deg4A.value, left, right)


def _linear_in_d(f, g, u, v):
    """constant and d coefficient of every term of the 6+6 solution"""

    l0, r0 = formulas.deg4_b(f, g, u, v, 0)
    l1, r1 = formulas.deg4_b(f, g, u, v, 1)
    left = [(c, e - c) for c, e in zip(l0, l1)]
    right = [(c, e - c) for c, e in zip(r0, r1)]
    return left, right


def deg4_b_checks(f, g, u, v):
    """
    Return the progression counts n1, n2, n3 after checking the construction

    Raises DenominatorVanishes if n1 = +-n2, n2 = +-n3, n1 = 0 or n2 = 0, and
    NotASolution if psi = 3(n1+n2+n3)(n1+n2-n3)(-n1+n2+n3)(n1-n2+n3) is not a square.
    """

    n, _, _ = formulas.deg4_b_parts(f, g, u, v)
    n1, n2, n3 = n
    if n1 == 0 or n2 == 0 or n1 in (n2, -n2) or n2 in (n3, -n3):
        raise DenominatorVanishes(
            "progression counts {0}, {1}, {2} make a denominator vanish".format(n1, n2, n3)
        )

    psi = 3 * (n1 + n2 + n3) * (n1 + n2 - n3) * (-n1 + n2 + n3) * (n1 - n2 + n3)
    if rational_sqrt(psi) is None:
        raise NotASolution("psi = {0} is not a square".format(psi))
    return n1, n2, n3


def deg4_family_B(f, g, u, v, cancel=(1, 3)):
    """
    Degree 4 solution from six progressions

    The 6+6 solution is linear in d. d is chosen so that X_i = Y_j for
    cancel = (i, j), 1 based, then the common term is removed.

    Args:
        f, g, u, v : rationals
        cancel : pair (i, j), the default (1, 3) cancels X_1 = Y_3 and at
            (2, 1, 2, -1) gives 2184 -2011 164 -1466 1129 | -2186 1589 -516 1984 -871

    Returns:
        a reduced MultigradeSolution, 5+5 for a nondegenerate choice
    """

    f, g, u, v = _fractions(f, g, u, v)
    i, j = cancel
    if not (1 <= i <= 6 and 1 <= j <= 6):
        raise ValueError("cancel indices must be in 1..6, got {0}".format(cancel))

    deg4_b_checks(f, g, u, v)
    left, right = _linear_in_d(f, g, u, v)
    (x0, x1), (y0, y1) = left[i - 1], right[j - 1]

    if x1 == y1:
        if x0 != y0:
            raise NoCancellation("X_{0} - Y_{1} = {2} for every d".format(i, j, x0 - y0))
        d = 1
        logger.debug("X_%d = Y_%d for every d, taking d = 1", i, j)
    else:
        d = (y0 - x0) / (x1 - y1)
    logger.debug("cancelling X_%d = Y_%d at d = %s", i, j, d)

    xs, ys = formulas.deg4_b(f, g, u, v, d)
    return _finish(FamilyId.Deg4B.value, xs, ys, cancel=True)


# --------------------------------------------------------
# DEGREE 5


def deg5_sym_family1(n1, p, q):
    left, right = formulas.deg5_sym1(*_fractions(n1, p, q))
    return _finish(FamilyId.Deg5Sym1.value, left, right)


def deg5_sym_family2(m, t):
    left, right = formulas.deg5_sym2(*_fractions(m, t))
    return _finish(FamilyId.Deg5Sym2.value, left, right)


def deg5_nonsym(f, g):
    """
    Nonsymmetric degree 5 family, the six progression solution at
    u = -3(3f^2 - g^2), v = 3f^2 + 8fg - g^2
    """

    left, right = formulas.deg5_nonsym(*_fractions(f, g))
    return _finish(FamilyId.Deg5Nonsym.value, left, right)


def deg5_nonsym_quartic(f, g):
    """
    Binary quartic in (u, v) equal to 4d^2 when the 6+6 degree 4 solution
    also holds at r = 5, as a QuarticForm in t = u/v
    """

    try:
        return QuarticForm(*formulas.deg5_nonsym_quartic(*_fractions(f, g)))
    except ValueError:
        raise DegenerateParameters("quartic vanishes identically at f={0}, g={1}".format(f, g))


def deg5_nonsym_from_point(f, g, u, v):
    """
    Nonsymmetric degree 5 solution at any (u, v) making the quartic a square

    d is the nonnegative root of quartic(u, v) / 4.
    """

    f, g, u, v = _fractions(f, g, u, v)
    c = formulas.deg5_nonsym_quartic(f, g)
    value = formulas.homogeneous(c, u, v)
    root = rational_sqrt(value)
    if root is None:
        raise NotASolution("quartic value {0} at ({1}, {2}) is not a square".format(value, u, v))

    left, right = formulas.deg4_b(f, g, u, v, root / 2)
    return _finish(FamilyId.Deg5Nonsym.value, left, right, cancel=True)


# --------------------------------------------------------
# DEGREE 6 AND 7


def deg6_family(n1, n2):
    left, right = formulas.deg6(*_fractions(n1, n2))
    return _finish(FamilyId.Deg6.value, left, right)


def deg6_quartic(n1, n2):
    """
    QuarticForm in t = p/q, a square exactly when the cancellation condition
    of the degree 6 construction has rational roots u/v

    t = n2 - n1 is always a square point.
    """

    try:
        return QuarticForm(*formulas.deg6_quartic(*_fractions(n1, n2)))
    except ValueError:
        raise DegenerateParameters("quartic vanishes identically at n1={0}, n2={1}".format(n1, n2))


def deg6_from_point(n1, n2, p, q, sign=1):
    """
    Symmetric degree 6 solution at any p/q making deg6_quartic a square

    u/v is the root of the cancellation condition taken with sign in front of
    the square root (the single root when the u^2 coefficient vanishes). The
    blocks [+-a1, n1, d], [+-a2, n2, d] | [+-b1, n1, d], [+-b2, n2, d] give a
    degree 5 solution, shifted by 2d, and the cancelled pair leaves 7+7 terms.

    Args:
        n1, n2 : positive integers, the progression counts
        p, q : rationals
        sign : 1 or -1

    Returns:
        a reduced MultigradeSolution of degree 6
    """

    n1, n2 = _count(n1, "n1"), _count(n2, "n2")
    p, q = _fractions(p, q)
    if sign not in (1, -1):
        raise ValueError("sign must be 1 or -1, got {0}".format(sign))

    A, B, C = formulas.deg6_cancellation(n1, n2, p, q)
    if A == 0:
        u, v = (-C, B) if B != 0 else (1, 0)
    else:
        root = rational_sqrt(B**2 - 4 * A * C)
        if root is None:
            raise NotASolution("({0}, {1}) is not a square point of the quartic".format(p, q))
        u, v = -B + sign * root, 2 * A
    logger.debug("n1=%d n2=%d p=%s q=%s: u=%s v=%s", n1, n2, p, q, u, v)

    a1, a2, b1, b2, d = _integral(formulas.deg6_parts(n1, n2, p, q, u, v))
    sol = assemble(
        [APBlock(a1, n1, d), APBlock(-a1, n1, d), APBlock(a2, n2, d), APBlock(-a2, n2, d)],
        [APBlock(b1, n1, d), APBlock(-b1, n1, d), APBlock(b2, n2, d), APBlock(-b2, n2, d)],
        5,
    )
    res = shift_chain(sol, [2 * d])
    return _finish(FamilyId.Deg6.value, res.left, res.right)


def deg7_family(n):
    left, right = formulas.deg7(to_fraction(n))
    return _finish(FamilyId.Deg7.value, left, right)


def deg7_quartic(n):
    """QuarticForm in t = r/s that must be a square for the degree 7 construction"""
    return QuarticForm(*formulas.deg7_quartic(to_fraction(n)))


def deg7_from_progressions(n):
    """
    Degree 7 solution from progressions and two Tarry shifts

    The blocks [a, n, d1], [-a, n, d1] | [b, n, d2], [-b, n, d2] give a degree 5
    solution, shifted by 2 d1 then 2 d2.

    Args:
        n : positive integer, the number of term pairs per block

    Returns:
        a reduced MultigradeSolution of degree 7
    """

    n = _count(n)
    return _deg7_from_blocks(n, *formulas.deg7_parts(n))


def _deg7_from_blocks(n, a, b, d1, d2):
    sol = assemble(
        [APBlock(a, n, d1), APBlock(-a, n, d1)],
        [APBlock(b, n, d2), APBlock(-b, n, d2)],
        5,
    )
    res = shift_chain(sol, [2 * d1, 2 * d2])
    logger.info("n=%d: %d terms per side after two shifts", n, res.size)
    return _finish(FamilyId.Deg7.value, res.left, res.right)


def deg7_from_point(n, r, s):
    """
    Symmetric degree 7 solution at any r/s making deg7_quartic(n) a square

    p : q solves A p^2 = B q^2 from deg7_conic, which gives a, b, d1, d2 of the
    blocks [+-a, n, d1] | [+-b, n, d2]. Repeated fermat_ascent from r/s = 1
    gives new points, the first at n = 2 is -35/19 and reproduces deg7_family(2).

    Args:
        n : positive integer, the number of term pairs per block
        r, s : rationals

    Returns:
        a reduced MultigradeSolution of degree 7
    """

    n = _count(n)
    r, s = _fractions(r, s)
    A, B = formulas.deg7_conic(n, r, s)
    if A == 0:
        p, q = (1, 0) if B != 0 else (1, 1)
    else:
        root = rational_sqrt(A * B)
        if root is None:
            raise NotASolution("({0}, {1}) is not a square point of the quartic".format(r, s))
        p, q = root, A
    logger.debug("n=%d r=%s s=%s: p=%s q=%s", n, r, s, p, q)

    a, b, d1, d2 = _integral(formulas.deg7_point_parts(n, p, q, r, s))
    return _deg7_from_blocks(n, a, b, d1, d2)


# --------------------------------------------------------
# EQUAL PRODUCTS


def eqprod_deg4(f, g, d):
    """degree 4 six term family whose sides also have equal products"""

    left, right = formulas.eqprod_deg4(*_fractions(f, g, d))
    return _finish(FamilyId.EqProdDeg4.value, left, right)


def eqprod_deg5(m):
    """degree 5 seven term family whose sides also have equal products"""

    left, right = formulas.eqprod_deg5(to_fraction(m))
    return _finish(FamilyId.EqProdDeg5.value, left, right)


# --------------------------------------------------------
# GLODEN AUGMENTATION


def gloden_augment(sol):
    """
    Translate an ideal solution so that it also holds at exponent k + 2

    Both sides are shifted by -sum(left) / (k + 1) and denominators cleared.
    Reduced inputs are unchanged by the translation.

    Args:
        sol : an ideal MultigradeSolution of degree k

    Returns:
        the VerifyReport of the translated solution, capped at k + 2
    """

    k = sol.degree
    if sol.size != k + 1:
        raise NotIdeal(sol.size, k)

    shift = -to_fraction(sum(sol.left)) / (k + 1)
    values, _ = clear_denominators([x + shift for x in sol.left + sol.right])
    moved = MultigradeSolution(values[: sol.size], values[sol.size :], k)

    report = verify_degree(moved, k + 2)
    if report.max_degree < k:
        raise NotASolution("input does not verify to its degree {0}".format(k))
    if not report.holds(k + 2):
        logger.warning("exponent %d does not hold after translation", k + 2)
    elif moved.left == moved.right or classify_symmetry(moved) != const.NONSYMMETRIC:
        logger.info("symmetric input, exponent %d holds trivially", k + 2)
    return report


# --------------------------------------------------------
# DISPATCH

GENERATORS = {
    FamilyId.Deg4SixTerm.value: deg4_six_term,
    FamilyId.Deg4A.value: deg4_family_A,
    FamilyId.Deg4B.value: deg4_family_B,
    FamilyId.Deg5Sym1.value: deg5_sym_family1,
    FamilyId.Deg5Sym2.value: deg5_sym_family2,
    FamilyId.Deg5Nonsym.value: deg5_nonsym,
    FamilyId.Deg6.value: deg6_family,
    FamilyId.Deg7.value: deg7_family,
    FamilyId.EqProdDeg4.value: eqprod_deg4,
    FamilyId.EqProdDeg5.value: eqprod_deg5,
}


def generate(family_id, params, **kwargs):
    """
    Run the generator of a family

    Args:
        family_id : a FamilyId or its name
        params : dict of parameter name to rational, exactly the family parameters
        kwargs : extra generator options, e.g. cancel for Deg4B

    Returns:
        a reduced MultigradeSolution
    """

    if isinstance(family_id, FamilyId):
        family_id = family_id.value
    conf = formulas.family_config(family_id)
    expected = conf["params"]
    if set(params) != set(expected):
        raise ValueError(
            "{0} takes parameters {1}, got {2}".format(
                family_id, ", ".join(expected), ", ".join(params) or "none"
            )
        )
    return GENERATORS[family_id](*[params[p] for p in expected], **kwargs)
