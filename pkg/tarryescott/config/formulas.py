# -*- coding: utf-8 -*-

"""
Transcribed parametric solutions

Every formula only uses ring operations, so it evaluates both on Fractions
and on MultiPoly indeterminates. Each returns a tuple (left, right).
"""

import tarryescott.config.constants as const


def homogeneous(row, x, y):
    """evaluate [c0, c1, ..., cn] as c0 x^n + c1 x^(n-1) y + ... + cn y^n"""

    n = len(row) - 1
    res = 0
    for i, c in enumerate(row):
        if c != 0:
            res = res + c * x ** (n - i) * y**i
    return res


def symmetric_closure(values):
    """values followed by their negations"""
    return list(values) + [-v for v in values]


# --------------------------------------------------------
# DEGREE 4


def deg4_six_term_parts(m1, m2, p, q):
    """a, b, n, d1, d2 of the three progression degree 4 construction"""

    n = m1 + m2
    c1 = 12 * m1**2 + 12 * m1 * m2 + 4 * m2**2 - 1
    c2 = 8 * m2**2 - 2
    c3 = 4 * m2**2 - 1
    d1 = -(c1 * p**2 - c2 * p * q + c3 * q**2)
    d2 = c1 * p**2 - 2 * c1 * p * q + c3 * q**2
    r = 2 * c1 * p**2 - c2 * q**2
    return n * r, m1 * r, n, d1, d2


def deg4_six_term(m1, m2, p, q):
    a, b, n, d1, d2 = deg4_six_term_parts(m1, m2, p, q)

    left = [
        a - (2 * m1 - 1) * d1,
        a + (2 * m1 + 1) * d1 + 2 * d2,
        -(2 * m2 - 1) * d2,
        (2 * m2 + 1) * d2 + 2 * d1,
        b + (2 * n + 1) * d1,
        b - (2 * n - 1) * d1 + 2 * d2,
    ]
    right = [
        a + (2 * m1 + 1) * d1,
        a - (2 * m1 - 1) * d1 + 2 * d2,
        (2 * m2 + 1) * d2,
        -(2 * m2 - 1) * d2 + 2 * d1,
        b - (2 * n - 1) * d1,
        b + (2 * n + 1) * d1 + 2 * d2,
    ]
    return left, right


def deg4_a(m1, m2):
    left = [
        56 * m1**2 * m2 + 60 * m1 * m2**2 + 12 * m2**3 + 44 * m1**2
        + 70 * m1 * m2 + 24 * m2**2 + 10 * m1 + 9 * m2,
        -24 * m1**2 * m2 + 12 * m2**3 - 36 * m1**2 - 40 * m1 * m2
        - 6 * m2**2 - 10 * m1 - 6 * m2,
        56 * m1**2 * m2 + 80 * m1 * m2**2 + 32 * m2**3 - 16 * m1**2
        + 20 * m1 * m2 + 24 * m2**2 + 4 * m2,
        -64 * m1**2 * m2 - 80 * m1 * m2**2 - 28 * m2**3 - 16 * m1**2
        - 60 * m1 * m2 - 36 * m2**2 - 10 * m1 - 11 * m2,
        -24 * m1**2 * m2 - 60 * m1 * m2**2 - 28 * m2**3 + 24 * m1**2
        + 10 * m1 * m2 - 6 * m2**2 + 10 * m1 + 4 * m2,
    ]
    right = [
        -24 * m1**2 * m2 + 12 * m2**3 + 24 * m1**2 + 40 * m1 * m2
        + 24 * m2**2 + 10 * m1 + 9 * m2,
        56 * m1**2 * m2 + 60 * m1 * m2**2 + 12 * m2**3 - 16 * m1**2
        - 10 * m1 * m2 - 6 * m2**2 - 10 * m1 - 6 * m2,
        -64 * m1**2 * m2 - 80 * m1 * m2**2 - 28 * m2**3 - 16 * m1**2
        - 20 * m1 * m2 - 6 * m2**2 + 4 * m2,
        56 * m1**2 * m2 + 80 * m1 * m2**2 + 32 * m2**3 + 44 * m1**2
        + 60 * m1 * m2 + 24 * m2**2 + 10 * m1 + 4 * m2,
        -24 * m1**2 * m2 - 60 * m1 * m2**2 - 28 * m2**3 - 36 * m1**2
        - 70 * m1 * m2 - 36 * m2**2 - 10 * m1 - 11 * m2,
    ]
    return left, right


def deg4_b_parts(f, g, u, v):
    """progression counts n, centers a and b of the six progression construction"""

    n = [
        f * g * u**2 + (3 * f**2 - g**2) * u * v - 3 * f * g * v**2,
        -(3 * f**2 + g**2) * u * v,
        -f * g * (u**2 + 3 * v**2),
    ]
    a = [
        u
        * (2 * f * g * u + (3 * f**2 - g**2) * v)
        * (
            (3 * f**2 + g**2) * u**2
            + (12 * f**2 - 4 * g**2) * u * v
            - (27 * f**2 + 24 * f * g + 9 * g**2) * v**2
        ),
        (f * u - g * v)
        * (-g * u + 3 * f * v)
        * (
            (3 * f**2 + 4 * f * g - 3 * g**2) * u**2
            + (12 * f**2 - 24 * f * g + 4 * g**2) * u * v
            + (-27 * f**2 + 12 * f * g + 3 * g**2) * v**2
        ),
        2
        * (3 * f**2 + g**2)
        * (g * u**2 + 6 * f * u * v - 3 * g * v**2)
        * (f * u**2 - 2 * g * u * v - 3 * f * v**2),
    ]
    b = [
        v
        * ((3 * f**2 - g**2) * u - 6 * f * g * v)
        * (
            (9 * f**2 + 8 * f * g + 3 * g**2) * u**2
            + (12 * f**2 - 4 * g**2) * u * v
            - (9 * f**2 + 3 * g**2) * v**2
        ),
        (f * u + g * v)
        * (g * u + 3 * f * v)
        * (
            (9 * f**2 - 4 * f * g - g**2) * u**2
            + (12 * f**2 - 24 * f * g + 4 * g**2) * u * v
            - (9 * f**2 + 12 * f * g - 9 * g**2) * v**2
        ),
        0,
    ]
    return n, a, b


def deg4_b(f, g, u, v, d):
    """the 6+6 solution, linear in d"""

    n, a, b = deg4_b_parts(f, g, u, v)
    left = [a[i] - (2 * n[i] - 1) * d for i in range(3)]
    left += [b[i] + (2 * n[i] + 1) * d for i in range(3)]
    right = [a[i] + (2 * n[i] + 1) * d for i in range(3)]
    right += [b[i] - (2 * n[i] - 1) * d for i in range(3)]
    return left, right


# --------------------------------------------------------
# DEGREE 5


def deg5_sym1(n1, p, q):
    left = [
        (2 * p**2 + 6 * q**2) * n1**2 - (p**2 + 6 * p * q - 3 * q**2) * n1
        - p**2 - 3 * q**2,
        2 * (p + q) * (p - 3 * q) * n1**2 - (3 * p**2 + 9 * q**2) * n1
        + (p + q) * (p - 3 * q),
        8 * p * q * n1**2 + (p**2 + 3 * q**2) * n1 - (p + 3 * q) * (p - q),
    ]
    right = [
        (2 * p**2 + 6 * q**2) * n1**2 - 3 * (p + q) * (p - 3 * q) * n1
        + p**2 + 3 * q**2,
        8 * p * q * n1**2 - (p**2 + 3 * q**2) * n1 + (p + q) * (p - 3 * q),
        2 * (p + q) * (p - 3 * q) * n1**2 - (p**2 + 3 * q**2) * n1
        - (p + 3 * q) * (p - q),
    ]
    return symmetric_closure(left), symmetric_closure(right)


def deg5_sym2(m, t):
    left = [
        2 * m**2 - 6 * t * (t - 2) * m + 6 * (t - 1) * (t + 2) * (3 * t - 2),
        m**2 * t + 16 * (t - 1) * m - 3 * t * (t + 2) * (3 * t - 2),
        (2 * t - 2) * m**2 - 2 * (3 * t**2 - 4 * t + 4) * m
        - 6 * (t + 2) * (3 * t - 2),
    ]
    right = [
        (2 * t - 2) * m**2 - 6 * t * (t - 2) * m + 6 * (t + 2) * (3 * t - 2),
        m**2 * t - 16 * (t - 1) * m - 3 * t * (t + 2) * (3 * t - 2),
        2 * m**2 + 2 * (3 * t**2 - 4 * t + 4) * m
        - 6 * (t - 1) * (t + 2) * (3 * t - 2),
    ]
    return symmetric_closure(left), symmetric_closure(right)


DEG5_NONSYM_ROWS = (
    [
        [1701, 3888, 459, 1656, -5310, 2504, -1482, 616, 25, -24, -1],
        [243, 1944, 4509, -5256, -1314, -3112, 42, 40, -17, 48, -7],
        [-1215, -972, 2403, 1872, 4770, 4088, 798, 208, 157, -12, -1],
        [-1215, -2916, 459, 1656, 4122, -832, 1878, -248, -59, 36, -1],
        [243, 972, -3591, -936, 126, -1600, 354, -728, -17, -12, 5],
        [243, -2916, -4239, 1008, -2394, -1048, -1590, 112, -89, -36, 5],
    ],
    [
        [243, -1944, -675, 5544, 4446, 2504, 1770, 184, -17, 48, -7],
        [-1215, -972, 459, -6552, -1062, -1600, -42, -104, 133, 12, -1],
        [243, -972, -4239, 1872, -2394, 4088, -1590, 208, -89, -12, 5],
        [243, 2916, 1593, -2232, -5634, -832, -1374, 184, -17, -36, 5],
        [1701, 3888, 459, 360, -126, -3112, 438, -584, -167, 24, -1],
        [-1215, -2916, 2403, 1008, 4770, -1048, 798, 112, 157, -36, -1],
    ],
)


def deg5_nonsym(f, g):
    left, right = DEG5_NONSYM_ROWS
    return [homogeneous(r, f, g) for r in left], [homogeneous(r, f, g) for r in right]


def deg5_nonsym_quartic(f, g):
    """coefficients of 4d^2 as a binary quartic in u, v"""

    return [
        27 * f**4 - 14 * f**2 * g**2 + 3 * g**4,
        -32 * f * g * (3 * f**2 - g**2),
        -(126 * f**4 - 108 * f**2 * g**2 + 14 * g**4),
        96 * f * g * (3 * f**2 - g**2),
        243 * f**4 - 126 * f**2 * g**2 + 27 * g**4,
    ]


# --------------------------------------------------------
# DEGREE 6 AND 7


def deg6(n1, n2):
    left = [
        -4 * n1 * (n1 - n2) * (n1 + n2) * (n1**2 - 3 * n1 * n2 + n2**2),
        -4 * n1 * (n1**4 - 4 * n1**3 * n2 + 5 * n1**2 * n2**2 - n2**4),
        4 * (n1**2 - n1 * n2 + n2**2) * (n1**3 - 3 * n1**2 * n2 + n2**3),
        -4 * n2 * (n1**4 - 4 * n1**3 * n2 + n1**2 * n2**2 + 2 * n1 * n2**3 - n2**4),
        -4 * n1 * n2 * (n1 - 2 * n2) * (n1**2 + n1 * n2 - n2**2),
        4 * (n1 - n2) * (n1**4 - 2 * n1**3 * n2 - n1**2 * n2**2 + n2**4),
        4 * n2 * (2 * n1 - n2) * (n1 - n2) * (n1**2 - n1 * n2 - n2**2),
    ]
    return left, [-x for x in left]


def deg6_parts(n1, n2, p, q, u, v):
    """
    a1, a2, b1, b2, d of the degree 5 solution on the blocks
    [+-a1, n1, d], [+-a2, n2, d] | [+-b1, n1, d], [+-b2, n2, d]

    r, s, d parametrize the conic (p^2-n1^2q^2) r^2 - (p^2-n2^2q^2) s^2
    + 4(n1^2-n2^2) d^2 = 0 through r = s = 2, d = q.
    """

    P1 = p**2 - n1**2 * q**2
    P2 = p**2 - n2**2 * q**2
    r = 2 * P1 * u**2 - 4 * P2 * u * v + 2 * P2 * v**2
    s = -2 * P1 * u**2 + 4 * P1 * u * v - 2 * P2 * v**2
    d = q * (-P1 * u**2 + P2 * v**2)
    return (
        p * r + n2 * q * s,
        -p * s + n1 * q * r,
        -p * r + n2 * q * s,
        p * s + n1 * q * r,
        d,
    )


def deg6_cancellation(n1, n2, p, q):
    """
    (A, B, C) with A u^2 + B uv + C v^2 = (a1 - 2 n1 d) / 2

    When it vanishes, a1 - (2n1-1)d and -a1 + (2n1+1)d + 2d cancel after the shift.
    """

    A = (p**2 - n1**2 * q**2) * (p + (n1 - n2) * q)
    B = -2 * (p**3 - n2 * p**2 * q - n2**2 * p * q**2 + n1**2 * n2 * q**3)
    C = (p**2 - n2**2 * q**2) * (p - (n1 + n2) * q)
    return A, B, C


def deg6_quartic(n1, n2):
    """coefficients in t = p/q of (B^2 - 4AC) / (4q^2) for deg6_cancellation"""

    c = 2 * n1**2 - n2**2
    return [c, 0, 2 * n2**4 - 3 * n1**2 * n2**2 - n1**4, 0, n1**2 * n2**2 * c]


def deg7(n):
    left = [
        16 * n**4 - 64 * n**3 - 13 * n**2 - 4 * n + 1,
        32 * n**5 - 16 * n**4 + 30 * n**3 + 13 * n**2 - 2 * n - 1,
        -32 * n**5 + 16 * n**4 + 26 * n**3 - 15 * n**2 - 2 * n - 1,
        -32 * n**5 - 32 * n**4 + 26 * n**3 - 32 * n**2 - 2 * n,
    ]
    right = [
        -32 * n**5 + 32 * n**4 + 26 * n**3 + 32 * n**2 - 2 * n,
        -32 * n**5 - 16 * n**4 + 26 * n**3 + 15 * n**2 - 2 * n + 1,
        16 * n**4 + 64 * n**3 - 13 * n**2 + 4 * n + 1,
        32 * n**5 + 16 * n**4 + 30 * n**3 - 13 * n**2 - 2 * n + 1,
    ]
    return symmetric_closure(left), symmetric_closure(right)


def deg7_parts(n):
    """a, b, d1, d2 of the degree 5 progression solution behind deg7"""

    return (
        -2 * n * (16 * n**4 - 17 * n**2 - 3),
        48 * n**4 + 17 * n**2 - 1,
        -16 * n**4 - 47 * n**2 - 1,
        32 * n**4 - 26 * n**2 + 2,
    )


def deg7_quartic(n):
    """coefficients of {5(2n-1)^2 r^2 - 9(4n^2+1) s^2}{(4n^2+1) r^2 - 5(2n+1)^2 s^2}"""

    p = 5 * (2 * n - 1) ** 2
    q = 9 * (4 * n**2 + 1)
    r = 4 * n**2 + 1
    s = 5 * (2 * n + 1) ** 2
    return [p * r, 0, -(p * s + q * r), 0, q * s]


def deg7_conic(n, r, s):
    """(A, B) with A p^2 = B q^2 the degree 4 condition, once pqrs is removed"""

    return (
        5 * (2 * n - 1) ** 2 * r**2 - 9 * (4 * n**2 + 1) * s**2,
        (4 * n**2 + 1) * r**2 - 5 * (2 * n + 1) ** 2 * s**2,
    )


def deg7_point_parts(n, p, q, r, s):
    """a, b, d1, d2 solving the degree 2 condition of [+-a, n, d1] | [+-b, n, d2]"""

    return (
        (2 * n - 1) * p * r + (2 * n + 1) * q * s,
        -(2 * n - 1) * p * r + (2 * n + 1) * q * s,
        -3 * p * s + q * r,
        3 * p * s + q * r,
    )


# --------------------------------------------------------
# EQUAL PRODUCTS


def eqprod_deg4(f, g, d):
    def h(c0, c1, c2):
        return c0 * f**2 + c1 * f * g + c2 * g**2 + d

    left = [
        h(6, 12, 6) * h(-30, 4, 2),
        h(-6, 4, 10) * h(30, -4, -2),
        h(18, 20, 2) * h(-18, 12, -2),
        h(6, -4, -10) * h(18, -12, 2),
        h(-6, 20, -6) * h(-18, -20, -2),
        h(6, -20, 6) * h(-6, -12, -6),
    ]
    right = [
        h(-18, 12, -2) * h(-6, 4, 10),
        h(6, -20, 6) * h(18, 20, 2),
        h(-6, 20, -6) * h(6, 12, 6),
        h(30, -4, -2) * h(-6, -12, -6),
        h(-30, 4, 2) * h(6, -4, -10),
        h(18, -12, 2) * h(-18, -20, -2),
    ]
    return left, right


def eqprod_deg5(m):
    left = [
        (4 * m + 3) * (8 * m - 3),
        -2 * (2 * m + 3) * (12 * m - 1),
        -4 * (3 * m + 1) * (4 * m - 9),
        6 * (4 * m + 1) * (8 * m + 1),
        3 * (4 * m + 1) * (16 * m - 3),
        8 * (4 * m + 3) * (m - 1),
        -4 * (16 * m + 9) * (2 * m - 1),
    ]
    right = [
        (8 * m + 1) * (4 * m - 9),
        (16 * m + 9) * (12 * m - 1),
        4 * (2 * m + 3) * (4 * m + 3),
        8 * (3 * m + 1) * (8 * m - 3),
        -6 * (4 * m + 1) * (2 * m - 1),
        -2 * (4 * m + 1) * (16 * m - 3),
        -12 * (4 * m + 3) * (m - 1),
    ]
    return left, right


# --------------------------------------------------------
# FAMILY REGISTRY

# degree : degree of the generated solution
# size : terms per side of the generated solution
# params : generator parameters
# variables : indeterminates of the identity proof, formula arguments in order
# formula : function of variables returning (left, right)
# symmetry : symmetry class for generic parameters
# products : if True, the two sides also have equal products

FAMILIES = {
    "Deg4SixTerm": {
        "degree": 4,
        "size": 6,
        "params": ("m1", "m2", "p", "q"),
        "variables": ("m1", "m2", "p", "q"),
        "formula": deg4_six_term,
        "symmetry": const.NONSYMMETRIC,
        "products": False,
    },
    "Deg4A": {
        "degree": 4,
        "size": 5,
        "params": ("m1", "m2"),
        "variables": ("m1", "m2"),
        "formula": deg4_a,
        "symmetry": const.NONSYMMETRIC,
        "products": False,
    },
    "Deg4B": {
        "degree": 4,
        "size": 5,
        "params": ("f", "g", "u", "v"),
        "variables": ("f", "g", "u", "v", "d"),
        "formula": deg4_b,
        "symmetry": const.NONSYMMETRIC,
        "products": False,
    },
    "Deg5Sym1": {
        "degree": 5,
        "size": 6,
        "params": ("n1", "p", "q"),
        "variables": ("n1", "p", "q"),
        "formula": deg5_sym1,
        "symmetry": const.SYMMETRIC_EVEN,
        "products": False,
    },
    "Deg5Sym2": {
        "degree": 5,
        "size": 6,
        "params": ("m", "t"),
        "variables": ("m", "t"),
        "formula": deg5_sym2,
        "symmetry": const.SYMMETRIC_EVEN,
        "products": False,
    },
    "Deg5Nonsym": {
        "degree": 5,
        "size": 6,
        "params": ("f", "g"),
        "variables": ("f", "g"),
        "formula": deg5_nonsym,
        "symmetry": const.NONSYMMETRIC,
        "products": False,
    },
    "Deg6": {
        "degree": 6,
        "size": 7,
        "params": ("n1", "n2"),
        "variables": ("n1", "n2"),
        "formula": deg6,
        "symmetry": const.SYMMETRIC_ODD,
        "products": False,
    },
    "Deg7": {
        "degree": 7,
        "size": 8,
        "params": ("n",),
        "variables": ("n",),
        "formula": deg7,
        "symmetry": const.SYMMETRIC_EVEN,
        "products": False,
    },
    "EqProdDeg4": {
        "degree": 4,
        "size": 6,
        "params": ("f", "g", "d"),
        "variables": ("f", "g", "d"),
        "formula": eqprod_deg4,
        "symmetry": const.NONSYMMETRIC,
        "products": True,
    },
    "EqProdDeg5": {
        "degree": 5,
        "size": 7,
        "params": ("m",),
        "variables": ("m",),
        "formula": eqprod_deg5,
        "symmetry": const.NONSYMMETRIC,
        "products": True,
    },
}


def family_ids():
    """return all family ids"""
    return list(FAMILIES.keys())


def family_config(family_id):
    """returns the registry entry of a family"""
    if family_id not in FAMILIES:
        raise ValueError(
            "{0} not a valid family, use one of {1}".format(family_id, ", ".join(FAMILIES))
        )
    return FAMILIES[family_id]
