# -*- coding: utf-8 -*-

from fractions import Fraction

# verify_degree checks up to claimed degree + margin
VERIFY_CAP_MARGIN = 2

# largest total degree a MultiPoly may reach
DEFAULT_DEGREE_CAP = 128

# search bounds above this need PTE_SAFETY_BOUND
DEFAULT_SAFETY_BOUND = 64
SAFETY_BOUND_ENV = "PTE_SAFETY_BOUND"

# largest bound for which search signatures fit in int64
INT64_LIMIT = 2**62

# --------------------------------------------------------
# elliptic curve Y^2 = X^3 + c2 X^2 + c4 X + c6 and its rank one generator

CURVE_COEFFS = (Fraction(-1), Fraction(-784), Fraction(8704))
GENERATOR = (Fraction(-8), Fraction(120))

# quartic V^2 = 18 U^4 - 25 U^2 + 8 birational to the curve
QUARTIC_COEFFS = (18, 0, -25, 0, 8)

# --------------------------------------------------------
# command line exit codes

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

# --------------------------------------------------------
# symmetry classes

SYMMETRIC_ODD = "SymmetricOdd"
SYMMETRIC_EVEN = "SymmetricEven"
NONSYMMETRIC = "Nonsymmetric"


def symmetry_classes():
    """return all symmetry class names"""
    return [SYMMETRIC_ODD, SYMMETRIC_EVEN, NONSYMMETRIC]
