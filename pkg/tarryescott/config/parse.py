# -*- coding: utf-8 -*-

import os
import re

import tarryescott.config.constants as const
from tarryescott.utils import to_fraction

PARAM_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


# -----------------------
# numbers and parameters


def parse_rational(text):
    """parse '3', '-3/4' or ' 12 ' to a Fraction"""
    return to_fraction(text)


def parse_integer(text):
    """parse '3' or '6/2' to an int, non integral values raise ValueError"""

    value = parse_rational(text)
    if value.denominator != 1:
        raise ValueError("{0} is not an integer".format(text.strip()))
    return value.numerator


def parse_params(text):
    """
    Parse a parameter string

    Args:
        text : a string like 'm1=1,m2=-3/4', empty string gives no parameters

    Returns:
        a dict of parameter name to Fraction, in input order
    """

    res = {}
    if text is None or text.strip() == "":
        return res

    for item in text.split(","):
        if "=" not in item:
            raise ValueError("{0} is not a name=value pair".format(item))
        name, value = item.split("=", 1)
        name = name.strip()
        if not PARAM_NAME.match(name):
            raise ValueError("{0} is not a valid parameter name".format(name))
        if name in res:
            raise ValueError("{0} is given twice".format(name))
        res[name] = parse_rational(value)
    return res


def parse_coefficients(text, count=None):
    """parse 'c0,c1,...' to a list of Fractions, optionally of a fixed length"""

    values = [parse_rational(v) for v in text.split(",") if v.strip() != ""]
    if count is not None and len(values) != count:
        raise ValueError("expected {0} coefficients, got {1}".format(count, len(values)))
    return values


def parse_pair(text):
    """parse 'i,j' to a tuple of two ints"""

    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2:
        raise ValueError("{0} is not a pair i,j".format(text))
    return int(parts[0]), int(parts[1])


# -----------------------
# environment


def safety_bound(environ=None):
    """return the search safety bound, PTE_SAFETY_BOUND overrides the default"""

    env = os.environ if environ is None else environ
    value = env.get(const.SAFETY_BOUND_ENV)
    if value is None or value.strip() == "":
        return const.DEFAULT_SAFETY_BOUND

    try:
        bound = int(value)
    except ValueError:
        raise ValueError("{0} must be an integer, got {1}".format(const.SAFETY_BOUND_ENV, value))
    if bound < 1:
        raise ValueError("{0} must be positive".format(const.SAFETY_BOUND_ENV))
    return bound
