# -*- coding: utf-8 -*-

import json
from collections import namedtuple
from fractions import Fraction

from tarryescott.core import MultigradeSolution
from tarryescott.utils import (
    CardinalityMismatch,
    NonPositiveCount,
    UnsupportedExponent,
    clear_denominators,
    to_fraction,
)


class APBlock(namedtuple("APBlock", ["a", "n", "d"])):
    """
    Arithmetic progression [a, n, d]: the 2n terms a +- d, a +- 3d, ..., a +- (2n-1)d
    with common difference 2d
    """

    __slots__ = ()

    def __new__(cls, a, n, d):
        if isinstance(n, bool) or int(n) != n:
            raise ValueError("n must be an integer, got {0}".format(n))
        return super().__new__(cls, to_fraction(a), int(n), to_fraction(d))


def _block(block):
    if isinstance(block, APBlock):
        return block
    return APBlock(*block)


def ap_terms(block):
    """return the 2n terms of an APBlock in increasing order of the coefficient of d"""

    a, n, d = _block(block)
    if n < 1:
        raise NonPositiveCount(n)
    return [a + k * d for k in range(-(2 * n - 1), 2 * n, 2)]


def closed_power_sum(block, k):
    """
    Sum of k-th powers of the block terms from the closed forms, k in 1..4

    S1 = 2na
    S2 = 2na^2 + 2n(4n^2-1)d^2/3
    S3 = 2na^3 + 2n(4n^2-1)ad^2
    S4 = 2na^4 + 4n(4n^2-1)a^2d^2 + 2n(4n^2-1)(12n^2-7)d^4/15
    """

    a, n, d = _block(block)
    if n < 1:
        raise NonPositiveCount(n)
    if k not in (1, 2, 3, 4):
        raise UnsupportedExponent(k)

    m = Fraction(n * (4 * n * n - 1))
    if k == 1:
        return 2 * n * a
    if k == 2:
        return 2 * n * a**2 + 2 * m * d**2 / 3
    if k == 3:
        return 2 * n * a**3 + 2 * m * a * d**2
    return 2 * n * a**4 + 4 * m * a**2 * d**2 + 2 * m * (12 * n * n - 7) * d**4 / 15


def assemble(left_blocks, right_blocks, degree):
    """
    Expand blocks on both sides and clear denominators with a single factor

    Args:
        left_blocks : list of APBlock or (a, n, d) tuples
        right_blocks : list of APBlock or (a, n, d) tuples
        degree : claimed degree, not verified

    Returns:
        a MultigradeSolution
    """

    left = [t for b in left_blocks for t in ap_terms(b)]
    right = [t for b in right_blocks for t in ap_terms(b)]
    if len(left) != len(right):
        raise CardinalityMismatch(len(left), len(right))

    values, _ = clear_denominators(left + right)
    return MultigradeSolution(values[: len(left)], values[len(left) :], degree)


# ------------------
# JSON blocks
# ------------------


def parse_block(text):
    """parse '{"a":"5","n":2,"d":"1/2"}' or a dict with the same keys"""

    data = json.loads(text) if isinstance(text, str) else text
    if not isinstance(data, dict) or set(data) != {"a", "n", "d"}:
        raise ValueError("a block needs exactly the keys a, n and d")
    if isinstance(data["n"], bool) or not isinstance(data["n"], int):
        raise ValueError("n must be a JSON integer")
    return APBlock(data["a"], data["n"], data["d"])


def block_to_json(block):
    a, n, d = _block(block)
    return json.dumps({"a": str(a), "n": n, "d": str(d)})
