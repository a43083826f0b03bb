# -*- coding: utf-8 -*-

import logging

from tarryescott.core import MultigradeSolution, verify_degree
from tarryescott.utils import NotASolution, cancel_common

logger = logging.getLogger(__name__)


def tarry_shift(sol, h):
    """
    Raise the degree of a solution by one

    left + (right + h) and right + (left + h), with all common terms cancelled.

    Args:
        sol : a MultigradeSolution verifying to its claimed degree k
        h : integer shift

    Returns:
        a MultigradeSolution of degree k + 1, possibly empty
    """

    if isinstance(h, bool) or int(h) != h:
        raise ValueError("shift must be an integer, got {0}".format(h))
    h = int(h)

    left = list(sol.left) + [y + h for y in sol.right]
    right = list(sol.right) + [x + h for x in sol.left]
    left, right = cancel_common(left, right)
    return MultigradeSolution(left, right, sol.degree + 1)


def shift_chain(sol, hs, check=True):
    """
    Apply tarry_shift for each h in hs

    Args:
        sol : a MultigradeSolution
        hs : list of integer shifts
        check : verify the claimed degree after each step

    Returns:
        a MultigradeSolution of degree sol.degree + len(hs)
    """

    res = sol
    for h in hs:
        res = tarry_shift(res, h)
        logger.debug("shift by %s leaves %d terms per side", h, res.size)
        if check and verify_degree(res, res.degree).max_degree < res.degree:
            raise NotASolution(
                "shift by {0} does not verify to degree {1}".format(h, res.degree)
            )
    return res
