# -*- coding: utf-8 -*-

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor

import numpy as np
import pandas as pd

import tarryescott.config.constants as const
from tarryescott.config.parse import safety_bound
from tarryescott.core import MultigradeSolution, reduce, verify_degree
from tarryescott.utils import BoundTooLarge, DegenerateSolution

logger = logging.getLogger(__name__)


# ------------------
# Enumeration
# ------------------


def _zero_sum_tails(prefix, low, count, remaining, bound):
    """
    yield sorted completions of prefix with count values in [low, bound]
    summing to remaining
    """

    if count == 0:
        if remaining == 0:
            yield tuple(prefix)
        return

    for x in range(low, bound + 1):
        rest = remaining - x
        # the other count - 1 values lie in [x, bound]
        if rest < (count - 1) * x:
            break
        if rest > (count - 1) * bound:
            continue
        prefix.append(x)
        yield from _zero_sum_tails(prefix, x, count - 1, rest, bound)
        prefix.pop()


def zero_sum_multisets(first, size, bound):
    """
    sorted multisets of size values in [-bound, bound] with sum 0
    and smallest value first
    """

    if size * first > 0:
        return []
    return list(_zero_sum_tails([first], first, size - 1, -first, bound))


def _partition(args):
    first, size, bound = args
    return zero_sum_multisets(first, size, bound)


def _signatures(multisets, degree, size, bound):
    """DataFrame of power sums r = 2..degree, one row per multiset"""

    fits = size * bound**degree < const.INT64_LIMIT
    arr = np.array(multisets, dtype=np.int64 if fits else object)
    if arr.size == 0:
        arr = arr.reshape(0, size)

    columns = {}
    power = arr.copy()
    for r in range(2, degree + 1):
        power = power * arr
        columns["s{0}".format(r)] = power.sum(axis=1)
    return pd.DataFrame(columns)


# ------------------
# Search
# ------------------


def brute_force_ideal(k, s=None, bound=8, jobs=1):
    """
    All solutions of degree k whose reduced form has entries in [-bound, bound]

    Zero sum multisets are enumerated per smallest entry, grouped by their
    power sums r = 2..k, and every pair inside a group is a solution.

    Args:
        k : degree, at least 1
        s : terms per side, default k + 1 (ideal)
        bound : positive integer, at most the safety bound
        jobs : number of worker processes for the enumeration

    Returns:
        a list of reduced MultigradeSolution, pairwise not equivalent,
        sorted by their entries
    """

    if k < 1:
        raise ValueError("degree must be positive, got {0}".format(k))
    s = k + 1 if s is None else s
    if s < 2:
        raise ValueError("size must be at least 2, got {0}".format(s))
    if bound < 1:
        raise ValueError("bound must be positive, got {0}".format(bound))
    limit = safety_bound()
    if bound > limit:
        raise BoundTooLarge(bound, limit)

    partitions = [(first, s, bound) for first in range(-bound, 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_partition, partitions))
    else:
        parts = [_partition(p) for p in partitions]

    multisets = [m for part in parts for m in part]
    logger.info("%d partitions, %d zero sum multisets", len(partitions), len(multisets))
    if k == 1:
        groups = [list(range(len(multisets)))]
    else:
        df = _signatures(multisets, k, s, bound)
        groups = [list(ix) for ix in df.groupby(list(df.columns)).indices.values()]

    found = {}
    for ix in groups:
        if len(ix) < 2:
            continue
        for i, j in itertools.combinations(ix, 2):
            sol = MultigradeSolution(multisets[i], multisets[j], k)
            if verify_degree(sol, k).max_degree < k:
                continue
            try:
                red = reduce(sol)
            except DegenerateSolution:
                continue
            found.setdefault(red.left + red.right, red)

    res = [found[key] for key in sorted(found)]
    logger.info("degree %d, size %d, bound %d: %d classes", k, s, bound, len(res))
    return res
