# -*- coding: utf-8 -*-

import pytest

from tarryescott.core import MultigradeSolution


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow tests")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long running test, needs --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


def _sym(left, right, degree):
    return MultigradeSolution(
        list(left) + [-x for x in left], list(right) + [-y for y in right], degree
    )


# ------------------
# printed numeric solutions


@pytest.fixture
def deg2():
    return MultigradeSolution([1, 5, 6], [2, 3, 7], 2)


@pytest.fixture
def deg3():
    return MultigradeSolution([0, 4, 7, 11], [1, 2, 9, 10], 3)


@pytest.fixture
def deg4_example():
    return MultigradeSolution([57, -22, 40, -61, -14], [19, 16, -42, 62, -55], 4)


@pytest.fixture
def deg4_b_example():
    return MultigradeSolution(
        [2184, -2011, 164, -1466, 1129], [-2186, 1589, -516, 1984, -871], 4
    )


@pytest.fixture
def deg5_sym_example():
    return _sym([101, 70, 61], [49, 86, 95], 5)


@pytest.fixture
def deg5_nonsym_example():
    return MultigradeSolution(
        [-87973, 121805, -20525, 52947, -108623, 42369],
        [65869, 21507, -98863, -100895, -8325, 120707],
        5,
    )


@pytest.fixture
def deg6_example():
    left = [-66, -134, 133, 47, 8, 87, -75]
    return MultigradeSolution(left, [-x for x in left], 6)


@pytest.fixture
def deg7_example():
    return _sym([63, 211, 125, 292], [36, 203, 145, 293], 7)


@pytest.fixture
def eqprod4_example():
    return MultigradeSolution(
        [5995, 555, 5635, -357, 1243, -477], [-245, 1035, -605, 5883, 763, 5763], 4
    )


@pytest.fixture
def eqprod5_example():
    return MultigradeSolution(
        [11, 26, -104, 126, 171, 16, -84], [91, 91, -4, 176, -54, -114, -24], 5
    )


@pytest.fixture
def ec_deg5_examples():
    return [
        _sym([1965, 1121, 277], [1025, -477, -1979], 5),
        _sym([-201642299, 47046243, 295734785], [299528843, 187147999, 74767155], 5),
    ]


@pytest.fixture
def ec_deg7_examples():
    return [
        _sym([448, 677, 1154, 1569], [303, 818, 1099, 1576], 7),
        _sym(
            [181944317, 134898074, 240031768, 52883769],
            [238134739, 191088496, 115687497, 71460502],
            7,
        ),
    ]
