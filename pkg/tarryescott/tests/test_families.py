# -*- coding: utf-8 -*-

import logging
import random
from fractions import Fraction

import pytest

import tarryescott.config.constants as const
import tarryescott.config.formulas as formulas
from tarryescott import families
from tarryescott.core import (
    MultigradeSolution,
    classify_symmetry,
    equal_products,
    equivalent,
    frolov_transform,
    reduce,
    verify_degree,
)
from tarryescott.fermat import ascend, eval_square, fermat_ascent
from tarryescott.poly import symbols
from tarryescott.utils import (
    DegenerateParameters,
    DenominatorVanishes,
    NoCancellation,
    NotASolution,
    NotIdeal,
)


def test_family_ids():
    assert [f.value for f in families.FamilyId] == formulas.family_ids()
    assert set(families.GENERATORS) == set(formulas.family_ids())


# ------------------
# degree 4


def test_deg4_family_A(deg4_example):
    res = families.deg4_family_A(1, 1)
    assert res == reduce(deg4_example)
    assert classify_symmetry(res) == const.NONSYMMETRIC


def test_deg4_family_A_degenerate():
    with pytest.raises(DegenerateParameters):
        families.deg4_family_A(0, 0)


def test_deg4_six_term():
    res = families.deg4_six_term(1, 1, 1, 2)
    assert res.size == 6
    assert verify_degree(res).max_degree == 4


def test_deg4_six_term_cancels(deg4_example):
    # p = 2 m2 + 1, q = 2 m1 + 2 m2 + 1
    res = families.deg4_six_term(1, 1, 3, 5)
    assert res.size == 5
    assert equivalent(res, deg4_example)


def test_deg4_six_term_denominator():
    with pytest.raises(DenominatorVanishes):
        families.deg4_six_term(1, -1, 1, 2)


def test_deg4_family_B(deg4_b_example):
    assert families.deg4_b_checks(2, 1, 2, -1) == (-20, 26, -14)
    res = families.deg4_family_B(2, 1, 2, -1)
    assert res.size == 5
    assert verify_degree(res).max_degree == 4
    assert equivalent(res, deg4_b_example)
    assert equivalent(families.deg4_family_B(2, 1, 2, -1, cancel=(3, 1)), deg4_b_example)


def test_deg4_family_B_other_pair(deg4_b_example):
    res = families.deg4_family_B(2, 1, 2, -1, cancel=(1, 6))
    other = MultigradeSolution(
        [-2786, -1621, -116, 2139, 2384], [-2461, -2216, 564, 1379, 2734], 4
    )
    assert equivalent(res, other)
    assert not equivalent(res, deg4_b_example)


def test_deg4_family_B_errors():
    with pytest.raises(DenominatorVanishes):
        families.deg4_family_B(1, 1, 1, 1)
    with pytest.raises(ValueError):
        families.deg4_family_B(2, 1, 2, -1, cancel=(0, 6))


# ------------------
# degree 5


def test_deg5_sym_family2(deg5_sym_example):
    res = families.deg5_sym_family2(1, 3)
    assert equivalent(res, deg5_sym_example)
    assert classify_symmetry(res) == const.SYMMETRIC_EVEN


@pytest.mark.parametrize(
    "generator, params",
    [
        (families.deg5_sym_family1, (2, 1, 1)),
        (families.deg5_sym_family2, (2, 1)),
        (families.deg5_sym_family2, (0, 0)),
        (families.deg5_nonsym, (0, 0)),
        (families.deg6_family, (1, 1)),
        (families.eqprod_deg4, (0, 0, 5)),
    ],
)
def test_degenerate_parameters(generator, params):
    with pytest.raises(DegenerateParameters):
        generator(*params)


def test_deg5_nonsym(deg5_nonsym_example):
    res = families.deg5_nonsym(2, -1)
    assert equivalent(res, deg5_nonsym_example)
    assert classify_symmetry(res) == const.NONSYMMETRIC


def test_deg5_nonsym_quartic():
    f = families.deg5_nonsym_quartic(2, -1)
    assert tuple(f) == (379, 704, -1598, -2112, 3411)
    assert eval_square(f, 1) == 28
    assert eval_square(f, Fraction(33, 5)) is not None
    with pytest.raises(DegenerateParameters):
        families.deg5_nonsym_quartic(0, 0)


def test_deg5_nonsym_from_point(deg5_nonsym_example):
    res = families.deg5_nonsym_from_point(2, -1, 33, 5)
    assert equivalent(res, deg5_nonsym_example)


def test_deg5_nonsym_from_point_not_square():
    with pytest.raises(NotASolution):
        families.deg5_nonsym_from_point(2, -1, 2, 1)


def test_deg5_nonsym_points_are_squares():
    rng = random.Random(7)
    for _ in range(5):
        f, g = rng.randint(-9, 9), rng.randint(1, 9)
        quartic = families.deg5_nonsym_quartic(f, g)
        u, v = -3 * (3 * f**2 - g**2), 3 * f**2 + 8 * f * g - g**2
        if v != 0:
            assert eval_square(quartic, Fraction(u, v)) is not None


# ------------------
# degree 6 and 7


def test_deg6_family(deg6_example):
    res = families.deg6_family(1, 3)
    assert equivalent(res, deg6_example)
    assert classify_symmetry(res) == const.SYMMETRIC_ODD


def test_deg7_family(deg7_example):
    res = families.deg7_family(2)
    assert equivalent(res, deg7_example)
    assert classify_symmetry(res) == const.SYMMETRIC_EVEN


def test_deg7_from_progressions(deg7_example):
    assert equivalent(families.deg7_from_progressions(2), deg7_example)
    res = families.deg7_from_progressions(3)
    assert verify_degree(res).max_degree >= 7
    with pytest.raises(ValueError):
        families.deg7_from_progressions(0)


def test_deg7_quartic():
    f = families.deg7_quartic(2)
    assert eval_square(f, 1) == 108
    assert eval_square(f, Fraction(-35, 19)) == Fraction(1620, 361)


def test_deg7_points_are_squares():
    for n in range(1, 6):
        r, s = -(4 * n**2 + 9 * n + 1), 4 * n**2 + n + 1
        assert eval_square(families.deg7_quartic(n), Fraction(r, s)) is not None


def test_deg7_from_point(deg7_example):
    assert equivalent(families.deg7_from_point(2, -35, 19), deg7_example)
    assert equivalent(families.deg7_from_point(3, -8, 5), families.deg7_from_progressions(3))


def test_deg7_from_ascended_point():
    points = ascend(families.deg7_quartic(2), 1, 2)
    assert points[0].t == Fraction(-35, 19)
    t = points[-1].t
    res = families.deg7_from_point(2, t.numerator, t.denominator)
    assert verify_degree(res).max_degree >= 7
    assert classify_symmetry(res) == const.SYMMETRIC_EVEN


def test_deg7_from_point_errors():
    with pytest.raises(NotASolution):
        families.deg7_from_point(2, 0, 1)
    with pytest.raises(ValueError):
        families.deg7_from_point(0, -35, 19)


def test_deg6_quartic():
    f = families.deg6_quartic(3, 1)
    assert tuple(f) == (17, 0, -106, 0, 153)
    assert eval_square(f, -2) == 1
    assert fermat_ascent(f, -2) == Fraction(-1594, 769)


def test_deg6_from_point(deg6_example):
    assert equivalent(families.deg6_from_point(3, 1, -2, 1), families.deg6_family(3, 1))
    assert equivalent(families.deg6_from_point(1, 3, 2, 1), deg6_example)


def test_deg6_from_ascended_point():
    t = fermat_ascent(families.deg6_quartic(3, 1), -2)
    for sign in (1, -1):
        res = families.deg6_from_point(3, 1, t.numerator, t.denominator, sign=sign)
        assert res.size == 7
        assert verify_degree(res).max_degree >= 6
        assert classify_symmetry(res) == const.SYMMETRIC_ODD
        assert not equivalent(res, families.deg6_family(3, 1))


def test_deg6_from_point_errors():
    with pytest.raises(NotASolution):
        families.deg6_from_point(3, 1, 0, 1)
    with pytest.raises(ValueError):
        families.deg6_from_point(0, 1, -2, 1)
    with pytest.raises(ValueError):
        families.deg6_from_point(3, 1, -2, 1, sign=2)


def test_deg6_cancellation_identity():
    n1, n2, p, q, u, v = symbols("n1 n2 p q u v")
    a1, _, _, _, d = formulas.deg6_parts(n1, n2, p, q, u, v)
    A, B, C = formulas.deg6_cancellation(n1, n2, p, q)
    assert a1 - 2 * n1 * d == 2 * (A * u**2 + B * u * v + C * v**2)

    c = formulas.deg6_quartic(n1, n2)
    assert B**2 - 4 * A * C == 4 * q**2 * (c[0] * p**4 + c[2] * p**2 * q**2 + c[4] * q**4)


def test_deg7_conic_identity():
    n, p, q, r, s = symbols("n p q r s")
    a, b, d1, d2 = formulas.deg7_point_parts(n, p, q, r, s)
    # sums of squares of [+-a, n, d1] and [+-b, n, d2] agree for every p, q, r, s
    assert (3 * (a**2 - b**2) + (4 * n**2 - 1) * (d1**2 - d2**2)).is_zero()

    A, B = formulas.deg7_conic(n, r, s)
    c = formulas.deg7_quartic(n)
    assert A * B == c[0] * r**4 + c[2] * r**2 * s**2 + c[4] * s**4


# ------------------
# equal products


def test_eqprod_deg4(eqprod4_example):
    res = families.eqprod_deg4(2, 1, 1)
    assert equivalent(res, eqprod4_example)
    assert equal_products(eqprod4_example)
    assert verify_degree(families.eqprod_deg4(1, 2, 3)).max_degree >= 4


def test_eqprod_deg5(eqprod5_example):
    res = families.eqprod_deg5(-1)
    assert equivalent(res, eqprod5_example)
    assert equal_products(eqprod5_example)
    assert verify_degree(eqprod5_example).max_degree == 5


# ------------------
# random parameters

PARAM_ERRORS = (DegenerateParameters, DenominatorVanishes, NoCancellation)


def _random_params(rng, count):
    return [Fraction(rng.randint(-12, 12), rng.randint(1, 4)) for _ in range(count)]


def _check_random(family_id, trials, seed):
    rng = random.Random(seed)
    conf = formulas.family_config(family_id)
    ok = 0
    for _ in range(trials):
        params = _random_params(rng, len(conf["params"]))
        try:
            res = families.GENERATORS[family_id](*params)
        except PARAM_ERRORS:
            continue
        ok += 1
        assert verify_degree(res).max_degree >= conf["degree"]
        assert sum(res.left) == 0
        if conf["symmetry"] != const.NONSYMMETRIC:
            assert classify_symmetry(res) == conf["symmetry"]
        if conf["products"]:
            assert equal_products(res)
    assert ok > 0


@pytest.mark.parametrize("family_id", formulas.family_ids())
def test_random_parameters(family_id):
    _check_random(family_id, 10, 11)


@pytest.mark.slow
@pytest.mark.parametrize("family_id", formulas.family_ids())
def test_random_parameters_long(family_id):
    _check_random(family_id, 1000, 12)


# ------------------
# Gloden augmentation


def test_gloden_deg4(deg4_example):
    report = families.gloden_augment(deg4_example)
    assert report.holding() == {1, 2, 3, 4, 6}


def test_gloden_deg5(deg5_nonsym_example):
    report = families.gloden_augment(deg5_nonsym_example)
    assert report.holding() == {1, 2, 3, 4, 5, 7}


def test_gloden_translates(deg4_example):
    moved = frolov_transform(deg4_example, 3, 7)
    assert families.gloden_augment(moved).holds(6)


def test_gloden_symmetric(deg6_example):
    assert families.gloden_augment(deg6_example).holds(8)


def test_gloden_logs_symmetric_input(caplog, deg2, deg4_example):
    with caplog.at_level(logging.INFO, logger="tarryescott.families"):
        assert families.gloden_augment(deg2).holds(4)
    assert "holds trivially" in caplog.text
    assert not [r for r in caplog.records if r.levelno >= logging.WARNING]

    caplog.clear()
    with caplog.at_level(logging.INFO, logger="tarryescott.families"):
        families.gloden_augment(deg4_example)
    assert "trivially" not in caplog.text


def test_gloden_not_ideal(eqprod4_example):
    with pytest.raises(NotIdeal):
        families.gloden_augment(eqprod4_example)


# ------------------
# dispatch


def test_generate(deg7_example):
    assert equivalent(families.generate("Deg7", {"n": 2}), deg7_example)
    assert equivalent(families.generate(families.FamilyId.Deg7, {"n": 2}), deg7_example)


def test_generate_cancel():
    params = {"f": 2, "g": 1, "u": 2, "v": -1}
    assert families.generate("Deg4B", params, cancel=(1, 6)) == families.deg4_family_B(
        2, 1, 2, -1, cancel=(1, 6)
    )
    assert families.generate("Deg4B", params) == families.deg4_family_B(2, 1, 2, -1)


@pytest.mark.parametrize(
    "family_id, params", [("Deg7", {"m": 2}), ("Deg7", {}), ("Deg9", {"n": 2})]
)
def test_generate_errors(family_id, params):
    with pytest.raises(ValueError):
        families.generate(family_id, params)
