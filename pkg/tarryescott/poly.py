# -*- coding: utf-8 -*-

import logging
from collections import namedtuple
from fractions import Fraction
from numbers import Rational

import tarryescott.config.constants as const
import tarryescott.config.formulas as formulas
from tarryescott.utils import ExponentOverflow, IdentityFails

logger = logging.getLogger(__name__)


def _normalize(c):
    """store integral coefficients as int"""
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class MultiPoly:
    """
    Multivariate polynomial with exact rational coefficients

    terms maps exponent tuples, one entry per variable, to nonzero coefficients.
    Operands must share the same variables, ints and Fractions are promoted to
    constants.
    """

    __slots__ = ("variables", "terms", "cap")

    def __init__(self, variables, terms=None, cap=const.DEFAULT_DEGREE_CAP):
        self.variables = tuple(variables)
        self.cap = cap
        self.terms = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) != len(self.variables):
                    raise ValueError(
                        "exponent {0} does not match variables {1}".format(exps, self.variables)
                    )
                if c != 0:
                    self.terms[tuple(exps)] = _normalize(c)
        if self.degree() > self.cap:
            raise ExponentOverflow(self.degree(), self.cap)

    # ------------------
    # construction

    @classmethod
    def constant(cls, value, variables, cap=const.DEFAULT_DEGREE_CAP):
        return cls(variables, {(0,) * len(variables): Fraction(value)}, cap=cap)

    @classmethod
    def variable(cls, name, variables, cap=const.DEFAULT_DEGREE_CAP):
        variables = tuple(variables)
        if name not in variables:
            raise ValueError("{0} is not one of {1}".format(name, variables))
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exps: 1}, cap=cap)

    def _new(self, terms):
        res = MultiPoly(self.variables, cap=self.cap)
        res.terms = {e: _normalize(c) for e, c in terms.items() if c != 0}
        return res

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise ValueError(
                    "variables {0} and {1} differ".format(self.variables, other.variables)
                )
            return other
        if isinstance(other, Rational):
            return MultiPoly.constant(other, self.variables, cap=self.cap)
        return NotImplemented

    # ------------------
    # properties

    def degree(self):
        """total degree, -1 for the zero polynomial"""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    # ------------------
    # ring operations

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        res = dict(self.terms)
        for e, c in other.terms.items():
            res[e] = res.get(e, 0) + c
        return self._new(res)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other

        if self.degree() + other.degree() > self.cap:
            raise ExponentOverflow(self.degree() + other.degree(), self.cap)

        res = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                res[e] = res.get(e, 0) + c1 * c2
        return self._new(res)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("{0} must be a nonnegative integer".format(exponent))
        if self.degree() * exponent > self.cap:
            raise ExponentOverflow(self.degree() * exponent, self.cap)

        res = MultiPoly.constant(1, self.variables, cap=self.cap)
        base = self
        while exponent:
            if exponent & 1:
                res = res * base
            exponent >>= 1
            if exponent:
                base = base * base
        return res

    # ------------------
    # evaluation

    def _values(self, values):
        if isinstance(values, dict):
            missing = [v for v in self.variables if v not in values]
            if missing:
                raise ValueError("missing values for {0}".format(", ".join(missing)))
            return [values[v] for v in self.variables]
        values = list(values)
        if len(values) != len(self.variables):
            raise ValueError(
                "expected {0} values, got {1}".format(len(self.variables), len(values))
            )
        return values

    def eval(self, values):
        """
        Evaluate at a point

        Args:
            values : dict of variable name to rational, or a sequence in variable order

        Returns:
            an int or a Fraction
        """

        point = [Fraction(v) for v in self._values(values)]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for x, k in zip(point, e):
                if k:
                    term *= x**k
            total += term
        return _normalize(total)

    def substitute(self, name, value):
        """replace variable name by a rational or a MultiPoly over the same variables"""

        if name not in self.variables:
            raise ValueError("{0} is not one of {1}".format(name, self.variables))
        ix = self.variables.index(name)
        value = self._coerce(value)

        powers = {}
        res = MultiPoly(self.variables, cap=self.cap)
        for e, c in self.terms.items():
            k = e[ix]
            if k not in powers:
                powers[k] = value**k
            rest = e[:ix] + (0,) + e[ix + 1 :]
            res = res + self._new({rest: c}) * powers[k]
        return res

    # ------------------
    # printing

    def __repr__(self):
        if not self.terms:
            return "0"

        # graded lex, highest degree first
        keys = sorted(self.terms, key=lambda e: (-sum(e), [-k for k in e]))
        parts = []
        for e in keys:
            c = self.terms[e]
            mono = "*".join(
                v if k == 1 else "{0}^{1}".format(v, k)
                for v, k in zip(self.variables, e)
                if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                coef = "({0})".format(c) if isinstance(c, Fraction) else str(c)
                parts.append("{0}*{1}".format(coef, mono))
        return " + ".join(parts).replace("+ -", "- ")


def symbols(names, cap=const.DEFAULT_DEGREE_CAP):
    """
    return one MultiPoly per name, all over the same variables
    names is a sequence or a space separated string
    """

    if isinstance(names, str):
        names = names.split()
    names = tuple(names)
    if len(set(names)) != len(names):
        raise ValueError("variable names must be distinct: {0}".format(names))
    return tuple(MultiPoly.variable(n, names, cap=cap) for n in names)


# ------------------
# Identity proofs
# ------------------

ProofReport = namedtuple("ProofReport", ["family", "variables", "exponents", "products"])


def power_sum_differences(left, right, degree):
    """
    yield (r, sum left^r - sum right^r) for r = 1..degree
    powers are built incrementally
    """

    lp, rp = list(left), list(right)
    for r in range(1, degree + 1):
        yield r, sum(lp[1:], lp[0]) - sum(rp[1:], rp[0])
        if r < degree:
            lp = [p * x for p, x in zip(lp, left)]
            rp = [p * y for p, y in zip(rp, right)]


def _product(values):
    res = values[0]
    for v in values[1:]:
        res = res * v
    return res


def verify_identity_family(family_id, cap=const.DEFAULT_DEGREE_CAP):
    """
    Prove a family as a polynomial identity in its parameters

    Args:
        family_id : a family id of the formulas registry
        cap : degree cap of the intermediate polynomials

    Returns:
        a ProofReport, raise IdentityFails at the first exponent whose
        power sum difference is not the zero polynomial
    """

    conf = formulas.family_config(family_id)
    xs = symbols(conf["variables"], cap=cap)
    left, right = conf["formula"](*xs)

    checked = []
    for r, diff in power_sum_differences(left, right, conf["degree"]):
        if not diff.is_zero():
            raise IdentityFails(r, diff, family_id)
        logger.debug("%s: power sums agree at r=%d", family_id, r)
        checked.append(r)

    if conf["products"]:
        diff = _product(left) - _product(right)
        if not diff.is_zero():
            raise IdentityFails("product", diff, family_id)

    logger.info("%s proved for r=1..%d", family_id, conf["degree"])
    return ProofReport(family_id, conf["variables"], tuple(checked), conf["products"])
