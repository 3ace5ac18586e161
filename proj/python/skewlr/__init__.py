"""Exact skew Littlewood-Richardson computations in combinatorial Hopf algebras.

Elements are dicts mapping index tuples to fractions.Fraction; text such as
"s[2,1] - 2 s[3]" is accepted wherever an element is expected.
"""

from fractions import Fraction

from . import _core
from ._core import (
    CapacityError,
    ParseError,
    core_from_kbounded,
    descent_composition,
    k_conjugate,
    k_pieri,
    lr_coefficient,
    ribbon_conjugate,
    word_section,
)

__all__ = [
    "Algebra",
    "CapacityError",
    "ParseError",
    "core_from_kbounded",
    "descent_composition",
    "k_conjugate",
    "k_pieri",
    "kschur_in_h",
    "lr_coefficient",
    "ribbon_conjugate",
    "skew_k_pieri",
    "skew_lr_combinatorial",
    "verify",
    "word_section",
]


def _element(terms):
    return {tuple(index): Fraction(c) for index, c in terms}


def _skew_sum(terms):
    return {(tuple(outer), tuple(inner)): Fraction(c) for outer, inner, c in terms}


class Algebra:
    """One of "schur", "q", "p", "ribbon", "fundamental" or "kschur" (with k)."""

    def __init__(self, name, k=0):
        self.name = name
        self.k = k
        self._basis = _core.algebra(name, k)

    @property
    def tag(self):
        return self._basis.tag

    def _terms(self, x):
        if isinstance(x, str):
            return self._basis.parse(x)
        return [(list(index), str(Fraction(c))) for index, c in x.items()]

    def basis(self, degree):
        return [tuple(p) for p in self._basis.basis(degree)]

    def element(self, text):
        return _element(self._basis.parse(text))

    def format(self, x):
        return self._basis.format(self._terms(x))

    def product(self, x, y):
        return _element(self._basis.product(self._terms(x), self._terms(y)))

    def coproduct(self, x):
        return {(tuple(a), tuple(b)): Fraction(c) for a, b, c in self._basis.coproduct(self._terms(x))}

    def antipode(self, x):
        return _element(self._basis.antipode(self._terms(x)))

    def skew(self, outer, inner=()):
        return _element(self._basis.skew(list(outer), list(inner)))

    def skew_product(self, left, right):
        """left and right are (outer, inner) pairs; returns the signed skew sum."""
        (mu, lam), (tau, sigma) = left, right
        return _skew_sum(self._basis.skew_product(list(lam), list(mu), list(sigma), list(tau)))

    def evaluate(self, skew_sum):
        terms = [(list(o), list(i), str(Fraction(c))) for (o, i), c in skew_sum.items()]
        return _element(self._basis.evaluate_skew_sum(terms))

    def skew_product_oracle(self, left, right):
        (mu, lam), (tau, sigma) = left, right
        return _element(self._basis.skew_product_oracle(list(lam), list(mu), list(sigma), list(tau)))


def skew_lr_combinatorial(left, right):
    (mu, lam), (tau, sigma) = left, right
    return _skew_sum(_core.skew_lr_combinatorial(list(lam), list(mu), list(sigma), list(tau)))


def skew_k_pieri(lam, mu, r, k):
    return _skew_sum(_core.skew_k_pieri(list(lam), list(mu), r, k))


def kschur_in_h(lam, k):
    return _element(_core.kschur_in_h(list(lam), k))


def verify(algebra, check, max_degree, k=0):
    """List of (name, passed, cases, counterexample)."""
    return _core.verify(algebra, check, max_degree, k)
