"""Shared strategies and small builders for the test suite."""

from fractions import Fraction

from hypothesis import strategies as st

from polarlink.parse import parse_polynomial
from polarlink.poly import Polynomial

V2 = ["x", "y"]
V3 = ["x", "y", "z"]


def p2(text):
    return parse_polynomial(text, V2)


def p3(text):
    return parse_polynomial(text, V3)


def rationals():
    return st.builds(
        Fraction, st.integers(-30, 30), st.integers(1, 7)
    )


def monomials(nvars, max_exp=3):
    return st.tuples(*([st.integers(0, max_exp)] * nvars))


def polynomials(nvars=2, max_terms=5, max_exp=3):
    return st.dictionaries(
        monomials(nvars, max_exp), rationals(), max_size=max_terms
    ).map(lambda d: Polynomial(nvars, d))


def nonzero_polynomials(nvars=2, max_terms=5, max_exp=3):
    return polynomials(nvars, max_terms, max_exp).filter(
        lambda p: not p.is_zero()
    )
