"""The truncated-colength oracle and the other independent cross-checks.

These are the trust anchors for the standard-basis engine, so they get
their own frozen cases before anything downstream relies on them.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import V2, nonzero_polynomials, p2, p3
from polarlink.errors import NonIsolated
from polarlink.ideals import Ideal, local_colength
from polarlink.oracle import (
    bezout_gamma,
    default_cap,
    monomials_below,
    stable_colength,
    teissier_check,
    truncated_colength,
    verdict,
)
from polarlink.polar import identity_frame, sample_frames
from polarlink.poly import INFINITE


def ideal2(*texts):
    return Ideal(tuple(p2(t) for t in texts), 2)


def test_monomials_below_counts():
    assert len(monomials_below(1, 5)) == 5
    assert len(monomials_below(2, 4)) == 10
    assert len(monomials_below(3, 3)) == 10
    assert monomials_below(2, 0) == []


def test_truncated_simple_point():
    r = truncated_colength(ideal2("x", "y^2"), 4)
    assert (r.value, r.stable) == (2, True)


def test_truncated_cusp_pair():
    r = truncated_colength(ideal2("y^2", "x^2+y^3"), 6)
    assert (r.value, r.stable) == (4, True)


def test_truncated_positive_dimensional_never_stabilizes():
    r = truncated_colength(ideal2("x*y"), 4)
    assert not r.stable
    r2 = truncated_colength(ideal2("x*y"), 8)
    assert not r2.stable
    assert r2.value > r.value


def test_truncated_cap_too_small_is_unstable():
    # the ideal has colength 4 but cap 2 sees too little
    r = truncated_colength(ideal2("y^2", "x^2+y^3"), 2)
    assert not r.stable


def test_stable_colength_doubles_until_stable():
    r = stable_colength(ideal2("y^2", "x^2+y^3"), 2)
    assert r.stable
    assert r.value == 4
    assert r.cap > 2


def test_truncated_unit_ideal():
    r = truncated_colength(ideal2("1 + x"), 4)
    assert (r.value, r.stable) == (0, True)


def test_truncated_zero_ideal():
    r = truncated_colength(Ideal((), 2), 4)
    assert not r.stable


@settings(max_examples=20)
@given(st.lists(nonzero_polynomials(nvars=2, max_terms=3, max_exp=2), min_size=1, max_size=3))
def test_oracle_matches_engine_when_stable(gens):
    I = Ideal(tuple(gens), 2)
    r = stable_colength(I, 8, hard_cap=16)
    engine = local_colength(I)
    if r.stable:
        assert engine == r.value
    else:
        assert engine is INFINITE


def test_bezout_table():
    assert bezout_gamma(2, 3, 0) == 0
    assert bezout_gamma(2, 3, 1) == 4
    assert bezout_gamma(2, 3, 2) == 2
    assert bezout_gamma(2, 3, 3) == 1
    assert bezout_gamma(1, 2, 1) == 1
    assert bezout_gamma(3, 2, 2) == 1
    with pytest.raises(ValueError):
        bezout_gamma(2, 3, 5)


def test_default_cap_scales_with_degree():
    assert default_cap(p2("x*y")) == 8
    assert default_cap(p2("x^4+y^4")) == 12


def test_verdict_passes_iff_equal():
    assert verdict("t", 3, 3).passed
    assert not verdict("t", 3, 4).passed


def test_teissier_cusp_identity_frame():
    v = teissier_check(p2("x^2+y^3"), identity_frame(2))
    assert v.passed
    assert (v.expected, v.actual) == (4, 4)


def test_teissier_cusp_generic_frames():
    f = p2("x^2+y^3")
    for fr in sample_frames(2, 3, seed=7):
        v = teissier_check(f, fr)
        assert v.passed
        assert v.actual == 3  # mu 2 plus generic slice mu 1


def test_teissier_rejects_nonisolated():
    f = p3("y^2 - x^2*z")
    with pytest.raises(NonIsolated):
        teissier_check(f, identity_frame(3))


def test_teissier_rejects_degenerate_frame():
    # the identity frame slices xy along one of its own branches
    with pytest.raises(NonIsolated):
        teissier_check(p2("x*y"), identity_frame(2))
