"""Groebner/Mora engine: frozen small cases plus structural properties."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import V2, nonzero_polynomials, p2, p3
from polarlink.ideals import (
    Ideal,
    canonical,
    dimension,
    exact_divide,
    groebner_basis,
    ideal_quotient,
    intersect,
    is_member,
    local_colength,
    mora_standard_basis,
    normal_form,
    saturate,
    standard_monomials,
)
from polarlink.orders import GLOBAL, LOCAL
from polarlink.poly import INFINITE, Polynomial


def ideal2(*texts):
    return Ideal(tuple(p2(t) for t in texts), 2)


def ideal3(*texts):
    return Ideal(tuple(p3(t) for t in texts), 3)


# --- construction -------------------------------------------------------


def test_ideal_drops_zero_generators():
    I = Ideal((p2("0"), p2("x")), 2)
    assert I.gens == (p2("x"),)


def test_ideal_rejects_mixed_rings():
    with pytest.raises(ValueError):
        Ideal((p2("x"), p3("z")), 2)


def test_zero_ideal_needs_explicit_nvars():
    assert Ideal((), 2).is_zero()
    with pytest.raises(ValueError):
        Ideal(())


# --- Groebner bases -----------------------------------------------------


def test_gb_already_reduced():
    gb = groebner_basis(ideal2("x", "y"))
    assert gb.basis == (p2("y"), p2("x"))
    assert gb.reduced


def test_gb_elimination_consequences():
    I = ideal2("x^2 - y", "x^3")
    gb = groebner_basis(I)
    assert gb.to_str(V2) == "y^2; x*y; x^2 - y"
    assert normal_form(p2("x^3"), gb).is_zero()
    assert is_member(p2("x*y"), I)
    assert dimension(gb) == 0


def test_gb_of_zero_ideal():
    gb = groebner_basis(Ideal((), 2))
    assert gb.basis == ()


def test_gb_unit_ideal():
    gb = groebner_basis(ideal2("x", "x+1"))
    assert gb.basis == (Polynomial.constant(2, 1),)
    assert dimension(gb) == -1


def test_gb_unique_across_generator_orderings():
    a = groebner_basis(ideal2("x^2+y", "x*y+1", "y^3-2"))
    b = groebner_basis(ideal2("y^3-2", "x*y+1", "x^2+y"))
    c = groebner_basis(ideal2("x*y+1", "y^3-2", "x^2+y"))
    assert a.basis == b.basis == c.basis


def _spoly_for_test(f, g, order):
    from polarlink.orders import mono_div, mono_lcm

    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    lcm = mono_lcm(lf, lg)
    return f.mul_term(mono_div(lcm, lf), 1 / f.terms[lf]) - g.mul_term(
        mono_div(lcm, lg), 1 / g.terms[lg]
    )


@settings(max_examples=25)
@given(st.lists(nonzero_polynomials(nvars=2, max_terms=3, max_exp=2), min_size=1, max_size=3))
def test_buchberger_criterion(gens):
    gb = groebner_basis(Ideal(tuple(gens), 2))
    basis = gb.basis
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            s = _spoly_for_test(basis[i], basis[j], GLOBAL)
            assert normal_form(s, gb).is_zero()


@settings(max_examples=25)
@given(
    st.lists(nonzero_polynomials(nvars=2, max_terms=3, max_exp=2), min_size=1, max_size=2),
    nonzero_polynomials(nvars=2, max_terms=3, max_exp=2),
)
def test_membership_agrees_with_tag_elimination(gens, p):
    I = Ideal(tuple(gens), 2)
    direct = is_member(p, I)
    # I cap (p) carries the same answer and is computed by tag elimination
    via_tag = is_member(p, intersect(I, Ideal((p,), 2)))
    assert direct == via_tag


# --- normal forms -------------------------------------------------------


def test_normal_form_member_is_zero():
    gb = groebner_basis(ideal2("x", "y"))
    assert normal_form(p2("x^2"), gb).is_zero()


def test_normal_form_constant_remainder():
    gb = groebner_basis(ideal2("x"))
    assert normal_form(p2("x+1"), gb) == p2("1")


def test_mora_normal_form_local_member():
    sb = mora_standard_basis(ideal2("y^2", "x^2+y^3"))
    assert normal_form(p2("y^3"), sb).is_zero()


def test_normal_form_against_empty_basis():
    sb = groebner_basis(Ideal((), 2))
    assert normal_form(p2("x+y"), sb) == p2("x+y")


# --- Mora standard bases ------------------------------------------------


def test_mora_unit_multiple_of_variable():
    sb = mora_standard_basis(ideal2("x + x^2"))
    assert sb.leading_monomials() == ((1, 0),)
    assert local_colength(ideal2("x + x^2", "y")) == 1


def test_mora_cusp_jacobian_like_ideal():
    sb = mora_standard_basis(ideal2("y^2", "x^2+y^3"))
    assert set(sb.leading_monomials()) == {(0, 2), (2, 0)}
    monos = sorted(standard_monomials(sb))
    assert monos == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_mora_single_variable():
    sb = mora_standard_basis(ideal2("x"))
    assert sb.basis == (p2("x"),)


def test_mora_detects_local_unit():
    sb = mora_standard_basis(ideal2("1 + x"))
    assert sb.basis == (Polynomial.constant(2, 1),)


# --- quotient, intersection, saturation ----------------------------------


def test_exact_divide():
    assert exact_divide(p2("x^2*y + x*y^2"), p2("x*y")) == p2("x + y")
    with pytest.raises(ArithmeticError):
        exact_divide(p2("x^2 + y"), p2("x"))


def test_intersection_principal():
    K = intersect(ideal2("x"), ideal2("y"))
    assert canonical(K).gens == (p2("x*y"),)


def test_quotient_monomial_case():
    Q = ideal_quotient(ideal2("x^2", "x*y"), ideal2("x"))
    assert canonical(Q).gens == canonical(ideal2("x", "y")).gens


def test_quotient_by_nonzerodivisor():
    Q = ideal_quotient(ideal2("x"), ideal2("y"))
    assert canonical(Q).gens == (p2("x"),)


def test_quotient_by_unit_ideal_is_identity():
    I = ideal2("x^2", "x*y")
    Q = ideal_quotient(I, ideal2("1"))
    assert canonical(Q).gens == canonical(I).gens


def test_quotient_by_zero_ideal_rejected():
    with pytest.raises(ValueError):
        ideal_quotient(ideal2("x"), Ideal((), 2))


def test_saturation_classic():
    sat, e = saturate(ideal2("x^2", "x*y"), ideal2("x", "y"))
    assert sat.gens == (p2("x"),)
    assert e == 1


def test_saturation_strips_a_factor():
    sat, e = saturate(ideal2("x*y"), ideal2("x"))
    assert sat.gens == (p2("y"),)
    assert e == 1


def test_saturation_by_unit_is_noop():
    I = ideal2("x^2", "y")
    sat, e = saturate(I, ideal2("1"))
    assert sat.gens == canonical(I).gens
    assert e == 0


@settings(max_examples=20)
@given(
    st.lists(nonzero_polynomials(nvars=2, max_terms=2, max_exp=2), min_size=1, max_size=2),
    nonzero_polynomials(nvars=2, max_terms=2, max_exp=2),
)
def test_quotient_and_saturation_grow(gens, g):
    I = Ideal(tuple(gens), 2)
    J = Ideal((g,), 2)
    Q = ideal_quotient(I, J)
    S, _ = saturate(I, J)
    for h in I.gens:
        assert is_member(h, Q)
    for h in Q.gens:
        assert is_member(h, S)


# --- dimension and colength ----------------------------------------------


def test_dimension_point():
    assert dimension(groebner_basis(ideal2("x", "y"))) == 0


def test_dimension_curve():
    assert dimension(groebner_basis(ideal2("x*y"))) == 1


def test_dimension_unit():
    assert dimension(groebner_basis(ideal2("1"))) == -1


def test_dimension_zero_ideal_is_ambient():
    assert dimension(groebner_basis(Ideal((), 3))) == 3


INVERTIBLE = [
    [[1, 1], [0, 1]],
    [[2, 1], [1, 1]],
    [[1, -2], [3, -5]],
    [[0, 1], [1, 0]],
]


@settings(max_examples=20)
@given(
    st.lists(nonzero_polynomials(nvars=2, max_terms=3, max_exp=2), min_size=1, max_size=2),
    st.sampled_from(INVERTIBLE),
)
def test_dimension_invariant_under_linear_change(gens, m):
    I = Ideal(tuple(gens), 2)
    moved = Ideal(tuple(g.substitute_linear(m) for g in gens), 2)
    assert dimension(groebner_basis(I)) == dimension(groebner_basis(moved))


def test_colength_monomial():
    assert local_colength(ideal2("x", "y^2")) == 2


def test_colength_cusp_like():
    assert local_colength(ideal2("y^2", "x^2+y^3")) == 4


def test_colength_positive_dimension_is_infinite():
    assert local_colength(ideal2("x*y")) is INFINITE
    assert local_colength(Ideal((), 2)) is INFINITE


def test_colength_unit():
    assert local_colength(ideal2("1 + y")) == 0


def test_colength_sees_local_units():
    # x - x^2 differs from x by a local unit, so the quotient is a point
    assert local_colength(ideal2("x - x^2", "y")) == 1
