from fractions import Fraction
import random

import pytest
from hypothesis import given, settings, strategies as st

from coincidence.engine import (IsometryHandle, csl_of_action, is_coincidence, module_dual_check,
                                pair_from_rotation, reflection_sigma, sigma, sigma_closed_form, sigma_oracle)
from coincidence.engine.sigma import action_matrix, cayley_inverse, integral_primitive
from coincidence.errors import DomainError, UnsupportedError
from coincidence.lattice import Lattice, index
from coincidence.linalg import inverse
from coincidence.quaternions import Quat, cayley3, make_primitive, odd_part, rot4

comp = st.integers(-6, 6)
quats = st.builds(Quat, comp, comp, comp, comp).filter(bool).map(lambda q: make_primitive(q)[0])


def test_planar_example():
    h = IsometryHandle.from_matrix("4/5,-3/5;3/5,4/5")
    res = sigma(h, "Z2", with_csl=True)
    assert res.sigma == 5
    assert index(Lattice.standard(2), res.csl) == 5


def test_identity_and_irrational():
    assert sigma(IsometryHandle.from_matrix("1,0,0;0,1,0;0,0,1"), "Z3").sigma == 1
    res = sigma(IsometryHandle.from_matrix("sqrt(2)/2,-sqrt(2)/2;sqrt(2)/2,sqrt(2)/2"), "Z2")
    assert res.sigma is None and not res.is_coincidence and res.sigma_text() == "inf"


def test_not_orthogonal_is_an_error():
    with pytest.raises(DomainError):
        is_coincidence(IsometryHandle.from_matrix("1,1;0,1"), "Z2")


@pytest.mark.parametrize("name", ["Z3", "FCC", "BCC"])
def test_cubic_example(name):
    assert sigma_oracle(IsometryHandle.from_quaternion("(0,1,1,1)"), name).sigma == 3


@given(quats)
@settings(max_examples=40, deadline=None)
def test_cubic_closed_form_equals_oracle(q):
    h = IsometryHandle.from_quaternion(q)
    expected = odd_part(q.norm2())
    for name in ("Z3", "FCC", "BCC"):
        assert sigma_oracle(h, name).sigma == expected
    assert sigma_closed_form(h, "Z3").sigma == expected


@given(quats)
@settings(max_examples=40, deadline=None)
def test_inverse_rotation_has_same_sigma(q):
    h = IsometryHandle.from_quaternion(q)
    hi = IsometryHandle.from_quaternion(q.conj())
    assert sigma_oracle(h, "Z3").sigma == sigma_oracle(hi, "Z3").sigma


@given(quats)
@settings(max_examples=40, deadline=None)
def test_cayley_inverse_round_trip(q):
    assert integral_primitive(cayley_inverse(cayley3(q))) in (q, -q)


def test_quartic_examples():
    h = IsometryHandle.from_pair("(1,1,0,0),(1,0,1,0)")
    assert sigma_oracle(h, "Z4").sigma == 2
    assert sigma_oracle(h, "D4").sigma == 1 and sigma_oracle(h, "D4STAR").sigma == 1
    h = IsometryHandle.from_pair("(1,2,0,0),(2,1,0,0)")
    for name in ("Z4", "D4", "D4STAR"):
        assert sigma_oracle(h, name).sigma == 5 == sigma_closed_form(h, name).sigma


def test_pair_from_rotation():
    q1, q2 = Quat(1, 2, 0, 0), Quat(2, 1, 0, 0)
    a, b = pair_from_rotation(rot4(q1, q2))
    assert rot4(a, b) == rot4(q1, q2)
    h = IsometryHandle.from_matrix(rot4(q1, q2))
    assert sigma_closed_form(h, "D4").sigma == 5


TENFOLD_GENERATORS = [("(2+x)/(2+x^4)", 11), ("(2+x^2)/(2+x^3)", 11),
                      ("(2-x)/(2-x^4)", 31), ("(2-x^2)/(2-x^3)", 31)]


@pytest.mark.parametrize("text,expected", TENFOLD_GENERATORS)
def test_tenfold_generators(text, expected):
    h = IsometryHandle.from_quotient(text)
    assert sigma_oracle(h, "M10").sigma == sigma_closed_form(h, "M10").sigma == expected
    assert sigma_oracle(IsometryHandle.from_quotient(text, reflect=True), "M10").sigma == expected


def test_icosahedral_units_and_example():
    h = IsometryHandle.from_quaternion("(1,1,1,0)")
    for name in ("MB", "MP", "MF"):
        assert sigma_oracle(h, name).sigma == sigma_closed_form(h, name).sigma == 9
    assert sigma_oracle(h, "MC").sigma == sigma_closed_form(h, "MC").sigma


def test_reflection_sigma():
    h = IsometryHandle.from_quaternion("(1,2,0,0)", reflect=True)
    assert reflection_sigma(h, "Z3").sigma == 5 == sigma_oracle(h, "Z3").sigma
    with pytest.raises(DomainError):
        reflection_sigma(IsometryHandle.from_quaternion("(1,2,0,0)"), "Z3")


def test_dual_checks():
    h = IsometryHandle.from_quaternion("(1,1,2,3)")
    assert module_dual_check(h, "FCC") == (15, 15)
    with pytest.raises(UnsupportedError):
        module_dual_check(h, "MB")


def test_csl_contains_rotated_points():
    h = IsometryHandle.from_quaternion("(1,2,1,0)")
    A = action_matrix(h, "Z3")
    csl = csl_of_action(A)
    back = Lattice.from_basis(inverse(A)).transformed(A)
    assert back == Lattice.standard(3)
    rng = random.Random(1)
    for _ in range(20):
        c = [rng.randint(-5, 5) for _ in range(3)]
        v = [sum(csl.basis[i][j] * c[j] for j in range(3)) for i in range(3)]
        w = [sum(inverse(A)[i][j] * v[j] for j in range(3)) for i in range(3)]
        assert all(Fraction(x).denominator == 1 for x in v + w)


def test_h4_oracle():
    h = IsometryHandle.from_pair("(1,0,0,0),(1,0,0,0)")
    assert sigma(h, "H4").sigma == 1
