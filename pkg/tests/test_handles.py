from fractions import Fraction

import pytest

from coincidence.engine.handles import Irrational, IsometryHandle, parse_isometry_matrix, parse_quotient
from coincidence.errors import DomainError
from coincidence.rings.gaussian import GaussInt
from coincidence.rings.golden import QTau


def test_matrix_entries():
    M = parse_isometry_matrix("4/5,-3/5;3/5,4/5")
    assert M[0][1] == Fraction(-3, 5)
    G = parse_isometry_matrix("1/2,0;0,1/2+1/2t")
    assert G[1][1] == QTau(Fraction(1, 2), Fraction(1, 2))
    S = parse_isometry_matrix("sqrt(5),0;0,1")
    assert S[0][0] == QTau(-1, 2)
    X = parse_isometry_matrix("sqrt(2)/2,0;0,1")
    assert isinstance(X[0][0], Irrational)


@pytest.mark.parametrize("text", ["1,2;3", "1,2,3,4,5;1,1,1,1,1;1,1,1,1,1;1,1,1,1,1;1,1,1,1,1", "a,b;c,d", ""])
def test_matrix_parse_errors(text):
    with pytest.raises(DomainError):
        parse_isometry_matrix(text)


def test_quotient_parse():
    a, b = parse_quotient("(3+4i)/(5)", "gauss")
    assert a == GaussInt(3, 4) and b == GaussInt(5, 0)
    a2, b2 = parse_quotient("3+4i:5", "gauss")
    assert (a2, b2) == (a, b)
    with pytest.raises(DomainError):
        parse_quotient("(1)/(0)", "gauss")


def test_gauss_quotient_matrix():
    h = IsometryHandle.from_quotient("(3+4i)/(5)", ring="gauss")
    assert h.matrix() == [[Fraction(3, 5), Fraction(-4, 5)], [Fraction(4, 5), Fraction(3, 5)]]
    assert h.is_orthogonal() and h.determinant_sign() == 1


def test_reflect_and_rotation_part():
    h = IsometryHandle.from_quaternion("(0,1,1,1)", reflect=True)
    assert h.determinant_sign() == -1
    assert h.rotation_part().determinant_sign() == 1
    m = IsometryHandle.from_matrix("1,0;0,-1")
    assert m.determinant_sign() == -1
    assert m.rotation_part().matrix() == [[1, 0], [0, 1]]


def test_pair_text():
    h = IsometryHandle.from_pair("(1,2,0,0),(2,1,0,0)")
    assert h.dim == 4 and h.is_orthogonal()
    with pytest.raises(DomainError):
        IsometryHandle.from_pair("(1,2,0,0)")


def test_non_orthogonal_detected():
    assert not IsometryHandle.from_matrix("1,1;0,1").is_orthogonal()


def test_rings():
    assert IsometryHandle.from_matrix("1,0;0,1").ring == "rational"
    assert IsometryHandle.from_matrix("sqrt(2)/2,0;0,1").ring == "irrational"
    assert IsometryHandle.from_quotient("(1+x)/(1+x^4)").ring == "cyclo"
