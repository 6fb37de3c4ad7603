from fractions import Fraction
import math

import pytest
from hypothesis import given, strategies as st

from coincidence.errors import DomainError
from coincidence.linalg import det, is_orthogonal, mat_mul
from coincidence.quaternions import (Quat, cayley3, hurwitz_units, integer_quaternions, is_admissible_pair,
                                     make_primitive, mat4, odd_part, parse_quat, rot4)

comp = st.integers(-7, 7)
quats = st.builds(Quat, comp, comp, comp, comp).filter(bool)


@given(quats, quats)
def test_norm_is_multiplicative(p, q):
    assert (p * q).norm2() == p.norm2() * q.norm2()


@given(quats)
def test_cayley_is_rotation(q):
    R = cayley3(q)
    assert is_orthogonal(R) and det(R) == 1


@given(quats, quats)
def test_cayley_is_homomorphism(p, q):
    assert cayley3(p * q) == mat_mul(cayley3(p), cayley3(q))


@given(quats, quats)
def test_mat4_acts_by_left_right_multiplication(q1, q2):
    x = Quat(1, 2, -3, 5)
    y = q1 * x * q2.conj()
    M = mat4(q1, q2)
    assert [sum(M[i][j] * x.comps[j] for j in range(4)) for i in range(4)] == list(y.comps)


def test_rot4_needs_admissible_pair():
    R = rot4(Quat(1, 2, 0, 0), Quat(2, 1, 0, 0))
    assert is_orthogonal(R) and det(R) == 1
    with pytest.raises(DomainError):
        rot4(Quat(1, 1, 0, 0), Quat(1, 0, 0, 0))
    assert is_admissible_pair(Quat(1, 1, 0, 0), Quat(1, 0, 1, 0))


def test_make_primitive():
    p, c = make_primitive(Quat(-2, 4, 0, 6))
    assert p == Quat(1, -2, 0, -3) and c == -2


def test_odd_part():
    assert [odd_part(n) for n in (1, 2, 12, 40, 7)] == [1, 1, 3, 5, 7]


def test_integer_quaternions_representation_count():
    # primitive q up to sign with |q|^2 = 3: 8 sign choices of (0,1,1,1) times 4 positions / 2
    qs = [q for q in integer_quaternions(3) if q.norm2() == 3]
    assert len(qs) == 16
    assert all(math.gcd(*q.comps) == 1 for q in integer_quaternions(12))


def test_hurwitz_units():
    us = hurwitz_units()
    assert len(us) == 24 and all(u.norm2() == 1 for u in us)


def test_parse_quat():
    assert parse_quat("(0,1,1,1)") == Quat(0, 1, 1, 1)
    assert parse_quat("(1/2, 1/2, 1/2, 1/2)").comps[0] == Fraction(1, 2)
    with pytest.raises(DomainError):
        parse_quat("1,2,3,4")


def test_two_adic_exponent_of_primitive_norms():
    # a primitive sum of four squares is never divisible by 8
    from coincidence.quaternions import two_adic
    assert {two_adic(q.norm2()) for q in integer_quaternions(200)} == {0, 1, 2}


def test_representation_counts_match_direct_scan():
    from collections import Counter
    import itertools
    counts = Counter(q.norm2() for q in integer_quaternions(200, primitive_only=False))
    r = range(-14, 15)
    direct = Counter(k * k + l * l + m * m + n * n for k, l, m, n in itertools.product(r, r, r, r))
    # one representative per sign pair
    assert all(2 * counts[m] == direct[m] for m in range(1, 201))


@given(quats, quats)
def test_mat4_determinant(q1, q2):
    from sympy import Matrix
    assert Matrix(mat4(q1, q2)).det() == q1.norm2() ** 2 * q2.norm2() ** 2


def test_enumerate_quaternions_unit_shell():
    from coincidence.quaternions import enumerate_quaternions
    assert len(list(enumerate_quaternions("integer", 1))) == 4
