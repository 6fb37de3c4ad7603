import math

import pytest
from hypothesis import given, settings, strategies as st
from sympy import divisor_sigma, primerange

from coincidence.counting import (ASYMPTOTICS, COUNTING_FUNCTIONS, F_SIGMA1, F_SQUARE, F_SQUARE_ALL,
                                  F_SQUARE_PRIMITIVE, SeriesTable, counting_function, d4_by_convolution,
                                  d4_by_recursion, dirichlet_convolve, dirichlet_inverse, f_sublattices,
                                  f_sublattices_recursive, hierarchy_counts, identity_table, materialize,
                                  series_quotient, square_by_zeta, sublattice_function, summatory_check)
from coincidence.errors import DomainError
from coincidence.lattice import enumerate_sublattices

from reference_series import ALL_SERIES

ALL = dict(COUNTING_FUNCTIONS, sigma1=F_SIGMA1, square_all=F_SQUARE_ALL, square_primitive=F_SQUARE_PRIMITIVE)


def coefficients(name, N):
    if name == "square_zeta":
        return (0,) + square_by_zeta(N).coeffs
    return tuple(materialize(ALL[name], N))


@pytest.mark.parametrize("label,name,pins,dense", ALL_SERIES, ids=[s[0] for s in ALL_SERIES])
def test_reference_coefficients(label, name, pins, dense):
    N = max(pins)
    c = coefficients(name, N)
    for m in range(1, N + 1):
        assert c[m] == pins.get(m, 0), (label, m)


@pytest.mark.parametrize("name", sorted(ALL))
def test_rule_matches_euler_factor(name):
    f = ALL[name]
    for p in list(primerange(2, 60)):
        series = f.euler_coefficients(p, 7)
        assert series[0] == 1
        assert [f.prime_power(p, r) for r in range(1, 8)] == series[1:], (name, p)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_sublattice_rule_matches_euler_factor(n):
    f = sublattice_function(n)
    for p in (2, 3, 5, 7):
        assert [f.prime_power(p, r) for r in range(1, 6)] == f.euler_coefficients(p, 5)[1:]


@given(st.integers(1, 200), st.integers(1, 200))
@settings(max_examples=200)
def test_multiplicativity(a, b):
    if math.gcd(a, b) != 1:
        return
    for f in ALL.values():
        assert f(a * b) == f(a) * f(b)


def test_sigma1_is_divisor_sum():
    assert all(F_SIGMA1(m) == divisor_sigma(m) for m in range(1, 300))


def test_square_zeta_route():
    assert square_by_zeta(2000).coeffs == F_SQUARE.table(2000).coeffs


def test_d4_routes():
    t = d4_by_convolution(3000)
    f = counting_function("D4")
    assert t.coeffs == f.table(3000).coeffs
    assert all(d4_by_recursion(m) == f(m) for m in range(1, 500))


def test_tenfold_prime_power_pin():
    assert counting_function("tenfold")(121) == 8


def test_structure_lookup():
    assert counting_function("FCC") is counting_function("cubic3")
    assert counting_function("ICOSIAN_H4") is counting_function("H4")
    with pytest.raises(DomainError):
        counting_function("nope")


@pytest.mark.parametrize("n,m", [(1, 12), (2, 12), (3, 8), (4, 6)])
def test_sublattice_routes(n, m):
    assert f_sublattices(n, m) == f_sublattices_recursive(n, m) == sum(1 for _ in enumerate_sublattices(n, m))


def test_dirichlet_algebra():
    t = F_SQUARE_ALL.table(500)
    inv = dirichlet_inverse(t)
    assert dirichlet_convolve(t, inv).coeffs == identity_table(500).coeffs
    assert t.shifted()[7] == 7 * t[7]
    with pytest.raises(DomainError):
        dirichlet_inverse(SeriesTable("z", 3, (0, 1, 1)))


def test_series_quotient():
    # 1/(1-X)^2 = sum (r+1) X^r
    assert series_quotient([1], [1, -2, 1], 5) == [1, 2, 3, 4, 5, 6]


@pytest.mark.parametrize("m,expected", [(25, (31, 3, 2, 2)), (2, (3, 1, 1, 0)), (1, (1, 1, 1, 1)), (65, (84, 4, 4, 4))])
def test_hierarchy(m, expected):
    h = hierarchy_counts(m)
    assert (h.all, h.square, h.primitive_square, h.csl) == expected


def test_hierarchy_matches_series():
    for m in range(1, 300):
        h = hierarchy_counts(m)
        assert h.square == F_SQUARE_ALL(m) and h.primitive_square == F_SQUARE_PRIMITIVE(m)


def test_summatory_check():
    c, k = ASYMPTOTICS["cubic3"]
    assert summatory_check(COUNTING_FUNCTIONS["cubic3"], k, c, 10 ** 4) < 0.05
    with pytest.raises(DomainError):
        summatory_check(F_SQUARE.table(10), 1, 1.0, 20)


def test_domain_errors():
    with pytest.raises(DomainError):
        F_SQUARE(0)
    with pytest.raises(DomainError):
        f_sublattices(0, 3)
