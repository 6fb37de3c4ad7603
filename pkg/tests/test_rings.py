from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from coincidence.errors import DomainError
from coincidence.rings.cyclotomic import ROOTS_OF_UNITY, CycloInt
from coincidence.rings.factor import factor_element, multiply_out, split_prime, unit_normalize
from coincidence.rings.gaussian import GaussInt, gauss_gcd
from coincidence.rings.golden import GoldenInt, QTau, golden_gcd
from coincidence.rings.text import parse_element, parse_scalar

small = st.integers(-30, 30)
gauss = st.builds(GaussInt, small, small)
golden = st.builds(GoldenInt, small, small)
cyclo = st.builds(CycloInt, st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6))


@given(gauss, gauss)
def test_gauss_norm_is_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()


@given(gauss, gauss.filter(bool))
def test_gauss_division_with_small_remainder(x, y):
    q, r = divmod(x, y)
    assert q * y + r == x
    assert r.norm() < y.norm()


@given(gauss.filter(bool), gauss.filter(bool))
def test_gauss_gcd_divides_both(x, y):
    g = gauss_gcd(x, y)
    assert g.divides(x) and g.divides(y)


@given(golden, golden)
def test_golden_norm_is_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()


@given(golden.filter(bool), golden.filter(bool))
def test_golden_gcd_divides_both(x, y):
    g = golden_gcd(x, y)
    assert g.divides(x) and g.divides(y)


def test_golden_tau_squared():
    t = GoldenInt(0, 1)
    assert t * t == t + 1
    assert t.is_unit()


def test_qtau_inverse():
    x = QTau(Fraction(1, 2), 3)
    assert x * x.inverse() == QTau(1)


@given(cyclo, cyclo)
@settings(max_examples=50)
def test_cyclo_norm_is_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()


def test_cyclo_roots_of_unity():
    assert len(set(ROOTS_OF_UNITY)) == 10
    assert all(z.is_unit() and z.abs2() == GoldenInt(1) for z in ROOTS_OF_UNITY)
    assert CycloInt.xi_power(5) == CycloInt(1)


@pytest.mark.parametrize("p,ring,kind,count", [
    (2, "gauss", "ramified", 1), (3, "gauss", "inert", 1), (5, "gauss", "split", 2),
    (5, "golden", "ramified", 1), (2, "golden", "inert", 1), (11, "golden", "split", 2),
    (11, "cyclo", "split", 4), (19, "cyclo", "split", 2), (7, "cyclo", "inert", 1),
])
def test_split_prime(p, ring, kind, count):
    s = split_prime(p, ring)
    assert s.kind == kind and len(s.factors) == count


@given(gauss.filter(bool))
@settings(max_examples=60)
def test_factor_round_trip_gauss(x):
    unit, fac = factor_element(x)
    assert multiply_out(unit, fac) == x


@given(golden.filter(bool))
@settings(max_examples=60)
def test_factor_round_trip_golden(x):
    unit, fac = factor_element(x)
    assert multiply_out(unit, fac) == x


@given(cyclo.filter(bool))
@settings(max_examples=30, deadline=None)
def test_factor_round_trip_cyclo(x):
    unit, fac = factor_element(x)
    assert multiply_out(unit, fac) == x


@given(gauss.filter(bool))
def test_unit_normalize_is_associate(x):
    c, u = unit_normalize(x)
    assert u.is_unit() and c * u == x


@given(gauss)
def test_text_round_trip_gauss(x):
    assert parse_element(str(x), "gauss") == x


@given(golden)
def test_text_round_trip_golden(x):
    assert parse_element(str(x), "golden") == x


@given(cyclo)
def test_text_round_trip_cyclo(x):
    assert parse_element(str(x), "cyclo") == x


def test_parse_scalar():
    assert parse_scalar(" -3/5 ") == Fraction(-3, 5)
    assert parse_scalar("1/2-1/2t") == QTau(Fraction(1, 2), Fraction(-1, 2))
    with pytest.raises(DomainError):
        parse_scalar("abc")
